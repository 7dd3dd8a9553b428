#!/usr/bin/env python3
"""Straight-from-definition FSIM evaluation used to freeze expected values.

Independent of the C++ implementation: numpy FFTs, explicit filter-bank
construction. Fixtures are 64x64 images drawn from splitmix64 so both
implementations can regenerate them bit-identically.
"""

import numpy as np

MASK64 = (1 << 64) - 1


def splitmix64_stream(seed, count):
    state = seed & MASK64
    out = []
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        z = z ^ (z >> 31)
        out.append((z >> 11) * 2.0 ** -53)
    return np.array(out)


def fixture(seed, size=64):
    return splitmix64_stream(seed, size * size).reshape(size, size)


def box_blur3(img):
    """3x3 box blur, zero padded, always divided by 9."""
    out = np.zeros_like(img)
    h, w = img.shape
    for dr in (-1, 0, 1):
        for dc in (-1, 0, 1):
            sr = slice(max(0, dr), min(h, h + dr))
            tr = slice(max(0, -dr), min(h, h - dr))
            sc = slice(max(0, dc), min(w, w + dc))
            tc = slice(max(0, -dc), min(w, w - dc))
            out[tr, tc] += img[sr, sc]
    return out / 9.0


def freq_grid(h, w):
    fy = np.where(np.arange(h) < (h + 1) // 2, np.arange(h), np.arange(h) - h) / h
    fx = np.where(np.arange(w) < (w + 1) // 2, np.arange(w), np.arange(w) - w) / w
    fx, fy = np.meshgrid(fx, fy)
    radius = np.sqrt(fx**2 + fy**2)
    radius[0, 0] = 1.0
    theta = np.arctan2(-fy, fx)
    return radius, theta


def phase_congruency(img, scales=4, orients=4, min_wavelength=6.0, mult=2.0,
                     sigma_on_f=0.55, d_theta_on_sigma=1.2, eps=1e-4):
    h, w = img.shape
    freq = np.fft.fft2(img)
    radius, theta = freq_grid(h, w)
    lowpass = 1.0 / (1.0 + (radius / 0.45) ** 30)

    log_gabor = []
    for s in range(scales):
        f0 = 1.0 / (min_wavelength * mult**s)
        lg = np.exp(-np.log(radius / f0) ** 2 / (2.0 * np.log(sigma_on_f) ** 2))
        lg = lg * lowpass
        lg[0, 0] = 0.0
        log_gabor.append(lg)

    theta_sigma = np.pi / orients / d_theta_on_sigma
    energy_total = np.zeros((h, w))
    an_total = np.zeros((h, w))
    for o in range(orients):
        angle = o * np.pi / orients
        d = np.abs(np.arctan2(np.sin(theta - angle), np.cos(theta - angle)))
        spread = np.exp(-(d**2) / (2.0 * theta_sigma**2))

        eos = [np.fft.ifft2(freq * (log_gabor[s] * spread)) for s in range(scales)]
        sum_e = sum(eo.real for eo in eos)
        sum_o = sum(eo.imag for eo in eos)
        sum_an = sum(np.abs(eo) for eo in eos)
        x_energy = np.sqrt(sum_e**2 + sum_o**2) + eps
        mean_e = sum_e / x_energy
        mean_o = sum_o / x_energy
        for eo in eos:
            energy_total += (eo.real * mean_e + eo.imag * mean_o
                             - np.abs(eo.real * mean_o - eo.imag * mean_e))
        an_total += sum_an
    return np.maximum(0.0, energy_total) / (eps + an_total)


def scharr_gradient(img):
    kx = np.array([[3, 0, -3], [10, 0, -10], [3, 0, -3]]) / 16.0
    ky = np.array([[3, 10, 3], [0, 0, 0], [-3, -10, -3]]) / 16.0
    h, w = img.shape

    def corr(k):
        out = np.zeros_like(img)
        for r in range(h):
            for c in range(w):
                acc = 0.0
                for dr in (-1, 0, 1):
                    for dc in (-1, 0, 1):
                        rr, cc = r + dr, c + dc
                        if 0 <= rr < h and 0 <= cc < w:
                            acc += k[dr + 1, dc + 1] * img[rr, cc]
                out[r, c] = acc
        return out

    return np.sqrt(corr(kx) ** 2 + corr(ky) ** 2)


def fsim(a, b, t1=0.85, t2=160.0):
    a = a * 255.0
    b = b * 255.0
    pc_a = phase_congruency(a)
    pc_b = phase_congruency(b)
    g_a = scharr_gradient(a)
    g_b = scharr_gradient(b)
    s_pc = (2 * pc_a * pc_b + t1) / (pc_a**2 + pc_b**2 + t1)
    s_g = (2 * g_a * g_b + t2) / (g_a**2 + g_b**2 + t2)
    pc_m = np.maximum(pc_a, pc_b)
    return float(np.sum(s_pc * s_g * pc_m) / np.sum(pc_m))


if __name__ == "__main__":
    a = fixture(1)
    b = fixture(2)
    print(f"fsim(random1, random2)  = {fsim(a, b):.15f}")
    print(f"fsim(blur(r1), blur(r2)) = {fsim(box_blur3(a), box_blur3(b)):.15f}")
    print(f"fsim(random1, random1)  = {fsim(a, a):.15f}")
