#include "sharpgan/iqa.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <fftw3.h>

namespace sharpgan {

namespace {

void check_dims(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw DimensionMismatch("image dimensions differ");
}

std::vector<double> gaussian_window(int size, double sigma) {
    std::vector<double> w(static_cast<size_t>(size) * size);
    const int half = size / 2;
    double sum = 0.0;
    for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) {
            const double dr = r - half;
            const double dc = c - half;
            w[static_cast<size_t>(r) * size + c] =
                std::exp(-(dr * dr + dc * dc) / (2.0 * sigma * sigma));
            sum += w[static_cast<size_t>(r) * size + c];
        }
    }
    for (double& v : w) v /= sum;
    return w;
}

// 3x3 correlation with zero padding ("same").
GrayImage filter3_same(const GrayImage& img, const double k[3][3]) {
    GrayImage out(img.width, img.height);
    for (int row = 0; row < img.height; ++row) {
        for (int col = 0; col < img.width; ++col) {
            double acc = 0.0;
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    const int r = row + dr;
                    const int c = col + dc;
                    if (r < 0 || r >= img.height || c < 0 || c >= img.width) continue;
                    acc += k[dr + 1][dc + 1] * img.at(r, c);
                }
            }
            out.at(row, col) = acc;
        }
    }
    return out;
}

// Non-overlapping block average over factor x factor blocks (floor dims).
GrayImage average_pool(const GrayImage& img, int factor) {
    const int h = img.height / factor;
    const int w = img.width / factor;
    GrayImage out(w, h);
    for (int row = 0; row < h; ++row) {
        for (int col = 0; col < w; ++col) {
            double acc = 0.0;
            for (int dr = 0; dr < factor; ++dr)
                for (int dc = 0; dc < factor; ++dc)
                    acc += img.at(row * factor + dr, col * factor + dc);
            out.at(row, col) = acc / (factor * factor);
        }
    }
    return out;
}

using Field = std::vector<double>;

struct PhaseCongruency {
    Field pc;      // phase congruency map
    Field grad;    // Scharr gradient magnitude of the (downsampled) image
    int width;
    int height;
};

// Phase congruency via a log-Gabor filter bank, no noise compensation.
PhaseCongruency phase_congruency(const GrayImage& img, const FsimConfig& cfg) {
    const int h = img.height;
    const int w = img.width;
    const size_t n = static_cast<size_t>(h) * w;

    std::vector<std::complex<double>> freq(n);
    {
        std::vector<std::complex<double>> in(n);
        for (size_t i = 0; i < n; ++i) in[i] = img.data[i];
        fftw_plan plan = fftw_plan_dft_2d(
            h, w, reinterpret_cast<fftw_complex*>(in.data()),
            reinterpret_cast<fftw_complex*>(freq.data()), FFTW_FORWARD, FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }

    // Normalized frequency grid and angles.
    Field radius(n), theta(n);
    for (int r = 0; r < h; ++r) {
        const double fy = (r < (h + 1) / 2) ? static_cast<double>(r) / h
                                            : static_cast<double>(r - h) / h;
        for (int c = 0; c < w; ++c) {
            const double fx = (c < (w + 1) / 2) ? static_cast<double>(c) / w
                                                : static_cast<double>(c - w) / w;
            const size_t i = static_cast<size_t>(r) * w + c;
            radius[i] = std::sqrt(fx * fx + fy * fy);
            theta[i] = std::atan2(-fy, fx);
        }
    }
    radius[0] = 1.0;  // avoid log(0) at DC; the DC response is zeroed below

    // Radial components per scale, with a sharp lowpass to kill wraparound.
    const double log_sigma = std::log(cfg.sigma_on_f);
    std::vector<Field> log_gabor(cfg.scales, Field(n));
    for (int s = 0; s < cfg.scales; ++s) {
        const double wavelength = cfg.min_wavelength * std::pow(cfg.wavelength_mult, s);
        const double f0 = 1.0 / wavelength;
        for (size_t i = 0; i < n; ++i) {
            const double lp = 1.0 / (1.0 + std::pow(radius[i] / 0.45, 30.0));
            const double lr = std::log(radius[i] / f0);
            log_gabor[s][i] =
                std::exp(-(lr * lr) / (2.0 * log_sigma * log_sigma)) * lp;
        }
        log_gabor[s][0] = 0.0;
    }

    const double theta_sigma =
        std::numbers::pi / cfg.orientations / cfg.d_theta_on_sigma;

    Field energy_total(n, 0.0), an_total(n, 0.0);
    std::vector<std::complex<double>> filtered(n), eo(n);
    fftw_plan inv_plan = fftw_plan_dft_2d(
        h, w, reinterpret_cast<fftw_complex*>(filtered.data()),
        reinterpret_cast<fftw_complex*>(eo.data()), FFTW_BACKWARD, FFTW_ESTIMATE);

    for (int o = 0; o < cfg.orientations; ++o) {
        const double angle = o * std::numbers::pi / cfg.orientations;
        Field spread(n);
        for (size_t i = 0; i < n; ++i) {
            const double d =
                std::abs(std::atan2(std::sin(theta[i] - angle), std::cos(theta[i] - angle)));
            spread[i] = std::exp(-(d * d) / (2.0 * theta_sigma * theta_sigma));
        }

        Field sum_e(n, 0.0), sum_o(n, 0.0), sum_an(n, 0.0);
        for (int s = 0; s < cfg.scales; ++s) {
            for (size_t i = 0; i < n; ++i)
                filtered[i] = freq[i] * (log_gabor[s][i] * spread[i]);
            fftw_execute(inv_plan);
            const double inv_n = 1.0 / static_cast<double>(n);
            for (size_t i = 0; i < n; ++i) {
                const std::complex<double> v = eo[i] * inv_n;
                sum_e[i] += v.real();
                sum_o[i] += v.imag();
                sum_an[i] += std::abs(v);
            }
        }
        // Mean phase direction per pixel; the energy term needs the per-scale
        // responses again, so the scale loop runs twice per orientation.
        Field mean_e(n), mean_o(n);
        for (size_t i = 0; i < n; ++i) {
            an_total[i] += sum_an[i];
            const double x_energy =
                std::sqrt(sum_e[i] * sum_e[i] + sum_o[i] * sum_o[i]) + cfg.epsilon;
            mean_e[i] = sum_e[i] / x_energy;
            mean_o[i] = sum_o[i] / x_energy;
        }
        for (int s = 0; s < cfg.scales; ++s) {
            for (size_t i = 0; i < n; ++i)
                filtered[i] = freq[i] * (log_gabor[s][i] * spread[i]);
            fftw_execute(inv_plan);
            const double inv_n = 1.0 / static_cast<double>(n);
            for (size_t i = 0; i < n; ++i) {
                const double e = eo[i].real() * inv_n;
                const double od = eo[i].imag() * inv_n;
                energy_total[i] += e * mean_e[i] + od * mean_o[i] -
                                   std::abs(e * mean_o[i] - od * mean_e[i]);
            }
        }
    }
    fftw_destroy_plan(inv_plan);

    PhaseCongruency result;
    result.width = w;
    result.height = h;
    result.pc.resize(n);
    for (size_t i = 0; i < n; ++i)
        result.pc[i] = std::max(0.0, energy_total[i]) / (cfg.epsilon + an_total[i]);

    // Scharr gradient magnitude.
    static const double kScharrX[3][3] = {{3.0 / 16, 0, -3.0 / 16},
                                          {10.0 / 16, 0, -10.0 / 16},
                                          {3.0 / 16, 0, -3.0 / 16}};
    static const double kScharrY[3][3] = {{3.0 / 16, 10.0 / 16, 3.0 / 16},
                                          {0, 0, 0},
                                          {-3.0 / 16, -10.0 / 16, -3.0 / 16}};
    const GrayImage gx = filter3_same(img, kScharrX);
    const GrayImage gy = filter3_same(img, kScharrY);
    result.grad.resize(n);
    for (size_t i = 0; i < n; ++i)
        result.grad[i] = std::hypot(gx.data[i], gy.data[i]);
    return result;
}

}  // namespace

double ssim(const GrayImage& a, const GrayImage& b, const SsimConfig& cfg) {
    check_dims(a, b);
    if (a.width < cfg.window_size || a.height < cfg.window_size)
        throw TooSmall("image smaller than SSIM window");

    const std::vector<double> win = gaussian_window(cfg.window_size, cfg.sigma);
    const double c1 = cfg.k1 * cfg.dynamic_range * cfg.k1 * cfg.dynamic_range;
    const double c2 = cfg.k2 * cfg.dynamic_range * cfg.k2 * cfg.dynamic_range;
    const int size = cfg.window_size;

    double total = 0.0;
    size_t windows = 0;
    for (int row = 0; row + size <= a.height; ++row) {
        for (int col = 0; col + size <= a.width; ++col) {
            double mu_a = 0.0, mu_b = 0.0;
            for (int r = 0; r < size; ++r) {
                for (int c = 0; c < size; ++c) {
                    const double wv = win[static_cast<size_t>(r) * size + c];
                    mu_a += wv * a.at(row + r, col + c);
                    mu_b += wv * b.at(row + r, col + c);
                }
            }
            double var_a = 0.0, var_b = 0.0, cov = 0.0;
            for (int r = 0; r < size; ++r) {
                for (int c = 0; c < size; ++c) {
                    const double wv = win[static_cast<size_t>(r) * size + c];
                    const double da = a.at(row + r, col + c) - mu_a;
                    const double db = b.at(row + r, col + c) - mu_b;
                    var_a += wv * da * da;
                    var_b += wv * db * db;
                    cov += wv * da * db;
                }
            }
            total += ((2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2)) /
                     ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
            ++windows;
        }
    }
    return total / static_cast<double>(windows);
}

double fsim(const GrayImage& a, const GrayImage& b, const FsimConfig& cfg) {
    check_dims(a, b);
    if (a.width < 16 || a.height < 16)
        throw TooSmall("image too small for the FSIM filter bank");

    // Canonical constants expect a [0,255] dynamic range.
    auto scale255 = [](const GrayImage& img) {
        GrayImage out = img;
        for (double& v : out.data) v *= 255.0;
        return out;
    };
    GrayImage sa = scale255(a);
    GrayImage sb = scale255(b);

    const int factor = std::max(1, static_cast<int>(std::lround(
                                       std::min(a.width, a.height) / 256.0)));
    if (factor > 1) {
        sa = average_pool(sa, factor);
        sb = average_pool(sb, factor);
    }

    const PhaseCongruency pa = phase_congruency(sa, cfg);
    const PhaseCongruency pb = phase_congruency(sb, cfg);

    double num = 0.0, den = 0.0;
    const size_t n = pa.pc.size();
    for (size_t i = 0; i < n; ++i) {
        const double s_pc = (2.0 * pa.pc[i] * pb.pc[i] + cfg.t1) /
                            (pa.pc[i] * pa.pc[i] + pb.pc[i] * pb.pc[i] + cfg.t1);
        const double s_g = (2.0 * pa.grad[i] * pb.grad[i] + cfg.t2) /
                           (pa.grad[i] * pa.grad[i] + pb.grad[i] * pb.grad[i] + cfg.t2);
        const double pc_m = std::max(pa.pc[i], pb.pc[i]);
        num += s_pc * s_g * pc_m;
        den += pc_m;
    }
    if (den == 0.0) throw DegenerateReference("phase congruency vanishes everywhere");
    return num / den;
}

double gmsd(const GrayImage& a, const GrayImage& b, const GmsdConfig& cfg) {
    check_dims(a, b);
    if (a.width < 4 || a.height < 4) throw TooSmall("image too small for GMSD");

    const GrayImage da = average_pool(a, 2);
    const GrayImage db = average_pool(b, 2);

    static const double kPrewittX[3][3] = {{1.0 / 3, 0, -1.0 / 3},
                                           {1.0 / 3, 0, -1.0 / 3},
                                           {1.0 / 3, 0, -1.0 / 3}};
    static const double kPrewittY[3][3] = {{1.0 / 3, 1.0 / 3, 1.0 / 3},
                                           {0, 0, 0},
                                           {-1.0 / 3, -1.0 / 3, -1.0 / 3}};
    const GrayImage ax = filter3_same(da, kPrewittX);
    const GrayImage ay = filter3_same(da, kPrewittY);
    const GrayImage bx = filter3_same(db, kPrewittX);
    const GrayImage by = filter3_same(db, kPrewittY);

    const size_t n = da.pixel_count();
    std::vector<double> gms(n);
    double mean = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double ma = std::hypot(ax.data[i], ay.data[i]);
        const double mb = std::hypot(bx.data[i], by.data[i]);
        gms[i] = (2.0 * ma * mb + cfg.c) / (ma * ma + mb * mb + cfg.c);
        mean += gms[i];
    }
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : gms) var += (v - mean) * (v - mean);
    return std::sqrt(var / static_cast<double>(n));
}

double nrmse(const GrayImage& ref, const GrayImage& test) {
    check_dims(ref, test);
    const auto [min_it, max_it] = std::minmax_element(ref.data.begin(), ref.data.end());
    const double range = *max_it - *min_it;
    if (range == 0.0)
        throw DegenerateReference("reference image has zero intensity range");

    double sq_sum = 0.0;
    for (size_t i = 0; i < ref.data.size(); ++i) {
        const double d = ref.data[i] - test.data[i];
        sq_sum += d * d;
    }
    return std::sqrt(sq_sum / static_cast<double>(ref.data.size())) / range;
}

}  // namespace sharpgan
