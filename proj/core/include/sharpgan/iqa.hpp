#pragma once

#include "sharpgan/image.hpp"

namespace sharpgan {

struct SsimConfig {
    int window_size = 11;
    double sigma = 1.5;
    double k1 = 0.01;
    double k2 = 0.03;
    double dynamic_range = 1.0;
};

struct FsimConfig {
    int scales = 4;
    int orientations = 4;
    double min_wavelength = 6.0;
    double wavelength_mult = 2.0;
    double sigma_on_f = 0.55;        // log-Gabor radial bandwidth
    double d_theta_on_sigma = 1.2;   // angular spread divisor
    double t1 = 0.85;                // phase-congruency similarity constant
    double t2 = 160.0;               // gradient similarity constant ([0,255] scale)
    double epsilon = 1e-4;
};

struct GmsdConfig {
    double c = 170.0 / (255.0 * 255.0);  // canonical T rescaled to unit range
};

/// Mean windowed SSIM over interior ("valid") windows, Gaussian-weighted
/// local moments.
double ssim(const GrayImage& a, const GrayImage& b, const SsimConfig& cfg = {});

/// Feature similarity index: phase-congruency and gradient-magnitude
/// similarity pooled by max phase congruency. Log-Gabor bank evaluated in
/// the frequency domain.
double fsim(const GrayImage& a, const GrayImage& b, const FsimConfig& cfg = {});

/// Standard deviation of the gradient-magnitude similarity map (Prewitt
/// gradients after 2x average-pool downsampling).
double gmsd(const GrayImage& a, const GrayImage& b, const GmsdConfig& cfg = {});

/// RMSE divided by the reference's intensity range.
double nrmse(const GrayImage& ref, const GrayImage& test);

}  // namespace sharpgan
