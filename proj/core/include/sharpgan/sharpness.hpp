#pragma once

#include <vector>

#include "sharpgan/image.hpp"
#include "sharpgan/maps.hpp"

namespace sharpgan {

struct SharpnessConfig {
    double lambda = 0.3;  // contrast threshold; larger favors higher contrast
};

struct SharpnessResult {
    double loss = 0.0;
    GrayImage per_pixel;  // S(i,j) on contour pixels, 0 elsewhere
};

struct RgbSharpnessResult {
    double loss = 0.0;
    GrayImage per_pixel;
    RgbImage gradient;  // d loss / d channel intensity
};

struct LossWeights {
    double beta = 1.0;
    double score_epsilon = 1e-7;  // log clamp
};

/// Discrete sharpness summed over contour pixels: for each contour pixel,
/// S = sum over in-bounds 8-neighbors of exp(-(g_ij-g_pq)^2/(2 lambda^2)) / dist
/// with dist the Manhattan distance (1 axial, 2 diagonal). Loss is the sum
/// divided by the pixel count.
SharpnessResult sharpness(const ContourMap& c, const GrayImage& g,
                          const SharpnessConfig& cfg);

/// Analytic gradient of the sharpness loss with respect to every pixel of g.
GrayImage sharpness_grad(const ContourMap& c, const GrayImage& g,
                         const SharpnessConfig& cfg);

/// Sharpness of the luma of an RGB image; channel gradients chain through
/// the BT.601 weights.
RgbSharpnessResult sharpness_rgb(const ContourMap& c, const RgbImage& img,
                                 const SharpnessConfig& cfg);

/// Batch GAN objective: mean log D(x,y) + mean [log(1 - D(x,G(x))) + beta * L_sharp],
/// with discriminator scores clamped to [eps, 1-eps] before the log.
double total_loss(const std::vector<double>& d_real,
                  const std::vector<double>& d_fake,
                  const std::vector<double>& l_sharp, const LossWeights& w);

}  // namespace sharpgan
