#include "sharpgan/sharpness.hpp"

#include <algorithm>
#include <cmath>

namespace sharpgan {

namespace {

void check_dims(int cw, int ch, int gw, int gh) {
    if (cw != gw || ch != gh)
        throw DimensionMismatch("contour map and image dimensions differ");
    if (cw < 1 || ch < 1) throw DimensionMismatch("empty image");
}

constexpr int kNeighborRow[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
constexpr int kNeighborCol[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr double kInvDist[8] = {0.5, 1.0, 0.5, 1.0, 1.0, 0.5, 1.0, 0.5};

}  // namespace

SharpnessResult sharpness(const ContourMap& c, const GrayImage& g,
                          const SharpnessConfig& cfg) {
    check_dims(c.width, c.height, g.width, g.height);
    const double inv_two_lambda2 = 1.0 / (2.0 * cfg.lambda * cfg.lambda);

    SharpnessResult result;
    result.per_pixel = GrayImage(g.width, g.height);
    double sum = 0.0;
    for (int row = 0; row < g.height; ++row) {
        for (int col = 0; col < g.width; ++col) {
            if (!c.at(row, col)) continue;
            double s = 0.0;
            for (int k = 0; k < 8; ++k) {
                const int r = row + kNeighborRow[k];
                const int cc = col + kNeighborCol[k];
                if (r < 0 || r >= g.height || cc < 0 || cc >= g.width) continue;
                const double d = g.at(row, col) - g.at(r, cc);
                s += std::exp(-d * d * inv_two_lambda2) * kInvDist[k];
            }
            result.per_pixel.at(row, col) = s;
            sum += s;
        }
    }
    result.loss = sum / static_cast<double>(g.pixel_count());
    return result;
}

GrayImage sharpness_grad(const ContourMap& c, const GrayImage& g,
                         const SharpnessConfig& cfg) {
    check_dims(c.width, c.height, g.width, g.height);
    const double lambda2 = cfg.lambda * cfg.lambda;
    const double inv_mn = 1.0 / static_cast<double>(g.pixel_count());

    GrayImage grad(g.width, g.height);
    for (int row = 0; row < g.height; ++row) {
        for (int col = 0; col < g.width; ++col) {
            if (!c.at(row, col)) continue;
            for (int k = 0; k < 8; ++k) {
                const int r = row + kNeighborRow[k];
                const int cc = col + kNeighborCol[k];
                if (r < 0 || r >= g.height || cc < 0 || cc >= g.width) continue;
                const double d = g.at(row, col) - g.at(r, cc);
                const double term = -(d / lambda2) *
                                    std::exp(-d * d / (2.0 * lambda2)) *
                                    kInvDist[k] * inv_mn;
                grad.at(row, col) += term;
                grad.at(r, cc) -= term;
            }
        }
    }
    return grad;
}

RgbSharpnessResult sharpness_rgb(const ContourMap& c, const RgbImage& img,
                                 const SharpnessConfig& cfg) {
    check_dims(c.width, c.height, img.width, img.height);
    const GrayImage g = rgb_to_gray(img);
    SharpnessResult gray = sharpness(c, g, cfg);
    const GrayImage gray_grad = sharpness_grad(c, g, cfg);

    RgbSharpnessResult result;
    result.loss = gray.loss;
    result.per_pixel = std::move(gray.per_pixel);
    result.gradient = RgbImage(img.width, img.height);
    const size_t n = img.pixel_count();
    for (size_t i = 0; i < n; ++i) {
        result.gradient.data[3 * i] = kLumaR * gray_grad.data[i];
        result.gradient.data[3 * i + 1] = kLumaG * gray_grad.data[i];
        result.gradient.data[3 * i + 2] = kLumaB * gray_grad.data[i];
    }
    return result;
}

double total_loss(const std::vector<double>& d_real,
                  const std::vector<double>& d_fake,
                  const std::vector<double>& l_sharp, const LossWeights& w) {
    if (d_real.empty() || d_fake.empty()) throw EmptyBatch("empty score batch");
    if (d_fake.size() != l_sharp.size())
        throw EmptyBatch("d_fake and l_sharp must have equal length");

    const double eps = w.score_epsilon;
    auto clamp = [eps](double v) { return std::clamp(v, eps, 1.0 - eps); };

    double real_sum = 0.0;
    for (double v : d_real) real_sum += std::log(clamp(v));

    double fake_sum = 0.0;
    for (size_t i = 0; i < d_fake.size(); ++i)
        fake_sum += std::log(clamp(1.0 - d_fake[i])) + w.beta * l_sharp[i];

    return real_sum / d_real.size() + fake_sum / d_fake.size();
}

}  // namespace sharpgan
