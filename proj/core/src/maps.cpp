#include "sharpgan/maps.hpp"

#include <cmath>

namespace sharpgan {

DistanceMap distance_map(const InstanceMap& m, DistanceMode mode, bool normalize) {
    if (mode == DistanceMode::kCentroidInverted && !normalize)
        throw ModeError("centroid_inverted mode requires normalize=true");

    const uint32_t k = m.max_label();
    std::vector<double> sum_row(k + 1, 0.0), sum_col(k + 1, 0.0);
    std::vector<size_t> count(k + 1, 0);
    for (int row = 0; row < m.height; ++row) {
        for (int col = 0; col < m.width; ++col) {
            const uint32_t label = m.at(row, col);
            if (label == 0) continue;
            sum_row[label] += row;
            sum_col[label] += col;
            ++count[label];
        }
    }

    DistanceMap out(m.width, m.height);
    out.normalized = normalize;
    for (int row = 0; row < m.height; ++row) {
        for (int col = 0; col < m.width; ++col) {
            const uint32_t label = m.at(row, col);
            if (label == 0) continue;
            const double cr = sum_row[label] / count[label];
            const double cc = sum_col[label] / count[label];
            out.at(row, col) = std::hypot(row - cr, col - cc);
        }
    }

    if (normalize) {
        std::vector<double> max_dist(k + 1, 0.0);
        for (int row = 0; row < m.height; ++row)
            for (int col = 0; col < m.width; ++col) {
                const uint32_t label = m.at(row, col);
                if (label != 0)
                    max_dist[label] = std::max(max_dist[label], out.at(row, col));
            }
        for (int row = 0; row < m.height; ++row) {
            for (int col = 0; col < m.width; ++col) {
                const uint32_t label = m.at(row, col);
                if (label == 0) continue;
                // Single-pixel nuclei (max distance 0) map to 1.
                double d = max_dist[label] > 0.0 ? out.at(row, col) / max_dist[label] : 1.0;
                if (mode == DistanceMode::kCentroidInverted) d = 1.0 - d;
                out.at(row, col) = d;
            }
        }
    }
    return out;
}

ContourMap contour_map(const InstanceMap& m, int connectivity) {
    if (connectivity != 4 && connectivity != 8)
        throw ConfigError("connectivity must be 4 or 8");

    ContourMap out(m.width, m.height);
    for (int row = 0; row < m.height; ++row) {
        for (int col = 0; col < m.width; ++col) {
            const uint32_t label = m.at(row, col);
            if (label == 0) continue;
            bool contour = false;
            for (int dr = -1; dr <= 1 && !contour; ++dr) {
                for (int dc = -1; dc <= 1 && !contour; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    if (connectivity == 4 && dr != 0 && dc != 0) continue;
                    const int r = row + dr;
                    const int c = col + dc;
                    if (r < 0 || r >= m.height || c < 0 || c >= m.width) {
                        contour = true;  // border counts as background
                    } else if (m.at(r, c) != label) {
                        contour = true;
                    }
                }
            }
            if (contour) out.at(row, col) = 1;
        }
    }
    return out;
}

BinaryMask binary_mask(const InstanceMap& m) {
    BinaryMask out(m.width, m.height);
    for (size_t i = 0; i < m.labels.size(); ++i)
        out.values[i] = m.labels[i] != 0 ? 1 : 0;
    return out;
}

}  // namespace sharpgan
