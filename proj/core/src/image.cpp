#include "sharpgan/image.hpp"

#include <algorithm>
#include <map>

namespace sharpgan {

uint32_t InstanceMap::max_label() const {
    uint32_t m = 0;
    for (uint32_t v : labels) m = std::max(m, v);
    return m;
}

GrayImage rgb_to_gray(const RgbImage& img) {
    GrayImage out(img.width, img.height);
    const size_t n = img.pixel_count();
    for (size_t i = 0; i < n; ++i) {
        out.data[i] = kLumaR * img.data[3 * i] + kLumaG * img.data[3 * i + 1] +
                      kLumaB * img.data[3 * i + 2];
    }
    return out;
}

InstanceMap relabel_sequential(const InstanceMap& m) {
    std::map<uint32_t, uint32_t> remap;
    for (uint32_t v : m.labels) {
        if (v != 0) remap.emplace(v, 0);
    }
    uint32_t next = 1;
    for (auto& [old_label, new_label] : remap) new_label = next++;

    InstanceMap out(m.width, m.height);
    for (size_t i = 0; i < m.labels.size(); ++i) {
        out.labels[i] = m.labels[i] == 0 ? 0 : remap[m.labels[i]];
    }
    return out;
}

ValidationReport validate_instance_map(const InstanceMap& m) {
    ValidationReport report;
    if (m.width < 1 || m.height < 1) {
        report.add("empty-dimensions", "instance map has empty dimensions");
        return report;
    }
    if (m.labels.size() != m.pixel_count()) {
        report.add("size-mismatch", "label buffer does not match width*height");
        return report;
    }
    const uint32_t k = m.max_label();
    std::vector<size_t> counts(k + 1, 0);
    for (uint32_t v : m.labels) ++counts[v];
    for (uint32_t label = 1; label <= k; ++label) {
        if (counts[label] == 0) {
            report.add("non-sequential-labels",
                       "label " + std::to_string(label) + " is unused (labels not 1..K)");
        }
    }
    return report;
}

}  // namespace sharpgan
