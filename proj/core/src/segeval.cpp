#include "sharpgan/segeval.hpp"

#include <algorithm>

namespace sharpgan {

namespace {

void check_dims(const InstanceMap& a, const InstanceMap& b) {
    if (a.width != b.width || a.height != b.height)
        throw DimensionMismatch("instance map dimensions differ");
}

std::vector<size_t> label_areas(const InstanceMap& m) {
    std::vector<size_t> areas(m.max_label() + 1, 0);
    for (uint32_t v : m.labels)
        if (v != 0) ++areas[v];
    return areas;
}

// Intersection pixel counts per (gt, pred) label pair.
std::map<std::pair<uint32_t, uint32_t>, size_t> intersections(
    const InstanceMap& gt, const InstanceMap& pred) {
    std::map<std::pair<uint32_t, uint32_t>, size_t> counts;
    for (size_t i = 0; i < gt.labels.size(); ++i) {
        const uint32_t g = gt.labels[i];
        const uint32_t p = pred.labels[i];
        if (g != 0 && p != 0) ++counts[{g, p}];
    }
    return counts;
}

}  // namespace

IouTable iou_matrix(const InstanceMap& gt, const InstanceMap& pred) {
    check_dims(gt, pred);
    const auto gt_area = label_areas(gt);
    const auto pred_area = label_areas(pred);

    IouTable table;
    for (const auto& [pair, inter] : intersections(gt, pred)) {
        const size_t uni = gt_area[pair.first] + pred_area[pair.second] - inter;
        table[pair] = static_cast<double>(inter) / static_cast<double>(uni);
    }
    return table;
}

Matching match_instances(const InstanceMap& gt, const InstanceMap& pred,
                         double iou_threshold) {
    if (iou_threshold < 0.5)
        throw ThresholdError("iou_threshold below 0.5 loses matching uniqueness");
    check_dims(gt, pred);

    Matching m;
    m.iou_threshold = iou_threshold;
    std::vector<bool> gt_matched(gt.max_label() + 1, false);
    std::vector<bool> pred_matched(pred.max_label() + 1, false);

    for (const auto& [pair, iou] : iou_matrix(gt, pred)) {
        if (iou > iou_threshold) {
            m.pairs.push_back({pair.first, pair.second, iou});
            gt_matched[pair.first] = true;
            pred_matched[pair.second] = true;
        }
    }
    const auto gt_area = label_areas(gt);
    const auto pred_area = label_areas(pred);
    for (uint32_t g = 1; g < gt_area.size(); ++g)
        if (gt_area[g] > 0 && !gt_matched[g]) m.unmatched_gt.push_back(g);
    for (uint32_t p = 1; p < pred_area.size(); ++p)
        if (pred_area[p] > 0 && !pred_matched[p]) m.unmatched_pred.push_back(p);
    return m;
}

std::tuple<double, double, double> dq_sq_pq(const Matching& m) {
    const double tp = static_cast<double>(m.pairs.size());
    const double fp = static_cast<double>(m.unmatched_pred.size());
    const double fn = static_cast<double>(m.unmatched_gt.size());

    const double denom = tp + 0.5 * fp + 0.5 * fn;
    const double dq = denom > 0.0 ? tp / denom : 0.0;

    double sq = 0.0;
    if (!m.pairs.empty()) {
        // Sum in value order so the result is exact under label relabeling,
        // which only permutes the pair list.
        std::vector<double> ious;
        ious.reserve(m.pairs.size());
        for (const auto& pair : m.pairs) ious.push_back(pair.iou);
        std::sort(ious.begin(), ious.end());
        for (double v : ious) sq += v;
        sq /= tp;
    }
    return {dq, sq, dq * sq};
}

double aji(const InstanceMap& gt, const InstanceMap& pred) {
    check_dims(gt, pred);
    const auto gt_area = label_areas(gt);
    const auto pred_area = label_areas(pred);
    const auto inter = intersections(gt, pred);

    // Per-GT candidate predictions, keyed gt -> (pred, intersection).
    std::map<uint32_t, std::vector<std::pair<uint32_t, size_t>>> candidates;
    for (const auto& [pair, count] : inter)
        candidates[pair.first].emplace_back(pair.second, count);

    std::vector<bool> pred_used(pred_area.size(), false);
    size_t c_sum = 0;
    size_t u_sum = 0;

    for (uint32_t g = 1; g < gt_area.size(); ++g) {
        if (gt_area[g] == 0) continue;
        uint32_t best_pred = 0;
        double best_iou = -1.0;
        size_t best_inter = 0;
        auto it = candidates.find(g);
        if (it != candidates.end()) {
            for (const auto& [p, count] : it->second) {
                if (pred_used[p]) continue;
                const double iou = static_cast<double>(count) /
                                   static_cast<double>(gt_area[g] + pred_area[p] - count);
                // Ties go to the smaller prediction label (candidates are sorted).
                if (iou > best_iou) {
                    best_iou = iou;
                    best_pred = p;
                    best_inter = count;
                }
            }
        }
        if (best_pred == 0) {
            u_sum += gt_area[g];  // no available prediction intersects this GT
        } else {
            pred_used[best_pred] = true;
            c_sum += best_inter;
            u_sum += gt_area[g] + pred_area[best_pred] - best_inter;
        }
    }
    for (uint32_t p = 1; p < pred_area.size(); ++p)
        if (pred_area[p] > 0 && !pred_used[p]) u_sum += pred_area[p];

    if (u_sum == 0) return 1.0;  // both maps empty
    return static_cast<double>(c_sum) / static_cast<double>(u_sum);
}

SegScores seg_scores(const InstanceMap& gt, const InstanceMap& pred,
                     double iou_threshold) {
    SegScores s;
    const Matching m = match_instances(gt, pred, iou_threshold);
    std::tie(s.dq, s.sq, s.pq) = dq_sq_pq(m);
    s.aji = aji(gt, pred);
    return s;
}

}  // namespace sharpgan
