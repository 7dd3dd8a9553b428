#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "sharpgan/image.hpp"

namespace sharpgan {

struct MatchedPair {
    uint32_t gt_label;
    uint32_t pred_label;
    double iou;
};

struct Matching {
    std::vector<MatchedPair> pairs;
    std::vector<uint32_t> unmatched_gt;    // false negatives
    std::vector<uint32_t> unmatched_pred;  // false positives
    double iou_threshold = 0.5;
};

struct SegScores {
    double dq = 0.0;
    double sq = 0.0;
    double pq = 0.0;
    double aji = 0.0;
};

using IouTable = std::map<std::pair<uint32_t, uint32_t>, double>;

/// IoU for every (gt, pred) label pair with nonempty intersection.
IouTable iou_matrix(const InstanceMap& gt, const InstanceMap& pred);

/// IoU > threshold matching; unique by construction for threshold >= 0.5.
Matching match_instances(const InstanceMap& gt, const InstanceMap& pred,
                         double iou_threshold = 0.5);

/// DQ = TP / (TP + FP/2 + FN/2); SQ = mean IoU over TP (0 if none); PQ = DQ*SQ.
std::tuple<double, double, double> dq_sq_pq(const Matching& m);

/// Aggregated Jaccard index with greedy per-GT best-IoU matching, single-use
/// predictions, ties broken toward the smaller prediction label.
double aji(const InstanceMap& gt, const InstanceMap& pred);

SegScores seg_scores(const InstanceMap& gt, const InstanceMap& pred,
                     double iou_threshold = 0.5);

}  // namespace sharpgan
