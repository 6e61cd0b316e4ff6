#pragma once

#include "stabjgl/model.hpp"

#include <cstddef>
#include <optional>

namespace stabjgl {

/// Pairwise classification over the p(p-1)/2 unordered node pairs.
struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;

    std::size_t total() const noexcept { return tp + fp + fn + tn; }
};

/// Undefined ratios (empty denominators) are left empty.
struct PrecisionRecall {
    std::optional<double> precision;
    std::optional<double> recall;
};

ConfusionCounts confusion(const EdgeSet& estimated, const EdgeSet& truth);

PrecisionRecall precision_recall(const ConfusionCounts& counts);

double mcc(const ConfusionCounts& counts);

/// Matthews correlation treating `b` as truth; 0 when a marginal is empty.
double mcc(const EdgeSet& a, const EdgeSet& b);

}  // namespace stabjgl
