#include "stabjgl/metrics.hpp"

#include "stabjgl/error.hpp"

#include <cmath>

namespace stabjgl {

ConfusionCounts confusion(const EdgeSet& estimated, const EdgeSet& truth) {
    if (estimated.num_nodes() != truth.num_nodes()) throw InputError("edge sets have different node counts");
    const auto p = static_cast<std::size_t>(truth.num_nodes());
    ConfusionCounts c;
    for (const auto& e : estimated) {
        if (truth.contains(e.i, e.j)) {
            ++c.tp;
        } else {
            ++c.fp;
        }
    }
    c.fn = truth.size() - c.tp;
    c.tn = p * (p - 1) / 2 - c.tp - c.fp - c.fn;
    return c;
}

PrecisionRecall precision_recall(const ConfusionCounts& c) {
    PrecisionRecall pr;
    if (c.tp + c.fp > 0) pr.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
    if (c.tp + c.fn > 0) pr.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    return pr;
}

double mcc(const ConfusionCounts& c) {
    const auto tp = static_cast<double>(c.tp);
    const auto fp = static_cast<double>(c.fp);
    const auto fn = static_cast<double>(c.fn);
    const auto tn = static_cast<double>(c.tn);
    const double denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
    if (denom == 0.0) return 0.0;
    return (tp * tn - fp * fn) / std::sqrt(denom);
}

double mcc(const EdgeSet& a, const EdgeSet& b) { return mcc(confusion(a, b)); }

}  // namespace stabjgl
