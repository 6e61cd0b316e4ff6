#include "stabjgl/error.hpp"
#include "stabjgl/fgl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

namespace stabjgl {

namespace {

// The optimum is order-preserving, so its level sets are runs of the sorted
// inputs. For a fixed split of the sorted sequence into runs, stationarity
// pins each run's value to mean(run) - lam * (#below - #above). Every split
// yields a feasible point; the one with the smallest objective is optimal.
void fused_prox_enumerate(std::span<const double> a, double lam, std::span<double> out) {
    const std::size_t k = a.size();
    std::array<std::size_t, kMaxFusedGroups> order{};
    std::iota(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), std::size_t{0});
    std::stable_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                     [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });

    std::array<double, kMaxFusedGroups> sorted{};
    for (std::size_t i = 0; i < k; ++i) sorted[i] = a[order[i]];

    std::array<double, kMaxFusedGroups> candidate{};
    std::array<double, kMaxFusedGroups> best{};
    double best_obj = std::numeric_limits<double>::infinity();

    const std::size_t patterns = std::size_t{1} << (k - 1);
    for (std::size_t mask = 0; mask < patterns; ++mask) {
        std::size_t start = 0;
        for (std::size_t pos = 0; pos < k; ++pos) {
            const bool run_ends = pos + 1 == k || ((mask >> pos) & 1U) != 0;
            if (!run_ends) continue;
            double sum = 0.0;
            for (std::size_t q = start; q <= pos; ++q) sum += sorted[q];
            const auto size = static_cast<double>(pos - start + 1);
            const auto below = static_cast<double>(start);
            const auto above = static_cast<double>(k - pos - 1);
            const double value = sum / size - lam * (below - above);
            for (std::size_t q = start; q <= pos; ++q) candidate[q] = value;
            start = pos + 1;
        }
        double obj = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double d = candidate[i] - sorted[i];
            obj += 0.5 * d * d;
            for (std::size_t j = i + 1; j < k; ++j) obj += lam * std::abs(candidate[i] - candidate[j]);
        }
        if (obj < best_obj) {
            best_obj = obj;
            best = candidate;
        }
    }
    for (std::size_t i = 0; i < k; ++i) out[order[i]] = best[i];
}

}  // namespace

void fused_prox(std::span<const double> values, double lam, std::span<double> out) {
    const std::size_t k = values.size();
    if (out.size() != k) throw InputError("fused_prox output size mismatch");
    if (lam < 0.0) throw InputError("fused_prox parameter must be nonnegative");
    if (k > kMaxFusedGroups) throw InputError("fused_prox supports at most 8 groups");
    if (k == 0) return;
    if (k == 1 || lam == 0.0) {
        std::copy(values.begin(), values.end(), out.begin());
        return;
    }
    if (k == 2) {
        const double a1 = values[0];
        const double a2 = values[1];
        if (std::abs(a1 - a2) <= 2.0 * lam) {
            const double mean = 0.5 * (a1 + a2);
            out[0] = mean;
            out[1] = mean;
        } else if (a1 > a2) {
            out[0] = a1 - lam;
            out[1] = a2 + lam;
        } else {
            out[0] = a1 + lam;
            out[1] = a2 - lam;
        }
        return;
    }
    std::array<double, kMaxFusedGroups> buffer{};
    std::copy(values.begin(), values.end(), buffer.begin());
    fused_prox_enumerate(std::span<const double>(buffer.data(), k), lam, out);
}

std::vector<double> fused_prox(std::span<const double> values, double lam) {
    std::vector<double> out(values.size());
    fused_prox(values, lam, out);
    return out;
}

}  // namespace stabjgl
