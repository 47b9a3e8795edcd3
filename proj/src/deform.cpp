#include "quivmod/deform.hpp"

#include <algorithm>
#include <cstdlib>

#include "quivmod/error.hpp"
#include "quivmod/kernels.hpp"

namespace quivmod {

namespace {

void require_zero_at(const Stability& theta, const DimVector& d) {
    if (theta(d) != 0) {
        throw PreconditionError("stability_not_normalized",
                                "stability must vanish on the dimension vector (theta(d) = " + std::to_string(theta(d)) + ")");
    }
}

// Position of x in the sequence 0, 1, -1, 2, -2, ...
std::int64_t tie_rank(std::int64_t x) { return x > 0 ? 2 * x - 1 : -2 * x; }

bool precedes(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](std::int64_t x, std::int64_t y) { return tie_rank(x) < tie_rank(y); });
}

}  // namespace

DeformationCheck is_generic_deformation(const Stability& theta, const Stability& theta_prime, const DimVector& d,
                                        const Limits& limits) {
    check_size(theta, d);
    check_size(theta_prime, d);
    check_nonzero(d);
    require_zero_at(theta, d);

    DeformationCheck out;
    if (theta_prime(d) != 0) out.violations.push_back({d, 3});

    const LatticeBox box(d.coords(), limits);
    const auto base = box.evaluate(theta.weights());
    const auto deformed = box.evaluate(theta_prime.weights());
    std::vector<std::uint8_t> flags(box.cell_count());
    kernels::deformation_flags(base, deformed, flags);

    const std::int64_t target = theta_prime(d);
    for (std::size_t c = 1; c + 1 < box.cell_count(); ++c) {
        const std::uint8_t f = flags[c];
        const bool hits_target = target == 0 ? (f & kernels::kDeformedZero) != 0 : deformed[c] == target;
        if (f == 0 && !hits_target) continue;
        DimVector e(box.point(c));
        if (f & kernels::kLostNegativity) out.violations.push_back({e, 1});
        if (f & kernels::kGainedNonPositivity) out.violations.push_back({e, 2});
        if (hits_target) out.violations.push_back({e, 3});
    }
    out.passes = out.violations.empty();
    return out;
}

GenericDeformation generic_deformation(const Stability& theta, const DimVector& d, const Limits& limits,
                                       const DeformationSearch& search) {
    check_size(theta, d);
    check_nonzero(d);
    if (!is_indivisible(d)) throw PreconditionError("divisible_dimension_vector", "dimension vector " + d.to_string() + " is divisible");
    require_zero_at(theta, d);

    const std::size_t n = d.size();
    const LatticeBox box(d.coords(), limits);
    const auto base = box.evaluate(theta.weights());

    // SoA table of the critical set {0 != e < d : theta(e) = 0}.
    std::vector<std::size_t> critical;
    for (std::size_t c = 1; c + 1 < box.cell_count(); ++c) {
        if (base[c] == 0) critical.push_back(c);
    }
    const auto table = box.coordinate_table();
    std::vector<std::int32_t> crit_coords(n * critical.size());
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t k = 0; k < critical.size(); ++k) {
            crit_coords[a * critical.size() + k] = table[a * box.cell_count() + critical[k]];
        }
    }

    // eta(d) = 0 fixes the coordinate at the last vertex with d_k != 0.
    std::size_t pivot = n;
    while (pivot-- > 0 && d[pivot] == 0) {
    }
    std::vector<std::size_t> free_axes;
    for (std::size_t a = 0; a < n; ++a) {
        if (a != pivot) free_axes.push_back(a);
    }

    std::vector<std::int64_t> values(critical.size());
    std::vector<std::int64_t> eta(n), best;
    for (std::int64_t norm = 0; norm <= search.max_eta_norm && best.empty(); ++norm) {
        // Odometer over free coordinates in [-norm, norm].
        std::vector<std::int64_t> digits(free_axes.size(), -norm);
        while (true) {
            std::int64_t partial = 0;
            std::int64_t sup = 0;
            for (std::size_t k = 0; k < free_axes.size(); ++k) {
                eta[free_axes[k]] = digits[k];
                partial += digits[k] * d[free_axes[k]];
                sup = std::max(sup, static_cast<std::int64_t>(std::llabs(digits[k])));
            }
            if (partial % d[pivot] == 0) {
                eta[pivot] = -partial / d[pivot];
                sup = std::max(sup, static_cast<std::int64_t>(std::llabs(eta[pivot])));
                if (sup == norm && (best.empty() || precedes(eta, best))) {
                    kernels::linear_values(crit_coords, eta, values);
                    if (kernels::first_equal(values, 0) == values.size()) best = eta;
                }
            }
            std::size_t k = 0;
            while (k < digits.size() && digits[k] == norm) digits[k++] = -norm;
            if (k == digits.size()) break;
            ++digits[k];
        }
    }
    if (best.empty()) {
        throw PreconditionError("eta_search_exhausted",
                                "no separating covector with sup-norm <= " + std::to_string(search.max_eta_norm));
    }

    const auto eta_values = box.evaluate(best);
    std::int64_t bound = 0;
    for (std::size_t c = 0; c < box.cell_count(); ++c) {
        if (base[c] < 0) bound = std::max(bound, eta_values[c]);
        if (base[c] > 0) bound = std::max(bound, -eta_values[c]);
    }
    GenericDeformation out;
    out.eta = Stability(best);
    out.scale = bound + 1;
    out.theta_prime = theta.scaled(out.scale) + out.eta;

    const auto check = is_generic_deformation(theta, out.theta_prime, d, limits);
    if (!check.passes) {
        throw ConsistencyError("deformation_self_check_failed",
                               "constructed stability " + out.theta_prime.to_string() + " is not a generic deformation");
    }
    return out;
}

}  // namespace quivmod
