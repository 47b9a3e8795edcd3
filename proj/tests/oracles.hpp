#pragma once

// Independent reference computations used by the tests. None of these share code paths
// with the library beyond the basic algebra types.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "quivmod/invariants.hpp"
#include "quivmod/ratfunc.hpp"
#include "quivmod/series.hpp"

namespace oracle {

using namespace quivmod;

inline RatFunc q() { return RatFunc::q_power(1); }

/// All ordered tuples of nonzero parts summing to d, with no pruning, then filtered by
/// exact rational slopes.
inline std::vector<OrderedDecomposition> brute_force_hn(const DimVector& d, const Stability& theta) {
    std::vector<std::vector<DimVector>> all;
    std::vector<DimVector> cur;
    std::function<void(const DimVector&)> rec = [&](const DimVector& rest) {
        if (rest.is_zero()) {
            all.push_back(cur);
            return;
        }
        std::vector<std::int64_t> e(rest.size(), 0);
        while (true) {
            std::size_t k = e.size();
            while (k > 0 && e[k - 1] == rest[k - 1]) e[--k] = 0;
            if (k == 0) break;
            ++e[k - 1];
            DimVector part(e);
            cur.push_back(part);
            rec(rest - part);
            cur.pop_back();
        }
    };
    rec(d);
    const Rational mu = Rational(theta(d), d.total());
    std::vector<OrderedDecomposition> out;
    for (auto& parts : all) {
        DimVector prefix = DimVector::zero(d.size());
        bool ok = true;
        for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
            prefix = prefix + parts[k];
            if (Rational(theta(prefix), prefix.total()) <= mu) ok = false;
        }
        if (ok) out.push_back({parts});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// p_d straight from the defining sum, one rational function per factor.
inline RatFunc direct_p_poly(const Quiver& quiver, const DimVector& d, const Stability& theta) {
    RatFunc total;
    for (const auto& dec : brute_force_hn(d, theta)) {
        std::int64_t ex = 0;
        for (std::size_t l = 0; l < dec.parts.size(); ++l) {
            for (std::size_t k = 0; k <= l; ++k) ex += euler_form(quiver, dec.parts[l], dec.parts[k]);
        }
        RatFunc term = RatFunc(dec.parts.size() % 2 == 1 ? 1L : -1L) * RatFunc::q_power(-ex);
        for (const auto& part : dec.parts) {
            for (std::size_t i = 0; i < part.size(); ++i) {
                for (std::int64_t j = 1; j <= part[i]; ++j) term = term / (RatFunc(1L) - RatFunc::q_power(-j));
            }
        }
        total += term;
    }
    return total;
}

/// [m choose r]_q as prod_{i<r} (1 - q^(m-i)) / (1 - q^(i+1)).
inline RatFunc gaussian_binomial(std::int64_t m, std::int64_t r) {
    RatFunc g(1L);
    for (std::int64_t i = 0; i < r; ++i) g = g * (RatFunc(1L) - RatFunc::q_power(m - i)) / (RatFunc(1L) - RatFunc::q_power(i + 1));
    return g;
}

/// Points of projective (m-1)-space over a field with q elements.
inline RatFunc projective_points(std::int64_t m) { return (RatFunc::q_power(m) - RatFunc(1L)) / (q() - RatFunc(1L)); }

/// Random Laurent monomial c * v^k with small nonzero c.
inline RatFunc random_monomial(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), power(-3, 3);
    int c = 0;
    while (c == 0) c = coef(rng);
    return RatFunc::monomial(c, power(rng));
}

/// Random series with zero constant term inside `box`.
inline SlopeSeries random_series(std::mt19937& rng, const DimVector& box, double density = 0.5) {
    SlopeSeries s(box);
    std::bernoulli_distribution keep(density);
    for (std::int64_t a = 0; a <= box[0]; ++a) {
        for (std::int64_t b = 0; b <= box[1]; ++b) {
            if ((a == 0 && b == 0) || !keep(rng)) continue;
            s.add_term(DimVector{a, b}, random_monomial(rng));
        }
    }
    return s;
}

}  // namespace oracle
