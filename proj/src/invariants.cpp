#include "quivmod/invariants.hpp"

#include <functional>

#include "quivmod/deform.hpp"
#include "quivmod/error.hpp"

namespace quivmod {

namespace {

// Visits every point of the sub-box [0, r] of `box` in lexicographic order, passing
// the point and its cell index in `box`.
template <typename Fn>
void for_each_subpoint(const LatticeBox& box, const std::vector<std::int64_t>& r, Fn&& fn) {
    const std::size_t n = r.size();
    std::vector<std::int64_t> e(n, 0);
    std::size_t idx = 0;
    while (true) {
        fn(e, idx);
        std::size_t k = n;
        while (k > 0 && e[k - 1] == r[k - 1]) {
            --k;
            idx -= static_cast<std::size_t>(e[k]) * box.stride(k);
            e[k] = 0;
        }
        if (k == 0) return;
        ++e[k - 1];
        idx += box.stride(k - 1);
    }
}

// Dense integer polynomial in x = q^-1.
using XPoly = std::vector<mpz_class>;

XPoly xmul(const XPoly& a, const XPoly& b) {
    XPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Gaussian binomials [n choose k]_x for 0 <= k <= n <= max_n.
class GaussianTable {
public:
    explicit GaussianTable(std::int64_t max_n) {
        rows_.resize(static_cast<std::size_t>(max_n) + 1);
        for (std::size_t n = 0; n < rows_.size(); ++n) {
            rows_[n].resize(n + 1);
            rows_[n][0] = XPoly{1};
            rows_[n][n] = XPoly{1};
            for (std::size_t k = 1; k < n; ++k) {
                // [n,k] = [n-1,k-1] + x^k [n-1,k]
                const XPoly& a = rows_[n - 1][k - 1];
                const XPoly& b = rows_[n - 1][k];
                XPoly r(std::max(a.size(), b.size() + k), mpz_class(0));
                for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
                for (std::size_t i = 0; i < b.size(); ++i) r[i + k] += b[i];
                rows_[n][k] = std::move(r);
            }
        }
    }

    const XPoly& operator()(std::int64_t n, std::int64_t k) const {
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    std::vector<std::vector<XPoly>> rows_;
};

}  // namespace

std::vector<OrderedDecomposition> hn_decompositions(const DimVector& d, const Stability& theta, const Limits& limits) {
    check_size(theta, d);
    check_nonzero(d);
    const Stability normalized = normalize_stability(theta, d);
    const LatticeBox box(d.coords(), limits);
    const auto values = box.evaluate(normalized.weights());
    const __int128 theta_d = theta(d);
    const __int128 total_d = d.total();

    std::vector<OrderedDecomposition> out;
    std::vector<DimVector> path;
    std::vector<std::int64_t> prefix(d.size(), 0);

    std::function<void(std::size_t, const std::vector<std::int64_t>&)> recurse =
        [&](std::size_t prefix_idx, const std::vector<std::int64_t>& remaining) {
            for_each_subpoint(box, remaining, [&](const std::vector<std::int64_t>& e, std::size_t e_idx) {
                if (e_idx == 0) return;
                if (e == remaining) {
                    path.emplace_back(e);
                    if (out.size() >= limits.max_box_cells) throw BoxGuardExceeded(out.size() + 1, limits.max_box_cells);
                    out.push_back({path});
                    path.pop_back();
                    return;
                }
                const std::size_t idx = prefix_idx + e_idx;
                const bool by_normalized = values[idx] > 0;
                // Exact slope comparison mu(prefix + e) > mu(d) by cross-multiplication.
                __int128 theta_p = 0, total_p = 0;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    const __int128 c = prefix[i] + e[i];
                    theta_p += c * theta[i];
                    total_p += c;
                }
                const bool by_slope = theta_p * total_d > theta_d * total_p;
                if (by_slope != by_normalized) {
                    throw ConsistencyError("slope_mismatch", "slope comparison disagrees with normalized stability sign");
                }
                if (!by_slope) return;
                std::vector<std::int64_t> rest(remaining);
                for (std::size_t i = 0; i < e.size(); ++i) {
                    rest[i] -= e[i];
                    prefix[i] += e[i];
                }
                path.emplace_back(e);
                recurse(idx, rest);
                path.pop_back();
                for (std::size_t i = 0; i < e.size(); ++i) prefix[i] -= e[i];
            });
        };
    recurse(0, d.coords());
    return out;
}

RatFunc p_poly(const Quiver& q, const DimVector& d, const Stability& theta, const Limits& limits) {
    check_size(q, d);
    check_size(q, theta);
    const auto decomps = hn_decompositions(d, theta, limits);

    std::int64_t max_coord = 0;
    for (std::int64_t c : d.coords()) max_coord = std::max(max_coord, c);
    const GaussianTable binom(max_coord);

    // With D = prod_i prod_{j <= d_i} (1 - x^j), each term times D is
    // (-1)^(s-1) q^-E prod_i [d_i; d^1_i, ..., d^s_i]_x, a polynomial in x = q^-1.
    HalfLaurent numerator;
    for (const auto& dec : decomps) {
        std::int64_t exponent = 0;
        for (std::size_t l = 0; l < dec.parts.size(); ++l) {
            for (std::size_t k = 0; k <= l; ++k) exponent += euler_form(q, dec.parts[l], dec.parts[k]);
        }
        XPoly multinomial{1};
        for (std::size_t i = 0; i < d.size(); ++i) {
            std::int64_t running = 0;
            for (const auto& part : dec.parts) {
                running += part[i];
                if (part[i] != 0) multinomial = xmul(multinomial, binom(running, part[i]));
            }
        }
        const Rational sign = dec.parts.size() % 2 == 1 ? 1 : -1;
        HalfLaurent::Terms terms;
        for (std::size_t j = 0; j < multinomial.size(); ++j) {
            if (multinomial[j] != 0) terms.emplace(-2 * (exponent + static_cast<std::int64_t>(j)), sign * Rational(multinomial[j]));
        }
        numerator += HalfLaurent(std::move(terms));
    }

    HalfLaurent denominator(1L);
    for (std::int64_t di : d.coords()) {
        for (std::int64_t j = 1; j <= di; ++j) denominator = denominator * (HalfLaurent(1L) - HalfLaurent::q_power(-j));
    }
    return RatFunc::fraction(numerator, denominator);
}

HalfLaurent betti_coprime(const Quiver& q, const DimVector& d, const Stability& theta, const Limits& limits) {
    check_size(q, d);
    check_size(q, theta);
    check_nonzero(d);
    const Stability normalized = normalize_stability(theta, d);
    if (!is_coprime(normalized, d, limits)) {
        throw PreconditionError("not_coprime", "stability not coprime for d = " + d.to_string());
    }
    const RatFunc r = (RatFunc::q_power(1) - RatFunc(1L)) * p_poly(q, d, theta, limits);
    if (!r.is_laurent() || !r.to_laurent().is_q_polynomial_with_integer_coeffs()) {
        throw ConsistencyError("betti_not_polynomial", "(q-1) p_d(q) = " + r.pretty() + " is not an integer polynomial in q");
    }
    return r.to_laurent();
}

namespace {

RatFunc signed_v_power(std::int64_t k) { return RatFunc::monomial(k % 2 == 0 ? 1 : -1, k); }

}  // namespace

SlopeSeries dt_generating_series(const Quiver& q, const Stability& theta, const DimVector& d, const Limits& limits) {
    check_size(q, d);
    check_size(q, theta);
    check_nonzero(d);
    const Stability normalized = normalize_stability(theta, d);
    const LatticeBox box(d.coords(), limits);
    const auto values = box.evaluate(normalized.weights());
    SlopeSeries series = SlopeSeries::one(d);
    for (std::size_t c = 1; c < box.cell_count(); ++c) {
        if (values[c] != 0) continue;
        const DimVector e(box.point(c));
        series.add_term(e, signed_v_power(euler_form(q, e, e)) * p_poly(q, e, normalized, limits));
    }
    return series;
}

std::map<DimVector, RatFunc> dt_invariants(const Quiver& q, const Stability& theta, const DimVector& d,
                                           const Limits& limits) {
    const SlopeSeries series = dt_generating_series(q, theta, d, limits);
    const SlopeSeries log = pleth_log(series);
    const RatFunc factor = RatFunc::monomial(1, -1) - RatFunc::v();

    const Stability normalized = normalize_stability(theta, d);
    const LatticeBox box(d.coords(), limits);
    const auto values = box.evaluate(normalized.weights());
    std::map<DimVector, RatFunc> out;
    for (std::size_t c = 1; c < box.cell_count(); ++c) {
        if (values[c] != 0) continue;
        DimVector e(box.point(c));
        out.emplace(e, factor * log.coefficient(e));
    }
    return out;
}

HalfLaurent ic_poincare_dt(const Quiver& q, const DimVector& d, const Stability& theta, const Limits& limits) {
    check_size(q, d);
    check_size(q, theta);
    check_nonzero(d);
    const Stability normalized = normalize_stability(theta, d);
    if (!symmetric_on_kernel(q, normalized)) {
        throw PreconditionError("kernel_asymmetric", "Euler form is not symmetric on the kernel of the stability");
    }
    const auto dt = dt_invariants(q, theta, d, limits);
    const RatFunc r = signed_v_power(1 - euler_form(q, d, d)) * dt.at(d);
    if (!r.is_laurent() || !r.to_laurent().is_q_polynomial_with_integer_coeffs()) {
        throw ConsistencyError("ic_not_polynomial", "DT route gives " + r.pretty() + ", not an integer polynomial in q");
    }
    return r.to_laurent();
}

HalfLaurent ic_poincare_resolution(const Quiver& q, const DimVector& d, const Stability& theta,
                                   const Stability& theta_prime, const Limits& limits) {
    check_size(q, d);
    check_size(q, theta);
    check_size(q, theta_prime);
    check_nonzero(d);
    const Stability normalized = normalize_stability(theta, d);
    const Stability deformed = normalize_stability(theta_prime, d);
    if (!is_generic_deformation(normalized, deformed, d, limits).passes) {
        throw PreconditionError("not_generic_deformation", "deformed stability " + theta_prime.to_string() +
                                                               " is not a generic deformation for d = " + d.to_string());
    }
    if (!symmetric_on_kernel(q, normalized)) {
        throw PreconditionError("kernel_asymmetric", "Euler form is not symmetric on the kernel of the stability");
    }
    return betti_coprime(q, d, deformed, limits);
}

}  // namespace quivmod
