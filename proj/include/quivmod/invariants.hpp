#pragma once

#include <map>
#include <vector>

#include "quivmod/quiver.hpp"
#include "quivmod/ratfunc.hpp"
#include "quivmod/series.hpp"

namespace quivmod {

/// Ordered tuple of nonzero dimension vectors summing to the target.
struct OrderedDecomposition {
    std::vector<DimVector> parts;

    friend bool operator==(const OrderedDecomposition&, const OrderedDecomposition&) = default;
    friend auto operator<=>(const OrderedDecomposition& a, const OrderedDecomposition& b) { return a.parts <=> b.parts; }
};

/// All ordered decompositions d = d^1 + ... + d^s into nonzero parts with
/// slope(d^1 + ... + d^k) > slope(d) for every k < s, in lexicographic order.
/// The count is capped by limits.max_box_cells.
std::vector<OrderedDecomposition> hn_decompositions(const DimVector& d, const Stability& theta, const Limits& limits = {});

/// p_d(q) summed over hn_decompositions(d, theta).
RatFunc p_poly(const Quiver& q, const DimVector& d, const Stability& theta, const Limits& limits = {});

/// (q - 1) p_d(q) for a coprime d; a polynomial in q with integer coefficients.
HalfLaurent betti_coprime(const Quiver& q, const DimVector& d, const Stability& theta, const Limits& limits = {});

/// 1 + sum over 0 != e <= d with theta~(e) = 0 of (-v)^<e,e> p_e t^e, with theta~ normalized to d.
SlopeSeries dt_generating_series(const Quiver& q, const Stability& theta, const DimVector& d, const Limits& limits = {});

/// DT_e for every slope-zero exponent 0 != e <= d.
std::map<DimVector, RatFunc> dt_invariants(const Quiver& q, const Stability& theta, const DimVector& d,
                                           const Limits& limits = {});

/// (-v)^(1 - <d,d>) DT_d; requires the Euler form to be symmetric on Ker(theta~).
HalfLaurent ic_poincare_dt(const Quiver& q, const DimVector& d, const Stability& theta, const Limits& limits = {});

/// Betti polynomial of the deformed moduli space; requires theta' to be a generic
/// deformation of theta and kernel symmetry.
HalfLaurent ic_poincare_resolution(const Quiver& q, const DimVector& d, const Stability& theta,
                                   const Stability& theta_prime, const Limits& limits = {});

}  // namespace quivmod
