#pragma once

#include <cstdint>
#include <vector>

#include "quivmod/quiver.hpp"

namespace quivmod {

struct DeformationViolation {
    DimVector e;
    /// 1: theta(e) < 0 but theta'(e) >= 0; 2: theta'(e) <= 0 but theta(e) > 0;
    /// 3: theta'(e) == theta'(d) == 0 for a proper e, or theta'(d) != 0 (reported with e = d).
    int condition = 0;
};

struct DeformationCheck {
    bool passes = false;
    std::vector<DeformationViolation> violations;
};

/// Checks the three defining conditions of a generic deformation of theta with respect
/// to d over every 0 != e < d. Requires theta(d) = 0.
DeformationCheck is_generic_deformation(const Stability& theta, const Stability& theta_prime, const DimVector& d,
                                        const Limits& limits = {});

struct GenericDeformation {
    Stability theta_prime;
    Stability eta;
    std::int64_t scale = 0;  // theta_prime = scale * theta + eta
};

struct DeformationSearch {
    /// Largest sup-norm of eta tried before giving up.
    std::int64_t max_eta_norm = 64;
};

/// Builds theta' = C * theta + eta. eta is the first integer covector with eta(d) = 0 that
/// is nonzero on every proper 0 != e < d with theta(e) = 0, ordered by sup-norm and then
/// lexicographically under 0 < 1 < -1 < 2 < -2 < ...; C = 1 + max(0, max{eta(e) : theta(e) < 0},
/// max{-eta(e) : theta(e) > 0}).
GenericDeformation generic_deformation(const Stability& theta, const DimVector& d, const Limits& limits = {},
                                       const DeformationSearch& search = {});

}  // namespace quivmod
