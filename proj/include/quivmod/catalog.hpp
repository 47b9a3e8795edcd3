#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivmod/quiver.hpp"
#include "quivmod/strata.hpp"

namespace quivmod {

struct Example {
    std::string family;
    std::vector<std::int64_t> params;
    Quiver quiver;
    DimVector d;
    Stability theta;
    /// Present when the family comes with a displayed deformation.
    std::optional<Stability> theta_prime;
    bool assume_nonempty = false;
};

struct FamilyInfo {
    std::string name;
    std::string params;
    std::string summary;
};

const std::vector<FamilyInfo>& list_families();

/// Builds a catalog example; throws InvalidInput for unknown families or bad parameters.
Example build_example(const std::string& family, const std::vector<std::int64_t>& params);

/// Parses "family:p1,p2,..." and builds it.
Example build_example(const std::string& reference);

/// Vertices i_k (k = 1..d_i), each arrow i -> j replicated to i_k -> j_l, stability
/// theta(i) on every i_k, all-ones dimension vector.
LocalQuiver abelianized_quiver(const Quiver& q, const DimVector& d, const Stability& theta);

struct MarkedPartition {
    std::vector<std::int64_t> parts;
    std::size_t marked = 0;
};

struct PointConfigLocal {
    LunaType type;
    LocalQuiver local;
    /// Off-diagonal arrow counts e(e-n) lambda_p lambda_q of the closed form (zero on the diagonal).
    std::vector<std::vector<std::int64_t>> closed_form_arrows;
    /// d - e lambda_p on the marked part, -e lambda_q elsewhere.
    std::vector<std::int64_t> closed_form_stability;
    bool arrows_agree = false;
    bool stability_agree = false;
};

/// Local data of the point-configuration example for a marked partition of gcd(m, d),
/// built from the general local-quiver construction with the displayed deformation.
PointConfigLocal point_config_local_data(std::int64_t m, std::int64_t d, const MarkedPartition& lambda);

struct RankOneReport {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t fiber_dim = 0;
    std::int64_t codim = 0;
    bool small = false;
};

/// Exact fiber and codimension over the vertex stratum of the (m, n) Kronecker example.
RankOneReport rank_one_smallness_report(std::int64_t m, std::int64_t n);

}  // namespace quivmod
