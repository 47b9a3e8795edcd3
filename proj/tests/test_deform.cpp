#include <doctest.h>

#include "quivmod/catalog.hpp"
#include "quivmod/deform.hpp"
#include "quivmod/error.hpp"

using namespace quivmod;

TEST_SUITE("deform") {

TEST_CASE("is_generic_deformation examples") {
    CHECK(is_generic_deformation({0, 0}, {1, -1}, {1, 1}).passes);
    const auto zero = is_generic_deformation({0, 0}, {0, 0}, {1, 1});
    CHECK_FALSE(zero.passes);
    REQUIRE_FALSE(zero.violations.empty());
    for (const auto& v : zero.violations) CHECK(v.condition == 3);
    const Example pts = build_example("points", {4, 2});
    CHECK(pts.theta == Stability{2, 2, 2, 2, -4});
    CHECK(*pts.theta_prime == Stability{6, 4, 4, 4, -9});
    CHECK(is_generic_deformation(pts.theta, *pts.theta_prime, pts.d).passes);
    CHECK_THROWS_AS(is_generic_deformation({1, 0}, {1, -1}, {1, 1}), PreconditionError);
}

TEST_CASE("violations carry the failing condition") {
    // theta(1,0) < 0 but theta'(1,0) > 0.
    const auto c = is_generic_deformation({-1, 1}, {1, -1}, {1, 1});
    CHECK_FALSE(c.passes);
    bool saw1 = false, saw2 = false;
    for (const auto& v : c.violations) {
        saw1 = saw1 || (v.condition == 1 && v.e == DimVector{1, 0});
        saw2 = saw2 || (v.condition == 2 && v.e == DimVector{0, 1});
    }
    CHECK(saw1);
    CHECK(saw2);
    const auto off = is_generic_deformation({0, 0}, {1, 1}, {1, 1});
    CHECK_FALSE(off.passes);
    CHECK(off.violations.back().e == DimVector{1, 1});
}

TEST_CASE("generic_deformation examples") {
    const auto g = generic_deformation({0, 0}, {1, 1});
    CHECK(g.theta_prime == Stability{1, -1});
    CHECK(g.scale == 1);
    for (std::int64_t r = 1; r <= 4; ++r) {
        const auto gr = generic_deformation({0, 0}, {1, r});
        // proportional to (r, -1)
        CHECK(gr.theta_prime[0] == -r * gr.theta_prime[1]);
        CHECK(gr.theta_prime[1] < 0);
    }
    CHECK_THROWS_AS(generic_deformation({1, -1}, {2, 2}), PreconditionError);
    CHECK_THROWS_AS(generic_deformation({1, 0}, {1, 1}), PreconditionError);
    DeformationSearch tight;
    tight.max_eta_norm = 0;
    CHECK_THROWS_AS(generic_deformation({0, 0}, {1, 1}, {}, tight), PreconditionError);
}

TEST_CASE("coprime stability deforms itself") {
    CHECK(is_generic_deformation({1, -1}, {1, -1}, {1, 1}).passes);
    CHECK(is_generic_deformation({2, -1}, {2, -1}, {1, 2}).passes);
}

TEST_CASE("constructed deformation passes on every catalog example") {
    const std::vector<std::string> refs = {"determinantal:2,1", "determinantal:3,1", "determinantal:3,2",
                                           "points:4,2",       "points:5,2",        "points:6,3",
                                           "levi_adjoint:3",   "levi_adjoint:2,1,2", "bipartite:1,2,2,1,1",
                                           "bipartite:2,2,1,1,1,2", "abelianized:2,1,1,2", "kronecker_general:3,1"};
    for (const auto& ref : refs) {
        CAPTURE(ref);
        const Example ex = build_example(ref);
        const Stability t = normalize_stability(ex.theta, ex.d);
        if (!is_indivisible(ex.d)) continue;
        const auto g = generic_deformation(t, ex.d);
        const auto check = is_generic_deformation(t, g.theta_prime, ex.d);
        CHECK(check.passes);
        CHECK(is_indivisible(ex.d));
        if (ex.theta_prime) CHECK(is_generic_deformation(t, normalize_stability(*ex.theta_prime, ex.d), ex.d).passes);
    }
}

TEST_CASE("passing deformation implies indivisible") {
    for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = 1; b <= 3; ++b) {
            const DimVector d{a, b};
            for (std::int64_t x = -4; x <= 4; ++x) {
                const Stability tp = normalize_stability({x, 1}, d);
                if (is_generic_deformation({0, 0}, tp, d).passes) CHECK(is_indivisible(d));
            }
        }
    }
}

}
