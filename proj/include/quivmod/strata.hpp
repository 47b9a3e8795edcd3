#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivmod/error.hpp"
#include "quivmod/quiver.hpp"

namespace quivmod {

/// Exact half-integer, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(std::int64_t n) : twice_(2 * n) {}  // NOLINT(google-explicit-constructor)
    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    constexpr std::int64_t twice() const noexcept { return twice_; }
    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
    Rational to_rational() const { return Rational(twice_, 2); }

    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    /// Half of an integer.
    static constexpr HalfInt half(std::int64_t n) { return from_twice(n); }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

    /// "3", "-1/2".
    std::string to_string() const;

private:
    std::int64_t twice_ = 0;
};

struct LunaPart {
    DimVector part;
    std::int64_t multiplicity = 1;

    friend bool operator==(const LunaPart&, const LunaPart&) = default;
};

/// Multiset of same-slope parts summing to d, with parts in descending lexicographic order.
struct LunaType {
    std::vector<LunaPart> parts;

    DimVector total() const;
    std::int64_t multiplicity_sum() const;
    bool is_trivial() const noexcept { return parts.size() == 1 && parts.front().multiplicity == 1; }
    /// "(1,1,0)+(0,0,1)", "2*(1,0)+(0,1)".
    std::string to_string() const;

    friend bool operator==(const LunaType&, const LunaType&) = default;
};

/// Every type with all parts of slope zero for theta normalized to d. Includes types
/// whose strata may be empty.
std::vector<LunaType> luna_types(const Quiver& q, const DimVector& d, const Stability& theta, const Limits& limits = {});

struct LocalQuiver {
    Quiver quiver;
    DimVector d;
    Stability theta;
};

class NegativeArrowCount : public PreconditionError {
public:
    NegativeArrowCount(std::size_t k, std::size_t l, std::int64_t count)
        : PreconditionError("negative_arrow_count", "local quiver would need " + std::to_string(count) +
                                                        " arrows from part " + std::to_string(k + 1) + " to part " +
                                                        std::to_string(l + 1)),
          k_(k), l_(l) {}

    std::size_t from() const noexcept { return k_; }
    std::size_t to() const noexcept { return l_; }

private:
    std::size_t k_;
    std::size_t l_;
};

/// Quiver with one vertex per part, delta_kl - <d^k,d^l> arrows from k to l, dimension
/// vector of multiplicities and stability theta'(d^k).
LocalQuiver local_quiver(const Quiver& q, const LunaType& xi, const Stability& theta_prime);

/// -1/2 <d,d> + 1/2 sum_i <i,i> d_i - total(d) for a symmetric quiver.
HalfInt nullcone_dim_bound(const Quiver& q, const DimVector& d);

/// -1/2 <d,d> + 1/2 sum_k <d^k,d^k> m_k - sum_k m_k + 1; checked against the nullcone
/// bound of the local quiver plus one.
HalfInt fiber_dim_bound(const Quiver& q, const LunaType& xi);

/// 1 - <d,d> - sum_k (1 - <d^k,d^k>).
std::int64_t codim_lower_bound(const Quiver& q, const DimVector& d, const LunaType& xi);

/// -1/2 sum_k (1 - <d^k,d^k>)(m_k - 1) - 1/2 (sum_k m_k - 1); checked to equal
/// fiber_dim_bound - codim_lower_bound / 2.
HalfInt smallness_margin(const Quiver& q, const DimVector& d, const LunaType& xi);

struct StratumRecord {
    LunaType type;
    bool filtered = false;
    std::string filter_reason;
    std::optional<LocalQuiver> local;
    HalfInt fiber_bound;
    std::int64_t codim_bound = 0;
    HalfInt margin;
};

enum class Verdict { certified, not_certified, not_applicable };

std::string verdict_name(Verdict v);

struct Hypothesis {
    std::string name;
    bool holds = false;
};

struct SmallnessReport {
    Verdict verdict = Verdict::not_applicable;
    std::vector<std::string> reasons;
    std::vector<Hypothesis> hypotheses;
    bool assume_stable_nonempty = false;
    std::vector<StratumRecord> strata;
};

SmallnessReport certify_smallness(const Quiver& q, const DimVector& d, const Stability& theta,
                                  const Stability& theta_prime, bool assume_stable_nonempty,
                                  const Limits& limits = {});

}  // namespace quivmod
