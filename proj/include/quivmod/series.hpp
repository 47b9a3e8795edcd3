#pragma once

#include <cstdint>
#include <map>

#include "quivmod/quiver.hpp"
#include "quivmod/ratfunc.hpp"

namespace quivmod {

/// Truncated formal series sum_e c_e t^e with exponents in the box [0, box] and
/// coefficients in Q(v). Products drop every exponent leaving the box.
class SlopeSeries {
public:
    using Terms = std::map<DimVector, RatFunc>;

    explicit SlopeSeries(DimVector box);
    static SlopeSeries one(const DimVector& box);
    static SlopeSeries monomial(const DimVector& box, const DimVector& e, const RatFunc& c);

    const DimVector& box() const noexcept { return box_; }
    const Terms& terms() const noexcept { return terms_; }
    RatFunc coefficient(const DimVector& e) const;
    RatFunc constant_term() const;
    bool in_box(const DimVector& e) const;

    /// Adds c t^e; silently ignores exponents outside the box.
    void add_term(const DimVector& e, const RatFunc& c);

    SlopeSeries operator+(const SlopeSeries& o) const;
    SlopeSeries operator-(const SlopeSeries& o) const;
    SlopeSeries operator*(const SlopeSeries& o) const;
    SlopeSeries operator*(const RatFunc& c) const;

    friend bool operator==(const SlopeSeries&, const SlopeSeries&) = default;

private:
    void check_box(const SlopeSeries& o) const;
    DimVector box_;
    Terms terms_;
};

/// Moebius function by trial factorization.
int mobius(std::int64_t n);

/// v -> v^n in every coefficient and e -> n e in every exponent.
SlopeSeries adams(std::int64_t n, const SlopeSeries& s);

/// Ordinary exponential of a series with zero constant term.
SlopeSeries series_exp(const SlopeSeries& s);
/// Ordinary logarithm of a series with constant term 1.
SlopeSeries series_log(const SlopeSeries& s);

/// Plethystic exponential exp(sum_n adams(n, s) / n); s must have zero constant term.
SlopeSeries pleth_exp(const SlopeSeries& s);
/// Inverse of pleth_exp: sum_n mu(n)/n adams(n, log s); s must have constant term 1.
SlopeSeries pleth_log(const SlopeSeries& s);

}  // namespace quivmod
