#pragma once

#include <cstdint>
#include <string>

#include "quivmod/laurent.hpp"

namespace quivmod {

/// Element of Q(v), v = q^(1/2), kept in canonical form
///     v^shift * num(v) / den(v)
/// with num(0) != 0, den(0) != 0, den monic and gcd(num, den) = 1. Zero is shift 0,
/// num 0, den 1. Structural equality therefore coincides with field equality.
class RatFunc {
public:
    RatFunc() : den_(Poly::constant(1)) {}
    RatFunc(long c);  // NOLINT(google-explicit-constructor)
    explicit RatFunc(const Rational& c);
    explicit RatFunc(const HalfLaurent& p);
    static RatFunc fraction(const HalfLaurent& num, const HalfLaurent& den);
    /// c * v^k.
    static RatFunc monomial(const Rational& c, std::int64_t v_power);
    /// q^k = v^(2k).
    static RatFunc q_power(std::int64_t k) { return monomial(1, 2 * k); }
    /// v itself.
    static RatFunc v() { return monomial(1, 1); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_laurent() const noexcept { return den_.is_one(); }
    /// Throws ConsistencyError("not_laurent") when the denominator is nontrivial.
    HalfLaurent to_laurent() const;

    std::int64_t shift() const noexcept { return shift_; }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    /// v^shift * num as a Laurent polynomial.
    HalfLaurent numerator() const { return HalfLaurent::from_poly(num_, shift_); }
    HalfLaurent denominator() const { return HalfLaurent::from_poly(den_); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc pow(std::int64_t n) const;
    RatFunc inverse() const;
    /// Adams operation v -> v^n (n >= 1).
    RatFunc inflate(std::int64_t n) const;

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    std::string pretty() const;

private:
    RatFunc(std::int64_t shift, Poly num, Poly den, bool coprime);
    std::int64_t shift_ = 0;
    Poly num_;
    Poly den_;
};

}  // namespace quivmod
