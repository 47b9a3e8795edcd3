#pragma once

// Exact univariate algebra in v = q^(1/2).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace quivmod {

using Rational = mpq_class;

/// Dense polynomial in v with rational coefficients; coefficient i multiplies v^i.
/// Always trimmed: the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t power);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const Rational& lead() const { return coeffs_.back(); }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// Lowest power with a nonzero coefficient (0 for the zero polynomial).
    std::size_t valuation() const noexcept;
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;

    /// Quotient and remainder; throws on a zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Exact division; throws ConsistencyError when b does not divide a.
    Poly exact_div(const Poly& b) const;
    /// Monic gcd (zero only when both inputs are zero).
    static Poly gcd(Poly a, Poly b);
    Poly monic() const;

    Poly shifted_up(std::size_t k) const;
    /// Divides by v^k; the low k coefficients must be zero.
    Poly shifted_down(std::size_t k) const;
    /// Substitutes v -> v^n.
    Poly inflate(std::size_t n) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Laurent polynomial in v: a finite map from v-powers to nonzero rational coefficients.
class HalfLaurent {
public:
    using Terms = std::map<std::int64_t, Rational>;

    HalfLaurent() = default;
    explicit HalfLaurent(Terms terms);
    HalfLaurent(long c);  // NOLINT(google-explicit-constructor): integer constants
    explicit HalfLaurent(const Rational& c);
    static HalfLaurent monomial(const Rational& c, std::int64_t v_power);
    /// c * q^k = c * v^(2k).
    static HalfLaurent q_power(std::int64_t k, const Rational& c = 1) { return monomial(c, 2 * k); }
    static HalfLaurent from_poly(const Poly& p, std::int64_t shift = 0);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(std::int64_t v_power) const;
    std::int64_t min_power() const;
    std::int64_t max_power() const;

    /// True when every v-power is even (only integral powers of q occur).
    bool is_integral_in_q() const noexcept;
    /// Integral in q, nonnegative powers, integer coefficients.
    bool is_q_polynomial_with_integer_coeffs() const noexcept;
    /// Degree in q; requires is_integral_in_q() and nonzero.
    std::int64_t q_degree() const;

    HalfLaurent operator+(const HalfLaurent& o) const;
    HalfLaurent operator-(const HalfLaurent& o) const;
    HalfLaurent operator-() const;
    HalfLaurent operator*(const HalfLaurent& o) const;
    HalfLaurent operator*(const Rational& c) const;
    HalfLaurent& operator+=(const HalfLaurent& o);
    HalfLaurent pow(std::uint64_t n) const;
    HalfLaurent inflate(std::int64_t n) const;

    /// Splits into v^shift * p with p(0) != 0 (zero maps to shift 0, p = 0).
    std::pair<std::int64_t, Poly> to_shifted_poly() const;

    friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

    /// Human-readable form in q, e.g. "q^2 + q^3" or "-q^(1/2) - q^(3/2)".
    std::string pretty() const;

private:
    Terms terms_;
};

/// Canonical "p/q" (or "p") string of a rational.
std::string rational_string(const Rational& r);
/// Parses "p/q" or "p"; throws InvalidInput.
Rational parse_rational(const std::string& s);

}  // namespace quivmod
