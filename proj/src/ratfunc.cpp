#include "quivmod/ratfunc.hpp"

#include "quivmod/error.hpp"

namespace quivmod {

RatFunc::RatFunc(std::int64_t shift, Poly num, Poly den, bool coprime) {
    if (den.is_zero()) throw PreconditionError("division_by_zero", "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    const std::size_t vn = num.valuation();
    const std::size_t vd = den.valuation();
    num = num.shifted_down(vn);
    den = den.shifted_down(vd);
    shift += static_cast<std::int64_t>(vn) - static_cast<std::int64_t>(vd);
    if (!coprime && den.degree() > 0) {
        const Poly g = Poly::gcd(num, den);
        if (g.degree() > 0) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
    }
    const Rational lead = den.lead();
    if (lead != 1) {
        num = num * (1 / lead);
        den = den * (1 / lead);
    }
    shift_ = shift;
    num_ = std::move(num);
    den_ = std::move(den);
}

RatFunc::RatFunc(long c) : RatFunc(Rational(c)) {}

RatFunc::RatFunc(const Rational& c) : den_(Poly::constant(1)) {
    if (c != 0) num_ = Poly::constant(c);
}

RatFunc::RatFunc(const HalfLaurent& p) : den_(Poly::constant(1)) {
    auto [shift, poly] = p.to_shifted_poly();
    shift_ = shift;
    num_ = std::move(poly);
}

RatFunc RatFunc::fraction(const HalfLaurent& num, const HalfLaurent& den) {
    if (den.is_zero()) throw PreconditionError("division_by_zero", "rational function with zero denominator");
    auto [sn, pn] = num.to_shifted_poly();
    auto [sd, pd] = den.to_shifted_poly();
    return RatFunc(sn - sd, std::move(pn), std::move(pd), false);
}

RatFunc RatFunc::monomial(const Rational& c, std::int64_t v_power) {
    return RatFunc(HalfLaurent::monomial(c, v_power));
}

HalfLaurent RatFunc::to_laurent() const {
    if (!is_laurent()) throw ConsistencyError("not_laurent", "rational function " + pretty() + " is not a Laurent polynomial");
    return numerator();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const std::int64_t s = std::min(shift_, o.shift_);
    const Poly a = num_.shifted_up(static_cast<std::size_t>(shift_ - s));
    const Poly b = o.num_.shifted_up(static_cast<std::size_t>(o.shift_ - s));
    if (den_ == o.den_) return RatFunc(s, a + b, den_, den_.is_one());
    const Poly g = Poly::gcd(den_, o.den_);
    const Poly da = den_.exact_div(g);
    const Poly db = o.den_.exact_div(g);
    return RatFunc(s, a * db + b * da, da * o.den_, false);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return {};
    // Cross-cancel so that the product is already reduced.
    const Poly g1 = Poly::gcd(num_, o.den_);
    const Poly g2 = Poly::gcd(o.num_, den_);
    const Poly n = num_.exact_div(g1) * o.num_.exact_div(g2);
    const Poly d = den_.exact_div(g2) * o.den_.exact_div(g1);
    return RatFunc(shift_ + o.shift_, n, d, true);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw PreconditionError("division_by_zero", "division by the zero rational function");
    return RatFunc(-shift_, den_, num_, true);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(std::int64_t n) const {
    if (n < 0) return inverse().pow(-n);
    RatFunc result(1L), base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

RatFunc RatFunc::inflate(std::int64_t n) const {
    if (n < 1) throw PreconditionError("bad_adams_index", "Adams operation index must be positive");
    if (n == 1 || is_zero()) return *this;
    // Coprimality, monicity and nonzero constant terms survive v -> v^n.
    RatFunc r;
    r.shift_ = shift_ * n;
    r.num_ = num_.inflate(static_cast<std::size_t>(n));
    r.den_ = den_.inflate(static_cast<std::size_t>(n));
    return r;
}

std::string RatFunc::pretty() const {
    if (is_laurent()) return numerator().pretty();
    const HalfLaurent n = numerator();
    const std::string ns = n.terms().size() == 1 ? n.pretty() : "(" + n.pretty() + ")";
    return ns + "/(" + denominator().pretty() + ")";
}

}  // namespace quivmod
