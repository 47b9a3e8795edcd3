#include "quivmod/series.hpp"

#include "quivmod/error.hpp"

namespace quivmod {

SlopeSeries::SlopeSeries(DimVector box) : box_(std::move(box)) {}

SlopeSeries SlopeSeries::one(const DimVector& box) {
    SlopeSeries s(box);
    s.add_term(DimVector::zero(box.size()), RatFunc(1L));
    return s;
}

SlopeSeries SlopeSeries::monomial(const DimVector& box, const DimVector& e, const RatFunc& c) {
    SlopeSeries s(box);
    s.add_term(e, c);
    return s;
}

bool SlopeSeries::in_box(const DimVector& e) const { return e.size() == box_.size() && e.leq(box_); }

RatFunc SlopeSeries::coefficient(const DimVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RatFunc() : it->second;
}

RatFunc SlopeSeries::constant_term() const { return coefficient(DimVector::zero(box_.size())); }

void SlopeSeries::add_term(const DimVector& e, const RatFunc& c) {
    if (c.is_zero() || !in_box(e)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SlopeSeries::check_box(const SlopeSeries& o) const {
    if (!(box_ == o.box_)) throw InvalidInput("box_mismatch", "series with different truncation boxes");
}

SlopeSeries SlopeSeries::operator+(const SlopeSeries& o) const {
    check_box(o);
    SlopeSeries r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SlopeSeries SlopeSeries::operator-(const SlopeSeries& o) const { return *this + o * RatFunc(-1L); }

SlopeSeries SlopeSeries::operator*(const SlopeSeries& o) const {
    check_box(o);
    SlopeSeries r(box_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            DimVector e = a + b;
            if (e.leq(box_)) r.add_term(e, ca * cb);
        }
    }
    return r;
}

SlopeSeries SlopeSeries::operator*(const RatFunc& c) const {
    SlopeSeries r(box_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

int mobius(std::int64_t n) {
    if (n < 1) throw PreconditionError("bad_mobius_argument", "Moebius function needs a positive argument");
    int mu = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

SlopeSeries adams(std::int64_t n, const SlopeSeries& s) {
    if (n < 1) throw PreconditionError("bad_adams_index", "Adams operation index must be positive");
    SlopeSeries r(s.box());
    for (const auto& [e, c] : s.terms()) r.add_term(e.scaled(n), c.inflate(n));
    return r;
}

namespace {

// Number of nonzero-exponent factors a product can hold before leaving the box.
std::int64_t nilpotency_order(const SlopeSeries& s) { return s.box().total(); }

}  // namespace

SlopeSeries series_exp(const SlopeSeries& s) {
    if (!s.constant_term().is_zero()) throw PreconditionError("nonzero_constant_term", "exp needs a series with zero constant term");
    SlopeSeries result = SlopeSeries::one(s.box()) + s;
    SlopeSeries power = s;
    for (std::int64_t k = 2; k <= nilpotency_order(s) && !power.terms().empty(); ++k) {
        power = power * s * RatFunc(Rational(1, k));
        result = result + power;
    }
    return result;
}

SlopeSeries series_log(const SlopeSeries& s) {
    if (s.constant_term() != RatFunc(1L)) throw PreconditionError("constant_term_not_one", "log needs a series with constant term 1");
    const SlopeSeries x = s - SlopeSeries::one(s.box());
    SlopeSeries result = x;
    SlopeSeries power = x;
    for (std::int64_t k = 2; k <= nilpotency_order(s) && !power.terms().empty(); ++k) {
        power = power * x;
        result = result + power * RatFunc(Rational(k % 2 == 0 ? -1 : 1, k));
    }
    return result;
}

SlopeSeries pleth_exp(const SlopeSeries& s) {
    if (!s.constant_term().is_zero()) throw PreconditionError("nonzero_constant_term", "Exp needs a series with zero constant term");
    SlopeSeries arg(s.box());
    for (std::int64_t n = 1; n <= nilpotency_order(s); ++n) arg = arg + adams(n, s) * RatFunc(Rational(1, n));
    return series_exp(arg);
}

SlopeSeries pleth_log(const SlopeSeries& s) {
    const SlopeSeries l = series_log(s);
    SlopeSeries result(s.box());
    for (std::int64_t n = 1; n <= nilpotency_order(s); ++n) {
        const int mu = mobius(n);
        if (mu != 0) result = result + adams(n, l) * RatFunc(Rational(mu, n));
    }
    return result;
}

}  // namespace quivmod
