#include "quivmod/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "quivmod/error.hpp"

namespace quivmod {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1, Rational(0));
    v[power] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Poly::valuation() const noexcept {
    std::size_t i = 0;
    while (i < coeffs_.size() && coeffs_[i] == 0) ++i;
    return i == coeffs_.size() ? 0 : i;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw PreconditionError("division_by_zero", "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo(rem.size() - b.coeffs_.size() + 1, Rational(0));
    const Rational inv_lead = 1 / b.lead();
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational c = rem[k + db] * inv_lead;
        if (c == 0) continue;
        quo[k] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw ConsistencyError("inexact_division", "polynomial division left a remainder");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? Poly{} : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return *this * (1 / lead());
}

Poly Poly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> r(k, Rational(0));
    r.insert(r.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(r));
}

Poly Poly::shifted_down(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) throw ConsistencyError("inexact_shift", "polynomial not divisible by requested power of v");
    }
    if (k >= coeffs_.size()) return {};
    return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Poly Poly::inflate(std::size_t n) const {
    if (is_zero() || n == 1) return *this;
    std::vector<Rational> r((coeffs_.size() - 1) * n + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i * n] = coeffs_[i];
    return Poly(std::move(r));
}

// ---------------------------------------------------------------------------
// HalfLaurent

HalfLaurent::HalfLaurent(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

HalfLaurent::HalfLaurent(long c) {
    if (c != 0) terms_.emplace(0, Rational(c));
}

HalfLaurent::HalfLaurent(const Rational& c) {
    if (c != 0) terms_.emplace(0, c);
}

HalfLaurent HalfLaurent::monomial(const Rational& c, std::int64_t v_power) {
    HalfLaurent r;
    if (c != 0) r.terms_.emplace(v_power, c);
    return r;
}

HalfLaurent HalfLaurent::from_poly(const Poly& p, std::int64_t shift) {
    HalfLaurent r;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] != 0) r.terms_.emplace(static_cast<std::int64_t>(i) + shift, p.coeffs()[i]);
    }
    return r;
}

Rational HalfLaurent::coeff(std::int64_t v_power) const {
    auto it = terms_.find(v_power);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t HalfLaurent::min_power() const {
    if (terms_.empty()) throw PreconditionError("zero_polynomial", "zero Laurent polynomial has no lowest term");
    return terms_.begin()->first;
}

std::int64_t HalfLaurent::max_power() const {
    if (terms_.empty()) throw PreconditionError("zero_polynomial", "zero Laurent polynomial has no degree");
    return terms_.rbegin()->first;
}

bool HalfLaurent::is_integral_in_q() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first % 2 == 0; });
}

bool HalfLaurent::is_q_polynomial_with_integer_coeffs() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
        return kv.first % 2 == 0 && kv.first >= 0 && kv.second.get_den() == 1;
    });
}

std::int64_t HalfLaurent::q_degree() const {
    if (!is_integral_in_q()) throw PreconditionError("half_integral_powers", "Laurent polynomial has odd v-powers");
    return max_power() / 2;
}

HalfLaurent HalfLaurent::operator+(const HalfLaurent& o) const {
    HalfLaurent r = *this;
    r += o;
    return r;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

HalfLaurent HalfLaurent::operator-(const HalfLaurent& o) const { return *this + (-o); }

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

HalfLaurent HalfLaurent::operator*(const HalfLaurent& o) const {
    Terms acc;
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) acc[a + b] += ca * cb;
    }
    return HalfLaurent(std::move(acc));
}

HalfLaurent HalfLaurent::operator*(const Rational& c) const {
    if (c == 0) return {};
    HalfLaurent r = *this;
    for (auto& kv : r.terms_) kv.second *= c;
    return r;
}

HalfLaurent HalfLaurent::pow(std::uint64_t n) const {
    HalfLaurent result(1L), base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

HalfLaurent HalfLaurent::inflate(std::int64_t n) const {
    Terms t;
    for (const auto& [k, c] : terms_) t.emplace(k * n, c);
    return HalfLaurent(std::move(t));
}

std::pair<std::int64_t, Poly> HalfLaurent::to_shifted_poly() const {
    if (terms_.empty()) return {0, Poly{}};
    const std::int64_t lo = min_power();
    std::vector<Rational> c(static_cast<std::size_t>(max_power() - lo) + 1, Rational(0));
    for (const auto& [k, v] : terms_) c[static_cast<std::size_t>(k - lo)] = v;
    return {lo, Poly(std::move(c))};
}

namespace {

std::string q_exponent(std::int64_t v_power) {
    if (v_power % 2 == 0) {
        const std::int64_t k = v_power / 2;
        return k == 1 ? "q" : "q^" + std::to_string(k);
    }
    return "q^(" + std::to_string(v_power) + "/2)";
}

}  // namespace

std::string HalfLaurent::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << rational_string(mag);
        } else if (mag == 1) {
            os << q_exponent(k);
        } else {
            os << rational_string(mag) << '*' << q_exponent(k);
        }
    }
    return os.str();
}

std::string rational_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    const auto slash = s.find('/');
    const auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return false;
        }
        return true;
    };
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw InvalidInput("bad_rational", "cannot parse rational '" + s + "'");
    }
    mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
    if (d == 0) throw InvalidInput("bad_rational", "zero denominator in '" + s + "'");
    r = Rational(n, d);
    r.canonicalize();
    return r;
}

}  // namespace quivmod
