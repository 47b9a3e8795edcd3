#include "quivmod/quiver.hpp"

#include <numeric>
#include <sstream>

#include "quivmod/error.hpp"
#include "quivmod/kernels.hpp"

namespace quivmod {

// ---------------------------------------------------------------------------
// DimVector / Stability

DimVector::DimVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
    for (std::int64_t c : coords_) {
        if (c < 0) throw InvalidInput("negative_dimension", "dimension vector has a negative coordinate");
    }
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
    std::vector<std::int64_t> c(n, 0);
    c.at(i) = 1;
    return DimVector(std::move(c));
}

std::int64_t DimVector::total() const noexcept {
    return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

bool DimVector::is_zero() const noexcept {
    for (std::int64_t c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

bool DimVector::leq(const DimVector& other) const {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] > other.coords_[i]) return false;
    }
    return true;
}

DimVector DimVector::operator+(const DimVector& other) const {
    std::vector<std::int64_t> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
    return DimVector(std::move(c));
}

DimVector DimVector::operator-(const DimVector& other) const {
    std::vector<std::int64_t> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
    return DimVector(std::move(c));
}

DimVector DimVector::scaled(std::int64_t factor) const {
    std::vector<std::int64_t> c(coords_);
    for (auto& x : c) x *= factor;
    return DimVector(std::move(c));
}

namespace {

template <typename Range>
std::string tuple_string(const Range& r) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& x : r) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << ')';
    return os.str();
}

}  // namespace

std::string DimVector::to_string() const { return tuple_string(coords_); }

std::ostream& operator<<(std::ostream& os, const DimVector& d) { return os << d.to_string(); }

std::int64_t Stability::operator()(const DimVector& d) const {
    if (d.size() != weights_.size()) throw InvalidInput("size_mismatch", "stability and dimension vector sizes differ");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) s += weights_[i] * d[i];
    return s;
}

bool Stability::is_zero() const noexcept {
    for (std::int64_t w : weights_) {
        if (w != 0) return false;
    }
    return true;
}

Stability Stability::operator+(const Stability& other) const {
    std::vector<std::int64_t> w(weights_);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += other.weights_[i];
    return Stability(std::move(w));
}

Stability Stability::operator-(const Stability& other) const {
    std::vector<std::int64_t> w(weights_);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= other.weights_[i];
    return Stability(std::move(w));
}

Stability Stability::scaled(std::int64_t factor) const {
    std::vector<std::int64_t> w(weights_);
    for (auto& x : w) x *= factor;
    return Stability(std::move(w));
}

std::string Stability::to_string() const { return tuple_string(weights_); }

std::ostream& operator<<(std::ostream& os, const Stability& s) { return os << s.to_string(); }

// ---------------------------------------------------------------------------
// Quiver

namespace {

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    return names;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<std::vector<std::int64_t>> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    const std::size_t n = vertices_.size();
    if (arrows_.size() != n) throw InvalidInput("matrix_not_square", "arrow matrix row count differs from vertex count");
    for (const auto& row : arrows_) {
        if (row.size() != n) throw InvalidInput("matrix_not_square", "arrow matrix is not square");
        for (std::int64_t a : row) {
            if (a < 0) throw InvalidInput("negative_arrow_count", "arrow matrix has a negative entry");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (vertices_[i] == vertices_[j]) throw InvalidInput("duplicate_vertex", "vertex name '" + vertices_[i] + "' repeated");
        }
    }
}

Quiver::Quiver(std::vector<std::vector<std::int64_t>> arrows) : Quiver(default_names(arrows.size()), arrows) {}

std::int64_t Quiver::arrow_total() const noexcept {
    std::int64_t s = 0;
    for (const auto& row : arrows_) s = std::accumulate(row.begin(), row.end(), s);
    return s;
}

bool Quiver::is_symmetric() const noexcept {
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (arrows_[i][j] != arrows_[j][i]) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Validation

void check_size(const Quiver& q, const DimVector& d) {
    if (d.size() != q.vertex_count()) {
        throw InvalidInput("size_mismatch", "dimension vector has " + std::to_string(d.size()) + " entries, quiver has " +
                                                std::to_string(q.vertex_count()) + " vertices");
    }
}

void check_size(const Quiver& q, const Stability& theta) {
    if (theta.size() != q.vertex_count()) {
        throw InvalidInput("size_mismatch", "stability has " + std::to_string(theta.size()) + " entries, quiver has " +
                                                std::to_string(q.vertex_count()) + " vertices");
    }
}

void check_size(const Stability& theta, const DimVector& d) {
    if (theta.size() != d.size()) throw InvalidInput("size_mismatch", "stability and dimension vector sizes differ");
}

void check_nonzero(const DimVector& d) {
    if (d.is_zero()) throw PreconditionError("zero_dimension_vector", "dimension vector must be nonzero");
}

// ---------------------------------------------------------------------------
// Forms

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    check_size(q, d);
    check_size(q, e);
    const std::size_t n = q.vertex_count();
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        s += d[i] * e[i];
        for (std::size_t j = 0; j < n; ++j) s -= q.arrows(i, j) * d[i] * e[j];
    }
    return s;
}

std::int64_t antisym_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    return euler_form(q, d, e) - euler_form(q, e, d);
}

std::vector<std::vector<std::int64_t>> euler_matrix(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? 1 : 0) - q.arrows(i, j);
    }
    return m;
}

std::vector<std::vector<std::int64_t>> skew_matrix(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = q.arrows(j, i) - q.arrows(i, j);
    }
    return m;
}

int skew_rank(const Quiver& q) {
    // Bareiss fraction-free elimination with full pivot search.
    const auto skew = skew_matrix(q);
    const std::size_t n = skew.size();
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(skew[i][j]);
    }
    mpz_class prev = 1;
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(a[pivot], a[row]);
        for (std::size_t i = row + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

std::int64_t moduli_dim(const Quiver& q, const DimVector& d) { return 1 - euler_form(q, d, d); }

// ---------------------------------------------------------------------------
// Stability arithmetic

Rational slope(const Stability& theta, const DimVector& d) {
    check_size(theta, d);
    check_nonzero(d);
    Rational r(static_cast<long>(theta(d)), static_cast<unsigned long>(d.total()));
    r.canonicalize();
    return r;
}

bool is_indivisible(const DimVector& d) {
    check_nonzero(d);
    std::int64_t g = 0;
    for (std::int64_t c : d.coords()) g = std::gcd(g, c);
    return g == 1;
}

bool is_coprime(const Stability& theta, const DimVector& d, const Limits& limits) {
    check_size(theta, d);
    check_nonzero(d);
    const LatticeBox box(d.coords(), limits);
    const auto values = box.evaluate(theta.weights());
    const std::int64_t target = values.back();
    // Interior cells only: skip e = 0 (index 0) and e = d (last index).
    const std::span<const std::int64_t> interior(values.data() + 1, values.size() - 2);
    return kernels::first_equal(interior, target) == interior.size();
}

Stability normalize_stability(const Stability& theta, const DimVector& d) {
    check_size(theta, d);
    check_nonzero(d);
    const std::int64_t at_d = theta(d);
    if (at_d == 0) return theta;
    return theta.scaled(d.total()) - Stability::dim(d.size()).scaled(at_d);
}

std::vector<std::vector<std::int64_t>> kernel_basis(const Stability& theta) {
    const std::size_t n = theta.size();
    std::vector<std::vector<std::int64_t>> basis;
    std::size_t p = 0;
    while (p < n && theta[p] == 0) ++p;
    if (p == n) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::int64_t> v(n, 0);
            v[j] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (j == p) continue;
        std::vector<std::int64_t> v(n, 0);
        v[j] = theta[p];
        v[p] -= theta[j];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

std::int64_t skew_on(const std::vector<std::vector<std::int64_t>>& skew, const std::vector<std::int64_t>& x,
                     const std::vector<std::int64_t>& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * skew[i][j] * y[j];
    }
    return s;
}

}  // namespace

bool symmetric_on_kernel(const Quiver& q, const Stability& theta) {
    check_size(q, theta);
    const auto skew = skew_matrix(q);
    const auto basis = kernel_basis(theta);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            if (skew_on(skew, basis[a], basis[b]) != 0) return false;
        }
    }
    return true;
}

bool verifies_eta_identity(const Quiver& q, const Stability& theta, const std::vector<Rational>& eta) {
    const auto skew = skew_matrix(q);
    const std::size_t n = q.vertex_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational rhs = eta[i] * static_cast<long>(theta[j]) - static_cast<long>(theta[i]) * eta[j];
            if (rhs != static_cast<long>(skew[i][j])) return false;
        }
    }
    return true;
}

EtaFactorization eta_factorization(const Quiver& q, const Stability& theta) {
    check_size(q, theta);
    const std::size_t n = q.vertex_count();
    if (!symmetric_on_kernel(q, theta)) {
        throw PreconditionError("kernel_asymmetric", "Euler form is not symmetric on the kernel of the stability");
    }
    EtaFactorization out;
    out.eta.assign(n, Rational(0));
    out.primitive = Stability::zero(n);
    out.scale = 0;
    std::size_t p = 0;
    while (p < n && theta[p] == 0) ++p;
    if (p == n) return out;  // skew form vanishes identically

    // Kernel basis v_j = theta_p e_j - theta_j e_p, complement e_p / theta_p; eta(v_j) = {v_j, e_p/theta_p}.
    const auto skew = skew_matrix(q);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == p) continue;
        Rational v(static_cast<long>(skew[j][p]), static_cast<long>(theta[p]));
        v.canonicalize();
        out.eta[j] = v;
    }
    if (!verifies_eta_identity(q, theta, out.eta)) {
        throw ConsistencyError("eta_identity_failed", "constructed eta does not factor the antisymmetrized form");
    }

    mpz_class lcm = 1;
    for (const auto& x : out.eta) lcm = lcm * x.get_den() / gcd(lcm, x.get_den());
    std::vector<mpz_class> ints(n);
    mpz_class g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ints[i] = out.eta[i].get_num() * (lcm / out.eta[i].get_den());
        g = gcd(g, ints[i]);
    }
    if (g == 0) return out;
    std::size_t first = 0;
    while (ints[first] == 0) ++first;
    if (ints[first] < 0) g = -g;
    std::vector<std::int64_t> prim(n);
    for (std::size_t i = 0; i < n; ++i) prim[i] = mpz_class(ints[i] / g).get_si();
    out.primitive = Stability(std::move(prim));
    out.scale = out.eta[first] / Rational(static_cast<long>(out.primitive[first]));
    return out;
}

}  // namespace quivmod
