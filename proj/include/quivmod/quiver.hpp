#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quivmod/box.hpp"

namespace quivmod {

using Rational = mpq_class;

/// Nonnegative integer vector indexed by the vertices of a quiver.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<std::int64_t> coords);
    DimVector(std::initializer_list<std::int64_t> coords)
        : DimVector(std::vector<std::int64_t>(coords)) {}

    static DimVector zero(std::size_t n) { return DimVector(std::vector<std::int64_t>(n, 0)); }
    static DimVector unit(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

    std::int64_t total() const noexcept;
    bool is_zero() const noexcept;
    /// Componentwise partial order.
    bool leq(const DimVector& other) const;

    DimVector operator+(const DimVector& other) const;
    /// Throws InvalidInput when a coordinate would become negative.
    DimVector operator-(const DimVector& other) const;
    DimVector scaled(std::int64_t factor) const;

    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend auto operator<=>(const DimVector& a, const DimVector& b) { return a.coords_ <=> b.coords_; }

    std::string to_string() const;

private:
    std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const DimVector& d);

/// Integer covector on the vertex lattice.
class Stability {
public:
    Stability() = default;
    explicit Stability(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {}
    Stability(std::initializer_list<std::int64_t> weights)
        : weights_(std::vector<std::int64_t>(weights)) {}

    static Stability zero(std::size_t n) { return Stability(std::vector<std::int64_t>(n, 0)); }
    /// The functional dim(d) = sum of coordinates.
    static Stability dim(std::size_t n) { return Stability(std::vector<std::int64_t>(n, 1)); }

    std::size_t size() const noexcept { return weights_.size(); }
    std::int64_t operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<std::int64_t>& weights() const noexcept { return weights_; }

    std::int64_t operator()(const DimVector& d) const;
    bool is_zero() const noexcept;

    Stability operator+(const Stability& other) const;
    Stability operator-(const Stability& other) const;
    Stability scaled(std::int64_t factor) const;

    friend bool operator==(const Stability&, const Stability&) = default;

    std::string to_string() const;

private:
    std::vector<std::int64_t> weights_;
};

std::ostream& operator<<(std::ostream& os, const Stability& s);

/// Finite quiver: named vertices plus a square matrix of arrow multiplicities,
/// entry (i,j) counting arrows i -> j (loops on the diagonal).
class Quiver {
public:
    Quiver() = default;
    explicit Quiver(std::vector<std::string> vertices, std::vector<std::vector<std::int64_t>> arrows);
    /// Vertices named "v1".."vn".
    explicit Quiver(std::vector<std::vector<std::int64_t>> arrows);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<std::vector<std::int64_t>>& arrow_matrix() const noexcept { return arrows_; }
    std::int64_t arrows(std::size_t i, std::size_t j) const { return arrows_[i][j]; }
    std::int64_t arrow_total() const noexcept;

    bool is_symmetric() const noexcept;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::vector<std::string> vertices_;
    std::vector<std::vector<std::int64_t>> arrows_;
};

// Bilinear-form algebra on the vertex lattice.

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
std::int64_t antisym_form(const Quiver& q, const DimVector& d, const DimVector& e);
/// Matrix of the Euler form on unit vectors.
std::vector<std::vector<std::int64_t>> euler_matrix(const Quiver& q);
/// Matrix of the antisymmetrized form on unit vectors.
std::vector<std::vector<std::int64_t>> skew_matrix(const Quiver& q);
int skew_rank(const Quiver& q);

/// Expected dimension 1 - <d,d> of the stable moduli space (nonemptiness unchecked).
std::int64_t moduli_dim(const Quiver& q, const DimVector& d);

Rational slope(const Stability& theta, const DimVector& d);
bool is_indivisible(const DimVector& d);
bool is_coprime(const Stability& theta, const DimVector& d, const Limits& limits = {});

/// total(d) * theta - theta(d) * dim, or theta itself when theta(d) = 0.
Stability normalize_stability(const Stability& theta, const DimVector& d);

/// Integer basis of Ker(theta) in the rational span of the vertex lattice.
std::vector<std::vector<std::int64_t>> kernel_basis(const Stability& theta);
bool symmetric_on_kernel(const Quiver& q, const Stability& theta);

struct EtaFactorization {
    /// Exact covector with {d,e} = eta(d)theta(e) - theta(d)eta(e); normalized so that
    /// eta vanishes on the first vertex where theta is nonzero.
    std::vector<Rational> eta;
    /// Primitive integer multiple of eta, first nonzero weight positive (zero if eta = 0).
    Stability primitive;
    /// eta = scale * primitive.
    Rational scale;
};

EtaFactorization eta_factorization(const Quiver& q, const Stability& theta);

/// Evaluates {d,e} == eta(d)theta(e) - theta(d)eta(e) on all pairs of unit vectors.
bool verifies_eta_identity(const Quiver& q, const Stability& theta, const std::vector<Rational>& eta);

// Argument validation shared by all modules.
void check_size(const Quiver& q, const DimVector& d);
void check_size(const Quiver& q, const Stability& theta);
void check_size(const Stability& theta, const DimVector& d);
void check_nonzero(const DimVector& d);

}  // namespace quivmod
