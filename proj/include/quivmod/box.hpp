#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace quivmod {

struct Limits {
    /// Upper bound on the number of lattice points any single enumeration may visit.
    std::size_t max_box_cells = 1'000'000;
};

/// The lattice box [0, bound] in mixed radix, last coordinate fastest, so that cell
/// indices follow lexicographic order of the points. Cell 0 is the zero vector and the
/// last cell is the bound itself.
///
/// The index map is linear: index(x + y) = index(x) + index(y) whenever x + y stays
/// inside the box.
class LatticeBox {
public:
    LatticeBox(std::vector<std::int64_t> bound, const Limits& limits);

    std::size_t rank() const noexcept { return bound_.size(); }
    std::size_t cell_count() const noexcept { return cells_; }
    const std::vector<std::int64_t>& bound() const noexcept { return bound_; }

    std::size_t index_of(std::span<const std::int64_t> point) const;
    std::vector<std::int64_t> point(std::size_t index) const;
    std::size_t stride(std::size_t axis) const { return strides_[axis]; }

    /// Coordinates laid out row-major per axis: coordinate `axis` of cell `c` is at
    /// `axis * cell_count() + c`.
    std::span<const std::int32_t> coordinate_table() const noexcept { return table_; }

    /// Linear functional evaluated at every cell, through the active kernel backend.
    std::vector<std::int64_t> evaluate(std::span<const std::int64_t> weights) const;

private:
    std::vector<std::int64_t> bound_;
    std::vector<std::size_t> strides_;
    std::size_t cells_ = 1;
    std::vector<std::int32_t> table_;
};

}  // namespace quivmod
