#include "quivmod/box.hpp"

#include <limits>

#include "quivmod/error.hpp"
#include "quivmod/kernels.hpp"

namespace quivmod {

LatticeBox::LatticeBox(std::vector<std::int64_t> bound, const Limits& limits) : bound_(std::move(bound)) {
    strides_.assign(bound_.size(), 1);
    std::size_t cells = 1;
    for (std::size_t k = bound_.size(); k-- > 0;) {
        const std::int64_t b = bound_[k];
        if (b < 0) throw InvalidInput("negative_coordinate", "box bound has a negative coordinate");
        if (b >= std::numeric_limits<std::int32_t>::max()) throw BoxGuardExceeded(std::numeric_limits<std::size_t>::max(), limits.max_box_cells);
        strides_[k] = cells;
        const auto extent = static_cast<std::size_t>(b) + 1;
        if (cells > limits.max_box_cells / extent) {
            // Report a saturated count; the exact product may not fit.
            long double approx = 1;
            for (std::int64_t x : bound_) approx *= static_cast<long double>(x + 1);
            const auto reported = approx > static_cast<long double>(std::numeric_limits<std::size_t>::max())
                                      ? std::numeric_limits<std::size_t>::max()
                                      : static_cast<std::size_t>(approx);
            throw BoxGuardExceeded(reported, limits.max_box_cells);
        }
        cells *= extent;
    }
    cells_ = cells;

    table_.resize(bound_.size() * cells_);
    for (std::size_t k = 0; k < bound_.size(); ++k) {
        const std::size_t period = strides_[k] * static_cast<std::size_t>(bound_[k] + 1);
        std::int32_t* row = table_.data() + k * cells_;
        for (std::size_t c = 0; c < cells_; ++c) row[c] = static_cast<std::int32_t>((c % period) / strides_[k]);
    }
}

std::size_t LatticeBox::index_of(std::span<const std::int64_t> point) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < bound_.size(); ++k) idx += static_cast<std::size_t>(point[k]) * strides_[k];
    return idx;
}

std::vector<std::int64_t> LatticeBox::point(std::size_t index) const {
    std::vector<std::int64_t> p(bound_.size());
    for (std::size_t k = 0; k < bound_.size(); ++k) {
        p[k] = static_cast<std::int64_t>(index / strides_[k]);
        index %= strides_[k];
    }
    return p;
}

std::vector<std::int64_t> LatticeBox::evaluate(std::span<const std::int64_t> weights) const {
    std::vector<std::int64_t> out(cells_, 0);
    if (!bound_.empty()) kernels::linear_values(table_, weights, out);
    return out;
}

}  // namespace quivmod
