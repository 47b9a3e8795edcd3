#include "quivmod/error.hpp"
#include "quivmod/kernels.hpp"

namespace quivmod::kernels::scalar {

void linear_values(std::span<const std::int32_t> coords, std::span<const std::int64_t> weights,
                   std::span<std::int64_t> out) {
    const std::size_t cells = out.size();
    for (std::size_t c = 0; c < cells; ++c) {
        std::int64_t acc = 0;
        for (std::size_t a = 0; a < weights.size(); ++a) {
            std::int64_t term = 0;
            if (__builtin_mul_overflow(weights[a], static_cast<std::int64_t>(coords[a * cells + c]), &term) ||
                __builtin_add_overflow(acc, term, &acc)) {
                throw PreconditionError("integer_overflow", "stability values overflow 64-bit integers");
            }
        }
        out[c] = acc;
    }
}

std::size_t first_equal(std::span<const std::int64_t> values, std::int64_t target) noexcept {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == target) return i;
    }
    return values.size();
}

void deformation_flags(std::span<const std::int64_t> base, std::span<const std::int64_t> deformed,
                       std::span<std::uint8_t> flags) {
    for (std::size_t i = 0; i < flags.size(); ++i) {
        std::uint8_t f = 0;
        if (base[i] < 0 && deformed[i] >= 0) f |= kLostNegativity;
        if (deformed[i] <= 0 && base[i] > 0) f |= kGainedNonPositivity;
        if (deformed[i] == 0) f |= kDeformedZero;
        flags[i] = f;
    }
}

}  // namespace quivmod::kernels::scalar
