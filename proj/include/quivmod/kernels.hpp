#pragma once

// Integer inner loops of the box enumerations. Each kernel has a scalar reference
// implementation and an AVX2 variant; the dispatching entry points pick one at run time
// based on CPU support and the selected backend. Both variants produce identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace quivmod::kernels {

enum class Backend { scalar, avx2 };

bool avx2_supported() noexcept;
Backend active_backend() noexcept;
/// Throws PreconditionError when asking for AVX2 on a CPU without it.
void select_backend(Backend backend);
std::string_view backend_name(Backend backend) noexcept;

/// Condition bits reported by deformation_flags.
inline constexpr std::uint8_t kLostNegativity = 1;   // base < 0 but deformed >= 0
inline constexpr std::uint8_t kGainedNonPositivity = 2;  // deformed <= 0 but base > 0
inline constexpr std::uint8_t kDeformedZero = 4;     // deformed == 0

/// out[c] = sum_a weights[a] * coords[a * cells + c], cells = out.size().
void linear_values(std::span<const std::int32_t> coords, std::span<const std::int64_t> weights,
                   std::span<std::int64_t> out);

/// Index of the first entry equal to target, or values.size().
std::size_t first_equal(std::span<const std::int64_t> values, std::int64_t target) noexcept;

/// Per-cell bitmask of the three generic-deformation conditions.
void deformation_flags(std::span<const std::int64_t> base, std::span<const std::int64_t> deformed,
                       std::span<std::uint8_t> flags);

namespace scalar {
// Overflow-checked; throws PreconditionError("integer_overflow").
void linear_values(std::span<const std::int32_t> coords, std::span<const std::int64_t> weights,
                   std::span<std::int64_t> out);
std::size_t first_equal(std::span<const std::int64_t> values, std::int64_t target) noexcept;
void deformation_flags(std::span<const std::int64_t> base, std::span<const std::int64_t> deformed,
                       std::span<std::uint8_t> flags);
}  // namespace scalar

#if defined(QUIVMOD_HAVE_AVX2)
namespace avx2 {
// Requires sum |weights| < 2^31 so that no partial sum can overflow.
void linear_values(std::span<const std::int32_t> coords, std::span<const std::int64_t> weights,
                   std::span<std::int64_t> out);
std::size_t first_equal(std::span<const std::int64_t> values, std::int64_t target) noexcept;
void deformation_flags(std::span<const std::int64_t> base, std::span<const std::int64_t> deformed,
                       std::span<std::uint8_t> flags);
}  // namespace avx2
#endif

}  // namespace quivmod::kernels
