#include <atomic>
#include <cstdlib>

#include "quivmod/error.hpp"
#include "quivmod/kernels.hpp"

namespace quivmod::kernels {

namespace {

Backend detect() noexcept { return avx2_supported() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& backend_slot() noexcept {
    static std::atomic<Backend> slot{detect()};
    return slot;
}

#if defined(QUIVMOD_HAVE_AVX2)
bool fits_fast_path(std::span<const std::int64_t> weights) noexcept {
    // |coord| < 2^31, so sum |w| < 2^31 keeps every partial sum below 2^62.
    std::int64_t sum = 0;
    for (std::int64_t w : weights) {
        if (w > INT32_MAX || w < -INT32_MAX) return false;
        sum += std::llabs(w);
        if (sum >= (std::int64_t{1} << 31)) return false;
    }
    return true;
}
#endif

}  // namespace

bool avx2_supported() noexcept {
#if defined(QUIVMOD_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend active_backend() noexcept { return backend_slot().load(std::memory_order_relaxed); }

void select_backend(Backend backend) {
    if (backend == Backend::avx2 && !avx2_supported()) {
        throw PreconditionError("avx2_unavailable", "AVX2 kernels requested but not supported by this CPU/build");
    }
    backend_slot().store(backend, std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) noexcept {
    return backend == Backend::avx2 ? "avx2" : "scalar";
}

void linear_values(std::span<const std::int32_t> coords, std::span<const std::int64_t> weights,
                   std::span<std::int64_t> out) {
#if defined(QUIVMOD_HAVE_AVX2)
    if (active_backend() == Backend::avx2 && fits_fast_path(weights)) {
        avx2::linear_values(coords, weights, out);
        return;
    }
#endif
    scalar::linear_values(coords, weights, out);
}

std::size_t first_equal(std::span<const std::int64_t> values, std::int64_t target) noexcept {
#if defined(QUIVMOD_HAVE_AVX2)
    if (active_backend() == Backend::avx2) return avx2::first_equal(values, target);
#endif
    return scalar::first_equal(values, target);
}

void deformation_flags(std::span<const std::int64_t> base, std::span<const std::int64_t> deformed,
                       std::span<std::uint8_t> flags) {
#if defined(QUIVMOD_HAVE_AVX2)
    if (active_backend() == Backend::avx2) {
        avx2::deformation_flags(base, deformed, flags);
        return;
    }
#endif
    scalar::deformation_flags(base, deformed, flags);
}

}  // namespace quivmod::kernels
