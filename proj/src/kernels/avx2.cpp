// Compiled with -mavx2; only ever called after a runtime CPU check.

#include <immintrin.h>

#include "quivmod/kernels.hpp"

namespace quivmod::kernels::avx2 {

namespace {

inline __m256i load_i32x4_as_i64(const std::int32_t* p) {
    return _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

inline unsigned lane_mask(__m256i m) {
    return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(m)));
}

}  // namespace

void linear_values(std::span<const std::int32_t> coords, std::span<const std::int64_t> weights,
                   std::span<std::int64_t> out) {
    const std::size_t cells = out.size();
    const std::size_t axes = weights.size();
    std::size_t c = 0;
    for (; c + 4 <= cells; c += 4) {
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t a = 0; a < axes; ++a) {
            // _mm256_mul_epi32 multiplies the sign-extended low halves: exact for int32 weights.
            const __m256i w = _mm256_set1_epi64x(weights[a]);
            const __m256i x = load_i32x4_as_i64(coords.data() + a * cells + c);
            acc = _mm256_add_epi64(acc, _mm256_mul_epi32(x, w));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + c), acc);
    }
    for (; c < cells; ++c) {
        std::int64_t acc = 0;
        for (std::size_t a = 0; a < axes; ++a) acc += weights[a] * coords[a * cells + c];
        out[c] = acc;
    }
}

std::size_t first_equal(std::span<const std::int64_t> values, std::int64_t target) noexcept {
    const __m256i t = _mm256_set1_epi64x(target);
    std::size_t i = 0;
    for (; i + 4 <= values.size(); i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data() + i));
        const unsigned m = lane_mask(_mm256_cmpeq_epi64(v, t));
        if (m != 0) return i + static_cast<std::size_t>(__builtin_ctz(m));
    }
    for (; i < values.size(); ++i) {
        if (values[i] == target) return i;
    }
    return values.size();
}

void deformation_flags(std::span<const std::int64_t> base, std::span<const std::int64_t> deformed,
                       std::span<std::uint8_t> flags) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= flags.size(); i += 4) {
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base.data() + i));
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(deformed.data() + i));
        const __m256i b_neg = _mm256_cmpgt_epi64(zero, b);
        const __m256i b_pos = _mm256_cmpgt_epi64(b, zero);
        const __m256i d_neg = _mm256_cmpgt_epi64(zero, d);
        const __m256i d_pos = _mm256_cmpgt_epi64(d, zero);
        const unsigned lost = lane_mask(_mm256_andnot_si256(d_neg, b_neg));
        const unsigned gained = lane_mask(_mm256_andnot_si256(d_pos, b_pos));
        const unsigned dzero = lane_mask(_mm256_cmpeq_epi64(d, zero));
        for (unsigned lane = 0; lane < 4; ++lane) {
            std::uint8_t f = 0;
            if (lost >> lane & 1u) f |= kLostNegativity;
            if (gained >> lane & 1u) f |= kGainedNonPositivity;
            if (dzero >> lane & 1u) f |= kDeformedZero;
            flags[i + lane] = f;
        }
    }
    for (; i < flags.size(); ++i) {
        std::uint8_t f = 0;
        if (base[i] < 0 && deformed[i] >= 0) f |= kLostNegativity;
        if (deformed[i] <= 0 && base[i] > 0) f |= kGainedNonPositivity;
        if (deformed[i] == 0) f |= kDeformedZero;
        flags[i] = f;
    }
}

}  // namespace quivmod::kernels::avx2
