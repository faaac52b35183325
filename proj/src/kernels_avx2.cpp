#include "skw/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SKW_HAVE_X86 1
#endif

namespace skw::kern::avx2 {

#ifdef SKW_HAVE_X86

namespace {

// r = x mod p for 16-bit lanes, x < 65536.  m = floor(65536 / p).
__attribute__((target("avx2"))) inline __m256i reduce16(__m256i x, __m256i m, __m256i p) {
    __m256i qt = _mm256_mulhi_epu16(x, m);
    __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(qt, p));
    return _mm256_min_epu16(r, _mm256_sub_epi16(r, p));
}

__attribute__((target("avx2"))) inline __m256i gather16(const std::uint16_t* base, __m256i idx) {
    const __m256i lo = _mm256_set1_epi32(0xFFFF);
    return _mm256_and_si256(_mm256_i32gather_epi32(reinterpret_cast<const int*>(base), idx, 2), lo);
}

__attribute__((target("avx2"))) inline __m128i pack32to16(__m256i v) {
    __m256i packed = _mm256_packus_epi32(v, v);
    packed = _mm256_permute4x64_epi64(packed, 0x08);
    return _mm256_castsi256_si128(packed);
}

} // namespace

__attribute__((target("avx2"))) void axpy(const Field& F, Elem* dst, const Elem* src, Elem c, std::size_t n) {
    if (c == 0) return;
    std::size_t i = 0;
    if (F.k() == 1) {
        const unsigned p = F.p();
        const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
        const __m256i vm = _mm256_set1_epi16(static_cast<short>(65536u / p));
        const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
        for (; i + 16 <= n; i += 16) {
            __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
            __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
            __m256i x = _mm256_add_epi16(_mm256_mullo_epi16(s, vc), d);
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce16(x, vm, vp));
        }
        for (; i < n; ++i) dst[i] = static_cast<Elem>((dst[i] + c * src[i]) % p);
        return;
    }
    const std::uint16_t* add = F.add_table();
    const std::uint16_t* mul = F.mul_table();
    if (!add) {
        scalar::axpy(F, dst, src, c, n);
        return;
    }
    const unsigned q = F.q();
    const std::uint16_t* row = mul + static_cast<std::size_t>(c) * q;
    const __m256i vq = _mm256_set1_epi32(static_cast<int>(q));
    for (; i + 8 <= n; i += 8) {
        __m256i s = _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
        __m256i d = _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
        __m256i prod = gather16(row, s);
        __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(d, vq), prod);
        __m256i sum = gather16(add, idx);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), pack32to16(sum));
    }
    for (; i < n; ++i) dst[i] = add[static_cast<std::size_t>(dst[i]) * q + row[src[i]]];
}

__attribute__((target("avx2"))) void scale(const Field& F, Elem* dst, Elem c, std::size_t n) {
    if (c == 1) return;
    if (F.k() == 1 && c != 0) {
        const unsigned p = F.p();
        const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
        const __m256i vm = _mm256_set1_epi16(static_cast<short>(65536u / p));
        const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
        std::size_t i = 0;
        for (; i + 16 <= n; i += 16) {
            __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce16(_mm256_mullo_epi16(d, vc), vm, vp));
        }
        for (; i < n; ++i) dst[i] = static_cast<Elem>((c * dst[i]) % p);
        return;
    }
    const std::uint16_t* mul = F.mul_table();
    if (!mul || c == 0) {
        scalar::scale(F, dst, c, n);
        return;
    }
    const std::uint16_t* row = mul + static_cast<std::size_t>(c) * F.q();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), pack32to16(gather16(row, d)));
    }
    for (; i < n; ++i) dst[i] = row[dst[i]];
}

#else

void axpy(const Field& F, Elem* dst, const Elem* src, Elem c, std::size_t n) { scalar::axpy(F, dst, src, c, n); }
void scale(const Field& F, Elem* dst, Elem c, std::size_t n) { scalar::scale(F, dst, c, n); }

#endif

} // namespace skw::kern::avx2
