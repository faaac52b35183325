#include "skw/kernels.hpp"

#include "skw/error.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace skw::kern {

namespace scalar {

void axpy(const Field& F, Elem* dst, const Elem* src, Elem c, std::size_t n) {
    if (c == 0) return;
    const unsigned q = F.q();
    if (F.k() == 1) {
        const unsigned p = F.p();
        for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<Elem>((dst[i] + c * src[i]) % p);
        return;
    }
    const std::uint16_t* add = F.add_table();
    const std::uint16_t* mul = F.mul_table();
    if (add) {
        const std::uint16_t* row = mul + static_cast<std::size_t>(c) * q;
        for (std::size_t i = 0; i < n; ++i) dst[i] = add[static_cast<std::size_t>(dst[i]) * q + row[src[i]]];
        return;
    }
    for (std::size_t i = 0; i < n; ++i) dst[i] = F.add(dst[i], F.mul(c, src[i]));
}

void scale(const Field& F, Elem* dst, Elem c, std::size_t n) {
    if (c == 1) return;
    if (c == 0) {
        std::memset(dst, 0, n * sizeof(Elem));
        return;
    }
    if (F.k() == 1) {
        const unsigned p = F.p();
        for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<Elem>((c * dst[i]) % p);
        return;
    }
    const std::uint16_t* mul = F.mul_table();
    if (mul) {
        const std::uint16_t* row = mul + static_cast<std::size_t>(c) * F.q();
        for (std::size_t i = 0; i < n; ++i) dst[i] = row[dst[i]];
        return;
    }
    for (std::size_t i = 0; i < n; ++i) dst[i] = F.mul(c, dst[i]);
}

} // namespace scalar

namespace {

Backend detect() {
    const char* env = std::getenv("SKWLAB_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<int>& current() {
    static std::atomic<int> b{static_cast<int>(detect())};
    return b;
}

} // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend active_backend() {
    return static_cast<Backend>(current().load(std::memory_order_relaxed));
}

void set_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_supported()) throw UsageError("AVX2 not available on this CPU");
    current().store(static_cast<int>(b));
}

std::string backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

void axpy(const Field& F, Elem* dst, const Elem* src, Elem c, std::size_t n) {
    if (active_backend() == Backend::Avx2)
        avx2::axpy(F, dst, src, c, n);
    else
        scalar::axpy(F, dst, src, c, n);
}

void scale(const Field& F, Elem* dst, Elem c, std::size_t n) {
    if (active_backend() == Backend::Avx2)
        avx2::scale(F, dst, c, n);
    else
        scalar::scale(F, dst, c, n);
}

} // namespace skw::kern
