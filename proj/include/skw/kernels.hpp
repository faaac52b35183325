#pragma once

#include "skw/field.hpp"

#include <cstddef>
#include <string>

namespace skw::kern {

enum class Backend { Scalar, Avx2 };

// dst[i] += c * src[i]
void axpy(const Field& F, Elem* dst, const Elem* src, Elem c, std::size_t n);
// dst[i] *= c
void scale(const Field& F, Elem* dst, Elem c, std::size_t n);

Backend active_backend();
// Force a backend (tests).  Selecting Avx2 on a machine without it throws.
void set_backend(Backend b);
bool avx2_supported();
std::string backend_name(Backend b);

namespace scalar {
void axpy(const Field& F, Elem* dst, const Elem* src, Elem c, std::size_t n);
void scale(const Field& F, Elem* dst, Elem c, std::size_t n);
} // namespace scalar

namespace avx2 {
void axpy(const Field& F, Elem* dst, const Elem* src, Elem c, std::size_t n);
void scale(const Field& F, Elem* dst, Elem c, std::size_t n);
} // namespace avx2

} // namespace skw::kern
