#pragma once

#include <span>

#include "srw/galois.hpp"

namespace srw {

/// Elementwise dst[i] += src[i] in F_q. Hot loop of codeword enumeration.
/// Dispatches at runtime: characteristic-2 fields use a XOR kernel, odd prime
/// fields a add-and-reduce kernel (SIMD where the CPU supports it); odd
/// extension fields fall back to the scalar digitwise path.
void vec_add(const Field& F, std::span<Elem> dst, std::span<const Elem> src);

/// True when a SIMD code path is compiled in and supported by this CPU.
bool simd_available();

/// Reference implementations, exposed for equivalence tests.
void vec_add_scalar(const Field& F, std::span<Elem> dst, std::span<const Elem> src);
void vec_add_simd(const Field& F, std::span<Elem> dst, std::span<const Elem> src);

}  // namespace srw
