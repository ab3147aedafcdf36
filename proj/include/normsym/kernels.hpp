#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Byte-vector arithmetic modulo a small prime. Every kernel exists as a
// portable scalar reference and, on x86-64, as an AVX2 variant chosen at
// runtime. Set NORMSYM_ISA=scalar in the environment to force the reference.

namespace normsym::kernels {

using Elem = std::uint8_t;

struct KernelTable {
  std::string_view name;
  // dst[i] = (dst[i] + a * src[i]) mod p, for a < p <= 251 and dst, src < p.
  void (*axpy)(Elem *dst, Elem const *src, unsigned a, unsigned p,
               std::size_t len);
  // v[i] = (a * v[i]) mod p
  void (*scale)(Elem *v, unsigned a, unsigned p, std::size_t len);
  // number of nonzero bytes
  std::size_t (*weight)(Elem const *v, std::size_t len);
};

KernelTable const &scalarKernels();

// nullptr when the build or the CPU lacks AVX2.
KernelTable const *avx2Kernels();

KernelTable const &activeKernels();

inline void axpy(Elem *dst, Elem const *src, unsigned a, unsigned p,
                 std::size_t len)
{ activeKernels().axpy(dst, src, a, p, len); }

inline void scale(Elem *v, unsigned a, unsigned p, std::size_t len)
{ activeKernels().scale(v, a, p, len); }

inline std::size_t weight(Elem const *v, std::size_t len)
{ return activeKernels().weight(v, len); }

} // namespace normsym::kernels
