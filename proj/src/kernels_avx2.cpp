#include <immintrin.h>

#include "normsym/kernels.hpp"

namespace normsym::kernels {

namespace detail {

namespace {

// Reduces sixteen 16-bit lanes x < 2^16 modulo p using m = ceil(2^16 / p).
// The estimated quotient is exact or one too large, so a single conditional
// add of p repairs the remainder.
inline __m256i reduce16(__m256i x, __m256i vm, __m256i vp)
{
  __m256i q = _mm256_mulhi_epu16(x, vm);
  __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(q, vp));
  __m256i neg = _mm256_srai_epi16(r, 15);
  return _mm256_add_epi16(r, _mm256_and_si256(neg, vp));
}

inline __m256i packLanes(__m256i lo, __m256i hi)
{
  return _mm256_permute4x64_epi64(_mm256_packus_epi16(lo, hi), 0xD8);
}

void axpyAvx2(Elem *dst, Elem const *src, unsigned a, unsigned p,
              std::size_t len)
{
  if (a == 0)
    return;

  __m256i const va = _mm256_set1_epi16(static_cast<short>(a));
  __m256i const vp = _mm256_set1_epi16(static_cast<short>(p));
  __m256i const vm = _mm256_set1_epi16(
    static_cast<short>((65536u + p - 1) / p));

  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<__m256i const *>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i const *>(dst + i));

    __m256i slo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(s));
    __m256i shi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(s, 1));
    __m256i dlo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(d));
    __m256i dhi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(d, 1));

    __m256i xlo = _mm256_add_epi16(_mm256_mullo_epi16(slo, va), dlo);
    __m256i xhi = _mm256_add_epi16(_mm256_mullo_epi16(shi, va), dhi);

    __m256i out = packLanes(reduce16(xlo, vm, vp), reduce16(xhi, vm, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), out);
  }

  for (; i < len; ++i)
    dst[i] = static_cast<Elem>((dst[i] + a * src[i]) % p);
}

void scaleAvx2(Elem *v, unsigned a, unsigned p, std::size_t len)
{
  __m256i const va = _mm256_set1_epi16(static_cast<short>(a));
  __m256i const vp = _mm256_set1_epi16(static_cast<short>(p));
  __m256i const vm = _mm256_set1_epi16(
    static_cast<short>((65536u + p - 1) / p));

  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<__m256i const *>(v + i));
    __m256i lo = _mm256_mullo_epi16(
      _mm256_cvtepu8_epi16(_mm256_castsi256_si128(s)), va);
    __m256i hi = _mm256_mullo_epi16(
      _mm256_cvtepu8_epi16(_mm256_extracti128_si256(s, 1)), va);

    __m256i out = packLanes(reduce16(lo, vm, vp), reduce16(hi, vm, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(v + i), out);
  }

  for (; i < len; ++i)
    v[i] = static_cast<Elem>((a * v[i]) % p);
}

std::size_t weightAvx2(Elem const *v, std::size_t len)
{
  __m256i const zero = _mm256_setzero_si256();

  std::size_t w = 0;
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<__m256i const *>(v + i));
    auto zeros = static_cast<unsigned>(
      _mm256_movemask_epi8(_mm256_cmpeq_epi8(x, zero)));
    w += 32 - static_cast<std::size_t>(__builtin_popcount(zeros));
  }

  for (; i < len; ++i)
    w += v[i] != 0;

  return w;
}

} // anonymous namespace

KernelTable const &avx2Table()
{
  static KernelTable const table{"avx2", axpyAvx2, scaleAvx2, weightAvx2};
  return table;
}

} // namespace detail

} // namespace normsym::kernels
