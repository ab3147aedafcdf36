#include "normsym/kernels.hpp"

namespace normsym::kernels {

namespace {

void axpyScalar(Elem *dst, Elem const *src, unsigned a, unsigned p,
                std::size_t len)
{
  if (a == 0)
    return;

  for (std::size_t i = 0; i < len; ++i)
    dst[i] = static_cast<Elem>((dst[i] + a * src[i]) % p);
}

void scaleScalar(Elem *v, unsigned a, unsigned p, std::size_t len)
{
  for (std::size_t i = 0; i < len; ++i)
    v[i] = static_cast<Elem>((a * v[i]) % p);
}

std::size_t weightScalar(Elem const *v, std::size_t len)
{
  std::size_t w = 0;
  for (std::size_t i = 0; i < len; ++i)
    w += v[i] != 0;
  return w;
}

} // anonymous namespace

KernelTable const &scalarKernels()
{
  static KernelTable const table{"scalar", axpyScalar, scaleScalar,
                                 weightScalar};
  return table;
}

} // namespace normsym::kernels
