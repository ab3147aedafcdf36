#include <cstdlib>
#include <string_view>

#include "normsym/kernels.hpp"

namespace normsym::kernels {

#ifdef NORMSYM_HAVE_AVX2_KERNELS
namespace detail { KernelTable const &avx2Table(); }
#endif

KernelTable const *avx2Kernels()
{
#ifdef NORMSYM_HAVE_AVX2_KERNELS
  static bool const supported = __builtin_cpu_supports("avx2");
  if (supported)
    return &detail::avx2Table();
#endif
  return nullptr;
}

KernelTable const &activeKernels()
{
  static KernelTable const &table = [] () -> KernelTable const & {
    char const *isa = std::getenv("NORMSYM_ISA");
    if (isa && std::string_view(isa) == "scalar")
      return scalarKernels();

    if (auto const *fast = avx2Kernels())
      return *fast;

    return scalarKernels();
  }();

  return table;
}

} // namespace normsym::kernels
