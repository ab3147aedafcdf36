#include <doctest.h>

#include <random>
#include <vector>

#include "normsym/gfp.hpp"
#include "normsym/kernels.hpp"

using namespace normsym;
using namespace normsym::kernels;

namespace {

std::vector<Elem> randomResidues(std::mt19937_64 &rng, unsigned p, std::size_t len)
{
  std::vector<Elem> v(len);
  for (auto &x : v)
    x = static_cast<Elem>(rng() % p);
  return v;
}

void checkAgainstReference(KernelTable const &fast)
{
  auto const &ref = scalarKernels();
  std::mt19937_64 rng(7);

  for (unsigned p = 2; p <= MaxPrime; ++p) {
    if (!isPrime(p))
      continue;
    for (std::size_t len : {0u, 1u, 15u, 16u, 17u, 31u, 32u, 33u, 64u, 100u, 257u}) {
      auto src = randomResidues(rng, p, len);
      auto dst = randomResidues(rng, p, len);
      unsigned a = static_cast<unsigned>(rng() % p);

      auto d1 = dst, d2 = dst;
      ref.axpy(d1.data(), src.data(), a, p, len);
      fast.axpy(d2.data(), src.data(), a, p, len);
      REQUIRE(d1 == d2);

      auto s1 = src, s2 = src;
      ref.scale(s1.data(), a, p, len);
      fast.scale(s2.data(), a, p, len);
      REQUIRE(s1 == s2);

      REQUIRE(ref.weight(src.data(), len) == fast.weight(src.data(), len));
    }
  }
}

} // anonymous namespace

TEST_CASE("scalar axpy, scale and weight by hand")
{
  auto const &k = scalarKernels();
  std::vector<Elem> dst{1, 2, 0, 4}, src{4, 4, 1, 0};
  k.axpy(dst.data(), src.data(), 3, 5, 4);
  CHECK(dst == std::vector<Elem>{3, 4, 3, 4});

  k.scale(dst.data(), 2, 5, 4);
  CHECK(dst == std::vector<Elem>{1, 3, 1, 3});

  std::vector<Elem> w{0, 1, 0, 2, 0};
  CHECK(k.weight(w.data(), 5) == 2);
}

TEST_CASE("AVX2 kernels match the scalar reference")
{
  auto const *fast = avx2Kernels();
  if (!fast) {
    MESSAGE("AVX2 kernels unavailable on this machine");
    return;
  }
  checkAgainstReference(*fast);
}

TEST_CASE("extreme residues do not overflow")
{
  auto const *fast = avx2Kernels();
  for (unsigned p : {2u, 3u, 251u}) {
    std::vector<Elem> src(64, static_cast<Elem>(p - 1)), dst(64, static_cast<Elem>(p - 1));
    auto expect = dst;
    scalarKernels().axpy(expect.data(), src.data(), p - 1, p, 64);
    for (auto x : expect)
      CHECK(x == static_cast<Elem>(((p - 1) + (p - 1) * (p - 1)) % p));
    if (fast) {
      fast->axpy(dst.data(), src.data(), p - 1, p, 64);
      CHECK(dst == expect);
    }
  }
}

TEST_CASE("active table is one of the two")
{
  auto const &active = activeKernels();
  CHECK((active.name == scalarKernels().name ||
         (avx2Kernels() && active.name == avx2Kernels()->name)));
}
