#include <doctest.h>

#include "normsym/dihedral.hpp"
#include "normsym/generate.hpp"
#include "normsym/oracle.hpp"
#include "support.hpp"

using namespace testing;

namespace {

bool isPowerOf(BigInt x, unsigned q)
{
  while (x > 1 && x % q == 0)
    x /= q;
  return x == 1;
}

// Structural facts that must hold for every dihedral-class instance.
void checkSylow(DihedralInstance const &d)
{
  REQUIRE(d.orderP * d.order2 == d.order);
  REQUIRE(isPowerOf(d.orderP, d.p));
  REQUIRE(isPowerOf(d.order2, 2));
  REQUIRE(orderOf(d.Hp) == d.orderP);
  REQUIRE(orderOf(d.H2) == d.order2);

  StabChain hp(d.Hp);
  for (auto const &g : d.H.generators) {
    for (auto const &x : d.Hp.generators)
      REQUIRE(hp.contains(x.conjugate(g)));
  }
  for (auto const &t : d.H2.generators) {
    for (auto a : d.alpha)
      REQUIRE(t[a] == a);
  }
}

} // anonymous namespace

TEST_CASE("buildDihedral on the diagonal D6")
{
  auto h = group(6, {"(1 2 3)(4 5 6)", "(2 3)(5 6)"});
  auto d = buildDihedral(h, 3);
  CHECK(d.order == 6);
  CHECK(sameGroup(d.Hp, group(6, {"(1 2 3)(4 5 6)"})));
  CHECK(d.alpha == std::vector<Point>{0, 3});
  checkSylow(d);
}

TEST_CASE("buildDihedral rejects groups outside the class")
{
  CHECK_THROWS_AS(buildDihedral(group(6, {"(1 2 3)(4 5 6)"}), 3), NotInClass);
  CHECK_THROWS_AS(buildDihedral(group(4, {"(1 2)", "(3 4)"}), 2), NotInClass);
  CHECK_THROWS_AS(buildDihedral(group(4, {"(1 2 3 4)", "(1 3)"}), 3), NotInClass);
}

TEST_CASE("single orbit")
{
  auto d = buildDihedral(group(3, {"(1 2 3)", "(2 3)"}), 3);
  CHECK(normalizerDihedral(d).order == 6);

  auto d5 = buildDihedral(group(5, {"(1 2 3 4 5)", "(2 5)(3 4)"}), 5);
  CHECK(normalizerDihedral(d5).order == 20);  // AGL(1,5)
}

TEST_CASE("thetaMap of the identity")
{
  auto d = buildDihedral(group(6, {"(1 2 3)", "(4 5 6)", "(2 3)(5 6)"}), 3);
  auto t = thetaMap(d, Permutation(6));
  REQUIRE(t);
  CHECK(*t == std::vector<std::size_t>{0, 1});
}

TEST_CASE("agrees with brute force on two orbits of three points")
{
  std::vector<std::vector<std::string>> cases{
      {"(1 2 3)", "(4 5 6)", "(2 3)", "(5 6)"},
      {"(1 2 3)", "(4 5 6)", "(2 3)(5 6)"},
      {"(1 2 3)(4 5 6)", "(2 3)(5 6)"},
      {"(1 2 3)(4 6 5)", "(2 3)(5 6)"},
      {"(1 2 3)(4 5 6)", "(2 3)(4 5)"},
      {"(1 2 3)", "(4 5 6)", "(1 2)(4 6)"},
  };
  for (auto const &gens : cases) {
    auto h = group(6, gens);
    auto d = buildDihedral(h, 3);
    checkSylow(d);
    auto res = normalizerDihedral(d);
    auto brute = bruteNormalizer(h);
    REQUIRE(res.order == brute.size());
    StabChain chain(PermGroup(6, res.generators));
    for (auto const &g : brute)
      REQUIRE(chain.contains(g));
  }
}

TEST_CASE("random larger instances")
{
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    unsigned p = seed % 2 ? 3 : 5;
    std::size_t k = 2 + seed % 4, dim = 1 + seed % k;
    auto h = randomDihedralGroup(p, k, dim, seed);
    auto d = buildDihedral(h, p);
    checkSylow(d);
    auto res = normalizerDihedral(d);
    for (auto const &g : res.generators) {
      for (auto const &x : h.generators)
        REQUIRE(StabChain(h).contains(x.conjugate(g)));
    }
    REQUIRE(res.order % d.order == 0);
  }
}
