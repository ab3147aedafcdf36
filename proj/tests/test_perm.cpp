#include <doctest.h>

#include <numeric>

#include "support.hpp"

using namespace testing;

TEST_CASE("permutation arithmetic acts on the right")
{
  auto a = cyc(3, "(1 2)"), b = cyc(3, "(2 3)");
  // 1 -> 2 under a, then 2 -> 3 under b
  CHECK((a * b)[0] == 2);
  CHECK((a * b) == cyc(3, "(1 3 2)"));
  CHECK(a.conjugate(b) == cyc(3, "(1 3)"));
  CHECK(cyc(5, "(1 2 3 4 5)").pow(-1) == cyc(5, "(1 5 4 3 2)"));
  CHECK(cyc(4, "(1 2)(3 4)").str() == "(1 2)(3 4)");
  CHECK(Permutation(3).str() == "()");
}

TEST_CASE("orbitsOf")
{
  CHECK(orbitsOf(group(4, {"(1 2)(3 4)"})) ==
        std::vector<std::vector<Point>>{{0, 1}, {2, 3}});
  CHECK(orbitsOf(PermGroup(3, {})) == std::vector<std::vector<Point>>{{0}, {1}, {2}});
  CHECK(orbitsOf(group(6, {"(1 2 3)(4 5 6)", "(1 2 3)"})) ==
        std::vector<std::vector<Point>>{{0, 1, 2}, {3, 4, 5}});
  std::vector<Point> dom{3};
  CHECK(orbitsOf(group(6, {"(1 2 3)(4 5 6)"}), dom) ==
        std::vector<std::vector<Point>>{{3, 4, 5}});
}

TEST_CASE("restrictTo")
{
  std::vector<Point> d12{0, 1}, d456{3, 4, 5}, d1{0};
  CHECK(restrictTo(cyc(4, "(1 2)(3 4)"), d12) == cyc(4, "(1 2)"));
  CHECK(restrictTo(Permutation(4), d12).isIdentity());
  CHECK(restrictTo(cyc(6, "(1 2 3)(4 5 6)"), d456) == cyc(6, "(4 5 6)"));
  CHECK_THROWS(restrictTo(cyc(4, "(1 2)"), d1));
}

TEST_CASE("restrictions to complementary invariant sets multiply back")
{
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    std::vector<Point> a(4), b(4);
    std::iota(a.begin(), a.end(), Point{0});
    std::iota(b.begin(), b.end(), Point{4});
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::vector<Point> img(8);
    for (Point i = 0; i < 4; ++i) {
      img[i] = a[i];
      img[4 + i] = b[i];
    }
    auto g = Permutation::fromImages(img);
    std::vector<Point> lo{0, 1, 2, 3}, hi{4, 5, 6, 7};
    REQUIRE(restrictTo(g, lo) * restrictTo(g, hi) == g);
  }
}

TEST_CASE("conjugacyWitness")
{
  std::vector<Point> d{0, 1, 2};
  auto w = conjugacyWitness(cyc(3, "(1 2 3)"), cyc(3, "(1 3 2)"), d);
  REQUIRE(w);
  CHECK(*w == cyc(3, "(2 3)"));

  auto same = conjugacyWitness(cyc(3, "(1 2 3)"), cyc(3, "(1 2 3)"), d);
  REQUIRE(same);
  CHECK(same->isIdentity());

  CHECK_FALSE(conjugacyWitness(cyc(3, "(1 2)"), cyc(3, "(1 2 3)"), d));
}

TEST_CASE("conjugacyWitness is correct and complete on small sets")
{
  std::mt19937_64 rng(22);
  std::vector<Point> delta{0, 1, 2, 3, 4};
  std::vector<Permutation> all;
  std::vector<Point> img(5);
  std::iota(img.begin(), img.end(), Point{0});
  do {
    all.push_back(Permutation::fromImages(img));
  } while (std::next_permutation(img.begin(), img.end()));

  for (int t = 0; t < 300; ++t) {
    auto const &x = all[rng() % all.size()];
    auto const &y = all[rng() % all.size()];
    auto w = conjugacyWitness(x, y, delta);
    if (w) {
      REQUIRE(x.conjugate(*w) == y);
    } else {
      for (auto const &s : all)
        REQUIRE(x.conjugate(s) != y);
    }
  }
}

TEST_CASE("StabChain")
{
  StabChain s3(group(3, {"(1 2)", "(1 2 3)"}));
  CHECK(s3.order() == 6);
  CHECK(s3.contains(cyc(3, "(1 3)")));

  StabChain c2(group(4, {"(1 2)(3 4)"}));
  CHECK(c2.order() == 2);
  CHECK(c2.strongGenerators(1).empty());

  StabChain c3(group(6, {"(1 2 3)(4 5 6)"}));
  CHECK(c3.order() == 3);
  CHECK_FALSE(c3.contains(cyc(6, "(1 2 3)")));

  std::vector<Point> prefix{4, 0};
  StabChain withPrefix(group(6, {"(1 2 3)(4 5 6)", "(1 2)"}), prefix);
  CHECK(withPrefix.base()[0] == 4);
  CHECK(withPrefix.base()[1] == 0);
  CHECK(withPrefix.order() == 18);
  CHECK(withPrefix.orbitAtLevel(1, 2).size() == 2);
}

TEST_CASE("StabChain order matches closure on random small groups")
{
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + rng() % 7;
    std::vector<Permutation> gens;
    std::size_t count = 1 + rng() % 3;
    for (std::size_t g = 0; g < count; ++g) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      // sparse random permutations keep the groups small enough to close
      for (int sw = 0; sw < 2; ++sw)
        std::swap(img[rng() % n], img[rng() % n]);
      gens.push_back(Permutation::fromImages(img));
    }
    PermGroup g(n, gens);
    auto els = elements(g);
    StabChain chain(g);
    REQUIRE(chain.order() == els.size());
    for (auto const &e : els)
      REQUIRE(chain.contains(e));
  }
}
