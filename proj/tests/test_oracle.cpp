#include <doctest.h>

#include "normsym/oracle.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("bruteMAut")
{
  CHECK(bruteMAut(FpMatrix::identity(2, 2)).size() == 2);
  CHECK(bruteMAut(mat(2, {{1, 0, 1}, {0, 1, 1}})).size() == 6);
  // repetition code of length 3 over F_3: scalar times any permutation
  CHECK(bruteMAut(mat(3, {{1, 1, 1}})).size() == 12);

  for (auto const &w : bruteMAut(mat(3, {{1, 0, 2}, {0, 1, 1}}))) {
    auto img = w.apply(mat(3, {{1, 0, 2}, {0, 1, 1}}));
    CHECK(rank(img) == 2);
  }
}

TEST_CASE("bruteNormalizer")
{
  CHECK(bruteNormalizer(group(2, {"(1 2)"})).size() == 2);
  CHECK(bruteNormalizer(group(4, {"(1 2)(3 4)"})).size() == 8);
  CHECK(bruteNormalizer(e1()).size() == 48);
  CHECK(bruteNormalizer(group(4, {"(1 2 3 4)"})).size() == 8);
}

TEST_CASE("bruteNormalizer is closed and normalises")
{
  auto h = group(6, {"(1 2 3)(4 5 6)"});
  auto all = bruteNormalizer(h);
  std::set<Permutation> set(all.begin(), all.end());
  StabChain hc(h);
  for (auto const &a : all) {
    REQUIRE(hc.contains(h.generators[0].conjugate(a)));
    for (auto const &b : all)
      REQUIRE(set.count(a * b));
  }
}

TEST_CASE("budget is enforced")
{
  CHECK_THROWS_AS(bruteNormalizer(group(12, {"(1 2)"}), 1000), BudgetExceeded);
}

TEST_CASE("normaliser order is p^k times the monomial automorphism count")
{
  std::mt19937_64 rng(61);
  for (int t = 0; t < 10; ++t) {
    std::size_t k = 2 + rng() % 2;
    auto m = randomStandard(rng, 2, 1 + rng() % (k - 1), k);
    bool zero = false;
    for (std::size_t c = 0; c < k; ++c)
      zero = zero || m.columnIsZero(c);
    if (zero)
      continue;
    REQUIRE(bruteNormalizer(codeToGroup(m)).size() ==
            (std::size_t{1} << k) * bruteMAut(m).size());
  }
}
