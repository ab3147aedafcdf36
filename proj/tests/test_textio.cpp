#include <doctest.h>

#include <sstream>

#include "support.hpp"

using namespace testing;

TEST_CASE("cycle and image forms")
{
  CHECK(parseCycles("(1 2 3)(4 5)", 5) == parseImages("[2,3,1,5,4]", 5));
  CHECK(parseCycles("(1, 2, 3)", 3) == parseCycles("(1 2 3)", 3));
  CHECK(parsePermutation("  [2, 1, 3]", 3) == cyc(3, "(1 2)"));
  CHECK(parseCycles("()", 4).isIdentity());
  CHECK_THROWS_AS(parseCycles("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parseCycles("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(parseCycles("(1 2 1)", 3), ParseError);
  CHECK_THROWS_AS(parseImages("[1,1,2]", 3), ParseError);
}

TEST_CASE("group files round trip")
{
  std::istringstream in("# a comment\n2 6\n\n(1 2)(5 6)\n[1,2,4,3,6,5]\n");
  auto gf = readGroup(in);
  CHECK(gf.p == 2);
  CHECK(gf.group.degree == 6);
  CHECK(sameGroup(gf.group, e1()));

  std::ostringstream out;
  writeGroup(out, gf.p, gf.group, "again");
  std::istringstream back(out.str());
  auto gf2 = readGroup(back);
  CHECK(gf2.group.generators == gf.group.generators);
}

TEST_CASE("malformed generator line is reported with its line number")
{
  std::istringstream in("3 6\n(1 2 3)\n(4 5 x)\n");
  try {
    readGroup(in);
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("matrix files round trip")
{
  std::istringstream in("3 2 4\n1 0 1 2\n0 1 1 1\n");
  auto m = readMatrix(in);
  CHECK(m == mat(3, {{1, 0, 1, 2}, {0, 1, 1, 1}}));

  std::ostringstream out;
  writeMatrix(out, m);
  std::istringstream back(out.str());
  CHECK(readMatrix(back) == m);

  std::istringstream bad("3 1 2\n1 3\n");
  CHECK_THROWS_AS(readMatrix(bad), ParseError);
}
