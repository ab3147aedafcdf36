#pragma once

// Small helpers shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "normsym/encode.hpp"
#include "normsym/gfp.hpp"
#include "normsym/perm.hpp"
#include "normsym/stabchain.hpp"
#include "normsym/textio.hpp"

namespace testing {

using namespace normsym;

inline FpMatrix mat(unsigned p, std::vector<std::vector<unsigned>> const &rows)
{ return FpMatrix::fromRows(p, rows); }

inline Permutation cyc(std::size_t n, std::string const &text)
{ return parseCycles(text, n); }

inline PermGroup group(std::size_t n, std::vector<std::string> const &gens)
{
  std::vector<Permutation> g;
  for (auto const &t : gens)
    g.push_back(cyc(n, t));
  return PermGroup(n, std::move(g));
}

// <(1 2)(5 6), (3 4)(5 6)>: the even-weight binary code of length 3.
inline PermGroup e1() { return group(6, {"(1 2)(5 6)", "(3 4)(5 6)"}); }

inline BigInt orderOf(PermGroup const &g) { return StabChain(g).order(); }

// Equal as subgroups of S_n.
inline bool sameGroup(PermGroup const &a, PermGroup const &b)
{
  StabChain ca(a), cb(b);
  if (ca.order() != cb.order())
    return false;
  for (auto const &g : a.generators) {
    if (!cb.contains(g))
      return false;
  }
  for (auto const &g : b.generators) {
    if (!ca.contains(g))
      return false;
  }
  return true;
}

// Every element of a small group, by closure.
inline std::set<Permutation> elements(PermGroup const &g)
{
  std::set<Permutation> seen{Permutation(g.degree)};
  std::vector<Permutation> todo{Permutation(g.degree)};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (auto const &s : g.generators) {
      auto y = x * s;
      if (seen.insert(y).second)
        todo.push_back(y);
    }
  }
  return seen;
}

inline FpMatrix randomMatrix(std::mt19937_64 &rng, unsigned p, std::size_t rows,
                             std::size_t cols)
{
  FpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<Elem>(rng() % p);
  }
  return m;
}

inline FpMatrix randomInvertible(std::mt19937_64 &rng, unsigned p, std::size_t s)
{
  while (true) {
    auto m = randomMatrix(rng, p, s, s);
    if (rank(m) == s)
      return m;
  }
}

inline FpVector randomScalars(std::mt19937_64 &rng, unsigned p, std::size_t k)
{
  FpVector d(k);
  for (auto &x : d)
    x = static_cast<Elem>(1 + rng() % (p - 1));
  return d;
}

// Random standard-form matrix (I | A).
inline FpMatrix randomStandard(std::mt19937_64 &rng, unsigned p, std::size_t s,
                               std::size_t k)
{
  FpMatrix m = randomMatrix(rng, p, s, k);
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < s; ++c)
      m(r, c) = r == c;
  }
  return m;
}

} // namespace testing
