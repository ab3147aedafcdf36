#include <algorithm>
#include <numeric>
#include <optional>

#include "normsym/oracle.hpp"
#include "normsym/stabchain.hpp"

namespace normsym {

namespace {

std::uint64_t factorial(std::size_t n, std::uint64_t cap)
{
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap)
      return cap + 1;
  }
  return f;
}

std::uint64_t power(std::uint64_t b, std::size_t e, std::uint64_t cap)
{
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= b;
    if (r > cap)
      return cap + 1;
  }
  return r;
}

void checkBudget(std::uint64_t a, std::uint64_t b, std::uint64_t budget)
{
  if (a > budget || b > budget || (b && a > budget / b))
    throw BudgetExceeded("enumeration exceeds the oracle budget");
}

// Advances d through (F_p^*)^len; false after the last one.
bool nextScalars(FpVector &d, unsigned p)
{
  for (auto &x : d) {
    if (x + 1u < p) {
      ++x;
      return true;
    }
    x = 1;
  }
  return false;
}

} // anonymous namespace

std::vector<Monomial> bruteMAut(FpMatrix const &m, std::uint64_t budget)
{
  std::size_t k = m.cols();
  unsigned p = m.prime();
  auto const &F = PrimeField::get(p);

  checkBudget(power(p - 1, k, budget), factorial(k, budget), budget);

  RowSpace code(m);
  std::vector<Monomial> out;

  Monomial w{FpVector(k, 1), std::vector<std::size_t>(k)};
  std::iota(w.pi.begin(), w.pi.end(), std::size_t{0});
  do {
    std::fill(w.d.begin(), w.d.end(), Elem{1});
    do {
      bool ok = true;
      for (std::size_t r = 0; r < m.rows() && ok; ++r)
        ok = code.contains(w.apply(m.row(r), F));
      if (ok)
        out.push_back(w);
    } while (nextScalars(w.d, p));
  } while (std::next_permutation(w.pi.begin(), w.pi.end()));

  return out;
}

std::vector<Permutation> bruteNormalizer(PermGroup const &h, std::uint64_t budget)
{
  std::size_t n = h.degree;
  checkBudget(factorial(n, budget), 1, budget);

  StabChain chain(h);
  std::vector<Permutation> out;

  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  do {
    Permutation g = Permutation::fromImages(img);
    bool ok = true;
    for (auto const &x : h.generators) {
      if (!chain.contains(x.conjugate(g))) {
        ok = false;
        break;
      }
    }
    if (ok)
      out.push_back(std::move(g));
  } while (std::next_permutation(img.begin(), img.end()));

  return out;
}

FpMatrix bruteCanonRep(FpMatrix const &a, std::uint64_t budget)
{
  std::size_t s = a.rows(), k = a.cols();
  unsigned p = a.prime();

  checkBudget(power(p, s * s, budget), power(p - 1, k, budget), budget);

  std::optional<FpMatrix> best;
  FpMatrix R(p, s, s);
  std::uint64_t total = power(p, s * s, budget);

  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        R(i, j) = static_cast<Elem>(c % p);
        c /= p;
      }
    }
    if (rank(R) != s)
      continue;

    FpMatrix ra = R.multiply(a);
    FpVector d(k, 1);
    do {
      FpMatrix cand(ra);
      for (std::size_t j = 0; j < k; ++j)
        cand.scaleColumn(j, d[j]);
      if (!best || precCompare(cand, *best) < 0)
        best = std::move(cand);
    } while (nextScalars(d, p));
  }

  return best ? *best : a;
}

std::vector<Permutation> bruteNormBH(InPInstance const &inst, std::uint64_t budget)
{
  std::size_t k = inst.k();
  unsigned p = inst.p();
  auto const &F = inst.field();

  std::uint64_t perOrbit = std::uint64_t{p} * (p - 1);
  std::uint64_t total = power(perOrbit, k, budget);
  checkBudget(total, 1, budget);

  std::vector<Permutation> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    std::vector<Point> img(inst.n());
    for (std::size_t i = 0; i < k; ++i) {
      unsigned shift = static_cast<unsigned>(c % p);
      unsigned mult = static_cast<unsigned>((c / p) % (p - 1)) + 1;
      c /= perOrbit;
      for (unsigned u = 0; u < p; ++u)
        img[inst.point(i, u)] = inst.point(i, F.add(F.mul(mult, u), shift));
    }
    Permutation b = Permutation::fromImages(std::move(img));
    if (inst.normalises(b))
      out.push_back(std::move(b));
  }

  return out;
}

} // namespace normsym
