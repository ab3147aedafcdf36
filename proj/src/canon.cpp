#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "normsym/canon.hpp"

namespace normsym {

std::vector<Partition> supportPartitions(FpMatrix const &a)
{
  if (!isStandardForm(a))
    throw std::invalid_argument("supportPartitions: not in standard form");

  std::size_t s = a.rows(), k = a.cols();

  std::vector<std::size_t> label(s);
  for (std::size_t i = 0; i < s; ++i)
    label[i] = i;

  std::vector<Partition> qs;
  for (std::size_t j = 0; j < k; ++j) {
    if (j >= s) {
      std::size_t target = s;
      for (std::size_t r = 0; r < s; ++r) {
        if (a(r, j))
          target = std::min(target, label[r]);
      }

      std::vector<std::size_t> merged;
      for (std::size_t r = 0; r < s; ++r) {
        if (a(r, j))
          merged.push_back(label[r]);
      }
      for (auto &l : label) {
        if (std::find(merged.begin(), merged.end(), l) != merged.end())
          l = target;
      }
    }
    qs.push_back(Partition::fromLabels(label));
  }

  return qs;
}

CanonResult canonicalRep(FpMatrix const &a)
{
  if (!isStandardForm(a))
    throw std::invalid_argument("canonicalRep: not in standard form");

  auto const &F = PrimeField::get(a.prime());
  std::size_t s = a.rows(), k = a.cols();

  FpMatrix rep(a);
  FpVector rinv(s, 1);
  FpVector d(k, 1);

  if (s > 0) {
    auto qs = supportPartitions(a);

    for (std::size_t j = s; j < k; ++j) {
      Partition const &q = qs[j - 1];

      for (auto const &cell : q.cells()) {
        // the last row of the cell meeting column j decides the scalar
        std::size_t top = s;
        for (std::size_t r : cell) {
          if (rep(r, j))
            top = r;
        }
        if (top == s)
          continue;

        unsigned mu = F.inv(rep(top, j));
        unsigned muInv = rep(top, j);

        for (std::size_t r : cell) {
          rep.scaleRow(r, mu);
          rinv[r] = static_cast<Elem>(F.mul(rinv[r], mu));
        }

        // undo the row scaling on the columns already fixed
        for (std::size_t l = 0; l < j; ++l) {
          bool meets = false;
          for (std::size_t r : cell)
            meets = meets || rep(r, l);
          if (meets) {
            rep.scaleColumn(l, muInv);
            d[l] = static_cast<Elem>(F.mul(d[l], muInv));
          }
        }
      }
    }
  }

  FpMatrix R(a.prime(), s, s);
  for (std::size_t r = 0; r < s; ++r)
    R(r, r) = static_cast<Elem>(F.inv(rinv[r]));

  return {std::move(rep), std::move(R), std::move(d)};
}

KappaTester::KappaTester(InPInstance const &inst)
: inst_(&inst),
  canonM_(canonicalRep(inst.M()))
{}

std::optional<KappaResult> KappaTester::test(std::span<std::size_t const> pi) const
{
  auto const &inst = *inst_;
  auto const &F = inst.field();
  std::size_t s = inst.s(), k = inst.k();

  assert(pi.size() == k);

  // generator matrix of gamma(H^(kappa^-1)): column j is column pi[j] of M
  FpMatrix permuted = inst.M().selectColumns(pi);

  // Any (R, d) keeps the first s columns independent, so a singular block
  // there means no b exists.
  std::vector<std::size_t> lead(s);
  for (std::size_t j = 0; j < s; ++j)
    lead[j] = j;
  if (rank(permuted.selectColumns(lead)) != s)
    return std::nullopt;

  auto rr = rrefStandard(permuted);
  assert(rr.standard);

  auto canon = canonicalRep(rr.reduced);
  if (!(canon.rep == canonM_.rep))
    return std::nullopt;

  Monomial w{FpVector(k), std::vector<std::size_t>(pi.begin(), pi.end())};
  for (std::size_t i = 0; i < k; ++i)
    w.d[i] = static_cast<Elem>(F.mul(canonM_.d[i], F.inv(canon.d[i])));

  Permutation element = inst.xiPreimage(w);
  if (!inst.normalises(element))
    throw std::logic_error("kappaFeasible produced a non-normalising element");

  Monomial zeta{w.d, Monomial::identity(k).pi};
  return KappaResult{inst.xiPreimage(zeta), std::move(element), std::move(w)};
}

std::optional<KappaResult> kappaFeasible(InPInstance const &inst,
                                         std::span<std::size_t const> pi)
{ return KappaTester(inst).test(pi); }

} // namespace normsym
