#pragma once

#include <optional>
#include <span>
#include <vector>

#include "normsym/encode.hpp"
#include "normsym/gfp.hpp"

namespace normsym {

/// Q_j for j = 0..k-1: the connected components of rows once columns 0..j
/// of a standard-form matrix are taken into account. Q_j is discrete for
/// j < s; afterwards each column merges the cells meeting its support.
std::vector<Partition> supportPartitions(FpMatrix const &a);

/// rep == R^-1 * A * diag(d)
struct CanonResult
{
  FpMatrix rep;
  FpMatrix R;
  FpVector d;
};

/// The least element, in column-reversed order, of the orbit of a
/// standard-form matrix under row operations and column scalings. Two
/// standard-form matrices have the same representative iff they lie in the
/// same orbit.
CanonResult canonicalRep(FpMatrix const &a);

struct KappaResult
{
  Permutation b;        // in B
  Permutation element;  // b * kappa
  Monomial xi;          // image of element in the monomial group
};

/// Decides whether some b in B makes b * kappa(pi) a normaliser of H, and if
/// so returns the one fixing every orbit's least point.
class KappaTester
{
public:
  explicit KappaTester(InPInstance const &inst);

  std::optional<KappaResult> test(std::span<std::size_t const> pi) const;

private:
  InPInstance const *inst_;
  CanonResult canonM_;
};

std::optional<KappaResult> kappaFeasible(InPInstance const &inst,
                                         std::span<std::size_t const> pi);

} // namespace normsym
