#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "normsym/encode.hpp"
#include "normsym/gfp.hpp"
#include "normsym/perm.hpp"

namespace normsym {

// Exhaustive reference computations. They enumerate everything, with no
// pruning, and refuse when the enumeration would exceed the budget.

struct BudgetExceeded : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t DefaultOracleBudget = 10'000'000;

/// Every (d, pi) in the monomial group stabilising the row space of m.
std::vector<Monomial> bruteMAut(FpMatrix const &m,
                                std::uint64_t budget = DefaultOracleBudget);

/// Every element of S_n normalising H, sorted.
std::vector<Permutation> bruteNormalizer(PermGroup const &h,
                                         std::uint64_t budget = DefaultOracleBudget);

/// The least element of {R A diag(d)} over all invertible R and nonzero d.
FpMatrix bruteCanonRep(FpMatrix const &a,
                       std::uint64_t budget = DefaultOracleBudget);

/// Elements of B (per-orbit affine maps) normalising H.
std::vector<Permutation> bruteNormBH(InPInstance const &inst,
                                     std::uint64_t budget = DefaultOracleBudget);

} // namespace normsym
