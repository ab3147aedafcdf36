#pragma once

#include <string>
#include <vector>

#include "normsym/encode.hpp"
#include "normsym/search.hpp"

namespace normsym {

/// Which route the top-level computation took.
enum class Route { Search, Reduced, Dual };

std::string_view routeName(Route r);

struct PipelineResult : NormalizerResult
{
  Route route = Route::Search;
};

/// N_{S_n}(H) for H in the cyclic class: equivalent orbits are folded first,
/// a code of dimension above k/2 is handled through its dual, and every
/// returned generator is checked to normalise H.
///
/// pointColours, when given, restricts the result to permutations preserving
/// that colouring of the points; it must be constant on orbits.
PipelineResult normalizerInP(PermGroup const &h, unsigned p,
                             SearchOptions const &opts = {},
                             std::vector<std::size_t> const &pointColours = {});

/// The group gamma^-1 of the dual code, on the same points as H.
PermGroup dualGroup(InPInstance const &inst);

/// Ξ(sigma) = (d, pi) for sigma normalising the dual group is sent to the
/// preimage of (d^-1, pi), which normalises H.
Permutation fromDualNormalizer(InPInstance const &inst, Permutation const &sigma);

} // namespace normsym
