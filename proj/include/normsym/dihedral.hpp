#pragma once

#include <array>
#include <optional>
#include <vector>

#include "normsym/pipeline.hpp"
#include "normsym/stabchain.hpp"

namespace normsym {

/// H in the dihedral class: every orbit has p points (p an odd prime) and H
/// acts on it as the dihedral group of order 2p.
///
/// H = Hp x| H2 with Hp = H ∩ G the rotation part and H2 a Sylow 2-subgroup
/// fixing the point alpha[i] of each orbit. Orbits follow orbitsOf(H).
struct DihedralInstance
{
  unsigned p = 0;
  PermGroup H;
  std::vector<std::vector<Point>> orbits;
  std::vector<Point> alpha;
  PermGroup Hp;
  PermGroup H2;
  BigInt order, orderP, order2;

  // Omega_i1 = {point(i, u), point(i, -u)} in coordinates based at alpha[i],
  // with u chosen from the least non-fixed point of the first orbit.
  std::vector<std::array<Point, 2>> blocks;
};

/// Throws NotInClass when some orbit restriction is not dihedral of degree p.
DihedralInstance buildDihedral(PermGroup const &h, unsigned p);

/// Orbit permutation induced by g on the blocks Omega_i1, or nothing if g
/// does not permute them.
std::optional<std::vector<std::size_t>> thetaMap(DihedralInstance const &inst,
                                                 Permutation const &g);

PipelineResult normalizerDihedral(DihedralInstance const &inst,
                                  SearchOptions const &opts = {});

} // namespace normsym
