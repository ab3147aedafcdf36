#pragma once

#include <cstdint>

#include "normsym/gfp.hpp"
#include "normsym/perm.hpp"

namespace normsym {

/// A uniformly random dim x k matrix over F_p of rank dim with no zero
/// column, drawn from std::mt19937_64 seeded with seed (entries are
/// rng() % p). Draws are repeated until both conditions hold.
FpMatrix randomCode(unsigned p, std::size_t k, std::size_t dim, std::uint64_t seed);

/// codeToGroup(randomCode(...)).
PermGroup randomCyclicGroup(unsigned p, std::size_t k, std::size_t dim,
                            std::uint64_t seed);

/// A group in the dihedral class on p*k points: a random cyclic-class group
/// of dimension dim over F_p together with a random binary code of dimension
/// dim whose codewords become products of reflections fixing the first point
/// of each block.
PermGroup randomDihedralGroup(unsigned p, std::size_t k, std::size_t dim,
                              std::uint64_t seed);

} // namespace normsym
