#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "normsym/perm.hpp"

namespace normsym {

using BigInt = boost::multiprecision::cpp_int;

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// The base starts with the given prefix (kept even where the group fixes
/// those points), then continues with least moved points as needed. Level i
/// holds the pointwise stabiliser of base[0..i).
class StabChain
{
public:
  StabChain() = default;
  explicit StabChain(PermGroup const &g, std::span<Point const> basePrefix = {});

  std::size_t degree() const { return degree_; }
  std::size_t length() const { return levels_.size(); }
  std::vector<Point> base() const;

  BigInt order() const;
  bool contains(Permutation const &g) const;

  // Strong generators of the stabiliser of base[0..level); empty past the end.
  std::vector<Permutation> const &strongGenerators(std::size_t level) const;
  std::vector<Point> const &basicOrbit(std::size_t level) const;

  // Orbit of an arbitrary point under the stabiliser at the given level.
  std::vector<Point> orbitAtLevel(Point x, std::size_t level) const;

  PermGroup stabilizer(std::size_t level) const;

private:
  struct Level
  {
    Point base;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<int> repIndex;  // per point, index into reps or -1
    std::vector<Permutation> reps;
    std::vector<Permutation> invReps;
  };

  void addLevel(Point base);
  void computeOrbit(std::size_t level);
  std::pair<Permutation, std::size_t> strip(Permutation h,
                                            std::size_t from) const;
  void schreierSims();

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

} // namespace normsym
