#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace normsym {

// Points are 0-based internally; text input and output is 1-based.
using Point = std::uint32_t;

/// A permutation of {0, ..., n-1}, acting on the right: x^(gh) = (x^g)^h.
class Permutation
{
public:
  explicit Permutation(std::size_t degree = 0);

  static Permutation fromImages(std::vector<Point> images);
  static Permutation fromCycles(std::size_t degree,
                                std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return img_.size(); }
  Point operator[](Point x) const { return img_[x]; }
  std::vector<Point> const &images() const { return img_; }

  bool isIdentity() const;
  std::vector<Point> support() const;

  // apply *this, then rhs
  Permutation operator*(Permutation const &rhs) const;
  Permutation inverse() const;
  // rhs^-1 * this * rhs
  Permutation conjugate(Permutation const &by) const;
  Permutation pow(long long e) const;

  // Cycles of length > 1, each starting at its least point, ordered by it.
  std::vector<std::vector<Point>> cycles() const;

  auto operator<=>(Permutation const &) const = default;
  bool operator==(Permutation const &) const = default;

  std::string str() const;  // 1-based cycle notation, "()" for identity

private:
  std::vector<Point> img_;
};

/// A permutation group given by generators. Identity generators are dropped.
struct PermGroup
{
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  PermGroup() = default;
  PermGroup(std::size_t n, std::vector<Permutation> gens);
};

/// Orbits of the group on the given points (all points if empty), each
/// sorted, ordered by least element.
std::vector<std::vector<Point>> orbitsOf(PermGroup const &g,
                                         std::span<Point const> domain = {});

/// The restriction of g to an invariant set, as a permutation of the same
/// degree fixing everything outside. Throws if the set is not invariant.
Permutation restrictTo(Permutation const &g, std::span<Point const> delta);

/// Some s in Sym(delta) with x^s == y, where x and y are supported in delta.
std::optional<Permutation> conjugacyWitness(Permutation const &x,
                                            Permutation const &y,
                                            std::span<Point const> delta);

} // namespace normsym
