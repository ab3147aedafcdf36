#include <cassert>
#include <stdexcept>

#include "normsym/stabchain.hpp"

namespace normsym {

StabChain::StabChain(PermGroup const &g, std::span<Point const> basePrefix)
: degree_(g.degree)
{
  for (Point b : basePrefix) {
    if (b >= degree_)
      throw std::invalid_argument("base point out of range");
    addLevel(b);
  }

  for (auto const &gen : g.generators) {
    if (gen.isIdentity())
      continue;

    bool moved = false;
    for (auto const &level : levels_)
      moved = moved || gen[level.base] != level.base;

    if (!moved)
      addLevel(gen.support().front());
  }

  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (auto const &gen : g.generators) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j)
        fixes = gen[levels_[j].base] == levels_[j].base;
      if (fixes && !gen.isIdentity())
        levels_[i].gens.push_back(gen);
    }
    computeOrbit(i);
  }

  schreierSims();
}

std::vector<Point> StabChain::base() const
{
  std::vector<Point> b;
  for (auto const &level : levels_)
    b.push_back(level.base);
  return b;
}

BigInt StabChain::order() const
{
  BigInt n = 1;
  for (auto const &level : levels_)
    n *= level.orbit.size();
  return n;
}

bool StabChain::contains(Permutation const &g) const
{
  if (g.degree() != degree_)
    return false;

  auto [residue, level] = strip(g, 0);
  return level == levels_.size() && residue.isIdentity();
}

std::vector<Permutation> const &StabChain::strongGenerators(std::size_t level) const
{
  static std::vector<Permutation> const none;
  return level < levels_.size() ? levels_[level].gens : none;
}

std::vector<Point> const &StabChain::basicOrbit(std::size_t level) const
{ return levels_.at(level).orbit; }

std::vector<Point> StabChain::orbitAtLevel(Point x, std::size_t level) const
{
  auto const &gens = strongGenerators(level);

  std::vector<bool> seen(degree_, false);
  std::vector<Point> orbit{x};
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto const &s : gens) {
      Point y = s[orbit[i]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }

  return orbit;
}

PermGroup StabChain::stabilizer(std::size_t level) const
{ return PermGroup(degree_, strongGenerators(level)); }

void StabChain::addLevel(Point base)
{
  Level level;
  level.base = base;
  levels_.push_back(std::move(level));
  computeOrbit(levels_.size() - 1);
}

void StabChain::computeOrbit(std::size_t i)
{
  Level &level = levels_[i];

  level.orbit.assign(1, level.base);
  level.repIndex.assign(degree_, -1);
  level.reps.assign(1, Permutation(degree_));
  level.invReps.assign(1, Permutation(degree_));
  level.repIndex[level.base] = 0;

  for (std::size_t j = 0; j < level.orbit.size(); ++j) {
    Point beta = level.orbit[j];
    for (auto const &s : level.gens) {
      Point gamma = s[beta];
      if (level.repIndex[gamma] >= 0)
        continue;

      level.repIndex[gamma] = static_cast<int>(level.reps.size());
      level.orbit.push_back(gamma);
      level.reps.push_back(level.reps[static_cast<std::size_t>(
        level.repIndex[beta])] * s);
      level.invReps.push_back(level.reps.back().inverse());
    }
  }
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation h,
                                                     std::size_t from) const
{
  for (std::size_t l = from; l < levels_.size(); ++l) {
    auto const &level = levels_[l];
    int idx = level.repIndex[h[level.base]];
    if (idx < 0)
      return {std::move(h), l};
    h = h * level.invReps[static_cast<std::size_t>(idx)];
  }

  return {std::move(h), levels_.size()};
}

void StabChain::schreierSims()
{
  auto i = static_cast<long>(levels_.size()) - 1;

  while (i >= 0) {
    auto li = static_cast<std::size_t>(i);
    bool restarted = false;

    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !restarted; ++oi) {
      for (std::size_t si = 0; si < levels_[li].gens.size(); ++si) {
        auto const &level = levels_[li];
        Point beta = level.orbit[oi];
        auto const &s = level.gens[si];
        Point gamma = s[beta];

        auto const &u = level.reps[static_cast<std::size_t>(level.repIndex[beta])];
        auto const &uinv =
          level.invReps[static_cast<std::size_t>(level.repIndex[gamma])];

        Permutation h = u * s * uinv;
        if (h.isIdentity())
          continue;

        auto [residue, j] = strip(std::move(h), li + 1);
        if (j == levels_.size() && residue.isIdentity())
          continue;

        if (j == levels_.size())
          addLevel(residue.support().front());

        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          computeOrbit(l);
        }

        i = static_cast<long>(j);
        restarted = true;
        break;
      }
    }

    if (!restarted)
      --i;
  }
}

} // namespace normsym
