#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "normsym/perm.hpp"

namespace normsym {

Permutation::Permutation(std::size_t degree)
: img_(degree)
{
  std::iota(img_.begin(), img_.end(), Point{0});
}

Permutation Permutation::fromImages(std::vector<Point> images)
{
  std::vector<bool> hit(images.size(), false);
  for (auto x : images) {
    if (x >= images.size() || hit[x])
      throw std::invalid_argument("image array is not a permutation");
    hit[x] = true;
  }

  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::fromCycles(std::size_t degree,
                                    std::vector<std::vector<Point>> const &cycles)
{
  Permutation p(degree);
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree || used[x])
        throw std::invalid_argument("cycles are not disjoint or out of range");
      used[x] = true;
      p.img_[x] = cycle[(i + 1) % cycle.size()];
    }
  }

  return p;
}

bool Permutation::isIdentity() const
{
  for (Point x = 0; x < img_.size(); ++x) {
    if (img_[x] != x)
      return false;
  }
  return true;
}

std::vector<Point> Permutation::support() const
{
  std::vector<Point> supp;
  for (Point x = 0; x < img_.size(); ++x) {
    if (img_[x] != x)
      supp.push_back(x);
  }
  return supp;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  assert(degree() == rhs.degree());

  Permutation res;
  res.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    res.img_[x] = rhs.img_[img_[x]];
  return res;
}

Permutation Permutation::inverse() const
{
  Permutation res;
  res.img_.resize(img_.size());
  for (Point x = 0; x < img_.size(); ++x)
    res.img_[img_[x]] = x;
  return res;
}

Permutation Permutation::conjugate(Permutation const &by) const
{
  assert(degree() == by.degree());

  Permutation res;
  res.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    res.img_[by.img_[x]] = by.img_[img_[x]];
  return res;
}

Permutation Permutation::pow(long long e) const
{
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);

  Permutation res(degree());
  while (n) {
    if (n & 1)
      res = res * base;
    base = base * base;
    n >>= 1;
  }
  return res;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> res;
  std::vector<bool> seen(img_.size(), false);

  for (Point x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x)
      continue;

    std::vector<Point> cycle;
    for (Point y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      cycle.push_back(y);
    }
    res.push_back(std::move(cycle));
  }

  return res;
}

std::string Permutation::str() const
{
  auto cyc = cycles();
  if (cyc.empty())
    return "()";

  std::ostringstream ss;
  for (auto const &c : cyc) {
    ss << "(";
    for (std::size_t i = 0; i < c.size(); ++i)
      ss << (i ? " " : "") << c[i] + 1;
    ss << ")";
  }
  return ss.str();
}

PermGroup::PermGroup(std::size_t n, std::vector<Permutation> gens)
: degree(n)
{
  for (auto &g : gens) {
    if (g.degree() != n)
      throw std::invalid_argument("generator degree mismatch");
    if (!g.isIdentity())
      generators.push_back(std::move(g));
  }
}

std::vector<std::vector<Point>> orbitsOf(PermGroup const &g,
                                         std::span<Point const> domain)
{
  std::vector<Point> points(domain.begin(), domain.end());
  if (points.empty()) {
    points.resize(g.degree);
    std::iota(points.begin(), points.end(), Point{0});
  }
  std::sort(points.begin(), points.end());

  std::vector<bool> seen(g.degree, false);
  std::vector<std::vector<Point>> orbits;

  for (Point x : points) {
    if (seen[x])
      continue;

    std::vector<Point> orbit{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto const &gen : g.generators) {
        Point y = gen[orbit[i]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }

    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  return orbits;
}

Permutation restrictTo(Permutation const &g, std::span<Point const> delta)
{
  std::vector<bool> in(g.degree(), false);
  for (Point x : delta)
    in[x] = true;

  auto images = Permutation(g.degree()).images();
  for (Point x : delta) {
    if (!in[g[x]])
      throw std::invalid_argument("set is not invariant");
    images[x] = g[x];
  }

  return Permutation::fromImages(std::move(images));
}

std::optional<Permutation> conjugacyWitness(Permutation const &x,
                                            Permutation const &y,
                                            std::span<Point const> delta)
{
  if (x.degree() != y.degree())
    return std::nullopt;

  std::vector<Point> dom(delta.begin(), delta.end());
  std::sort(dom.begin(), dom.end());

  std::vector<bool> in(x.degree(), false);
  for (Point a : dom)
    in[a] = true;

  for (Point a = 0; a < x.degree(); ++a) {
    if (!in[a] && (x[a] != a || y[a] != a))
      return std::nullopt;
  }

  // all cycles on delta, fixed points included, keyed by length
  auto cyclesByLength = [&](Permutation const &g) {
    std::map<std::size_t, std::vector<std::vector<Point>>> res;
    std::vector<bool> seen(g.degree(), false);
    for (Point a : dom) {
      if (seen[a])
        continue;
      std::vector<Point> cycle;
      for (Point b = a; !seen[b]; b = g[b]) {
        seen[b] = true;
        cycle.push_back(b);
      }
      res[cycle.size()].push_back(std::move(cycle));
    }
    return res;
  };

  auto cx = cyclesByLength(x);
  auto cy = cyclesByLength(y);
  if (cx.size() != cy.size())
    return std::nullopt;

  auto images = Permutation(x.degree()).images();
  for (auto const &[len, cycles] : cx) {
    auto it = cy.find(len);
    if (it == cy.end() || it->second.size() != cycles.size())
      return std::nullopt;

    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (std::size_t j = 0; j < len; ++j)
        images[cycles[i][j]] = it->second[i][j];
    }
  }

  return Permutation::fromImages(std::move(images));
}

} // namespace normsym
