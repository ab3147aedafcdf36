#include <algorithm>
#include <stdexcept>

#include "normsym/dihedral.hpp"

namespace normsym {

namespace {

std::size_t fixedCount(Permutation const &g, std::vector<Point> const &orbit)
{
  std::size_t c = 0;
  for (Point x : orbit)
    c += g[x] == x;
  return c;
}

// A reflection of a p-point orbit fixes exactly one point; rotations fix none.
bool reflects(Permutation const &g, std::vector<Point> const &orbit)
{ return fixedCount(g, orbit) == 1; }

Permutation truncate(Permutation const &g, std::size_t n)
{
  std::vector<Point> img(g.images().begin(),
                         g.images().begin() + static_cast<long>(n));
  return Permutation::fromImages(std::move(img));
}

PermGroup rotationPart(DihedralInstance const &inst)
{
  std::size_t n = inst.H.degree, k = inst.orbits.size();

  // each orbit gets two extra points, swapped by exactly the elements
  // acting on it as a reflection
  std::vector<Permutation> aug;
  for (auto const &y : inst.H.generators) {
    std::vector<Point> img(y.images());
    img.resize(n + 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      Point a = static_cast<Point>(n + 2 * i);
      bool r = reflects(y, inst.orbits[i]);
      img[a] = r ? a + 1 : a;
      img[a + 1] = r ? a : a + 1;
    }
    aug.push_back(Permutation::fromImages(std::move(img)));
  }

  std::vector<Point> prefix;
  for (std::size_t i = 0; i < k; ++i)
    prefix.push_back(static_cast<Point>(n + 2 * i));

  StabChain chain(PermGroup(n + 2 * k, std::move(aug)), prefix);
  std::vector<Permutation> gens;
  for (auto const &g : chain.strongGenerators(k))
    gens.push_back(truncate(g, n));
  return PermGroup(n, std::move(gens));
}

// Fixes a point alpha[i] in every orbit such that the pointwise stabiliser of
// all of them is a Sylow 2-subgroup.
PermGroup reflectionPart(DihedralInstance &inst)
{
  std::size_t k = inst.orbits.size();
  std::vector<bool> placed(k, false);
  std::vector<Point> prefix;
  PermGroup K = inst.H;

  while (prefix.size() < k) {
    bool progress = false;

    for (auto const &y : K.generators) {
      Permutation z = y.pow(inst.p);
      for (std::size_t i = 0; i < k; ++i) {
        if (placed[i] || !reflects(z, inst.orbits[i]))
          continue;
        for (Point x : inst.orbits[i]) {
          if (z[x] == x)
            inst.alpha[i] = x;
        }
        placed[i] = true;
        prefix.push_back(inst.alpha[i]);
        progress = true;
      }
      if (progress)
        break;
    }

    if (!progress)
      throw std::logic_error("no reflection left in the stabiliser");

    K = StabChain(inst.H, prefix).stabilizer(prefix.size());
  }

  return K;
}

} // anonymous namespace

DihedralInstance buildDihedral(PermGroup const &h, unsigned p)
{
  if (p < 3 || !isPrime(p))
    throw NotInClass("the dihedral class needs an odd prime");

  DihedralInstance inst;
  inst.p = p;
  inst.H = h;
  inst.orbits = orbitsOf(h);

  for (auto const &orbit : inst.orbits) {
    if (orbit.size() != p)
      throw NotInClass("orbit of size " + std::to_string(orbit.size()) +
                       " containing point " + std::to_string(orbit[0] + 1));

    std::vector<Permutation> res;
    for (auto const &g : h.generators)
      res.push_back(restrictTo(g, orbit));
    if (StabChain(PermGroup(h.degree, std::move(res))).order() != 2 * p)
      throw NotInClass("orbit containing point " + std::to_string(orbit[0] + 1) +
                       " is not acted on as a dihedral group");
  }

  std::size_t k = inst.orbits.size();
  inst.alpha.assign(k, 0);
  inst.order = StabChain(h).order();

  inst.Hp = rotationPart(inst);
  inst.H2 = reflectionPart(inst);
  inst.orderP = StabChain(inst.Hp).order();
  inst.order2 = StabChain(inst.H2).order();
  if (inst.orderP * inst.order2 != inst.order)
    throw std::logic_error("rotation and reflection parts do not split H");

  // Coordinates u around alpha come from the rotation part's generator on
  // each orbit; the first orbit's least moved point fixes the block offset.
  InPInstance rot = buildInstance(inst.Hp, p);
  auto const &F = rot.field();

  auto coordinate = [&](std::size_t i) {
    Permutation g = rot.orbitGenerators()[rot.orbitOf(inst.orbits[i][0])];
    std::vector<Point> c(p);
    c[0] = inst.alpha[i];
    for (unsigned u = 1; u < p; ++u)
      c[u] = g[c[u - 1]];
    return c;
  };

  auto c0 = coordinate(0);
  unsigned ub = 0;
  Point beta = inst.orbits[0][0] == inst.alpha[0] ? inst.orbits[0][1]
                                                  : inst.orbits[0][0];
  while (c0[ub] != beta)
    ++ub;

  for (std::size_t i = 0; i < k; ++i) {
    auto c = coordinate(i);
    inst.blocks.push_back({c[ub], c[F.neg(ub)]});
  }

  return inst;
}

std::optional<std::vector<std::size_t>> thetaMap(DihedralInstance const &inst,
                                                 Permutation const &g)
{
  std::size_t k = inst.blocks.size();
  std::vector<std::size_t> blockOf(inst.H.degree, k);
  for (std::size_t i = 0; i < k; ++i) {
    blockOf[inst.blocks[i][0]] = i;
    blockOf[inst.blocks[i][1]] = i;
  }

  std::vector<std::size_t> pi(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t a = blockOf[g[inst.blocks[i][0]]];
    std::size_t b = blockOf[g[inst.blocks[i][1]]];
    if (a == k || a != b)
      return std::nullopt;
    pi[i] = a;
  }
  return pi;
}

PipelineResult normalizerDihedral(DihedralInstance const &inst,
                                  SearchOptions const &opts)
{
  std::size_t n = inst.H.degree, k = inst.orbits.size();
  unsigned p = inst.p;

  // H2 restricted to Gamma, relabelled onto 0..2k-1
  std::vector<Point> gamma;
  for (auto const &b : inst.blocks) {
    gamma.push_back(b[0]);
    gamma.push_back(b[1]);
  }
  std::sort(gamma.begin(), gamma.end());
  std::vector<Point> local(n, 0);
  for (Point r = 0; r < gamma.size(); ++r)
    local[gamma[r]] = r;

  std::vector<Permutation> h2gens;
  for (auto const &g : inst.H2.generators) {
    std::vector<Point> img(gamma.size());
    for (Point r = 0; r < gamma.size(); ++r)
      img[r] = local[g[gamma[r]]];
    h2gens.push_back(Permutation::fromImages(std::move(img)));
  }

  SearchOptions sub = opts;
  sub.method = Method::Full;
  auto n2 = normalizerInP(PermGroup(gamma.size(), std::move(h2gens)), 2, sub);

  InPInstance rot = buildInstance(inst.Hp, p);
  std::vector<std::size_t> fromRot(k);
  for (std::size_t j = 0; j < k; ++j) {
    Point x = rot.orbits()[j][0];
    auto it = std::find_if(inst.orbits.begin(), inst.orbits.end(),
                           [&](auto const &o) { return std::binary_search(o.begin(), o.end(), x); });
    fromRot[j] = static_cast<std::size_t>(it - inst.orbits.begin());
  }
  std::vector<std::size_t> toRot(k);
  for (std::size_t j = 0; j < k; ++j)
    toRot[fromRot[j]] = j;

  std::vector<Permutation> allowedGens;
  for (auto const &g : n2.generators) {
    std::vector<Point> img(n);
    for (Point x = 0; x < n; ++x)
      img[x] = x;
    for (Point r = 0; r < gamma.size(); ++r)
      img[gamma[r]] = gamma[g[r]];
    auto pi = thetaMap(inst, Permutation::fromImages(std::move(img)));
    if (!pi)
      throw std::logic_error("normaliser of H2 does not permute the blocks");

    std::vector<Point> onRot(k);
    for (std::size_t j = 0; j < k; ++j)
      onRot[j] = static_cast<Point>(toRot[(*pi)[fromRot[j]]]);
    allowedGens.push_back(Permutation::fromImages(std::move(onRot)));
  }
  StabChain allowed(PermGroup(k, std::move(allowedGens)));

  auto nr = searchNormalizer(rot, sub, SearchConstraints{{}, &allowed});

  // coordinates based at alpha, in the rotation instance's orbit order
  std::vector<std::vector<Point>> coords(k);
  for (std::size_t j = 0; j < k; ++j) {
    Permutation const &g = rot.orbitGenerators()[j];
    coords[j].push_back(inst.alpha[fromRot[j]]);
    for (unsigned u = 1; u < p; ++u)
      coords[j].push_back(g[coords[j].back()]);
  }

  PipelineResult res;
  res.route = Route::Search;
  res.stats = n2.stats;
  res.stats.merge(nr.stats);

  auto const &F = rot.field();
  for (auto const &sigma : nr.generators) {
    auto w = rot.xiImage(sigma);
    if (!w)
      throw std::logic_error("normaliser of the rotation part outside L");

    std::vector<Point> img(n);
    for (std::size_t j = 0; j < k; ++j) {
      for (unsigned u = 0; u < p; ++u)
        img[coords[j][u]] = coords[w->pi[j]][F.mul(w->d[j], u)];
    }
    Permutation iota = Permutation::fromImages(std::move(img));
    if (!iota.isIdentity())
      res.generators.push_back(std::move(iota));
  }
  for (auto const &g : inst.H.generators) {
    if (std::find(res.generators.begin(), res.generators.end(), g) == res.generators.end())
      res.generators.push_back(g);
  }

  StabChain hchain(inst.H);
  for (auto const &g : res.generators) {
    for (auto const &h : inst.H.generators) {
      if (!hchain.contains(h.conjugate(g)))
        throw std::logic_error("generator " + g.str() + " does not normalise H");
    }
  }

  res.order = StabChain(PermGroup(n, res.generators)).order();
  return res;
}

} // namespace normsym
