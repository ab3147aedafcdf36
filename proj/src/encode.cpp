#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <string>

#include "normsym/encode.hpp"

namespace normsym {

Monomial Monomial::identity(std::size_t k)
{
  Monomial w{FpVector(k, 1), std::vector<std::size_t>(k)};
  std::iota(w.pi.begin(), w.pi.end(), std::size_t{0});
  return w;
}

Monomial Monomial::compose(Monomial const &rhs, PrimeField const &field) const
{
  Monomial res{FpVector(size()), std::vector<std::size_t>(size())};
  for (std::size_t i = 0; i < size(); ++i) {
    res.d[i] = static_cast<Elem>(field.mul(d[i], rhs.d[pi[i]]));
    res.pi[i] = rhs.pi[pi[i]];
  }
  return res;
}

Monomial Monomial::inverse(PrimeField const &field) const
{
  Monomial res{FpVector(size()), std::vector<std::size_t>(size())};
  for (std::size_t i = 0; i < size(); ++i) {
    res.pi[pi[i]] = i;
    res.d[pi[i]] = static_cast<Elem>(field.inv(d[i]));
  }
  return res;
}

FpVector Monomial::apply(std::span<Elem const> v, PrimeField const &field) const
{
  FpVector w(size());
  for (std::size_t i = 0; i < size(); ++i)
    w[pi[i]] = static_cast<Elem>(field.mul(d[i], v[i]));
  return w;
}

FpMatrix Monomial::apply(FpMatrix const &m) const
{
  auto const &field = PrimeField::get(m.prime());
  FpMatrix out(m.prime(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t i = 0; i < size(); ++i)
      out(r, pi[i]) = static_cast<Elem>(field.mul(d[i], m(r, i)));
  }
  return out;
}

InPInstance buildInstance(PermGroup const &h, unsigned p)
{
  if (!isPrime(p) || p > MaxPrime)
    throw NotInClass("p = " + std::to_string(p) + " is not a prime <= 251");

  InPInstance inst;
  inst.field_ = &PrimeField::get(p);
  inst.n_ = h.degree;
  inst.H_ = h;

  if (h.degree == 0 || h.degree % p != 0)
    throw NotInClass("degree is not a positive multiple of p");

  auto orbits = orbitsOf(h);
  for (auto const &orbit : orbits) {
    if (orbit.size() != p)
      throw NotInClass("orbit of point " + std::to_string(orbit.front() + 1) +
                       " has size " + std::to_string(orbit.size()));
  }

  std::size_t k = orbits.size();

  // A p-cycle on each orbit, taken from the first generator moving it; every
  // generator must then act on the orbit as one of its powers.
  std::vector<Permutation> cyc(k);
  std::vector<std::vector<Point>> coords(k);
  std::vector<unsigned> coordOf(h.degree);
  for (std::size_t i = 0; i < k; ++i) {
    auto const &orbit = orbits[i];
    for (auto const &gen : h.generators) {
      if (gen[orbit.front()] != orbit.front()) {
        cyc[i] = restrictTo(gen, orbit);
        break;
      }
    }

    Point x = orbit.front();
    for (unsigned u = 0; u < p; ++u) {
      coords[i].push_back(x);
      coordOf[x] = u;
      x = cyc[i][x];
    }
    if (x != orbit.front() || std::set<Point>(coords[i].begin(), coords[i].end()).size() != p)
      throw NotInClass("restriction to the orbit of " +
                       std::to_string(orbit.front() + 1) + " is not a p-cycle");
  }

  // gamma images of the generators in the initial (sorted) orbit order
  FpMatrix images(p, 0, k);
  for (auto const &gen : h.generators) {
    FpVector v(k);
    for (std::size_t i = 0; i < k; ++i) {
      unsigned r = coordOf[gen[coords[i][0]]];
      for (unsigned u = 0; u < p; ++u) {
        if (gen[coords[i][u]] != coords[i][(u + r) % p])
          throw NotInClass("restriction to the orbit of " +
                           std::to_string(orbits[i].front() + 1) +
                           " is not cyclic of order p");
      }
      v[i] = static_cast<Elem>(r);
    }
    images.appendRow(v);
  }

  std::vector<std::size_t> pivots;
  FpMatrix basis = rowBasis(images, &pivots);

  std::vector<std::size_t> order(pivots);
  for (std::size_t i = 0; i < k; ++i) {
    if (std::find(pivots.begin(), pivots.end(), i) == pivots.end())
      order.push_back(i);
  }

  inst.orbitOf_.assign(h.degree, 0);
  inst.coordOf_ = coordOf;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t i = order[j];
    inst.orbits_.push_back(orbits[i]);
    inst.g_.push_back(cyc[i]);
    inst.coords_.push_back(coords[i]);
    for (Point x : orbits[i])
      inst.orbitOf_[x] = j;
  }

  inst.M_ = basis.selectColumns(order);
  assert(isStandardForm(inst.M_));
  inst.Mdual_ = dualMatrix(inst.M_);

  // phi_i maps point(0, u) to point(i, u); it is the witness conjugating g_0
  // to g_i with cycles aligned at the least points.
  inst.phi_.push_back(Permutation(h.degree));
  for (std::size_t i = 1; i < k; ++i) {
    std::vector<Point> delta(inst.orbits_[0]);
    delta.insert(delta.end(), inst.orbits_[i].begin(), inst.orbits_[i].end());

    auto sigma = conjugacyWitness(inst.g_[0], inst.g_[i], delta);
    assert(sigma);

    auto img = Permutation(h.degree).images();
    for (Point x : inst.orbits_[0]) {
      img[x] = (*sigma)[x];
      img[(*sigma)[x]] = x;
    }
    inst.phi_.push_back(Permutation::fromImages(std::move(img)));
  }

  for (std::size_t r = 0; r < inst.M_.rows(); ++r)
    inst.x_.push_back(inst.gammaInv(inst.M_.row(r)));

  return inst;
}

std::optional<FpVector> InPInstance::gamma(Permutation const &g) const
{
  if (g.degree() != n_)
    return std::nullopt;

  FpVector v(k());
  for (std::size_t i = 0; i < k(); ++i) {
    Point y = g[coords_[i][0]];
    if (orbitOf_[y] != i)
      return std::nullopt;

    unsigned r = coordOf_[y];
    for (unsigned u = 1; u < p(); ++u) {
      if (g[coords_[i][u]] != coords_[i][(u + r) % p()])
        return std::nullopt;
    }
    v[i] = static_cast<Elem>(r);
  }

  return v;
}

Permutation InPInstance::gammaInv(std::span<Elem const> v) const
{
  assert(v.size() == k());

  auto img = Permutation(n_).images();
  for (std::size_t i = 0; i < k(); ++i) {
    for (unsigned u = 0; u < p(); ++u)
      img[coords_[i][u]] = coords_[i][(u + v[i]) % p()];
  }
  return Permutation::fromImages(std::move(img));
}

bool InPInstance::contains(Permutation const &g) const
{
  auto v = gamma(g);
  return v && memberRowSpace(*v, M_).has_value();
}

bool InPInstance::normalises(Permutation const &sigma) const
{
  for (auto const &x : x_) {
    if (!contains(x.conjugate(sigma)))
      return false;
  }
  return true;
}

bool InPInstance::normalisesDual(Permutation const &sigma) const
{
  RowSpace dual(Mdual_);
  for (std::size_t r = 0; r < Mdual_.rows(); ++r) {
    auto v = gamma(gammaInv(Mdual_.row(r)).conjugate(sigma));
    if (!v || !dual.contains(*v))
      return false;
  }
  return true;
}

Permutation InPInstance::kappa(std::span<std::size_t const> pi) const
{
  assert(pi.size() == k());

  auto img = Permutation(n_).images();
  for (std::size_t i = 0; i < k(); ++i) {
    for (unsigned u = 0; u < p(); ++u)
      img[coords_[i][u]] = coords_[pi[i]][u];
  }
  return Permutation::fromImages(std::move(img));
}

std::optional<Monomial> InPInstance::xiImage(Permutation const &sigma) const
{
  if (sigma.degree() != n_)
    return std::nullopt;

  auto const &F = *field_;

  Monomial w{FpVector(k()), std::vector<std::size_t>(k())};
  std::vector<bool> hit(k(), false);
  for (std::size_t i = 0; i < k(); ++i) {
    Point y0 = sigma[coords_[i][0]];
    std::size_t j = orbitOf_[y0];
    unsigned c = coordOf_[y0];
    unsigned d = F.sub(coordOf_[sigma[coords_[i][1 % p()]]], c);
    if (d == 0 || hit[j])
      return std::nullopt;

    for (unsigned u = 0; u < p(); ++u) {
      if (sigma[coords_[i][u]] != coords_[j][F.add(c, F.mul(d, u))])
        return std::nullopt;
    }

    hit[j] = true;
    w.pi[i] = j;
    w.d[i] = static_cast<Elem>(d);
  }

  return w;
}

Permutation InPInstance::xiPreimage(Monomial const &w) const
{
  assert(w.size() == k());

  auto img = Permutation(n_).images();
  for (std::size_t i = 0; i < k(); ++i) {
    for (unsigned u = 0; u < p(); ++u)
      img[coords_[i][u]] = coords_[w.pi[i]][field_->mul(w.d[i], u)];
  }
  return Permutation::fromImages(std::move(img));
}

std::optional<std::pair<Permutation, Permutation>>
InPInstance::decomposeBK(Permutation const &sigma) const
{
  auto w = xiImage(sigma);
  if (!w)
    return std::nullopt;

  Permutation kap = kappa(w->pi);
  return std::make_pair(sigma * kap.inverse(), kap);
}

std::vector<std::size_t> InPInstance::orbitPermutation(Permutation const &sigma) const
{
  std::vector<std::size_t> pi(k());
  for (std::size_t i = 0; i < k(); ++i)
    pi[i] = orbitOf_[sigma[coords_[i][0]]];
  return pi;
}

LKGenerators buildLK(InPInstance const &inst)
{
  LKGenerators gens;
  unsigned t = inst.field().primitiveRoot();

  for (std::size_t i = 0; i < inst.k(); ++i) {
    gens.B.push_back(inst.orbitGenerators()[i]);

    if (inst.p() > 2) {
      Monomial w = Monomial::identity(inst.k());
      w.d[i] = static_cast<Elem>(t);
      gens.B.push_back(inst.xiPreimage(w));
    }
  }

  for (std::size_t i = 1; i < inst.k(); ++i)
    gens.K.push_back(inst.bijections()[i]);

  return gens;
}

FpMatrix stabMatrix(FpMatrix const &m, std::span<std::size_t const> cols)
{
  auto const &field = PrimeField::get(m.prime());

  FpMatrix w(m);
  for (std::size_t c : cols) {
    std::size_t r = 0;
    while (r < w.rows() && w(r, c) == 0)
      ++r;
    if (r == w.rows())
      continue;

    unsigned inv = field.inv(w(r, c));
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i != r && w(i, c))
        w.addRowMultiple(i, r, field.neg(field.mul(w(i, c), inv)));
    }
    w.removeRow(r);
  }

  return w;
}

PermGroup codeToGroup(FpMatrix const &m)
{
  unsigned p = m.prime();
  std::size_t k = m.cols();

  std::vector<Permutation> gens;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Point> img(p * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (unsigned u = 0; u < p; ++u)
        img[p * i + u] = static_cast<Point>(p * i + (u + m(r, i)) % p);
    }
    gens.push_back(Permutation::fromImages(std::move(img)));
  }

  return PermGroup(p * k, std::move(gens));
}

namespace {

// The involution swapping point(a, u) and point(b, scalar * u).
Permutation swapOrbits(InPInstance const &inst, std::size_t a, std::size_t b,
                       unsigned scalar)
{
  auto img = Permutation(inst.n()).images();
  for (unsigned u = 0; u < inst.p(); ++u) {
    Point x = inst.point(a, u);
    Point y = inst.point(b, inst.field().mul(scalar, u));
    img[x] = y;
    img[y] = x;
  }
  return Permutation::fromImages(std::move(img));
}

} // anonymous namespace

OrbitReduction::OrbitReduction(InPInstance const &inst)
: inst_(&inst)
{
  auto const &F = inst.field();
  auto const &M = inst.M();
  Partition classes = columnEquivClasses(M);

  trivial_ = classes.numCells() == inst.k();

  classOf_.assign(inst.k(), 0);
  memberOf_.assign(inst.k(), 0);
  scalar_.assign(inst.k(), 1);
  for (std::size_t c = 0; c < classes.numCells(); ++c) {
    auto const &cell = classes.cell(c);
    members_.push_back(cell);

    std::size_t rep = cell.front();
    std::size_t r = 0;
    while (M(r, rep) == 0)
      ++r;

    for (std::size_t j = 0; j < cell.size(); ++j) {
      classOf_[cell[j]] = c;
      memberOf_[cell[j]] = j;
      scalar_[cell[j]] = static_cast<Elem>(F.mul(M(r, cell[j]), F.inv(M(r, rep))));
    }
  }

  std::vector<Permutation> cgens(inst.orbitGenerators());
  for (std::size_t c = 0; c < members_.size(); ++c) {
    for (std::size_t j = 1; j < members_[c].size(); ++j)
      cgens.push_back(swapOrbits(inst, members_[c][0], members_[c][j],
                                 scalar_[members_[c][j]]));
  }
  centralizer_ = PermGroup(inst.n(), std::move(cgens));

  for (auto const &cell : members_) {
    for (Point x : inst.orbits()[cell.front()])
      toOriginal_.push_back(x);
  }
  std::sort(toOriginal_.begin(), toOriginal_.end());

  fromOriginal_.assign(inst.n(), static_cast<Point>(-1));
  for (Point r = 0; r < toOriginal_.size(); ++r) {
    fromOriginal_[toOriginal_[r]] = r;
    colours_.push_back(members_[classOf_[inst.orbitOf(toOriginal_[r])]].size());
  }

  std::vector<Permutation> rgens;
  for (auto const &gen : inst.group().generators) {
    std::vector<Point> img(toOriginal_.size());
    for (Point r = 0; r < toOriginal_.size(); ++r)
      img[r] = fromOriginal_[gen[toOriginal_[r]]];
    rgens.push_back(Permutation::fromImages(std::move(img)));
  }
  reduced_ = PermGroup(toOriginal_.size(), std::move(rgens));
}

Permutation OrbitReduction::lift(Permutation const &u) const
{
  auto const &inst = *inst_;
  auto const &F = inst.field();

  std::vector<Point> img(inst.n());
  for (Point x = 0; x < inst.n(); ++x) {
    std::size_t orbit = inst.orbitOf(x);
    std::size_t member = memberOf_[orbit];
    std::size_t rep = members_[classOf_[orbit]][0];

    Point y = inst.point(rep, F.mul(inst.coord(x), F.inv(scalar_[orbit])));
    Point z = toOriginal_[u[fromOriginal_[y]]];

    std::size_t target = members_[classOf_[inst.orbitOf(z)]].at(member);
    img[x] = inst.point(target, F.mul(inst.coord(z), scalar_[target]));
  }

  return Permutation::fromImages(std::move(img));
}

PermGroup centralizerSym(InPInstance const &inst)
{ return OrbitReduction(inst).centralizer(); }

} // namespace normsym
