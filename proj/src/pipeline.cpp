#include <stdexcept>

#include "normsym/pipeline.hpp"

namespace normsym {

namespace {

std::vector<std::size_t> orbitColours(InPInstance const &inst,
                                      std::vector<std::size_t> const &pointColours)
{
  if (pointColours.empty())
    return {};

  std::vector<std::size_t> colours(inst.k());
  for (std::size_t i = 0; i < inst.k(); ++i)
    colours[i] = pointColours.at(inst.orbits()[i][0]);
  return colours;
}

bool dualSearchable(FpMatrix const &dual)
{
  if (dual.empty())
    return false;
  for (std::size_t c = 0; c < dual.cols(); ++c) {
    if (dual.columnIsZero(c))
      return false;
  }
  return columnEquivClasses(dual).numCells() == dual.cols();
}

} // anonymous namespace

std::string_view routeName(Route r)
{
  switch (r) {
  case Route::Search: return "search";
  case Route::Reduced: return "reduced";
  case Route::Dual: return "dual";
  }
  return "?";
}

PermGroup dualGroup(InPInstance const &inst)
{
  std::vector<Permutation> gens;
  for (std::size_t r = 0; r < inst.Mdual().rows(); ++r)
    gens.push_back(inst.gammaInv(inst.Mdual().row(r)));
  return PermGroup(inst.n(), std::move(gens));
}

Permutation fromDualNormalizer(InPInstance const &inst, Permutation const &sigma)
{
  auto w = inst.xiImage(sigma);
  if (!w)
    throw std::logic_error("dual normaliser outside L");

  for (auto &d : w->d)
    d = static_cast<Elem>(inst.field().inv(d));
  return inst.xiPreimage(*w);
}

PipelineResult normalizerInP(PermGroup const &h, unsigned p,
                             SearchOptions const &opts,
                             std::vector<std::size_t> const &pointColours)
{
  InPInstance inst = buildInstance(h, p);
  PipelineResult res;

  if (opts.reduceEquivalent && pointColours.empty()) {
    OrbitReduction red(inst);
    if (!red.trivial()) {
      auto sub = normalizerInP(red.reduced(), p, opts, red.pointColours());

      res.route = Route::Reduced;
      res.stats = sub.stats;
      for (auto const &u : sub.generators)
        res.generators.push_back(red.lift(u));
      for (auto const &c : red.centralizer().generators)
        res.generators.push_back(c);
    }
  }

  if (res.route != Route::Reduced) {
    SearchConstraints cons{orbitColours(inst, pointColours), nullptr};

    if (opts.dualSwap && 2 * inst.s() > inst.k() && dualSearchable(inst.Mdual())) {
      InPInstance dual = buildInstance(dualGroup(inst), p);
      SearchConstraints dcons{orbitColours(dual, pointColours), nullptr};
      auto sub = searchNormalizer(dual, opts, dcons);

      res.route = Route::Dual;
      res.stats = sub.stats;
      for (auto const &sigma : sub.generators)
        res.generators.push_back(fromDualNormalizer(inst, sigma));
      for (auto const &g : inst.orbitGenerators())
        res.generators.push_back(g);
    } else {
      auto sub = searchNormalizer(inst, opts, cons);
      res.stats = sub.stats;
      res.generators = std::move(sub.generators);
    }
  }

  for (auto const &g : res.generators) {
    if (!inst.normalises(g))
      throw std::logic_error("generator " + g.str() + " does not normalise H");
  }

  std::erase_if(res.generators, [](Permutation const &g) { return g.isIdentity(); });
  res.order = StabChain(PermGroup(inst.n(), res.generators)).order();
  return res;
}

} // namespace normsym
