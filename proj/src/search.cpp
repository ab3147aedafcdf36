#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "normsym/canon.hpp"
#include "normsym/search.hpp"

namespace normsym {

namespace {

constexpr std::array<std::string_view, NumRules> RuleNames{
  "lds", "stabs", "weights", "deep", "alldiff", "dualpart", "stabpart",
  "invset"};

using Clock = std::chrono::steady_clock;

std::size_t ruleIndex(Rule r) { return static_cast<std::size_t>(r); }

Domain singleton(std::size_t k, std::size_t c)
{
  Domain d(k);
  d.set(c);
  return d;
}

Permutation asPermutation(std::vector<std::size_t> const &pi)
{
  std::vector<Point> img(pi.begin(), pi.end());
  return Permutation::fromImages(std::move(img));
}

// A^-1 * m where A holds the given columns of m; nothing if A is singular.
std::optional<FpMatrix> pivotOnColumns(FpMatrix const &m,
                                       std::span<std::size_t const> cols)
{
  auto const &F = PrimeField::get(m.prime());
  FpMatrix w(m);

  for (std::size_t r = 0; r < cols.size(); ++r) {
    std::size_t c = cols[r];
    std::size_t pr = r;
    while (pr < w.rows() && w(pr, c) == 0)
      ++pr;
    if (pr == w.rows())
      return std::nullopt;

    w.swapRows(r, pr);
    w.scaleRow(r, F.inv(w(r, c)));
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i != r && w(i, c))
        w.addRowMultiple(i, r, F.neg(w(i, c)));
    }
  }

  return w;
}

// Class structure and (lazily) weight enumerator of the subcode vanishing on
// a set of orbits, memoised per set.
class StabCache
{
public:
  struct Info
  {
    FpMatrix matrix;
    ColumnClasses classes;
    std::vector<std::pair<bool, std::size_t>> signature;
    bool enumeratorTried = false;
    std::optional<std::vector<std::uint64_t>> enumerator;
  };

  explicit StabCache(FpMatrix const &code) : code_(&code) {}

  Info &get(std::vector<std::size_t> const &cols)
  {
    auto it = cache_.find(cols);
    if (it != cache_.end())
      return it->second;

    if (cache_.size() > MaxEntries)
      cache_.clear();

    Info info;
    info.matrix = stabMatrix(*code_, cols);
    info.classes = columnClasses(info.matrix);
    info.signature = info.classes.signature();
    return cache_.emplace(cols, std::move(info)).first->second;
  }

  std::vector<std::uint64_t> const *enumerator(Info &info,
                                               std::uint64_t budget)
  {
    if (!info.enumeratorTried) {
      info.enumeratorTried = true;
      info.enumerator = weightEnumerator(info.matrix, budget);
    }
    return info.enumerator ? &*info.enumerator : nullptr;
  }

private:
  static constexpr std::size_t MaxEntries = 50000;

  FpMatrix const *code_;
  std::map<std::vector<std::size_t>, Info> cache_;
};

class Searcher
{
public:
  Searcher(InPInstance const &inst, SearchOptions const &opts,
           SearchConstraints const &cons);

  NormalizerResult run();

private:
  static constexpr long Continue = -1;

  long recurse(std::size_t d, Domains doms);
  long leaf();
  long limitDepthNode();

  bool orbitMinimal(std::size_t d);
  bool prune(std::size_t d, Domains &doms);
  bool checkLds(std::vector<FpVector> const &columns,
                std::vector<std::vector<std::size_t>> const &sets,
                std::size_t d, Domains &doms);
  bool compareStabs(std::size_t d, Domains &doms);
  bool compareStabsFor(StabCache &cache, std::size_t d, Domains &doms,
                       std::vector<std::size_t> const &src,
                       std::vector<std::size_t> const &img, bool same);
  void deepPrune(std::size_t d, Domains &doms);

  bool permitted(std::vector<std::size_t> const &pi) const;
  bool tryAdd(Permutation const &element, std::vector<std::size_t> const &pi);
  std::size_t identityPrefix(std::size_t len) const;
  void tick();

  InPInstance const &inst_;
  SearchOptions const &opts_;
  SearchConstraints const &cons_;
  PrimeField const &F_;
  std::size_t k_, s_;

  KappaTester kappa_;

  std::vector<FpVector> colsM_, colsDual_;
  std::vector<std::vector<std::size_t>> ldsPrimal_, ldsDual_;
  std::vector<Domain> zeroSet_;
  StabCache stabM_, stabDual_;

  std::vector<Permutation> gens_;
  std::vector<Permutation> inducedGens_;
  StabChain induced_;
  std::vector<std::vector<std::size_t>> orbitMin_;
  std::vector<bool> orbitMinValid_;

  std::vector<std::size_t> alpha_;
  std::vector<bool> used_;

  SearchStats stats_;
};

Searcher::Searcher(InPInstance const &inst, SearchOptions const &opts,
                   SearchConstraints const &cons)
: inst_(inst),
  opts_(opts),
  cons_(cons),
  F_(inst.field()),
  k_(inst.k()),
  s_(inst.s()),
  kappa_(inst),
  stabM_(inst.M()),
  stabDual_(inst.Mdual())
{
  auto const &M = inst.M();
  auto const &Md = inst.Mdual();

  for (std::size_t c = 0; c < k_; ++c) {
    colsM_.push_back(M.column(c));
    colsDual_.push_back(Md.column(c));
  }

  for (std::size_t i = s_; i < k_; ++i) {
    std::vector<std::size_t> set{i};
    for (std::size_t j = 0; j < s_; ++j) {
      if (M(j, i))
        set.push_back(j);
    }
    ldsPrimal_.push_back(std::move(set));
  }

  for (std::size_t i = 0; i < s_; ++i) {
    std::vector<std::size_t> set{i};
    for (std::size_t r = 0; r < Md.rows(); ++r) {
      if (Md(r, i))
        set.push_back(s_ + r);
    }
    ldsDual_.push_back(std::move(set));
  }

  for (std::size_t i = 0; i < s_; ++i) {
    Domain z(k_);
    for (std::size_t c = 0; c < k_; ++c)
      z[c] = M(i, c) == 0;
    zeroSet_.push_back(std::move(z));
  }

  alpha_.assign(k_, 0);
  used_.assign(k_, false);

  std::vector<Point> prefix(k_);
  std::iota(prefix.begin(), prefix.end(), Point{0});
  induced_ = StabChain(PermGroup(k_, {}), prefix);
  orbitMin_.assign(k_ + 1, {});
  orbitMinValid_.assign(k_ + 1, false);
}

NormalizerResult Searcher::run()
{
  for (auto const &g : normBH(inst_).generators)
    gens_.push_back(g);

  auto seed = domainsInit(inst_, opts_, cons_);
  for (auto const &sw : seed.dualSwaps) {
    auto pi = inst_.orbitPermutation(sw);
    if (permitted(pi))
      tryAdd(sw, pi);
  }

  Domains doms(k_, Domain(k_));
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j : seed.partition.cell(seed.partition.cellOf(i)))
      doms[i].set(j);
  }

  recurse(0, std::move(doms));

  NormalizerResult res;
  res.order = StabChain(PermGroup(inst_.n(), gens_)).order();
  res.generators = std::move(gens_);
  res.stats = stats_;
  return res;
}

void Searcher::tick()
{
  ++stats_.nodes;
  if (opts_.deadline && (stats_.nodes & 0xff) == 0 &&
      Clock::now() > *opts_.deadline) {
    throw SearchTimeout();
  }
}

std::size_t Searcher::identityPrefix(std::size_t len) const
{
  std::size_t j = 0;
  while (j < len && alpha_[j] == j)
    ++j;
  return j;
}

bool Searcher::permitted(std::vector<std::size_t> const &pi) const
{
  if (!cons_.colours.empty()) {
    for (std::size_t i = 0; i < k_; ++i) {
      if (cons_.colours[i] != cons_.colours[pi[i]])
        return false;
    }
  }

  return !cons_.allowed || cons_.allowed->contains(asPermutation(pi));
}

bool Searcher::tryAdd(Permutation const &element,
                      std::vector<std::size_t> const &pi)
{
  // N already contains N_B(H), so an element is redundant exactly when its
  // orbit permutation is already induced by N.
  auto perm = asPermutation(pi);
  if (induced_.contains(perm))
    return false;

  gens_.push_back(element);
  inducedGens_.push_back(perm);

  std::vector<Point> prefix(k_);
  std::iota(prefix.begin(), prefix.end(), Point{0});
  induced_ = StabChain(PermGroup(k_, inducedGens_), prefix);
  std::fill(orbitMinValid_.begin(), orbitMinValid_.end(), false);

  ++stats_.found;
  return true;
}

bool Searcher::orbitMinimal(std::size_t d)
{
  // only the all-fixed prefix is tested: alpha_[0..d-2] is the identity
  if (d == 0 || identityPrefix(d - 1) != d - 1 || alpha_[d - 1] == d - 1)
    return true;

  std::size_t level = d - 1;
  if (!orbitMinValid_[level]) {
    auto &mins = orbitMin_[level];
    mins.assign(k_, k_);
    for (std::size_t x = 0; x < k_; ++x) {
      if (mins[x] != k_)
        continue;
      auto orbit = induced_.orbitAtLevel(static_cast<Point>(x), level);
      std::size_t m = *std::min_element(orbit.begin(), orbit.end());
      for (auto y : orbit)
        mins[y] = m;
    }
    orbitMinValid_[level] = true;
  }

  return orbitMin_[level][alpha_[d - 1]] == alpha_[d - 1];
}

long Searcher::recurse(std::size_t d, Domains doms)
{
  tick();

  if (!orbitMinimal(d)) {
    ++stats_.orbitPrunes;
    return Continue;
  }

  bool limitLeaf = opts_.method == Method::LimitDepth && d == s_;

  if (d == k_ && !limitLeaf)
    return leaf();

  if (!prune(d, doms))
    return Continue;

  if (limitLeaf)
    return limitDepthNode();

  for (auto c = doms[d].find_first(); c != Domain::npos;
       c = doms[d].find_next(c)) {
    if (used_[c])
      continue;

    alpha_[d] = c;
    used_[c] = true;

    Domains child(doms);
    child[d] = singleton(k_, c);
    long jump = recurse(d + 1, std::move(child));

    used_[c] = false;

    if (jump != Continue && static_cast<std::size_t>(jump) < d)
      return jump;
  }

  return Continue;
}

long Searcher::leaf()
{
  ++stats_.leaves;

  if (!permitted(alpha_))
    return Continue;

  auto res = kappa_.test(alpha_);
  if (!res)
    return Continue;

  tryAdd(res->element, alpha_);
  return static_cast<long>(identityPrefix(k_));
}

long Searcher::limitDepthNode()
{
  ++stats_.leaves;

  auto const &M = inst_.M();
  std::vector<std::size_t> lead(alpha_.begin(),
                                alpha_.begin() + static_cast<long>(s_));

  auto P = pivotOnColumns(M, lead);
  if (!P)
    return Continue;

  std::map<FpVector, std::size_t> keyOf;
  for (std::size_t j = s_; j < k_; ++j) {
    if (!keyOf.emplace(normalizedColumn(M, j), j).second)
      throw std::logic_error("limitDepth requires pairwise inequivalent orbits");
  }

  std::vector<std::size_t> positions;
  for (std::size_t c = 0; c < k_; ++c) {
    if (!used_[c])
      positions.push_back(c);
  }

  std::vector<FpVector> pcols;
  for (std::size_t c : positions)
    pcols.push_back(P->column(c));

  std::size_t jump = identityPrefix(s_);
  unsigned p = inst_.p();

  Monomial w{FpVector(k_), std::vector<std::size_t>(k_)};
  std::vector<unsigned> dvec(s_, 1);
  std::vector<bool> taken(k_);
  FpVector v(s_);

  std::uint64_t iter = 0;
  while (true) {
    if (opts_.deadline && (++iter & 0xfff) == 0 && Clock::now() > *opts_.deadline)
      throw SearchTimeout();

    bool ok = true;
    std::fill(taken.begin(), taken.end(), false);
    for (std::size_t idx = 0; idx < positions.size() && ok; ++idx) {
      std::size_t r0 = s_;
      for (std::size_t r = 0; r < s_; ++r) {
        v[r] = static_cast<Elem>(F_.mul(dvec[r], pcols[idx][r]));
        if (v[r] && r0 == s_)
          r0 = r;
      }
      if (r0 == s_) {
        ok = false;
        break;
      }

      unsigned lead0 = v[r0];
      kernels::scale(v.data(), F_.inv(lead0), p, s_);

      auto it = keyOf.find(v);
      if (it == keyOf.end() || taken[it->second]) {
        ok = false;
        break;
      }

      std::size_t j = it->second;
      taken[j] = true;
      w.pi[j] = positions[idx];
      w.d[j] = static_cast<Elem>(F_.mul(lead0, F_.inv(M(r0, j))));
    }

    if (ok) {
      for (std::size_t i = 0; i < s_; ++i) {
        w.pi[i] = alpha_[i];
        w.d[i] = static_cast<Elem>(dvec[i]);
      }

      if (permitted(w.pi)) {
        Permutation element = inst_.xiPreimage(w);
        if (!inst_.normalises(element))
          throw std::logic_error("limitDepth produced a non-normalising element");

        tryAdd(element, w.pi);
        if (jump < s_)
          return static_cast<long>(jump);
      }
    }

    std::size_t r = 0;
    while (r < s_ && dvec[r] == p - 1)
      dvec[r++] = 1;
    if (r == s_)
      break;
    ++dvec[r];
  }

  return Continue;
}

bool Searcher::prune(std::size_t d, Domains &doms)
{
  if (opts_.enabled(Rule::Lds)) {
    if (!checkLds(colsM_, ldsPrimal_, d, doms) ||
        !checkLds(colsDual_, ldsDual_, d, doms)) {
      ++stats_.prunes[ruleIndex(Rule::Lds)];
      return false;
    }
  }

  if (d > 0 && (opts_.enabled(Rule::Stabs) || opts_.enabled(Rule::Weights))) {
    if (!compareStabs(d, doms))
      return false;
  }

  if (opts_.enabled(Rule::Deep) && d > s_)
    deepPrune(d, doms);

  if (opts_.enabled(Rule::AllDiff)) {
    if (!allDiffRefiner(doms)) {
      ++stats_.prunes[ruleIndex(Rule::AllDiff)];
      return false;
    }
  }

  for (std::size_t i = d; i < k_; ++i) {
    if (doms[i].none())
      return false;
  }

  return true;
}

bool Searcher::checkLds(std::vector<FpVector> const &columns,
                        std::vector<std::vector<std::size_t>> const &sets,
                        std::size_t d, Domains &doms)
{
  std::size_t len = columns.empty() ? 0 : columns.front().size();

  for (auto const &set : sets) {
    std::size_t open = k_, count = 0;
    for (auto i : set) {
      if (i >= d) {
        open = i;
        ++count;
      }
    }
    if (count != 1)
      continue;

    // the placed members are independent, and the last one must land in
    // their span
    RowSpace span(inst_.p(), len);
    for (auto i : set) {
      if (i != open && !span.insert(columns[alpha_[i]]))
        return false;
    }

    for (auto c = doms[open].find_first(); c != Domain::npos;
         c = doms[open].find_next(c)) {
      if (!span.contains(columns[c])) {
        doms[open].reset(c);
        ++stats_.prunes[ruleIndex(Rule::Lds)];
      }
    }
  }

  return true;
}

bool Searcher::compareStabs(std::size_t d, Domains &doms)
{
  std::vector<std::size_t> src(d), img(alpha_.begin(),
                                       alpha_.begin() + static_cast<long>(d));
  std::iota(src.begin(), src.end(), std::size_t{0});
  std::sort(img.begin(), img.end());
  bool same = src == img;

  return compareStabsFor(stabM_, d, doms, src, img, same) &&
         compareStabsFor(stabDual_, d, doms, src, img, same);
}

bool Searcher::compareStabsFor(StabCache &cache, std::size_t d, Domains &doms,
                               std::vector<std::size_t> const &src,
                               std::vector<std::size_t> const &img, bool same)
{
  auto &a = cache.get(src);
  auto &b = same ? a : cache.get(img);

  if (opts_.enabled(Rule::Stabs)) {
    if (!same && (a.matrix.rows() != b.matrix.rows() ||
                  a.signature != b.signature)) {
      ++stats_.prunes[ruleIndex(Rule::Stabs)];
      return false;
    }

    for (std::size_t i = d; i < k_; ++i) {
      auto key = a.classes.key(i);
      for (auto j = doms[i].find_first(); j != Domain::npos;
           j = doms[i].find_next(j)) {
        if (b.classes.key(j) != key) {
          doms[i].reset(j);
          ++stats_.prunes[ruleIndex(Rule::Stabs)];
        }
      }
    }
  }

  if (opts_.enabled(Rule::Weights) && !same &&
      a.matrix.rows() == b.matrix.rows() &&
      a.matrix.rows() * inst_.p() <= opts_.weightGate) {
    auto const *wa = cache.enumerator(a, opts_.weightBudget);
    auto const *wb = cache.enumerator(b, opts_.weightBudget);
    if (wa && wb && *wa != *wb) {
      ++stats_.prunes[ruleIndex(Rule::Weights)];
      return false;
    }
  }

  return true;
}

void Searcher::deepPrune(std::size_t d, Domains &doms)
{
  auto const &M = inst_.M();

  for (std::size_t t = d; t < k_; ++t) {
    for (std::size_t i = 0; i < s_; ++i) {
      bool vanishes = true;
      for (std::size_t u = 0; u < s_ && vanishes; ++u)
        vanishes = F_.mul(M(i, alpha_[u]), M(u, t)) == 0;
      if (!vanishes)
        continue;

      auto before = doms[t].count();
      doms[t] &= zeroSet_[i];
      stats_.prunes[ruleIndex(Rule::Deep)] += before - doms[t].count();
    }
  }
}

} // anonymous namespace

std::string_view ruleName(Rule r) { return RuleNames[ruleIndex(r)]; }

std::optional<Rule> parseRule(std::string_view name)
{
  for (std::size_t i = 0; i < NumRules; ++i) {
    if (RuleNames[i] == name)
      return static_cast<Rule>(i);
  }
  return std::nullopt;
}

std::array<Rule, NumRules> allRules()
{
  std::array<Rule, NumRules> rules;
  for (std::size_t i = 0; i < NumRules; ++i)
    rules[i] = static_cast<Rule>(i);
  return rules;
}

void SearchStats::merge(SearchStats const &other)
{
  nodes += other.nodes;
  leaves += other.leaves;
  found += other.found;
  orbitPrunes += other.orbitPrunes;
  for (std::size_t i = 0; i < NumRules; ++i)
    prunes[i] += other.prunes[i];
  timedOut = timedOut || other.timedOut;
}

namespace {

std::vector<std::vector<std::size_t>> incidenceComponents(FpMatrix const &m)
{
  std::size_t k = m.cols();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});

  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t first = k;
    for (std::size_t c = 0; c < k; ++c) {
      if (!m(r, c))
        continue;
      if (first == k)
        first = c;
      else
        parent[find(c)] = find(first);
    }
  }

  std::vector<std::size_t> labels(k);
  for (std::size_t c = 0; c < k; ++c)
    labels[c] = find(c);
  return Partition::fromLabels(labels).cells();
}

} // anonymous namespace

PermGroup normBH(InPInstance const &inst)
{
  std::vector<Permutation> gens(inst.orbitGenerators());

  unsigned t = inst.field().primitiveRoot();
  for (auto const &comp : incidenceComponents(inst.M())) {
    Monomial w = Monomial::identity(inst.k());
    for (std::size_t i : comp)
      w.d[i] = static_cast<Elem>(t);
    gens.push_back(inst.xiPreimage(w));
  }

  return PermGroup(inst.n(), std::move(gens));
}

BigInt normBHOrder(InPInstance const &inst)
{
  BigInt order = 1;
  for (std::size_t i = 0; i < inst.k(); ++i)
    order *= inst.p();
  for (std::size_t i = 0; i < incidenceComponents(inst.M()).size(); ++i)
    order *= inst.p() - 1;
  return order;
}

bool allDiffRefiner(Domains &doms)
{
  std::size_t k = doms.size();

  bool changed = true;
  while (changed) {
    changed = false;

    for (std::size_t i = 0; i < k; ++i) {
      if (doms[i].none())
        return false;

      std::vector<std::size_t> same;
      for (std::size_t j = 0; j < k; ++j) {
        if (doms[j] == doms[i])
          same.push_back(j);
      }

      auto size = doms[i].count();
      if (same.size() > size)
        return false;
      if (same.size() < size)
        continue;

      Domain hall = doms[i];
      for (std::size_t t = 0; t < k; ++t) {
        if (doms[t] == hall || !doms[t].intersects(hall))
          continue;
        doms[t] -= hall;
        changed = true;
        if (doms[t].none())
          return false;
      }
    }
  }

  return true;
}

DomainSeed domainsInit(InPInstance const &inst, SearchOptions const &opts,
                       SearchConstraints const &cons)
{
  std::size_t k = inst.k();
  auto const &F = inst.field();
  auto const &M = inst.M();
  auto const &Md = inst.Mdual();

  DomainSeed seed{Partition::trivial(k), {}};

  if (opts.enabled(Rule::DualPartitions)) {
    auto cc = columnClasses(Md);

    std::vector<std::pair<bool, std::size_t>> labels(k);
    for (std::size_t i = 0; i < k; ++i)
      labels[i] = cc.key(i);
    seed.partition = seed.partition.meet(Partition::fromLabels(labels));

    // Swapping two equivalent orbits of the dual centralises it; the
    // matching element b^-1 kappa then normalises H. A star from the first
    // member spans each class.
    for (std::size_t cell = 0; cell < cc.classes.numCells(); ++cell) {
      auto const &members = cc.classes.cell(cell);
      std::size_t a = members.front();
      for (std::size_t idx = 1; idx < members.size(); ++idx) {
        std::size_t b = members[idx];

        unsigned scalar = 1;
        if (!cc.zeroClass[cell]) {
          std::size_t r = 0;
          while (Md(r, a) == 0)
            ++r;
          scalar = F.mul(Md(r, b), F.inv(Md(r, a)));
        }

        Monomial w = Monomial::identity(k);
        std::swap(w.pi[a], w.pi[b]);
        w.d[a] = static_cast<Elem>(F.inv(scalar));
        w.d[b] = static_cast<Elem>(scalar);

        Permutation element = inst.xiPreimage(w);
        if (!inst.normalises(element))
          throw std::logic_error("dual swap does not normalise H");
        seed.dualSwaps.push_back(std::move(element));
      }
    }
  }

  if (opts.enabled(Rule::StabPartitions)) {
    for (auto const *code : {&M, &Md}) {
      std::vector<std::vector<std::pair<bool, std::size_t>>> labels(k);
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t col[] = {i};
        labels[i] = columnClasses(stabMatrix(*code, col)).signature();
      }
      seed.partition = seed.partition.meet(Partition::fromLabels(labels));
    }
  }

  if (opts.enabled(Rule::InvSet)) {
    auto mw = minWeightVectors(M);
    std::vector<std::size_t> counts(k, 0);
    for (auto const &v : mw.vectors) {
      for (std::size_t i = 0; i < k; ++i)
        counts[i] += v[i] != 0;
    }
    seed.partition = seed.partition.meet(Partition::fromLabels(counts));
  }

  if (!cons.colours.empty())
    seed.partition = seed.partition.meet(Partition::fromLabels(cons.colours));

  if (cons.allowed) {
    std::vector<std::size_t> labels(k);
    auto orbits = orbitsOf(PermGroup(k, cons.allowed->strongGenerators(0)));
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      for (auto x : orbits[o])
        labels[x] = o;
    }
    seed.partition = seed.partition.meet(Partition::fromLabels(labels));
  }

  return seed;
}

NormalizerResult searchNormalizer(InPInstance const &inst,
                                  SearchOptions const &opts,
                                  SearchConstraints const &cons)
{
  Searcher searcher(inst, opts, cons);
  return searcher.run();
}

} // namespace normsym
