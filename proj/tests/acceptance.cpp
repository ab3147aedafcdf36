// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "normsym/canon.hpp"
#include "normsym/dihedral.hpp"
#include "normsym/generate.hpp"
#include "normsym/oracle.hpp"
#include "normsym/pipeline.hpp"
#include "support.hpp"

using namespace testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome
{
  bool pass = true;
  std::string detail;

  void fail(std::string why)
  {
    if (pass)
      detail = std::move(why);
    pass = false;
  }
};

BigInt power(unsigned p, std::size_t k)
{
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i)
    r *= p;
  return r;
}

double seconds(Clock::time_point since)
{
  return std::chrono::duration<double>(Clock::now() - since).count();
}

double median(std::vector<double> v)
{
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

std::string show(BigInt const &x) { return x.str(); }

bool hasZeroColumn(FpMatrix const &m)
{
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.columnIsZero(c))
      return true;
  }
  return false;
}

// Every s x k reduced row echelon matrix of rank s over F_p.
std::vector<FpMatrix> allRref(unsigned p, std::size_t s, std::size_t k)
{
  std::vector<FpMatrix> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < s * k; ++i)
    total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    FpMatrix m(p, s, k);
    std::uint64_t c = code;
    for (std::size_t r = 0; r < s; ++r) {
      for (std::size_t j = 0; j < k; ++j) {
        m(r, j) = static_cast<Elem>(c % p);
        c /= p;
      }
    }
    if (rank(m) == s && rowBasis(m) == m)
      out.push_back(m);
  }
  return out;
}

std::vector<Permutation> generatorsOf(std::vector<Permutation> const &gens, std::size_t n)
{
  if (gens.empty())
    return {Permutation(n)};
  return gens;
}

struct Run
{
  InPInstance inst;
  std::vector<Permutation> generators;
};

std::vector<Run> criterion1Runs;

Outcome criterion1()
{
  Outcome o;
  std::size_t count = 0;
  for (std::uint64_t seed = 1; count < 240; ++seed) {
    unsigned p = seed % 2 ? 2 : 3;
    std::size_t k = 1 + seed % 5, dim = 1 + (seed / 5) % k;
    auto m = randomCode(p, k, dim, seed);
    auto h = codeToGroup(m);
    auto res = normalizerInP(h, p);
    auto want = power(p, k) * bruteMAut(m).size();
    ++count;
    if (res.order != want) {
      o.fail("seed " + std::to_string(seed) + ": " + show(res.order) + " vs " + show(want));
      continue;
    }
    criterion1Runs.push_back({buildInstance(h, p), res.generators});
  }
  if (o.pass)
    o.detail = std::to_string(count) + " instances";
  return o;
}

Outcome criterion2()
{
  Outcome o;
  std::size_t count = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t s = 1; s <= k; ++s) {
      for (auto const &m : allRref(2, s, k)) {
        if (hasZeroColumn(m))
          continue;
        auto h = codeToGroup(m);
        auto res = normalizerInP(h, 2);
        auto brute = bruteNormalizer(h);
        ++count;
        StabChain got(PermGroup(h.degree, generatorsOf(res.generators, h.degree)));
        bool ok = got.order() == brute.size();
        for (auto const &g : res.generators)
          ok = ok && std::binary_search(brute.begin(), brute.end(), g);
        for (std::size_t i = 0; ok && i < brute.size(); ++i)
          ok = got.contains(brute[i]);
        if (!ok)
          o.fail("mismatch at k=" + std::to_string(k) + " s=" + std::to_string(s));
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(count) + " codes";
  return o;
}

Outcome criterion3()
{
  Outcome o;
  std::mt19937_64 rng(3);
  std::size_t trials = 0;
  for (int i = 0; i < 50; ++i) {
    unsigned p = std::vector<unsigned>{3, 5, 7, 11}[i % 4];
    std::size_t s = 1 + rng() % 4, k = s + 1 + rng() % 5;
    auto a = randomStandard(rng, p, s, k);
    auto rep = canonicalRep(a).rep;
    for (int t = 0; t < 20; ++t, ++trials) {
      auto r = randomInvertible(rng, p, s);
      auto d = randomScalars(rng, p, k);
      FpMatrix dm(p, k, k);
      for (std::size_t j = 0; j < k; ++j)
        dm(j, j) = d[j];
      auto moved = rrefStandard(r.multiply(a).multiply(dm)).reduced;
      if (canonicalRep(moved).rep != rep)
        o.fail("invariance fails for matrix " + std::to_string(i));
    }
  }

  std::size_t exhaustive = 0;
  for (unsigned p : {2u, 3u}) {
    for (std::size_t s = 1; s <= 2; ++s) {
      for (std::size_t k = s; k <= 4; ++k) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < s * (k - s); ++i)
          total *= p;
        for (std::uint64_t code = 0; code < total; ++code) {
          FpMatrix m(p, s, k);
          std::uint64_t c = code;
          for (std::size_t r = 0; r < s; ++r) {
            m(r, r) = 1;
            for (std::size_t j = s; j < k; ++j) {
              m(r, j) = static_cast<Elem>(c % p);
              c /= p;
            }
          }
          ++exhaustive;
          if (canonicalRep(m).rep != bruteCanonRep(m))
            o.fail("minimality fails over F_" + std::to_string(p));
        }
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(trials) + " moves, " + std::to_string(exhaustive) +
               " matrices exhaustively";
  return o;
}

Outcome criterion4()
{
  Outcome o;
  std::size_t count = 0;
  for (auto const &run : criterion1Runs) {
    for (auto const &g : run.generators) {
      auto bk = run.inst.decomposeBK(g);
      ++count;
      if (!bk || !run.inst.normalisesDual(bk->first.inverse() * bk->second))
        o.fail("generator " + g.str() + " of an instance on " +
               std::to_string(run.inst.n()) + " points");
    }
  }
  if (criterion1Runs.empty())
    o.fail("no runs recorded by criterion 1");
  if (o.pass)
    o.detail = std::to_string(count) + " generators";
  return o;
}

Outcome criterion5()
{
  Outcome o;
  std::size_t count = 0;
  for (std::uint64_t seed = 1; count < 50; ++seed) {
    std::size_t k = 1 + seed % 3, dim = 1 + (seed / 3) % k;
    auto inst = buildInstance(codeToGroup(randomCode(3, k, dim, seed)), 3);
    auto brute = bruteNormBH(inst);
    StabChain chain(normBH(inst));
    ++count;
    bool ok = chain.order() == brute.size();
    for (std::size_t i = 0; ok && i < brute.size(); ++i)
      ok = chain.contains(brute[i]);
    if (!ok)
      o.fail("seed " + std::to_string(seed));
  }
  if (o.pass)
    o.detail = std::to_string(count) + " instances";
  return o;
}

Outcome criterion6()
{
  Outcome o;
  std::uint64_t nodesOn = 0, nodesOff = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    unsigned p = std::vector<unsigned>{2, 3, 5}[seed % 3];
    std::size_t k = p == 5 ? 3 + seed % 8 : 3 + seed % 10;
    // the all-off baseline walks most of S_k, so larger k gets a smaller code
    std::size_t dim = 1 + (seed / 3) % std::min<std::size_t>(k - 1, k >= 11 ? 4 : 5);
    auto h = randomCyclicGroup(p, k, dim, seed);

    SearchOptions on, off;
    off.disabled.set();
    auto a = normalizerInP(h, p, on), b = normalizerInP(h, p, off);
    nodesOn += a.stats.nodes;
    nodesOff += b.stats.nodes;
    if (a.order != b.order)
      o.fail("seed " + std::to_string(seed) + ": all rules off changes the order");
    if (a.stats.nodes > b.stats.nodes)
      o.fail("seed " + std::to_string(seed) + ": more nodes with rules on (" +
             std::to_string(a.stats.nodes) + " > " + std::to_string(b.stats.nodes) + ")");
    for (auto r : allRules()) {
      SearchOptions one;
      one.disabled.set(static_cast<unsigned>(r));
      if (normalizerInP(h, p, one).order != a.order)
        o.fail("seed " + std::to_string(seed) + ": rule " + std::string(ruleName(r)));
    }
  }
  if (o.pass)
    o.detail = "nodes " + std::to_string(nodesOn) + " on vs " + std::to_string(nodesOff) + " off";
  return o;
}

// Every subdirect product of two copies of S_3, found by closing the
// subgroup lattice of S_3 x S_3 under adjoining one element at a time.
std::vector<PermGroup> smallDihedralGroups()
{
  std::vector<Permutation> s3;
  std::vector<Point> img{0, 1, 2};
  do {
    s3.push_back(Permutation::fromImages(img));
  } while (std::next_permutation(img.begin(), img.end()));

  std::vector<Permutation> product;
  for (auto const &a : s3) {
    for (auto const &b : s3) {
      std::vector<Point> im(6);
      for (Point x = 0; x < 3; ++x) {
        im[x] = a[x];
        im[3 + x] = 3 + b[x];
      }
      product.push_back(Permutation::fromImages(im));
    }
  }

  std::map<std::set<Permutation>, std::vector<Permutation>> lattice{
      {{Permutation(6)}, {}}};
  std::vector<std::set<Permutation>> todo{{Permutation(6)}};
  while (!todo.empty()) {
    auto els = todo.back();
    todo.pop_back();
    auto gens = lattice[els];
    for (auto const &e : product) {
      if (els.count(e))
        continue;
      auto more = gens;
      more.push_back(e);
      auto bigger = elements(PermGroup(6, more));
      if (lattice.emplace(bigger, more).second)
        todo.push_back(bigger);
    }
  }

  std::vector<PermGroup> out{group(3, {"(1 2 3)", "(1 2)"})};
  std::vector<Point> first{0, 1, 2}, second{3, 4, 5};
  for (auto const &[els, gens] : lattice) {
    std::set<Permutation> r1, r2;
    for (auto const &e : els) {
      r1.insert(restrictTo(e, first));
      r2.insert(restrictTo(e, second));
    }
    if (r1.size() == 6 && r2.size() == 6)
      out.push_back(PermGroup(6, gens));
  }
  return out;
}

bool sylowHolds(DihedralInstance const &d)
{
  auto isPow = [](BigInt x, unsigned q) {
    while (x > 1 && x % q == 0)
      x /= q;
    return x == 1;
  };
  if (d.orderP * d.order2 != d.order || !isPow(d.orderP, d.p) || !isPow(d.order2, 2))
    return false;
  if (orderOf(d.Hp) != d.orderP || orderOf(d.H2) != d.order2)
    return false;
  StabChain hp(d.Hp), h(d.H);
  for (auto const &g : d.H.generators) {
    for (auto const &x : d.Hp.generators) {
      if (!hp.contains(x.conjugate(g)))
        return false;
    }
  }
  for (auto const &t : d.H2.generators) {
    if (!h.contains(t))
      return false;
    for (auto a : d.alpha) {
      if (t[a] != a)
        return false;
    }
  }
  return true;
}

Outcome criterion7()
{
  Outcome o;
  auto groups = smallDihedralGroups();
  for (auto const &h : groups) {
    auto d = buildDihedral(h, 3);
    auto res = normalizerDihedral(d);
    auto brute = bruteNormalizer(h);
    StabChain got(PermGroup(h.degree, generatorsOf(res.generators, h.degree)));
    bool ok = got.order() == brute.size() && res.order == brute.size();
    for (std::size_t i = 0; ok && i < brute.size(); ++i)
      ok = got.contains(brute[i]);
    if (!ok || !sylowHolds(d))
      o.fail("group with generators " + h.generators[0].str() + ", " +
             h.generators.back().str());
  }

  std::size_t larger = 0;
  for (std::uint64_t seed = 1; larger < 100; ++seed) {
    unsigned p = std::vector<unsigned>{3, 5, 7}[seed % 3];
    std::size_t k = 2 + seed % 7, dim = 1 + (seed / 3) % k;
    auto h = randomDihedralGroup(p, k, dim, seed);
    auto d = buildDihedral(h, p);
    ++larger;
    if (!sylowHolds(d))
      o.fail("Sylow split fails for seed " + std::to_string(seed));
  }
  if (o.pass)
    o.detail = std::to_string(groups.size()) + " groups exhaustively, " +
               std::to_string(larger) + " larger instances";
  return o;
}

Outcome criterion8()
{
  Outcome o;
  std::pair<unsigned, std::size_t> cells[] = {{5, 4}, {5, 6}, {5, 8}, {2, 6}, {3, 6}};
  std::size_t count = 0;
  for (auto [p, s] : cells) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      auto h = randomCyclicGroup(p, 20, s, seed);
      SearchOptions lim;
      lim.method = Method::LimitDepth;
      auto a = normalizerInP(h, p), b = normalizerInP(h, p, lim);
      ++count;
      if (a.order != b.order)
        o.fail("p=" + std::to_string(p) + " s=" + std::to_string(s) + " seed " +
               std::to_string(seed));
    }
  }
  if (o.pass)
    o.detail = std::to_string(count) + " instances";
  return o;
}

// Seconds for one run, or nothing on timeout.
std::optional<double> timed(PermGroup const &h, unsigned p, Method method, double limit)
{
  SearchOptions opts;
  opts.method = method;
  auto start = Clock::now();
  opts.deadline = start + std::chrono::milliseconds(static_cast<long long>(limit * 1000));
  try {
    normalizerInP(h, p, opts);
  } catch (SearchTimeout const &) {
    return std::nullopt;
  }
  return seconds(start);
}

Outcome criterion9()
{
  Outcome o;
  std::vector<double> small;
  for (std::uint64_t seed = 1; seed <= 11; ++seed) {
    auto t = timed(randomCyclicGroup(3, 10, 5, seed), 3, Method::Full, 600);
    small.push_back(t ? *t : 600);
  }
  double med = median(small);
  if (med >= 60)
    o.fail("median " + std::to_string(med) + " s at p=3 k=10 dim=5");

  std::vector<double> full, lim;
  std::size_t limTimeouts = 0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto h = randomCyclicGroup(11, 20, 6, seed);
    auto f = timed(h, 11, Method::Full, 600);
    if (!f)
      o.fail("fullSearch timed out at p=11 k=20 dim=6, seed " + std::to_string(seed));
    else
      full.push_back(*f);
    auto l = timed(h, 11, Method::LimitDepth, 60);
    if (l)
      lim.push_back(*l);
    else
      ++limTimeouts;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "p=3 k=10 dim=5 median %.3f s; p=11 k=20 dim=6 fullSearch median %.3f s, "
                "limitDepth timed out on %zu/3 at 60 s",
                med, full.empty() ? -1.0 : median(full), limTimeouts);
  if (o.pass)
    o.detail = buf;
  else
    o.detail += std::string("; ") + buf;
  return o;
}

} // anonymous namespace

int main(int argc, char **argv)
{
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", criterion1},
      {"S_n equivalence for n <= 8", criterion2},
      {"canonical form", criterion3},
      {"dual symmetry", criterion4},
      {"N_B(H) against brute force", criterion5},
      {"pruning safety", criterion6},
      {"dihedral equivalence", criterion7},
      {"fullSearch and limitDepth agree", criterion8},
      {"performance", criterion9},
  };

  // optional arguments pick criteria by number
  std::set<std::size_t> only;
  for (int a = 1; a < argc; ++a)
    only.insert(std::stoul(argv[a]));

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1))
      continue;
    auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu %s: %s (%s, %.1f s)\n", i + 1,
                o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), seconds(start));
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
