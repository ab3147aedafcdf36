// Command line front end: instance generation, normaliser computation and the
// benchmark harness.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "normsym/dihedral.hpp"
#include "normsym/generate.hpp"
#include "normsym/oracle.hpp"
#include "normsym/pipeline.hpp"
#include "normsym/record.hpp"
#include "normsym/textio.hpp"

using namespace normsym;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome
{
  RunRecord record;
  bool timedOut = false;
};

SearchOptions makeOptions(std::string const &method,
                          std::vector<std::string> const &noPrune,
                          double timeout)
{
  SearchOptions opts;
  opts.method = method == "limitdepth" ? Method::LimitDepth : Method::Full;
  for (auto const &name : noPrune) {
    if (name == "all") {
      opts.disabled.set();
      continue;
    }
    auto r = parseRule(name);
    if (!r)
      throw CLI::ValidationError("--no-prune", "unknown rule '" + name + "'");
    opts.disabled.set(static_cast<std::size_t>(*r));
  }
  if (timeout > 0) {
    opts.deadline = Clock::now() +
      std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(timeout));
  }
  return opts;
}

// A short generating list for an explicitly enumerated group.
std::vector<Permutation> generatingSubset(std::vector<Permutation> const &elements,
                                          std::size_t degree)
{
  std::vector<Permutation> gens;
  StabChain chain(PermGroup(degree, {}));
  for (auto const &g : elements) {
    if (!chain.contains(g)) {
      gens.push_back(g);
      chain = StabChain(PermGroup(degree, gens));
    }
  }
  return gens;
}

Outcome compute(GroupFile const &in, std::string const &method,
                SearchOptions const &opts)
{
  Outcome out;
  auto &rec = out.record;
  rec.instance = instanceHash(in.p, in.group);
  rec.p = in.p;
  rec.n = in.group.degree;
  rec.method = method;

  auto start = Clock::now();
  std::vector<Permutation> gens;

  try {
    if (method == "oracle") {
      auto all = bruteNormalizer(in.group);
      rec.route = "oracle";
      rec.order = std::to_string(all.size());
      gens = generatingSubset(all, in.group.degree);
    } else if (method == "dihedral") {
      auto res = normalizerDihedral(buildDihedral(in.group, in.p), opts);
      rec.route = "dihedral";
      rec.order = res.order.str();
      rec.stats = res.stats;
      gens = std::move(res.generators);
    } else {
      auto res = normalizerInP(in.group, in.p, opts);
      rec.route = std::string(routeName(res.route));
      rec.order = res.order.str();
      rec.stats = res.stats;
      gens = std::move(res.generators);
    }
  } catch (SearchTimeout const &) {
    out.timedOut = true;
    rec.route = "timeout";
  }

  rec.wallMs = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  for (auto const &g : gens)
    rec.generators.push_back(g.str());
  return out;
}

struct FamilyPoint
{
  unsigned p;
  std::size_t k, dim;
};

// "P:K:DIM" where K is "a", "a-b" or "a-b/step" and DIM is a number or "half".
std::vector<FamilyPoint> parseFamily(std::string const &text)
{
  auto fail = [&] { throw CLI::ValidationError("--family", "bad family '" + text + "'"); };

  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');)
    parts.push_back(part);
  if (parts.size() != 3)
    fail();

  std::size_t lo = 0, hi = 0, step = 1;
  char dash = 0, slash = 0;
  std::istringstream ks(parts[1]);
  ks >> lo;
  hi = lo;
  if (ks >> dash) {
    if (dash != '-' || !(ks >> hi))
      fail();
    if (ks >> slash && (slash != '/' || !(ks >> step) || step == 0))
      fail();
  }

  std::vector<FamilyPoint> points;
  unsigned p = static_cast<unsigned>(std::stoul(parts[0]));
  for (std::size_t k = lo; k <= hi; k += step) {
    std::size_t dim = parts[2] == "half" ? k / 2 : std::stoul(parts[2]);
    points.push_back({p, k, dim});
  }
  return points;
}

double quantile(std::vector<double> sorted, double q)
{
  if (sorted.empty())
    return std::numeric_limits<double>::quiet_NaN();
  double pos = q * static_cast<double>(sorted.size() - 1);
  auto i = static_cast<std::size_t>(std::floor(pos));
  double frac = pos - static_cast<double>(i);
  if (i + 1 >= sorted.size() || frac == 0)
    return sorted[i];
  if (std::isinf(sorted[i + 1]))
    return sorted[i + 1];
  return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

std::string seconds(double s, double limit)
{
  if (std::isinf(s))
    return ">" + std::to_string(static_cast<long>(limit));
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << s;
  return out.str();
}

} // anonymous namespace

int main(int argc, char **argv)
{
  CLI::App app{"Normalisers of permutation groups whose orbits all carry the same cyclic or dihedral action"};
  app.require_subcommand(1);

  // gen
  auto *gen = app.add_subcommand("gen", "Write a random instance in the group format");
  unsigned gp = 3;
  std::size_t gk = 4, gdim = 2;
  std::uint64_t gseed = 1;
  bool gdihedral = false;
  std::string gout;
  gen->add_option("--p", gp, "Prime")->required();
  gen->add_option("--k", gk, "Number of orbits")->required();
  gen->add_option("--dim", gdim, "Code dimension")->required();
  gen->add_option("--seed", gseed, "Seed for std::mt19937_64");
  gen->add_flag("--dihedral", gdihedral, "Generate a dihedral-class group");
  gen->add_option("--out", gout, "Output file (default stdout)");

  // compute
  auto *comp = app.add_subcommand("compute", "Compute the normaliser of a group in S_n");
  std::string cin_, cmethod = "full";
  std::vector<std::string> cnoprune;
  double ctimeout = 600;
  bool cjson = false;
  comp->add_option("--in", cin_, "Group file")->required()->check(CLI::ExistingFile);
  comp->add_option("--method", cmethod, "full, limitdepth, dihedral or oracle")
    ->check(CLI::IsMember({"full", "limitdepth", "dihedral", "oracle"}));
  comp->add_option("--no-prune", cnoprune,
                   "Disable a pruning rule (lds, stabs, weights, deep, alldiff, "
                   "dualpart, stabpart, invset, all); repeatable");
  comp->add_option("--timeout", ctimeout, "Seconds before giving up (0 = none)");
  comp->add_flag("--json", cjson, "Emit JSON instead of the line format");

  // bench
  auto *bench = app.add_subcommand("bench", "Time random instances and report quartiles");
  std::vector<std::string> bfamily;
  std::size_t btrials = 10;
  double btimeout = 600;
  std::string bmethod = "full";
  bool bdihedral = false;
  std::uint64_t bseed = 1;
  bench->add_option("--family", bfamily, "P:K:DIM, K as a, a-b or a-b/step, DIM a number or 'half'")
    ->required();
  bench->add_option("--trials", btrials, "Seeds per point");
  bench->add_option("--timeout", btimeout, "Seconds per run");
  bench->add_option("--method", bmethod, "full, limitdepth or both")
    ->check(CLI::IsMember({"full", "limitdepth", "both"}));
  bench->add_flag("--dihedral", bdihedral, "Dihedral-class instances");
  bench->add_option("--seed", bseed, "First seed");

  // fixture generation; not advertised
  auto *oracle = app.add_subcommand("oracle", "");
  oracle->group("");
  std::string oin;
  oracle->add_option("--in", oin)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      PermGroup h = gdihedral ? randomDihedralGroup(gp, gk, gdim, gseed)
                              : randomCyclicGroup(gp, gk, gdim, gseed);
      std::ostringstream comment;
      comment << "gen p=" << gp << " k=" << gk << " dim=" << gdim
              << " seed=" << gseed << (gdihedral ? " dihedral" : "");
      if (gout.empty()) {
        writeGroup(std::cout, gp, h, comment.str());
      } else {
        std::ofstream f(gout);
        writeGroup(f, gp, h, comment.str());
      }
      return 0;
    }

    if (comp->parsed()) {
      GroupFile in = readGroupFile(cin_);
      auto out = compute(in, cmethod, makeOptions(cmethod, cnoprune, ctimeout));
      if (cjson)
        std::cout << out.record.json().dump(2) << '\n';
      else
        std::cout << out.record.text();
      return out.timedOut ? 2 : 0;
    }

    if (oracle->parsed()) {
      GroupFile in = readGroupFile(oin);
      auto all = bruteNormalizer(in.group);
      std::cout << "order " << all.size() << '\n';
      for (auto const &g : generatingSubset(all, in.group.degree))
        std::cout << "gen " << g.str() << '\n';
      return 0;
    }

    if (bench->parsed()) {
      std::vector<std::string> methods;
      if (bdihedral)
        methods = {"dihedral"};
      else if (bmethod == "both")
        methods = {"full", "limitdepth"};
      else
        methods = {bmethod};

      std::cout << "p\tk\tdim\tmethod\ttrials\tsolved\tmedian_s\tq1_s\tq3_s\n";
      for (auto const &family : bfamily) {
        for (auto const &pt : parseFamily(family)) {
          for (auto const &m : methods) {
            std::vector<double> times;
            std::size_t solved = 0;
            for (std::size_t t = 0; t < btrials; ++t) {
              std::uint64_t seed = bseed + t;
              GroupFile in{pt.p, bdihedral ? randomDihedralGroup(pt.p, pt.k, pt.dim, seed)
                                           : randomCyclicGroup(pt.p, pt.k, pt.dim, seed)};
              auto out = compute(in, m, makeOptions(m, {}, btimeout));
              if (out.timedOut) {
                times.push_back(std::numeric_limits<double>::infinity());
              } else {
                times.push_back(out.record.wallMs / 1000.0);
                ++solved;
              }
            }
            std::sort(times.begin(), times.end());
            std::cout << pt.p << '\t' << pt.k << '\t' << pt.dim << '\t' << m << '\t'
                      << btrials << '\t' << solved << '\t'
                      << seconds(quantile(times, 0.5), btimeout) << '\t'
                      << seconds(quantile(times, 0.25), btimeout) << '\t'
                      << seconds(quantile(times, 0.75), btimeout) << '\n'
                      << std::flush;
          }
        }
      }
      return 0;
    }
  } catch (NotInClass const &e) {
    std::cerr << "not in class: " << e.what() << '\n';
    return 1;
  } catch (ParseError const &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (BudgetExceeded const &e) {
    std::cerr << "oracle: " << e.what() << '\n';
    return 1;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  return 0;
}
