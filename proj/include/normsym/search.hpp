#pragma once

#include <array>
#include <bitset>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "normsym/encode.hpp"
#include "normsym/gfp.hpp"
#include "normsym/stabchain.hpp"

namespace normsym {

/// Pruning rules of the search in K. Each can be switched off on its own.
enum class Rule : unsigned
{
  Lds,             // minimal linearly dependent column sets of M and its dual
  Stabs,           // class structure of orbit-stabiliser subcodes
  Weights,         // weight enumerators of orbit-stabiliser subcodes
  Deep,            // zero-pattern propagation once every pivot is placed
  AllDiff,         // Hall-set refinement of the domains
  DualPartitions,  // dual column classes, with the swaps they provide
  StabPartitions,  // stabiliser class signatures per orbit
  InvSet,          // incidence with minimum-weight codewords
};

constexpr std::size_t NumRules = 8;

std::string_view ruleName(Rule r);
std::optional<Rule> parseRule(std::string_view name);
std::array<Rule, NumRules> allRules();

enum class Method { Full, LimitDepth };

struct SearchTimeout : std::runtime_error
{
  SearchTimeout() : std::runtime_error("search timed out") {}
};

struct SearchOptions
{
  Method method = Method::Full;
  std::bitset<NumRules> disabled;
  unsigned weightGate = 45;  // compare enumerators when dim * p <= gate
  std::uint64_t weightBudget = std::uint64_t{1} << 20;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  bool reduceEquivalent = true;
  bool dualSwap = true;

  bool enabled(Rule r) const { return !disabled[static_cast<unsigned>(r)]; }
};

/// Restrictions on the orbit permutations searched: orbits may only move to
/// orbits of the same colour, and the permutation must lie in the allowed
/// group when one is given.
struct SearchConstraints
{
  std::vector<std::size_t> colours;
  StabChain const *allowed = nullptr;
};

struct SearchStats
{
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t found = 0;
  std::uint64_t orbitPrunes = 0;
  std::array<std::uint64_t, NumRules> prunes{};
  bool timedOut = false;

  void merge(SearchStats const &other);
};

struct NormalizerResult
{
  std::vector<Permutation> generators;
  BigInt order;
  SearchStats stats;
};

using Domain = boost::dynamic_bitset<>;
using Domains = std::vector<Domain>;

/// Generators of the normaliser of H in B: the g_i and, for each connected
/// component of the row/column incidence graph of M, the multiplier by the
/// least primitive root on the orbits of that component.
PermGroup normBH(InPInstance const &inst);
BigInt normBHOrder(InPInstance const &inst);

/// Hall-set refinement to a fixpoint. Returns false on a dead branch.
bool allDiffRefiner(Domains &doms);

/// Per-orbit invariant partition used to seed the domains.
struct DomainSeed
{
  Partition partition;
  std::vector<Permutation> dualSwaps;  // normalisers found along the way
};

DomainSeed domainsInit(InPInstance const &inst, SearchOptions const &opts,
                       SearchConstraints const &cons = {});

/// The search in K for one instance, without orbit reduction or dualising.
NormalizerResult searchNormalizer(InPInstance const &inst,
                                  SearchOptions const &opts,
                                  SearchConstraints const &cons = {});

} // namespace normsym
