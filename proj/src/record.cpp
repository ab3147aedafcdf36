#include <cstdio>
#include <sstream>

#include "normsym/record.hpp"
#include "normsym/textio.hpp"

namespace normsym {

namespace {

std::string hex(std::uint64_t v)
{
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

} // anonymous namespace

std::uint64_t instanceHash(unsigned p, PermGroup const &h)
{
  std::ostringstream out;
  writeGroup(out, p, h);

  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : out.str()) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string RunRecord::text() const
{
  std::ostringstream out;
  out << "record instance=" << hex(instance) << " p=" << p << " n=" << n
      << " method=" << method << " route=" << route
      << " order=" << (order.empty() ? "timeout" : order)
      << " nodes=" << stats.nodes << " leaves=" << stats.leaves
      << " found=" << stats.found << " orbit_prunes=" << stats.orbitPrunes;
  for (auto r : allRules())
    out << " prune." << ruleName(r) << '=' << stats.prunes[static_cast<std::size_t>(r)];
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", wallMs);
  out << " ms=" << ms << '\n';

  for (auto const &g : generators)
    out << "gen " << g << '\n';
  out << "end\n";
  return out.str();
}

nlohmann::json RunRecord::json() const
{
  nlohmann::json prunes = nlohmann::json::object();
  for (auto r : allRules())
    prunes[std::string(ruleName(r))] = stats.prunes[static_cast<std::size_t>(r)];

  return {
    {"instance", hex(instance)},
    {"p", p},
    {"n", n},
    {"method", method},
    {"route", route},
    {"order", order.empty() ? nlohmann::json(nullptr) : nlohmann::json(order)},
    {"timed_out", order.empty()},
    {"generators", generators},
    {"nodes", stats.nodes},
    {"leaves", stats.leaves},
    {"found", stats.found},
    {"orbit_prunes", stats.orbitPrunes},
    {"prunes", prunes},
    {"wall_ms", wallMs},
  };
}

} // namespace normsym
