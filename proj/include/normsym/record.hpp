#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "normsym/perm.hpp"
#include "normsym/search.hpp"

namespace normsym {

/// FNV-1a over the group's text form (prime, degree and generators in the
/// given order).
std::uint64_t instanceHash(unsigned p, PermGroup const &h);

/// One computation, as emitted by the command line tool.
struct RunRecord
{
  std::uint64_t instance = 0;
  unsigned p = 0;
  std::size_t n = 0;
  std::string method;
  std::string route;
  std::string order;  // empty when the run timed out
  std::vector<std::string> generators;
  SearchStats stats;
  double wallMs = 0;

  /// Line-oriented form: a "record" line of key=value fields followed by
  /// one "gen" line per generator and a closing "end".
  std::string text() const;
  nlohmann::json json() const;
};

} // namespace normsym
