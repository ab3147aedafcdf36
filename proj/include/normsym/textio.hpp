#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "normsym/gfp.hpp"
#include "normsym/perm.hpp"

namespace normsym {

struct ParseError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// Parses 1-based cycle notation such as "(1 2 3)(4 5)" or "()". Commas
/// between points are accepted.
Permutation parseCycles(std::string_view text, std::size_t degree);

/// Parses a 1-based image array such as "[2,3,1]".
Permutation parseImages(std::string_view text, std::size_t degree);

/// Either of the two forms above, chosen by the first non-blank character.
Permutation parsePermutation(std::string_view text, std::size_t degree);

/// Group exchange format: a header line "p n", then one generator per line.
/// Blank lines and lines starting with '#' are ignored.
struct GroupFile
{
  unsigned p = 0;
  PermGroup group;
};

GroupFile readGroup(std::istream &in);
GroupFile readGroupFile(std::string const &path);
void writeGroup(std::ostream &out, unsigned p, PermGroup const &g,
                std::string_view comment = {});

/// Matrix text format: a header line "p s k", then s rows of k entries.
FpMatrix readMatrix(std::istream &in);
FpMatrix readMatrixFile(std::string const &path);
void writeMatrix(std::ostream &out, FpMatrix const &m);

} // namespace normsym
