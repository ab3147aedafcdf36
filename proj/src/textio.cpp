#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "normsym/textio.hpp"

namespace normsym {

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Point parsePoint(std::string_view token, std::size_t degree)
{
  if (token.empty())
    throw ParseError("empty point");

  unsigned long v = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad point '" + std::string(token) + "'");
    v = v * 10 + static_cast<unsigned long>(c - '0');
    if (v > degree)
      break;
  }

  if (v == 0 || v > degree)
    throw ParseError("point " + std::string(token) + " outside 1.." +
                     std::to_string(degree));

  return static_cast<Point>(v - 1);
}

std::vector<std::string_view> splitPoints(std::string_view body)
{
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (body[i] == ',' ||
           std::isspace(static_cast<unsigned char>(body[i]))))
      ++i;
    std::size_t j = i;
    while (j < body.size() && body[j] != ',' &&
           !std::isspace(static_cast<unsigned char>(body[j])))
      ++j;
    if (j > i)
      tokens.push_back(body.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool skippable(std::string_view line)
{
  line = trim(line);
  return line.empty() || line.front() == '#';
}

std::vector<unsigned> parseNumbers(std::string_view line)
{
  std::vector<unsigned> values;
  std::istringstream ss{std::string(line)};
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (std::exception const &) {
      throw ParseError("bad number '" + tok + "'");
    }
    if (used != tok.size())
      throw ParseError("bad number '" + tok + "'");
    values.push_back(static_cast<unsigned>(v));
  }
  return values;
}

bool nextContentLine(std::istream &in, std::string &line,
                     std::size_t *lineNo = nullptr)
{
  while (std::getline(in, line)) {
    if (lineNo)
      ++*lineNo;
    if (!skippable(line))
      return true;
  }
  return false;
}

} // anonymous namespace

Permutation parseCycles(std::string_view text, std::size_t degree)
{
  text = trim(text);

  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw ParseError("expected '(' in '" + std::string(text) + "'");

    auto close = text.find(')', i);
    if (close == std::string_view::npos)
      throw ParseError("unbalanced '(' in '" + std::string(text) + "'");

    std::vector<Point> cycle;
    for (auto tok : splitPoints(text.substr(i + 1, close - i - 1)))
      cycle.push_back(parsePoint(tok, degree));
    if (cycle.size() > 1)
      cycles.push_back(std::move(cycle));

    i = close + 1;
  }

  try {
    return Permutation::fromCycles(degree, cycles);
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

Permutation parseImages(std::string_view text, std::size_t degree)
{
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("image array must be enclosed in []");

  std::vector<Point> images;
  for (auto tok : splitPoints(text.substr(1, text.size() - 2)))
    images.push_back(parsePoint(tok, degree));

  if (images.size() != degree)
    throw ParseError("image array has " + std::to_string(images.size()) +
                     " entries, expected " + std::to_string(degree));

  try {
    return Permutation::fromImages(std::move(images));
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

Permutation parsePermutation(std::string_view text, std::size_t degree)
{
  text = trim(text);
  if (!text.empty() && text.front() == '[')
    return parseImages(text, degree);
  return parseCycles(text, degree);
}

GroupFile readGroup(std::istream &in)
{
  std::string line;
  std::size_t lineNo = 0;
  if (!nextContentLine(in, line, &lineNo))
    throw ParseError("missing 'p n' header");

  auto header = parseNumbers(line);
  if (header.size() != 2)
    throw ParseError("header must be 'p n'");

  GroupFile gf;
  gf.p = header[0];
  if (!isPrime(gf.p) || gf.p > MaxPrime)
    throw ParseError("line " + std::to_string(lineNo) + ": p must be a prime <= 251");

  std::vector<Permutation> gens;
  while (nextContentLine(in, line, &lineNo)) {
    try {
      gens.push_back(parsePermutation(line, header[1]));
    } catch (ParseError const &e) {
      throw ParseError("line " + std::to_string(lineNo) + ": " + e.what());
    }
  }

  gf.group = PermGroup(header[1], std::move(gens));
  return gf;
}

GroupFile readGroupFile(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  return readGroup(in);
}

void writeGroup(std::ostream &out, unsigned p, PermGroup const &g,
                std::string_view comment)
{
  if (!comment.empty())
    out << "# " << comment << "\n";
  out << p << " " << g.degree << "\n";
  for (auto const &gen : g.generators)
    out << gen.str() << "\n";
}

FpMatrix readMatrix(std::istream &in)
{
  std::string line;
  if (!nextContentLine(in, line))
    throw ParseError("missing 'p s k' header");

  auto header = parseNumbers(line);
  if (header.size() != 3)
    throw ParseError("header must be 'p s k'");

  unsigned p = header[0];
  if (!isPrime(p) || p > MaxPrime)
    throw ParseError("p must be a prime <= 251");

  FpMatrix m(p, 0, header[2]);
  for (unsigned r = 0; r < header[1]; ++r) {
    if (!nextContentLine(in, line))
      throw ParseError("expected " + std::to_string(header[1]) + " rows");

    auto values = parseNumbers(line);
    if (values.size() != header[2])
      throw ParseError("row " + std::to_string(r + 1) + " has wrong length");

    FpVector v(values.size());
    for (std::size_t c = 0; c < values.size(); ++c) {
      if (values[c] >= p)
        throw ParseError("entry out of range 0..p-1");
      v[c] = static_cast<Elem>(values[c]);
    }
    m.appendRow(v);
  }

  return m;
}

FpMatrix readMatrixFile(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  return readMatrix(in);
}

void writeMatrix(std::ostream &out, FpMatrix const &m)
{
  out << m.prime() << " " << m.rows() << " " << m.cols() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      out << (c ? " " : "") << static_cast<unsigned>(m(r, c));
    out << "\n";
  }
}

} // namespace normsym
