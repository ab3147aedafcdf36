#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "normsym/kernels.hpp"

namespace normsym {

using Elem = kernels::Elem;
using FpVector = std::vector<Elem>;

constexpr unsigned MaxPrime = 251;

bool isPrime(unsigned n);

/// Arithmetic in F_p for a prime p <= 251, with a cached inverse table and
/// the smallest primitive root.
class PrimeField
{
public:
  PrimeField() = default;
  explicit PrimeField(unsigned p);

  // Shared, lazily built instance.
  static PrimeField const &get(unsigned p);

  unsigned p() const { return p_; }
  unsigned primitiveRoot() const { return t_; }

  unsigned add(unsigned a, unsigned b) const { return (a + b) % p_; }
  unsigned sub(unsigned a, unsigned b) const { return (a + p_ - b) % p_; }
  unsigned neg(unsigned a) const { return (p_ - a) % p_; }
  unsigned mul(unsigned a, unsigned b) const { return (a * b) % p_; }
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, unsigned long long e) const;

  bool operator==(PrimeField const &other) const { return p_ == other.p_; }

private:
  unsigned p_ = 0;
  unsigned t_ = 0;
  std::vector<Elem> inv_;
};

/// Row-major dense matrix over F_p.
class FpMatrix
{
public:
  FpMatrix() = default;
  FpMatrix(unsigned p, std::size_t rows, std::size_t cols);

  static FpMatrix fromRows(unsigned p,
                           std::vector<std::vector<unsigned>> const &rows);
  static FpMatrix fromVectors(unsigned p, std::size_t cols,
                              std::vector<FpVector> const &rows);
  static FpMatrix identity(unsigned p, std::size_t n);

  unsigned prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const
  { return data_[r * cols_ + c]; }
  Elem &operator()(std::size_t r, std::size_t c)
  { return data_[r * cols_ + c]; }

  std::span<Elem const> row(std::size_t r) const
  { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r)
  { return {data_.data() + r * cols_, cols_}; }

  FpVector rowVector(std::size_t r) const;
  FpVector column(std::size_t c) const;
  bool columnIsZero(std::size_t c) const;

  void scaleRow(std::size_t r, unsigned a);
  void addRowMultiple(std::size_t dst, std::size_t src, unsigned a);
  void swapRows(std::size_t r1, std::size_t r2);
  void scaleColumn(std::size_t c, unsigned a);
  void appendRow(std::span<Elem const> v);
  void removeRow(std::size_t r);

  FpMatrix transposed() const;
  FpMatrix multiply(FpMatrix const &rhs) const;
  FpVector leftMultiply(std::span<Elem const> x) const;  // x * this
  FpMatrix selectColumns(std::span<std::size_t const> cols) const;

  bool operator==(FpMatrix const &other) const = default;

  std::string str() const;

private:
  unsigned p_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// A partition of {0, ..., n-1}. Cells are sorted and ordered by their least
/// element, so two partitions compare equal iff they are the same set
/// partition.
class Partition
{
public:
  Partition() = default;
  explicit Partition(std::vector<std::vector<std::size_t>> cells);

  static Partition discrete(std::size_t n);
  static Partition trivial(std::size_t n);
  // Points with equal label share a cell.
  template<typename Label>
  static Partition fromLabels(std::vector<Label> const &labels);

  std::size_t size() const { return cellOf_.size(); }
  std::size_t numCells() const { return cells_.size(); }
  std::vector<std::vector<std::size_t>> const &cells() const { return cells_; }
  std::vector<std::size_t> const &cell(std::size_t i) const { return cells_[i]; }
  std::size_t cellOf(std::size_t x) const { return cellOf_[x]; }

  Partition meet(Partition const &other) const;

  bool operator==(Partition const &other) const { return cells_ == other.cells_; }

private:
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::size_t> cellOf_;
};

template<typename Label>
Partition Partition::fromLabels(std::vector<Label> const &labels)
{
  std::vector<std::vector<std::size_t>> cells;
  std::vector<Label const *> seen;

  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::size_t j = 0;
    while (j < seen.size() && !(*seen[j] == labels[i]))
      ++j;

    if (j == seen.size()) {
      seen.push_back(&labels[i]);
      cells.emplace_back();
    }
    cells[j].push_back(i);
  }

  return Partition(std::move(cells));
}

struct RrefResult
{
  FpMatrix reduced;
  std::vector<std::size_t> pivots;
  FpMatrix transform;  // transform * input == reduced
  bool standard;       // pivots are exactly 0..s-1
};

// Throws std::invalid_argument if the rows are dependent or some row is zero.
RrefResult rrefStandard(FpMatrix const &m);

/// Reduced row echelon form of the row space, zero rows dropped.
FpMatrix rowBasis(FpMatrix const &m, std::vector<std::size_t> *pivots = nullptr);

std::size_t rank(FpMatrix const &m);

bool isStandardForm(FpMatrix const &m);

/// Generator matrix of the dual code of a standard-form matrix (I | M0),
/// namely (-M0^T | I).
FpMatrix dualMatrix(FpMatrix const &m);

/// Coefficients c with c * m == v, for m in standard form.
std::optional<FpVector> memberRowSpace(std::span<Elem const> v,
                                       FpMatrix const &m);

/// Row space of an arbitrary matrix, kept in echelon form for membership
/// queries.
class RowSpace
{
public:
  RowSpace(unsigned p, std::size_t len);
  explicit RowSpace(FpMatrix const &m);

  std::size_t dim() const { return basis_.size(); }
  bool contains(std::span<Elem const> v) const;
  // Returns true when v was independent of the current span.
  bool insert(std::span<Elem const> v);

private:
  FpVector reduce(std::span<Elem const> v) const;

  PrimeField const *field_;
  std::size_t len_;
  std::vector<FpVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Column scaled so that its first nonzero entry is 1 (zero column unchanged).
FpVector normalizedColumn(FpMatrix const &m, std::size_t c);

/// Equivalence classes of columns under scaling. Throws on zero columns.
Partition columnEquivClasses(FpMatrix const &m);

/// Class structure of the columns of a possibly degenerate matrix: all zero
/// columns form one tagged class.
struct ColumnClasses
{
  Partition classes;
  std::vector<bool> zeroClass;  // indexed by cell

  // (is zero, class size) of the class containing column c
  std::pair<bool, std::size_t> key(std::size_t c) const;
  // sorted multiset of (is zero, size) over all classes
  std::vector<std::pair<bool, std::size_t>> signature() const;
};

ColumnClasses columnClasses(FpMatrix const &m);

struct MinWeightResult
{
  std::size_t weight;
  std::vector<FpVector> vectors;
};

/// All nonzero codewords of minimum weight in the row space of a standard-form
/// matrix.
MinWeightResult minWeightVectors(FpMatrix const &m);

/// Number of codewords of each weight 0..cols in the row space of a full-rank
/// matrix, or nothing if p^rows exceeds the budget.
std::optional<std::vector<std::uint64_t>> weightEnumerator(
  FpMatrix const &m, std::uint64_t budget = std::uint64_t{1} << 20);

/// Column-by-column order where each column is compared as its reversed
/// sequence, lexicographically.
std::strong_ordering precCompare(FpMatrix const &a, FpMatrix const &b);

} // namespace normsym
