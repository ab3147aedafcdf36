#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "normsym/gfp.hpp"

namespace normsym {

bool isPrime(unsigned n)
{
  if (n < 2)
    return false;

  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }

  return true;
}

PrimeField::PrimeField(unsigned p)
: p_(p)
{
  if (!isPrime(p) || p > MaxPrime)
    throw std::invalid_argument("field order must be a prime <= 251");

  inv_.assign(p, 0);
  for (unsigned a = 1; a < p; ++a)
    inv_[a] = static_cast<Elem>(pow(a, p - 2));

  for (unsigned t = 1; t < p; ++t) {
    unsigned x = 1, ord = 0;
    do {
      x = mul(x, t);
      ++ord;
    } while (x != 1);

    if (ord == p - 1) {
      t_ = t;
      break;
    }
  }
}

PrimeField const &PrimeField::get(unsigned p)
{
  static std::array<std::unique_ptr<PrimeField>, MaxPrime + 1> cache;

  if (p > MaxPrime)
    throw std::invalid_argument("field order must be a prime <= 251");

  if (!cache[p])
    cache[p] = std::make_unique<PrimeField>(p);

  return *cache[p];
}

unsigned PrimeField::inv(unsigned a) const
{
  assert(a % p_ != 0);
  return inv_[a % p_];
}

unsigned PrimeField::pow(unsigned a, unsigned long long e) const
{
  unsigned result = 1 % p_;
  unsigned base = a % p_;
  while (e) {
    if (e & 1)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FpMatrix::FpMatrix(unsigned p, std::size_t rows, std::size_t cols)
: p_(p),
  rows_(rows),
  cols_(cols),
  data_(rows * cols, 0)
{}

FpMatrix FpMatrix::fromRows(unsigned p,
                            std::vector<std::vector<unsigned>> const &rows)
{
  std::size_t cols = rows.empty() ? 0 : rows.front().size();

  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("ragged matrix rows");

    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<Elem>(rows[r][c] % p);
  }

  return m;
}

FpMatrix FpMatrix::fromVectors(unsigned p, std::size_t cols,
                               std::vector<FpVector> const &rows)
{
  FpMatrix m(p, 0, cols);
  for (auto const &v : rows)
    m.appendRow(v);
  return m;
}

FpMatrix FpMatrix::identity(unsigned p, std::size_t n)
{
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

FpVector FpMatrix::rowVector(std::size_t r) const
{
  auto rw = row(r);
  return FpVector(rw.begin(), rw.end());
}

FpVector FpMatrix::column(std::size_t c) const
{
  FpVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

bool FpMatrix::columnIsZero(std::size_t c) const
{
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, c))
      return false;
  }
  return true;
}

void FpMatrix::scaleRow(std::size_t r, unsigned a)
{ kernels::scale(row(r).data(), a % p_, p_, cols_); }

void FpMatrix::addRowMultiple(std::size_t dst, std::size_t src, unsigned a)
{ kernels::axpy(row(dst).data(), row(src).data(), a % p_, p_, cols_); }

void FpMatrix::swapRows(std::size_t r1, std::size_t r2)
{
  if (r1 != r2)
    std::swap_ranges(row(r1).begin(), row(r1).end(), row(r2).begin());
}

void FpMatrix::scaleColumn(std::size_t c, unsigned a)
{
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, c) = static_cast<Elem>(((*this)(r, c) * a) % p_);
}

void FpMatrix::appendRow(std::span<Elem const> v)
{
  if (v.size() != cols_)
    throw std::invalid_argument("row length mismatch");

  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void FpMatrix::removeRow(std::size_t r)
{
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  data_.erase(first, first + static_cast<std::ptrdiff_t>(cols_));
  --rows_;
}

FpMatrix FpMatrix::transposed() const
{
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  }
  return t;
}

FpMatrix FpMatrix::multiply(FpMatrix const &rhs) const
{
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix dimension mismatch");

  FpMatrix out(p_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t i = 0; i < cols_; ++i) {
      if (unsigned a = (*this)(r, i))
        kernels::axpy(out.row(r).data(), rhs.row(i).data(), a, p_, rhs.cols_);
    }
  }
  return out;
}

FpVector FpMatrix::leftMultiply(std::span<Elem const> x) const
{
  assert(x.size() == rows_);

  FpVector out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r])
      kernels::axpy(out.data(), row(r).data(), x[r], p_, cols_);
  }
  return out;
}

FpMatrix FpMatrix::selectColumns(std::span<std::size_t const> cols) const
{
  FpMatrix out(p_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(r, j) = (*this)(r, cols[j]);
  }
  return out;
}

std::string FpMatrix::str() const
{
  std::ostringstream ss;
  ss << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    ss << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c)
      ss << (c ? "," : "") << static_cast<unsigned>((*this)(r, c));
    ss << "]";
  }
  ss << "]";
  return ss.str();
}

Partition::Partition(std::vector<std::vector<std::size_t>> cells)
{
  std::size_t n = 0;
  for (auto &cell : cells) {
    std::sort(cell.begin(), cell.end());
    n += cell.size();
  }

  cells.erase(std::remove_if(cells.begin(), cells.end(),
                             [](auto const &c) { return c.empty(); }),
              cells.end());

  std::sort(cells.begin(), cells.end(),
            [](auto const &a, auto const &b) { return a.front() < b.front(); });

  cellOf_.assign(n, n);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (auto x : cells[i]) {
      if (x >= n || cellOf_[x] != n)
        throw std::invalid_argument("cells do not partition 0..n-1");
      cellOf_[x] = i;
    }
  }

  cells_ = std::move(cells);
}

Partition Partition::discrete(std::size_t n)
{
  std::vector<std::vector<std::size_t>> cells(n);
  for (std::size_t i = 0; i < n; ++i)
    cells[i] = {i};
  return Partition(std::move(cells));
}

Partition Partition::trivial(std::size_t n)
{
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i)
    all[i] = i;
  return n ? Partition({all}) : Partition();
}

Partition Partition::meet(Partition const &other) const
{
  assert(size() == other.size());

  std::vector<std::pair<std::size_t, std::size_t>> labels(size());
  for (std::size_t i = 0; i < size(); ++i)
    labels[i] = {cellOf_[i], other.cellOf_[i]};

  return fromLabels(labels);
}

namespace {

// Gauss-Jordan elimination in place. Returns pivot columns; rows beyond the
// rank are left zero. If transform is given it receives the same row ops.
std::vector<std::size_t> eliminate(FpMatrix &m, FpMatrix *transform)
{
  auto const &field = PrimeField::get(m.prime());

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c) == 0)
      ++pr;
    if (pr == m.rows())
      continue;

    m.swapRows(r, pr);
    if (transform)
      transform->swapRows(r, pr);

    unsigned a = field.inv(m(r, c));
    m.scaleRow(r, a);
    if (transform)
      transform->scaleRow(r, a);

    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m(i, c)) {
        unsigned f = field.neg(m(i, c));
        m.addRowMultiple(i, r, f);
        if (transform)
          transform->addRowMultiple(i, r, f);
      }
    }

    pivots.push_back(c);
    ++r;
  }

  return pivots;
}

} // anonymous namespace

RrefResult rrefStandard(FpMatrix const &m)
{
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (kernels::weight(m.row(r).data(), m.cols()) == 0)
      throw std::invalid_argument("zero row");
  }

  RrefResult res{m, {}, FpMatrix::identity(m.prime(), m.rows()), false};
  res.pivots = eliminate(res.reduced, &res.transform);

  if (res.pivots.size() != m.rows())
    throw std::invalid_argument("rows are linearly dependent");

  res.standard = true;
  for (std::size_t i = 0; i < res.pivots.size(); ++i)
    res.standard = res.standard && res.pivots[i] == i;

  return res;
}

FpMatrix rowBasis(FpMatrix const &m, std::vector<std::size_t> *pivots)
{
  FpMatrix work(m);
  auto piv = eliminate(work, nullptr);

  FpMatrix out(m.prime(), 0, m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r)
    out.appendRow(work.row(r));

  if (pivots)
    *pivots = std::move(piv);

  return out;
}

std::size_t rank(FpMatrix const &m)
{
  FpMatrix work(m);
  return eliminate(work, nullptr).size();
}

bool isStandardForm(FpMatrix const &m)
{
  if (m.rows() > m.cols())
    return false;

  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.rows(); ++c) {
      if (m(r, c) != (r == c ? 1 : 0))
        return false;
    }
  }

  return true;
}

FpMatrix dualMatrix(FpMatrix const &m)
{
  if (!isStandardForm(m))
    throw std::invalid_argument("dual requires a standard-form matrix");

  auto const &field = PrimeField::get(m.prime());
  std::size_t s = m.rows(), k = m.cols();

  FpMatrix d(m.prime(), k - s, k);
  for (std::size_t r = 0; r < k - s; ++r) {
    for (std::size_t c = 0; c < s; ++c)
      d(r, c) = static_cast<Elem>(field.neg(m(c, s + r)));
    d(r, s + r) = 1;
  }

  return d;
}

std::optional<FpVector> memberRowSpace(std::span<Elem const> v,
                                       FpMatrix const &m)
{
  assert(isStandardForm(m));
  if (v.size() != m.cols())
    throw std::invalid_argument("memberRowSpace: length mismatch");

  FpVector coeffs(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m.rows()));
  if (m.leftMultiply(coeffs) != FpVector(v.begin(), v.end()))
    return std::nullopt;

  return coeffs;
}

RowSpace::RowSpace(unsigned p, std::size_t len)
: field_(&PrimeField::get(p)),
  len_(len)
{}

RowSpace::RowSpace(FpMatrix const &m)
: RowSpace(m.prime(), m.cols())
{
  for (std::size_t r = 0; r < m.rows(); ++r)
    insert(m.row(r));
}

FpVector RowSpace::reduce(std::span<Elem const> v) const
{
  FpVector w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (unsigned a = w[pivots_[i]])
      kernels::axpy(w.data(), basis_[i].data(), field_->neg(a), field_->p(), len_);
  }
  return w;
}

bool RowSpace::contains(std::span<Elem const> v) const
{
  auto w = reduce(v);
  return kernels::weight(w.data(), len_) == 0;
}

bool RowSpace::insert(std::span<Elem const> v)
{
  auto w = reduce(v);

  std::size_t piv = 0;
  while (piv < len_ && w[piv] == 0)
    ++piv;
  if (piv == len_)
    return false;

  kernels::scale(w.data(), field_->inv(w[piv]), field_->p(), len_);

  // keep earlier basis vectors reduced against the new pivot
  for (auto &b : basis_) {
    if (unsigned a = b[piv])
      kernels::axpy(b.data(), w.data(), field_->neg(a), field_->p(), len_);
  }

  basis_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

FpVector normalizedColumn(FpMatrix const &m, std::size_t c)
{
  auto v = m.column(c);

  auto first = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
  if (first != v.end()) {
    auto const &field = PrimeField::get(m.prime());
    kernels::scale(v.data(), field.inv(*first), m.prime(), v.size());
  }

  return v;
}

Partition columnEquivClasses(FpMatrix const &m)
{
  std::vector<FpVector> keys(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.columnIsZero(c))
      throw std::invalid_argument("zero column");
    keys[c] = normalizedColumn(m, c);
  }

  return Partition::fromLabels(keys);
}

std::pair<bool, std::size_t> ColumnClasses::key(std::size_t c) const
{
  auto cell = classes.cellOf(c);
  return {zeroClass[cell], classes.cell(cell).size()};
}

std::vector<std::pair<bool, std::size_t>> ColumnClasses::signature() const
{
  std::vector<std::pair<bool, std::size_t>> sig;
  for (std::size_t i = 0; i < classes.numCells(); ++i)
    sig.emplace_back(zeroClass[i], classes.cell(i).size());
  std::sort(sig.begin(), sig.end());
  return sig;
}

ColumnClasses columnClasses(FpMatrix const &m)
{
  std::map<FpVector, std::size_t> index;
  std::vector<std::size_t> labels(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    labels[c] = index.emplace(normalizedColumn(m, c), index.size()).first->second;

  ColumnClasses res{Partition::fromLabels(labels), {}};
  for (auto const &cell : res.classes.cells())
    res.zeroClass.push_back(m.columnIsZero(cell.front()));

  return res;
}

MinWeightResult minWeightVectors(FpMatrix const &m)
{
  assert(isStandardForm(m));

  unsigned p = m.prime();
  std::size_t s = m.rows(), k = m.cols();

  MinWeightResult res{k + 1, {}};
  if (s == 0)
    return res;

  for (std::size_t r = 0; r < s; ++r)
    res.weight = std::min(res.weight, kernels::weight(m.row(r).data(), k));

  // Combinations of i rows with nonzero coefficients, the first of which is
  // 1. A codeword built from i rows has weight at least i on the identity
  // block, so i never needs to exceed the current minimum.
  std::vector<FpVector> projective;
  std::vector<FpVector> partial(s + 1, FpVector(k, 0));
  std::vector<std::size_t> rowIdx(s + 1);

  auto consider = [&](FpVector const &v) {
    auto w = kernels::weight(v.data(), k);
    if (w < res.weight) {
      res.weight = w;
      projective.clear();
    }
    if (w == res.weight)
      projective.push_back(v);
  };

  // depth-first over strictly increasing row choices
  auto recurse = [&](auto &self, std::size_t depth, std::size_t next,
                     std::size_t size) -> void {
    if (depth == size) {
      consider(partial[depth]);
      return;
    }

    for (std::size_t r = next; r + (size - depth) <= s; ++r) {
      unsigned hi = depth == 0 ? 1 : p - 1;
      for (unsigned a = 1; a <= hi; ++a) {
        partial[depth + 1] = partial[depth];
        kernels::axpy(partial[depth + 1].data(), m.row(r).data(), a, p, k);
        self(self, depth + 1, r + 1, size);
      }
    }
  };

  for (std::size_t size = 1; size <= std::min(s, res.weight); ++size)
    recurse(recurse, 0, 0, size);

  for (auto const &v : projective) {
    for (unsigned a = 1; a < p; ++a) {
      FpVector w(v);
      kernels::scale(w.data(), a, p, k);
      res.vectors.push_back(std::move(w));
    }
  }

  std::sort(res.vectors.begin(), res.vectors.end());
  return res;
}

std::optional<std::vector<std::uint64_t>> weightEnumerator(
  FpMatrix const &m, std::uint64_t budget)
{
  unsigned p = m.prime();
  std::size_t s = m.rows(), k = m.cols();

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < s; ++i) {
    total *= p;
    if (total > budget)
      return std::nullopt;
  }

  // Modular Gray code: stepping a base-p counter changes exactly one Gray
  // digit, at the lowest counter digit that does not wrap, by +1. So each
  // successive codeword is one row addition away from the previous.
  std::vector<std::uint64_t> counts(k + 1, 0);
  std::vector<unsigned> counter(s, 0);
  FpVector word(k, 0);

  counts[0] = 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t j = 0;
    while (counter[j] == p - 1)
      counter[j++] = 0;
    ++counter[j];

    kernels::axpy(word.data(), m.row(j).data(), 1, p, k);
    ++counts[kernels::weight(word.data(), k)];
  }

  return counts;
}

std::strong_ordering precCompare(FpMatrix const &a, FpMatrix const &b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("precCompare: shape mismatch");

  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = a.rows(); r-- > 0;) {
      if (a(r, c) != b(r, c))
        return a(r, c) <=> b(r, c);
    }
  }

  return std::strong_ordering::equal;
}

} // namespace normsym
