#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "normsym/gfp.hpp"
#include "normsym/perm.hpp"

namespace normsym {

struct NotInClass : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// An element diag(d) * rho(pi) of the monomial group: it sends a row vector
/// v to w with w[pi[i]] = d[i] * v[i].
struct Monomial
{
  FpVector d;
  std::vector<std::size_t> pi;

  static Monomial identity(std::size_t k);

  std::size_t size() const { return pi.size(); }

  // apply *this, then rhs
  Monomial compose(Monomial const &rhs, PrimeField const &field) const;
  Monomial inverse(PrimeField const &field) const;

  FpVector apply(std::span<Elem const> v, PrimeField const &field) const;
  FpMatrix apply(FpMatrix const &m) const;

  bool operator==(Monomial const &) const = default;
};

/// A group H in the class described in the README, together with everything
/// needed to translate between permutations and linear codes:
///
///  - orbits Omega_0..Omega_{k-1}, ordered so that the pivots of the code are
///    the first s orbits;
///  - p-cycles g_i generating H restricted to Omega_i;
///  - coordinates: point(i, u) = m_i^(g_i^u) where m_i = min Omega_i, so that
///    the involutions phi_i swapping Omega_0 and Omega_i map point(0, u) to
///    point(i, u) and conjugate g_0 to g_i;
///  - M, the standard-form generator matrix of gamma(H), and its dual.
class InPInstance
{
public:
  unsigned p() const { return field_->p(); }
  PrimeField const &field() const { return *field_; }
  std::size_t k() const { return orbits_.size(); }
  std::size_t n() const { return n_; }
  std::size_t s() const { return M_.rows(); }

  PermGroup const &group() const { return H_; }
  std::vector<std::vector<Point>> const &orbits() const { return orbits_; }
  std::vector<Permutation> const &orbitGenerators() const { return g_; }
  std::vector<Permutation> const &bijections() const { return phi_; }
  FpMatrix const &M() const { return M_; }
  FpMatrix const &Mdual() const { return Mdual_; }
  std::vector<Permutation> const &standardGenerators() const { return x_; }

  Point point(std::size_t orbit, unsigned u) const
  { return coords_[orbit][u % p()]; }
  std::size_t orbitOf(Point x) const { return orbitOf_[x]; }
  unsigned coord(Point x) const { return coordOf_[x]; }

  /// gamma(g) if g lies in the enveloping group G = <g_0, ..., g_{k-1}>.
  std::optional<FpVector> gamma(Permutation const &g) const;
  Permutation gammaInv(std::span<Elem const> v) const;

  bool contains(Permutation const &g) const;
  bool normalises(Permutation const &sigma) const;
  /// True iff sigma normalises gamma^-1 of the dual code.
  bool normalisesDual(Permutation const &sigma) const;

  /// The element of K inducing orbit permutation pi (Omega_i -> Omega_pi[i]).
  Permutation kappa(std::span<std::size_t const> pi) const;

  /// Xi(sigma) = zeta(b) rho(kappa) for sigma = b kappa in L = B x| K.
  std::optional<Monomial> xiImage(Permutation const &sigma) const;
  /// The element of L with image w fixing the least point of every orbit.
  Permutation xiPreimage(Monomial const &w) const;
  /// Writes sigma = b * kappa with b in B, kappa in K.
  std::optional<std::pair<Permutation, Permutation>>
  decomposeBK(Permutation const &sigma) const;

  std::vector<std::size_t> orbitPermutation(Permutation const &sigma) const;

private:
  friend InPInstance buildInstance(PermGroup const &h, unsigned p);

  PrimeField const *field_ = nullptr;
  std::size_t n_ = 0;
  PermGroup H_;
  std::vector<std::vector<Point>> orbits_;
  std::vector<Permutation> g_;
  std::vector<Permutation> phi_;
  std::vector<std::vector<Point>> coords_;
  std::vector<std::size_t> orbitOf_;
  std::vector<unsigned> coordOf_;
  FpMatrix M_;
  FpMatrix Mdual_;
  std::vector<Permutation> x_;
};

/// Throws NotInClass if some orbit does not have size p or H does not act on
/// it as a cyclic group of order p.
InPInstance buildInstance(PermGroup const &h, unsigned p);

/// Generators of B (translations g_i and multipliers fixing each least point)
/// and of K (the involutions phi_i).
struct LKGenerators
{
  std::vector<Permutation> B;
  std::vector<Permutation> K;
};

LKGenerators buildLK(InPInstance const &inst);

/// A basis of the subcode vanishing on the given columns.
FpMatrix stabMatrix(FpMatrix const &m, std::span<std::size_t const> cols);

/// gamma^-1 of the row space of m, on points 1..p*k with orbit i made of the
/// consecutive block p*i+1..p*i+p and g_i its increasing cycle.
PermGroup codeToGroup(FpMatrix const &m);

/// Generators of the centraliser of H in the symmetric group.
PermGroup centralizerSym(InPInstance const &inst);

/// Restriction of H to one representative orbit per equivalence class,
/// relabelled onto 0..p*c-1.
class OrbitReduction
{
public:
  explicit OrbitReduction(InPInstance const &inst);

  bool trivial() const { return trivial_; }
  PermGroup const &reduced() const { return reduced_; }
  // class size of each reduced point's orbit; normalisers must preserve it
  std::vector<std::size_t> const &pointColours() const { return colours_; }
  PermGroup const &centralizer() const { return centralizer_; }

  /// Lifts a colour-preserving normaliser of the reduced group to S_n.
  Permutation lift(Permutation const &u) const;

private:
  InPInstance const *inst_;
  bool trivial_;
  PermGroup reduced_;
  std::vector<Point> toOriginal_;
  std::vector<Point> fromOriginal_;
  std::vector<std::size_t> colours_;
  PermGroup centralizer_;

  std::vector<std::size_t> classOf_;   // per orbit
  std::vector<std::size_t> memberOf_;  // position of the orbit in its class
  std::vector<std::vector<std::size_t>> members_;  // per class
  std::vector<Elem> scalar_;           // column(orbit) = scalar * column(rep)
};

} // namespace normsym
