#include <random>
#include <stdexcept>

#include "normsym/encode.hpp"
#include "normsym/generate.hpp"

namespace normsym {

namespace {

FpMatrix draw(std::mt19937_64 &rng, unsigned p, std::size_t k, std::size_t dim)
{
  while (true) {
    FpMatrix m(p, dim, k);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < k; ++c)
        m(r, c) = static_cast<Elem>(rng() % p);
    }

    bool zeroColumn = false;
    for (std::size_t c = 0; c < k; ++c)
      zeroColumn = zeroColumn || m.columnIsZero(c);

    if (!zeroColumn && rank(m) == dim)
      return m;
  }
}

void validate(unsigned p, std::size_t k, std::size_t dim)
{
  if (!isPrime(p) || p > MaxPrime)
    throw std::invalid_argument("p must be a prime up to 251");
  if (dim == 0 || dim > k)
    throw std::invalid_argument("need 1 <= dim <= k");
}

} // anonymous namespace

FpMatrix randomCode(unsigned p, std::size_t k, std::size_t dim, std::uint64_t seed)
{
  validate(p, k, dim);
  std::mt19937_64 rng(seed);
  return draw(rng, p, k, dim);
}

PermGroup randomCyclicGroup(unsigned p, std::size_t k, std::size_t dim,
                            std::uint64_t seed)
{ return codeToGroup(randomCode(p, k, dim, seed)); }

PermGroup randomDihedralGroup(unsigned p, std::size_t k, std::size_t dim,
                              std::uint64_t seed)
{
  validate(p, k, dim);
  if (p == 2)
    throw std::invalid_argument("the dihedral class needs an odd prime");

  std::mt19937_64 rng(seed);
  FpMatrix rot = draw(rng, p, k, dim);
  FpMatrix ref = draw(rng, 2, k, dim);

  std::vector<Permutation> gens = codeToGroup(rot).generators;
  for (std::size_t r = 0; r < dim; ++r) {
    std::vector<Point> img(p * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (unsigned u = 0; u < p; ++u) {
        unsigned v = ref(r, i) ? (p - u) % p : u;
        img[p * i + u] = static_cast<Point>(p * i + v);
      }
    }
    gens.push_back(Permutation::fromImages(std::move(img)));
  }

  return PermGroup(p * k, std::move(gens));
}

} // namespace normsym
