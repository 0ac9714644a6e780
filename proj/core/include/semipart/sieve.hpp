#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace semipart {

/// Primes up to a fixed limit, strictly increasing, starting at 2.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;

  std::size_t count() const { return primes.size(); }
};

/// A semiprime part value m = p1*p2 together with its representation
/// weight w2(m): 2 when p1 != p2, 1 when m is the square of a prime.
struct SemiprimePart {
  std::uint64_t value = 0;
  int weight = 0;
};

/// Weighted count of ordered prime pairs p1*p2 <= t in one residue class.
struct ResidueClassCount {
  std::uint64_t t = 0;
  std::uint64_t q = 0;
  std::uint64_t ell = 0;
  std::uint64_t count = 0;
};

/// Segmented sieve of Eratosthenes. Throws std::domain_error for limit < 2.
PrimeTable sieve_primes(std::uint64_t limit);

/// Streams every prime <= limit to fn in increasing order, using
/// O(sqrt(limit) + segment) memory.
void visit_primes(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn);

/// All semiprime parts p1*p2 <= limit, sorted by value, each value once
/// with its w2 weight. Empty for limit < 4.
std::vector<SemiprimePart> semiprime_parts(std::uint64_t limit);

/// Process-wide cache of semiprime parts; grows on demand and is safe for
/// concurrent readers. The returned vector covers at least [4, limit].
std::shared_ptr<const std::vector<SemiprimePart>> semiprime_cache(std::uint64_t limit);

/// pi2*(x): the number of ordered prime pairs with p1*p2 <= x, computed by
/// the hyperbola identity 2*sum_{p<=sqrt(x)} pi(x/p) - pi(sqrt(x))^2.
std::uint64_t pi2_star(std::uint64_t x);

/// Leading term 2*x*loglog(x)/log(x). Throws std::domain_error for x <= e.
double pi2_star_leading(double x);

/// sum_{p<=x} 1/p accumulated in extended precision.
long double mertens_sum(std::uint64_t x);

/// Exact weighted count of ordered pairs p1*p2 <= t with p1*p2 = ell mod q.
/// Requires gcd(ell, q) = 1; throws std::domain_error otherwise.
ResidueClassCount semiprime_count_mod(std::uint64_t t, std::uint64_t q, std::uint64_t ell);

}  // namespace semipart
