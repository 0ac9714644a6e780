#include "semipart/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "semipart/arith.hpp"

namespace semipart {

namespace {

constexpr std::uint64_t kSegmentSize = 1u << 20;

// Odd-only sieve of [2, limit] for the base primes <= sqrt(limit).
std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<char> is_prime(limit + 1, 1);
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (is_prime[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) is_prime[j] = 0;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (is_prime[i]) primes.push_back(i);
  return primes;
}

// Runs fn over every prime in [2, limit], one segment at a time.
template <typename Fn>
void segmented_scan(std::uint64_t limit, Fn&& fn) {
  if (limit < 2) return;
  const std::uint64_t root = isqrt(limit);
  const std::vector<std::uint64_t> base = small_primes(root);
  std::vector<char> sieve(kSegmentSize);
  std::vector<std::uint64_t> next(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) next[i] = base[i] * base[i];

  for (std::uint64_t low = 2; low <= limit; low += kSegmentSize) {
    const std::uint64_t high = std::min(low + kSegmentSize - 1, limit);
    std::fill(sieve.begin(), sieve.begin() + (high - low + 1), 1);
    for (std::size_t i = 0; i < base.size(); ++i) {
      const std::uint64_t p = base[i];
      if (p * p > high) break;
      std::uint64_t j = std::max(next[i], ((low + p - 1) / p) * p);
      if (j < p * p) j = p * p;
      for (; j <= high; j += p) sieve[j - low] = 0;
      next[i] = j;
    }
    for (std::uint64_t n = low; n <= high; ++n)
      if (sieve[n - low]) fn(n);
  }
}

}  // namespace

PrimeTable sieve_primes(std::uint64_t limit) {
  if (limit < 2) throw std::domain_error("sieve_primes: limit must be >= 2");
  PrimeTable table;
  table.limit = limit;
  if (limit >= 3)
    table.primes.reserve(static_cast<std::size_t>(
        1.2 * static_cast<double>(limit) / std::log(static_cast<double>(limit)) + 16));
  segmented_scan(limit, [&](std::uint64_t p) { table.primes.push_back(p); });
  return table;
}

void visit_primes(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn) {
  segmented_scan(limit, [&](std::uint64_t p) { fn(p); });
}

std::vector<SemiprimePart> semiprime_parts(std::uint64_t limit) {
  std::vector<SemiprimePart> parts;
  if (limit < 4) return parts;
  const std::uint64_t root = isqrt(limit);
  const std::vector<std::uint64_t> small = small_primes(root);
  const PrimeTable all = sieve_primes(limit / 2 >= 2 ? limit / 2 : 2);

  // Hyperbola enumeration: p1 <= sqrt(limit) <= p2 <= limit / p1.
  for (std::uint64_t p1 : small) {
    const std::uint64_t cap = limit / p1;
    auto lo = std::lower_bound(all.primes.begin(), all.primes.end(), p1);
    for (auto it = lo; it != all.primes.end() && *it <= cap; ++it)
      parts.push_back({p1 * *it, p1 == *it ? 1 : 2});
  }
  std::sort(parts.begin(), parts.end(),
            [](const SemiprimePart& a, const SemiprimePart& b) { return a.value < b.value; });
  return parts;
}

std::shared_ptr<const std::vector<SemiprimePart>> semiprime_cache(std::uint64_t limit) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<SemiprimePart>> cache;
  static std::uint64_t cache_limit = 0;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache || cache_limit < limit) {
    const std::uint64_t grow = std::max<std::uint64_t>(limit, cache_limit * 2);
    cache = std::make_shared<const std::vector<SemiprimePart>>(semiprime_parts(grow));
    cache_limit = grow;
  }
  return cache;
}

std::uint64_t pi2_star(std::uint64_t x) {
  if (x < 4) return 0;
  const std::uint64_t root = isqrt(x);
  const std::vector<std::uint64_t> small = small_primes(root);
  const std::uint64_t pi_root = small.size();

  // Queries x/p for p <= sqrt(x), answered in one ascending sweep.
  std::vector<std::uint64_t> thresholds;
  thresholds.reserve(small.size());
  for (std::uint64_t p : small) thresholds.push_back(x / p);
  std::sort(thresholds.begin(), thresholds.end());

  std::uint64_t sum = 0, count = 0;
  std::size_t qi = 0;
  segmented_scan(x / 2, [&](std::uint64_t p) {
    while (qi < thresholds.size() && thresholds[qi] < p) {
      sum += count;
      ++qi;
    }
    ++count;
  });
  while (qi < thresholds.size()) {
    sum += count;
    ++qi;
  }
  return 2 * sum - pi_root * pi_root;
}

double pi2_star_leading(double x) {
  if (!(x > std::exp(1.0)))
    throw std::domain_error("pi2_star_leading: requires x > e");
  return 2.0 * x * std::log(std::log(x)) / std::log(x);
}

long double mertens_sum(std::uint64_t x) {
  long double sum = 0.0L, comp = 0.0L;
  if (x < 2) return 0.0L;
  segmented_scan(x, [&](std::uint64_t p) {
    const long double term = 1.0L / static_cast<long double>(p);
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  });
  return sum;
}

ResidueClassCount semiprime_count_mod(std::uint64_t t, std::uint64_t q, std::uint64_t ell) {
  if (q < 1) throw std::domain_error("semiprime_count_mod: q must be >= 1");
  if (std::gcd(ell, q) != 1)
    throw std::domain_error("semiprime_count_mod: requires gcd(ell, q) = 1");
  ResidueClassCount out{t, q, ell % q, 0};
  if (t < 4) return out;

  const std::uint64_t root = isqrt(t);
  const std::vector<std::uint64_t> small = small_primes(root);

  // A1-type queries: for each p1 <= sqrt(t) coprime to q, count primes
  // p2 <= t/p1 in class ell * p1^{-1} mod q.
  struct Query {
    std::uint64_t bound;
    std::uint64_t residue;
  };
  std::vector<Query> queries;
  queries.reserve(small.size());
  for (std::uint64_t p : small) {
    if (q % p == 0) continue;  // p | q makes p1*p2 = ell (q) impossible
    queries.push_back({t / p, (ell % q) * mod_inverse(p % q, q) % q});
  }
  std::sort(queries.begin(), queries.end(),
            [](const Query& a, const Query& b) { return a.bound < b.bound; });

  std::vector<std::uint64_t> class_count(q, 0);
  std::vector<std::uint64_t> class_count_at_root(q, 0);
  std::uint64_t ordered_pairs_twice = 0;
  std::size_t qi = 0;
  segmented_scan(t / 2, [&](std::uint64_t p) {
    while (qi < queries.size() && queries[qi].bound < p) {
      ordered_pairs_twice += class_count[queries[qi].residue];
      ++qi;
    }
    ++class_count[p % q];
    if (p <= root) class_count_at_root[p % q] = class_count[p % q];
  });
  while (qi < queries.size()) {
    ordered_pairs_twice += class_count[queries[qi].residue];
    ++qi;
  }

  // A3: both factors <= sqrt(t); pairs counted from per-class prime counts.
  std::uint64_t square_region = 0;
  for (std::uint64_t b = 0; b < q; ++b) {
    if (class_count_at_root[b] == 0 || std::gcd(b, q) != 1) continue;
    const std::uint64_t partner = (ell % q) * mod_inverse(b, q) % q;
    square_region += class_count_at_root[b] * class_count_at_root[partner];
  }

  out.count = 2 * ordered_pairs_twice - square_region;
  return out;
}

}  // namespace semipart
