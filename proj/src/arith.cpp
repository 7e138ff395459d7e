#include "szeta/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "szeta/errors.hpp"

namespace szeta::arith {

namespace {

constexpr std::uint64_t kSegment = 1u << 18;

std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

PrimeWindow primes_in_range(double P, double Q, std::uint64_t sieve_limit) {
  if (!(P >= 2.0) || !(Q >= P)) throw PreconditionError("primes_in_range: need 2 <= P <= Q");
  if (Q > static_cast<double>(sieve_limit))
    throw CapacityError("primes_in_range: Q=" + std::to_string(Q) + " exceeds sieve limit " +
                        std::to_string(sieve_limit));
  PrimeWindow w{P, Q, {}};
  const auto lo = static_cast<std::uint64_t>(std::ceil(P));
  const auto hi = static_cast<std::uint64_t>(std::floor(Q));
  if (hi < lo) return w;

  const auto base = simple_sieve(isqrt(hi));
  std::vector<bool> composite;
  for (std::uint64_t seg = lo; seg <= hi; seg += kSegment) {
    const std::uint64_t seg_hi = std::min(hi, seg + kSegment - 1);
    composite.assign(seg_hi - seg + 1, false);
    for (auto p : base) {
      if (p * p > seg_hi) break;
      std::uint64_t start = std::max(p * p, (seg + p - 1) / p * p);
      for (std::uint64_t j = start; j <= seg_hi; j += p) composite[j - seg] = true;
    }
    for (std::uint64_t n = seg; n <= seg_hi; ++n)
      if (n >= 2 && !composite[n - seg]) w.primes.push_back(n);
  }
  return w;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeWindow window_from_primes(std::vector<std::uint64_t> primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) throw PreconditionError("window_from_primes: " + std::to_string(primes[i]) + " is not prime");
    if (i > 0 && primes[i] <= primes[i - 1]) throw PreconditionError("window_from_primes: primes must be strictly increasing");
  }
  PrimeWindow w;
  w.P = primes.empty() ? 2.0 : static_cast<double>(primes.front());
  w.Q = primes.empty() ? 2.0 : static_cast<double>(primes.back());
  w.primes = std::move(primes);
  return w;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return n;
  while (n % p == 0) n /= p;
  if (n == 1) return p;
  return std::nullopt;
}

double von_mangoldt(std::uint64_t n) {
  if (n == 0) throw PreconditionError("von_mangoldt: n must be positive");
  auto p = prime_power_base(n);
  return p ? std::log(static_cast<double>(*p)) : 0.0;
}

double prime_log_sum(const PrimeWindow& window) {
  double s = 0.0;
  for (auto p : window.primes) s += std::log(static_cast<double>(p)) / static_cast<double>(p);
  return s;
}

SupportStream::SupportStream(const PrimeWindow& window, std::optional<std::uint64_t> bound)
    : primes_(&window.primes), bound_(bound) {
  if (!bound_ && window.primes.size() > kFullEnumerationGuard)
    throw CapacityError("squarefree_support: full enumeration of " + std::to_string(window.primes.size()) +
                        " primes exceeds guard of " + std::to_string(kFullEnumerationGuard));
  if (!bound_ || *bound_ >= 1) heap_.push(Node{1, -1, {}});
}

void SupportStream::push_if_fits(std::uint64_t base, std::uint64_t prime, int index, std::vector<int> used) {
  std::uint64_t product = 0;
  if (__builtin_mul_overflow(base, prime, &product)) {
    if (!bound_) throw CapacityError("squarefree_support: product overflows 64 bits");
    return;
  }
  if (bound_ && product > *bound_) return;
  used.push_back(index);
  heap_.push(Node{product, index, std::move(used)});
}

std::optional<SupportElement> SupportStream::next() {
  if (heap_.empty()) return std::nullopt;
  Node node = heap_.top();
  heap_.pop();
  const auto& ps = *primes_;
  const int k = static_cast<int>(ps.size());
  // Child: append the next prime. Sibling: replace the largest prime by the next one.
  if (node.last + 1 < k) {
    push_if_fits(node.n, ps[node.last + 1], node.last + 1, node.used);
    if (node.last >= 0) {
      auto used = node.used;
      used.pop_back();
      push_if_fits(node.n / ps[node.last], ps[node.last + 1], node.last + 1, std::move(used));
    }
  }
  SupportElement e;
  e.n = node.n;
  e.factors.reserve(node.used.size());
  for (int i : node.used) e.factors.push_back(ps[i]);
  return e;
}

std::vector<SupportElement> squarefree_support(const PrimeWindow& window, std::optional<std::uint64_t> bound) {
  SupportStream stream(window, bound);
  std::vector<SupportElement> out;
  while (auto e = stream.next()) out.push_back(std::move(*e));
  return out;
}

}  // namespace szeta::arith
