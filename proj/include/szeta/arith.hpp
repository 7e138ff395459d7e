#pragma once

// Prime/arithmetic substrate: segmented sieving, the von Mangoldt function and
// enumeration of squarefree integers built from a window of primes.

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

namespace szeta::arith {

inline constexpr std::uint64_t kDefaultSieveLimit = 1'000'000'000ULL;
inline constexpr std::size_t kFullEnumerationGuard = 40;

// All primes p with P <= p <= Q, ascending and complete.
struct PrimeWindow {
  double P = 0.0;
  double Q = 0.0;
  std::vector<std::uint64_t> primes;

  std::size_t size() const noexcept { return primes.size(); }
  bool empty() const noexcept { return primes.empty(); }
};

// A squarefree n together with its prime factors (ascending).
struct SupportElement {
  std::uint64_t n = 1;
  std::vector<std::uint64_t> factors;
};

PrimeWindow primes_in_range(double P, double Q, std::uint64_t sieve_limit = kDefaultSieveLimit);

// Builds a window from an explicit prime list (used for toy configurations).
// Throws PreconditionError unless the list is strictly increasing and prime.
PrimeWindow window_from_primes(std::vector<std::uint64_t> primes);

bool is_prime(std::uint64_t n);

// Lambda(n): log p if n = p^k, k >= 1, else 0.
double von_mangoldt(std::uint64_t n);

// If n = p^k returns p, otherwise nullopt.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

// Sum of log p / p over the window.
double prime_log_sum(const PrimeWindow& window);

// Streams the squarefree products of subsets of the window in ascending order,
// stopping at `bound` (nullopt means no bound). The empty product 1 is first.
class SupportStream {
 public:
  SupportStream(const PrimeWindow& window, std::optional<std::uint64_t> bound);
  std::optional<SupportElement> next();

 private:
  struct Node {
    std::uint64_t n;
    int last;  // index of the largest prime used, -1 for n = 1
    std::vector<int> used;
    bool operator>(const Node& o) const { return n > o.n; }
  };
  void push_if_fits(std::uint64_t base, std::uint64_t prime, int index, std::vector<int> used);

  const std::vector<std::uint64_t>* primes_;
  std::optional<std::uint64_t> bound_;
  std::priority_queue<Node, std::vector<Node>, std::greater<>> heap_;
};

// Collects a SupportStream. With bound = nullopt the window may hold at most
// kFullEnumerationGuard primes, and every product must fit in 64 bits.
std::vector<SupportElement> squarefree_support(const PrimeWindow& window,
                                               std::optional<std::uint64_t> bound);

}  // namespace szeta::arith
