#ifndef ROBINTRI_LOESCHIAN_HPP
#define ROBINTRI_LOESCHIAN_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "robintri/errors.hpp"

namespace robintri {

/// Indicator of the integers representable as x^2 + xy + y^2 (x, y >= 0)
/// up to `limit` inclusive.
struct LoeschianSieve {
  std::uint64_t limit = 0;
  std::vector<bool> is_representable;

  bool test(std::uint64_t k) const { return is_representable[k]; }
};

/// Witnessed window of K consecutive non-representable integers built from
/// the first K primes congruent to 2 mod 3 via the Chinese Remainder Theorem:
/// n0 + j is divisible by primes[j-1] exactly once.
struct GapCertificate {
  int K = 0;
  std::uint64_t n0 = 0;
  std::vector<std::uint64_t> primes;
};

/// Representability via the prime-factorization criterion (primes = 2 mod 3
/// must occur to even powers), with a witness found by direct search when
/// representable. The two routes are cross-checked on every call.
bool is_loeschian(std::uint64_t k,
                  std::pair<std::uint64_t, std::uint64_t>* witness = nullptr);

/// All representations with 0 <= x <= y.
std::vector<std::pair<std::uint64_t, std::uint64_t>>
loeschian_representations(std::uint64_t k);

LoeschianSieve build_sieve(std::uint64_t limit);

/// Longest run of consecutive non-representable integers <= limit and the
/// first integer of the run.
std::pair<std::uint64_t, std::uint64_t> max_gap(const LoeschianSieve& sieve,
                                                std::uint64_t limit = 0);

/// First K primes congruent to 2 mod 3 (2, 5, 11, 17, ...).
std::vector<std::uint64_t> primes_2_mod_3(int K);

GapCertificate crt_gap_certificate(int K);

} // namespace robintri

#endif // ROBINTRI_LOESCHIAN_HPP
