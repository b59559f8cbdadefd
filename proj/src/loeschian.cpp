#include "robintri/loeschian.hpp"

#include <cmath>
#include <stdexcept>

#include "robintri/errors.hpp"

namespace robintri {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool factorization_criterion(u64 k) {
  if (k == 0) return true;
  // Strip factors; primes congruent to 2 mod 3 must occur to even powers.
  for (u64 p = 2; p * p <= k; p += (p == 2 ? 1 : 2)) {
    if (k % p) continue;
    int e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    if (p % 3 == 2 && (e & 1)) return false;
  }
  // Remaining k is prime (or 1).
  if (k > 1 && k % 3 == 2) return false;
  return true;
}

std::optional<std::pair<u64, u64>> search_witness(u64 k) {
  for (u64 x = 0; 3 * x * x <= k; ++x) {
    // y solves y^2 + xy + (x^2 - k) = 0.
    double disc = 4.0 * static_cast<double>(k) - 3.0 * static_cast<double>(x) *
                                                    static_cast<double>(x);
    u64 y0 = static_cast<u64>(
        std::max(0.0, (std::sqrt(disc) - static_cast<double>(x)) / 2.0));
    for (u64 y = (y0 > 1 ? y0 - 1 : 0); y <= y0 + 1; ++y)
      if (y >= x && x * x + x * y + y * y == k) return std::make_pair(x, y);
  }
  return std::nullopt;
}

// Extended gcd for the CRT lift; moduli are pairwise coprime prime squares.
long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

u64 inv_mod(u64 a, u64 mod) {
  long long x, y;
  egcd(static_cast<long long>(a % mod), static_cast<long long>(mod), x, y);
  long long r = x % static_cast<long long>(mod);
  if (r < 0) r += static_cast<long long>(mod);
  return static_cast<u64>(r);
}

} // namespace

bool is_loeschian(u64 k, std::pair<u64, u64>* witness) {
  bool by_factorization = factorization_criterion(k);
  auto found = search_witness(k);
  if (by_factorization != found.has_value())
    throw Error("is_loeschian: factorization and direct search disagree");
  if (witness && found) *witness = *found;
  return by_factorization;
}

std::vector<std::pair<u64, u64>> loeschian_representations(u64 k) {
  std::vector<std::pair<u64, u64>> reps;
  for (u64 x = 0; 3 * x * x <= k; ++x) {
    double disc = 4.0 * static_cast<double>(k) - 3.0 * static_cast<double>(x) *
                                                    static_cast<double>(x);
    u64 y0 = static_cast<u64>(
        std::max(0.0, (std::sqrt(disc) - static_cast<double>(x)) / 2.0));
    for (u64 y = (y0 > 1 ? y0 - 1 : 0); y <= y0 + 1; ++y)
      if (y >= x && x * x + x * y + y * y == k) reps.emplace_back(x, y);
  }
  return reps;
}

LoeschianSieve build_sieve(u64 limit) {
  if (limit > 1000000000ull)
    throw LimitTooLarge("build_sieve: limit above 1e9");
  LoeschianSieve sieve;
  sieve.limit = limit;
  sieve.is_representable.assign(limit + 1, false);
  for (u64 m = 0; 3 * m * m <= limit; ++m)
    for (u64 n = m; m * m + m * n + n * n <= limit; ++n)
      sieve.is_representable[m * m + m * n + n * n] = true;
  return sieve;
}

std::pair<u64, u64> max_gap(const LoeschianSieve& sieve, u64 limit) {
  if (limit == 0 || limit > sieve.limit) limit = sieve.limit;
  u64 best = 0, at = 0, prev = 0; // 0 is representable
  for (u64 k = 1; k <= limit; ++k) {
    if (!sieve.is_representable[k]) continue;
    if (k - prev - 1 > best) {
      best = k - prev - 1;
      at = prev + 1;
    }
    prev = k;
  }
  return {best, at};
}

std::vector<u64> primes_2_mod_3(int K) {
  std::vector<u64> primes;
  for (u64 p = 2; static_cast<int>(primes.size()) < K; ++p) {
    bool prime = p >= 2;
    for (u64 d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime && p % 3 == 2) primes.push_back(p);
  }
  return primes;
}

GapCertificate crt_gap_certificate(int K) {
  if (K < 1 || K > 9)
    throw DomainError("crt_gap_certificate: K must be in [1, 9]");
  GapCertificate cert;
  cert.K = K;
  cert.primes = primes_2_mod_3(K);

  // Guard the native path: the modulus is the product of the squared primes.
  u128 modulus = 1;
  for (u64 p : cert.primes) {
    u128 next = modulus * p * p;
    if (next > u128(~u64(0)))
      throw ArithmeticOverflow(
          "crt_gap_certificate: modulus exceeds 64-bit; wide arithmetic "
          "is not enabled");
    modulus = next;
  }

  // Solve n = -j + p_j (mod p_j^2), j = 1..K; lift pairwise.
  u64 n0 = 0, mod_so_far = 1;
  for (int j = 1; j <= K; ++j) {
    u64 p = cert.primes[j - 1];
    u64 pj2 = p * p;
    u64 target = (pj2 + p - static_cast<u64>(j) % pj2) % pj2;
    // n0 + mod_so_far * t = target (mod pj2)
    u64 rem = ((target + pj2) - n0 % pj2) % pj2;
    u64 t = (u128(rem) * inv_mod(mod_so_far % pj2, pj2)) % pj2;
    n0 += mod_so_far * t;
    mod_so_far *= pj2;
  }

  // Verify the divisibility invariants; each window element contains its
  // prime to the first power only, hence is not representable.
  for (int j = 1; j <= K; ++j) {
    u64 p = cert.primes[j - 1];
    u64 v = n0 + static_cast<u64>(j);
    if (v % p != 0 || v % (p * p) == 0)
      throw Error("crt_gap_certificate: CRT solution failed verification");
  }
  cert.n0 = n0;
  return cert;
}

} // namespace robintri
