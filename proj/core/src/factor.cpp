#include "ratknot/factor.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace ratknot {

namespace {

const std::vector<unsigned>& smallest_factor_sieve() {
  static const std::vector<unsigned> sieve = [] {
    std::vector<unsigned> spf(kSieveLimit + 1, 0);
    for (unsigned long i = 2; i <= kSieveLimit; ++i) {
      if (spf[i] != 0) continue;
      for (unsigned long j = i; j <= kSieveLimit; j += i)
        if (spf[j] == 0) spf[j] = static_cast<unsigned>(i);
    }
    return spf;
  }();
  return sieve;
}

constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const Integer& n) {
  Integer d = n - 1;
  unsigned r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++r;
  }
  const Integer n_minus_1 = n - 1;
  for (unsigned a : kWitnesses) {
    if (n == a) return true;
    Integer x;
    const Integer base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant; returns a non-trivial factor of the odd composite n.
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    const Integer cc = c;
    auto step = [&](const Integer& v) -> Integer { return (v * v + cc) % n; };
    unsigned long r = 1;
    const unsigned long batch = 128;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (n <= kSieveLimit) {
    const auto& spf = smallest_factor_sieve();
    unsigned long v = n.get_ui();
    while (v > 1) {
      primes.emplace_back(spf[v]);
      v /= spf[v];
    }
    return;
  }
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  split(d, primes);
  split(n / d, primes);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n <= kSieveLimit) return smallest_factor_sieve()[n.get_ui()] == n.get_ui();
  for (unsigned a : kWitnesses)
    if (mpz_divisible_ui_p(n.get_mpz_t(), a)) return false;
  return miller_rabin(n);
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (n < 1) throw DomainError("factorize needs n >= 1");
  std::vector<Integer> primes;
  Integer rest = n;
  // Strip small primes by trial division so rho only sees large cofactors.
  if (rest > kSieveLimit) {
    for (unsigned long p = 2; p < 10'000 && rest > kSieveLimit; p += (p == 2 ? 1 : 2)) {
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        primes.emplace_back(p);
        rest /= p;
      }
    }
  }
  split(rest, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

Integer euler_phi(const Integer& n) {
  Integer phi = n;
  for (auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int omega(const Integer& n) { return static_cast<int>(factorize(n).size()); }

}  // namespace ratknot
