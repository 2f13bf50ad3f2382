#include "ratknot/lens.hpp"

#include <algorithm>
#include <thread>

#include "ratknot/factor.hpp"

namespace ratknot {

namespace {

void require_odd(const Integer& p, long min, const char* what) {
  if (p < min || mpz_even_p(p.get_mpz_t()))
    throw DomainError(std::string(what) + " needs odd p >= " + std::to_string(min));
}

Integer pow2(int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

// a + b sqrt(d)
struct Quadratic {
  Integer a, b;
  long d;
  Quadratic operator*(const Quadratic& o) const {
    return {a * o.a + d * b * o.b, a * o.b + b * o.a, d};
  }
};

Quadratic power(Quadratic base, unsigned e) {
  Quadratic r{1, 0, base.d};
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace

Integer r2_0(const Integer& n) {
  if (n < 2) return 0;
  // A primitive representation exists iff 4 does not divide n and no prime
  // 3 mod 4 divides n; then there are 2^omega(odd part) ordered positive ones.
  int odd_primes = 0;
  for (auto& [p, e] : factorize(n)) {
    if (p == 2) {
      if (e > 1) return 0;
      continue;
    }
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) return 0;
    ++odd_primes;
  }
  return pow2(odd_primes);
}

Integer lens_count(const Integer& p, bool oriented) {
  require_odd(p, 3, "lens_count");
  const Integer fixed = pow2(omega(p));
  if (oriented) return (euler_phi(p) + fixed) / 2;
  return (euler_phi(p) + r2_0(p) + fixed) / 4;
}

Integer u1_lens_count(const Integer& p, bool oriented) {
  require_odd(p, 5, "u1_lens_count");
  Integer c = pow2(omega((p + 1) / 2) - 1) + pow2(omega((p - 1) / 2) - 1) - (is_ps(p) ? 2 : 1);
  if (!oriented) return c;
  return 2 * c - (in_N(p) ? 1 : 0) - (in_S(p) ? 1 : 0);
}

Integer p_seq(unsigned s) {
  Integer a = 29, b = 169;
  for (unsigned i = 0; i < s; ++i) {
    Integer next = 6 * b - a;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

Integer q_seq(unsigned s) {
  Integer a = 65, b = 901, c = 12545;
  for (unsigned i = 0; i < s; ++i) {
    Integer next = 15 * (c - b) + a;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return a;
}

Integer p_seq_closed_form(unsigned s) {
  // The two conjugate terms sum to twice the rational part.
  Quadratic t = Quadratic{58, 41, 2} * power(Quadratic{3, 2, 2}, s);
  return 2 * t.a / 4;
}

Integer q_seq_closed_form(unsigned s) {
  Quadratic t = Quadratic{97, 56, 3} * power(Quadratic{2, 1, 3}, 2 * s);
  return (2 * t.a + 1) / 3;
}

bool is_ps(const Integer& p) {
  Integer a = 29, b = 169;
  while (a < p) {
    Integer next = 6 * b - a;
    a = std::move(b);
    b = std::move(next);
  }
  return a == p;
}

bool in_N(const Integer& p) {
  if (p < 5) return false;
  Integer t = 2 * p - 1;
  return mpz_perfect_square_p(t.get_mpz_t()) != 0;
}

bool in_S(const Integer& p) {
  Integer a = 65, b = 901, c = 12545;
  while (a < p) {
    Integer next = 15 * (c - b) + a;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return a == p;
}

LensCount lens_row(const Integer& p) {
  LensCount row;
  row.p = p;
  row.unoriented = lens_count(p, false);
  row.oriented = lens_count(p, true);
  if (p >= 5) {
    row.u1_unoriented = u1_lens_count(p, false);
    row.u1_oriented = u1_lens_count(p, true);
  }
  row.is_ps = is_ps(p);
  row.in_N = in_N(p);
  row.in_S = in_S(p);
  return row;
}

std::vector<LensCount> lens_sweep(unsigned long p_min, unsigned long p_max, unsigned threads) {
  p_min = std::max(p_min, 3ul);
  if (p_min % 2 == 0) ++p_min;
  if (p_max < p_min) return {};
  const std::size_t count = (p_max - p_min) / 2 + 1;
  std::vector<LensCount> rows(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  const std::size_t chunk = (count + threads - 1) / threads;
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const std::size_t end = std::min(count, (t + 1) * chunk);
      for (std::size_t i = t * chunk; i < end; ++i) rows[i] = lens_row(Integer(p_min + 2 * i));
    });
  }
  pool.clear();
  return rows;
}

std::vector<SnSolution> sn_search(unsigned max_s) {
  std::vector<SnSolution> hits;
  Integer a = 65, b = 901, c = 12545;
  for (unsigned s = 0; s <= max_s; ++s) {
    // q = 2n^2 + 2n + 1  <=>  2q - 1 = (2n + 1)^2
    Integer t = 2 * a - 1;
    if (mpz_perfect_square_p(t.get_mpz_t())) hits.push_back({s, (sqrt(t) - 1) / 2});
    Integer next = 15 * (c - b) + a;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return hits;
}

bool is_curve_point(const Integer& x) {
  Integer x2 = x * x;
  Integer rhs = 3 * x2 * x2 + 2 * x2 - 5;
  return rhs >= 0 && mpz_perfect_square_p(rhs.get_mpz_t()) != 0;
}

std::vector<Integer> DuplicationDeterminants::merged() const {
  std::vector<Integer> out = first;
  out.insert(out.end(), second.begin(), second.end());
  std::sort(out.begin(), out.end());
  return out;
}

Integer word_determinant(const std::vector<Integer>& entries) {
  std::vector<Integer> rev(entries.rbegin(), entries.rend());
  return abs(eval_cf(rev).numerator());
}

DuplicationDeterminants duplication_determinants(unsigned k_max) {
  DuplicationDeterminants out;
  for (unsigned k = 1; k <= k_max; ++k) {
    std::vector<Integer> w;
    for (unsigned i = 0; i < k; ++i) w.insert(w.end(), {4, -2});
    w.insert(w.end(), {-2, 2});
    for (unsigned i = 0; i + 1 < k; ++i) w.insert(w.end(), {-4, 2});
    out.first.push_back(word_determinant(w));

    w.clear();
    for (unsigned i = 0; i < k; ++i) w.insert(w.end(), {2, -4});
    w.insert(w.end(), {2, 2});
    for (unsigned i = 0; i < k; ++i) w.insert(w.end(), {-2, 4});
    out.second.push_back(word_determinant(w));
  }
  return out;
}

std::vector<Integer> achiral_series_determinants(unsigned k_max) {
  std::vector<Integer> out;
  for (unsigned k = 0; k <= k_max; ++k) {
    std::vector<Integer> w{3};
    for (unsigned i = 0; i < k; ++i) w.insert(w.end(), {1, 2});
    w.insert(w.end(), {1, 1, 1, 1});
    for (unsigned i = 0; i < k; ++i) w.insert(w.end(), {2, 1});
    w.push_back(3);
    out.push_back(word_determinant(w));
  }
  return out;
}

}  // namespace ratknot
