#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "ratknot/census.hpp"
#include "ratknot/factor.hpp"
#include "ratknot/lens.hpp"

using namespace ratknot;

namespace {

long brute_phi(long n) {
  long c = 0;
  for (long a = 1; a <= n; ++a)
    if (std::gcd(a, n) == 1) ++c;
  return c;
}

int brute_omega(long n) {
  int c = 0;
  for (long d = 2; d <= n; ++d) {
    if (n % d) continue;
    ++c;
    while (n % d == 0) n /= d;
  }
  return c;
}

long brute_r2_0(long n) {
  long c = 0;
  for (long a = 1; a * a < n; ++a)
    for (long b = 1; a * a + b * b <= n; ++b)
      if (a * a + b * b == n && std::gcd(a, b) == 1) ++c;
  return c;
}

long inverse_mod(long a, long p) {
  for (long x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

// Orbits of Z_p^* under q -> q^-1 (and q -> -q unless oriented).
long orbit_count(long p, bool oriented) {
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  long orbits = 0;
  for (long q = 1; q < p; ++q) {
    if (std::gcd(q, p) != 1 || seen[static_cast<std::size_t>(q)]) continue;
    ++orbits;
    long inv = inverse_mod(q, p);
    std::vector<long> members{q, inv};
    if (!oriented) members.insert(members.end(), {p - q, p - inv});
    for (long m : members) seen[static_cast<std::size_t>(m)] = true;
  }
  return orbits;
}

}  // namespace

TEST(Factor, MatchesTrialDivision) {
  for (long n = 1; n <= 3000; ++n) {
    ASSERT_EQ(euler_phi(n), brute_phi(n)) << n;
    ASSERT_EQ(omega(n), brute_omega(n)) << n;
  }
  EXPECT_EQ(euler_phi(9), 6);
  EXPECT_EQ(omega(12), 2);
}

TEST(Factor, LargeProducts) {
  Integer a("999999999989"), b("1000000000039"), c = 1000003;
  Integer n = a * b * c * c * 6;
  auto f = factorize(n);
  ASSERT_EQ(f.size(), 5u);
  EXPECT_EQ(f[0], std::make_pair(Integer(2), 1u));
  EXPECT_EQ(f[1], std::make_pair(Integer(3), 1u));
  EXPECT_EQ(f[2], std::make_pair(c, 2u));
  EXPECT_EQ(f[3], std::make_pair(a, 1u));
  EXPECT_EQ(f[4], std::make_pair(b, 1u));
  EXPECT_TRUE(is_prime(a));
  EXPECT_FALSE(is_prime(Integer("3215031751")));  // strong pseudoprime to 2, 3, 5, 7
  Integer product = 1;
  for (auto& [p, e] : f) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    product *= pe;
  }
  EXPECT_EQ(product, n);
}

TEST(Lens, R2Zero) {
  EXPECT_EQ(r2_0(5), 2);
  EXPECT_EQ(r2_0(7), 0);
  for (long n = 2; n <= 5000; ++n) ASSERT_EQ(r2_0(n), brute_r2_0(n)) << n;
}

TEST(Lens, CountExamples) {
  EXPECT_EQ(lens_count(5, false), 2);
  EXPECT_EQ(lens_count(7, false), 2);
  EXPECT_EQ(lens_count(9, true), 4);
  EXPECT_THROW(lens_count(8, false), DomainError);
  EXPECT_THROW(lens_count(1, false), DomainError);
}

TEST(Lens, CountMatchesOrbitsUpTo2000) {
  for (long p = 3; p <= 2000; p += 2) {
    ASSERT_EQ(lens_count(p, false), orbit_count(p, false)) << p;
    ASSERT_EQ(lens_count(p, true), orbit_count(p, true)) << p;
  }
}

TEST(Lens, SurgeryExamples) {
  EXPECT_EQ(u1_lens_count(5, false), 1);
  EXPECT_EQ(u1_lens_count(29, false), 2);
  EXPECT_TRUE(in_S(65));
  EXPECT_FALSE(in_N(65));
  EXPECT_EQ(u1_lens_count(65, true), 2 * u1_lens_count(65, false) - 1);
  EXPECT_THROW(u1_lens_count(3, false), DomainError);
}

TEST(Lens, SurgeryMatchesCensusByDeterminant) {
  for (long p = 5; p <= 10000; p += 2) {
    ASSERT_EQ(u1_lens_count(p, false), census_u1_by_determinant(p, false)) << p;
    ASSERT_EQ(u1_lens_count(p, true), census_u1_by_determinant(p, true)) << p;
  }
}

TEST(Lens, SequencesListedValues) {
  const std::vector<long> ps = {29, 169, 985, 5741, 33461, 195025};
  const std::vector<long> qs = {65, 901, 12545, 174725, 2433601, 33895685};
  for (unsigned s = 0; s < ps.size(); ++s) EXPECT_EQ(p_seq(s), ps[s]);
  for (unsigned s = 0; s < qs.size(); ++s) EXPECT_EQ(q_seq(s), qs[s]);
}

TEST(Lens, SequencesClosedForms) {
  for (unsigned s = 0; s <= 50; ++s) {
    ASSERT_EQ(p_seq(s), p_seq_closed_form(s)) << s;
    ASSERT_EQ(q_seq(s), q_seq_closed_form(s)) << s;
  }
}

TEST(Lens, SequencesGeneratingFunctions) {
  // (29 - 5x) = (1 - 6x + x^2) P(x) and (65 - 74x + 5x^2) = (1 - x)(1 - 14x + x^2) Q(x)
  std::vector<Integer> p, q;
  for (unsigned s = 0; s < 20; ++s) {
    p.push_back(p_seq(s));
    q.push_back(q_seq(s));
  }
  auto at = [](const std::vector<Integer>& v, long i) { return i < 0 ? Integer(0) : v[static_cast<std::size_t>(i)]; };
  for (long s = 0; s < 20; ++s) {
    Integer lhs = at(p, s) - 6 * at(p, s - 1) + at(p, s - 2);
    EXPECT_EQ(lhs, s == 0 ? 29 : s == 1 ? -5 : 0) << s;
    Integer rhs = at(q, s) - 15 * at(q, s - 1) + 15 * at(q, s - 2) - at(q, s - 3);
    EXPECT_EQ(rhs, s == 0 ? 65 : s == 1 ? -74 : s == 2 ? 5 : 0) << s;
  }
}

TEST(Lens, PsHaveNoPrimeDivisorThreeModFour) {
  for (unsigned s = 0; s <= 30; ++s) {
    for (auto& [prime, e] : factorize(p_seq(s)))
      ASSERT_NE(mpz_fdiv_ui(prime.get_mpz_t(), 4), 3u) << "s=" << s << " prime " << prime.get_str();
  }
}

TEST(Lens, Membership) {
  EXPECT_TRUE(is_ps(29));
  EXPECT_TRUE(is_ps(195025));
  EXPECT_FALSE(is_ps(30));
  EXPECT_TRUE(in_N(5));
  EXPECT_TRUE(in_N(13));
  EXPECT_FALSE(in_N(1));
  EXPECT_FALSE(in_N(7));
  EXPECT_TRUE(in_S(174725));
  EXPECT_FALSE(in_S(5));
}

TEST(Lens, SnSearch) {
  EXPECT_TRUE(sn_search(10000).empty());
}

TEST(Lens, CurvePoints) {
  EXPECT_TRUE(is_curve_point(3));
  EXPECT_FALSE(is_curve_point(5));
  std::vector<long> found;
  for (long x = -1000000; x <= 1000000; ++x)
    if (is_curve_point(x)) found.push_back(x);
  EXPECT_EQ(found, (std::vector<long>{-3, -1, 1, 3}));
}

TEST(Lens, DuplicationDeterminants) {
  auto d = duplication_determinants(6);
  auto merged = d.merged();
  ASSERT_EQ(merged.size(), 12u);
  EXPECT_EQ(std::vector<Integer>(merged.begin(), merged.begin() + 4),
            (std::vector<Integer>{29, 169, 985, 5741}));
  for (unsigned s = 0; s < merged.size(); ++s) EXPECT_EQ(merged[s], p_seq(s)) << s;
}

TEST(Lens, AchiralSeriesDeterminants) {
  auto d = achiral_series_determinants(5);
  for (unsigned k = 0; k <= 5; ++k) EXPECT_EQ(d[k], q_seq(k)) << k;
}

TEST(Lens, FourTerminalSeriesInN) {
  for (long n = 1; n <= 3; ++n) {
    Integer det = word_determinant({n, 1, 1, n});
    EXPECT_EQ(det, 2 * n * n + 2 * n + 1);
    EXPECT_TRUE(in_N(det));
  }
}

TEST(Lens, SweepIndependentOfThreads) {
  auto one = lens_sweep(3, 501, 1);
  auto four = lens_sweep(3, 501, 4);
  ASSERT_EQ(one.size(), 250u);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].p, four[i].p);
    EXPECT_EQ(one[i].u1_oriented, four[i].u1_oriented);
  }
  EXPECT_FALSE(one[0].u1_unoriented.has_value());
  EXPECT_EQ(one[13].p, 29);
  EXPECT_EQ(*one[13].u1_unoriented, 2);
}
