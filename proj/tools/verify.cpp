#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <stdexcept>

#include "ratknot/census.hpp"
#include "ratknot/lens.hpp"
#include "ratknot/table1.hpp"

namespace ratknot::cli {

namespace {

struct RowSpec {
  const char* name;
  FlagSet require;
  bool pairs_twice;
};

constexpr RowSpec kRows[] = {
    {"f", kFibered, false},       {"fa", kFibered | kAchiral, false}, {"u", kU1, false},
    {"au", kU1 | kAchiral, false}, {"fu", kFibered | kU1, false},     {"p", kPositive, false},
    {"sigma0", kSignatureZero, true},
};

// F_0 = F_1 = 1
Integer fibonacci(long n) {
  if (n < 0) return 0;
  Integer a = 1, b = 1;
  for (long i = 0; i < n; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return a;
}

Integer census_count(int n, FlagSet require, bool pairs_twice, unsigned threads) {
  CensusFilter f;
  f.require = require;
  f.count_chiral_pairs_twice = pairs_twice;
  return census(n, f, threads).total;
}

std::string range(int lo, int hi) { return "n=" + std::to_string(lo) + ".." + std::to_string(hi); }

// Runs `value(n)` against `expected(n)` and reports the first mismatch.
CheckResult compare(std::string name, int lo, int hi, int step, const std::function<Integer(int)>& value,
                    const std::function<Integer(int)>& expected) {
  CheckResult c{std::move(name), true, range(lo, hi)};
  for (int n = lo; n <= hi; n += step) {
    Integer got = value(n), want = expected(n);
    if (got != want) {
      c.pass = false;
      c.detail = "n=" + std::to_string(n) + ": got " + got.get_str() + ", expected " + want.get_str();
      break;
    }
  }
  return c;
}

void table1_suite(int max_n, unsigned threads, std::vector<CheckResult>& out) {
  const int hi = std::min(max_n, table1::kLastN);
  for (const RowSpec& row : kRows) {
    std::cerr << "[verify] table1 row " << row.name << "\n";
    out.push_back(compare(std::string("table1/") + row.name, table1::kFirstN, hi, 1,
                          [&](int n) { return census_count(n, row.require, row.pairs_twice, threads); },
                          [&](int n) { return Integer(static_cast<long>(table1::at(*table1::row(row.name), n))); }));
  }
}

void fibonacci_suite(int max_n, unsigned threads, std::vector<CheckResult>& out) {
  const int hi = std::min(max_n, table1::kLastN);
  std::cerr << "[verify] fibonacci\n";
  auto fa = [](int n) -> Integer { return fibonacci(n / 2 - 2); };
  auto fu = [](int n) -> Integer { return 2 * fibonacci(n / 2 - 3); };
  out.push_back(compare("fibonacci/fa census", 4, hi, 2,
                        [&](int n) { return census_count(n, kFibered | kAchiral, false, threads); }, fa));
  out.push_back(compare("fibonacci/fu census", 6, hi, 1,
                        [&](int n) { return census_count(n, kFibered | kU1, false, threads); }, fu));
  out.push_back(compare("fibonacci/fa table", 4, table1::kLastN, 2,
                        [](int n) { return Integer(static_cast<long>(table1::at(table1::fa, n))); }, fa));
  out.push_back(compare("fibonacci/fu table", 6, table1::kLastN, 1,
                        [](int n) { return Integer(static_cast<long>(table1::at(table1::fu, n))); }, fu));
}

long orbit_count(long p, bool oriented) {
  std::vector<char> seen(static_cast<std::size_t>(p), 0);
  long orbits = 0;
  for (long q = 1; q < p; ++q) {
    if (std::gcd(q, p) != 1 || seen[static_cast<std::size_t>(q)]) continue;
    ++orbits;
    const long inv = mod_inverse(q, p).get_si();
    for (long m : {q, inv}) seen[static_cast<std::size_t>(m)] = 1;
    if (!oriented)
      for (long m : {p - q, p - inv}) seen[static_cast<std::size_t>(m)] = 1;
  }
  return orbits;
}

void lens_suite(unsigned threads, std::vector<CheckResult>& out) {
  (void)threads;
  std::cerr << "[verify] lens\n";
  {
    CheckResult c{"lens/counts vs orbits", true, "odd p=3..2000"};
    for (long p = 3; p <= 2000 && c.pass; p += 2)
      for (bool oriented : {false, true})
        if (lens_count(p, oriented) != orbit_count(p, oriented)) {
          c.pass = false;
          c.detail = "p=" + std::to_string(p) + (oriented ? " oriented" : " unoriented");
        }
    out.push_back(c);
  }
  {
    CheckResult c{"lens/surgery counts vs u1 census", true, "odd p=5..10000"};
    for (long p = 5; p <= 10000 && c.pass; p += 2)
      for (bool oriented : {false, true})
        if (u1_lens_count(p, oriented) != census_u1_by_determinant(p, oriented)) {
          c.pass = false;
          c.detail = "p=" + std::to_string(p) + (oriented ? " oriented" : " unoriented");
        }
    out.push_back(c);
  }
  const std::vector<long> ps = {29, 169, 985, 5741, 33461, 195025};
  const std::vector<long> qs = {65, 901, 12545, 174725, 2433601, 33895685};
  out.push_back(compare("lens/p_s listed values", 0, 5, 1, [](int s) { return p_seq(static_cast<unsigned>(s)); },
                        [&](int s) { return Integer(ps[static_cast<std::size_t>(s)]); }));
  out.push_back(compare("lens/q_s listed values", 0, 5, 1, [](int s) { return q_seq(static_cast<unsigned>(s)); },
                        [&](int s) { return Integer(qs[static_cast<std::size_t>(s)]); }));
  out.push_back(compare("lens/p_s closed form", 0, 50, 1, [](int s) { return p_seq(static_cast<unsigned>(s)); },
                        [](int s) { return p_seq_closed_form(static_cast<unsigned>(s)); }));
  out.push_back(compare("lens/q_s closed form", 0, 50, 1, [](int s) { return q_seq(static_cast<unsigned>(s)); },
                        [](int s) { return q_seq_closed_form(static_cast<unsigned>(s)); }));
  const auto dup = duplication_determinants(6).merged();
  out.push_back(compare("lens/duplication determinants", 0, static_cast<int>(dup.size()) - 1, 1,
                        [&](int s) { return dup[static_cast<std::size_t>(s)]; },
                        [](int s) { return p_seq(static_cast<unsigned>(s)); }));
  const auto ach = achiral_series_determinants(5);
  out.push_back(compare("lens/achiral series determinants", 0, 5, 1,
                        [&](int k) { return ach[static_cast<std::size_t>(k)]; },
                        [](int k) { return q_seq(static_cast<unsigned>(k)); }));
  const auto hits = sn_search(10000);
  out.push_back({"lens/sn_search", hits.empty(), "s=0..10000, " + std::to_string(hits.size()) + " solutions"});
  std::vector<long> points;
  for (long x = -1000000; x <= 1000000; ++x)
    if (is_curve_point(x)) points.push_back(x);
  out.push_back({"lens/curve points", points == std::vector<long>{-3, -1, 1, 3},
                 "|x|<=1000000, " + std::to_string(points.size()) + " points"});
}

}  // namespace

std::vector<CheckResult> run_suite(std::string_view suite, int max_n, unsigned threads) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (!all && suite != "table1" && suite != "fibonacci" && suite != "lens")
    throw std::invalid_argument("unknown suite: " + std::string(suite));
  if (all || suite == "table1") table1_suite(max_n, threads, out);
  if (all || suite == "fibonacci") fibonacci_suite(max_n, threads, out);
  if (all || suite == "lens") lens_suite(threads, out);
  return out;
}

}  // namespace ratknot::cli
