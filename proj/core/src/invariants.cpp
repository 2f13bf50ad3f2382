#include "ratknot/invariants.hpp"

#include <algorithm>

namespace ratknot {

namespace {

int sign_of(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }

void require_even(const ConwayWord& word) {
  if (word.form() != WordForm::Even) throw DomainError("an even word is required");
}

bool alternates_from(const ConwayWord& word, int first_sign) {
  int s = first_sign;
  for (const auto& a : word.entries()) {
    if (sign_of(a) != s) return false;
    s = -s;
  }
  return !word.empty();
}

bool matches_form1(const std::vector<Integer>& v) {
  if (v.size() < 2 || v.size() % 2) return false;
  std::size_t l = v.size() / 2 - 1;
  if (abs(v[l + 1]) != 2) return false;
  for (std::size_t j = 1; j <= l; ++j)
    if (v[l + 1 + j] != -v[l + 1 - j]) return false;
  return true;
}

bool matches_form2(const std::vector<Integer>& v) {
  if (v.size() < 4 || v.size() % 2) return false;
  std::size_t l = v.size() / 2 - 1;
  const Integer& mid = v[l + 1];
  if (abs(mid) != 2) return false;
  const Integer& al = v[l];
  const Integer& al2 = v[l + 2];
  if (abs(al + al2) != 2) return false;
  const Integer& larger = abs(al) > abs(al2) ? al : al2;
  if (sign_of(larger) == sign_of(mid)) return false;
  for (std::size_t j = 1; j + 1 <= l; ++j)
    if (v[l + 2 + j] != -v[l - j]) return false;
  return true;
}

}  // namespace

Integer crossing_number(const ConwayWord& word) {
  require_even(word);
  const auto& a = word.entries();
  Integer c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    c += abs(a[i]);
    if (i + 1 < a.size() && sign_of(a[i]) != sign_of(a[i + 1])) c -= 1;
  }
  return c;
}

std::size_t genus(const ConwayWord& word) {
  require_even(word);
  return word.size() / 2;
}

long signature(const ConwayWord& word) {
  require_even(word);
  long s = 0;
  for (std::size_t i = 0; i < word.size(); ++i) s += (i % 2 ? -1 : 1) * sign_of(word[i]);
  return s;
}

Integer maxcf_alexander(const ConwayWord& word) {
  require_even(word);
  Integer prod = 1;
  for (const auto& a : word.entries()) prod *= a;
  prod = abs(prod);
  mpz_fdiv_q_2exp(prod.get_mpz_t(), prod.get_mpz_t(), word.size());
  return prod;
}

bool is_fibered(const ConwayWord& word) {
  require_even(word);
  return std::all_of(word.entries().begin(), word.entries().end(),
                     [](const Integer& a) { return abs(a) == 2; });
}

bool is_positive(const ConwayWord& word) {
  require_even(word);
  return alternates_from(word, 1);
}

bool is_negative(const ConwayWord& word) {
  require_even(word);
  return alternates_from(word, -1);
}

bool is_achiral(const ConwayWord& word) {
  require_even(word);
  const auto& a = word.entries();
  return std::equal(a.begin(), a.end(), a.rbegin());
}

std::vector<U1Decomposition> u1_decompositions(const SchubertPair& pair) {
  std::vector<U1Decomposition> out;
  const Integer& p = pair.p;
  if (p < 3) return out;
  Integer inv = mod_inverse(pair.q, p);
  std::vector<Integer> residues = {pair.q, p - pair.q, inv, p - inv};
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  for (const auto& r : residues) {
    if (r <= 0 || mpz_odd_p(r.get_mpz_t())) continue;
    Integer half = r / 2;
    if (mpz_perfect_square_p(half.get_mpz_t()) == 0) continue;
    Integer n = sqrt(half);
    for (int sign : {1, -1}) {
      Integer rest = p - sign;
      Integer two_n = 2 * n;
      if (mpz_divisible_p(rest.get_mpz_t(), two_n.get_mpz_t()) == 0) continue;
      Integer m = rest / two_n;
      if (m > n && gcd(m, n) == 1) out.push_back({m, n, sign, r});
    }
  }
  return out;
}

bool is_u1(const SchubertPair& pair) { return !u1_decompositions(pair).empty(); }

bool is_bleiler_counterexample(const SchubertPair& pair) {
  auto ds = u1_decompositions(pair);
  bool big = std::any_of(ds.begin(), ds.end(), [](const U1Decomposition& d) { return d.n > 1; });
  bool has_even = std::any_of(ds.begin(), ds.end(), [](const U1Decomposition& d) {
    return mpz_even_p(d.m.get_mpz_t()) || mpz_even_p(d.n.get_mpz_t());
  });
  return big && !has_even;
}

const char* to_string(U1Form form) {
  switch (form) {
    case U1Form::Form1: return "form1";
    case U1Form::Form2: return "form2";
    case U1Form::Both: return "both";
    case U1Form::Neither: return "neither";
  }
  return "neither";
}

U1Form classify_u1_even_form(const ConwayWord& word) {
  require_even(word);
  bool f1 = false, f2 = false;
  for (const auto& w : {word, word.reversed(), word.negated(), word.reversed().negated()}) {
    f1 = f1 || matches_form1(w.entries());
    f2 = f2 || matches_form2(w.entries());
  }
  if (f1 && f2) return U1Form::Both;
  if (f1) return U1Form::Form1;
  if (f2) return U1Form::Form2;
  return U1Form::Neither;
}

std::vector<std::size_t> unknotting_switches(const ConwayWord& positive_word) {
  if (positive_word.form() != WordForm::Positive)
    throw DomainError("unknotting_switches needs a positive word");
  std::vector<std::size_t> out;
  std::vector<Integer> c = positive_word.entries();
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] -= 2;
    std::vector<Integer> rev(c.rbegin(), c.rend());
    if (abs(eval_cf(rev).numerator()) == 1) out.push_back(i + 1);
    c[i] += 2;
  }
  return out;
}

InvariantSet compute_invariants(const KnotClass& knot) {
  InvariantSet s;
  const auto& w = knot.even_word;
  s.crossing_number = crossing_number(w);
  s.genus = genus(w);
  s.signature = signature(w);
  s.determinant = knot.canonical.p;
  s.maxcf_alexander = maxcf_alexander(w);
  s.fibered = is_fibered(w);
  s.positive = is_positive(w);
  s.negative = is_negative(w);
  s.achiral = is_achiral(w);
  s.u1 = is_u1(knot.canonical);
  s.bleiler_counterexample = is_bleiler_counterexample(knot.canonical);
  return s;
}

}  // namespace ratknot
