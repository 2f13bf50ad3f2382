#include "ratknot/fraction.hpp"

#include <algorithm>

namespace ratknot {

namespace {

int sign_of(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }

bool is_even(const Integer& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("not an integer: '" + std::string(text) + "'");
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return Integer(s, 10);
}

ConwayWord with_form(std::vector<Integer> entries, WordForm form) {
  return ConwayWord(std::move(entries), form);
}

}  // namespace

ExtendedRational::ExtendedRational(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    if (num_ == 0) throw DomainError("0/0 is not an extended rational");
    num_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExtendedRational ExtendedRational::reciprocal() const {
  if (is_infinite()) return ExtendedRational();
  if (num_ == 0) return infinity();
  return ExtendedRational(den_, num_);
}

ExtendedRational ExtendedRational::plus(const Integer& k) const {
  if (is_infinite()) return *this;
  return ExtendedRational(num_ + k * den_, den_);
}

std::string ExtendedRational::to_string() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

ExtendedRational eval_cf(std::span<const Integer> entries) {
  // Work on an unreduced (num, den) pair; consecutive convergents are coprime
  // so the final normalization is only about signs.
  Integer num = 1, den = 0;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    Integer next = *it * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  if (num == 0 && den == 0) return ExtendedRational::infinity();
  return ExtendedRational(num, den);
}

std::string_view to_string(WordForm form) {
  switch (form) {
    case WordForm::Positive: return "positive";
    case WordForm::Even: return "even";
    case WordForm::Mixed: return "mixed";
  }
  return "mixed";
}

ConwayWord::ConwayWord(std::vector<Integer> entries, WordForm form)
    : entries_(std::move(entries)), form_(form) {
  switch (form_) {
    case WordForm::Positive:
      for (const auto& e : entries_)
        if (e < 1) throw DomainError("positive word has entry " + e.get_str());
      break;
    case WordForm::Even:
      if (entries_.size() % 2 != 0) throw DomainError("even word must have even length");
      for (const auto& e : entries_)
        if (e == 0 || !is_even(e)) throw DomainError("even word has entry " + e.get_str());
      break;
    case WordForm::Mixed:
      for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] == 0) throw DomainError("mixed word has an interior zero");
      break;
  }
}

ConwayWord ConwayWord::reversed() const {
  std::vector<Integer> r(entries_.rbegin(), entries_.rend());
  return with_form(std::move(r), form_);
}

ConwayWord ConwayWord::negated() const {
  std::vector<Integer> r;
  r.reserve(entries_.size());
  for (const auto& e : entries_) r.push_back(-e);
  return with_form(std::move(r), form_ == WordForm::Positive ? WordForm::Mixed : form_);
}

ExtendedRational ConwayWord::fraction() const {
  std::vector<Integer> r(entries_.rbegin(), entries_.rend());
  return eval_cf(r);
}

std::string ConwayWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].get_str();
  }
  return out;
}

bool lex_less(std::span<const Integer> a, std::span<const Integer> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SchubertPair SchubertPair::make(Integer p, Integer q) {
  if (p < 1 || is_even(p)) throw DomainError("p must be odd and positive, got " + p.get_str());
  if (q < 0 || q >= p) throw DomainError("q must satisfy 0 <= q < p");
  if (!is_even(q)) throw DomainError("q must be even in a normalized pair");
  if (gcd(p, q) != 1) throw DomainError("p and q must be coprime");
  return SchubertPair{std::move(p), std::move(q)};
}

std::string SchubertPair::to_string() const { return p.get_str() + "/" + q.get_str(); }

Integer even_representative(const Integer& r, const Integer& p) {
  Integer m;
  mpz_fdiv_r(m.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  if (!is_even(m)) m -= p;
  return m;
}

Integer mod_inverse(const Integer& a, const Integer& p) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw DomainError("no inverse of " + a.get_str() + " mod " + p.get_str());
  return r;
}

std::vector<Integer> even_expansion(const Integer& p, const Integer& e) {
  if (p < 3 || is_even(p) || e == 0 || !is_even(e) || abs(e) >= p || gcd(p, e) != 1)
    throw DomainError("even_expansion needs p odd >= 3 and e even, 0 < |e| < p, coprime");
  std::vector<Integer> out;
  Integer num = p, den = e;
  while (true) {
    // Nearest even a: 2 * round(num / (2 den)). num/den is never an odd
    // integer here, so the rounding is never a tie.
    Integer a = 2 * floor_div(num + den, 2 * den);
    out.push_back(a);
    Integer rem = num - a * den;
    if (rem == 0) break;
    num = std::move(den);
    den = std::move(rem);
  }
  return out;
}

ConwayWord oriented_even_word(const Integer& p, const Integer& q) {
  Integer e = even_representative(q, p);
  auto c = even_expansion(p, e);
  std::vector<Integer> w(c.rbegin(), c.rend());
  std::vector<Integer> alt;
  alt.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) alt.push_back(-*it);
  // Prefer a positive first entry, then the lexicographic minimum.
  bool take_alt = (alt[0] > 0) != (w[0] > 0) ? alt[0] > 0 : lex_less(alt, w);
  return ConwayWord::even(take_alt ? std::move(alt) : std::move(w));
}

ConwayWord collapse_zeros(std::vector<Integer> word) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] != 0) continue;
      if (i == 0 && word.size() >= 2) {
        // (0, b, rest): the reversed fraction ends in [[b, 0]] = inf and
        // x + 1/inf = x, so both entries drop.
        word.erase(word.begin(), word.begin() + 2);
        changed = true;
        break;
      }
      if (i > 0 && i + 1 < word.size()) {
        word[i - 1] += word[i + 1];
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(i),
                   word.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return ConwayWord(std::move(word), WordForm::Mixed);
}

ConwayWord even_to_positive(const ConwayWord& word) {
  if (word.form() != WordForm::Even) throw DomainError("even_to_positive needs an even word");
  if (word.empty()) throw DomainError("even_to_positive: empty word");
  const auto& a = word.entries();
  // Mirror so the first entry is positive, then apply
  // [[x, a, -b, y]] = [[x, a - 1, 1, b - 1, -y]] left to right.
  int flip = sign_of(a[0]);
  std::vector<Integer> out;
  Integer cur = flip * a[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    Integer b = flip * a[i];
    if (b > 0) {
      out.push_back(cur);
      cur = b;
    } else {
      out.push_back(cur - 1);
      out.push_back(1);
      cur = -b - 1;
      flip = -flip;
    }
  }
  out.push_back(cur);
  auto collapsed = collapse_zeros(std::move(out));
  return ConwayWord::positive(collapsed.entries());
}

ConwayWord canonical_word(const ConwayWord& word) {
  if (word.form() != WordForm::Even) throw DomainError("canonical_word needs an even word");
  if (word.empty()) return word;
  const ConwayWord cands[] = {word, word.reversed(), word.negated(), word.reversed().negated()};
  const ConwayWord* best = nullptr;
  for (const auto& c : cands) {
    if (c[0] < 0) continue;
    if (!best || lex_less(c.entries(), best->entries())) best = &c;
  }
  return *best;
}

std::vector<SchubertPair> equivalents(const SchubertPair& pair, bool up_to_mirror) {
  if (pair.p == 1) return {pair};
  Integer inv = mod_inverse(pair.q, pair.p);
  std::vector<Integer> residues = {pair.q, inv};
  if (up_to_mirror) {
    residues.push_back(pair.p - pair.q);
    residues.push_back(pair.p - inv);
  }
  std::vector<SchubertPair> out;
  for (const auto& r : residues) {
    Integer e = even_representative(r, pair.p);
    if (e > 0) out.push_back(SchubertPair{pair.p, e});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConwayWord positive_to_even(const SchubertPair& pair) {
  SchubertPair::make(pair.p, pair.q);
  if (pair.p == 1) throw DomainError("the unknot has no even word");
  if (pair.q == 0) throw DomainError("q = 0 only occurs for the unknot");
  return canonical_word(oriented_even_word(pair.p, pair.q));
}

KnotClass classify(const Integer& p_in, const Integer& q_in) {
  Integer p = abs(p_in);
  Integer q = sign_of(p_in) < 0 ? Integer(-q_in) : q_in;
  if (is_even(p)) throw DomainError("p = " + p.get_str() + " is even: a link, not a knot");
  if (gcd(p, q) != 1) throw DomainError("p and q are not coprime");
  if (p < 3) throw DomainError("p = 1 is the unknot");

  KnotClass k;
  Integer e = even_representative(q, p);
  Integer e_inv = even_representative(mod_inverse(q, p), p);
  Integer m = even_representative(-e, p);
  Integer m_inv = even_representative(-e_inv, p);
  k.achiral = (m == e || m == e_inv);
  // Smallest positive even rep of the oriented class and of its mirror.
  auto smallest_positive = [](const Integer& a, const Integer& b) {
    if (a > 0 && b > 0) return a < b ? a : b;
    return a > 0 ? a : (b > 0 ? b : Integer(0));
  };
  Integer own = smallest_positive(e, e_inv);
  Integer mirror = smallest_positive(m, m_inv);
  if (own != 0 && (mirror == 0 || own <= mirror)) {
    k.canonical = SchubertPair{p, own};
  } else {
    k.canonical = SchubertPair{p, mirror};
    k.mirrored = !k.achiral;
  }
  k.oriented_q = e;
  k.even_word = oriented_even_word(p, q);
  k.positive_word = even_to_positive(k.even_word);
  return k;
}

KnotClass classify(const ConwayWord& word) {
  if (word.form() == WordForm::Mixed)
    throw DomainError("classification needs a positive or even word");
  auto f = word.fraction();
  if (f.is_infinite()) throw DomainError("word represents a link (p = 0)");
  return classify(abs(f.numerator()), sign_of(f.numerator()) * f.denominator());
}

std::pair<Integer, Integer> parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw ParseError("expected p/q, got '" + std::string(text) + "'");
  return {parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1))};
}

std::vector<Integer> parse_entries(std::string_view text) {
  std::vector<Integer> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_integer(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace ratknot
