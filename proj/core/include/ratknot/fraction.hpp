#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ratknot {

using Integer = mpz_class;
using Rational = mpq_class;

// Malformed textual input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input outside the supported domain (links, the unknot where a
// knot is required, non-normalized pairs, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value in Q u {inf}. Infinity is 1/0; there is no signed infinity.
class ExtendedRational {
 public:
  ExtendedRational() : num_(0), den_(1) {}
  ExtendedRational(Integer num, Integer den = 1);

  static ExtendedRational infinity() { return ExtendedRational(1, 0); }

  bool is_infinite() const { return den_ == 0; }
  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  ExtendedRational reciprocal() const;
  // k + x, with k + inf = inf.
  ExtendedRational plus(const Integer& k) const;

  std::string to_string() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Integer num_;
  Integer den_;
};

// [[s1, ..., sm]] = s1 + 1/[[s2, ..., sm]], evaluated right to left.
// The empty sequence is infinity.
ExtendedRational eval_cf(std::span<const Integer> entries);

enum class WordForm { Positive, Even, Mixed };

std::string_view to_string(WordForm form);

// A Conway notation C(c_n, ..., c_1). The knot is S(p, q) with
// p/q = eval_cf(reverse(entries)).
class ConwayWord {
 public:
  ConwayWord() = default;
  // Validates the entries against `form`. Mixed words may not contain zeros
  // except a single trailing one (a reciprocal that no collapse can remove).
  ConwayWord(std::vector<Integer> entries, WordForm form);

  static ConwayWord even(std::vector<Integer> entries) {
    return ConwayWord(std::move(entries), WordForm::Even);
  }
  static ConwayWord positive(std::vector<Integer> entries) {
    return ConwayWord(std::move(entries), WordForm::Positive);
  }

  const std::vector<Integer>& entries() const { return entries_; }
  WordForm form() const { return form_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }

  ConwayWord reversed() const;
  ConwayWord negated() const;

  // eval_cf of the reversed entries, i.e. the fraction p/q of the knot.
  ExtendedRational fraction() const;

  std::string to_string() const;

  friend bool operator==(const ConwayWord& a, const ConwayWord& b) {
    return a.form_ == b.form_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<Integer> entries_;
  WordForm form_ = WordForm::Mixed;
};

// Lexicographic comparison of entry sequences.
bool lex_less(std::span<const Integer> a, std::span<const Integer> b);

// Normalized Schubert pair: p odd >= 1, q even, 0 <= q < p, gcd(p, q) = 1.
struct SchubertPair {
  Integer p;
  Integer q;

  // Throws DomainError unless (p, q) is normalized.
  static SchubertPair make(Integer p, Integer q);

  std::string to_string() const;

  friend bool operator==(const SchubertPair& a, const SchubertPair& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator<(const SchubertPair& a, const SchubertPair& b) {
    return a.p < b.p || (a.p == b.p && a.q < b.q);
  }
};

// The unique even integer in (-p, p) congruent to r mod p (p odd).
Integer even_representative(const Integer& r, const Integer& p);

Integer mod_inverse(const Integer& a, const Integer& p);

// Greedy nearest-even expansion of p/e (p odd >= 3, e even, 0 < |e| < p,
// coprime). Returns (c_1, ..., c_m) with eval_cf(c) = p/e; m is even and
// every entry is even and non-zero.
std::vector<Integer> even_expansion(const Integer& p, const Integer& e);

// Even word of the oriented knot S(p, q); q may be any residue coprime to p.
// Of the two words of the oriented knot, w and -reverse(w), the one with a
// positive first entry is returned (the smaller one if both qualify).
ConwayWord oriented_even_word(const Integer& p, const Integer& q);

// Applies (.., a, 0, b, ..) -> (.., a + b, ..) and drops a leading (0, b)
// pair, both preserving eval_cf of the reversed word. A trailing zero stays.
ConwayWord collapse_zeros(std::vector<Integer> word);

// All-positive word with the same knot up to mirror; entry sum equals the
// crossing number of the input.
ConwayWord even_to_positive(const ConwayWord& word);

// Canonical even word of the class of `pair` up to mirror.
ConwayWord positive_to_even(const SchubertPair& pair);

// Even positive representatives of {q, q^-1} (or of {+-q, +-q^-1} when
// up_to_mirror), sorted ascending; the first element is canonical.
std::vector<SchubertPair> equivalents(const SchubertPair& pair, bool up_to_mirror);

// Minimum over {w, rev w, -w, -rev w} restricted to first entry positive.
ConwayWord canonical_word(const ConwayWord& word);

// Orientation-faithful classification of a rational knot.
struct KnotClass {
  SchubertPair canonical;  // up to mirror
  bool mirrored = false;   // the knot is the mirror of S(canonical)
  bool achiral = false;
  Integer oriented_q;      // even representative in (-p, p)
  ConwayWord even_word;    // oriented, as in oriented_even_word
  ConwayWord positive_word;
};

// p/q with p odd, gcd(p, q) = 1, |p| >= 3. Throws DomainError otherwise.
KnotClass classify(const Integer& p, const Integer& q);
// Positive or Even word of a knot (not a link, not the unknot).
KnotClass classify(const ConwayWord& word);

// "p/q"
std::pair<Integer, Integer> parse_fraction(std::string_view text);
// "a,b,c"
std::vector<Integer> parse_entries(std::string_view text);

}  // namespace ratknot
