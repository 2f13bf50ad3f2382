#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ratknot/fraction.hpp"

namespace ratknot {

// Integer 2x2 matrix [[a, b], [c, d]] with determinant +-1 and c even.
struct UnimodularMatrix {
  Integer a, b, c, d;

  // Throws DomainError unless |ad - bc| = 1 and c is even.
  static UnimodularMatrix make(Integer a, Integer b, Integer c, Integer d);

  Integer determinant() const { return a * d - b * c; }
  UnimodularMatrix operator*(const UnimodularMatrix& o) const;
  std::pair<Integer, Integer> apply(const Integer& p, const Integer& q) const;

  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;
};

// [[sgn k + 4|kl|, 2|k| sgn l], [2|l|, sgn l]] with sgn 0 = 1.
UnimodularMatrix m_kl(long k, long l);

using Generator = std::pair<long, long>;  // (k, l)
using OrbitVector = std::pair<std::int64_t, std::int64_t>;

// Normalized uses m_kl and keeps p > q >= 1. Prepend uses the strictly
// unimodular [[1 + 4kl, 2k], [2l, 1]], whose products on (1, 0) give
// numerator and denominator of the iterated fraction (2k1, 2l1, 2k2, ...);
// vectors are kept with p > |q| >= 1.
enum class OrbitAction { Normalized, Prepend };

struct OrbitNode {
  OrbitVector vector;
  // Generator indices; the vector is M_{w1} ... M_{wd} (1, 0).
  std::vector<Generator> word;
  int depth = 0;
};

// Breadth-first orbit of (1, 0) under a set of generators with k, l != 0,
// level by level. Level d holds each vector reachable by a word of length
// exactly d once, sorted. Vectors with p > max_p are dropped (0 = no bound).
// Every edge is checked to keep p > |q| >= 1 (q > 0 when Normalized) and
// gcd(p, q) = 1.
class Orbit {
 public:
  Orbit(std::vector<Generator> generators, int depth, std::int64_t max_p = 0, unsigned threads = 1,
        OrbitAction action = OrbitAction::Normalized);

  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<OrbitVector>& level(int d) const { return levels_.at(static_cast<std::size_t>(d)); }
  std::size_t size() const;
  bool contains(int d, const OrbitVector& v) const;
  // One word of length d reaching v (v must be in level d).
  std::vector<Generator> witness(int d, const OrbitVector& v) const;
  OrbitNode node(int d, const OrbitVector& v) const { return {v, witness(d, v), d}; }

  const std::vector<Generator>& generators() const { return generators_; }

 private:
  std::vector<Generator> generators_;
  std::int64_t max_p_;
  OrbitAction action_;
  std::vector<std::vector<OrbitVector>> levels_;
};

struct Violation {
  OrbitVector vector;
  std::vector<Generator> word;
  std::string reason;
};

struct PropositionReport {
  std::string proposition;
  int depth = 0;
  std::uint64_t vectors_explored = 0;
  std::vector<Violation> violations;
  // Proposition-specific counters (exemptions, informational hits, ...).
  std::map<std::string, std::int64_t> notes;

  bool ok() const { return violations.empty(); }
};

// Vector equals (2mn +- 1, 2n^2), m > n >= 1 coprime. Returns n, or 0.
std::int64_t literal_u1_n(const OrbitVector& v);

// Prepend orbit of k >= 1, l <= -1 (positive even words) with p <= max_p
// has no (p, |q|) = (2mn +- 1, 2n^2) with m > n > 1 coprime. The same search
// with m_kl is reported in notes["normalized_matrix_hits"].
PropositionReport verify_pppp(int depth, std::int64_t max_p);

// Generators (+-1, +-1): no (2mn +- 1, 2n^2) with m > n > 1 odd coprime.
// Notes count odd non-coprime hits per word length and failures of the
// q -> +-q^-1 closure.
PropositionReport verify_cnj1(int max_len, unsigned threads = 1);

// Orbit of (+-1, +-1) products up to length g_max equals the set of fibered
// S(p, q), q even in (0, p), of genus <= g_max, from the census.
PropositionReport verify_M1_1(int g_max, unsigned threads = 1);

// Prepend products, k >= 1, l != 0, p <= max_p, reaching (2mn +- 1, 2n^2): word
// length is 2 or (n, length) = (1, 1); at most one l is negative, exactly
// one iff p = 3 mod 4. Every word is examined, not one per vector.
PropositionReport verify_k_pos(int depth, std::int64_t max_p);

}  // namespace ratknot
