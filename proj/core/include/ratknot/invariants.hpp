#pragma once

#include <cstddef>
#include <vector>

#include "ratknot/fraction.hpp"

namespace ratknot {

// Functions taking a ConwayWord require WordForm::Even unless noted.

Integer crossing_number(const ConwayWord& word);
std::size_t genus(const ConwayWord& word);
// Alternating sum of entry signs; invariant under w -> -reverse(w) (same
// oriented knot), negated under w -> -w (mirror).
long signature(const ConwayWord& word);
// |prod a_i| / 4^genus
Integer maxcf_alexander(const ConwayWord& word);

bool is_fibered(const ConwayWord& word);
// Signs strictly alternate starting with + (resp. -).
bool is_positive(const ConwayWord& word);
bool is_negative(const ConwayWord& word);
bool is_achiral(const ConwayWord& word);

// p = 2 m n + sign, residue = 2 n^2, m > n >= 1, gcd(m, n) = 1.
struct U1Decomposition {
  Integer m;
  Integer n;
  int sign = 1;
  Integer residue;
};

// Every decomposition over the residues {+-q, +-q^-1} mod p.
std::vector<U1Decomposition> u1_decompositions(const SchubertPair& pair);

bool is_u1(const SchubertPair& pair);
bool is_bleiler_counterexample(const SchubertPair& pair);

enum class U1Form { Form1, Form2, Both, Neither };

const char* to_string(U1Form form);

// Matches the word and its reversal/negation against the two shapes of even
// words of unknotting number one knots.
U1Form classify_u1_even_form(const ConwayWord& word);

// 1-based indices i (word in Conway order, WordForm::Positive) for which
// c_i -> c_i - 2 yields the unknot.
std::vector<std::size_t> unknotting_switches(const ConwayWord& positive_word);

struct InvariantSet {
  Integer crossing_number;
  std::size_t genus = 0;
  long signature = 0;
  Integer determinant;
  Integer maxcf_alexander;
  bool fibered = false;
  bool positive = false;
  bool negative = false;
  bool achiral = false;
  bool u1 = false;
  bool bleiler_counterexample = false;
};

InvariantSet compute_invariants(const KnotClass& knot);

}  // namespace ratknot
