#pragma once

#include <optional>
#include <vector>

#include "ratknot/fraction.hpp"

namespace ratknot {

// Ordered pairs (a, b) of positive coprime integers with a^2 + b^2 = n.
Integer r2_0(const Integer& n);

// Lens spaces with fundamental group Z_p (p >= 3 odd). Unoriented identifies
// L(p, q) with its mirror L(p, -q).
Integer lens_count(const Integer& p, bool oriented);

// Lens spaces Z_p (p >= 5 odd) obtainable by p/+-2 surgery on a knot.
Integer u1_lens_count(const Integer& p, bool oriented);

// Exceptional determinants: p = 29, 169, 985, ...; q = 65, 901, 12545, ...
Integer p_seq(unsigned s);
Integer q_seq(unsigned s);
// The same values from the closed forms, computed in Z[sqrt 2] and Z[sqrt 3].
Integer p_seq_closed_form(unsigned s);
Integer q_seq_closed_form(unsigned s);

bool is_ps(const Integer& p);
// p = 2n^2 + 2n + 1 with n >= 1.
bool in_N(const Integer& p);
// p = q_s for some s >= 0.
bool in_S(const Integer& p);

struct LensCount {
  Integer p;
  Integer unoriented;
  Integer oriented;
  // Absent for p = 3; the u1 count formula needs p >= 5.
  std::optional<Integer> u1_unoriented;
  std::optional<Integer> u1_oriented;
  bool is_ps = false;
  bool in_N = false;
  bool in_S = false;
};

LensCount lens_row(const Integer& p);
// Odd p in [p_min, p_max], ascending; identical for every thread count.
std::vector<LensCount> lens_sweep(unsigned long p_min, unsigned long p_max, unsigned threads = 1);

struct SnSolution {
  unsigned s = 0;
  Integer n;
};

// All s <= max_s with q_s = 2n^2 + 2n + 1 for some integer n >= 0.
std::vector<SnSolution> sn_search(unsigned max_s);

// x gives an integer point of y^2 = 3x^4 + 2x^2 - 5.
bool is_curve_point(const Integer& x);

struct DuplicationDeterminants {
  // (4,-2)^k, -2, 2, (-4,2)^(k-1)
  std::vector<Integer> first;
  // (2,-4)^k, 2, 2, (-2,4)^k
  std::vector<Integer> second;
  // Both lists merged and sorted.
  std::vector<Integer> merged() const;
};

DuplicationDeterminants duplication_determinants(unsigned k_max);

// Determinants of the achiral u1 words 3 (1 2)^k 1 1 1 1 (2 1)^k 3, k = 0..k_max.
std::vector<Integer> achiral_series_determinants(unsigned k_max);

// Determinant of a Conway word (numerator of its fraction).
Integer word_determinant(const std::vector<Integer>& entries);

}  // namespace ratknot
