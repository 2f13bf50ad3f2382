#pragma once

#include <vector>

#include "ratknot/series.hpp"

namespace ratknot {

// Alternating sequences of signature groups of even words (first group
// positive): x crossings, y word length, z word length plus signature.
RationalGF signature_sequences_gf();

// Knots by crossing number (x), 2g (y) and 2g + signature (z), both members
// of a chiral pair counted. Throws std::logic_error if a coefficient is not
// an integer.
TruncatedSeries build_G1(int order);

// The same counts with the y slot dropped and the signature itself in the z
// slot (negative exponents allowed). Cheap enough for orders in the hundreds.
TruncatedSeries build_G1_signature(int order);

// Achiral knots by (x, 2g, 2g), i.e. the palindromic words.
TruncatedSeries palindromic_part(int order);

// Knots by (x, 2g, |signature|), chiral pairs counted once.
TruncatedSeries select_J(const TruncatedSeries& g1, int order);
// Signature-layout version: knots by (x, |signature| in z).
TruncatedSeries select_J_signature(const TruncatedSeries& g1_signature);

// Signature-zero knots by crossing number, chiral pairs counted twice.
TruncatedSeries diagonal_sigma0(const TruncatedSeries& g1);
TruncatedSeries diagonal_sigma0_signature(const TruncatedSeries& g1_signature);

struct CrossingStatistics {
  int n = 0;
  Integer knots;              // chiral pairs once
  Integer knots_pairs_twice;
  Integer sigma0_pairs_twice;
  Integer sum_genus;          // chiral pairs once
  Integer sum_abs_signature;  // chiral pairs once
  Rational mean_genus;
  Rational mean_abs_signature;
};

// Exact per-crossing-number statistics for 3 <= n <= order.
std::vector<CrossingStatistics> mean_statistics(int order);

}  // namespace ratknot
