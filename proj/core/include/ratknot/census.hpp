#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratknot/fraction.hpp"

namespace ratknot {

enum KnotFlag : unsigned {
  kFibered = 1u << 0,
  kPositive = 1u << 1,
  kNegative = 1u << 2,
  kAchiral = 1u << 3,
  kU1 = 1u << 4,
  kBleilerCounterexample = 1u << 5,
  kSignatureZero = 1u << 6,
};
using FlagSet = unsigned;

inline constexpr KnotFlag kAllFlags[] = {kFibered, kPositive,  kNegative,     kAchiral,
                                         kU1,      kBleilerCounterexample, kSignatureZero};

const char* flag_name(KnotFlag flag);
std::optional<KnotFlag> parse_flag(std::string_view name);

struct CensusFilter {
  FlagSet require = 0;
  FlagSet forbid = 0;
  // Chiral classes contribute the knot and its mirror separately. Without
  // it a class counts once and positive/negative both mean "the class holds
  // a positive knot".
  bool count_chiral_pairs_twice = false;
};

struct CensusReport {
  int n = 0;
  bool pairs_twice = false;
  Integer total;
  std::map<int, Integer> by_genus;
  // Always counted with chiral pairs twice, over the filtered knots.
  std::map<int, Integer> by_signature;
  // Filtered knots carrying each flag.
  std::map<std::string, Integer> flag_counts;
  Rational mean_genus;
  Rational mean_abs_signature;
};

enum class EnumerationMode { UpToMirror, Oriented };

// Calls `visit` with one even word per knot class of crossing number n (per
// oriented knot in Oriented mode). Up to mirror the word is the minimum of its
// orbit among words with positive first entry; oriented, it is the minimum of
// {w, -reverse(w)}. `max_abs_entry` = 0 means unbounded.
void for_each_even_word(int n, EnumerationMode mode,
                        const std::function<void(std::span<const int>)>& visit,
                        int max_abs_entry = 0);

std::vector<ConwayWord> enumerate_even_words(int n,
                                             EnumerationMode mode = EnumerationMode::UpToMirror);

// Per-knot data computed with machine integers; what census aggregates.
struct KnotRecord {
  std::int64_t p = 0;
  std::int64_t q = 0;  // eval of the reversed word is p/q, |q| < p
  int crossing_number = 0;
  int genus = 0;
  int signature = 0;
  FlagSet flags = 0;  // orientation-sensitive flags as for the given word
};

KnotRecord describe_small_word(std::span<const int> word);

CensusReport census(int n, const CensusFilter& filter, unsigned threads = 1);

// Distinct u1 classes S(2mn +- 1, 2n^2) of determinant p; oriented counts a
// chiral class and its mirror separately.
Integer census_u1_by_determinant(const Integer& p, bool oriented = false);

struct SignatureTotals {
  Integer knots;          // classes up to mirror
  Integer sum_abs_signature;
};

// Dynamic programme over (crossings, running signature, last contribution);
// no enumeration.
SignatureTotals signature_totals(int n);
Integer sum_abs_signature(int n);

}  // namespace ratknot
