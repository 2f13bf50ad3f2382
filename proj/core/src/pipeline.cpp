#include "ratknot/pipeline.hpp"

#include <stdexcept>

#include "ratknot/gf_catalog.hpp"

namespace ratknot {

namespace {

MonomialSubstitution subst(Monomial x, Monomial y, Monomial z, std::array<int, 3> sign = {1, 1, 1}) {
  MonomialSubstitution s;
  s.image = {x, y, z};
  s.sign = sign;
  return s;
}

constexpr Monomial kX{1, 0, 0}, kY{0, 1, 0}, kZ{0, 0, 1}, kOne{0, 0, 0};

// Mirror: (y, z) -> (y z^2, 1/z), i.e. 2g + s -> 2g - s.
const MonomialSubstitution kMirror = subst(kX, {0, 1, 2}, {0, 0, -1});
// Signature layout: y^l z^k -> z^(k - l).
const MonomialSubstitution kToSignature = subst(kX, {0, 0, -1}, kZ);

void require_integral(const TruncatedSeries& s) {
  if (!s.is_integral()) throw std::logic_error("non-integral coefficient in the signature series");
}

// Shared by both layouts. `words` counts even words with positive first
// entry, `flipped` is the same with y -> -y (its average with `words` keeps
// even lengths), `anti` halves an antipalindromic word and `pal` rebuilds a
// palindrome from its first half.
TruncatedSeries assemble(const TruncatedSeries& words, const TruncatedSeries& flipped,
                         const MonomialSubstitution& anti, const MonomialSubstitution& pal,
                         const MonomialSubstitution& mirror, int order) {
  TruncatedSeries even_length = (words + flipped).truncated(order) * Rational(1, 2);
  TruncatedSeries anti_pal = words.substitute(anti, order + 1).shift_x(-1);
  TruncatedSeries pals = words.substitute(pal, order);
  TruncatedSeries once = (even_length + anti_pal + pals) * Rational(1, 2);
  TruncatedSeries g1 = once + once.substitute(mirror, order) - pals;
  require_integral(g1);
  return g1;
}

}  // namespace

RationalGF signature_sequences_gf() {
  const RationalGF group = gf_catalog("sigma_group");
  const RationalGF negative = group.substitute(subst(kX, kY, kOne));
  const RationalGF positive = group.substitute(subst(kX, kY, {0, 0, 2}));
  const RationalGF one(1);
  return (one + one / positive) * negative * positive / (one - negative * positive);
}

TruncatedSeries build_G1(int order) {
  if (order < 3) throw DomainError("build_G1 needs order >= 3");
  const RationalGF r = signature_sequences_gf();
  const TruncatedSeries words = expand(r, order + 1);
  const TruncatedSeries flipped = words.substitute(subst(kX, kY, kZ, {1, -1, 1}), order + 1);
  return assemble(words, flipped, subst({2, 0, 0}, {0, 2, 0}, {0, 0, 2}),
                  subst({2, 0, 0}, {0, 2, 2}, kOne), kMirror, order);
}

TruncatedSeries palindromic_part(int order) {
  const TruncatedSeries half = expand(signature_sequences_gf(), order / 2 + 1);
  return half.substitute(subst({2, 0, 0}, {0, 2, 2}, kOne), order);
}

TruncatedSeries build_G1_signature(int order) {
  if (order < 3) throw DomainError("build_G1_signature needs order >= 3");
  const RationalGF r = signature_sequences_gf();
  const TruncatedSeries words = expand(r.substitute(kToSignature), order + 1);
  MonomialSubstitution flip = kToSignature;
  flip.sign = {1, -1, 1};
  const TruncatedSeries flipped = expand(r.substitute(flip), order + 1);
  return assemble(words, flipped, subst({2, 0, 0}, kOne, {0, 0, 2}), subst({2, 0, 0}, kOne, kOne),
                  subst(kX, kOne, {0, 0, -1}), order);
}

TruncatedSeries select_J(const TruncatedSeries& g1, int order) {
  if (order > g1.order()) throw DomainError("G1 not built to that order");
  TruncatedSeries g2 = g1.truncated(order) + palindromic_part(order);
  return g2.map_terms([](int, int l, int k) -> TruncatedSeries::TermImage {
    if (k < l) return {l, 0, 0};
    if (k - l > l) throw DomainError("coefficient outside the signature window");
    return {l, k - l, k == l ? Rational(1, 2) : Rational(1)};
  });
}

TruncatedSeries select_J_signature(const TruncatedSeries& g1_signature) {
  const int order = g1_signature.order();
  const RationalGF collapsed = signature_sequences_gf().substitute(subst(kX, kOne, kOne));
  TruncatedSeries pals = expand(collapsed, order / 2 + 1).substitute(subst({2, 0, 0}, kOne, kOne), order);
  TruncatedSeries g2 = g1_signature + pals;
  return g2.map_terms([](int, int, int s) -> TruncatedSeries::TermImage {
    if (s < 0) return {0, 0, 0};
    return {0, s, s == 0 ? Rational(1, 2) : Rational(1)};
  });
}

TruncatedSeries diagonal_sigma0(const TruncatedSeries& g1) {
  return g1.map_terms([](int, int l, int k) -> TruncatedSeries::TermImage {
    return {0, 0, k == l ? Rational(1) : Rational(0)};
  });
}

TruncatedSeries diagonal_sigma0_signature(const TruncatedSeries& g1_signature) {
  return g1_signature.map_terms([](int, int, int s) -> TruncatedSeries::TermImage {
    return {0, 0, s == 0 ? Rational(1) : Rational(0)};
  });
}

std::vector<CrossingStatistics> mean_statistics(int order) {
  if (order < 10) throw DomainError("mean_statistics needs order >= 10");
  const TruncatedSeries g1 = build_G1_signature(order);
  const TruncatedSeries j = select_J_signature(g1);
  const TruncatedSeries genus = expand(gf_catalog("genus"), order);
  std::vector<CrossingStatistics> out;
  for (int n = 3; n <= order; ++n) {
    CrossingStatistics st;
    st.n = n;
    Rational knots, twice, sigma0, abs_sig, genus_sum, genus_knots;
    for (auto& [k, c] : j.slice(n)) {
      knots += c;
      abs_sig += c * k.second;
    }
    for (auto& [k, c] : g1.slice(n)) {
      twice += c;
      if (k.second == 0) sigma0 += c;
    }
    for (auto& [k, c] : genus.slice(n)) {
      genus_knots += c;
      genus_sum += c * k.second;
    }
    if (genus_knots != knots) throw std::logic_error("genus and signature series disagree on knot counts");
    st.knots = knots.get_num();
    st.knots_pairs_twice = twice.get_num();
    st.sigma0_pairs_twice = sigma0.get_num();
    st.sum_genus = genus_sum.get_num();
    st.sum_abs_signature = abs_sig.get_num();
    if (knots != 0) {
      st.mean_genus = genus_sum / knots;
      st.mean_abs_signature = abs_sig / knots;
    }
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace ratknot
