#include "ratknot/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numeric>
#include <set>
#include <thread>

#include "ratknot/invariants.hpp"

namespace ratknot {

namespace {

using i64 = std::int64_t;

i64 mod_inverse_small(i64 a, i64 m) {
  i64 old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    i64 quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  i64 inv = old_s % m;
  return inv < 0 ? inv + m : inv;
}

i64 isqrt_exact(i64 v) {
  if (v < 0) return -1;
  auto r = static_cast<i64>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

// Same rules as u1_decompositions, on machine integers.
void u1_flags(i64 p, i64 q, bool& u1, bool& bleiler) {
  u1 = bleiler = false;
  if (p < 3) return;
  i64 r0 = ((q % p) + p) % p;
  i64 inv = mod_inverse_small(r0, p);
  std::array<i64, 4> residues = {r0, p - r0, inv, p - inv};
  bool big = false, has_even = false;
  for (i64 r : residues) {
    if (r <= 0 || r % 2) continue;
    i64 n = isqrt_exact(r / 2);
    if (n < 1) continue;
    for (int sign : {1, -1}) {
      i64 rest = p - sign;
      if (rest % (2 * n)) continue;
      i64 m = rest / (2 * n);
      if (m > n && std::gcd(m, n) == 1) {
        u1 = true;
        big = big || n > 1;
        has_even = has_even || m % 2 == 0 || n % 2 == 0;
      }
    }
  }
  bleiler = big && !has_even;
}

bool canonical_up_to_mirror(std::span<const int> w) {
  const int s = w.back() > 0 ? 1 : -1;
  const std::size_t len = w.size();
  for (std::size_t i = 0; i < len; ++i) {
    int other = s * w[len - 1 - i];
    if (w[i] != other) return w[i] < other;
  }
  return true;
}

bool canonical_oriented(std::span<const int> w) {
  const std::size_t len = w.size();
  for (std::size_t i = 0; i < len; ++i) {
    int other = -w[len - 1 - i];
    if (w[i] != other) return w[i] < other;
  }
  return true;
}

class Walker {
 public:
  Walker(EnumerationMode mode, int max_abs, const std::function<void(std::span<const int>)>& visit)
      : mode_(mode), max_abs_(max_abs), visit_(visit) {}

  void run_from(std::vector<int> prefix, int remaining) {
    buf_ = std::move(prefix);
    extend(remaining);
  }

 private:
  void extend(int rem) {
    if (rem == 0) {
      if (buf_.size() % 2 == 0) {
        bool keep = mode_ == EnumerationMode::UpToMirror ? canonical_up_to_mirror(buf_)
                                                         : canonical_oriented(buf_);
        if (keep) visit_(buf_);
      }
      return;
    }
    const int s = buf_.back() > 0 ? 1 : -1;
    for (int j = 1; 2 * j - 1 <= rem; ++j) {
      if (max_abs_ && 2 * j > max_abs_) break;
      buf_.push_back(-s * 2 * j);
      extend(rem - (2 * j - 1));
      buf_.pop_back();
      if (2 * j <= rem) {
        buf_.push_back(s * 2 * j);
        extend(rem - 2 * j);
        buf_.pop_back();
      }
    }
  }

  EnumerationMode mode_;
  int max_abs_;
  const std::function<void(std::span<const int>)>& visit_;
  std::vector<int> buf_;
};

struct Prefix {
  std::vector<int> entries;
  int remaining;
};

// All two-entry prefixes; every word has length >= 2, so these partition the
// word tree.
std::vector<Prefix> prefixes(int n, EnumerationMode mode, int max_abs) {
  std::vector<Prefix> out;
  std::vector<int> firsts;
  for (int a = 2; a <= n; a += 2) {
    if (max_abs && a > max_abs) break;
    firsts.push_back(a);
    if (mode == EnumerationMode::Oriented) firsts.push_back(-a);
  }
  std::sort(firsts.begin(), firsts.end());
  for (int a : firsts) {
    int rem1 = n - std::abs(a);
    int s = a > 0 ? 1 : -1;
    for (int j = 1; 2 * j - 1 <= rem1; ++j) {
      if (max_abs && 2 * j > max_abs) break;
      out.push_back({{a, -s * 2 * j}, rem1 - (2 * j - 1)});
      if (2 * j <= rem1) out.push_back({{a, s * 2 * j}, rem1 - 2 * j});
    }
  }
  return out;
}

constexpr int kMaxGenus = 64;
constexpr int kSigOffset = 128;

struct Partial {
  std::uint64_t total = 0;
  std::uint64_t sum_genus = 0;
  std::uint64_t sum_abs_sig = 0;
  std::array<std::uint64_t, kMaxGenus> by_genus{};
  std::array<std::uint64_t, 2 * kSigOffset + 1> by_sig{};
  std::array<std::uint64_t, std::size(kAllFlags)> flags{};
};

bool passes(FlagSet flags, const CensusFilter& f) {
  return (flags & f.require) == f.require && (flags & f.forbid) == 0;
}

// Adds one counted knot; `sigs` holds what goes into by_signature (both
// members of a chiral pair when counting once).
void tally(Partial& part, const KnotRecord& rec, FlagSet flags, int abs_sig, int n_sig,
           const int* sigs) {
  part.total += 1;
  part.sum_genus += static_cast<std::uint64_t>(rec.genus);
  part.sum_abs_sig += static_cast<std::uint64_t>(abs_sig);
  part.by_genus[static_cast<std::size_t>(rec.genus)] += 1;
  for (int i = 0; i < n_sig; ++i) part.by_sig[static_cast<std::size_t>(sigs[i] + kSigOffset)] += 1;
  for (std::size_t i = 0; i < std::size(kAllFlags); ++i)
    if (flags & kAllFlags[i]) part.flags[i] += 1;
}

void count_word(Partial& part, std::span<const int> w, const CensusFilter& filter) {
  KnotRecord rec = describe_small_word(w);
  const bool achiral = (rec.flags & kAchiral) != 0;
  const int sig = rec.signature;
  if (filter.count_chiral_pairs_twice) {
    if (passes(rec.flags, filter)) tally(part, rec, rec.flags, std::abs(sig), 1, &sig);
    if (!achiral) {
      FlagSet mirror = rec.flags & ~(kPositive | kNegative);
      if (rec.flags & kPositive) mirror |= kNegative;
      if (rec.flags & kNegative) mirror |= kPositive;
      const int msig = -sig;
      if (passes(mirror, filter)) tally(part, rec, mirror, std::abs(sig), 1, &msig);
    }
    return;
  }
  FlagSet flags = rec.flags;
  if (flags & (kPositive | kNegative)) flags |= kPositive | kNegative;
  if (!passes(flags, filter)) return;
  const int sigs[2] = {sig, -sig};
  tally(part, rec, flags, std::abs(sig), achiral ? 1 : 2, sigs);
}

}  // namespace

const char* flag_name(KnotFlag flag) {
  switch (flag) {
    case kFibered: return "fibered";
    case kPositive: return "positive";
    case kNegative: return "negative";
    case kAchiral: return "achiral";
    case kU1: return "u1";
    case kBleilerCounterexample: return "bleiler_counterexample";
    case kSignatureZero: return "sigma0";
  }
  return "";
}

std::optional<KnotFlag> parse_flag(std::string_view name) {
  for (KnotFlag f : kAllFlags)
    if (name == flag_name(f)) return f;
  if (name == "bleiler") return kBleilerCounterexample;
  return std::nullopt;
}

void for_each_even_word(int n, EnumerationMode mode,
                        const std::function<void(std::span<const int>)>& visit, int max_abs_entry) {
  Walker walker(mode, max_abs_entry, visit);
  for (auto& pre : prefixes(n, mode, max_abs_entry)) walker.run_from(pre.entries, pre.remaining);
}

std::vector<ConwayWord> enumerate_even_words(int n, EnumerationMode mode) {
  std::vector<ConwayWord> out;
  for_each_even_word(n, mode, [&](std::span<const int> w) {
    out.push_back(ConwayWord::even(std::vector<Integer>(w.begin(), w.end())));
  });
  return out;
}

KnotRecord describe_small_word(std::span<const int> w) {
  KnotRecord rec;
  i64 num = 1, den = 0;
  for (int a : w) {
    i64 next = a * num + den;
    den = num;
    num = next;
  }
  if (num < 0) {
    num = -num;
    den = -den;
  }
  rec.p = num;
  rec.q = den;
  const std::size_t len = w.size();
  bool fibered = true, alternating = true, palindromic = true;
  for (std::size_t i = 0; i < len; ++i) {
    const int s = w[i] > 0 ? 1 : -1;
    rec.crossing_number += std::abs(w[i]);
    if (i + 1 < len && (w[i] > 0) != (w[i + 1] > 0)) rec.crossing_number -= 1;
    rec.signature += (i % 2 ? -s : s);
    fibered = fibered && std::abs(w[i]) == 2;
    alternating = alternating && (i + 1 == len || (w[i] > 0) != (w[i + 1] > 0));
    palindromic = palindromic && w[i] == w[len - 1 - i];
  }
  rec.genus = static_cast<int>(len / 2);
  if (fibered) rec.flags |= kFibered;
  if (alternating) rec.flags |= w[0] > 0 ? kPositive : kNegative;
  if (palindromic) rec.flags |= kAchiral;
  if (rec.signature == 0) rec.flags |= kSignatureZero;
  bool u1 = false, bleiler = false;
  u1_flags(rec.p, rec.q, u1, bleiler);
  if (u1) rec.flags |= kU1;
  if (bleiler) rec.flags |= kBleilerCounterexample;
  return rec;
}

CensusReport census(int n, const CensusFilter& filter, unsigned threads) {
  if (n < 3) throw DomainError("census needs n >= 3");
  if (n >= 2 * kSigOffset || n / 2 >= kMaxGenus) throw DomainError("census n too large");
  if (filter.require & filter.forbid) throw DomainError("a flag is both required and forbidden");
  int max_abs = (filter.require & kFibered) ? 2 : 0;
  auto pres = prefixes(n, EnumerationMode::UpToMirror, max_abs);
  std::vector<Partial> parts(pres.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::size_t i;
    while ((i = next.fetch_add(1)) < pres.size()) {
      Partial& part = parts[i];
      std::function<void(std::span<const int>)> visit = [&](std::span<const int> w) {
        count_word(part, w, filter);
      };
      Walker walker(EnumerationMode::UpToMirror, max_abs, visit);
      walker.run_from(pres[i].entries, pres[i].remaining);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Partial sum;
  for (const auto& part : parts) {
    sum.total += part.total;
    sum.sum_genus += part.sum_genus;
    sum.sum_abs_sig += part.sum_abs_sig;
    for (std::size_t g = 0; g < sum.by_genus.size(); ++g) sum.by_genus[g] += part.by_genus[g];
    for (std::size_t s = 0; s < sum.by_sig.size(); ++s) sum.by_sig[s] += part.by_sig[s];
    for (std::size_t f = 0; f < sum.flags.size(); ++f) sum.flags[f] += part.flags[f];
  }

  auto big = [](std::uint64_t v) { return Integer(std::to_string(v)); };
  CensusReport rep;
  rep.n = n;
  rep.pairs_twice = filter.count_chiral_pairs_twice;
  rep.total = big(sum.total);
  for (std::size_t g = 0; g < sum.by_genus.size(); ++g)
    if (sum.by_genus[g]) rep.by_genus[static_cast<int>(g)] = big(sum.by_genus[g]);
  for (std::size_t s = 0; s < sum.by_sig.size(); ++s)
    if (sum.by_sig[s]) rep.by_signature[static_cast<int>(s) - kSigOffset] = big(sum.by_sig[s]);
  for (std::size_t f = 0; f < sum.flags.size(); ++f)
    rep.flag_counts[flag_name(kAllFlags[f])] = big(sum.flags[f]);
  if (sum.total) {
    rep.mean_genus = Rational(big(sum.sum_genus), rep.total);
    rep.mean_genus.canonicalize();
    rep.mean_abs_signature = Rational(big(sum.sum_abs_sig), rep.total);
    rep.mean_abs_signature.canonicalize();
  }
  return rep;
}

Integer census_u1_by_determinant(const Integer& p, bool oriented) {
  if (p < 5 || mpz_even_p(p.get_mpz_t())) throw DomainError("census_u1_by_determinant needs odd p >= 5");
  std::set<SchubertPair> classes;
  std::set<SchubertPair> achiral;
  for (Integer n = 1; 2 * n * n < p; ++n) {
    for (int sign : {1, -1}) {
      Integer rest = p - sign;
      Integer two_n = 2 * n;
      if (mpz_divisible_p(rest.get_mpz_t(), two_n.get_mpz_t()) == 0) continue;
      Integer m = rest / two_n;
      if (m <= n || gcd(m, n) != 1) continue;
      KnotClass k = classify(p, 2 * n * n);
      classes.insert(k.canonical);
      if (k.achiral) achiral.insert(k.canonical);
    }
  }
  Integer count = static_cast<unsigned long>(classes.size());
  if (oriented) count = 2 * count - static_cast<unsigned long>(achiral.size());
  return count;
}

SignatureTotals signature_totals(int n) {
  if (n < 1) throw DomainError("signature_totals needs n >= 1");
  // S(c, s, u): words with first entry positive, crossing cost c, signature
  // s, last contribution u. P(c) = S(c) + P(c - 2). A same-sign step of size
  // 2j costs 2j and flips u; a sign change costs 2j - 1 and keeps u.
  const int width = 2 * n + 1;
  auto idx = [n](int s, int u) { return static_cast<std::size_t>(2 * (s + n) + (u > 0 ? 1 : 0)); };
  using Layer = std::vector<Integer>;
  auto make = [&] { return Layer(static_cast<std::size_t>(2 * width)); };
  Layer p_prev2 = make(), p_prev1 = make();  // P(c - 2), P(c - 1)
  Layer half;  // S at the cost of a half word of a (anti)palindrome
  Layer last;
  const int half_cost = (n % 2) ? (n + 1) / 2 : n / 2;
  for (int c = 1; c <= n; ++c) {
    Layer s_cur = make();
    for (int s = -c; s <= c; ++s) {
      for (int u : {-1, 1}) {
        const int prev_s = s - u;
        if (prev_s < -n || prev_s > n) continue;
        Integer& dst = s_cur[idx(s, u)];
        dst += p_prev2[idx(prev_s, -u)];
        dst += p_prev1[idx(prev_s, u)];
      }
    }
    if (c % 2 == 0) s_cur[idx(1, 1)] += 1;  // one-entry word (c)
    Layer p_cur = make();
    for (std::size_t i = 0; i < p_cur.size(); ++i) p_cur[i] = s_cur[i] + p_prev2[i];
    if (c == half_cost) half = s_cur;
    if (c == n) last = std::move(s_cur);
    p_prev2 = std::move(p_prev1);
    p_prev1 = std::move(p_cur);
  }

  Integer words = 0, weighted = 0;
  for (int s = -n; s <= n; s += 1) {
    if (s % 2) continue;
    for (int u : {-1, 1}) {
      const Integer& v = last[idx(s, u)];
      words += v;
      weighted += v * std::abs(s);
    }
  }
  // Words with positive first entry: two per class, one for palindromic and
  // antipalindromic classes. A palindrome (x, reverse(x)) costs 2 c(x) and
  // has signature 0; an antipalindrome (x, -reverse(x)) costs 2 c(x) - 1 and
  // has signature 2 s(x). x ranges over words of any length.
  Integer symmetric = 0, symmetric_weight = 0;
  for (int s = -n; s <= n; ++s)
    for (int u : {-1, 1}) {
      const Integer& v = half[idx(s, u)];
      symmetric += v;
      if (n % 2) symmetric_weight += v * 2 * std::abs(s);
    }
  SignatureTotals out;
  out.knots = (words + symmetric) / 2;
  out.sum_abs_signature = (weighted + symmetric_weight) / 2;
  return out;
}

Integer sum_abs_signature(int n) { return signature_totals(n).sum_abs_signature; }

}  // namespace ratknot
