#include "ratknot/monoid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "ratknot/census.hpp"
#include "ratknot/invariants.hpp"

namespace ratknot {

namespace {

long sgn(long v) { return v < 0 ? -1 : 1; }

std::int64_t checked_mul_add(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
  std::int64_t ax, by, sum;
  if (__builtin_mul_overflow(a, x, &ax) || __builtin_mul_overflow(b, y, &by) || __builtin_add_overflow(ax, by, &sum))
    throw DomainError("orbit vector exceeds 64-bit range");
  return sum;
}

// A vector and its negative are the same fraction; keep p > 0.
OrbitVector positive(OrbitVector v) {
  if (v.first < 0) return {-v.first, -v.second};
  return v;
}

struct SmallMatrix {
  std::int64_t a, b, c, d;

  static SmallMatrix of(const Generator& g, OrbitAction action = OrbitAction::Normalized) {
    const auto [k, l] = g;
    if (action == OrbitAction::Prepend) return {1 + 4 * k * l, 2 * k, 2 * l, 1};
    return {sgn(k) + 4 * std::abs(k * l), 2 * std::abs(k) * sgn(l), 2 * std::abs(l), sgn(l)};
  }
  OrbitVector apply(const OrbitVector& v) const {
    return positive({checked_mul_add(a, v.first, b, v.second), checked_mul_add(c, v.first, d, v.second)});
  }
  OrbitVector apply_inverse(const OrbitVector& v) const {
    const std::int64_t det = a * d - b * c;
    return positive({det * (d * v.first - b * v.second), det * (a * v.second - c * v.first)});
  }
};

void check_edge(const OrbitVector& from, const OrbitVector& to, const Generator& g,
                OrbitAction action = OrbitAction::Normalized) {
  const std::int64_t q = action == OrbitAction::Prepend ? std::abs(to.second) : to.second;
  if (!(to.first > q && q >= 1 && std::gcd(to.first, q) == 1))
    throw std::logic_error("M(" + std::to_string(g.first) + "," + std::to_string(g.second) + ") maps (" +
                           std::to_string(from.first) + "," + std::to_string(from.second) +
                           ") outside p > q >= 1 coprime");
}

struct Shape {
  std::int64_t m, n;
  int sign;
};

// (p, q) = (2mn + sign, 2n^2) with m > n >= 1; coprimality not required.
std::optional<Shape> u1_shape(const OrbitVector& v) {
  const auto [p, q] = v;
  if (q % 2) return std::nullopt;
  const std::int64_t half = q / 2;
  auto n = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(half))));
  while (n * n > half) --n;
  while ((n + 1) * (n + 1) <= half) ++n;
  if (n < 1 || n * n != half) return std::nullopt;
  for (int sign : {1, -1}) {
    const std::int64_t rest = p - sign;
    if (rest % (2 * n)) continue;
    const std::int64_t m = rest / (2 * n);
    if (m > n) return Shape{m, n, sign};
  }
  return std::nullopt;
}

std::vector<Generator> sign_generators() { return {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}; }

std::int64_t even_inverse_rep(std::int64_t q, std::int64_t p) {
  const Integer inv = mod_inverse(Integer(static_cast<long>(q)), Integer(static_cast<long>(p)));
  std::int64_t r = inv.get_si();
  return r % 2 == 0 ? r : p - r;
}

}  // namespace

UnimodularMatrix UnimodularMatrix::make(Integer a, Integer b, Integer c, Integer d) {
  UnimodularMatrix m{std::move(a), std::move(b), std::move(c), std::move(d)};
  const Integer det = m.determinant();
  if (abs(det) != 1) throw DomainError("determinant is not +-1");
  if (mpz_odd_p(m.c.get_mpz_t())) throw DomainError("lower left entry is odd");
  return m;
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::pair<Integer, Integer> UnimodularMatrix::apply(const Integer& p, const Integer& q) const {
  return {a * p + b * q, c * p + d * q};
}

UnimodularMatrix m_kl(long k, long l) {
  const Integer ak = std::abs(k), al = std::abs(l);
  return UnimodularMatrix::make(sgn(k) + 4 * ak * al, 2 * ak * sgn(l), 2 * al, sgn(l));
}

Orbit::Orbit(std::vector<Generator> generators, int depth, std::int64_t max_p, unsigned threads,
             OrbitAction action)
    : generators_(std::move(generators)), max_p_(max_p), action_(action) {
  if (depth < 0) throw DomainError("orbit depth must be >= 0");
  for (auto& [k, l] : generators_)
    if (k == 0 || l == 0) throw DomainError("orbit generators need k != 0 and l != 0");
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  std::vector<SmallMatrix> mats;
  for (auto& g : generators_) mats.push_back(SmallMatrix::of(g, action_));

  levels_.push_back({{1, 0}});
  threads = std::max(1u, threads);
  for (int d = 1; d <= depth; ++d) {
    const auto& frontier = levels_.back();
    const std::size_t chunks = std::min<std::size_t>(threads, std::max<std::size_t>(1, frontier.size()));
    std::vector<std::vector<OrbitVector>> parts(chunks);
    auto work = [&](std::size_t c) {
      const std::size_t lo = frontier.size() * c / chunks, hi = frontier.size() * (c + 1) / chunks;
      auto& out = parts[c];
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t g = 0; g < mats.size(); ++g) {
          OrbitVector w = mats[g].apply(frontier[i]);
          if (max_p_ > 0 && w.first > max_p_) continue;
          check_edge(frontier[i], w, generators_[g], action_);
          out.push_back(w);
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    };
    if (chunks == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t c = 0; c < chunks; ++c) pool.emplace_back(work, c);
    }
    std::vector<OrbitVector> next;
    for (auto& part : parts) next.insert(next.end(), part.begin(), part.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    levels_.push_back(std::move(next));
  }
}

std::size_t Orbit::size() const {
  std::size_t n = 0;
  for (auto& l : levels_) n += l.size();
  return n;
}

bool Orbit::contains(int d, const OrbitVector& v) const {
  if (d < 0 || d > depth()) return false;
  const auto& l = level(d);
  return std::binary_search(l.begin(), l.end(), v);
}

std::vector<Generator> Orbit::witness(int d, const OrbitVector& v) const {
  if (!contains(d, v)) throw DomainError("vector is not in the orbit at that depth");
  std::vector<Generator> word;
  OrbitVector cur = v;
  for (int level = d; level > 0; --level) {
    bool found = false;
    for (auto& g : generators_) {
      OrbitVector prev = SmallMatrix::of(g, action_).apply_inverse(cur);
      if (contains(level - 1, prev)) {
        word.push_back(g);
        cur = prev;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("orbit level without a predecessor");
  }
  return word;
}

std::int64_t literal_u1_n(const OrbitVector& v) {
  auto s = u1_shape(v);
  if (!s || std::gcd(s->m, s->n) != 1) return 0;
  return s->n;
}

PropositionReport verify_pppp(int depth, std::int64_t max_p) {
  if (max_p < 3) throw DomainError("verify_pppp needs max_p >= 3");
  std::vector<Generator> gens;
  // p grows at least by the factor 1 + 4k|l| - 2k under M(k, l), l < 0.
  for (long k = 1; 1 + 2 * k <= max_p; ++k)
    for (long l = -1; 1 + 4 * k * (-l) - 2 * k <= max_p; --l) gens.emplace_back(k, l);
  Orbit orbit(gens, depth, max_p, 1, OrbitAction::Prepend);
  PropositionReport r;
  r.proposition = "pppp";
  r.depth = depth;
  r.notes["generators"] = static_cast<std::int64_t>(gens.size());
  r.notes["max_p"] = max_p;
  for (int d = 0; d <= depth; ++d) {
    for (auto& v : orbit.level(d)) {
      ++r.vectors_explored;
      const std::int64_t n = literal_u1_n({v.first, std::abs(v.second)});
      if (n == 1) ++r.notes["twist_exempt"];
      if (n > 1) r.violations.push_back({v, orbit.witness(d, v), "(2mn+-1, 2n^2) with n > 1"});
    }
  }
  Orbit normalized(gens, depth, max_p);
  std::int64_t hits = 0;
  for (int d = 0; d <= depth; ++d)
    for (auto& v : normalized.level(d))
      if (literal_u1_n(v) > 1) ++hits;
  r.notes["normalized_matrix_hits"] = hits;
  return r;
}

PropositionReport verify_cnj1(int max_len, unsigned threads) {
  if (max_len < 1) throw DomainError("verify_cnj1 needs max_len >= 1");
  Orbit orbit(sign_generators(), max_len, 0, threads);
  PropositionReport r;
  r.proposition = "cnj1";
  r.depth = max_len;
  bool only_odd_squares = true;
  for (int d = 0; d <= max_len; ++d) {
    const bool odd_square = d % 2 == 1 && [d] {
      int s = static_cast<int>(std::lround(std::sqrt(d)));
      return s * s == d;
    }();
    for (auto& v : orbit.level(d)) {
      ++r.vectors_explored;
      if (d > 0) {
        OrbitVector partner{v.first, even_inverse_rep(v.second, v.first)};
        if (!orbit.contains(d, partner)) {
          ++r.notes["closure_failures"];
          r.violations.push_back({v, orbit.witness(d, v), "partner with +-q^-1 missing"});
        }
      }
      auto s = u1_shape(v);
      if (!s || s->n <= 1 || s->m % 2 == 0 || s->n % 2 == 0) continue;
      if (std::gcd(s->m, s->n) == 1) {
        r.violations.push_back({v, orbit.witness(d, v), "(2mn+-1, 2n^2) with m > n > 1 odd coprime"});
      } else {
        ++r.notes["odd_noncoprime_hits_len_" + std::to_string(d)];
        if (!odd_square) only_odd_squares = false;
      }
    }
  }
  r.notes["odd_noncoprime_only_at_odd_square_lengths"] = only_odd_squares ? 1 : 0;
  return r;
}

PropositionReport verify_M1_1(int g_max, unsigned threads) {
  if (g_max < 1) throw DomainError("verify_M1_1 needs g_max >= 1");
  Orbit orbit(sign_generators(), g_max, 0, threads);
  std::vector<std::set<OrbitVector>> census_pairs(static_cast<std::size_t>(g_max) + 1);
  // A genus-g fibered word (+-2)^(2g) has between 2g + 1 and 4g crossings.
  for (int n = 3; n <= 4 * g_max; ++n) {
    for_each_even_word(n, EnumerationMode::UpToMirror, [&](std::span<const int> w) {
      const std::size_t g = w.size() / 2;
      if (g > static_cast<std::size_t>(g_max)) return;
      if (!std::all_of(w.begin(), w.end(), [](int a) { return a == 2 || a == -2; })) return;
      const KnotRecord rec = describe_small_word(w);
      KnotClass k = classify(rec.p, rec.q);
      for (auto& pair : equivalents(k.canonical, true))
        census_pairs[g].insert({pair.p.get_si(), pair.q.get_si()});
    }, 2);
  }
  PropositionReport r;
  r.proposition = "m1_1";
  r.depth = g_max;
  for (int g = 1; g <= g_max; ++g) {
    const auto& level = orbit.level(g);
    r.vectors_explored += level.size();
    const auto& expected = census_pairs[static_cast<std::size_t>(g)];
    r.notes["genus_" + std::to_string(g)] = static_cast<std::int64_t>(level.size());
    for (auto& v : level)
      if (!expected.count(v)) r.violations.push_back({v, orbit.witness(g, v), "orbit vector not a fibered knot of this genus"});
    for (auto& v : expected)
      if (!std::binary_search(level.begin(), level.end(), v))
        r.violations.push_back({v, {}, "fibered knot of this genus missing from the orbit"});
  }
  return r;
}

PropositionReport verify_k_pos(int depth, std::int64_t max_p) {
  if (depth < 1 || max_p < 3) throw DomainError("verify_k_pos needs depth >= 1 and max_p >= 3");
  // Words are tracked with their number of negative l, so vectors reached
  // both ways are kept apart. p grows at least by 1 + 4k|l| - 2k.
  struct Node {
    OrbitVector v;
    int negatives;
    auto operator<=>(const Node&) const = default;
  };
  std::vector<Generator> gens;
  for (long k = 1; 1 + 2 * k <= max_p; ++k)
    for (long al = 1; 1 + 4 * k * al - 2 * k <= max_p; ++al) {
      gens.emplace_back(k, al);
      gens.emplace_back(k, -al);
    }
  PropositionReport r;
  r.proposition = "k_pos";
  r.depth = depth;
  r.notes["generators"] = static_cast<std::int64_t>(gens.size());
  r.notes["max_p"] = max_p;
  std::vector<std::vector<Node>> levels{{Node{{1, 0}, 0}}};
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> parents{{{0, 0}}};  // (parent index, generator)
  for (int d = 1; d <= depth; ++d) {
    std::map<Node, std::pair<std::size_t, std::size_t>> next;
    const auto& frontier = levels.back();
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        OrbitVector w = SmallMatrix::of(gens[g], OrbitAction::Prepend).apply(frontier[i].v);
        if (w.first > max_p) continue;
        check_edge(frontier[i].v, w, gens[g], OrbitAction::Prepend);
        next.emplace(Node{w, frontier[i].negatives + (gens[g].second < 0 ? 1 : 0)}, std::make_pair(i, g));
      }
    }
    std::vector<Node> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> from;
    for (auto& [node, parent] : next) {
      nodes.push_back(node);
      from.push_back(parent);
    }
    levels.push_back(std::move(nodes));
    parents.push_back(std::move(from));
  }
  auto word_of = [&](int d, std::size_t i) {
    std::vector<Generator> word;
    for (; d > 0; --d) {
      auto [pi, g] = parents[static_cast<std::size_t>(d)][i];
      word.push_back(gens[g]);
      i = pi;
    }
    return word;
  };
  for (int d = 1; d <= depth; ++d) {
    const auto& nodes = levels[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      ++r.vectors_explored;
      const std::int64_t n = literal_u1_n({nodes[i].v.first, std::abs(nodes[i].v.second)});
      if (n == 0) continue;
      ++r.notes["u1_hits"];
      if (!(d == 2 || (n == 1 && d == 1)))
        r.violations.push_back({nodes[i].v, word_of(d, i), "word length " + std::to_string(d) + " with n = " + std::to_string(n)});
      const bool three_mod_four = nodes[i].v.first % 4 == 3;
      if (nodes[i].negatives > 1 || (nodes[i].negatives == 1) != three_mod_four)
        r.violations.push_back({nodes[i].v, word_of(d, i),
                                std::to_string(nodes[i].negatives) + " negative l with p mod 4 = " +
                                    std::to_string(nodes[i].v.first % 4)});
    }
  }
  return r;
}

}  // namespace ratknot
