#include "ratknot/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace ratknot {

Monomial MonomialSubstitution::apply(const Monomial& m) const {
  Monomial out{0, 0, 0};
  for (int v = 0; v < 3; ++v)
    for (int w = 0; w < 3; ++w) out[w] += m[v] * image[v][w];
  return out;
}

int MonomialSubstitution::sign_of(const Monomial& m) const {
  int s = 1;
  for (int v = 0; v < 3; ++v)
    if (sign[v] < 0 && (m[v] % 2 != 0)) s = -s;
  return s;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{0, 0, 0}, c);
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Monomial Poly::min_exponents() const {
  if (terms_.empty()) return {0, 0, 0};
  Monomial out = terms_.begin()->first;
  for (auto& [m, c] : terms_)
    for (int v = 0; v < 3; ++v) out[v] = std::min(out[v], m[v]);
  return out;
}

int Poly::min_degree(int var) const {
  int d = std::numeric_limits<int>::max();
  for (auto& [m, c] : terms_) d = std::min(d, m[var]);
  return terms_.empty() ? 0 : d;
}

int Poly::max_degree(int var) const {
  int d = std::numeric_limits<int>::min();
  for (auto& [m, c] : terms_) d = std::max(d, m[var]);
  return terms_.empty() ? 0 : d;
}

Poly Poly::x_slice(int degree) const {
  Poly out;
  auto lo = terms_.lower_bound(Monomial{degree, std::numeric_limits<int>::min(), std::numeric_limits<int>::min()});
  for (auto it = lo; it != terms_.end() && it->first[0] == degree; ++it) out.terms_.insert(*it);
  return out;
}

Poly Poly::substitute(const MonomialSubstitution& s) const {
  Poly out;
  for (auto& [m, c] : terms_) out.add_term(s.apply(m), s.sign_of(m) < 0 ? Rational(-c) : c);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static constexpr char kVars[3] = {'x', 'y', 'z'};
  for (auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool constant = m == Monomial{0, 0, 0};
    bool wrote = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      wrote = true;
    }
    for (int v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      if (wrote) os << "*";
      os << kVars[v];
      if (m[v] != 1) os << "^" << (m[v] < 0 ? "(" + std::to_string(m[v]) + ")" : std::to_string(m[v]));
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace ratknot
