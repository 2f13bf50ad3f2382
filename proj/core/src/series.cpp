#include "ratknot/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ratknot {

// ---- TruncatedSeries ----

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw DomainError("series order must be non-negative");
  slices_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::from_coefficients(const std::vector<Rational>& coeffs) {
  if (coeffs.empty()) throw DomainError("empty coefficient list");
  TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.add(static_cast<int>(i), 0, 0, coeffs[i]);
  return s;
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, int order) {
  TruncatedSeries s(order);
  for (auto& [m, c] : p.terms()) {
    if (m[0] < 0) throw DomainError("negative power of x in a power series");
    if (m[0] <= order) s.add(m[0], m[1], m[2], c);
  }
  return s;
}

Rational TruncatedSeries::coefficient(int x, int y, int z) const {
  if (x < 0 || x > order()) return 0;
  auto& sl = slices_[static_cast<std::size_t>(x)];
  auto it = sl.find({y, z});
  return it == sl.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add(int x, int y, int z, const Rational& c) {
  if (x < 0 || x > order()) throw DomainError("x-degree outside the truncation window");
  if (c == 0) return;
  auto& sl = slices_[static_cast<std::size_t>(x)];
  auto [it, fresh] = sl.try_emplace({y, z}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) sl.erase(it);
  }
}

std::size_t TruncatedSeries::term_count() const {
  std::size_t n = 0;
  for (auto& sl : slices_) n += sl.size();
  return n;
}

std::vector<Rational> TruncatedSeries::collapse() const {
  std::vector<Rational> out(slices_.size());
  for (std::size_t i = 0; i < slices_.size(); ++i)
    for (auto& [k, c] : slices_[i]) out[i] += c;
  return out;
}

std::vector<Rational> TruncatedSeries::univariate() const {
  std::vector<Rational> out(slices_.size());
  for (std::size_t i = 0; i < slices_.size(); ++i)
    for (auto& [k, c] : slices_[i]) {
      if (k != Key{0, 0}) throw DomainError("series is not univariate");
      out[i] = c;
    }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order > order()) throw DomainError("cannot extend a truncated series");
  TruncatedSeries s(new_order);
  std::copy(slices_.begin(), slices_.begin() + new_order + 1, s.slices_.begin());
  return s;
}

TruncatedSeries TruncatedSeries::shift_x(int k) const {
  const int new_order = k >= 0 ? order() : order() + k;
  if (new_order < 0) throw DomainError("shift leaves nothing");
  TruncatedSeries s(new_order);
  for (int x = 0; x <= order(); ++x) {
    auto& sl = slices_[static_cast<std::size_t>(x)];
    if (sl.empty()) continue;
    const int to = x + k;
    if (to < 0) throw DomainError("dividing by x leaves a negative power");
    if (to <= new_order) s.slices_[static_cast<std::size_t>(to)] = sl;
  }
  return s;
}

TruncatedSeries TruncatedSeries::substitute(const MonomialSubstitution& s, int new_order) const {
  const int a = s.image[0][0];
  if (a < 1 || s.image[1][0] < 0 || s.image[2][0] < 0)
    throw DomainError("substitution does not keep the x-filtration");
  if (new_order > a * (order() + 1) - 1) throw DomainError("substituted series not known to that order");
  TruncatedSeries out(new_order);
  for (int x = 0; x <= order(); ++x)
    for (auto& [k, c] : slices_[static_cast<std::size_t>(x)]) {
      Monomial m = s.apply({x, k.first, k.second});
      if (m[0] < a * x) throw DomainError("substitution lowers the x-degree");
      if (m[0] > new_order) continue;
      out.add(m[0], m[1], m[2], s.sign_of({x, k.first, k.second}) < 0 ? Rational(-c) : c);
    }
  return out;
}

TruncatedSeries TruncatedSeries::map_terms(const std::function<TermImage(int, int, int)>& f) const {
  TruncatedSeries out(order());
  for (int x = 0; x <= order(); ++x)
    for (auto& [k, c] : slices_[static_cast<std::size_t>(x)]) {
      TermImage img = f(x, k.first, k.second);
      if (img.weight != 0) out.add(x, img.y, img.z, c * img.weight);
    }
  return out;
}

bool TruncatedSeries::is_integral() const {
  for (auto& sl : slices_)
    for (auto& [k, c] : sl)
      if (c.get_den() != 1) return false;
  return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order() < order()) slices_.resize(o.slices_.size());
  for (int x = 0; x <= order(); ++x)
    for (auto& [k, c] : o.slices_[static_cast<std::size_t>(x)]) add(x, k.first, k.second, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.order() < order()) slices_.resize(o.slices_.size());
  for (int x = 0; x <= order(); ++x)
    for (auto& [k, c] : o.slices_[static_cast<std::size_t>(x)]) add(x, k.first, k.second, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& sl : slices_) {
    if (c == 0) {
      sl.clear();
      continue;
    }
    for (auto& [k, v] : sl) v *= c;
  }
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i)
    for (auto& [ka, ca] : a.slices_[static_cast<std::size_t>(i)])
      for (int j = 0; i + j <= n; ++j)
        for (auto& [kb, cb] : b.slices_[static_cast<std::size_t>(j)])
          out.add(i + j, ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

std::string TruncatedSeries::dump() const {
  std::ostringstream os;
  for (int x = 0; x <= order(); ++x)
    for (auto& [k, c] : slices_[static_cast<std::size_t>(x)])
      os << "x^" << x << " y^" << k.first << " z^" << k.second << " : " << c.get_str() << "\n";
  return os.str();
}

std::string TruncatedSeries::dump_univariate() const {
  std::string out;
  auto cs = univariate();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ",";
    out += cs[i].get_str();
  }
  return out;
}

TruncatedSeries hadamard(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (s.order() != t.order()) throw DomainError("hadamard product needs matching orders");
  TruncatedSeries out(s.order());
  for (int x = 0; x <= s.order(); ++x)
    for (auto& [k, c] : s.slice(x)) {
      Rational d = t.coefficient(x, k.first, k.second);
      if (d != 0) out.add(x, k.first, k.second, c * d);
    }
  return out;
}

// ---- RationalGF ----

namespace {

Rational rational_pow(const Rational& c, int e) {
  Rational r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= c;
  return e < 0 ? Rational(1 / r) : r;
}

Monomial scaled(const Monomial& m, int e) { return {m[0] * e, m[1] * e, m[2] * e}; }

Monomial min_of(const Monomial& a, const Monomial& b) {
  return {std::min(a[0], b[0]), std::min(a[1], b[1]), std::min(a[2], b[2])};
}

}  // namespace

RationalGF::RationalGF(const Poly& p) : scalar_(p.is_zero() ? 0 : 1) {
  if (!p.is_zero()) absorb(p, 1);
}

RationalGF RationalGF::ratio(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DomainError("division by zero");
  RationalGF r(num);
  if (r.is_zero()) return r;
  r.absorb(den, -1);
  return r;
}

void RationalGF::absorb(const Poly& p, int e) {
  Monomial m = p.min_exponents();
  Poly q = p * Poly::monomial(-m);
  monomial_ = monomial_ + scaled(m, e);
  Integer lcm_den = 1, gcd_num = 0;
  for (auto& [mono, c] : q.terms()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational content(gcd_num, lcm_den);
  content.canonicalize();
  if (q.terms().begin()->second < 0) content = -content;
  q *= Rational(1 / content);
  scalar_ *= rational_pow(content, e);
  if (q == Poly(1)) return;
  auto& slot = factors_[q];
  slot += e;
  if (slot == 0) factors_.erase(q);
}

Poly RationalGF::numerator() const {
  Poly r = Poly::monomial(monomial_, scalar_);
  for (auto& [f, e] : factors_)
    if (e > 0) r = r * f.pow(static_cast<unsigned>(e));
  return r;
}

Poly RationalGF::denominator() const {
  Poly r(1);
  for (auto& [f, e] : factors_)
    if (e < 0) r = r * f.pow(static_cast<unsigned>(-e));
  return r;
}

RationalGF RationalGF::substitute(const MonomialSubstitution& s) const {
  RationalGF r;
  if (is_zero()) return r;
  r.scalar_ = s.sign_of(monomial_) < 0 ? Rational(-scalar_) : scalar_;
  r.monomial_ = s.apply(monomial_);
  for (auto& [f, e] : factors_) r.absorb(f.substitute(s), e);
  return r;
}

RationalGF RationalGF::pow(int e) const {
  if (is_zero()) {
    if (e <= 0) throw DomainError("division by zero");
    return *this;
  }
  RationalGF r;
  r.scalar_ = rational_pow(scalar_, e);
  r.monomial_ = scaled(monomial_, e);
  for (auto& [f, k] : factors_) r.factors_[f] = k * e;
  if (e == 0) r.factors_.clear();
  return r;
}

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
  if (a.is_zero() || b.is_zero()) return RationalGF();
  RationalGF r = a;
  r.scalar_ *= b.scalar_;
  r.monomial_ = r.monomial_ + b.monomial_;
  for (auto& [f, e] : b.factors_) {
    auto& slot = r.factors_[f];
    slot += e;
    if (slot == 0) r.factors_.erase(f);
  }
  return r;
}

RationalGF operator/(const RationalGF& a, const RationalGF& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return a * b.pow(-1);
}

RationalGF operator-(const RationalGF& a) {
  RationalGF r = a;
  r.scalar_ = -r.scalar_;
  return r;
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::map<Poly, int> common;  // denominator exponents, positive
  for (auto* g : {&a, &b})
    for (auto& [f, e] : g->factors_)
      if (e < 0) common[f] = std::max(common[f], -e);
  const Monomial low = min_of(a.monomial_, b.monomial_);
  auto lift = [&](const RationalGF& g) {
    Poly r = Poly::monomial(g.monomial_ + -low, g.scalar_);
    for (auto& [f, e] : g.factors_)
      if (e > 0) r = r * f.pow(static_cast<unsigned>(e));
    for (auto& [f, k] : common) {
      auto it = g.factors_.find(f);
      int own = (it != g.factors_.end() && it->second < 0) ? -it->second : 0;
      if (k > own) r = r * f.pow(static_cast<unsigned>(k - own));
    }
    return r;
  };
  Poly sum = lift(a) + lift(b);
  RationalGF r(sum);
  if (r.is_zero()) return r;
  r.monomial_ = r.monomial_ + low;
  for (auto& [f, k] : common) {
    auto& slot = r.factors_[f];
    slot -= k;
    if (slot == 0) r.factors_.erase(f);
  }
  return r;
}

RationalGF operator-(const RationalGF& a, const RationalGF& b) { return a + (-b); }

bool equivalent(const RationalGF& a, const RationalGF& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

std::string RationalGF::to_string() const {
  if (is_zero()) return "0";
  std::string num = Poly::monomial(monomial_, scalar_).to_string();
  std::string den;
  for (auto& [f, e] : factors_) {
    std::string part = "(" + f.to_string() + ")";
    if (std::abs(e) != 1) part += "^" + std::to_string(std::abs(e));
    (e > 0 ? num : den) += (e > 0 ? " * " : (den.empty() ? "" : " * ")) + part;
  }
  return den.empty() ? num : num + " / (" + den + ")";
}

// ---- expansion ----

TruncatedSeries expand(const RationalGF& gf, int order) {
  TruncatedSeries out(order);
  if (gf.is_zero()) return out;
  const Poly num = gf.numerator();
  const Poly den = gf.denominator();
  const int d0 = den.min_degree(0);
  const Poly lead = den.x_slice(d0);
  if (!lead.is_monomial())
    throw DomainError("lowest x-part of the denominator is not a monomial: " + lead.to_string());
  const Monomial lead_m = lead.terms().begin()->first;
  const Rational lead_inv = 1 / lead.terms().begin()->second;

  using Term = std::pair<TruncatedSeries::Key, Rational>;
  std::vector<std::vector<Term>> den_slices;  // index j: x-degree d0 + j, j >= 1
  for (int j = 1; d0 + j <= den.max_degree(0); ++j) {
    std::vector<Term> ts;
    const Poly part = den.x_slice(d0 + j);
    for (auto& [m, c] : part.terms()) ts.push_back({{m[1], m[2]}, c});
    den_slices.push_back(std::move(ts));
  }

  const int kmin = std::min(0, num.min_degree(0) - d0);
  std::vector<TruncatedSeries::Slice> s;  // s[k - kmin]
  for (int k = kmin; k <= order; ++k) {
    TruncatedSeries::Slice acc;
    const Poly part = num.x_slice(k + d0);
    for (auto& [m, c] : part.terms()) acc[{m[1], m[2]}] += c;
    for (std::size_t j = 1; j <= den_slices.size(); ++j) {
      const int prev = k - static_cast<int>(j);
      if (prev < kmin) break;
      for (auto& [kd, cd] : den_slices[j - 1])
        for (auto& [ks, cs] : s[static_cast<std::size_t>(prev - kmin)])
          acc[{kd.first + ks.first, kd.second + ks.second}] -= cd * cs;
    }
    TruncatedSeries::Slice next;
    for (auto& [key, c] : acc)
      if (c != 0) next.emplace(TruncatedSeries::Key{key.first - lead_m[1], key.second - lead_m[2]}, c * lead_inv);
    if (k < 0 && !next.empty()) throw DomainError("expansion needs negative powers of x");
    if (k >= 0)
      for (auto& [key, c] : next) out.add(k, key.first, key.second, c);
    s.push_back(std::move(next));
  }
  return out;
}

// ---- parser ----

namespace {

class GfParser {
 public:
  explicit GfParser(std::string_view t) : text_(t) {}

  RationalGF parse() {
    RationalGF r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in generating function");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_atom(char c) const {
    return c == '(' || c == 'x' || c == 'y' || c == 'z' || std::isdigit(static_cast<unsigned char>(c));
  }

  RationalGF expr() {
    RationalGF r;
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
    r = term();
    if (negate) r = -r;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      RationalGF t = term();
      r = c == '+' ? r + t : r - t;
    }
    return r;
  }

  RationalGF term() {
    RationalGF r = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        r = r * power();
      } else if (c == '/') {
        ++pos_;
        r = r / power();
      } else if (starts_atom(c)) {
        r = r * power();
      } else {
        return r;
      }
    }
  }

  RationalGF power() {
    RationalGF base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool neg = false;
    bool paren = peek() == '(';
    if (paren) ++pos_;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    long e = integer();
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return base.pow(static_cast<int>(neg ? -e : e));
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  RationalGF atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RationalGF r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      Monomial m{0, 0, 0};
      m[static_cast<std::size_t>(c - 'x')] = 1;
      return RationalGF(Poly::monomial(m));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalGF(Poly(Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
    }
    fail(c ? std::string("unexpected '") + c + "'" : "unexpected end");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalGF parse_gf(std::string_view text) { return GfParser(text).parse(); }

}  // namespace ratknot
