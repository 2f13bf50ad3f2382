#pragma once

#include <array>
#include <map>
#include <string>

#include "ratknot/fraction.hpp"

namespace ratknot {

// Exponents of x, y, z. Negative entries make a Laurent monomial.
using Monomial = std::array<int, 3>;

inline Monomial operator+(const Monomial& a, const Monomial& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Monomial operator-(const Monomial& a) { return {-a[0], -a[1], -a[2]}; }

// Variable-wise image of a monomial map: var_i -> sign_i * image_i.
// Evaluating a variable at 1 is the image {0,0,0} with sign +1.
struct MonomialSubstitution {
  std::array<Monomial, 3> image = {Monomial{1, 0, 0}, Monomial{0, 1, 0}, Monomial{0, 0, 1}};
  std::array<int, 3> sign = {1, 1, 1};

  static MonomialSubstitution identity() { return {}; }

  Monomial apply(const Monomial& m) const;
  // (-1)^(number of sign flips picked up by m)
  int sign_of(const Monomial& m) const;
};

// Laurent polynomial in x, y, z with rational coefficients. Zero
// coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}

  static Poly monomial(const Monomial& m, const Rational& c = 1);
  static Poly x() { return monomial({1, 0, 0}); }
  static Poly y() { return monomial({0, 1, 0}); }
  static Poly z() { return monomial({0, 0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  // Componentwise minimum of the exponents; {0,0,0} for zero.
  Monomial min_exponents() const;
  int min_degree(int var) const;
  int max_degree(int var) const;
  // Terms of the given x-degree, as a poly.
  Poly x_slice(int degree) const;

  Poly substitute(const MonomialSubstitution& s) const;
  Poly pow(unsigned e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace ratknot
