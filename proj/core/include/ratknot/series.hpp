#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratknot/poly.hpp"

namespace ratknot {

// Power series in x truncated after x^order, with Laurent-polynomial
// coefficients in y and z. Absent keys are zero.
class TruncatedSeries {
 public:
  using Key = std::pair<int, int>;  // (y degree, z degree)
  using Slice = std::map<Key, Rational>;

  TruncatedSeries() = default;
  explicit TruncatedSeries(int order);
  // Univariate series c_0 + c_1 x + ... truncated at coeffs.size() - 1.
  static TruncatedSeries from_coefficients(const std::vector<Rational>& coeffs);
  // A polynomial truncated at `order`.
  static TruncatedSeries from_poly(const Poly& p, int order);

  int order() const { return static_cast<int>(slices_.size()) - 1; }
  const Slice& slice(int x_degree) const { return slices_.at(static_cast<std::size_t>(x_degree)); }
  Rational coefficient(int x, int y = 0, int z = 0) const;
  void add(int x, int y, int z, const Rational& c);
  std::size_t term_count() const;

  // Coefficients of x^0..x^order after setting y = z = 1.
  std::vector<Rational> collapse() const;
  // Coefficients of x^0..x^order; throws DomainError on any y or z power.
  std::vector<Rational> univariate() const;

  TruncatedSeries truncated(int order) const;
  // Multiplies by x^k. A negative k requires the dropped low slices to be zero.
  TruncatedSeries shift_x(int k) const;
  // Applies a monomial map. Images of y and z may not lower the x-degree and
  // the image of x must be x^a * (y, z part) with a >= 1. The result is
  // valid up to a * (order + 1) - 1; `new_order` must not exceed that.
  TruncatedSeries substitute(const MonomialSubstitution& s, int new_order) const;

  struct TermImage {
    int y;
    int z;
    Rational weight;  // zero drops the term
  };
  // Rewrites every term (x, y, z, c) as (x, image.y, image.z, c * image.weight).
  TruncatedSeries map_terms(const std::function<TermImage(int x, int y, int z)>& f) const;

  bool is_integral() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  // Product truncated at the smaller order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.slices_ == b.slices_;
  }

  // One line per monomial, "x^m y^l z^k : c", sorted by (m, l, k).
  std::string dump() const;
  // "c0,c1,...,c_order"
  std::string dump_univariate() const;

 private:
  std::vector<Slice> slices_;
};

// Coefficientwise product; both series must have the same order.
TruncatedSeries hadamard(const TruncatedSeries& s, const TruncatedSeries& t);

// Rational function kept as scalar * monomial * product of factors with
// integer exponents. Factors are primitive, monomial-free integer
// polynomials with a positive first coefficient, so equal factors cancel.
class RationalGF {
 public:
  RationalGF() : scalar_(0) {}
  RationalGF(const Poly& p);  // NOLINT
  RationalGF(long c) : RationalGF(Poly(c)) {}
  static RationalGF ratio(const Poly& num, const Poly& den);

  bool is_zero() const { return scalar_ == 0; }
  Poly numerator() const;
  Poly denominator() const;

  RationalGF substitute(const MonomialSubstitution& s) const;
  RationalGF pow(int e) const;

  friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator-(const RationalGF& a);
  friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator/(const RationalGF& a, const RationalGF& b);
  // Same rational function (cross-multiplied comparison).
  friend bool equivalent(const RationalGF& a, const RationalGF& b);

  std::string to_string() const;

 private:
  void absorb(const Poly& p, int exponent);

  Rational scalar_;
  Monomial monomial_{0, 0, 0};
  std::map<Poly, int> factors_;
};

// Power series of gf in x up to x^order. The lowest x-slice of the
// denominator must be a single monomial; throws DomainError otherwise or
// when the expansion would need negative powers of x.
TruncatedSeries expand(const RationalGF& gf, int order);

// Parses an expression in x, y, z with integers, + - * / ^ and parentheses;
// juxtaposition multiplies. Exponents are integers (negative allowed).
RationalGF parse_gf(std::string_view text);

}  // namespace ratknot
