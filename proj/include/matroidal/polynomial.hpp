#ifndef MATROIDAL_POLYNOMIAL_HPP
#define MATROIDAL_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "matroidal/numbers.hpp"

namespace matroidal {

// Dense univariate polynomial with exact integer coefficients, stored by
// ascending degree. The zero polynomial is the empty coefficient list; the
// leading coefficient of a non-zero polynomial is never zero.
class UnivarPoly {
 public:
  UnivarPoly() = default;
  explicit UnivarPoly(std::vector<Int> ascending_coeffs);

  static UnivarPoly constant(Int c);
  static UnivarPoly variable();  // q

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return c_; }

  UnivarPoly operator+(const UnivarPoly& o) const;
  UnivarPoly operator-(const UnivarPoly& o) const;
  UnivarPoly operator*(const UnivarPoly& o) const;
  UnivarPoly operator-() const;
  UnivarPoly operator*(const Int& c) const;
  bool operator==(const UnivarPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UnivarPoly& o) const { return c_ != o.c_; }

  // p(q) -> p(q + a), exact binomial expansion via Horner.
  UnivarPoly shifted(const Int& a) const;

  // Coefficient reversal q^top * p(1/q). Requires top_degree >= degree().
  UnivarPoly reversed(int top_degree) const;

  UnivarPoly pow(unsigned e) const;

  // p(u(q))
  UnivarPoly composed(const UnivarPoly& u) const;

  // Exact division by (q - root); returns {quotient, remainder}.
  std::pair<UnivarPoly, Int> divided_by_linear(const Int& root) const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  std::vector<std::string> coeff_strings() const;  // ascending, decimal
  std::string pretty(const std::string& var = "q") const;

 private:
  std::vector<Int> c_;
  void trim();
};

inline UnivarPoly operator*(const Int& c, const UnivarPoly& p) { return p * c; }

// Dense bivariate polynomial: rows_[i][j] is the coefficient of x^i y^j.
// Trailing all-zero rows and columns are trimmed; equality is coefficient-wise.
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<std::vector<Int>> rows);

  static BivarPoly constant(Int c);
  static BivarPoly x();
  static BivarPoly y();
  static BivarPoly monomial(int i, int j, Int c);

  bool is_zero() const { return rows_.empty(); }
  int x_degree() const { return static_cast<int>(rows_.size()) - 1; }
  int y_degree() const;
  Int coeff(int i, int j) const;
  const std::vector<std::vector<Int>>& rows() const { return rows_; }

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly operator*(const Int& c) const;
  bool operator==(const BivarPoly& o) const { return rows_ == o.rows_; }
  bool operator!=(const BivarPoly& o) const { return rows_ != o.rows_; }

  BivarPoly swapped_xy() const;

  // Composed substitution x -> u(q), y -> v(q); exact.
  UnivarPoly substituted(const UnivarPoly& u, const UnivarPoly& v) const;

  Int eval(const Int& x, const Int& y) const;

  std::vector<std::vector<std::string>> coeff_strings() const;
  std::string pretty() const;  // e.g. "x^2 + x + y"

 private:
  std::vector<std::vector<Int>> rows_;
  void trim();
};

inline BivarPoly operator*(const Int& c, const BivarPoly& p) { return p * c; }

}  // namespace matroidal

#endif
