#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qexcess/linalg.hpp"

namespace qexcess {

/// Dense univariate polynomial, coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);
  Polynomial(std::initializer_list<double> coefficients);

  static Polynomial constant(double c) { return Polynomial({c}); }
  static Polynomial monomial(int degree, double c = 1.0);
  /// prod (t - r) over the given roots.
  static Polynomial from_roots(std::span<const double> roots);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<double>& coefficients() const { return coeffs_; }
  double coefficient(int k) const;
  double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  double operator()(double t) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double c);
  Polynomial times_t() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double c) { return a *= c; }
  friend Polynomial operator*(double c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Human-readable form such as "0.333333*t^2 - 1".
  std::string to_string(int precision = 6) const;

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// max_k |a_k - b_k| over the union of supports.
double max_coefficient_difference(const Polynomial& a, const Polynomial& b);

/// f(M∘): p applied to every entry of M.
Matrix entrywise_poly(const Matrix& M, const Polynomial& p);

/// p(M) as a matrix polynomial (Horner in matrix products).
Matrix matrix_poly(const Matrix& M, const Polynomial& p);

}  // namespace qexcess
