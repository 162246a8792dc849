#include "qexcess/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace qexcess {

Polynomial::Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::monomial(int degree, double c) {
  std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1, 0.0);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_roots(std::span<const double> roots) {
  Polynomial p = constant(1.0);
  for (double r : roots) p = p.times_t() - p * r;
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0.0;
}

double Polynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double c) {
  for (double& a : coeffs_) a *= c;
  trim();
  return *this;
}

Polynomial Polynomial::times_t() const {
  if (coeffs_.empty()) return {};
  std::vector<double> out(coeffs_.size() + 1, 0.0);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + 1);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(int precision) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  os << std::setprecision(precision);
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const double c = coeffs_[k];
    if (c == 0.0) continue;
    const double mag = std::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1.0) {
      os << mag;
      if (k > 0) os << "*";
    }
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

double max_coefficient_difference(const Polynomial& a, const Polynomial& b) {
  const int top = std::max(a.degree(), b.degree());
  double diff = 0.0;
  for (int k = 0; k <= top; ++k) diff = std::max(diff, std::abs(a.coefficient(k) - b.coefficient(k)));
  return diff;
}

Matrix entrywise_poly(const Matrix& M, const Polynomial& p) {
  return M.unaryExpr([&p](double v) { return p(v); });
}

Matrix matrix_poly(const Matrix& M, const Polynomial& p) {
  Matrix acc = Matrix::Zero(M.rows(), M.cols());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * M;
    acc.diagonal().array() += *it;
  }
  return acc;
}

}  // namespace qexcess
