#pragma once

// Sparse real polynomials in n variables with exact differentiation; they
// give the Nambu bracket checks an exact-derivative oracle.

#include <map>
#include <span>
#include <vector>

namespace gmm {

class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(int variables) : variables_(variables) {}

  static Polynomial constant(int variables, double c);
  /// x_i, 0-based i.
  static Polynomial coordinate(int variables, int i);

  int variables() const noexcept { return variables_; }
  const std::map<Exponents, double>& terms() const noexcept { return terms_; }

  void add_term(const Exponents& powers, double coef);

  double operator()(std::span<const double> x) const;
  Polynomial derivative(int i) const;
  int degree() const noexcept;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a += b * -1.0; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  int variables_ = 0;
  std::map<Exponents, double> terms_;
};

/// Exact Jacobian determinant d(f_1..f_n)/d(x_1..x_n) as a polynomial.
Polynomial exact_bracket(std::span<const Polynomial> funcs);

}  // namespace gmm
