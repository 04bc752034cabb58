#include "core/polynomial.hpp"

#include <cmath>
#include <numeric>

#include "core/error.hpp"
#include "core/permutation.hpp"

namespace gmm {

Polynomial Polynomial::constant(int variables, double c) {
  Polynomial p(variables);
  p.add_term(Exponents(static_cast<std::size_t>(variables), 0), c);
  return p;
}

Polynomial Polynomial::coordinate(int variables, int i) {
  if (i < 0 || i >= variables) fail(ErrorKind::kIndex, "coordinate index out of range");
  Polynomial p(variables);
  Exponents e(static_cast<std::size_t>(variables), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, 1.0);
  return p;
}

void Polynomial::add_term(const Exponents& powers, double coef) {
  if (static_cast<int>(powers.size()) != variables_) fail(ErrorKind::kShape, "exponent vector has wrong length");
  for (int p : powers)
    if (p < 0) fail(ErrorKind::kInvalidArgument, "negative exponent");
  if (coef == 0.0) return;
  auto it = terms_.find(powers);
  if (it == terms_.end()) {
    terms_.emplace(powers, coef);
    return;
  }
  it->second += coef;
  if (it->second == 0.0) terms_.erase(it);
}

double Polynomial::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != variables_) fail(ErrorKind::kShape, "point has wrong dimension");
  double s = 0.0;
  for (const auto& [powers, coef] : terms_) {
    double term = coef;
    for (std::size_t i = 0; i < powers.size(); ++i)
      for (int k = 0; k < powers[i]; ++k) term *= x[i];
    s += term;
  }
  return s;
}

Polynomial Polynomial::derivative(int i) const {
  if (i < 0 || i >= variables_) fail(ErrorKind::kIndex, "derivative variable out of range");
  Polynomial d(variables_);
  for (const auto& [powers, coef] : terms_) {
    const int p = powers[static_cast<std::size_t>(i)];
    if (p == 0) continue;
    Exponents e = powers;
    e[static_cast<std::size_t>(i)] = p - 1;
    d.add_term(e, coef * p);
  }
  return d;
}

int Polynomial::degree() const noexcept {
  int d = 0;
  for (const auto& [powers, coef] : terms_) d = std::max(d, std::accumulate(powers.begin(), powers.end(), 0));
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (variables_ == 0) variables_ = o.variables_;
  if (o.variables_ != variables_ && !o.terms_.empty()) fail(ErrorKind::kShape, "polynomials differ in variable count");
  for (const auto& [powers, coef] : o.terms_) add_term(powers, coef);
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [powers, coef] : terms_) coef *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables()) fail(ErrorKind::kShape, "polynomials differ in variable count");
  Polynomial out(a.variables());
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      Polynomial::Exponents e = pa;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += pb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial exact_bracket(std::span<const Polynomial> funcs) {
  const int n = static_cast<int>(funcs.size());
  if (n < 1) fail(ErrorKind::kArity, "bracket needs at least one function");
  for (const auto& f : funcs)
    if (f.variables() != n) fail(ErrorKind::kArity, "bracket of n functions needs n variables");
  std::vector<std::vector<Polynomial>> jac(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) jac[static_cast<std::size_t>(a)].push_back(funcs[static_cast<std::size_t>(a)].derivative(i));
  Polynomial out(n);
  for (const auto& p : signed_permutations(n)) {
    Polynomial term = Polynomial::constant(n, p.sign);
    for (int a = 0; a < n; ++a)
      term = term * jac[static_cast<std::size_t>(a)][static_cast<std::size_t>(p.order[static_cast<std::size_t>(a)])];
    out += term;
  }
  return out;
}

}  // namespace gmm
