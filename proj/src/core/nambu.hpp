#pragma once

// Classical Nambu dynamics: dx_i/dt = {x_i, H_1, ..., H_{n-1}}, where the
// bracket is the Jacobian determinant of n functions of n coordinates.

#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "core/polynomial.hpp"

namespace gmm {

struct ScalarField {
  std::function<double(std::span<const double>)> value;
  /// Writes the gradient into the output span when analytic derivatives exist.
  std::function<void(std::span<const double>, std::span<double>)> gradient;

  static ScalarField from_polynomial(const Polynomial& p);
  bool has_gradient() const noexcept { return static_cast<bool>(gradient); }
};

enum class DerivativeMode { kExact, kFiniteDifference };

struct NambuSystem {
  int dim = 0;
  std::vector<ScalarField> hamiltonians;  // dim - 1 of them
  /// Central-difference step is fd_scale * (1 + |x_i|).
  double fd_scale = 1e-5;
  DerivativeMode mode = DerivativeMode::kExact;

  void validate() const;
};

/// Gradient of f at x; exact when requested and available, else central differences.
void field_gradient(const ScalarField& f, std::span<const double> x, std::span<double> out,
                    DerivativeMode mode, double fd_scale);

/// Determinant of the n x n Jacobian of funcs at x.
double nambu_bracket(std::span<const ScalarField> funcs, std::span<const double> x,
                     DerivativeMode mode = DerivativeMode::kFiniteDifference, double fd_scale = 1e-5);

std::vector<double> nambu_rhs(const NambuSystem& sys, std::span<const double> x);

struct Trajectory {
  int dim = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> points;
  std::vector<std::vector<double>> invariants;  // H_a at each point

  /// max_t |H_a(x(t)) - H_a(x(0))| per Hamiltonian.
  std::vector<double> max_drift() const;
  void write_csv(std::ostream& os) const;
};

struct IntegrationResult {
  Trajectory trajectory;
  bool diverged = false;
  std::string message;
};

/// Fixed-step classic RK4 from 0 to t1. Stops early (diverged = true) when
/// the state stops being finite or its norm exceeds blowup_norm.
IntegrationResult integrate(const NambuSystem& sys, std::span<const double> x0, double t1, double dt,
                            double blowup_norm = 1e8);

/// Demo systems. Rigid-body-like pair on R^3: H1 = |x|^2/2,
/// H2 = sum x_i^2 / (2 I_i) with moments (1, 2, 3).
NambuSystem rigid_body_system();
Polynomial rigid_body_h1();
Polynomial rigid_body_h2();
/// Pendulum embedded in R^3: H1 = y^2/2 + 1 - cos x, H2 = z.
NambuSystem reduction_system();
/// R^2: H = (q^2 + p^2)/2.
NambuSystem harmonic_system();

/// Planar Hamiltonian reference for the reduction demo: Stormer-Verlet on
/// q' = p, p' = -sin q. Returns (q, p) at t1.
std::pair<double, double> pendulum_reference(double q0, double p0, double t1, double dt);

/// Time between successive upward zero crossings of coordinate `axis`,
/// located by linear interpolation; nullopt if fewer than two crossings.
std::optional<double> crossing_period(const Trajectory& traj, int axis);

struct BracketCheck {
  std::string name;
  DerivativeMode mode = DerivativeMode::kExact;
  double defect = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Skew symmetry, linearity, fundamental identity and derivation rule on
/// random cubic polynomials in `dim` variables at `points` random points,
/// with exact derivatives and with finite differences.
std::vector<BracketCheck> bracket_properties_report(int dim, unsigned long long seed, int points);

}  // namespace gmm
