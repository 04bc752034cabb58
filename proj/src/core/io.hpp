#pragma once

// JSON input and report serialization. Index tuples are written 1-based.
// Parse errors are Error(kValidation) naming the offending field.

#include <cstdint>
#include <string>
#include <vector>

#include "core/nambu.hpp"
#include "core/oscillators.hpp"
#include "core/pair_table.hpp"
#include "core/spectrum.hpp"
#include "core/verify.hpp"

namespace gmm {

struct InputSpec {
  int n = 0;
  int dim = 0;
  PlanckConstants constants;
  /// n - 1 tables, one per Hamiltonian.
  std::vector<PairTable> tables;
  std::uint64_t seed = 0;
  double antisymmetry_tol = 1e-12;
  double cocycle_tol = 1e-10;
  GammaRule gamma = GammaRule::kMultiplicity;
};

/// {n, N, hbar, potentials | pair_tables | hamiltonians, seed, tolerances, gamma}.
InputSpec parse_input_spec(const std::string& text);

struct SpectrumDump {
  int n = 0;
  int dim = 0;
  Cochain nu;
  double cocycle_defect = 0.0;
  double ritz_defect_max = 0.0;
};

SpectrumDump compute_spectrum(const InputSpec& spec);
std::string spectrum_json(const SpectrumDump& dump);

/// Deterministic for fixed options except summary.timing.
std::string verify_report_json(const VerifyReport& report);
std::string oscillator_report_json(const OscillatorReport& report);

/// {"preset": "rigid_body" | "reduction" | "harmonic"} or
/// {"dim": d, "hamiltonians": [{"terms": [{"coef": c, "pow": [..]}]}], ...},
/// optionally with "derivatives": "exact" | "fd" and "fd_step".
NambuSystem parse_nambu_system(const std::string& text);
std::string nambu_summary_json(const IntegrationResult& result);

}  // namespace gmm
