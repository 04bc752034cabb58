#include "core/io.hpp"

#include <cmath>

#include "json.hpp"

#include "core/error.hpp"

namespace gmm {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  fail(ErrorKind::kValidation, "field '" + field + "': " + why);
}

json parse_document(const std::string& text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) bad_field("<root>", "expected a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kValidation, std::string("malformed JSON: ") + e.what());
  }
}

double number_at(const json& j, const std::string& field) {
  if (!j.is_number()) bad_field(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad_field(field, "not finite");
  return v;
}

int integer_at(const json& j, const std::string& field) {
  if (!j.is_number_integer()) bad_field(field, "expected an integer");
  return j.get<int>();
}

std::vector<double> vector_at(const json& j, const std::string& field, int length) {
  if (!j.is_array()) bad_field(field, "expected an array");
  if (static_cast<int>(j.size()) != length) {
    bad_field(field, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number_at(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

PairTable table_at(const json& j, const std::string& field, int dim, double tol) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) bad_field(field, "expected " + std::to_string(dim) + " rows");
  RealTable t(dim);
  for (int l = 0; l < dim; ++l) {
    const auto row = vector_at(j[static_cast<std::size_t>(l)], field + "[" + std::to_string(l) + "]", dim);
    for (int m = 0; m < dim; ++m) t(l + 1, m + 1) = row[static_cast<std::size_t>(m)];
  }
  try {
    return PairTable::from_raw(t, tol);
  } catch (const Error& e) {
    bad_field(field, e.what());
  }
}

ordered_json number_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

}  // namespace

InputSpec parse_input_spec(const std::string& text) {
  const json doc = parse_document(text);
  InputSpec spec;
  if (!doc.contains("n")) bad_field("n", "missing");
  spec.n = integer_at(doc["n"], "n");
  if (spec.n < 2 || spec.n > 8) bad_field("n", "must be in [2, 8]");
  if (!doc.contains("N")) bad_field("N", "missing");
  spec.dim = integer_at(doc["N"], "N");
  if (spec.dim < 1 || spec.dim > 64) bad_field("N", "must be in [1, 64]");
  if (std::pow(static_cast<double>(spec.dim), spec.n) > 4e6) bad_field("N", "N^n exceeds 4000000");
  if (doc.contains("hbar")) {
    spec.constants.hbar = number_at(doc["hbar"], "hbar");
    if (!(spec.constants.hbar > 0.0)) bad_field("hbar", "must be positive");
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) bad_field("seed", "expected a non-negative integer");
    spec.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    if (!t.is_object()) bad_field("tolerances", "expected an object");
    if (t.contains("antisymmetry")) spec.antisymmetry_tol = number_at(t["antisymmetry"], "tolerances.antisymmetry");
    if (t.contains("cocycle")) spec.cocycle_tol = number_at(t["cocycle"], "tolerances.cocycle");
  }
  if (doc.contains("gamma")) {
    const auto& g = doc["gamma"];
    if (g == "multiplicity") {
      spec.gamma = GammaRule::kMultiplicity;
    } else if (g == "odd_unit") {
      spec.gamma = GammaRule::kOddUnit;
    } else {
      bad_field("gamma", "expected \"multiplicity\" or \"odd_unit\"");
    }
  }

  const int count = spec.n - 1;
  const int sources = static_cast<int>(doc.contains("potentials")) + static_cast<int>(doc.contains("pair_tables")) +
                      static_cast<int>(doc.contains("hamiltonians"));
  if (sources != 1) bad_field("potentials", "give exactly one of potentials, pair_tables or hamiltonians");
  auto list = [&](const char* field) -> const json& {
    const auto& j = doc[field];
    if (!j.is_array() || static_cast<int>(j.size()) != count) {
      bad_field(field, "expected n - 1 = " + std::to_string(count) + " entries");
    }
    return j;
  };
  if (doc.contains("potentials")) {
    const auto& j = list("potentials");
    for (int a = 0; a < count; ++a) {
      const std::string f = "potentials[" + std::to_string(a) + "]";
      spec.tables.push_back(PairTable::from_potential(vector_at(j[static_cast<std::size_t>(a)], f, spec.dim)));
    }
  } else if (doc.contains("pair_tables")) {
    const auto& j = list("pair_tables");
    for (int a = 0; a < count; ++a) {
      spec.tables.push_back(table_at(j[static_cast<std::size_t>(a)], "pair_tables[" + std::to_string(a) + "]",
                                     spec.dim, spec.antisymmetry_tol));
    }
  } else {
    const auto& j = list("hamiltonians");
    for (int a = 0; a < count; ++a) {
      const auto& h = j[static_cast<std::size_t>(a)];
      const std::string f = "hamiltonians[" + std::to_string(a) + "]";
      if (!h.is_object()) bad_field(f, "expected an object");
      const bool has_p = h.contains("potential");
      const bool has_t = h.contains("pair_table");
      if (has_p == has_t) bad_field(f, "give exactly one of potential or pair_table");
      spec.tables.push_back(has_p ? PairTable::from_potential(vector_at(h["potential"], f + ".potential", spec.dim))
                                  : table_at(h["pair_table"], f + ".pair_table", spec.dim, spec.antisymmetry_tol));
    }
  }
  return spec;
}

SpectrumDump compute_spectrum(const InputSpec& spec) {
  SpectrumDump dump;
  dump.n = spec.n;
  dump.dim = spec.dim;
  dump.nu = frequency_cochain(spec.tables, spec.constants, spec.gamma);
  dump.cocycle_defect = is_cocycle(dump.nu, spec.cocycle_tol).max_defect;
  dump.ritz_defect_max = ritz_defect_max(dump.nu);
  return dump;
}

std::string spectrum_json(const SpectrumDump& dump) {
  ordered_json out;
  out["n"] = dump.n;
  out["N"] = dump.dim;
  ordered_json list = ordered_json::array();
  // Strictly increasing tuples; the rest follow by antisymmetry.
  std::vector<int> idx(static_cast<std::size_t>(dump.n));
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == dump.n) {
      list.push_back({{"idx", idx}, {"value", dump.nu.get(idx)}});
      return;
    }
    for (int v = start; v <= dump.dim; ++v) {
      idx[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  out["nu"] = std::move(list);
  out["cocycle_defect"] = dump.cocycle_defect;
  out["ritz_defect_max"] = dump.ritz_defect_max;
  return out.dump(2) + "\n";
}

std::string verify_report_json(const VerifyReport& report) {
  ordered_json out;
  const auto& o = report.options;
  out["options"] = {{"n", o.n}, {"dim", o.dim}, {"seed", o.seed}, {"tol", o.tol}, {"suite", o.suite}};
  std::size_t passed = 0;
  ordered_json cases = ordered_json::array();
  for (const auto& c : report.cases) {
    passed += c.pass ? 1 : 0;
    cases.push_back({{"suite", c.suite},
                     {"n", c.n},
                     {"N", c.dim},
                     {"seed", c.seed},
                     {"check", c.check},
                     {"paper_ref", c.paper_ref},
                     {"max_defect", number_or_null(c.max_defect)},
                     {"tol", c.tol},
                     {"pass", c.pass}});
  }
  std::size_t exhibited = 0;
  ordered_json counter = ordered_json::array();
  for (const auto& c : report.counterexamples) {
    exhibited += c.exhibited ? 1 : 0;
    counter.push_back({{"suite", c.suite},
                       {"n", c.n},
                       {"N", c.dim},
                       {"seed", c.seed},
                       {"check", c.check},
                       {"paper_ref", c.paper_ref},
                       {"defect", number_or_null(c.defect)},
                       {"threshold", c.threshold},
                       {"exhibited", c.exhibited}});
  }
  out["summary"] = {{"cases", report.cases.size()},
                    {"passed", passed},
                    {"failed", report.cases.size() - passed},
                    {"counterexamples", report.counterexamples.size()},
                    {"counterexamples_exhibited", exhibited},
                    {"all_pass", report.all_pass()},
                    {"timing", {{"generated_at", report.generated_at}, {"wall_seconds", report.wall_seconds}}}};
  out["cases"] = std::move(cases);
  out["counterexamples"] = std::move(counter);
  return out.dump(2) + "\n";
}

std::string oscillator_report_json(const OscillatorReport& report) {
  ordered_json out;
  out["n"] = report.config.rank;
  out["omega"] = report.config.omega;
  out["hbar"] = report.config.constants.hbar;
  if (report.config.rank == 2) {
    out["energies"] = {report.energy_1, report.energy_2};
    out["energies_hbar_omega_units"] = {report.energy_1 / (report.config.constants.hbar * report.config.omega),
                                        report.energy_2 / (report.config.constants.hbar * report.config.omega)};
  } else {
    out["nu_tilde_123"] = report.nu_tilde_123;
  }
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"t", c.t},
                      {"defect", number_or_null(c.defect)},
                      {"tol", c.tol},
                      {"expect_holds", c.expect_holds},
                      {"pass", c.pass}});
  }
  out["checks"] = std::move(checks);
  out["all_pass"] = report.all_pass();
  return out.dump(2) + "\n";
}

NambuSystem parse_nambu_system(const std::string& text) {
  const json doc = parse_document(text);
  NambuSystem sys;
  if (doc.contains("preset")) {
    const auto& p = doc["preset"];
    if (p == "rigid_body") {
      sys = rigid_body_system();
    } else if (p == "reduction") {
      sys = reduction_system();
    } else if (p == "harmonic") {
      sys = harmonic_system();
    } else {
      bad_field("preset", "expected rigid_body, reduction or harmonic");
    }
  } else {
    if (!doc.contains("dim")) bad_field("dim", "missing (or give a preset)");
    sys.dim = integer_at(doc["dim"], "dim");
    if (sys.dim < 2 || sys.dim > 8) bad_field("dim", "must be in [2, 8]");
    if (!doc.contains("hamiltonians") || !doc["hamiltonians"].is_array() ||
        static_cast<int>(doc["hamiltonians"].size()) != sys.dim - 1) {
      bad_field("hamiltonians", "expected dim - 1 = " + std::to_string(sys.dim - 1) + " entries");
    }
    const auto& hs = doc["hamiltonians"];
    for (std::size_t a = 0; a < hs.size(); ++a) {
      const std::string f = "hamiltonians[" + std::to_string(a) + "]";
      if (!hs[a].is_object() || !hs[a].contains("terms") || !hs[a]["terms"].is_array()) {
        bad_field(f + ".terms", "expected an array of {coef, pow}");
      }
      Polynomial poly(sys.dim);
      const auto& terms = hs[a]["terms"];
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string tf = f + ".terms[" + std::to_string(k) + "]";
        if (!terms[k].is_object() || !terms[k].contains("coef") || !terms[k].contains("pow")) {
          bad_field(tf, "expected {coef, pow}");
        }
        const double coef = number_at(terms[k]["coef"], tf + ".coef");
        const auto& pw = terms[k]["pow"];
        if (!pw.is_array() || static_cast<int>(pw.size()) != sys.dim) {
          bad_field(tf + ".pow", "expected " + std::to_string(sys.dim) + " exponents");
        }
        Polynomial::Exponents e;
        for (std::size_t i = 0; i < pw.size(); ++i) {
          const int v = integer_at(pw[i], tf + ".pow[" + std::to_string(i) + "]");
          if (v < 0) bad_field(tf + ".pow", "exponents must be non-negative");
          e.push_back(v);
        }
        poly.add_term(e, coef);
      }
      sys.hamiltonians.push_back(ScalarField::from_polynomial(poly));
    }
  }
  if (doc.contains("derivatives")) {
    const auto& d = doc["derivatives"];
    if (d == "exact") {
      sys.mode = DerivativeMode::kExact;
    } else if (d == "fd") {
      sys.mode = DerivativeMode::kFiniteDifference;
    } else {
      bad_field("derivatives", "expected \"exact\" or \"fd\"");
    }
  }
  if (doc.contains("fd_step")) {
    sys.fd_scale = number_at(doc["fd_step"], "fd_step");
    if (!(sys.fd_scale > 0.0)) bad_field("fd_step", "must be positive");
  }
  sys.validate();
  return sys;
}

std::string nambu_summary_json(const IntegrationResult& result) {
  const auto& tr = result.trajectory;
  ordered_json out;
  out["dim"] = tr.dim;
  out["steps"] = tr.times.empty() ? 0 : tr.times.size() - 1;
  out["t_final"] = tr.times.empty() ? 0.0 : tr.times.back();
  out["diverged"] = result.diverged;
  if (!result.message.empty()) out["message"] = result.message;
  ordered_json drift = ordered_json::array();
  for (double d : tr.max_drift()) drift.push_back(number_or_null(d));
  out["max_drift"] = std::move(drift);
  if (!tr.invariants.empty()) {
    ordered_json first = ordered_json::array(), last = ordered_json::array();
    for (double v : tr.invariants.front()) first.push_back(number_or_null(v));
    for (double v : tr.invariants.back()) last.push_back(number_or_null(v));
    out["initial_invariants"] = std::move(first);
    out["final_invariants"] = std::move(last);
  }
  return out.dump(2) + "\n";
}

}  // namespace gmm
