// gmm: command-line driver over the C API.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or invalid input, 3 I/O,
// 4 divergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gmm/gmm.h"

namespace {

enum Exit { kPass = 0, kCheckFailure = 1, kUsage = 2, kIo = 3, kDivergence = 4 };

struct IoError {
  std::string message;
};

// Owns a string returned by the library.
struct LibString {
  char* ptr = nullptr;
  ~LibString() { gmm_string_free(ptr); }
  std::string str() const { return ptr != nullptr ? ptr : ""; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot open '" + path + "' for reading"};
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError{"error reading '" + path + "'"};
  return os.str();
}

// Writes to path, or stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError{"cannot open '" + path + "' for writing"};
  out << text;
  if (!out) throw IoError{"error writing '" + path + "'"};
}

int exit_for(gmm_status s) {
  switch (s) {
    case GMM_OK: return kPass;
    case GMM_ERR_IO: return kIo;
    case GMM_ERR_DIVERGENCE: return kDivergence;
    case GMM_ERR_INTERNAL: return kCheckFailure;
    default: return kUsage;
  }
}

int report_failure(gmm_status s) {
  std::cerr << "gmm: " << gmm_status_name(s) << ": " << gmm_last_error() << "\n";
  return exit_for(s);
}

std::vector<double> parse_csv_numbers(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(flag, "expected a comma-separated list of numbers");
  return out;
}

struct VerifyArgs {
  int n = 3;
  int dim = 4;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  std::string suite = "all";
  unsigned threads = 0;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  LibString json;
  int all_pass = 0;
  const gmm_status s = gmm_verify(a.n, a.dim, a.seed, a.tol, a.suite.c_str(), a.threads, &json.ptr, &all_pass);
  if (s != GMM_OK) return report_failure(s);
  write_output(a.out, json.str());
  std::cerr << "gmm verify: " << (all_pass ? "all cases pass" : "some cases FAILED") << "\n";
  return all_pass ? kPass : kCheckFailure;
}

struct SpectrumArgs {
  std::string input;
  std::string out;
};

int run_spectrum(const SpectrumArgs& a) {
  const std::string text = read_file(a.input);
  LibString json;
  const gmm_status s = gmm_spectrum_from_json(text.c_str(), &json.ptr);
  if (s != GMM_OK) return report_failure(s);
  write_output(a.out, json.str());
  return kPass;
}

struct OscillatorArgs {
  int n = 3;
  double omega = 1.0;
  std::string times = "0,0.5,1,1.5,2";
  std::string out;
};

int run_oscillator(const OscillatorArgs& a) {
  const auto times = parse_csv_numbers(a.times, "--times");
  LibString json;
  int all_pass = 0;
  const gmm_status s = gmm_oscillator_report(a.n, a.omega, times.data(), times.size(), &json.ptr, &all_pass);
  if (s != GMM_OK) return report_failure(s);
  write_output(a.out, json.str());
  return all_pass ? kPass : kCheckFailure;
}

struct NambuArgs {
  std::string system;
  std::string x0;
  double t1 = 10.0;
  double dt = 1e-3;
  std::string out;
  std::string summary;
};

int run_nambu(const NambuArgs& a) {
  const std::string text = read_file(a.system);
  const auto x0 = parse_csv_numbers(a.x0, "--x0");
  gmm_nambu_system* sys = nullptr;
  gmm_status s = gmm_nambu_system_from_json(text.c_str(), &sys);
  if (s != GMM_OK) return report_failure(s);
  LibString csv;
  LibString summary;
  s = gmm_nambu_integrate(sys, x0.data(), x0.size(), a.t1, a.dt, &csv.ptr, &summary.ptr);
  gmm_nambu_system_free(sys);
  if (s != GMM_OK && s != GMM_ERR_DIVERGENCE) return report_failure(s);
  write_output(a.out, csv.str());
  if (a.summary.empty()) {
    std::cerr << summary.str();
  } else {
    write_output(a.summary, summary.str());
  }
  if (s == GMM_ERR_DIVERGENCE) return report_failure(s);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized matrix mechanics: property verification, spectra, oscillators, Nambu flows"};
  app.set_version_flag("--version", std::string(gmm_version()));
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the property suites and write a JSON report");
  verify->add_option("--n", va.n, "Rank of the generalized matrices (2..6)")->capture_default_str();
  verify->add_option("--dim", va.dim, "Index range N (2..8)")->capture_default_str();
  verify->add_option("--seed", va.seed, "Base seed; each case derives its own")->capture_default_str();
  verify->add_option("--tol", va.tol, "Tolerance for algebraic identities")->capture_default_str();
  verify->add_option("--suite", va.suite, "algebra|cohomology|spectrum|dynamics|oscillator|nambu|all")
      ->check(CLI::IsMember({"algebra", "cohomology", "spectrum", "dynamics", "oscillator", "nambu", "all"}))
      ->capture_default_str();
  verify->add_option("--threads", va.threads, "Worker threads (0 = automatic, capped by GMM_THREADS)");
  verify->add_option("--out", va.out, "Report path (default stdout)");

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Frequencies from an input specification");
  spectrum->add_option("--input", sa.input, "Input JSON")->required();
  spectrum->add_option("--out", sa.out, "Output path (default stdout)");

  OscillatorArgs oa;
  auto* oscillator = app.add_subcommand("oscillator", "Fermionic oscillator relations");
  oscillator->add_option("--n", oa.n, "2 or 3")->capture_default_str();
  oscillator->add_option("--omega", oa.omega, "Angular frequency (> 0)")->capture_default_str();
  oscillator->add_option("--times", oa.times, "Comma-separated evaluation times")->capture_default_str();
  oscillator->add_option("--out", oa.out, "Output path (default stdout)");

  NambuArgs na;
  auto* nambu = app.add_subcommand("nambu", "Integrate a classical Nambu system");
  nambu->add_option("--system", na.system, "System JSON")->required();
  nambu->add_option("--x0", na.x0, "Comma-separated initial point")->required();
  nambu->add_option("--t1", na.t1, "Final time")->capture_default_str();
  nambu->add_option("--dt", na.dt, "Step size")->capture_default_str();
  nambu->add_option("--out", na.out, "Trajectory CSV path (default stdout)");
  nambu->add_option("--summary", na.summary, "Summary JSON path (default stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return run_verify(va);
    if (*spectrum) return run_spectrum(sa);
    if (*oscillator) return run_oscillator(oa);
    if (*nambu) return run_nambu(na);
  } catch (const IoError& e) {
    std::cerr << "gmm: " << e.message << "\n";
    return kIo;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "gmm: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
