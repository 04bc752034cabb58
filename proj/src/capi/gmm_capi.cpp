#include "gmm/gmm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/error.hpp"
#include "core/io.hpp"
#include "core/nambu.hpp"
#include "core/oscillators.hpp"
#include "core/verify.hpp"

struct gmm_matrix {
  gmm::GeneralizedMatrix value;
};

struct gmm_nambu_system {
  gmm::NambuSystem value;
};

namespace {

thread_local std::string last_error;

gmm_status status_of(gmm::ErrorKind kind) {
  switch (kind) {
    case gmm::ErrorKind::kInvalidArgument: return GMM_ERR_INVALID_ARGUMENT;
    case gmm::ErrorKind::kIndex: return GMM_ERR_INDEX;
    case gmm::ErrorKind::kShape: return GMM_ERR_SHAPE;
    case gmm::ErrorKind::kArity: return GMM_ERR_ARITY;
    case gmm::ErrorKind::kValidation: return GMM_ERR_VALIDATION;
    case gmm::ErrorKind::kDomain: return GMM_ERR_DOMAIN;
    case gmm::ErrorKind::kDivergence: return GMM_ERR_DIVERGENCE;
  }
  return GMM_ERR_INTERNAL;
}

gmm_status set_error(gmm_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs body, translating exceptions into status codes.
template <class F>
gmm_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const gmm::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(GMM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(GMM_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gmm_status null_arg(const char* name) {
  return set_error(GMM_ERR_INVALID_ARGUMENT, std::string(name) + " must not be null");
}

gmm_status emit_matrix(gmm::GeneralizedMatrix m, gmm_matrix** out) {
  *out = new gmm_matrix{std::move(m)};
  return GMM_OK;
}

std::vector<const gmm::GeneralizedMatrix*> unwrap(const gmm_matrix* const* ms, size_t count) {
  std::vector<const gmm::GeneralizedMatrix*> refs;
  for (size_t i = 0; i < count; ++i) {
    if (ms[i] == nullptr) gmm::fail(gmm::ErrorKind::kInvalidArgument, "matrix argument is null");
    refs.push_back(&ms[i]->value);
  }
  return refs;
}

std::span<const int> index_span(const gmm_matrix* m, const int* idx) {
  return {idx, static_cast<std::size_t>(m->value.rank())};
}

}  // namespace

extern "C" {

const char* gmm_version(void) { return "0.1.0"; }

const char* gmm_last_error(void) { return last_error.c_str(); }

const char* gmm_status_name(gmm_status status) {
  switch (status) {
    case GMM_OK: return "ok";
    case GMM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GMM_ERR_INDEX: return "index out of range";
    case GMM_ERR_SHAPE: return "shape mismatch";
    case GMM_ERR_ARITY: return "arity mismatch";
    case GMM_ERR_VALIDATION: return "validation failed";
    case GMM_ERR_DOMAIN: return "domain error";
    case GMM_ERR_IO: return "i/o error";
    case GMM_ERR_DIVERGENCE: return "integration diverged";
    case GMM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void gmm_string_free(char* s) { std::free(s); }

gmm_status gmm_matrix_zero(int rank, int dim, gmm_matrix** out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { return emit_matrix(gmm::GeneralizedMatrix::zero(rank, dim), out); });
}

gmm_status gmm_matrix_identity(int rank, int dim, gmm_matrix** out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { return emit_matrix(gmm::identity_matrix(rank, dim), out); });
}

gmm_status gmm_matrix_normal(int rank, int dim, const double* table, gmm_matrix** out) {
  if (out == nullptr) return null_arg("out");
  if (table == nullptr) return null_arg("table");
  return guarded([&] {
    if (dim < 1) gmm::fail(gmm::ErrorKind::kInvalidArgument, "dim must be positive");
    gmm::RealTable t(dim);
    for (int l = 0; l < dim; ++l)
      for (int m = 0; m < dim; ++m) t(l + 1, m + 1) = table[l * dim + m];
    return emit_matrix(gmm::normal_matrix(rank, t), out);
  });
}

gmm_status gmm_matrix_clone(const gmm_matrix* m, gmm_matrix** out) {
  if (m == nullptr) return null_arg("m");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { return emit_matrix(m->value, out); });
}

void gmm_matrix_free(gmm_matrix* m) { delete m; }

gmm_status gmm_matrix_shape(const gmm_matrix* m, int* rank, int* dim) {
  if (m == nullptr) return null_arg("m");
  if (rank != nullptr) *rank = m->value.rank();
  if (dim != nullptr) *dim = m->value.dim();
  return GMM_OK;
}

gmm_status gmm_matrix_get(const gmm_matrix* m, const int* idx, double* re, double* im) {
  if (m == nullptr) return null_arg("m");
  if (idx == nullptr) return null_arg("idx");
  return guarded([&] {
    const gmm::Complex v = m->value.get(index_span(m, idx));
    if (re != nullptr) *re = v.real();
    if (im != nullptr) *im = v.imag();
    return GMM_OK;
  });
}

gmm_status gmm_matrix_set(gmm_matrix* m, const int* idx, double re, double im) {
  if (m == nullptr) return null_arg("m");
  if (idx == nullptr) return null_arg("idx");
  return guarded([&] {
    m->value.set(index_span(m, idx), gmm::Complex{re, im});
    return GMM_OK;
  });
}

gmm_status gmm_matrix_max_abs_diff(const gmm_matrix* a, const gmm_matrix* b, double* out) {
  if (a == nullptr) return null_arg("a");
  if (b == nullptr) return null_arg("b");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    *out = gmm::max_abs_diff(a->value, b->value);
    return GMM_OK;
  });
}

gmm_status gmm_product(const gmm_matrix* const* factors, size_t count, gmm_matrix** out) {
  if (factors == nullptr) return null_arg("factors");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { return emit_matrix(gmm::nfold_product(unwrap(factors, count)), out); });
}

gmm_status gmm_commutator(const gmm_matrix* const* args, size_t count, gmm_matrix** out) {
  if (args == nullptr) return null_arg("args");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { return emit_matrix(gmm::nfold_commutator(unwrap(args, count)), out); });
}

gmm_status gmm_anticommutator(const gmm_matrix* const* args, size_t count, gmm_matrix** out) {
  if (args == nullptr) return null_arg("args");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { return emit_matrix(gmm::nfold_anticommutator(unwrap(args, count)), out); });
}

gmm_status gmm_verify(int n, int dim, uint64_t seed, double tol, const char* suite, unsigned threads,
                      char** report_json, int* all_pass) {
  if (report_json == nullptr) return null_arg("report_json");
  return guarded([&] {
    gmm::VerifyOptions o;
    o.n = n;
    o.dim = dim;
    o.seed = seed;
    o.tol = tol;
    o.suite = suite != nullptr ? suite : "all";
    o.threads = threads;
    const auto report = gmm::run_verification(o);
    *report_json = copy_string(gmm::verify_report_json(report));
    if (all_pass != nullptr) *all_pass = report.all_pass() ? 1 : 0;
    return GMM_OK;
  });
}

gmm_status gmm_spectrum_from_json(const char* input_json, char** spectrum_json) {
  if (input_json == nullptr) return null_arg("input_json");
  if (spectrum_json == nullptr) return null_arg("spectrum_json");
  return guarded([&] {
    const auto spec = gmm::parse_input_spec(input_json);
    *spectrum_json = copy_string(gmm::spectrum_json(gmm::compute_spectrum(spec)));
    return GMM_OK;
  });
}

gmm_status gmm_oscillator_report(int n, double omega, const double* times, size_t count, char** report_json,
                                 int* all_pass) {
  if (report_json == nullptr) return null_arg("report_json");
  if (times == nullptr && count > 0) return null_arg("times");
  return guarded([&] {
    gmm::OscillatorConfig cfg;
    cfg.rank = n;
    cfg.omega = omega;
    const auto report = gmm::verify_oscillator(cfg, std::vector<double>(times, times + count));
    *report_json = copy_string(gmm::oscillator_report_json(report));
    if (all_pass != nullptr) *all_pass = report.all_pass() ? 1 : 0;
    return GMM_OK;
  });
}

gmm_status gmm_nambu_system_from_json(const char* system_json, gmm_nambu_system** out) {
  if (system_json == nullptr) return null_arg("system_json");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    *out = new gmm_nambu_system{gmm::parse_nambu_system(system_json)};
    return GMM_OK;
  });
}

void gmm_nambu_system_free(gmm_nambu_system* sys) { delete sys; }

gmm_status gmm_nambu_system_dim(const gmm_nambu_system* sys, int* dim) {
  if (sys == nullptr) return null_arg("sys");
  if (dim == nullptr) return null_arg("dim");
  *dim = sys->value.dim;
  return GMM_OK;
}

gmm_status gmm_nambu_integrate(const gmm_nambu_system* sys, const double* x0, size_t count, double t1, double dt,
                               char** trajectory_csv, char** summary_json) {
  if (sys == nullptr) return null_arg("sys");
  if (x0 == nullptr) return null_arg("x0");
  return guarded([&] {
    const auto result = gmm::integrate(sys->value, std::span<const double>(x0, count), t1, dt);
    if (trajectory_csv != nullptr) {
      std::ostringstream os;
      result.trajectory.write_csv(os);
      *trajectory_csv = copy_string(os.str());
    }
    if (summary_json != nullptr) *summary_json = copy_string(gmm::nambu_summary_json(result));
    if (result.diverged) return set_error(GMM_ERR_DIVERGENCE, result.message);
    return GMM_OK;
  });
}

}  // extern "C"
