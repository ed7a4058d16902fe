// Copyright 2026 The rnnbp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rnnbp/rnnbp.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "harness.hpp"

struct rnnbp_solution {
  rnnbp::ExampleCase example;
  rnnbp::CaseRun run;
  std::string csv;
};

struct rnnbp_table {
  std::vector<rnnbp::RunRecord> records;
  std::string csv_timed;
  std::string csv_untimed;
};

namespace {

thread_local std::string g_last_error;

rnnbp_status fail(rnnbp_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

// Maps the core's exceptions onto status codes.
template <class F>
rnnbp_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return RNNBP_OK;
  } catch (const std::out_of_range& e) {
    return fail(RNNBP_ERR_UNKNOWN_CASE, e.what());
  } catch (const std::domain_error& e) {
    return fail(RNNBP_ERR_UNSUPPORTED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RNNBP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const rnnbp::NumericError& e) {
    return fail(RNNBP_ERR_NUMERIC, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RNNBP_ERR_INTERNAL, "out of memory");
  } catch (const std::runtime_error& e) {
    return fail(RNNBP_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(RNNBP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RNNBP_ERR_INTERNAL, "unknown error");
  }
}

rnnbp::Method to_method(rnnbp_method m) {
  switch (m) {
    case RNNBP_METHOD_RNN:
      return rnnbp::Method::Rnn;
    case RNNBP_METHOD_SCALING:
      return rnnbp::Method::RnnScaling;
    case RNNBP_METHOD_BP:
      return rnnbp::Method::RnnBp;
  }
  throw std::invalid_argument("unknown method code");
}

rnnbp_method from_method(rnnbp::Method m) {
  switch (m) {
    case rnnbp::Method::Rnn:
      return RNNBP_METHOD_RNN;
    case rnnbp::Method::RnnScaling:
      return RNNBP_METHOD_SCALING;
    case rnnbp::Method::RnnBp:
      return RNNBP_METHOD_BP;
  }
  return RNNBP_METHOD_RNN;
}

rnnbp::RunSettings to_settings(const rnnbp_settings* s) {
  if (!s) throw std::invalid_argument("null settings");
  if (!s->case_id) throw std::invalid_argument("settings.case_id is null");
  if (s->n_architecture > RNNBP_MAX_LAYERS) throw std::invalid_argument("too many layers");
  if (s->init != RNNBP_INIT_FANIN && s->init != RNNBP_INIT_UNIFORM) throw std::invalid_argument("unknown init code");
  rnnbp::RunSettings r;
  r.case_id = s->case_id;
  if (s->k >= 0) r.k = s->k;
  r.method = to_method(s->method);
  r.N = s->N;
  r.architecture.assign(s->architecture, s->architecture + s->n_architecture);
  r.init = s->init == RNNBP_INIT_UNIFORM ? rnnbp::InitKind::UniformRm : rnnbp::InitKind::FanInUniform;
  r.rm = s->rm;
  r.seed = s->seed;
  r.rcond = s->rcond;
  r.n_test = s->n_test;
  r.hidden_widths();  // validates the architecture
  return r;
}

void fill_record(const rnnbp::RunRecord& r, rnnbp_record* out) {
  std::memset(out, 0, sizeof(*out));
  std::strncpy(out->case_id, r.case_id.c_str(), sizeof(out->case_id) - 1);
  out->method = from_method(r.method);
  out->pde = r.pde == rnnbp::Pde::Poisson ? RNNBP_PDE_POISSON : RNNBP_PDE_BIHARMONIC;
  out->N = r.N;
  out->M = r.M;
  out->init = r.init == rnnbp::InitKind::UniformRm ? RNNBP_INIT_UNIFORM : RNNBP_INIT_FANIN;
  out->rm = r.rm;
  out->is_median = r.seed == "median";
  out->seed = out->is_median ? 0 : std::stoull(r.seed);
  out->rcond = r.rcond;
  out->rel_l2 = r.rel_l2;
  out->residual = r.residual;
  out->rank = r.rank;
  out->time_ms = r.time_ms;
}

}  // namespace

extern "C" {

const char* rnnbp_version(void) { return "0.1.0"; }

const char* rnnbp_last_error(void) { return g_last_error.c_str(); }

const char* rnnbp_status_string(rnnbp_status status) {
  switch (status) {
    case RNNBP_OK:
      return "ok";
    case RNNBP_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case RNNBP_ERR_UNKNOWN_CASE:
      return "unknown case";
    case RNNBP_ERR_UNSUPPORTED:
      return "unsupported combination";
    case RNNBP_ERR_NUMERIC:
      return "numerical failure";
    case RNNBP_ERR_IO:
      return "i/o error";
    case RNNBP_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void rnnbp_settings_init(rnnbp_settings* s) {
  if (!s) return;
  std::memset(s, 0, sizeof(*s));
  s->case_id = "p1.1";
  s->k = -1;
  s->method = RNNBP_METHOD_RNN;
  s->N = 16;
  const int arch[] = {2, 100, 300, 1};
  std::memcpy(s->architecture, arch, sizeof(arch));
  s->n_architecture = 4;
  s->init = RNNBP_INIT_FANIN;
  s->rm = 1.0;
  s->seed = 0;
  s->rcond = rnnbp::kDefaultRcond;
  s->n_test = rnnbp::kDefaultTestPoints;
}

size_t rnnbp_case_count(void) { return rnnbp::case_registry().size(); }

rnnbp_status rnnbp_case_info(size_t index, const char** id, const char** description, rnnbp_pde* pde,
                             int* default_k) {
  const auto& reg = rnnbp::case_registry();
  if (index >= reg.size()) return fail(RNNBP_ERR_INVALID_ARGUMENT, "case index out of range");
  const auto& c = reg[index];
  if (id) *id = c.id.c_str();
  if (description) *description = c.description.c_str();
  if (pde) *pde = c.pde == rnnbp::Pde::Poisson ? RNNBP_PDE_POISSON : RNNBP_PDE_BIHARMONIC;
  if (default_k) *default_k = c.has_k ? c.default_k : -1;
  return RNNBP_OK;
}

rnnbp_status rnnbp_solve(const rnnbp_settings* s, rnnbp_solution** out) {
  if (!out) return fail(RNNBP_ERR_INVALID_ARGUMENT, "null output handle");
  *out = nullptr;
  return guarded([&] {
    const rnnbp::RunSettings rs = to_settings(s);
    rnnbp::ExampleCase c = rnnbp::make_case(rs.case_id, rs.k);
    rnnbp::CaseRun run = rnnbp::run_case_full(c, rs);
    auto* h = new rnnbp_solution{std::move(c), std::move(run), {}};
    h->csv = rnnbp::to_csv({h->run.record});
    *out = h;
  });
}

void rnnbp_solution_free(rnnbp_solution* sol) { delete sol; }

rnnbp_status rnnbp_solution_record(const rnnbp_solution* sol, rnnbp_record* out) {
  if (!sol || !out) return fail(RNNBP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { fill_record(sol->run.record, out); });
}

rnnbp_status rnnbp_solution_csv(const rnnbp_solution* sol, const char** out) {
  if (!sol || !out) return fail(RNNBP_ERR_INVALID_ARGUMENT, "null argument");
  *out = sol->csv.c_str();
  return RNNBP_OK;
}

rnnbp_status rnnbp_solution_eval(const rnnbp_solution* sol, double x, double y, double* value, double* exact) {
  if (!sol) return fail(RNNBP_ERR_INVALID_ARGUMENT, "null solution");
  return guarded([&] {
    if (!sol->example.domain.contains_closed({x, y}, 1e-12))
      throw std::invalid_argument("point lies outside the closed domain");
    if (value) *value = sol->run.solution.value(x, y);
    if (exact) *exact = sol->example.exact.value(x, y);
  });
}

rnnbp_status rnnbp_solution_heatmap(const rnnbp_solution* sol, int resolution, const char* path, double* max_error) {
  if (!sol || !path) return fail(RNNBP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto st = rnnbp::write_heatmap(sol->run.solution, sol->example.exact, resolution, path);
    if (max_error) *max_error = st.max_error;
  });
}

rnnbp_status rnnbp_dump(const rnnbp_settings* s, const char* prefix) {
  if (!prefix) return fail(RNNBP_ERR_INVALID_ARGUMENT, "null prefix");
  return guarded([&] {
    const rnnbp::RunSettings rs = to_settings(s);
    rnnbp::write_debug_dump(rnnbp::make_case(rs.case_id, rs.k), rs, prefix);
  });
}

rnnbp_status rnnbp_sweep(const rnnbp_sweep_settings* s, rnnbp_table** out) {
  if (!s || !out) return fail(RNNBP_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    rnnbp::SweepSettings ss;
    ss.base = to_settings(&s->base);
    for (size_t i = 0; i < s->n_methods; ++i) ss.methods.push_back(to_method(s->methods[i]));
    ss.Ns.assign(s->Ns, s->Ns + s->n_Ns);
    if (s->n_Ms) ss.Ms.assign(s->Ms, s->Ms + s->n_Ms);
    if (s->n_rms) ss.rms.assign(s->rms, s->rms + s->n_rms);
    ss.seeds.assign(s->seeds, s->seeds + s->n_seeds);
    auto* t = new rnnbp_table;
    t->records = rnnbp::sweep(ss);
    t->csv_timed = rnnbp::to_csv(t->records, true);
    t->csv_untimed = rnnbp::to_csv(t->records, false);
    *out = t;
  });
}

size_t rnnbp_table_rows(const rnnbp_table* t) { return t ? t->records.size() : 0; }

rnnbp_status rnnbp_table_row(const rnnbp_table* t, size_t index, rnnbp_record* out) {
  if (!t || !out) return fail(RNNBP_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= t->records.size()) return fail(RNNBP_ERR_INVALID_ARGUMENT, "row index out of range");
  return guarded([&] { fill_record(t->records[index], out); });
}

const char* rnnbp_table_csv(const rnnbp_table* t, int include_timing) {
  if (!t) return "";
  return include_timing ? t->csv_timed.c_str() : t->csv_untimed.c_str();
}

void rnnbp_table_free(rnnbp_table* t) { delete t; }

}  // extern "C"
