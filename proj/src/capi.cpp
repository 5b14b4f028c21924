#include "chromagraph/chromagraph.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "chromatic.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "log_derivative.hpp"
#include "rational.hpp"
#include "report.hpp"

using namespace chromagraph;

struct cg_graph {
  Graph g;
};

struct cg_poly {
  ChromPoly p;
};

struct cg_corpus {
  std::vector<Graph> graphs;
};

struct cg_run_config {
  RunConfig config;
};

namespace {

thread_local std::string last_error;

cg_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return CG_ERR_PARSE;
    case ErrorCode::kInvalidArgument: return CG_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDomain: return CG_ERR_DOMAIN;
    case ErrorCode::kLimit: return CG_ERR_LIMIT;
    case ErrorCode::kNoConvergence: return CG_ERR_NO_CONVERGENCE;
    case ErrorCode::kDisconnected: return CG_ERR_DISCONNECTED;
    case ErrorCode::kInternal: return CG_ERR_INTERNAL;
  }
  return CG_ERR_INTERNAL;
}

template <class F>
cg_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return CG_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CG_ERR_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CG_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cg_status run(const cg_run_config* c, const cg_corpus* corpus, char** out, int* exit_code,
              RunOutput (*fn)(const RunConfig&, const std::vector<Graph>&)) {
  return guard([&] {
    require(c, "config");
    require(corpus, "corpus");
    require(out, "out");
    require(exit_code, "exit_code");
    RunOutput r = fn(c->config, corpus->graphs);
    *out = dup(r.text);
    *exit_code = r.exit_code;
  });
}

}  // namespace

extern "C" {

const char* cg_last_error(void) { return last_error.c_str(); }

const char* cg_version(void) { return kToolVersion.data(); }

void cg_string_free(char* s) { std::free(s); }

cg_status cg_graph_from_graph6(const char* text, cg_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new cg_graph{parse_graph6(text)};
  });
}

cg_status cg_graph_from_edge_list(const char* text, cg_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new cg_graph{parse_edge_list(text)};
  });
}

cg_status cg_graph_family(const char* spec, uint64_t seed, cg_graph** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "out");
    const auto [kind, n] = parse_family_spec(spec);
    *out = new cg_graph{generate_family(kind, n, seed)};
  });
}

void cg_graph_free(cg_graph* g) { delete g; }

cg_status cg_graph_to_graph6(const cg_graph* g, char** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup(to_graph6(g->g));
  });
}

cg_status cg_graph_stats_get(const cg_graph* g, cg_graph_stats* out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    const GraphStats s = stats(g->g);
    *out = {s.n, s.m, s.max_degree, s.triangles, s.connected ? 1 : 0};
  });
}

cg_status cg_corpus_exhaustive(int n, cg_corpus** out) {
  return guard([&] {
    require(out, "out");
    if (n < 1 || n > kMaxExhaustiveOrder) {
      throw Error(ErrorCode::kLimit, "exhaustive order must be in [1, " + std::to_string(kMaxExhaustiveOrder) + "]");
    }
    *out = new cg_corpus{enumerate_labeled_connected(n)};
  });
}

cg_status cg_corpus_from_text(const char* text, const char* source, cg_corpus** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new cg_corpus{load_corpus_text(text, source != nullptr ? source : "<input>")};
  });
}

cg_status cg_corpus_from_family(const char* spec, uint64_t seed, cg_corpus** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "out");
    const auto [kind, n] = parse_family_spec(spec);
    *out = new cg_corpus{{generate_family(kind, n, seed)}};
  });
}

size_t cg_corpus_size(const cg_corpus* c) { return c == nullptr ? 0 : c->graphs.size(); }

cg_status cg_corpus_get(const cg_corpus* c, size_t i, cg_graph** out) {
  return guard([&] {
    require(c, "corpus");
    require(out, "out");
    if (i >= c->graphs.size()) throw Error(ErrorCode::kInvalidArgument, "corpus index out of range");
    *out = new cg_graph{c->graphs[i]};
  });
}

void cg_corpus_free(cg_corpus* c) { delete c; }

cg_status cg_chromatic_polynomial(const cg_graph* g, cg_poly** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = new cg_poly{chromatic_polynomial(g->g)};
  });
}

void cg_poly_free(cg_poly* p) { delete p; }

int cg_poly_degree(const cg_poly* p) { return p == nullptr ? -1 : p->p.order(); }

cg_status cg_poly_to_json(const cg_poly* p, char** out) {
  return guard([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup(poly_to_json(p->p.poly()));
  });
}

cg_status cg_chromatic_number(const cg_poly* p, int* out) {
  return guard([&] {
    require(p, "poly");
    require(out, "out");
    *out = chromatic_number(p->p);
  });
}

cg_status cg_log_derivative_sign(const cg_poly* p, int k, const char* x, int* sign) {
  return guard([&] {
    require(p, "poly");
    require(x, "x");
    require(sign, "sign");
    if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
    *sign = eval_sign_exact(log_deriv_rational(p->p, k), parse_rational(x)).sign;
  });
}

cg_run_config* cg_run_config_new(void) { return new (std::nothrow) cg_run_config{}; }

void cg_run_config_free(cg_run_config* c) { delete c; }

cg_status cg_run_config_set_input_label(cg_run_config* c, const char* label) {
  return guard([&] {
    require(c, "config");
    require(label, "label");
    c->config.input = label;
  });
}

cg_status cg_run_config_set_k(cg_run_config* c, const char* list) {
  return guard([&] {
    require(c, "config");
    require(list, "list");
    auto ks = parse_k_list(list);
    validate_k_set(ks, 1);
    c->config.k_set = std::move(ks);
  });
}

cg_status cg_run_config_set_K(cg_run_config* c, const char* rational) {
  return guard([&] {
    require(c, "config");
    require(rational, "K");
    mpq_class K = parse_rational(rational);
    if (K <= 0) throw Error(ErrorCode::kInvalidArgument, "K must be positive");
    c->config.K = K;
  });
}

cg_status cg_run_config_set_grid(cg_run_config* c, const char* grid) {
  return guard([&] {
    require(c, "config");
    require(grid, "grid");
    auto [x_min, step] = parse_grid(grid);
    if (!(x_min < 0) || !(step > 0)) throw Error(ErrorCode::kInvalidArgument, "grid needs XMIN < 0 < STEP");
    c->config.grid_x_min = x_min;
    c->config.grid_step = step;
  });
}

cg_status cg_run_config_set_format(cg_run_config* c, const char* format) {
  return guard([&] {
    require(c, "config");
    require(format, "format");
    const std::string f = format;
    if (f == "json") {
      c->config.format = OutputFormat::kJson;
    } else if (f == "csv") {
      c->config.format = OutputFormat::kCsv;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "format must be json or csv");
    }
  });
}

cg_status cg_run_config_set_jobs(cg_run_config* c, unsigned jobs) {
  return guard([&] {
    require(c, "config");
    c->config.jobs = jobs;
  });
}

cg_status cg_run_config_set_seed(cg_run_config* c, uint64_t seed) {
  return guard([&] {
    require(c, "config");
    c->config.seed = seed;
  });
}

cg_status cg_run_config_set_strict(cg_run_config* c, int strict) {
  return guard([&] {
    require(c, "config");
    c->config.strict = strict != 0;
  });
}

cg_status cg_run_config_set_reproducible(cg_run_config* c, int reproducible) {
  return guard([&] {
    require(c, "config");
    c->config.reproducible = reproducible != 0;
  });
}

cg_status cg_run_config_set_audit_delta(cg_run_config* c, const char* range) {
  return guard([&] {
    require(c, "config");
    require(range, "range");
    c->config.audit_delta = parse_int_range(range);
  });
}

cg_status cg_run_config_set_audit_k(cg_run_config* c, const char* range) {
  return guard([&] {
    require(c, "config");
    require(range, "range");
    c->config.audit_k = parse_int_range(range);
  });
}

cg_status cg_run_poly(const cg_run_config* c, const cg_corpus* corpus, char** out, int* exit_code) {
  return run(c, corpus, out, exit_code, run_poly);
}

cg_status cg_run_verify(const cg_run_config* c, const cg_corpus* corpus, char** out, int* exit_code) {
  return run(c, corpus, out, exit_code, run_verify);
}

cg_status cg_run_scan(const cg_run_config* c, const cg_corpus* corpus, char** out, int* exit_code) {
  return run(c, corpus, out, exit_code, run_scan);
}

cg_status cg_run_audit(const cg_run_config* c, char** out, int* exit_code) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    require(exit_code, "exit_code");
    RunOutput r = run_audit(c->config);
    *out = dup(r.text);
    *exit_code = r.exit_code;
  });
}

}  // extern "C"
