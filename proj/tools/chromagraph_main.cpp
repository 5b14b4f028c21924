#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chromagraph/chromagraph.h"

namespace {

constexpr int kExitUsage = 2;

struct Options {
  std::string input;
  std::string family;
  int exhaustive = 0;
  std::string k;
  std::string K;
  std::string grid;
  std::string format = "json";
  unsigned jobs = 0;
  std::uint64_t seed = 1;
  bool strict = false;
  bool reproducible = false;
  std::string delta;
  std::string audit_k;
};

int fail(const std::string& what) {
  std::cerr << "chromagraph: " << what << '\n';
  return kExitUsage;
}

int status_exit(cg_status s) {
  switch (s) {
    case CG_ERR_PARSE:
    case CG_ERR_INVALID_ARGUMENT:
    case CG_ERR_DOMAIN:
    case CG_ERR_LIMIT:
      return kExitUsage;
    default:
      return 1;
  }
}

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return !in.bad();
}

cg_status configure(const Options& o, cg_run_config* c, const std::string& label) {
  cg_status s = cg_run_config_set_input_label(c, label.c_str());
  if (s == CG_OK && !o.k.empty()) s = cg_run_config_set_k(c, o.k.c_str());
  if (s == CG_OK && !o.K.empty()) s = cg_run_config_set_K(c, o.K.c_str());
  if (s == CG_OK && !o.grid.empty()) s = cg_run_config_set_grid(c, o.grid.c_str());
  if (s == CG_OK) s = cg_run_config_set_format(c, o.format.c_str());
  if (s == CG_OK) s = cg_run_config_set_jobs(c, o.jobs);
  if (s == CG_OK) s = cg_run_config_set_seed(c, o.seed);
  if (s == CG_OK) s = cg_run_config_set_strict(c, o.strict ? 1 : 0);
  if (s == CG_OK) s = cg_run_config_set_reproducible(c, o.reproducible ? 1 : 0);
  if (s == CG_OK && !o.delta.empty()) s = cg_run_config_set_audit_delta(c, o.delta.c_str());
  if (s == CG_OK && !o.audit_k.empty()) s = cg_run_config_set_audit_k(c, o.audit_k.c_str());
  return s;
}

int run(const std::string& command, const Options& o) {
  const bool audit = command == "audit";
  const int sources = (o.input.empty() ? 0 : 1) + (o.family.empty() ? 0 : 1) + (o.exhaustive != 0 ? 1 : 0);
  if (!audit && sources != 1) return fail("exactly one of --input, --family, --exhaustive is required");
  if (audit && sources != 0) return fail("audit takes no graph input");

  std::string label;
  cg_corpus* corpus = nullptr;
  cg_status s = CG_OK;
  if (!o.input.empty()) {
    std::string text;
    if (!read_input(o.input, text)) return fail("cannot read " + o.input);
    label = "file:" + o.input;
    s = cg_corpus_from_text(text.c_str(), o.input.c_str(), &corpus);
  } else if (!o.family.empty()) {
    label = "family:" + o.family;
    s = cg_corpus_from_family(o.family.c_str(), o.seed, &corpus);
  } else if (o.exhaustive != 0) {
    label = "exhaustive:" + std::to_string(o.exhaustive);
    s = cg_corpus_exhaustive(o.exhaustive, &corpus);
  } else {
    label = "audit";
  }
  if (s != CG_OK) return fail(cg_last_error());

  cg_run_config* config = cg_run_config_new();
  if (config == nullptr) {
    cg_corpus_free(corpus);
    return fail("out of memory");
  }
  s = configure(o, config, label);
  if (s != CG_OK) {
    const int code = fail(cg_last_error());
    cg_run_config_free(config);
    cg_corpus_free(corpus);
    return code;
  }

  char* out = nullptr;
  int exit_code = 0;
  if (command == "poly") {
    s = cg_run_poly(config, corpus, &out, &exit_code);
  } else if (command == "verify") {
    s = cg_run_verify(config, corpus, &out, &exit_code);
  } else if (command == "scan") {
    s = cg_run_scan(config, corpus, &out, &exit_code);
  } else {
    s = cg_run_audit(config, &out, &exit_code);
  }
  cg_run_config_free(config);
  cg_corpus_free(corpus);
  if (s != CG_OK) {
    std::cerr << "chromagraph: " << cg_last_error() << '\n';
    return status_exit(s);
  }
  std::fwrite(out, 1, std::char_traits<char>::length(out), stdout);
  std::fflush(stdout);
  cg_string_free(out);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chromatic polynomial and log-derivative sign checks"};
  app.set_version_flag("--version", cg_version());
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool graphs) {
    if (graphs) {
      sub->add_option("--input", o.input, "graph6 file (one per line) or edge-list file; - for stdin");
      sub->add_option("--family", o.family, "KIND:N with KIND in complete, path, cycle, star, random_tree, random_connected");
      sub->add_option("--exhaustive", o.exhaustive, "all labeled connected graphs on N vertices")
          ->check(CLI::Range(1, 6));
      sub->add_option("--k", o.k, "derivative orders, e.g. 2,3,5-8");
      sub->add_option("--K", o.K, "root-modulus constant, e.g. 17/4");
      sub->add_option("--grid", o.grid, "scan grid XMIN:STEP");
    } else {
      sub->add_option("--delta", o.delta, "Delta range A:B (default 1:20)");
      sub->add_option("--k", o.audit_k, "k range A:B (default 2:64)");
    }
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--jobs", o.jobs, "worker threads, 0 for all cores");
    sub->add_option("--seed", o.seed, "seed for random families");
    sub->add_flag("--strict", o.strict, "exit 3 on conjecture-region findings");
    sub->add_flag("--reproducible", o.reproducible, "omit the timestamp");
  };
  add_common(app.add_subcommand("poly", "chromatic polynomial, Whitney numbers, chi, epsilon"), true);
  add_common(app.add_subcommand("verify", "theorem-region, identity and root checks"), true);
  add_common(app.add_subcommand("scan", "log-derivative signs on a grid"), true);
  add_common(app.add_subcommand("audit", "exact audit of the bounding polynomial"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return run(app.get_subcommands().front()->get_name(), o);
}
