#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <ctime>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "chromatic.hpp"
#include "cross_checks.hpp"
#include "errors.hpp"
#include "log_derivative.hpp"
#include "power_sums.hpp"
#include "rational.hpp"
#include "roots.hpp"

namespace chromagraph {

using nlohmann::json;

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& w : workers) w.join();
}

namespace {

ChromaticEngine& thread_engine() {
  thread_local ChromaticEngine engine;
  return engine;
}

bool is_integer_line(std::string_view line) {
  bool digit = false;
  for (char c : line) {
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c != ' ' && c != '\t' && c != '\r') {
      return false;
    }
  }
  return digit;
}

std::string trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return std::string(s);
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int precision_of(const RunConfig& c) { return c.precision_bits > 0 ? c.precision_bits : default_precision_bits(); }

json config_echo(const RunConfig& c, std::string_view command) {
  json k = json::array();
  for (int v : c.k_set) k.push_back(v);
  json out{{"command", command},
           {"input", c.input},
           {"k", k},
           {"K", to_string(c.K)},
           {"grid", to_string(c.grid_x_min) + ":" + to_string(c.grid_step)},
           {"format", c.format == OutputFormat::kJson ? "json" : "csv"},
           {"seed", c.seed},
           {"strict", c.strict},
           {"precision_bits", precision_of(c)}};
  if (command == "audit") {
    out["delta_range"] = {c.audit_delta.lo, c.audit_delta.hi};
    out["k_range"] = {c.audit_k.lo, c.audit_k.hi};
  }
  return out;
}

json envelope(const RunConfig& c, std::string_view command) {
  json doc{{"schema", kSchema},
           {"tool", {{"name", "chromagraph"}, {"version", kToolVersion}}},
           {"config", config_echo(c, command)}};
  if (!c.reproducible) doc["timestamp"] = timestamp_utc();
  return doc;
}

json stats_json(const GraphStats& s) {
  return {{"n", s.n}, {"m", s.m}, {"max_degree", s.max_degree}, {"triangles", s.triangles}, {"connected", s.connected}};
}

json record_head(std::size_t id, const Graph& g) {
  return {{"id", id}, {"graph6", to_graph6(g)}, {"stats", stats_json(stats(g))}};
}

json strings(const std::vector<mpz_class>& v, std::size_t from = 0) {
  json arr = json::array();
  for (std::size_t i = from; i < v.size(); ++i) arr.push_back(v[i].get_str());
  return arr;
}

json check(std::string name, bool pass, json detail = json::object()) {
  return {{"name", std::move(name)}, {"pass", pass}, {"detail", std::move(detail)}};
}

// --- verify -------------------------------------------------------------------

json verify_record(const RunConfig& cfg, std::size_t id, const Graph& g) {
  json rec = record_head(id, g);
  json checks = json::array();
  const auto st = stats(g);
  if (!st.connected) {
    checks.push_back(check("connectivity", false, {{"reason", "disconnected"}}));
    rec["checks"] = checks;
    rec["pass"] = false;
    rec["findings"] = json::array();
    return rec;
  }
  auto guarded = [&](const std::string& name, const std::function<json()>& body) {
    try {
      checks.push_back(body());
    } catch (const std::exception& e) {
      checks.push_back(check(name, false, {{"error", e.what()}}));
    }
  };

  const ChromPoly p = thread_engine().compute(g);

  for (int k : cfg.k_set) {
    guarded("theorem_region", [&] {
      const mpq_class x0 = theorem_boundary(st.max_degree, k);
      const std::vector<mpq_class> extra{x0 - mpq_class(1, 7), 3 * x0 / 2};
      const auto reports = verify_theorem_region(g, p, k, extra);
      bool ok = true;
      json pts = json::array();
      for (const auto& r : reports) {
        ok = ok && r.sign == -1;
        pts.push_back({{"x", to_string(r.x)}, {"sign", r.sign}});
      }
      json c = check("theorem_region", ok, {{"x0", to_string(x0)}, {"points", pts}});
      c["k"] = k;
      return c;
    });
  }

  guarded("c1_c2", [&] {
    const auto r = check_c1_c2(g, p);
    return check("c1_c2", r.c1_holds && r.c2_holds,
                 {{"c1", to_string(r.c1)}, {"c2", to_string(r.c2)}, {"expected_c1", to_string(r.expected_c1)},
                  {"expected_c2", to_string(r.expected_c2)}});
  });

  for (int k : cfg.k_set) {
    guarded("log_split_identity", [&] {
      bool ok = true;
      json pts = json::array();
      for (const mpq_class& x : {mpq_class(-1), mpq_class(-7, 3), theorem_boundary(st.max_degree, k)}) {
        const auto r = log_split_identity_check(p, k, x);
        ok = ok && r.holds;
        pts.push_back({{"x", to_string(x)}, {"holds", r.holds}});
      }
      json c = check("log_split_identity", ok, {{"points", pts}});
      c["k"] = k;
      return c;
    });
  }

  try {
    const RootSet roots = find_roots(p, precision_of(cfg));
    guarded("root_bound", [&] {
      const auto r = check_root_bound(roots, st.max_degree, cfg.K);
      return check("root_bound", r.satisfied,
                   {{"max_modulus", r.max_modulus.to_string(20)}, {"bound", r.bound.to_string(20)},
                    {"K", to_string(r.K)}, {"residual_bound", roots.residual_bound.to_string(6)}});
    });
    guarded("root_sum", [&] {
      const auto region = root_sum_region_check(roots, st.max_degree, cfg.K);
      const auto cross = root_sum_cross_check(p, roots, st.max_degree, cfg.K);
      double worst = 0.0;
      for (const auto& pt : cross.points) worst = std::max(worst, pt.relative_error);
      return check("root_sum", region.ok() && cross.ok,
                   {{"second_negative", region.second_negative},
                    {"third_negative", region.third_negative},
                    {"per_term_ok", region.per_term_ok},
                    {"worst_relative_error", worst}});
    });
  } catch (const std::exception& e) {
    checks.push_back(check("root_bound", false, {{"error", e.what()}}));
    checks.push_back(check("root_sum", false, {{"error", e.what()}}));
  }

  bool pass = true;
  for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
  rec["checks"] = checks;
  rec["pass"] = pass;
  rec["findings"] = json::array();
  return rec;
}

// --- scan ---------------------------------------------------------------------

struct ScanRecord {
  json record;
  std::string csv;
  std::size_t failures = 0;
  std::size_t findings = 0;
};

ScanRecord scan_record(const RunConfig& cfg, std::size_t id, const Graph& g) {
  ScanRecord out;
  json rec = record_head(id, g);
  const auto st = stats(g);
  json findings = json::array();
  json failures = json::array();
  json per_k = json::array();
  if (!st.connected) {
    failures.push_back({{"reason", "disconnected"}});
    out.failures = 1;
  } else {
    const ChromPoly p = thread_engine().compute(g);
    std::ostringstream csv;
    for (int k : cfg.k_set) {
      const auto scan = threshold_scan(g, p, k, cfg.grid_x_min, cfg.grid_step);
      const mpq_class x0 = theorem_boundary(st.max_degree, std::max(k, 1));
      json viol = json::array();
      for (const auto& x : scan.violations) {
        // k = 1 negativity holds on all of x < 0; for k >= 2 only x <= x0 is proven.
        const bool proven = k == 1 || x <= x0;
        json v{{"x", to_string(x)}, {"k", k}, {"region", proven ? "theorem" : "conjecture"}};
        viol.push_back(v);
        if (proven) {
          failures.push_back(v);
        } else {
          findings.push_back(v);
        }
      }
      for (const auto& pt : scan.points) csv << id << ',' << to_string(pt.x) << ',' << k << ',' << pt.sign << '\n';
      per_k.push_back({{"k", k},
                       {"x0", to_string(x0)},
                       {"points", scan.points.size()},
                       {"empirical_threshold",
                        scan.empirical_threshold ? json(to_string(*scan.empirical_threshold)) : json(nullptr)},
                       {"violations", viol}});
    }
    out.csv = csv.str();
    out.failures = failures.size();
  }
  out.findings = findings.size();
  rec["scans"] = per_k;
  rec["failures"] = failures;
  rec["findings"] = findings;
  rec["pass"] = failures.empty();
  out.record = std::move(rec);
  return out;
}

}  // namespace

std::vector<Graph> load_corpus_text(std::string_view text, std::string_view source_name) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t line_no = 0;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto nl = rest.find('\n');
    auto line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    lines.emplace_back(line_no, std::move(t));
  }
  std::vector<Graph> out;
  if (lines.empty()) return out;

  const std::string where(source_name);
  if (is_integer_line(lines.front().second)) {
    try {
      out.push_back(parse_edge_list(text));
    } catch (const ParseError& e) {
      throw ParseError(where + ":" + std::to_string(e.position()) + ": " + e.what(), e.position());
    } catch (const Error& e) {
      throw ParseError(where + ": " + e.what(), 0);
    }
    return out;
  }
  for (const auto& [no, line] : lines) {
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(where + ":" + std::to_string(no) + ": " + e.what(), no);
    }
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  const std::string t = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bad " + std::string(what) + ": '" + t + "'");
  }
  return v;
}

}  // namespace

std::vector<int> parse_k_list(std::string_view text) {
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto dash = item.find('-', 1);
    if (dash == std::string_view::npos) {
      out.push_back(parse_int(item, "k"));
    } else {
      const int lo = parse_int(item.substr(0, dash), "k");
      const int hi = parse_int(item.substr(dash + 1), "k");
      if (lo > hi) throw Error(ErrorCode::kInvalidArgument, "inverted k range '" + std::string(item) + "'");
      if (hi - lo > 64) throw Error(ErrorCode::kInvalidArgument, "k range too wide");
      for (int k = lo; k <= hi; ++k) out.push_back(k);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntRange parse_int_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  return {parse_int(text.substr(0, colon), "range"), parse_int(text.substr(colon + 1), "range")};
}

std::pair<mpq_class, mpq_class> parse_grid(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::kInvalidArgument, "grid must be XMIN:STEP");
  try {
    return {parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad grid: ") + e.what());
  }
}

void validate_k_set(const std::vector<int>& k_set, int lo) {
  for (int k : k_set) {
    if (k < lo || k > 64) {
      throw Error(ErrorCode::kInvalidArgument,
                  "k=" + std::to_string(k) + " outside [" + std::to_string(lo) + ", 64]");
    }
  }
}

RunOutput run_poly(const RunConfig& config, const std::vector<Graph>& corpus) {
  if (config.format != OutputFormat::kJson) throw Error(ErrorCode::kInvalidArgument, "poly supports --format json only");
  std::vector<json> records(corpus.size());
  parallel_for(corpus.size(), config.jobs, [&](std::size_t i) {
    const Graph& g = corpus[i];
    json rec = record_head(i, g);
    const ChromPoly p = thread_engine().compute(g);
    const auto w = whitney_from_poly(p);
    const auto eps = mean_size_epsilon(p);
    rec["coeffs"] = strings(p.coeffs());
    rec["polynomial"] = to_string(p.poly());
    rec["whitney"] = strings(w.a, 1);
    rec["chi"] = chromatic_number(p);
    rec["epsilon"] = to_string(eps.epsilon);
    rec["epsilon_at_minus_one"] = to_string(eps.epsilon_at_minus_one);
    records[i] = std::move(rec);
  });
  json doc = envelope(config, "poly");
  doc["records"] = records;
  doc["summary"] = {{"graphs", corpus.size()}};
  return {doc.dump(2) + "\n", kExitClean};
}

RunOutput run_verify(const RunConfig& config, const std::vector<Graph>& corpus) {
  if (config.format != OutputFormat::kJson) throw Error(ErrorCode::kInvalidArgument, "verify supports --format json only");
  validate_k_set(config.k_set, 2);
  std::vector<json> records(corpus.size());
  parallel_for(corpus.size(), config.jobs,
               [&](std::size_t i) { records[i] = verify_record(config, i, corpus[i]); });
  std::size_t checks = 0, failures = 0;
  for (const auto& r : records) {
    for (const auto& c : r["checks"]) {
      ++checks;
      if (!c["pass"].get<bool>()) ++failures;
    }
  }
  json doc = envelope(config, "verify");
  doc["records"] = records;
  doc["summary"] = {{"graphs", corpus.size()}, {"checks", checks}, {"failures", failures}, {"findings", 0}};
  return {doc.dump(2) + "\n", failures == 0 ? kExitClean : kExitCheckFailure};
}

RunOutput run_scan(const RunConfig& config, const std::vector<Graph>& corpus) {
  validate_k_set(config.k_set, 1);
  if (!(config.grid_x_min < 0) || !(config.grid_step > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "grid needs XMIN < 0 < STEP");
  }
  std::vector<ScanRecord> records(corpus.size());
  parallel_for(corpus.size(), config.jobs, [&](std::size_t i) { records[i] = scan_record(config, i, corpus[i]); });
  std::size_t failures = 0, findings = 0;
  for (const auto& r : records) {
    failures += r.failures;
    findings += r.findings;
  }
  int exit = kExitClean;
  if (failures > 0) {
    exit = kExitCheckFailure;
  } else if (findings > 0 && config.strict) {
    exit = kExitFinding;
  }
  if (config.format == OutputFormat::kCsv) {
    std::string csv = "graph,x,k,sign\n";
    for (const auto& r : records) csv += r.csv;
    return {csv, exit};
  }
  json doc = envelope(config, "scan");
  json recs = json::array();
  for (auto& r : records) recs.push_back(std::move(r.record));
  doc["records"] = recs;
  doc["summary"] = {{"graphs", corpus.size()},
                    {"checks", corpus.size() * config.k_set.size()},
                    {"failures", failures},
                    {"findings", findings}};
  return {doc.dump(2) + "\n", exit};
}

RunOutput run_audit(const RunConfig& config) {
  const auto rows = audit_theorem_bound(config.audit_delta, config.audit_k);
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const AuditRow& r) { return r.pass; });
  const int exit = ok ? kExitClean : kExitCheckFailure;
  if (config.format == OutputFormat::kCsv) return {audit_csv(rows), exit};
  json doc = envelope(config, "audit");
  json arr = json::array();
  std::size_t failures = 0;
  for (const auto& r : rows) {
    if (!r.pass) ++failures;
    arr.push_back({{"Delta", r.delta},
                   {"k", r.k},
                   {"x", to_string(r.x)},
                   {"f1", to_string(r.f1)},
                   {"f", to_string(r.f)},
                   {"pass", r.pass},
                   {"failure", r.failure}});
  }
  doc["rows"] = arr;
  doc["summary"] = {{"rows", rows.size()}, {"failures", failures}};
  return {doc.dump(2) + "\n", exit};
}

}  // namespace chromagraph
