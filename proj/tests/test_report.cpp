#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>

#include <json.hpp>

#include "errors.hpp"
#include "report.hpp"

using namespace chromagraph;
using nlohmann::json;

namespace {

RunConfig reproducible() {
  RunConfig c;
  c.reproducible = true;
  c.input = "test";
  return c;
}

}  // namespace

TEST(Options, KList) {
  EXPECT_EQ(parse_k_list("2,3,5-8"), (std::vector<int>{2, 3, 5, 6, 7, 8}));
  EXPECT_EQ(parse_k_list("4,2,2"), (std::vector<int>{2, 4}));
  EXPECT_THROW(parse_k_list("5-3"), Error);
  EXPECT_THROW(parse_k_list("a"), Error);
  EXPECT_THROW(parse_k_list(""), Error);
  EXPECT_THROW(validate_k_set({1}, 2), Error);
  EXPECT_THROW(validate_k_set({65}, 1), Error);
}

TEST(Options, RangesAndGrid) {
  const IntRange r = parse_int_range("1:20");
  EXPECT_EQ(r.lo, 1);
  EXPECT_EQ(r.hi, 20);
  EXPECT_EQ(parse_int_range("7").hi, 7);
  const auto [x, s] = parse_grid("-10:1/4");
  EXPECT_EQ(x, -10);
  EXPECT_EQ(s, mpq_class(1, 4));
  EXPECT_THROW(parse_grid("-10"), Error);
}

TEST(Corpus, Graph6Lines) {
  const auto graphs = load_corpus_text("Bw\n# comment\n\nC~\nA_\n", "f.g6");
  ASSERT_EQ(graphs.size(), 3U);
  EXPECT_EQ(graphs[1].size(), 6U);
}

TEST(Corpus, EdgeList) {
  const auto graphs = load_corpus_text("# header\n3\n0 1\n1 2\n", "f.txt");
  ASSERT_EQ(graphs.size(), 1U);
  EXPECT_EQ(graphs[0].size(), 2U);
}

TEST(Corpus, ErrorsNameSourceAndLine) {
  try {
    load_corpus_text("Bw\nC~\nD?\n", "bad.g6");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("bad.g6:3:", 0), 0U) << e.what();
  }
  try {
    load_corpus_text("3\n0 1\n0 9\n", "bad.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("bad.txt:3:", 0), 0U) << e.what();
  }
  EXPECT_TRUE(load_corpus_text("", "empty").empty());
}

TEST(Poly, TriangleRecord) {
  RunConfig c = reproducible();
  const auto out = run_poly(c, {generate_family(Family::kComplete, 3)});
  EXPECT_EQ(out.exit_code, kExitClean);
  const json doc = json::parse(out.text);
  EXPECT_EQ(doc["schema"], "chromagraph/1");
  EXPECT_FALSE(doc.contains("timestamp"));
  const auto& rec = doc["records"][0];
  EXPECT_EQ(rec["coeffs"], json({"0", "2", "-3", "1"}));
  EXPECT_EQ(rec["chi"], 3);
  EXPECT_EQ(rec["whitney"], json({"2", "3", "1"}));
  EXPECT_EQ(rec["epsilon"], "7/6");
  c.format = OutputFormat::kCsv;
  EXPECT_THROW(run_poly(c, {}), Error);
}

TEST(Poly, TimestampUnlessReproducible) {
  RunConfig c;
  EXPECT_TRUE(json::parse(run_poly(c, {}).text).contains("timestamp"));
}

TEST(Verify, PathOfTwoPasses) {
  const auto out = run_verify(reproducible(), {generate_family(Family::kPath, 2)});
  EXPECT_EQ(out.exit_code, kExitClean);
  const json doc = json::parse(out.text);
  EXPECT_EQ(doc["summary"]["failures"], 0);
  for (const auto& c : doc["records"][0]["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
}

TEST(Verify, DisconnectedRecordFailsAlone) {
  const std::vector<Graph> corpus{generate_family(Family::kCycle, 4), Graph(4, {{0, 1}, {2, 3}}),
                                  generate_family(Family::kStar, 5)};
  const auto out = run_verify(reproducible(), corpus);
  EXPECT_EQ(out.exit_code, kExitCheckFailure);
  const json doc = json::parse(out.text);
  EXPECT_TRUE(doc["records"][0]["pass"].get<bool>());
  EXPECT_FALSE(doc["records"][1]["pass"].get<bool>());
  EXPECT_EQ(doc["records"][1]["checks"][0]["detail"]["reason"], "disconnected");
  EXPECT_TRUE(doc["records"][2]["pass"].get<bool>());
  EXPECT_EQ(doc["summary"]["failures"], 1);
}

TEST(Verify, RejectsSmallK) {
  RunConfig c = reproducible();
  c.k_set = {1, 2};
  EXPECT_THROW(run_verify(c, {}), Error);
}

TEST(Scan, TreesHaveNoFindings) {
  RunConfig c = reproducible();
  c.k_set = {2, 3, 4, 5};
  std::vector<Graph> trees;
  for (int n = 2; n <= 8; ++n) trees.push_back(generate_family(Family::kRandomTree, n, n));
  const auto out = run_scan(c, trees);
  EXPECT_EQ(out.exit_code, kExitClean);
  const json doc = json::parse(out.text);
  EXPECT_EQ(doc["summary"]["findings"], 0);
  EXPECT_EQ(doc["summary"]["failures"], 0);
}

TEST(Scan, CompleteSixToNearZero) {
  RunConfig c = reproducible();
  c.k_set = {2};
  c.grid_x_min = -5;
  c.grid_step = mpq_class(1, 100);
  c.strict = true;
  const auto out = run_scan(c, {generate_family(Family::kComplete, 6)});
  EXPECT_EQ(out.exit_code, kExitClean);
  const json doc = json::parse(out.text);
  EXPECT_EQ(doc["summary"]["findings"], 0);
  EXPECT_EQ(doc["records"][0]["scans"][0]["empirical_threshold"], "-1/100");
}

TEST(Scan, EmptyCorpus) {
  const auto out = run_scan(reproducible(), {});
  EXPECT_EQ(out.exit_code, kExitClean);
  const json doc = json::parse(out.text);
  EXPECT_TRUE(doc["records"].empty());
  EXPECT_EQ(doc["summary"]["graphs"], 0);
}

TEST(Scan, CsvGrid) {
  RunConfig c = reproducible();
  c.k_set = {2, 3};
  c.grid_x_min = -2;
  c.grid_step = mpq_class(1, 2);
  c.format = OutputFormat::kCsv;
  const auto out = run_scan(c, {generate_family(Family::kPath, 3)});
  EXPECT_EQ(out.text, "graph,x,k,sign\n0,-2,2,-1\n0,-3/2,2,-1\n0,-1,2,-1\n0,-1/2,2,-1\n"
                      "0,-2,3,-1\n0,-3/2,3,-1\n0,-1,3,-1\n0,-1/2,3,-1\n");
}

TEST(Audit, OneRowAndInverted) {
  RunConfig c = reproducible();
  c.audit_delta = {1, 1};
  c.audit_k = {2, 2};
  const auto out = run_audit(c);
  EXPECT_EQ(out.exit_code, kExitClean);
  EXPECT_EQ(json::parse(out.text)["rows"].size(), 1U);
  c.format = OutputFormat::kCsv;
  const std::string csv = run_audit(c).text;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
  c.audit_delta = {3, 1};
  EXPECT_THROW(run_audit(c), Error);
}

// Property: thread count does not change the report.
TEST(Determinism, ParallelMatchesSerial) {
  RunConfig serial = reproducible();
  serial.jobs = 1;
  serial.k_set = {2, 3, 4};
  RunConfig parallel = serial;
  parallel.jobs = 8;
  const auto corpus = enumerate_labeled_connected(4);
  EXPECT_EQ(run_verify(serial, corpus).text, run_verify(parallel, corpus).text);
  EXPECT_EQ(run_poly(serial, corpus).text, run_poly(parallel, corpus).text);
  EXPECT_EQ(run_scan(serial, corpus).text, run_scan(parallel, corpus).text);
  EXPECT_EQ(run_poly(serial, corpus).text, run_poly(serial, corpus).text);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 7, [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}
