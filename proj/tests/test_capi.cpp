#include <gtest/gtest.h>

#include <string>

#include "chromagraph/chromagraph.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  cg_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, GraphRoundTrip) {
  cg_graph* g = nullptr;
  ASSERT_EQ(cg_graph_from_graph6("Bw", &g), CG_OK);
  cg_graph_stats st{};
  ASSERT_EQ(cg_graph_stats_get(g, &st), CG_OK);
  EXPECT_EQ(st.n, 3);
  EXPECT_EQ(st.m, 3U);
  EXPECT_EQ(st.triangles, 1U);
  EXPECT_EQ(st.connected, 1);
  char* text = nullptr;
  ASSERT_EQ(cg_graph_to_graph6(g, &text), CG_OK);
  EXPECT_EQ(take(text), "Bw");
  cg_graph_free(g);
}

TEST(CApi, ErrorsAreReported) {
  cg_graph* g = nullptr;
  EXPECT_EQ(cg_graph_from_graph6("", &g), CG_ERR_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(cg_last_error()), "");
  EXPECT_EQ(cg_graph_from_edge_list("2\n0 2\n", &g), CG_ERR_PARSE);
  EXPECT_EQ(cg_graph_family("cycle:2", 1, &g), CG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cg_graph_from_graph6(nullptr, &g), CG_ERR_INVALID_ARGUMENT);
  cg_corpus* c = nullptr;
  EXPECT_EQ(cg_corpus_exhaustive(9, &c), CG_ERR_LIMIT);
  ASSERT_EQ(cg_graph_from_graph6("A_", &g), CG_OK);
  EXPECT_STREQ(cg_last_error(), "");
  cg_graph_free(g);
}

TEST(CApi, PolynomialQueries) {
  cg_graph* g = nullptr;
  ASSERT_EQ(cg_graph_family("cycle:5", 1, &g), CG_OK);
  cg_poly* p = nullptr;
  ASSERT_EQ(cg_chromatic_polynomial(g, &p), CG_OK);
  EXPECT_EQ(cg_poly_degree(p), 5);
  char* json = nullptr;
  ASSERT_EQ(cg_poly_to_json(p, &json), CG_OK);
  EXPECT_EQ(take(json), R"(["0","4","-10","10","-5","1"])");
  int chi = 0;
  ASSERT_EQ(cg_chromatic_number(p, &chi), CG_OK);
  EXPECT_EQ(chi, 3);
  int sign = 0;
  ASSERT_EQ(cg_log_derivative_sign(p, 3, "-39.96", &sign), CG_OK);
  EXPECT_EQ(sign, -1);
  EXPECT_EQ(cg_log_derivative_sign(p, 3, "2", &sign), CG_ERR_DOMAIN);
  cg_poly_free(p);
  cg_graph_free(g);
}

TEST(CApi, CorpusAndRuns) {
  cg_corpus* corpus = nullptr;
  ASSERT_EQ(cg_corpus_exhaustive(3, &corpus), CG_OK);
  EXPECT_EQ(cg_corpus_size(corpus), 4U);
  cg_graph* g = nullptr;
  ASSERT_EQ(cg_corpus_get(corpus, 3, &g), CG_OK);
  cg_graph_free(g);
  EXPECT_EQ(cg_corpus_get(corpus, 4, &g), CG_ERR_INVALID_ARGUMENT);

  cg_run_config* config = cg_run_config_new();
  ASSERT_NE(config, nullptr);
  EXPECT_EQ(cg_run_config_set_k(config, "2-4"), CG_OK);
  EXPECT_EQ(cg_run_config_set_k(config, "0"), CG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cg_run_config_set_K(config, "4.25"), CG_OK);
  EXPECT_EQ(cg_run_config_set_K(config, "-1"), CG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cg_run_config_set_grid(config, "3:1"), CG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cg_run_config_set_format(config, "xml"), CG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cg_run_config_set_reproducible(config, 1), CG_OK);
  EXPECT_EQ(cg_run_config_set_jobs(config, 2), CG_OK);

  char* out = nullptr;
  int exit_code = -1;
  ASSERT_EQ(cg_run_verify(config, corpus, &out, &exit_code), CG_OK);
  const std::string report = take(out);
  EXPECT_EQ(exit_code, 0);
  EXPECT_NE(report.find("\"schema\": \"chromagraph/1\""), std::string::npos);
  EXPECT_EQ(report.find("timestamp"), std::string::npos);

  ASSERT_EQ(cg_run_scan(config, corpus, &out, &exit_code), CG_OK);
  cg_string_free(out);
  EXPECT_EQ(exit_code, 0);

  ASSERT_EQ(cg_run_config_set_audit_delta(config, "1:2"), CG_OK);
  ASSERT_EQ(cg_run_config_set_audit_k(config, "2:5"), CG_OK);
  ASSERT_EQ(cg_run_config_set_format(config, "csv"), CG_OK);
  ASSERT_EQ(cg_run_audit(config, &out, &exit_code), CG_OK);
  EXPECT_EQ(take(out).rfind("Delta,k,x,f1,f,pass\n", 0), 0U);
  EXPECT_EQ(cg_run_poly(config, corpus, &out, &exit_code), CG_ERR_INVALID_ARGUMENT);

  cg_run_config_free(config);
  cg_corpus_free(corpus);
}

TEST(CApi, NullHandlesAreSafe) {
  cg_graph_free(nullptr);
  cg_poly_free(nullptr);
  cg_corpus_free(nullptr);
  cg_run_config_free(nullptr);
  cg_string_free(nullptr);
  EXPECT_EQ(cg_corpus_size(nullptr), 0U);
  EXPECT_EQ(cg_poly_degree(nullptr), -1);
  EXPECT_STREQ(cg_version(), "0.1.0");
}
