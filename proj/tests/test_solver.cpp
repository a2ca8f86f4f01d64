#include <gtest/gtest.h>

#include "support.hpp"

using namespace unasp;
using namespace unasp::testing;

namespace {

std::string json_of(const Program& p, const SolverConfig& cfg = {}) {
  return to_json(solve(p, cfg), *atom_table(ground(p))).dump();
}

SolverConfig four_seeds() {
  SolverConfig cfg;
  cfg.seeds = std::vector<double>{0, 0.25, 0.75, 1};
  return cfg;
}

}  // namespace

TEST(Solver, Ex3Json) {
  json j = json::parse(json_of(load("ex3.unasp")));
  EXPECT_EQ(j["status"], "ok");
  ASSERT_EQ(j["answer_sets"].size(), 1u);
  EXPECT_EQ(j["answer_sets"][0]["positive"]["p"], json::array({0.5, 0.5}));
  EXPECT_EQ(j["answer_sets"][0]["negative"]["p"], json::array({0.5, 0.5}));
  EXPECT_EQ(j["diagnostics"]["components"][0]["dispatch"], "branch-and-bound");
}

TEST(Solver, Ex5HasNoAnswerSet) {
  SolveReport r = solve(load("ex5.unasp"));
  EXPECT_EQ(r.status, SolveStatus::NoAnswerSet);
  EXPECT_TRUE(r.answer_sets.empty());
  EXPECT_EQ(r.diagnostics.conflict, "a");
}

TEST(Solver, Ex6AnswerSetsPerBranch) {
  SolveReport r = solve(load("ex6.unasp"), four_seeds());
  ASSERT_EQ(r.status, SolveStatus::Ok);
  ASSERT_EQ(r.answer_sets.size(), 4u);
  const double want[4][4] = {{0, 1, 0.4, 0.6}, {0.25, 0.75, 0.3, 0.45}, {0.75, 0.25, 0.1, 0.15}, {1, 0, 0, 0}};
  for (std::size_t k = 0; k < 4; ++k) {
    const Interpretation& i = r.answer_sets[k];
    EXPECT_TRUE(near(pos(i, "y"), want[k][0], want[k][0], 1e-9));
    EXPECT_TRUE(near(pos(i, "z"), want[k][1], want[k][1], 1e-9));
    EXPECT_TRUE(near(pos(i, "l"), want[k][2], want[k][3], 1e-9));
    EXPECT_TRUE(near(pos(i, "h"), 0.5557, 0.7938, 5e-4));
    EXPECT_TRUE(near(pos(i, "m"), 0.42, 0.72, 1e-9));
    EXPECT_TRUE(near(pos(i, "t"), 0, 1, 0));
  }
  // Default sampling adds the midpoint branch.
  EXPECT_EQ(solve(load("ex6.unasp")).answer_sets.size(), 5u);
}

TEST(Solver, Ex7MatchesItsIteration) {
  SolveReport r = solve(load("ex7.unasp"));
  ASSERT_EQ(r.answer_sets.size(), 1u);
  EXPECT_TRUE(near(pos(r.answer_sets[0], "a"), 0.39409, 0.67514, 5e-4));
  EXPECT_TRUE(near(pos(r.answer_sets[0], "g"), 0.12248, 0.60168, 5e-4));
  ASSERT_EQ(r.diagnostics.components.size(), 1u);
  EXPECT_EQ(r.diagnostics.components[0].dispatch, Dispatch::Nmi);
  EXPECT_EQ(r.diagnostics.components[0].iterations, 8u);
}

TEST(Solver, AnswerSetsAreStrictlyConsistentAndVerified) {
  for (const char* f : {"ex1.unasp", "ex2.unasp", "ex3.unasp", "ex4.unasp", "ex6.unasp", "ex7.unasp", "ex8.unasp"}) {
    Program p = load(f);
    SolveReport r = solve(p);
    EXPECT_FALSE(r.answer_sets.empty()) << f;
    VerifyOptions vo;
    vo.tol = NmiConfig{}.eps;
    vo.candidates = r.answer_sets;
    for (const auto& i : r.answer_sets) {
      EXPECT_EQ(classify_consistency(i), ConsistencyClass::StrictlyConsistent) << f;
      Verdict v = check_answer_set(i, ground(p), vo);
      EXPECT_TRUE(v) << f << ": " << v.reason;
    }
  }
}

TEST(Solver, Deterministic) {
  for (const char* f : {"ex6.unasp", "ex7.unasp", "ex8.unasp"}) {
    Program p = load(f);
    EXPECT_EQ(json_of(p), json_of(p)) << f;
  }
}

TEST(Solver, JobsDoNotChangeTheResult) {
  Program p = load("ex6.unasp");
  SolverConfig two;
  two.jobs = 2;
  EXPECT_EQ(json_of(p), json_of(p, two));
}

TEST(Solver, AnswerSetCapTruncates) {
  SolverConfig cfg = four_seeds();
  cfg.max_answer_sets = 2;
  SolveReport r = solve(load("ex6.unasp"), cfg);
  EXPECT_EQ(r.status, SolveStatus::Incomplete);
  EXPECT_EQ(r.answer_sets.size(), 2u);
  EXPECT_TRUE(r.diagnostics.truncated);
}

TEST(Solver, IterationBoundIsIncomplete) {
  SolverConfig cfg;
  cfg.nmi.max_outer_iters = 3;
  SolveReport r = solve(load("ex7.unasp"), cfg);
  EXPECT_EQ(r.status, SolveStatus::Incomplete);
  EXPECT_TRUE(r.diagnostics.max_iters_exceeded);
}

TEST(Solver, BadConfigurationIsRejected) {
  SolverConfig cfg;
  cfg.seeds = std::vector<double>{0.5, 1.5};
  EXPECT_THROW(solve(load("ex3.unasp"), cfg), Error);
  cfg = {};
  cfg.nmi.n_b = 1;
  EXPECT_THROW(solve(load("ex3.unasp"), cfg), Error);
}

TEST(Io, ModelRoundTrip) {
  SolveReport r = solve(load("ex7.unasp"));
  ASSERT_EQ(r.answer_sets.size(), 1u);
  Interpretation back = parse_model(to_json(r.answer_sets[0]).dump());
  EXPECT_TRUE(back.approx(r.answer_sets[0], 1e-9));
  EXPECT_TRUE(is_answer_set(parse_model(read_file(programs_dir() + "/ex2.model.json")), load("ex2.unasp")));
  EXPECT_THROW(parse_model("{\"positive\": {\"a\": [0.9, 0.1]}}"), Error);
  EXPECT_THROW(parse_model("[1,2"), Error);
}

TEST(Io, TextFormat) {
  std::string s = format_text(solve(load("ex3.unasp")));
  EXPECT_NE(s.find("p"), std::string::npos);
  EXPECT_NE(s.find("[0.5,0.5]"), std::string::npos);
  EXPECT_NE(format_text(solve(load("ex5.unasp"))).find("no answer set"), std::string::npos);
}

TEST(Analysis, Ex6Report) {
  AnalysisReport a = analyze(load("ex6.unasp"));
  json j = to_json(a, *atom_table(ground(load("ex6.unasp"))));
  EXPECT_FALSE(j.dump().empty());
  std::string text = format_text(a);
  EXPECT_NE(text.find("component {h,i,j,k} cyclic"), std::string::npos);
  EXPECT_NE(text.find("contraction kagg-cycle"), std::string::npos);
}

TEST(SolverProperty, RandomProgramsVerify) {
  Rng rng(71);
  for (int k = 0; k < 150; ++k) {
    Program p = parse_program(random_normal_program(rng));
    SolveReport r = solve(p);
    EXPECT_FALSE(r.answer_sets.empty()) << to_string(p);
    VerifyOptions vo;
    vo.tol = NmiConfig{}.eps;
    vo.candidates = r.answer_sets;
    for (const auto& i : r.answer_sets) EXPECT_TRUE(is_answer_set(i, p, vo)) << to_string(p) << to_string(i);
  }
}
