#include <gtest/gtest.h>

#include "support.hpp"

using namespace unasp;
using namespace unasp::testing;

namespace {

std::string joined(const std::string& lit, const std::string& src) {
  Program p = parse_program(src);
  auto atoms = atom_table(p);
  Literal l{{lit[0] == '-' ? lit.substr(1) : lit, {}}, lit[0] == '-'};
  return to_string(r_join(l, p, *atoms), *atoms);
}

std::string rule_of(const TransformedProgram& t, const std::string& a) { return to_string(t.rules.at(id(t, a)), *t.atoms); }

}  // namespace

TEST(Transform, JoinIsDisjunctionOfWeightedBodies) {
  EXPECT_EQ(joined("a", "a <- [0.2,0.4] : b, d.\na <- [0.5,0.6] : c, e."),
            "((b & d & [0.2,0.4]) | (c & e & [0.5,0.6]))");
  EXPECT_EQ(joined("a", "b <- [1,1] : c."), "[0,0]");
  EXPECT_EQ(joined("a", read_file(programs_dir() + "/ex2.unasp")), "((b & [0.7,1]) | [0.3,0.5])");
}

TEST(Transform, BothPolaritiesAggregate) {
  TransformedProgram t = transform_program(parse_program(
      "r1: a <- [0.2,0.4] : b, d.\nr2: a <- [0.5,0.6] : c, e.\nr3: -a <- [0.3,0.9] : f.\nr4: -a <- [1,1] : g, not h."));
  EXPECT_EQ(rule_of(t, "a"), "kagg(((b & d & [0.2,0.4]) | (c & e & [0.5,0.6])), -((f & [0.3,0.9]) | (g & not h)))");
}

TEST(Transform, AtomsWithoutRulesAreUnknown) {
  TransformedProgram t = transform_program(load("ex6.unasp"));
  EXPECT_EQ(rule_of(t, "t"), "[0,1]");
  EXPECT_EQ(t.rules.size(), t.atoms->size());
  for (const auto& a : load("ex6.unasp").atom_base()) EXPECT_TRUE(t.atoms->find(a.str())) << a.str();
}

TEST(Transform, SingleFactFolds) {
  TransformedProgram t = transform_program(parse_program("a <- [1,1] : [0.7,0.7]."));
  EXPECT_EQ(rule_of(t, "a"), "[0.7,0.7]");
}

TEST(TransformProperty, SupportedModelsCoincide) {
  Rng rng(31);
  std::size_t checked = 0, models = 0;
  for (int k = 0; k < 150; ++k) {
    Program p = parse_program(random_tiny_program(rng));
    TransformedProgram t = transform_program(p);
    std::vector<std::string> names;
    for (const auto& a : p.atom_base()) names.push_back(a.str());
    for_each_grid_interpretation(names, [&](const Interpretation& i) {
      ++checked;
      bool original = is_supported_model(i, p);
      models += original;
      EXPECT_EQ(original, is_supported_model(i, t)) << to_string(p) << to_string(i);
    });
  }
  EXPECT_GT(models, 0u);
  EXPECT_GT(checked, 1000u);
}

TEST(ExprProperty, SimplifyPreservesValues) {
  Rng rng(32);
  for (int k = 0; k < 300; ++k) {
    std::vector<AtomId> atoms{0, 1, 2};
    Expr e = random_read_once(rng, atoms);
    // Sprinkle in unit and annihilating constants.
    e = Expr::conj({e, Expr::constant(Interval::exact(1)), Expr::disj({Expr::constant(Interval::exact(0)), e})});
    if (chance(rng, 0.5)) e = Expr::disj({e, Expr::constant(random_grid_interval(rng))});
    if (chance(rng, 0.3)) e = Expr::naf(Expr::neg(Expr::neg(e)));
    Expr s = simplify(e);
    for (int j = 0; j < 5; ++j) {
      Interval v[3] = {random_interval(rng), random_interval(rng), random_interval(rng)};
      auto look = [&](AtomId a, bool neg) -> std::optional<EpistemicValue> { return neg ? negate(v[a]) : v[a]; };
      EpistemicValue x = evaluate(e, look), y = evaluate(s, look);
      ASSERT_EQ(x.consistent(), y.consistent());
      if (x.consistent()) {
        EXPECT_TRUE(x.interval().approx(y.interval(), 1e-12));
      }
    }
  }
}

TEST(Expr, DeMorganUnderNegation) {
  Rng rng(33);
  for (int k = 0; k < 200; ++k) {
    Interval x = random_interval(rng), y = random_interval(rng);
    auto look = [&](AtomId a, bool) -> std::optional<EpistemicValue> { return a == 0 ? x : y; };
    Expr lhs = Expr::neg(Expr::conj({Expr::lit(0), Expr::lit(1)}));
    Expr rhs = Expr::disj({Expr::neg(Expr::lit(0)), Expr::neg(Expr::lit(1))});
    EXPECT_TRUE(evaluate(lhs, look).interval().approx(evaluate(rhs, look).interval(), 1e-12));
  }
}
