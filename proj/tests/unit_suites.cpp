#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "polywander/suites.hpp"
#include "test_util.hpp"

using namespace polywander;
using test_util::find_case;
using test_util::metric;

namespace {

CaseSpec tensor_spec(SpaceKind kind, MultiIndex caps) {
  CaseSpec spec;
  spec.kind = kind;
  spec.n = static_cast<int>(caps.size());
  spec.caps = std::move(caps);
  spec.alpha.clear();
  for (int i = 0; i < spec.n; ++i) spec.alpha.push_back(i);
  spec.recipe = Recipe::tensor;
  return spec;
}

}  // namespace

TEST_CASE("scalar inequality suite passes and is reproducible") {
  SuiteReport a = scalar_inequality_suite(42, 100000);
  CHECK(a.pass);
  CHECK(metric(find_case(a, "random-trials"), "violations") == 0.0);
  CHECK(metric(find_case(a, "fixed-equality-point"), "slack") == 0.0);
  CHECK(metric(find_case(a, "equality-family"), "max_abs_slack") <= 1e-10);

  SuiteReport b = scalar_inequality_suite(42, 100000);
  REQUIRE(a.cases.size() == b.cases.size());
  for (size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].digest == b.cases[i].digest);
    CHECK(a.cases[i].metrics == b.cases[i].metrics);
  }
  CHECK_THROWS_AS(scalar_inequality_suite(42, 0), ConfigError);
}

TEST_CASE("per-variable shift suite passes for every closed-form kind") {
  for (SpaceKind kind : {SpaceKind::hardy, SpaceKind::bergman, SpaceKind::dirichlet}) {
    CaseSpec spec = tensor_spec(kind, {12});
    spec.recipe = Recipe::full_space;
    SuiteReport rep = shift_wandering_suite(spec);
    CHECK(rep.pass);
    CHECK(find_case(rep, "wandering-z1").pass);
  }
}

TEST_CASE("bergman counterexample case certifies the exact gap") {
  CaseSpec spec = tensor_spec(SpaceKind::bergman, {12});
  spec.recipe = Recipe::full_space;
  SuiteReport rep = shift_wandering_suite(spec);
  const CaseResult& c = find_case(rep, "concavity-counterexample");
  CHECK(c.pass);
  CHECK(metric(c, "witness_lhs") == 1.0);
  CHECK(std::abs(metric(c, "witness_rhs") - 4.0 / 3.0) <= 1e-12);
  CHECK(std::abs(metric(c, "min_eigenvalue") + 1.0 / 3.0) <= 1e-12);
}

TEST_CASE("custom weights take the either-hypothesis route") {
  CaseSpec spec = tensor_spec(SpaceKind::custom, {8});
  spec.recipe = Recipe::full_space;
  spec.custom_omega = {{1.0, 0.5, 1.0 / 3, 0.25, 0.2, 1.0 / 6, 1.0 / 7, 0.125, 1.0 / 9}};
  SuiteReport rep = shift_wandering_suite(spec);
  CHECK(rep.pass);
  CHECK(find_case(rep, "hypothesis-z1").pass);
}

TEST_CASE("doubly commuting suite passes across all space kinds on one geometry") {
  for (SpaceKind kind : {SpaceKind::hardy, SpaceKind::bergman, SpaceKind::dirichlet}) {
    SuiteReport rep = doubly_commuting_wandering_suite(tensor_spec(kind, {10, 10}));
    CHECK(rep.pass);
    CHECK(find_case(rep, "construction").pass);
    CHECK(find_case(rep, "doubly-commuting").pass);
    CHECK(find_case(rep, "wandering").pass);
    CHECK(find_case(rep, "inductive-identity-z1").pass);
    CHECK(find_case(rep, "inductive-identity-z2").pass);
  }
}

TEST_CASE("three-variable tensor case verifies a partial alpha") {
  CaseSpec spec = tensor_spec(SpaceKind::hardy, {5, 5, 5});
  spec.alpha = {0, 2};
  spec.generators = {{Complex(-0.5, 0.0), Complex(1.0, 0.0)},
                     {Complex(1.0, 0.0)},
                     {Complex(0.0, 0.0), Complex(1.0, 0.0)}};
  SuiteReport rep = doubly_commuting_wandering_suite(spec);
  CHECK(rep.pass);
  CHECK(find_case(rep, "inductive-identity-z1").pass);
  CHECK(find_case(rep, "inductive-identity-z3").pass);
}

TEST_CASE("forward and negative cases cohere: the control fails the closure identity") {
  // A suite that passed the tensor case must reject the vanishing ideal, and
  // the failure must come from the identity checks, not the wandering check.
  CaseSpec spec = tensor_spec(SpaceKind::hardy, {8, 8});
  spec.recipe = Recipe::vanishing_ideal;
  SuiteReport rep = doubly_commuting_wandering_suite(spec);
  CHECK_FALSE(rep.pass);
  CHECK(find_case(rep, "construction").pass);
  CHECK_FALSE(find_case(rep, "doubly-commuting").pass);
  CHECK(find_case(rep, "wandering").pass);
  CHECK_FALSE(find_case(rep, "inductive-identity-z1").pass);
  CHECK_FALSE(find_case(rep, "inductive-identity-z2").pass);
}

TEST_CASE("residuals stay flat as caps grow from 6 to 12") {
  auto wandering_numbers = [](int cap) {
    SuiteReport rep = doubly_commuting_wandering_suite(tensor_spec(SpaceKind::bergman, {cap, cap}));
    const CaseResult& c = find_case(rep, "wandering");
    return std::pair<double, double>(metric(c, "orthogonality_residual"),
                                     metric(c, "closure_angle"));
  };
  const auto [r6, a6] = wandering_numbers(6);
  const auto [r12, a12] = wandering_numbers(12);
  CHECK(r12 <= std::max(10.0 * r6, 1e-12));
  CHECK(a12 <= std::max(10.0 * a6, 1e-12));
}

TEST_CASE("modulus commutation suite passes on tensor subspaces") {
  for (SpaceKind kind : {SpaceKind::hardy, SpaceKind::dirichlet}) {
    SuiteReport rep = modulus_commutation_suite(tensor_spec(kind, {8, 8}));
    CHECK(rep.pass);
    CHECK(find_case(rep, "modulus-commutation").pass);
    CHECK(find_case(rep, "wold-z1").pass);
    CHECK(find_case(rep, "wold-z2").pass);
  }
}

TEST_CASE("modulus commutation suite records the vanishing-ideal failures") {
  CaseSpec spec = tensor_spec(SpaceKind::hardy, {8, 8});
  spec.recipe = Recipe::vanishing_ideal;
  SuiteReport rep = modulus_commutation_suite(spec);
  CHECK_FALSE(rep.pass);
  const CaseResult& dc = find_case(rep, "doubly-commuting");
  CHECK_FALSE(dc.pass);
  CHECK(dc.notes.find("expected") != std::string::npos);
  const CaseResult& wold1 = find_case(rep, "wold-z1");
  CHECK(wold1.notes.find("recorded") != std::string::npos);
}

TEST_CASE("one-variable suite certifies monomial generators exactly") {
  SuiteReport rep = beurling_suite(SpaceKind::hardy,
                                   {Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)}, 10);
  CHECK(rep.pass);
  CHECK(metric(find_case(rep, "construction"), "dim_s") == 9.0);
  const CaseResult& span = find_case(rep, "span-identity");
  CHECK(metric(span, "dim_w") == 1.0);
  CHECK(metric(span, "angle_to_theta") <= 1e-8);
  CHECK(span.notes.find("w_coefficients=[0,0,1") != std::string::npos);
  CHECK(metric(find_case(rep, "wold"), "residual_dim") == 0.0);
}

TEST_CASE("one-variable suite with theta = 1 recovers the full space") {
  SuiteReport rep = beurling_suite(SpaceKind::hardy, {Complex(1.0, 0.0)}, 10);
  CHECK(rep.pass);
  CHECK(metric(find_case(rep, "construction"), "dim_s") == 11.0);
  CHECK(metric(find_case(rep, "span-identity"), "angle_to_monomial") <= 1e-8);
}

TEST_CASE("one-variable suite records non-monomial generators without asserting the span") {
  SuiteReport rep =
      beurling_suite(SpaceKind::hardy, {Complex(0.0, 0.0), Complex(-1.0, 0.0), Complex(1.0, 0.0)},
                     10);
  CHECK(rep.pass);  // W = span{z^val}; theta itself is not inner
  const CaseResult& span = find_case(rep, "span-identity");
  CHECK(span.pass);
  CHECK(metric(span, "angle_to_monomial") <= 1e-8);
  CHECK(span.notes.find("not a monomial") != std::string::npos);
}

TEST_CASE("one-variable suite covers the weighted kinds without dimension claims") {
  SuiteReport rep =
      beurling_suite(SpaceKind::bergman, {Complex(-0.5, 0.0), Complex(1.0, 0.0)}, 12);
  CHECK(rep.pass);
  CHECK(find_case(rep, "wandering").pass);
  const CaseResult& span = find_case(rep, "span-identity");
  CHECK(span.notes.find("recorded") != std::string::npos);
}

TEST_CASE("one-variable suite validates theta") {
  CHECK_THROWS_AS(beurling_suite(SpaceKind::hardy, {}, 10), std::invalid_argument);
  CHECK_THROWS_AS(beurling_suite(SpaceKind::hardy, {Complex(0.0, 0.0)}, 10),
                  std::invalid_argument);
  std::vector<Complex> high(11, Complex(0.0, 0.0));
  high.back() = Complex(1.0, 0.0);
  CHECK_THROWS_AS(beurling_suite(SpaceKind::hardy, high, 10), ConfigError);
}

TEST_CASE("negative control suite passes exactly when the expected failures occur") {
  SuiteReport rep = negative_control_suite();
  CHECK(rep.pass);
  const CaseResult& dc = find_case(rep, "doubly-commuting-violation");
  CHECK(dc.pass);
  CHECK(metric(dc, "max_residual") > 0.1);
  CHECK(find_case(rep, "inductive-identity-violation").pass);
  const CaseResult& deficit = find_case(rep, "joint-closure-deficit");
  CHECK(deficit.pass);
  CHECK(metric(deficit, "deficit") == 0.0);  // the truncated control has none
  CHECK(find_case(rep, "wandering-property-retained").pass);
}

TEST_CASE("case digests separate inputs") {
  SuiteReport a = doubly_commuting_wandering_suite(tensor_spec(SpaceKind::hardy, {6, 6}));
  SuiteReport b = doubly_commuting_wandering_suite(tensor_spec(SpaceKind::bergman, {6, 6}));
  CHECK(find_case(a, "wandering").digest != find_case(b, "wandering").digest);
}

TEST_CASE("suite labels carry the external conventions") {
  SuiteReport rep = doubly_commuting_wandering_suite(tensor_spec(SpaceKind::bergman, {10, 10}));
  CHECK(rep.space == "bergman");
  CHECK(rep.n == 2);
  CHECK(rep.caps_label == "10x10");
  CHECK(rep.alpha_label == "1+2");
}

TEST_CASE("recipe names round-trip") {
  for (Recipe r : {Recipe::full_space, Recipe::tensor, Recipe::vanishing_ideal}) {
    CHECK(recipe_from_string(to_string(r)) == r);
  }
  CHECK_THROWS_AS(recipe_from_string("moment-ideal"), ConfigError);
}

TEST_CASE("generator resolution validates counts and content") {
  CaseSpec spec = tensor_spec(SpaceKind::hardy, {6, 6});
  CHECK(resolve_generators(spec).size() == 2);
  spec.generators = {{Complex(1.0, 0.0)}};
  CHECK_THROWS_AS(resolve_generators(spec), ConfigError);
  spec.generators = {{Complex(1.0, 0.0)}, {Complex(0.0, 0.0)}};
  CHECK_THROWS_AS(doubly_commuting_wandering_suite(spec), std::invalid_argument);
}
