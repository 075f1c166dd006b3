#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "polywander/checks.hpp"
#include "test_util.hpp"

using namespace polywander;

namespace {

Vec random_coeffs(const TruncationGrid& g, test_util::Uniform& u) {
  Vec f(g.size());
  for (Eigen::Index p = 0; p < g.size(); ++p) f[p] = u.complex_in_disc(2.0);
  return f;
}

/// Coefficient-space multiplication by z_var with overflow dropped, the
/// reference semantics the isometric matrices must reproduce.
Vec multiply_reference(const TruncationGrid& g, const Vec& coeff, int var) {
  Vec out = Vec::Zero(g.size());
  for (Eigen::Index p = 0; p < g.size(); ++p) {
    MultiIndex up = g.indices()[p];
    if (++up[var] > g.caps()[var]) continue;
    out[g.position(up)] += coeff[p];
  }
  return out;
}

}  // namespace

TEST_CASE("exact shift is coefficient multiplication into the grown grid") {
  SpaceModel model = SpaceModel::bergman(TruncationGrid({3}));
  OperatorMatrix s = shift_exact(model, 0);
  REQUIRE(s.codomain().caps() == MultiIndex{4});
  SpaceModel grown = model.on_grid(s.codomain());
  test_util::Uniform u(11);
  Vec f = random_coeffs(model.grid(), u);
  Vec image = grown.from_isometric(s.apply(model.to_isometric(f)));
  for (int m = 0; m <= 3; ++m) {
    CHECK(std::abs(image[grown.grid().position({m + 1})] - f[m]) <= 1e-14);
  }
  CHECK(std::abs(image[grown.grid().position({0})]) <= 1e-14);
}

TEST_CASE("compressed shift drops overflow and keeps everything else") {
  for (auto make : {&SpaceModel::hardy, &SpaceModel::bergman, &SpaceModel::dirichlet}) {
    SpaceModel model = make(TruncationGrid({4, 3}));
    test_util::Uniform u(13);
    for (int var = 0; var < 2; ++var) {
      OperatorMatrix c = shift_compressed(model, var);
      Vec f = random_coeffs(model.grid(), u);
      Vec got = model.from_isometric(c.apply(model.to_isometric(f)));
      Vec want = multiply_reference(model.grid(), f, var);
      CHECK((got - want).norm() <= 1e-13 * (1.0 + want.norm()));
    }
  }
}

TEST_CASE("compressed shift annihilates the top exponent") {
  SpaceModel model = SpaceModel::dirichlet(TruncationGrid({5}));
  OperatorMatrix c = shift_compressed(model, 0);
  Vec top = Vec::Zero(model.grid().size());
  top[model.grid().position({5})] = 1.0;
  CHECK(c.apply(model.to_isometric(top)).norm() <= 1e-15);
}

TEST_CASE("matrix adjoint is the weighted adjoint") {
  SpaceModel model = SpaceModel::bergman(TruncationGrid({4, 4}));
  OperatorMatrix c = shift_compressed(model, 1);
  test_util::Uniform u(17);
  Vec f = random_coeffs(model.grid(), u);
  Vec g = random_coeffs(model.grid(), u);
  // <C f, g> == <f, C* g> in the weighted inner product.
  const Complex lhs =
      model.inner_product(model.from_isometric(c.apply(model.to_isometric(f))), g);
  const Complex rhs =
      model.inner_product(f, model.from_isometric(c.adjoint().apply(model.to_isometric(g))));
  CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
  CHECK((c.adjoint().matrix() - c.matrix().adjoint()).norm() == 0.0);
}

TEST_CASE("hardy compressed shift is isometric below the cap") {
  SpaceModel model = SpaceModel::hardy(TruncationGrid({6}));
  const Eigen::MatrixXcd m = shift_compressed(model, 0).matrix();
  for (Eigen::Index col = 0; col < 6; ++col) CHECK(m.col(col).norm() == doctest::Approx(1.0));
  CHECK(m.col(6).norm() == 0.0);
}

TEST_CASE("operator powers and composition respect grids") {
  SpaceModel model = SpaceModel::bergman(TruncationGrid({4}));
  OperatorMatrix c = shift_compressed(model, 0);
  CHECK((c.pow(2).matrix() - (c * c).matrix()).norm() == 0.0);
  CHECK((c.pow(0).matrix() - Eigen::MatrixXcd::Identity(5, 5)).norm() == 0.0);
  OperatorMatrix e = shift_exact(model, 0);
  CHECK_THROWS_AS(e.pow(2), ShapeError);
  CHECK_THROWS_AS(c * e, ShapeError);  // domains do not line up
  CHECK_NOTHROW(e * c);
}

TEST_CASE("operator norm is the largest singular value") {
  Eigen::MatrixXcd m(2, 2);
  m << Complex(3, 0), Complex(0, 0), Complex(0, 0), Complex(0, 4);
  CHECK(operator_norm(m) == doctest::Approx(4.0));
  CHECK(operator_norm(Eigen::MatrixXcd(0, 0)) == 0.0);
}

TEST_CASE("shift tuple validates margin and indices") {
  SpaceModel model = SpaceModel::hardy(TruncationGrid({3, 3}));
  CHECK_THROWS_AS(ShiftTuple::coordinate_shifts(model, 0), ConfigError);
  CHECK_THROWS_AS(ShiftTuple::coordinate_shifts(model, 4), ConfigError);
  ShiftTuple t = ShiftTuple::coordinate_shifts(model, 1);
  CHECK(t.count() == 2);
  CHECK_THROWS_AS(t.op(2), std::out_of_range);
}

TEST_CASE("bergman and hardy shifts satisfy the norm-inequality block form") {
  for (auto make : {&SpaceModel::bergman, &SpaceModel::hardy}) {
    SpaceModel m1 = make(TruncationGrid({12}));
    FormReport f1 = check_shimorin(shift_compressed(m1, 0));
    CHECK(f1.min_eigenvalue >= -1e-12);
    CHECK(f1.psd);

    SpaceModel m2 = make(TruncationGrid({8, 8}));
    for (int var = 0; var < 2; ++var) {
      FormReport f2 = check_shimorin(shift_compressed(m2, var));
      CHECK(f2.min_eigenvalue >= -1e-12);
    }
  }
}

TEST_CASE("dirichlet concavity holds with equality") {
  SpaceModel m1 = SpaceModel::dirichlet(TruncationGrid({12}));
  FormReport f1 = check_concave(shift_compressed(m1, 0));
  CHECK(std::abs(f1.min_eigenvalue) <= 1e-12);
  CHECK(std::abs(f1.max_eigenvalue) <= 1e-12);

  SpaceModel m2 = SpaceModel::dirichlet(TruncationGrid({9, 9}));
  for (int var = 0; var < 2; ++var) {
    FormReport f2 = check_concave(shift_compressed(m2, var));
    CHECK(std::abs(f2.min_eigenvalue) <= 1e-12);
    CHECK(std::abs(f2.max_eigenvalue) <= 1e-12);
  }
}

TEST_CASE("hardy concavity holds with equality") {
  SpaceModel m = SpaceModel::hardy(TruncationGrid({10}));
  FormReport f = check_concave(shift_compressed(m, 0));
  CHECK(std::abs(f.min_eigenvalue) <= 1e-12);
  CHECK(std::abs(f.max_eigenvalue) <= 1e-12);
}

TEST_CASE("bergman concavity bottoms out at exactly minus one third") {
  // Interior eigenvalues of 2T*T - T*^2T^2 - I are -2/((m+2)(m+3)); the
  // worst one, at m = 0, is -1/3 for every cap.
  for (int cap : {4, 8, 12}) {
    SpaceModel m = SpaceModel::bergman(TruncationGrid({cap}));
    FormReport f = check_concave(shift_compressed(m, 0));
    CHECK(std::abs(f.min_eigenvalue + 1.0 / 3.0) <= 1e-12);
    CHECK(f.max_eigenvalue < 0.0);
    CHECK_FALSE(f.psd);
  }
}

TEST_CASE("form checks validate their margins") {
  SpaceModel m = SpaceModel::bergman(TruncationGrid({5}));
  OperatorMatrix c = shift_compressed(m, 0);
  CHECK_THROWS_AS(check_shimorin(c, 0), ConfigError);
  CHECK_THROWS_AS(check_concave(c, 1), ConfigError);
  CHECK_THROWS_AS(check_shimorin(shift_exact(m, 0)), ShapeError);
}

TEST_CASE("coordinate shifts doubly commute on the interior") {
  for (auto make : {&SpaceModel::hardy, &SpaceModel::bergman, &SpaceModel::dirichlet}) {
    ShiftTuple t = ShiftTuple::coordinate_shifts(make(TruncationGrid({6, 6})), 1);
    CommutationReport rep = check_doubly_commuting(t);
    CHECK(rep.max_residual <= 1e-14);
    CHECK(rep.pass);
    REQUIRE(rep.pairs.size() == 1);
    CHECK(rep.pairs[0].i == 0);
    CHECK(rep.pairs[0].j == 1);
  }
  ShiftTuple one = ShiftTuple::coordinate_shifts(SpaceModel::hardy(TruncationGrid({4})), 1);
  CHECK_THROWS_AS(check_doubly_commuting(one), std::invalid_argument);
}

TEST_CASE("coordinate shifts commute with each other's moduli") {
  for (auto make : {&SpaceModel::hardy, &SpaceModel::bergman, &SpaceModel::dirichlet}) {
    SpaceModel m = make(TruncationGrid({5, 5, 5}));
    ShiftTuple t = ShiftTuple::coordinate_shifts(m, 1);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        CHECK(commutes_with_modulus(t.op(i), t.op(j), 1) <= 1e-13);
      }
    }
  }
}

TEST_CASE("compressed shift powers lose rank one per step and vanish") {
  SpaceModel m = SpaceModel::bergman(TruncationGrid({5}));
  AnalyticityReport rep = analyticity_proxy(shift_compressed(m, 0), 7);
  REQUIRE(rep.ranks.size() == 7);
  for (int p = 1; p <= 7; ++p) {
    CHECK(rep.ranks[p - 1] == std::max<Eigen::Index>(0, 6 - p));
  }
  CHECK(rep.first_zero_power == 6);
}
