#include "polywander/suites.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

namespace polywander {

namespace {

using Eigen::MatrixXcd;

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string caps_label(const MultiIndex& caps) {
  std::ostringstream out;
  for (size_t i = 0; i < caps.size(); ++i) {
    if (i) out << 'x';
    out << caps[i];
  }
  return out.str();
}

std::string alpha_label(const std::vector<int>& alpha) {
  std::ostringstream out;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (i) out << '+';
    out << alpha[i] + 1;
  }
  return out.str();
}

std::string var_label(int var) { return "z" + std::to_string(var + 1); }

std::string spec_fingerprint(const CaseSpec& spec) {
  std::ostringstream s;
  s << to_string(spec.kind) << '|' << spec.n << '|' << caps_label(spec.caps) << '|'
    << alpha_label(spec.alpha) << '|' << to_string(spec.recipe) << "|m" << spec.margin << "|s"
    << spec.seed << '|' << spec.tol_residual << '|' << spec.tol_angle << '|' << spec.tol_psd;
  for (const auto& g : spec.generators) {
    s << "|g";
    for (const Complex& c : g) s << c.real() << ',' << c.imag() << ';';
  }
  for (const auto& om : spec.custom_omega) {
    s << "|w";
    for (double v : om) s << v << ';';
  }
  return s.str();
}

void put(CaseResult& r, const std::string& key, double value) {
  r.metrics.emplace_back(key, value);
}

CaseResult make_case(const std::string& suite, const std::string& name,
                     const std::string& inputs) {
  CaseResult r;
  r.name = name;
  r.digest = fnv1a_hex(suite + '|' + name + '|' + inputs);
  return r;
}

void finalize(SuiteReport& rep) {
  rep.pass = std::all_of(rep.cases.begin(), rep.cases.end(),
                         [](const CaseResult& c) { return c.pass; });
}

int polynomial_degree(const std::vector<Complex>& coeffs) {
  int deg = -1;
  for (size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m] != Complex(0.0, 0.0)) deg = static_cast<int>(m);
  }
  return deg;
}

int polynomial_valuation(const std::vector<Complex>& coeffs) {
  for (size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m] != Complex(0.0, 0.0)) return static_cast<int>(m);
  }
  return -1;
}

/// Grows the span by the images under the given operators until the
/// dimension stops increasing, which is exactly invariance of the span.
Subspace span_closure(const TruncationGrid& grid, Subspace span,
                      const std::vector<const MatrixXcd*>& ops) {
  while (true) {
    const Eigen::Index k = span.dim();
    MatrixXcd cols(grid.size(), k * static_cast<Eigen::Index>(1 + ops.size()));
    cols.leftCols(k) = span.basis();
    for (size_t a = 0; a < ops.size(); ++a) {
      cols.middleCols(k * static_cast<Eigen::Index>(a + 1), k) = (*ops[a]) * span.basis();
    }
    Subspace next = from_generators(grid, cols);
    if (next.dim() == k) return next;
    span = std::move(next);
  }
}

Subspace one_variable_closure(const SpaceModel& factor, const std::vector<Complex>& coeffs) {
  const TruncationGrid& grid = factor.grid();
  const int degree = polynomial_degree(coeffs);
  if (degree < 0) throw std::invalid_argument("generator polynomial is zero");
  if (degree > grid.caps()[0]) {
    throw ConfigError("generator degree " + std::to_string(degree) + " exceeds the cap " +
                      std::to_string(grid.caps()[0]));
  }
  Vec coeff = Vec::Zero(grid.size());
  for (size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m] != Complex(0.0, 0.0)) coeff(grid.position({static_cast<int>(m)})) = coeffs[m];
  }
  const OperatorMatrix shift = shift_compressed(factor, 0);
  const MatrixXcd& c = shift.matrix();
  return span_closure(grid, from_generators(grid, factor.to_isometric(coeff)), {&c});
}

std::vector<std::vector<Complex>> default_generators(int n) {
  std::vector<std::vector<Complex>> gens;
  gens.push_back({Complex(-0.5, 0.0), Complex(1.0, 0.0)});
  if (n >= 2) gens.push_back({Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)});
  while (static_cast<int>(gens.size()) < n) gens.push_back({Complex(1.0, 0.0)});
  gens.resize(static_cast<size_t>(n));
  return gens;
}

int recipe_generator_degree(const CaseSpec& spec) {
  switch (spec.recipe) {
    case Recipe::full_space:
      return 0;
    case Recipe::vanishing_ideal:
      return 1;
    case Recipe::tensor: {
      int deg = 0;
      for (const auto& g : resolve_generators(spec)) deg = std::max(deg, polynomial_degree(g));
      return deg;
    }
  }
  return 0;
}

Subspace build_subspace(const CaseSpec& spec, const SpaceModel& model) {
  switch (spec.recipe) {
    case Recipe::full_space:
      return Subspace::full(model.grid());
    case Recipe::tensor:
      return gen_tensor_invariant_subspace(model, resolve_generators(spec));
    case Recipe::vanishing_ideal:
      return gen_vanishing_ideal_subspace(model);
  }
  throw ConfigError("unknown subspace recipe");
}

void fill_labels(SuiteReport& rep, const CaseSpec& spec) {
  rep.space = to_string(spec.kind);
  rep.n = spec.n;
  rep.caps_label = caps_label(spec.caps);
  rep.alpha_label = alpha_label(spec.alpha);
}

/// Shared by the wandering suites: the wandering property of W_alpha with
/// the two construction routes cross-checked, then for |alpha| >= 2 the
/// closure identity [W_alpha] under z_i against W_{alpha minus i}.
void append_wandering_cases(SuiteReport& rep, const CaseSpec& spec, const ShiftTuple& tuple,
                            const Subspace& s, const std::vector<int>& alpha,
                            const std::string& inputs) {
  WanderingSubspace w = wandering_subspace(s, tuple, alpha);
  const int depth = default_depth(tuple, recipe_generator_degree(spec));
  WanderingReport wr =
      check_wandering(s, tuple, alpha, w.space, depth, spec.tol_residual, spec.tol_angle);

  CaseResult c = make_case(rep.suite, "wandering", inputs);
  put(c, "dim_w", static_cast<double>(w.space.dim()));
  put(c, "route_agreement_angle", w.route_agreement_angle);
  put(c, "containment_sine", wr.containment_sine);
  put(c, "orthogonality_residual", wr.orthogonality_residual);
  put(c, "depth", static_cast<double>(wr.depth));
  put(c, "closure_angle", wr.closure_angle);
  put(c, "closure_interior_dim", static_cast<double>(wr.closure_interior_dim));
  put(c, "s_interior_dim", static_cast<double>(wr.s_interior_dim));
  c.residual = wr.orthogonality_residual;
  c.angle = wr.closure_angle;
  c.pass = wr.pass && w.route_agreement_angle <= spec.tol_angle;
  rep.cases.push_back(std::move(c));

  if (alpha.size() < 2) return;
  for (int ai : alpha) {
    std::vector<int> rest;
    for (int a : alpha) {
      if (a != ai) rest.push_back(a);
    }
    Subspace lhs = interior_projection(invariant_closure(w.space, {ai}, tuple), spec.margin);
    Subspace rhs =
        interior_projection(wandering_subspace(s, tuple, rest).space, spec.margin);
    CaseResult ind = make_case(rep.suite, "inductive-identity-" + var_label(ai), inputs);
    put(ind, "closure_interior_dim", static_cast<double>(lhs.dim()));
    put(ind, "target_interior_dim", static_cast<double>(rhs.dim()));
    const bool dims_equal = lhs.dim() == rhs.dim();
    ind.angle = dims_equal ? largest_principal_angle(lhs, rhs) : kHalfPi;
    put(ind, "angle", ind.angle);
    ind.pass = dims_equal && ind.angle <= spec.tol_angle;
    rep.cases.push_back(std::move(ind));
  }
}

}  // namespace

std::string to_string(Recipe recipe) {
  switch (recipe) {
    case Recipe::full_space:
      return "full-space";
    case Recipe::tensor:
      return "tensor";
    case Recipe::vanishing_ideal:
      return "vanishing-ideal";
  }
  return "unknown";
}

Recipe recipe_from_string(const std::string& name) {
  if (name == "full-space") return Recipe::full_space;
  if (name == "tensor") return Recipe::tensor;
  if (name == "vanishing-ideal") return Recipe::vanishing_ideal;
  throw ConfigError("unknown subspace recipe: " + name);
}

SpaceModel make_model(const CaseSpec& spec) {
  if (spec.n <= 0) throw ConfigError("dimension n must be positive");
  if (static_cast<int>(spec.caps.size()) != spec.n) {
    throw ConfigError("caps list length does not match n");
  }
  TruncationGrid grid(spec.caps);
  switch (spec.kind) {
    case SpaceKind::hardy:
      return SpaceModel::hardy(grid);
    case SpaceKind::bergman:
      return SpaceModel::bergman(grid);
    case SpaceKind::dirichlet:
      return SpaceModel::dirichlet(grid);
    case SpaceKind::custom:
      if (spec.custom_omega.empty()) throw ConfigError("custom space needs weight tables");
      return SpaceModel::custom(grid, spec.custom_omega);
  }
  throw ConfigError("unknown space kind");
}

std::vector<std::vector<Complex>> resolve_generators(const CaseSpec& spec) {
  if (spec.generators.empty()) return default_generators(spec.n);
  if (static_cast<int>(spec.generators.size()) != spec.n) {
    throw ConfigError("need one generator polynomial per variable");
  }
  return spec.generators;
}

Subspace gen_tensor_invariant_subspace(const SpaceModel& model,
                                       const std::vector<std::vector<Complex>>& generators) {
  const TruncationGrid& grid = model.grid();
  const int n = grid.dimension();
  if (static_cast<int>(generators.size()) != n) {
    throw std::invalid_argument("need one generator polynomial per variable");
  }
  std::vector<TruncationGrid> factor_grids;
  std::vector<MatrixXcd> bases;
  for (int var = 0; var < n; ++var) {
    if (generators[var].empty()) {
      throw std::invalid_argument("empty generator list for variable " + var_label(var));
    }
    SpaceModel factor = model.one_variable_factor(var);
    factor_grids.push_back(factor.grid());
    bases.push_back(one_variable_closure(factor, generators[var]).basis());
  }
  Eigen::Index total = 1;
  for (const auto& b : bases) total *= b.cols();
  MatrixXcd cols(grid.size(), total);
  std::vector<Eigen::Index> sel(static_cast<size_t>(n), 0);
  const auto& indices = grid.indices();
  for (Eigen::Index out = 0; out < total; ++out) {
    for (Eigen::Index t = 0; t < grid.size(); ++t) {
      Complex v = 1.0;
      for (int var = 0; var < n; ++var) {
        v *= bases[var](factor_grids[var].position({indices[t][var]}), sel[var]);
      }
      cols(t, out) = v;
    }
    for (int var = 0; var < n; ++var) {
      if (++sel[var] < bases[var].cols()) break;
      sel[var] = 0;
    }
  }
  return from_generators(grid, cols);
}

Subspace gen_vanishing_ideal_subspace(const SpaceModel& model) {
  const TruncationGrid& grid = model.grid();
  const int n = grid.dimension();
  if (n < 2) {
    throw std::invalid_argument(
        "the vanishing ideal needs at least two variables; in one variable it is [z]");
  }
  std::vector<MultiIndex> coords;
  for (int i = 0; i < n; ++i) {
    MultiIndex e(static_cast<size_t>(n), 0);
    e[i] = 1;
    coords.push_back(std::move(e));
  }
  std::vector<OperatorMatrix> shifts;
  std::vector<const MatrixXcd*> ops;
  shifts.reserve(n);
  for (int i = 0; i < n; ++i) shifts.push_back(shift_compressed(model, i));
  for (const auto& s : shifts) ops.push_back(&s.matrix());
  return span_closure(grid, Subspace::monomial_span(grid, coords), ops);
}

SuiteReport scalar_inequality_suite(std::uint64_t seed, long trials) {
  if (trials < 1) throw ConfigError("trials must be at least 1");
  SuiteReport rep;
  rep.suite = "scalar-inequality";
  rep.anchor = "coefficient-inequality";

  const std::string inputs = "seed" + std::to_string(seed) + "|trials" + std::to_string(trials);
  const auto slack = [](const Complex& z, const Complex& w, int k) {
    return 2.0 * (std::norm(z) / k + std::norm(w) / (k + 2)) - std::norm(z + w) / (k + 1);
  };

  {
    CaseResult c = make_case(rep.suite, "fixed-equality-point", inputs);
    const double s = slack(Complex(1.0, 0.0), Complex(3.0, 0.0), 1);
    put(c, "slack", s);
    put(c, "lhs", std::norm(Complex(4.0, 0.0)) / 2.0);
    put(c, "rhs", 2.0 * (1.0 / 1.0 + 9.0 / 3.0));
    c.residual = std::abs(s);
    c.pass = std::abs(s) <= 1e-12;
    rep.cases.push_back(std::move(c));
  }

  // mt19937_64 output mapped to [0,1) by hand: the standard distributions
  // are implementation-defined, which would break byte determinism.
  std::mt19937_64 rng(seed);
  const auto u01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const auto sample_disc = [&](double scale) {
    const double r = scale * std::sqrt(u01());
    const double phi = 2.0 * std::numbers::pi * u01();
    return Complex(r * std::cos(phi), r * std::sin(phi));
  };

  {
    CaseResult c = make_case(rep.suite, "random-trials", inputs);
    long violations = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (long t = 0; t < trials; ++t) {
      const Complex z = sample_disc(10.0);
      const Complex w = sample_disc(10.0);
      const int k = 1 + static_cast<int>(u01() * 100.0);
      const double s = slack(z, w, k);
      min_slack = std::min(min_slack, s);
      if (s < -1e-12) ++violations;
    }
    put(c, "trials", static_cast<double>(trials));
    put(c, "violations", static_cast<double>(violations));
    put(c, "min_slack", min_slack);
    c.residual = std::max(0.0, -min_slack);
    c.pass = violations == 0;
    rep.cases.push_back(std::move(c));
  }

  {
    // Equality family (k+2) z = k w: the slack must vanish identically.
    CaseResult c = make_case(rep.suite, "equality-family", inputs);
    double worst = 0.0;
    for (long t = 0; t < trials; ++t) {
      const Complex z = sample_disc(10.0);
      const int k = 1 + static_cast<int>(u01() * 100.0);
      const Complex w = z * (static_cast<double>(k + 2) / static_cast<double>(k));
      worst = std::max(worst, std::abs(slack(z, w, k)));
    }
    put(c, "max_abs_slack", worst);
    c.residual = worst;
    c.pass = worst <= 1e-10;
    rep.cases.push_back(std::move(c));
  }

  finalize(rep);
  return rep;
}

SuiteReport shift_wandering_suite(const CaseSpec& spec) {
  SuiteReport rep;
  rep.suite = "theorem-2-1";
  rep.anchor = "richter-shimorin-wandering";
  fill_labels(rep, spec);

  SpaceModel model = make_model(spec);
  ShiftTuple tuple = ShiftTuple::coordinate_shifts(model, spec.margin);
  const std::string inputs = spec_fingerprint(spec);
  const Subspace full = Subspace::full(model.grid());
  const int min_cap = *std::min_element(spec.caps.begin(), spec.caps.end());

  for (int i = 0; i < spec.n; ++i) {
    const bool want_shimorin = spec.kind == SpaceKind::bergman || spec.kind == SpaceKind::hardy ||
                               spec.kind == SpaceKind::custom;
    const bool want_concave = spec.kind == SpaceKind::dirichlet || spec.kind == SpaceKind::hardy ||
                              (spec.kind == SpaceKind::custom && min_cap >= 2);

    if (spec.kind == SpaceKind::custom) {
      CaseResult c = make_case(rep.suite, "hypothesis-" + var_label(i), inputs);
      FormReport sh = check_shimorin(tuple.op(i), spec.margin, spec.tol_psd);
      put(c, "shimorin_min_eigenvalue", sh.min_eigenvalue);
      bool ok = sh.psd;
      if (want_concave) {
        FormReport co = check_concave(tuple.op(i), std::max(2, spec.margin), spec.tol_psd);
        put(c, "concavity_min_eigenvalue", co.min_eigenvalue);
        ok = ok || co.psd;
      }
      c.min_eig = sh.min_eigenvalue;
      c.pass = ok;
      rep.cases.push_back(std::move(c));
    } else {
      if (want_shimorin) {
        FormReport f = check_shimorin(tuple.op(i), spec.margin, spec.tol_psd);
        CaseResult c = make_case(rep.suite, "shimorin-" + var_label(i), inputs);
        put(c, "min_eigenvalue", f.min_eigenvalue);
        put(c, "max_eigenvalue", f.max_eigenvalue);
        put(c, "interior_dim", static_cast<double>(f.interior_dim));
        c.min_eig = f.min_eigenvalue;
        c.pass = f.psd;
        rep.cases.push_back(std::move(c));
      }
      if (want_concave) {
        FormReport f = check_concave(tuple.op(i), std::max(2, spec.margin), spec.tol_psd);
        CaseResult c = make_case(rep.suite, "concavity-" + var_label(i), inputs);
        put(c, "min_eigenvalue", f.min_eigenvalue);
        put(c, "max_eigenvalue", f.max_eigenvalue);
        put(c, "interior_dim", static_cast<double>(f.interior_dim));
        c.min_eig = f.min_eigenvalue;
        // The identity 2T*T - T*^2T^2 - I = 0 holds exactly for the
        // dirichlet weights, so both ends of the spectrum must sit at 0.
        c.pass = spec.kind == SpaceKind::dirichlet
                     ? std::abs(f.min_eigenvalue) <= spec.tol_psd &&
                           std::abs(f.max_eigenvalue) <= spec.tol_psd
                     : f.psd;
        rep.cases.push_back(std::move(c));
      }
    }

    WanderingSubspace w = wandering_subspace(full, tuple, {i});
    const int depth = default_depth(tuple, 0);
    WanderingReport wr =
        check_wandering(full, tuple, {i}, w.space, depth, spec.tol_residual, spec.tol_angle);
    CaseResult c = make_case(rep.suite, "wandering-" + var_label(i), inputs);
    put(c, "dim_w", static_cast<double>(w.space.dim()));
    put(c, "route_agreement_angle", w.route_agreement_angle);
    put(c, "orthogonality_residual", wr.orthogonality_residual);
    put(c, "depth", static_cast<double>(wr.depth));
    put(c, "closure_angle", wr.closure_angle);
    c.residual = wr.orthogonality_residual;
    c.angle = wr.closure_angle;
    c.pass = wr.pass && w.route_agreement_angle <= spec.tol_angle;
    rep.cases.push_back(std::move(c));
  }

  if (spec.kind == SpaceKind::bergman) {
    // The constant function witnesses failure of concavity for the bergman
    // shift: ||z^2||^2 + ||1||^2 = 4/3 while 2||z||^2 = 1. The interior
    // minimum eigenvalue of the concavity form sits exactly at -1/3.
    FormReport f = check_concave(tuple.op(0), std::max(2, spec.margin), spec.tol_psd);
    CaseResult c = make_case(rep.suite, "concavity-counterexample", inputs);
    const double lhs = 2.0 * model.variable_weight(0, 1);
    const double rhs = model.variable_weight(0, 2) + model.variable_weight(0, 0);
    put(c, "min_eigenvalue", f.min_eigenvalue);
    put(c, "witness_lhs", lhs);
    put(c, "witness_rhs", rhs);
    put(c, "witness_gap", rhs - lhs);
    c.min_eig = f.min_eigenvalue;
    c.pass = std::abs(f.min_eigenvalue + 1.0 / 3.0) <= 1e-12 &&
             std::abs((rhs - lhs) - 1.0 / 3.0) <= 1e-12;
    rep.cases.push_back(std::move(c));
  }

  finalize(rep);
  return rep;
}

SuiteReport doubly_commuting_wandering_suite(const CaseSpec& spec) {
  SuiteReport rep;
  rep.suite = "theorem-2-3";
  rep.anchor = "doubly-commuting-wandering";
  fill_labels(rep, spec);

  SpaceModel model = make_model(spec);
  ShiftTuple tuple = ShiftTuple::coordinate_shifts(model, spec.margin);
  const std::vector<int> alpha = validate_alpha(spec.alpha, spec.n);
  const std::string inputs = spec_fingerprint(spec);
  Subspace s = build_subspace(spec, model);
  ShiftRestriction restriction(s, tuple);

  {
    CaseResult c = make_case(rep.suite, "construction", inputs);
    put(c, "dim_s", static_cast<double>(s.dim()));
    double defect = 0.0;
    for (int i = 0; i < spec.n; ++i) {
      put(c, "invariance_defect_" + var_label(i), restriction.invariance_defect(i));
      defect = std::max(defect, restriction.invariance_defect(i));
    }
    c.residual = defect;
    c.pass = defect <= spec.tol_residual;
    rep.cases.push_back(std::move(c));
  }

  if (spec.n >= 2) {
    CommutationReport dc = check_doubly_commuting(restriction, spec.tol_residual);
    CaseResult c = make_case(rep.suite, "doubly-commuting", inputs);
    put(c, "max_residual", dc.max_residual);
    for (const PairResidual& p : dc.pairs) {
      put(c, "residual_" + var_label(p.i) + "_" + var_label(p.j), p.residual);
    }
    c.residual = dc.max_residual;
    c.pass = dc.pass;
    if (spec.recipe == Recipe::vanishing_ideal && !dc.pass) {
      c.notes = "commutation fails as expected for the vanishing ideal";
    }
    rep.cases.push_back(std::move(c));
  }

  append_wandering_cases(rep, spec, tuple, s, alpha, inputs);
  finalize(rep);
  return rep;
}

SuiteReport modulus_commutation_suite(const CaseSpec& spec) {
  SuiteReport rep;
  rep.suite = "theorem-2-5";
  rep.anchor = "wandering-converse";
  fill_labels(rep, spec);

  SpaceModel model = make_model(spec);
  ShiftTuple tuple = ShiftTuple::coordinate_shifts(model, spec.margin);
  const std::vector<int> alpha = validate_alpha(spec.alpha, spec.n);
  const std::string inputs = spec_fingerprint(spec);
  Subspace s = build_subspace(spec, model);
  ShiftRestriction restriction(s, tuple);

  if (spec.n >= 2) {
    CommutationReport dc = check_doubly_commuting(restriction, spec.tol_residual);
    CaseResult c = make_case(rep.suite, "doubly-commuting", inputs);
    put(c, "max_residual", dc.max_residual);
    c.residual = dc.max_residual;
    c.pass = dc.pass;
    if (spec.recipe == Recipe::vanishing_ideal && !dc.pass) {
      c.notes = "commutation fails as expected for the vanishing ideal";
    }
    rep.cases.push_back(std::move(c));
  }

  append_wandering_cases(rep, spec, tuple, s, alpha, inputs);

  if (spec.n >= 2) {
    CaseResult c = make_case(rep.suite, "modulus-commutation", inputs);
    double worst = 0.0;
    for (int i = 0; i < spec.n; ++i) {
      for (int j = 0; j < spec.n; ++j) {
        if (i == j) continue;
        const double r = commutes_with_modulus(restriction, i, j);
        put(c, "residual_" + var_label(i) + "_mod_" + var_label(j), r);
        worst = std::max(worst, r);
      }
    }
    put(c, "max_residual", worst);
    c.residual = worst;
    c.pass = worst <= spec.tol_residual;
    rep.cases.push_back(std::move(c));
  }

  for (int ai : alpha) {
    WoldReport wo = wold(s, tuple, ai);
    CaseResult c = make_case(rep.suite, "wold-" + var_label(ai), inputs);
    put(c, "split_orthogonality", wo.split_orthogonality);
    put(c, "unilateral_dim", static_cast<double>(wo.unilateral.dim()));
    put(c, "residual_dim", static_cast<double>(wo.residual.dim()));
    put(c, "s_interior_dim", static_cast<double>(wo.s_interior_dim));
    put(c, "sum_interior_dim", static_cast<double>(wo.sum_interior_dim));
    put(c, "dims_match", wo.dims_match ? 1.0 : 0.0);
    put(c, "nilpotent_truncation", wo.nilpotent_truncation ? 1.0 : 0.0);
    c.residual = wo.split_orthogonality;
    c.pass = wo.split_orthogonality <= spec.tol_residual &&
             (spec.recipe == Recipe::vanishing_ideal || wo.dims_match);
    if (spec.recipe == Recipe::vanishing_ideal) {
      c.notes = "dimension split recorded, not asserted, on the negative control";
    }
    rep.cases.push_back(std::move(c));
  }

  finalize(rep);
  return rep;
}

SuiteReport beurling_suite(SpaceKind kind, const std::vector<Complex>& theta, int cap,
                           double tol_residual, double tol_angle) {
  const int degree = polynomial_degree(theta);
  if (degree < 0) throw std::invalid_argument("theta must be a nonzero polynomial");
  if (degree >= cap) {
    throw ConfigError("theta degree " + std::to_string(degree) +
                      " must be below the cap " + std::to_string(cap));
  }
  const int val = polynomial_valuation(theta);

  CaseSpec label_spec;
  label_spec.kind = kind;
  label_spec.n = 1;
  label_spec.caps = {cap};
  label_spec.alpha = {0};

  SuiteReport rep;
  rep.suite = "beurling-1d";
  rep.anchor = "beurling-wold";
  fill_labels(rep, label_spec);

  std::ostringstream in;
  in << to_string(kind) << "|d" << cap << "|theta";
  for (const Complex& c : theta) in << c.real() << ',' << c.imag() << ';';
  const std::string inputs = in.str();

  TruncationGrid grid({cap});
  CaseSpec model_spec = label_spec;
  model_spec.recipe = Recipe::tensor;
  SpaceModel model = make_model(model_spec);
  ShiftTuple tuple = ShiftTuple::coordinate_shifts(model, 1);
  Subspace s = one_variable_closure(model, theta);
  WanderingSubspace w = wandering_subspace(s, tuple, {0});

  {
    // The compressed-shift closure of any nonzero polynomial is the span of
    // all monomials from its valuation up, for every positive weight family.
    CaseResult c = make_case(rep.suite, "construction", inputs);
    put(c, "dim_s", static_cast<double>(s.dim()));
    put(c, "expected_dim_s", static_cast<double>(cap + 1 - val));
    put(c, "valuation", static_cast<double>(val));
    c.pass = s.dim() == cap + 1 - val;
    rep.cases.push_back(std::move(c));
  }

  {
    const int depth = default_depth(tuple, degree);
    WanderingReport wr = check_wandering(s, tuple, {0}, w.space, depth, tol_residual, tol_angle);
    CaseResult c = make_case(rep.suite, "wandering", inputs);
    put(c, "dim_w", static_cast<double>(w.space.dim()));
    put(c, "route_agreement_angle", w.route_agreement_angle);
    put(c, "orthogonality_residual", wr.orthogonality_residual);
    put(c, "closure_angle", wr.closure_angle);
    put(c, "depth", static_cast<double>(wr.depth));
    c.residual = wr.orthogonality_residual;
    c.angle = wr.closure_angle;
    c.pass = wr.pass && w.route_agreement_angle <= tol_angle;
    rep.cases.push_back(std::move(c));
  }

  {
    CaseResult c = make_case(rep.suite, "span-identity", inputs);
    Subspace monomial = Subspace::monomial_span(grid, {{val}});
    Vec coeff = Vec::Zero(grid.size());
    for (size_t m = 0; m < theta.size(); ++m) {
      if (theta[m] != Complex(0.0, 0.0)) coeff(grid.position({static_cast<int>(m)})) = theta[m];
    }
    Subspace theta_span = from_generators(grid, model.to_isometric(coeff));
    const double angle_monomial =
        w.space.dim() == 1 ? largest_principal_angle(w.space, monomial) : kHalfPi;
    const double angle_theta =
        w.space.dim() == 1 ? largest_principal_angle(w.space, theta_span) : kHalfPi;
    put(c, "dim_w", static_cast<double>(w.space.dim()));
    put(c, "angle_to_monomial", angle_monomial);
    put(c, "angle_to_theta", angle_theta);
    c.angle = angle_monomial;
    if (w.space.dim() == 1) {
      // Human-readable W basis, scaled so the dominant coefficient is 1.
      Vec coeff = model.from_isometric(w.space.basis().col(0));
      Eigen::Index imax = 0;
      coeff.cwiseAbs().maxCoeff(&imax);
      coeff /= coeff(imax);
      std::ostringstream wtext;
      wtext << "w_coefficients=[";
      for (Eigen::Index t = 0; t < coeff.size(); ++t) {
        if (t) wtext << ',';
        Complex v = coeff(t);
        if (std::abs(v) < 1e-10) v = Complex(0.0, 0.0);
        wtext << v.real();
        if (std::abs(v.imag()) >= 1e-10) wtext << (v.imag() >= 0 ? "+" : "") << v.imag() << 'i';
      }
      wtext << ']';
      c.notes = wtext.str();
    }
    if (kind == SpaceKind::hardy) {
      // W = span{z^val}; this coincides with span{theta} exactly when theta
      // is a scaled monomial (the only polynomials that are inner).
      c.pass = w.space.dim() == 1 && angle_monomial <= tol_angle;
      if (val != degree) {
        if (!c.notes.empty()) c.notes += "; ";
        c.notes += "theta is not a monomial; angle_to_theta recorded only";
      }
    } else {
      c.pass = true;
      if (!c.notes.empty()) c.notes += "; ";
      c.notes += "dimension recorded, not asserted, for this weight family";
    }
    rep.cases.push_back(std::move(c));
  }

  {
    WoldReport wo = wold(s, tuple, 0);
    CaseResult c = make_case(rep.suite, "wold", inputs);
    put(c, "split_orthogonality", wo.split_orthogonality);
    put(c, "unilateral_dim", static_cast<double>(wo.unilateral.dim()));
    put(c, "residual_dim", static_cast<double>(wo.residual.dim()));
    put(c, "s_interior_dim", static_cast<double>(wo.s_interior_dim));
    put(c, "sum_interior_dim", static_cast<double>(wo.sum_interior_dim));
    put(c, "nilpotent_truncation", wo.nilpotent_truncation ? 1.0 : 0.0);
    c.residual = wo.split_orthogonality;
    c.pass = wo.residual.dim() == 0 && wo.split_orthogonality <= tol_residual && wo.dims_match;
    rep.cases.push_back(std::move(c));
  }

  finalize(rep);
  return rep;
}

SuiteReport negative_control_suite(double tol_residual, double tol_angle) {
  CaseSpec spec;
  spec.kind = SpaceKind::hardy;
  spec.n = 2;
  spec.caps = {8, 8};
  spec.alpha = {0, 1};
  spec.recipe = Recipe::vanishing_ideal;
  spec.tol_residual = tol_residual;
  spec.tol_angle = tol_angle;

  SuiteReport rep;
  rep.suite = "negative-examples";
  rep.anchor = "non-doubly-commuting-control";
  fill_labels(rep, spec);

  SpaceModel model = make_model(spec);
  ShiftTuple tuple = ShiftTuple::coordinate_shifts(model, spec.margin);
  const std::string inputs = spec_fingerprint(spec);
  Subspace s = gen_vanishing_ideal_subspace(model);
  ShiftRestriction restriction(s, tuple);
  WanderingSubspace w = wandering_subspace(s, tuple, {0, 1});

  {
    CommutationReport dc = check_doubly_commuting(restriction, tol_residual);
    CaseResult c = make_case(rep.suite, "doubly-commuting-violation", inputs);
    put(c, "max_residual", dc.max_residual);
    c.residual = dc.max_residual;
    c.pass = dc.max_residual > 0.1;
    c.notes = "the control must violate commutation decisively";
    rep.cases.push_back(std::move(c));
  }

  {
    // [W_{1,2}] closed under z_1 alone must disagree with S ominus z_2 S.
    Subspace lhs = interior_projection(invariant_closure(w.space, {0}, tuple), spec.margin);
    Subspace rhs = interior_projection(wandering_subspace(s, tuple, {1}).space, spec.margin);
    CaseResult c = make_case(rep.suite, "inductive-identity-violation", inputs);
    put(c, "closure_interior_dim", static_cast<double>(lhs.dim()));
    put(c, "target_interior_dim", static_cast<double>(rhs.dim()));
    const bool dims_equal = lhs.dim() == rhs.dim();
    c.angle = dims_equal ? largest_principal_angle(lhs, rhs) : kHalfPi;
    put(c, "angle", c.angle);
    c.pass = !(dims_equal && c.angle <= tol_angle);
    rep.cases.push_back(std::move(c));
  }

  {
    Subspace closure = invariant_closure(w.space, {0, 1}, tuple);
    Subspace s_int = interior_projection(s, spec.margin);
    Subspace cl_int = interior_projection(closure, spec.margin);
    CaseResult c = make_case(rep.suite, "joint-closure-deficit", inputs);
    put(c, "s_interior_dim", static_cast<double>(s_int.dim()));
    put(c, "closure_interior_dim", static_cast<double>(cl_int.dim()));
    put(c, "deficit", static_cast<double>(s_int.dim() - cl_int.dim()));
    c.pass = true;
    c.notes = "recorded only: the joint closure recovers S at this truncation";
    rep.cases.push_back(std::move(c));
  }

  {
    const int depth = default_depth(tuple, 1);
    WanderingReport wr = check_wandering(s, tuple, {0, 1}, w.space, depth, tol_residual, tol_angle);
    CaseResult c = make_case(rep.suite, "wandering-property-retained", inputs);
    put(c, "dim_w", static_cast<double>(w.space.dim()));
    put(c, "orthogonality_residual", wr.orthogonality_residual);
    put(c, "closure_angle", wr.closure_angle);
    c.residual = wr.orthogonality_residual;
    c.angle = wr.closure_angle;
    c.pass = wr.pass;
    c.notes = "commutation, not the wandering property, is what breaks here";
    rep.cases.push_back(std::move(c));
  }

  finalize(rep);
  return rep;
}

}  // namespace polywander
