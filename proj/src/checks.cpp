#include "taut/checks.hpp"

#include <bit>
#include <functional>
#include <random>
#include <sstream>

#include "taut/combinatorics.hpp"
#include "taut/formulas.hpp"
#include "taut/render.hpp"
#include "taut/series.hpp"

namespace taut {

namespace {

const std::vector<std::pair<int, int>> kTestSpecs = {{0, 4}, {1, 1}, {2, 0}, {2, 1}, {3, 2}};

// coefficient of t^m in (sum_{h>=1} B_2h t^2h/(2h)!) (e^t - 1)
Rational a_coeff_by_series(int m) {
  Rational sum;
  for (int h = 1; 2 * h <= m - 1; ++h) sum += bernoulli(2 * h) * inverse_factorial(2 * h) * inverse_factorial(m - 2 * h);
  return sum;
}

std::vector<TautExpr> random_ch(std::mt19937& rng, const ModuliSpec& spec, int jmax) {
  const std::vector<Generator> alphabet = {Generator::kappa(1), Generator::lambda(), Generator::delta(),
                                           Generator::kappa(2), Generator::b_irr(1, 0), Generator::kappa(3)};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(alphabet.size()) - 1);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> count(0, 2);
  std::vector<TautExpr> ch;
  for (int r = 1; r <= jmax; ++r) {
    TautExpr e(spec, jmax);
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
      // build a degree-r monomial greedily out of the alphabet
      std::vector<Generator> factors;
      int remaining = r;
      for (int guard = 0; remaining > 0 && guard < 64; ++guard) {
        const Generator& g = alphabet[static_cast<std::size_t>(pick(rng))];
        if (g.degree() <= remaining) {
          factors.push_back(g);
          remaining -= g.degree();
        }
      }
      if (remaining == 0) e.add_term(Monomial(std::move(factors)), Rational(num(rng), den(rng)));
    }
    ch.push_back(std::move(e));
  }
  return ch;
}

CheckResult check(std::string name, const std::function<bool(std::string&)>& body) {
  CheckResult r{std::move(name), false, {}};
  try {
    r.passed = body(r.detail);
  } catch (const std::exception& ex) {
    r.detail = std::string("exception: ") + ex.what();
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  const int order = options.order;
  std::vector<CheckResult> out;

  out.push_back(check("bernoulli_vs_series_inversion", [](std::string& detail) {
    const auto todd = todd_coefficients(30);
    for (int k = 0; k <= 30; k += 2) {
      if (bernoulli(k) * inverse_factorial(k) != todd[static_cast<std::size_t>(k)]) {
        detail = "B_" + std::to_string(k);
        return false;
      }
    }
    return true;
  }));

  out.push_back(check("a_m_vs_generating_function", [](std::string& detail) {
    for (int m = 3; m <= 20; ++m) {
      if (a_coeff(m) != a_coeff_by_series(m)) {
        detail = "a_" + std::to_string(m);
        return false;
      }
    }
    return true;
  }));

  out.push_back(check("theta_identity", [&](std::string& detail) {
    BiSeries theta = theta_series(order - 2);
    if (options.inject_fault) theta.set(1, 0, -theta.coeff(1, 0));
    detail = "through total degree " + std::to_string(order);
    return verify_theta_against(order, theta);
  }));

  out.push_back(check("todd_bernoulli_expansion", [&](std::string& detail) {
    const int n = std::max(order, 20);
    detail = "through degree " + std::to_string(n);
    return verify_todd_bernoulli(n);
  }));

  out.push_back(check("psi_series_identity", [&](std::string& detail) {
    const BiSeries lhs = eighteen_lhs(order);
    const BiSeries rhs = eighteen_rhs(order);
    for (int m = 1; m <= order; ++m) {
      if (lhs.coeff(0, m) != rhs.coeff(0, m)) {
        detail = "psi^" + std::to_string(m) + ": expansion gives " + lhs.coeff(0, m).str() + ", stated series gives " +
                 rhs.coeff(0, m).str();
        return false;
      }
    }
    return verify_eighteen(order);
  }));

  out.push_back(check("psi_series_matches_kappa_coefficients", [&](std::string& detail) {
    const BiSeries rhs = eighteen_rhs(order);
    const TautExpr ch = ch_cotangent(ModuliSpec::generic(2, 1), order - 1);
    for (int m = 2; m <= order; ++m) {
      if (rhs.coeff(0, m) != ch.coeff(Generator::kappa(m - 1))) {
        detail = "kappa_" + std::to_string(m - 1);
        return false;
      }
    }
    return true;
  }));

  out.push_back(check("chern_partition_vs_exp_oracle", [](std::string& detail) {
    std::mt19937 rng(20061);
    const ModuliSpec spec = ModuliSpec::generic(3, 2);
    for (int trial = 0; trial < 100; ++trial) {
      const int jmax = 1 + trial % 8;
      const auto ch = random_ch(rng, spec, jmax);
      const auto lhs = chern_from_ch(ch, jmax);
      const auto rhs = chern_exp_oracle(ch, jmax);
      for (int j = 0; j < jmax; ++j) {
        if (!(lhs[static_cast<std::size_t>(j)] == rhs[static_cast<std::size_t>(j)])) {
          detail = "trial " + std::to_string(trial) + ", c_" + std::to_string(j + 1);
          return false;
        }
      }
    }
    return true;
  }));

  out.push_back(check("line_bundle_chern_classes", [](std::string& detail) {
    const ModuliSpec spec = ModuliSpec::generic(1, 1);
    const int jmax = 8;
    const TautExpr x = TautExpr::of(spec, jmax, Generator::delta());
    std::vector<TautExpr> ch;
    for (int r = 1; r <= jmax; ++r) ch.push_back(x.pow(r) * inverse_factorial(r));
    const auto c = chern_from_ch(ch, jmax);
    if (!(c[0] == x)) return false;
    for (int j = 2; j <= jmax; ++j) {
      if (!c[static_cast<std::size_t>(j - 1)].is_zero()) {
        detail = "c_" + std::to_string(j);
        return false;
      }
    }
    return true;
  }));

  out.push_back(check("canonical_class", [](std::string& detail) {
    for (const auto& [g, n] : kTestSpecs) {
      for (const auto& spec : {ModuliSpec::generic(g, n), ModuliSpec::concrete(g, n)}) {
        const TautExpr ch1 = ch_cotangent(spec, 1);
        const TautExpr lhs = expand_delta(to_lambda_basis(ch1));
        const TautExpr rhs = expand_delta(canonical_class(spec).with_order(ch1.order()));
        if (!(lhs == rhs) || cotangent_rank(spec) != 3 * g - 3 + n) {
          detail = spec.str();
          return false;
        }
      }
    }
    return true;
  }));

  out.push_back(check("ch2_example", [](std::string& detail) {
    for (const auto& spec : {ModuliSpec::generic(2, 1), ModuliSpec::concrete(2, 1)}) {
      const ModuliSpec generic = spec.as_generic();
      TautExpr expected = TautExpr::of(generic, 2, Generator::kappa(2), Rational(1, 3));
      expected += TautExpr::of(generic, 2, Generator::b_irr(1, 0), Rational(1, 4));
      expected += TautExpr::of(generic, 2, Generator::b_sep_sum(1, 0), Rational(1, 4));
      if (spec.is_concrete()) expected = expand_concrete(expected, spec);
      if (!(ch_cotangent(spec, 2).component(2) == expected.component(2))) {
        detail = spec.str();
        return false;
      }
    }
    return true;
  }));

  out.push_back(check("ch3_tangent_example", [](std::string& detail) {
    const TautExpr ch3 = ch_tangent(ModuliSpec::generic(2, 1), 3).component(3);
    const SymPoly2 square = power_sym(2);
    const bool ok = ch3.coeff(Generator::kappa(3)) == Rational(-1, 12) && ch3.coeff(Generator::che(3)) == Rational(-1) &&
                    ch3.coeff(Generator::b_irr(2, 0)) == square.coeff({2, 0}) / 12 &&
                    ch3.coeff(Generator::b_irr(1, 1)) == square.coeff({1, 1}) / 12 &&
                    ch3.coeff(Generator::b_sep_sum(2, 0)) == Rational(1, 12) &&
                    ch3.coeff(Generator::b_sep_sum(1, 1)) == Rational(2, 12);
    detail = "irr m_(1,1) coefficient " + ch3.coeff(Generator::b_irr(1, 1)).str() + " (printed example: 1/12)";
    return ok;
  }));

  out.push_back(check("dualize_involution", [&](std::string&) {
    const TautExpr ch = ch_cotangent(ModuliSpec::generic(3, 2), order);
    return dualize(dualize(ch)) == ch && dualize(ch).component(2) == ch.component(2);
  }));

  out.push_back(check("hodge_even_degrees_vanish", [&](std::string& detail) {
    for (const auto& [g, n] : kTestSpecs) {
      const TautExpr h = hodge_ch(ModuliSpec::generic(g, n), order);
      for (int d = 2; d <= order; d += 2) {
        if (!h.component(d).is_zero()) {
          detail = "degree " + std::to_string(d);
          return false;
        }
      }
    }
    return true;
  }));

  out.push_back(check("hodge_degree1_matches_lambda_relation", [](std::string&) {
    const ModuliSpec spec = ModuliSpec::generic(2, 1);
    const TautExpr lambda = hodge_ch(spec, 1, HodgeNormalization::BoundaryHalf, true);
    return expand_delta(lambda) == expand_delta(lambda_in_kappa_basis(spec, 1));
  }));

  out.push_back(check("whole_brace_normalization_is_inconsistent", [](std::string& detail) {
    const ModuliSpec spec = ModuliSpec::generic(2, 1);
    const TautExpr lambda = hodge_ch(spec, 1, HodgeNormalization::WholeBrace, true);
    detail = "lambda = " + render(lambda, Format::Text);
    return !(expand_delta(lambda) == expand_delta(lambda_in_kappa_basis(spec, 1)));
  }));

  out.push_back(check("generic_then_concrete_equals_concrete", [](std::string& detail) {
    for (const auto& [g, n] : kTestSpecs) {
      const ModuliSpec concrete = ModuliSpec::concrete(g, n);
      const TautExpr generic = ch_cotangent(ModuliSpec::generic(g, n), 4);
      if (!(expand_concrete(generic, concrete) == ch_cotangent(concrete, 4))) {
        detail = concrete.str();
        return false;
      }
    }
    return true;
  }));

  out.push_back(check("boundary_divisor_counts", [](std::string& detail) {
    const std::vector<std::tuple<int, int, std::size_t>> expected = {{0, 5, 10}, {0, 6, 25}, {1, 1, 1}, {2, 0, 2}};
    for (const auto& [g, n, count] : expected) {
      const auto divisors = enumerate_boundary(ModuliSpec::concrete(g, n));
      if (divisors.size() != count) {
        detail = "(" + std::to_string(g) + "," + std::to_string(n) + "): " + std::to_string(divisors.size());
        return false;
      }
    }
    return true;
  }));

  out.push_back(check("rendering_is_deterministic", [&](std::string&) {
    const ModuliSpec spec = ModuliSpec::concrete(2, 1);
    const TautExpr a = ch_cotangent(spec, order);
    const TautExpr b = ch_cotangent(spec, order);
    const std::string json = render(a, Format::Json);
    return render(a, Format::Text) == render(b, Format::Text) && json == render(b, Format::Json) &&
           render(from_json(nlohmann::ordered_json::parse(json)), Format::Json) == json;
  }));

  return out;
}

}  // namespace taut
