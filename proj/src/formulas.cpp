#include "taut/formulas.hpp"

#include <algorithm>

#include "taut/error.hpp"

namespace taut {

std::vector<SymPoly2> xi1_series(int order) {
  if (order < 0) throw DomainError("xi1_series requires order >= 0");
  std::vector<SymPoly2> out;
  for (int k = 1; k <= order + 1; ++k) {
    const Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
    out.push_back(power_sym(k - 1).scaled(sign * inverse_factorial(k)));
  }
  return out;
}

Rational kappa_coeff(int d) {
  if (d < 1) throw DomainError("kappa coefficient is defined for d >= 1");
  Rational c = inverse_factorial(d + 1) + Rational(1, 2) * inverse_factorial(d);
  if (d + 1 >= 3) c -= a_coeff(d + 1);
  return c;
}

int cotangent_rank(const ModuliSpec& spec) { return spec.dimension(); }

namespace {

// The kappa and ch(E) part, common to both modes.
TautExpr kappa_hodge_part(const ModuliSpec& spec, int order) {
  TautExpr e(spec, order);
  for (int d = 1; d <= e.order(); ++d) {
    e.add_term(Monomial::of(Generator::kappa(d)), kappa_coeff(d));
    if (d % 2 == 1) e.add_term(Monomial::of(Generator::che(d)), 1);
  }
  return e;
}

TautExpr ch_cotangent_generic(const ModuliSpec& spec, int order) {
  TautExpr e = kappa_hodge_part(spec, order);
  const auto xi = xi1_series(e.order());
  const Rational minus_half(-1, 2);
  // xi[k-1] has degree k-1 and is pushed forward into degree k
  for (int k = 1; k <= e.order(); ++k) {
    for (const auto& [key, c] : xi[static_cast<std::size_t>(k - 1)].terms()) {
      e.add_term(Monomial::of(Generator::b_irr(key.a, key.b)), minus_half * c);
      e.add_term(Monomial::of(Generator::b_sep_sum(key.a, key.b)), minus_half * c);
    }
  }
  return e;
}

// Expands (psi_1 + psi_2)^{k-1} monomial by monomial and pushes each one forward
// along every ordered split; the irreducible map identifies x^i y^j with x^j y^i.
TautExpr ch_cotangent_concrete(const ModuliSpec& spec, int order) {
  TautExpr e = kappa_hodge_part(spec, order);
  const auto splits = spec.ordered_splits();
  for (int k = 1; k <= e.order(); ++k) {
    const Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
    const Rational scale = Rational(-1, 2) * sign * inverse_factorial(k);
    for (int i = 0; i <= k - 1; ++i) {
      const int j = k - 1 - i;
      const Rational c = scale * Rational(binomial(k - 1, i));
      const Rational irr_weight = (i == j) ? Rational(1) : Rational(1, 2);
      e.add_term(Monomial::of(Generator::b_irr(i, j)), c * irr_weight);
      for (const auto& s : splits) e.add_term(Monomial::of(Generator::b_sep(spec, s, i, j)), c);
    }
  }
  return e;
}

}  // namespace

TautExpr ch_cotangent(const ModuliSpec& spec, int order) {
  if (order < 1) throw DomainError("ch_cotangent requires a degree bound >= 1");
  return spec.is_concrete() ? ch_cotangent_concrete(spec, order) : ch_cotangent_generic(spec, order);
}

TautExpr dualize(const TautExpr& e) {
  TautExpr out(e.spec(), e.order());
  for (const auto& [m, c] : e.terms()) out.add_term(m, m.degree() % 2 == 0 ? c : -c);
  return out;
}

TautExpr ch_tangent(const ModuliSpec& spec, int order) { return dualize(ch_cotangent(spec, order)); }

TautExpr ch_bundle(const ModuliSpec& spec, int order, Bundle bundle) {
  return bundle == Bundle::Tangent ? ch_tangent(spec, order) : ch_cotangent(spec, order);
}

TautExpr hodge_ch(const ModuliSpec& spec, int order, HodgeNormalization normalization, bool rewrite_kappa_tilde) {
  const ModuliSpec generic = spec.as_generic();
  TautExpr e(generic, order);
  for (int m = 1; 2 * m - 1 <= order; ++m) {
    const Rational c = bernoulli(2 * m) * inverse_factorial(2 * m);
    const Rational kappa_weight = normalization == HodgeNormalization::BoundaryHalf ? c : c / 2;
    const Rational boundary_weight = c / 2;
    e.add_term(Monomial::of(Generator::kappa_tilde(2 * m - 1)), kappa_weight);
    const SymPoly2 alternating = alternating_sym(2 * m - 2);
    for (const auto& [key, v] : alternating.terms()) {
      e.add_term(Monomial::of(Generator::b_irr(key.a, key.b)), boundary_weight * v);
      e.add_term(Monomial::of(Generator::b_sep_sum(key.a, key.b)), boundary_weight * v);
    }
  }
  if (rewrite_kappa_tilde) e = kappa_tilde_rewrite(e, KappaDirection::ToKappa);
  return spec.is_concrete() ? expand_concrete(e, spec) : e;
}

TautExpr expand_hodge(const TautExpr& e, HodgeNormalization normalization) {
  const TautExpr hodge = hodge_ch(e.spec(), std::max(e.order(), 1), normalization).with_order(e.order());
  TautExpr out = e;
  for (int k = 1; k <= e.order(); k += 2) out = substitute(out, Generator::che(k), hodge.component(k));
  return out;
}

TautExpr psi_total(const ModuliSpec& spec, int order, int power) {
  if (!spec.is_concrete()) return TautExpr::of(spec, order, Generator::psi_pow(power));
  TautExpr out(spec, order);
  for (int p = 0; p < spec.n(); ++p) out += TautExpr::of(spec, order, Generator::psi(p)).pow(power);
  return out;
}

TautExpr kappa_tilde_rewrite(const TautExpr& e, KappaDirection direction) {
  TautExpr out = e;
  for (int m = 1; m <= e.order(); ++m) {
    if (direction == KappaDirection::ToKappa) {
      const TautExpr rule = TautExpr::of(e.spec(), e.order(), Generator::kappa(m)) - psi_total(e.spec(), e.order(), m);
      out = substitute(out, Generator::kappa_tilde(m), rule);
    } else {
      const TautExpr rule =
          TautExpr::of(e.spec(), e.order(), Generator::kappa_tilde(m)) + psi_total(e.spec(), e.order(), m);
      out = substitute(out, Generator::kappa(m), rule);
    }
  }
  return out;
}

TautExpr kappa1_in_lambda_basis(const ModuliSpec& spec, int order) {
  TautExpr rule = TautExpr::of(spec, order, Generator::lambda(), 12);
  rule += psi_total(spec, order);
  rule -= TautExpr::of(spec, order, Generator::delta());
  return rule;
}

TautExpr lambda_in_kappa_basis(const ModuliSpec& spec, int order) {
  TautExpr rule = TautExpr::of(spec, order, Generator::kappa(1));
  rule -= psi_total(spec, order);
  rule += TautExpr::of(spec, order, Generator::delta());
  return rule * Rational(1, 12);
}

TautExpr to_lambda_basis(const TautExpr& e) {
  if (e.order() < 1) return e;
  return fold_delta(substitute(e, Generator::kappa(1), kappa1_in_lambda_basis(e.spec(), e.order())));
}

TautExpr canonical_class(const ModuliSpec& spec) {
  const int order = 1;
  TautExpr k = TautExpr::of(spec.as_generic(), order, Generator::lambda(), 13);
  k += TautExpr::of(spec.as_generic(), order, Generator::psi_pow(1));
  k -= TautExpr::of(spec.as_generic(), order, Generator::delta(), 2);
  return spec.is_concrete() ? expand_concrete(k, spec) : k;
}

std::vector<TautExpr> graded_components(const TautExpr& e, int jmax) {
  std::vector<TautExpr> out;
  for (int d = 1; d <= jmax; ++d) out.push_back(e.component(d));
  return out;
}

namespace {

void require_components(std::span<const TautExpr> ch, int jmax) {
  if (jmax < 0) throw DomainError("jmax must be non-negative");
  if (static_cast<int>(ch.size()) < jmax) {
    throw DomainError("ch_" + std::to_string(ch.size() + 1) + " is missing");
  }
  for (std::size_t i = 1; i < ch.size(); ++i) {
    if (!(ch[i].spec() == ch[0].spec()) || ch[i].order() != ch[0].order()) {
      throw DomainError("ch components live on different specs or orders");
    }
  }
}

}  // namespace

std::vector<TautExpr> chern_from_ch(std::span<const TautExpr> ch, int jmax) {
  require_components(ch, jmax);
  std::vector<TautExpr> out;
  for (int j = 1; j <= jmax; ++j) {
    TautExpr cj(ch[0].spec(), ch[0].order());
    for (const auto& mu : partitions(j)) {
      TautExpr term = TautExpr::constant(cj.spec(), cj.order(), chern_partition_coeff(mu));
      for (int part : mu.parts()) term = term * ch[static_cast<std::size_t>(part - 1)];
      cj += term;
    }
    out.push_back(std::move(cj));
  }
  return out;
}

std::vector<TautExpr> chern_exp_oracle(std::span<const TautExpr> ch, int jmax) {
  require_components(ch, jmax);
  if (jmax == 0) return {};
  const ModuliSpec& spec = ch[0].spec();
  const int order = ch[0].order();
  TautExpr x(spec, order);
  for (int r = 1; r <= jmax; ++r) {
    const Rational sign = (r % 2 == 1) ? Rational(1) : Rational(-1);
    x += ch[static_cast<std::size_t>(r - 1)] * (sign * Rational(factorial(r - 1)));
  }
  TautExpr total = TautExpr::constant(spec, order, 1);
  TautExpr power = TautExpr::constant(spec, order, 1);
  for (int k = 1; k <= jmax; ++k) {
    power = power * x;
    total += power * inverse_factorial(k);
  }
  std::vector<TautExpr> out;
  for (int j = 1; j <= jmax; ++j) out.push_back(total.component(j));
  return out;
}

std::vector<TautExpr> chern_classes(const ModuliSpec& spec, int jmax, Bundle bundle, Basis basis) {
  if (jmax == 0) return {};
  TautExpr ch = ch_bundle(spec, jmax, bundle);
  if (basis == Basis::Lambda) {
    ch = substitute(ch, Generator::kappa(1), kappa1_in_lambda_basis(spec, ch.order()));
  }
  const auto components = graded_components(ch, jmax);
  auto classes = chern_from_ch(components, jmax);
  if (basis == Basis::Lambda) {
    for (auto& c : classes) c = fold_delta(c);
  }
  return classes;
}

}  // namespace taut
