#pragma once

#include <map>
#include <vector>

#include "taut/generator.hpp"
#include "taut/moduli.hpp"
#include "taut/rational.hpp"

namespace taut {

/// Graded formal sum of monomials with rational coefficients, truncated above
/// a fixed order. Terms that vanish on the spec (see `vanishes`) or exceed the
/// order are never stored; in concrete mode the order is capped at the
/// dimension of the moduli space.
class TautExpr {
 public:
  using Terms = std::map<Monomial, Rational>;

  TautExpr(ModuliSpec spec, int order);

  static TautExpr constant(const ModuliSpec& spec, int order, const Rational& c);
  static TautExpr of(const ModuliSpec& spec, int order, const Generator& g, const Rational& c = 1);

  const ModuliSpec& spec() const { return spec_; }
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;
  Rational coeff(const Generator& g) const { return coeff(Monomial::of(g)); }

  void add_term(const Monomial& m, const Rational& c);

  /// Degree-d part, same order.
  TautExpr component(int d) const;
  /// Same terms re-truncated at a new order.
  TautExpr with_order(int order) const;
  int max_degree() const;
  bool is_homogeneous(int d) const;

  TautExpr operator-() const;
  TautExpr& operator+=(const TautExpr& rhs);
  TautExpr& operator-=(const TautExpr& rhs);
  TautExpr& operator*=(const Rational& c);
  friend TautExpr operator+(TautExpr a, const TautExpr& b) { return a += b; }
  friend TautExpr operator-(TautExpr a, const TautExpr& b) { return a -= b; }
  friend TautExpr operator*(TautExpr a, const Rational& c) { return a *= c; }
  friend TautExpr operator*(const Rational& c, TautExpr a) { return a *= c; }
  friend TautExpr operator*(const TautExpr& a, const TautExpr& b);

  TautExpr pow(int k) const;

  friend bool operator==(const TautExpr& a, const TautExpr& b);

  /// Throws unless both live on the same spec with the same order.
  void require_compatible(const TautExpr& other, const char* op) const;

 private:
  ModuliSpec spec_;
  int order_;
  Terms terms_;
};

/// Canonical-form equality; specs and orders must agree.
bool expr_equal(const TautExpr& a, const TautExpr& b);

/// Replace every occurrence of `source` by `rule`, which must be homogeneous of
/// the same degree and live on the same spec.
TautExpr substitute(const TautExpr& e, const Generator& source, const TautExpr& rule);

/// delta = 1/2 xi_irr_*(1) + 1/2 sum_{h,A} xi_{h,A}_*(1), written in the
/// boundary atoms of the spec's mode.
TautExpr delta_atoms(const ModuliSpec& spec, int order);

TautExpr expand_delta(const TautExpr& e);

/// Rewrite onto a concrete spec with the same genus and number of markings:
/// psi power sums, delta and aggregate separating atoms become sums over
/// explicit markings and splits.
TautExpr expand_concrete(const TautExpr& e, const ModuliSpec& target);
TautExpr expand_concrete(const TautExpr& e);

/// Inverse of `expand_delta` where the atom pattern of delta occurs with
/// matching coefficients; anything else is left alone.
TautExpr fold_delta(const TautExpr& e);

}  // namespace taut
