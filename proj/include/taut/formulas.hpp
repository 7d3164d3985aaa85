#pragma once

#include <span>
#include <vector>

#include "taut/combinatorics.hpp"
#include "taut/expr.hpp"

namespace taut {

/// Where the 1/2 of the Hodge bundle formula sits.
enum class HodgeNormalization {
  BoundaryHalf,  // ch_{2m-1}(E) = B_2m/(2m)! (kappa~ + 1/2 boundary); keeps K = 13 lambda + psi - 2 delta
  WholeBrace,    // 1/2 in front of the whole brace, kappa~ included
};

enum class Bundle { Cotangent, Tangent };
enum class Basis { Kappa, Lambda };
enum class KappaDirection { ToKappa, ToKappaTilde };

/// Entry i is the k = i+1 term (-1)^{k-1} (x+y)^{k-1} / k!, for k = 1..order+1.
std::vector<SymPoly2> xi1_series(int order);

/// Coefficient of kappa_d in the cotangent Chern character:
/// 1/(d+1)! + 1/(2 d!) - a_{d+1} (the last term only for d >= 2).
Rational kappa_coeff(int d);

/// 3g - 3 + n.
int cotangent_rank(const ModuliSpec& spec);

/// Positive-degree part of ch of the cotangent bundle, up to `order`.
/// Concrete specs are assembled split by split, not through the aggregate atoms.
TautExpr ch_cotangent(const ModuliSpec& spec, int order);

/// (-1)^j on the degree-j part.
TautExpr dualize(const TautExpr& e);

TautExpr ch_tangent(const ModuliSpec& spec, int order);

TautExpr ch_bundle(const ModuliSpec& spec, int order, Bundle bundle);

/// Positive-degree part of ch(E) in kappa~ and boundary atoms.
TautExpr hodge_ch(const ModuliSpec& spec, int order,
                  HodgeNormalization normalization = HodgeNormalization::BoundaryHalf,
                  bool rewrite_kappa_tilde = false);

/// Replaces every ch_k(E) atom by its expansion.
TautExpr expand_hodge(const TautExpr& e, HodgeNormalization normalization = HodgeNormalization::BoundaryHalf);

/// kappa_m = kappa~_m + sum_p psi_p^m, in either direction.
TautExpr kappa_tilde_rewrite(const TautExpr& e, KappaDirection direction);

/// psi written in the spec's mode: the power sum, or one class per marking.
TautExpr psi_total(const ModuliSpec& spec, int order, int power = 1);

/// 12 lambda + psi - delta, the value of kappa_1 in the lambda basis.
TautExpr kappa1_in_lambda_basis(const ModuliSpec& spec, int order);

/// (kappa_1 - psi + delta) / 12, the value of lambda in the kappa basis.
TautExpr lambda_in_kappa_basis(const ModuliSpec& spec, int order);

/// Eliminates kappa_1 and folds the boundary atoms of delta back into delta.
TautExpr to_lambda_basis(const TautExpr& e);

/// K = 13 lambda + psi - 2 delta.
TautExpr canonical_class(const ModuliSpec& spec);

/// ch_1 .. ch_jmax of e.
std::vector<TautExpr> graded_components(const TautExpr& e, int jmax);

/// c_1 .. c_jmax from ch_1 .. ch_r through the partition expansion; ch[r-1] = ch_r.
std::vector<TautExpr> chern_from_ch(std::span<const TautExpr> ch, int jmax);

/// Same classes through exp(sum_r (-1)^{r-1} (r-1)! ch_r).
std::vector<TautExpr> chern_exp_oracle(std::span<const TautExpr> ch, int jmax);

/// c_1 .. c_jmax of the tangent or cotangent bundle.
std::vector<TautExpr> chern_classes(const ModuliSpec& spec, int jmax, Bundle bundle, Basis basis);

}  // namespace taut
