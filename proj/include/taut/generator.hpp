#pragma once

#include <compare>
#include <vector>

#include "taut/moduli.hpp"

namespace taut {

/// Generator alphabet of the tautological algebra. Declaration order is the
/// canonical total order used for monomials and rendering.
enum class GenKind {
  Kappa,       // kappa_m
  KappaTilde,  // kappa~_m
  Che,         // ch_k(E), k odd; ch_1(E) = lambda
  PsiPow,      // sum_p psi_p^m (generic)
  Psi,         // psi_p (concrete)
  Delta,       // total boundary class
  BIrr,        // xi_irr_*(m_(a,b)(psi_q1, psi_q2))
  BSepSum,     // sum over ordered (h, A) of xi_{h,A}_*(m_(a,b)(psi_r1, psi_r2))
  BSep,        // xi_{h,A}_*(psi_r1^a psi_r2^b) for one split (concrete)
};

struct Generator {
  GenKind kind = GenKind::Kappa;
  int index = 0;  // m, k, label index or genus h
  LabelSet subset = 0;
  int a = 0;
  int b = 0;

  static Generator kappa(int m);
  static Generator kappa_tilde(int m);
  static Generator che(int k);
  static Generator lambda() { return che(1); }
  static Generator psi_pow(int m);
  static Generator psi(int label_index);
  static Generator delta();
  static Generator b_irr(int a, int b);
  static Generator b_sep_sum(int a, int b);
  /// Canonical representative of (h, A, a, b) ~ (g-h, A^c, b, a).
  static Generator b_sep(const ModuliSpec& spec, SplitType split, int a, int b);

  int degree() const;
  bool is_boundary_atom() const;

  auto operator<=>(const Generator&) const = default;
};

/// True when the generator is zero on the given moduli space.
bool vanishes(const Generator& gen, const ModuliSpec& spec);

/// Commutative monomial: sorted multiset of generators. Ordered by degree first.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Generator> factors);
  static Monomial of(const Generator& g) { return Monomial({g}); }

  const std::vector<Generator>& factors() const { return factors_; }
  int degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  int count(const Generator& g) const;
  /// This monomial with one copy of g removed; g must occur.
  Monomial without_one(const Generator& g) const;

  friend Monomial operator*(const Monomial& x, const Monomial& y);

  friend auto operator<=>(const Monomial& x, const Monomial& y) {
    if (auto c = x.degree_ <=> y.degree_; c != 0) return c;
    return x.factors_ <=> y.factors_;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Generator> factors_;
  int degree_ = 0;
};

}  // namespace taut
