#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

enum class Relation {
  None,
  MixedVanish,  // D1 * D2 = 0
};

/// Truncated power series in D1, D2 over the rationals, total degree <= order.
class BiSeries {
 public:
  BiSeries(int order, Relation relation = Relation::None);

  static BiSeries constant(int order, Relation relation, const Rational& c);
  static BiSeries d1(int order, Relation relation = Relation::None);
  static BiSeries d2(int order, Relation relation = Relation::None);
  /// sum_k coeffs[k] (alpha D1 + beta D2)^k
  static BiSeries univariate(int order, Relation relation, std::span<const Rational> coeffs, const Rational& alpha,
                             const Rational& beta);

  int order() const { return order_; }
  Relation relation() const { return relation_; }
  Rational coeff(int i, int j) const;
  void set(int i, int j, const Rational& c);
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BiSeries homogeneous_part(int d) const;
  /// Re-truncate, keeping the relation.
  BiSeries with_order(int order) const;

  BiSeries operator-() const;
  BiSeries& operator+=(const BiSeries& rhs);
  BiSeries& operator-=(const BiSeries& rhs);
  BiSeries& operator*=(const Rational& c);
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(BiSeries a, const Rational& c) { return a *= c; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator/(const BiSeries& a, const BiSeries& b) { return a * b.inverse(); }

  /// Requires a nonzero constant term.
  BiSeries inverse() const;
  /// Requires a zero constant term.
  BiSeries exp() const;

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  void require_compatible(const BiSeries& other) const;

  int order_;
  Relation relation_;
  std::map<std::pair<int, int>, Rational> terms_;  // zero coefficients omitted
};

/// ch(O_Y) = (1 - e^{-D1})(1 - e^{-D2}).
BiSeries ch_OY(int order);

/// D1 D2/(D1+D2) (1 - e^{-D1-D2}) / ((1 - e^{-D1})(1 - e^{-D2})), evaluated as
/// [(1 - e^{-s})/s] [D1/(1 - e^{-D1})] [D2/(1 - e^{-D2})] with s = D1 + D2.
BiSeries tdinv_OY(int order, Relation relation = Relation::None);

/// sum_{j>=1} (-1)^{j-1} (D1+D2)^{j-1} / j!.
BiSeries theta_series(int order);

/// t/(e^t - 1) by inverting (e^t - 1)/t; entry k is the coefficient of t^k.
std::vector<Rational> todd_coefficients(int order);

/// ch_OY * tdinv_OY == D1 D2 theta through total degree `order`.
bool verify_theta(int order);
bool verify_theta_against(int order, const BiSeries& theta);

/// t/(e^t-1) == 1 - t/2 + sum_j B_2j t^2j/(2j)! through degree `order`.
bool verify_todd_bernoulli(int order);

/// Left side [(D-psi)/(e^{D-psi}-1)] (e^psi - 1) in the ring with D psi = 0,
/// with D1 := D and D2 := psi.
BiSeries eighteen_lhs(int order);
/// Right side sum psi^j/j! + 1/2 sum psi^{t+1}/t! - sum_{m>=3} a_m psi^m.
BiSeries eighteen_rhs(int order);
bool verify_eighteen(int order);

}  // namespace taut
