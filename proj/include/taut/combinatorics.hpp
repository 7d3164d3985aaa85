#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

/// Integer partition, parts weakly decreasing.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// part value r -> m_r
  std::map<int, int> multiplicities() const;

  /// "(3,1,1)"
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of j in reverse-lexicographic order: (j), (j-1,1), ..., (1^j).
std::vector<Partition> partitions(int j);

/// (-1)^{j - l(mu)} prod_r ((r-1)!)^{m_r} / m_r!, the weight of ch_mu in c_j.
Rational chern_partition_coeff(const Partition& mu);

/// Exponent pair (a, b) with a >= b; names the monomial symmetric polynomial
/// m_(a,b)(x, y) = x^a y^b + x^b y^a (a > b) or x^a y^a (a = b).
struct SymKey {
  int a = 0;
  int b = 0;
  static SymKey of(int i, int j) { return i >= j ? SymKey{i, j} : SymKey{j, i}; }
  int degree() const { return a + b; }
  auto operator<=>(const SymKey&) const = default;
};

/// Symmetric polynomial in two variables, stored in the monomial symmetric basis.
class SymPoly2 {
 public:
  SymPoly2() = default;

  const std::map<SymKey, Rational, std::greater<>>& terms() const { return terms_; }
  Rational coeff(SymKey key) const;
  bool is_zero() const { return terms_.empty(); }

  void add(SymKey key, const Rational& c);
  SymPoly2 scaled(const Rational& c) const;
  SymPoly2 operator+(const SymPoly2& rhs) const;

  /// Coefficient of x^i y^j in the expanded polynomial.
  Rational dense_coeff(int i, int j) const;
  Rational evaluate(const Rational& x, const Rational& y) const;

  friend bool operator==(const SymPoly2&, const SymPoly2&) = default;

 private:
  // (a,b) in decreasing order so that (k,0) comes first
  std::map<SymKey, Rational, std::greater<>> terms_;
};

/// (x + y)^k in the monomial symmetric basis.
SymPoly2 power_sym(int k);

/// x^k - x^{k-1} y + ... + y^k for even k.
SymPoly2 alternating_sym(int k);

}  // namespace taut
