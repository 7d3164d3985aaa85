#include "taut/series.hpp"

#include "taut/error.hpp"

namespace taut {

BiSeries::BiSeries(int order, Relation relation) : order_(order), relation_(relation) {
  if (order < 0) throw DomainError("series order must be non-negative");
}

BiSeries BiSeries::constant(int order, Relation relation, const Rational& c) {
  BiSeries s(order, relation);
  s.set(0, 0, c);
  return s;
}

BiSeries BiSeries::d1(int order, Relation relation) {
  BiSeries s(order, relation);
  s.set(1, 0, 1);
  return s;
}

BiSeries BiSeries::d2(int order, Relation relation) {
  BiSeries s(order, relation);
  s.set(0, 1, 1);
  return s;
}

BiSeries BiSeries::univariate(int order, Relation relation, std::span<const Rational> coeffs, const Rational& alpha,
                              const Rational& beta) {
  BiSeries linear(order, relation);
  linear.set(1, 0, alpha);
  linear.set(0, 1, beta);
  BiSeries out(order, relation);
  BiSeries power = constant(order, relation, 1);
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= order; ++k) {
    if (k > 0) power = power * linear;
    out += power * coeffs[k];
  }
  return out;
}

Rational BiSeries::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiSeries::set(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw DomainError("negative series exponent");
  if (i + j > order_) return;
  if (relation_ == Relation::MixedVanish && i > 0 && j > 0) return;
  if (c.is_zero()) {
    terms_.erase({i, j});
  } else {
    terms_[{i, j}] = c;
  }
}

BiSeries BiSeries::homogeneous_part(int d) const {
  BiSeries out(order_, relation_);
  for (const auto& [k, c] : terms_) {
    if (k.first + k.second == d) out.terms_.emplace(k, c);
  }
  return out;
}

BiSeries BiSeries::with_order(int order) const {
  BiSeries out(order, relation_);
  for (const auto& [k, c] : terms_) out.set(k.first, k.second, c);
  return out;
}

void BiSeries::require_compatible(const BiSeries& other) const {
  if (order_ != other.order_ || relation_ != other.relation_) {
    throw DomainError("series with different order or relation");
  }
}

BiSeries BiSeries::operator-() const {
  BiSeries out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

BiSeries& BiSeries::operator+=(const BiSeries& rhs) {
  require_compatible(rhs);
  for (const auto& [k, c] : rhs.terms_) set(k.first, k.second, coeff(k.first, k.second) + c);
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& rhs) { return *this += -rhs; }

BiSeries& BiSeries::operator*=(const Rational& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  a.require_compatible(b);
  std::map<std::pair<int, int>, Rational> acc;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const int i = ka.first + kb.first;
      const int j = ka.second + kb.second;
      if (i + j > a.order_) continue;
      if (a.relation_ == Relation::MixedVanish && i > 0 && j > 0) continue;
      acc[{i, j}] += ca * cb;
    }
  }
  BiSeries out(a.order_, a.relation_);
  for (const auto& [k, c] : acc) out.set(k.first, k.second, c);
  return out;
}

BiSeries BiSeries::inverse() const {
  const Rational c0 = coeff(0, 0);
  if (c0.is_zero()) throw DomainError("series with zero constant term is not invertible");
  // 1/f = (1/c0) sum_k h^k with h = 1 - f/c0, which has no constant term
  BiSeries h = constant(order_, relation_, 1) - (*this) * (Rational(1) / c0);
  BiSeries sum = constant(order_, relation_, 1);
  BiSeries power = sum;
  for (int k = 1; k <= order_; ++k) {
    power = power * h;
    sum += power;
  }
  return sum * (Rational(1) / c0);
}

BiSeries BiSeries::exp() const {
  if (!coeff(0, 0).is_zero()) throw DomainError("exp needs a series with zero constant term");
  BiSeries sum = constant(order_, relation_, 1);
  BiSeries power = sum;
  for (int k = 1; k <= order_; ++k) {
    power = power * (*this);
    sum += power * inverse_factorial(k);
  }
  return sum;
}

namespace {

// (1 - e^{-x})/x = sum_k (-1)^k x^k / (k+1)!
std::vector<Rational> one_minus_exp_neg_over_x(int order) {
  std::vector<Rational> c;
  for (int k = 0; k <= order; ++k) c.push_back((k % 2 == 0 ? Rational(1) : Rational(-1)) * inverse_factorial(k + 1));
  return c;
}

}  // namespace

BiSeries ch_OY(int order) {
  const BiSeries one = BiSeries::constant(order, Relation::None, 1);
  const BiSeries f1 = one - (-BiSeries::d1(order)).exp();
  const BiSeries f2 = one - (-BiSeries::d2(order)).exp();
  return f1 * f2;
}

BiSeries tdinv_OY(int order, Relation relation) {
  const auto unit = one_minus_exp_neg_over_x(order);
  const BiSeries s_factor = BiSeries::univariate(order, relation, unit, 1, 1);
  const BiSeries d1_factor = BiSeries::univariate(order, relation, unit, 1, 0).inverse();
  const BiSeries d2_factor = BiSeries::univariate(order, relation, unit, 0, 1).inverse();
  return s_factor * d1_factor * d2_factor;
}

BiSeries theta_series(int order) {
  std::vector<Rational> c;
  for (int j = 1; j <= order + 1; ++j) c.push_back((j % 2 == 1 ? Rational(1) : Rational(-1)) * inverse_factorial(j));
  return BiSeries::univariate(order, Relation::None, c, 1, 1);
}

std::vector<Rational> todd_coefficients(int order) {
  // (e^t - 1)/t = sum_k t^k/(k+1)!
  std::vector<Rational> c;
  for (int k = 0; k <= order; ++k) c.push_back(inverse_factorial(k + 1));
  const BiSeries inv = BiSeries::univariate(order, Relation::None, c, 1, 0).inverse();
  std::vector<Rational> out;
  for (int k = 0; k <= order; ++k) out.push_back(inv.coeff(k, 0));
  return out;
}

bool verify_theta_against(int order, const BiSeries& theta) {
  if (order < 2) throw DomainError("theta identity needs order >= 2");
  const BiSeries lhs = ch_OY(order) * tdinv_OY(order);
  const BiSeries d1d2 = BiSeries::d1(order) * BiSeries::d2(order);
  const BiSeries rhs = d1d2 * theta.with_order(order);
  return lhs == rhs;
}

bool verify_theta(int order) { return verify_theta_against(order, theta_series(order - 2)); }

bool verify_todd_bernoulli(int order) {
  const auto todd = todd_coefficients(order);
  for (int k = 0; k <= order; ++k) {
    Rational expected;
    if (k == 0) {
      expected = 1;
    } else if (k == 1) {
      expected = Rational(-1, 2);
    } else if (k % 2 == 0) {
      expected = bernoulli(k) * inverse_factorial(k);
    }
    if (todd[static_cast<std::size_t>(k)] != expected) return false;
  }
  return true;
}

BiSeries eighteen_lhs(int order) {
  const Relation rel = Relation::MixedVanish;
  const BiSeries todd = BiSeries::univariate(order, rel, todd_coefficients(order), 1, -1);
  const BiSeries e_psi_minus_one = BiSeries::d2(order, rel).exp() - BiSeries::constant(order, rel, 1);
  return todd * e_psi_minus_one;
}

BiSeries eighteen_rhs(int order) {
  BiSeries out(order, Relation::MixedVanish);
  for (int m = 1; m <= order; ++m) {
    Rational c = inverse_factorial(m);
    if (m >= 2) c += Rational(1, 2) * inverse_factorial(m - 1);
    if (m >= 3) c -= a_coeff(m);
    out.set(0, m, c);
  }
  return out;
}

bool verify_eighteen(int order) {
  if (order < 3) throw DomainError("verify_eighteen needs order >= 3");
  return eighteen_lhs(order) == eighteen_rhs(order);
}

}  // namespace taut
