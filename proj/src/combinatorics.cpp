#include "taut/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "taut/error.hpp"

namespace taut {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("empty partition");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int j) {
  if (j <= 0) throw DomainError("partitions(j) requires j >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(j, j, prefix, out);
  return out;
}

Rational chern_partition_coeff(const Partition& mu) {
  Rational c = ((mu.weight() - mu.length()) % 2 == 0) ? Rational(1) : Rational(-1);
  for (const auto& [r, m] : mu.multiplicities()) {
    Integer num = 1;
    const Integer f = factorial(r - 1);
    for (int i = 0; i < m; ++i) num *= f;
    c *= Rational(num, factorial(m));
  }
  return c;
}

Rational SymPoly2::coeff(SymKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly2::add(SymKey key, const Rational& c) {
  if (key.b < 0 || key.a < key.b) key = SymKey::of(key.a, key.b);
  if (key.b < 0) throw DomainError("negative exponent in symmetric key");
  Rational& slot = terms_[key];
  slot += c;
  if (slot.is_zero()) terms_.erase(key);
}

SymPoly2 SymPoly2::scaled(const Rational& c) const {
  SymPoly2 out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

SymPoly2 SymPoly2::operator+(const SymPoly2& rhs) const {
  SymPoly2 out = *this;
  for (const auto& [k, v] : rhs.terms_) out.add(k, v);
  return out;
}

Rational SymPoly2::dense_coeff(int i, int j) const { return coeff(SymKey::of(i, j)); }

Rational SymPoly2::evaluate(const Rational& x, const Rational& y) const {
  auto pow = [](const Rational& base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  Rational sum;
  for (const auto& [k, v] : terms_) {
    Rational m = pow(x, k.a) * pow(y, k.b);
    if (k.a != k.b) m += pow(x, k.b) * pow(y, k.a);
    sum += v * m;
  }
  return sum;
}

SymPoly2 power_sym(int k) {
  if (k < 0) throw DomainError("power_sym requires k >= 0");
  SymPoly2 out;
  for (int b = 0; 2 * b <= k; ++b) out.add(SymKey{k - b, b}, Rational(binomial(k, b)));
  return out;
}

SymPoly2 alternating_sym(int k) {
  if (k < 0 || k % 2 != 0) throw DomainError("alternating_sym requires an even k >= 0");
  SymPoly2 out;
  for (int b = 0; 2 * b <= k; ++b) out.add(SymKey{k - b, b}, Rational(b % 2 == 0 ? 1 : -1));
  return out;
}

}  // namespace taut
