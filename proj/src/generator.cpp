#include "taut/generator.hpp"

#include <algorithm>
#include <bit>

#include "taut/error.hpp"

namespace taut {

namespace {

void require_positive(int m, const char* what) {
  if (m < 1) throw DomainError(std::string(what) + " index must be >= 1");
}

void require_pair(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("negative psi exponent in a boundary atom");
}

}  // namespace

Generator Generator::kappa(int m) {
  require_positive(m, "kappa");
  return {GenKind::Kappa, m};
}

Generator Generator::kappa_tilde(int m) {
  require_positive(m, "kappa~");
  return {GenKind::KappaTilde, m};
}

Generator Generator::che(int k) {
  require_positive(k, "ch(E)");
  // positive even components of ch(E) vanish
  if (k % 2 == 0) throw DomainError("ch_k(E) is only a generator for odd k");
  return {GenKind::Che, k};
}

Generator Generator::psi_pow(int m) {
  require_positive(m, "psi power sum");
  return {GenKind::PsiPow, m};
}

Generator Generator::psi(int label_index) {
  if (label_index < 0) throw DomainError("negative label index");
  return {GenKind::Psi, label_index};
}

Generator Generator::delta() { return {GenKind::Delta}; }

Generator Generator::b_irr(int a, int b) {
  require_pair(a, b);
  return {GenKind::BIrr, 0, 0, std::max(a, b), std::min(a, b)};
}

Generator Generator::b_sep_sum(int a, int b) {
  require_pair(a, b);
  return {GenKind::BSepSum, 0, 0, std::max(a, b), std::min(a, b)};
}

Generator Generator::b_sep(const ModuliSpec& spec, SplitType split, int a, int b) {
  require_pair(a, b);
  const int size_a = std::popcount(split.subset);
  if ((split.subset & ~spec.all_labels()) != 0 || split.h < 0 || split.h > spec.genus() ||
      !(2 * split.h - 1 + size_a > 0) || !(2 * (spec.genus() - split.h) - 1 + spec.n() - size_a > 0)) {
    throw DomainError("unstable separating split");
  }
  const SplitType other = spec.complement(split);
  if (other < split || (other == split && b > a)) {
    split = other;
    std::swap(a, b);
  }
  return {GenKind::BSep, split.h, split.subset, a, b};
}

int Generator::degree() const {
  switch (kind) {
    case GenKind::Kappa:
    case GenKind::KappaTilde:
    case GenKind::Che:
    case GenKind::PsiPow:
      return index;
    case GenKind::Psi:
    case GenKind::Delta:
      return 1;
    case GenKind::BIrr:
    case GenKind::BSepSum:
    case GenKind::BSep:
      return a + b + 1;
  }
  return 0;
}

bool Generator::is_boundary_atom() const {
  return kind == GenKind::BIrr || kind == GenKind::BSepSum || kind == GenKind::BSep;
}

bool vanishes(const Generator& gen, const ModuliSpec& spec) {
  switch (gen.kind) {
    case GenKind::PsiPow:
      return spec.n() == 0;
    case GenKind::Psi:
      if (gen.index >= spec.n()) throw DomainError("psi label index out of range");
      return false;
    case GenKind::Che:
    case GenKind::BIrr:
      return spec.genus() == 0;
    case GenKind::BSepSum:
      return !spec.has_separating_boundary();
    default:
      return false;
  }
}

Monomial::Monomial(std::vector<Generator> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  for (const auto& g : factors_) degree_ += g.degree();
}

int Monomial::count(const Generator& g) const {
  return static_cast<int>(std::count(factors_.begin(), factors_.end(), g));
}

Monomial Monomial::without_one(const Generator& g) const {
  Monomial out = *this;
  auto it = std::find(out.factors_.begin(), out.factors_.end(), g);
  if (it == out.factors_.end()) throw DomainError("generator not present in monomial");
  out.factors_.erase(it);
  out.degree_ -= g.degree();
  return out;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.factors_.reserve(x.factors_.size() + y.factors_.size());
  std::merge(x.factors_.begin(), x.factors_.end(), y.factors_.begin(), y.factors_.end(),
             std::back_inserter(out.factors_));
  out.degree_ = x.degree_ + y.degree_;
  return out;
}

}  // namespace taut
