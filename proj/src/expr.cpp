#include "taut/expr.hpp"

#include <algorithm>
#include <string>

#include "taut/combinatorics.hpp"
#include "taut/error.hpp"

namespace taut {

namespace {

int effective_order(const ModuliSpec& spec, int order) {
  if (order < 0) throw DomainError("truncation order must be non-negative");
  return spec.is_concrete() ? std::min(order, spec.dimension()) : order;
}

}  // namespace

TautExpr::TautExpr(ModuliSpec spec, int order)
    : spec_(std::move(spec)), order_(effective_order(spec_, order)) {}

TautExpr TautExpr::constant(const ModuliSpec& spec, int order, const Rational& c) {
  TautExpr e(spec, order);
  e.add_term(Monomial(), c);
  return e;
}

TautExpr TautExpr::of(const ModuliSpec& spec, int order, const Generator& g, const Rational& c) {
  TautExpr e(spec, order);
  e.add_term(Monomial::of(g), c);
  return e;
}

Rational TautExpr::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TautExpr::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero() || m.degree() > order_) return;
  for (const auto& g : m.factors()) {
    if (vanishes(g, spec_)) return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TautExpr TautExpr::component(int d) const {
  TautExpr out(spec_, order_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) out.terms_.emplace(m, c);
  }
  return out;
}

TautExpr TautExpr::with_order(int order) const {
  TautExpr out(spec_, order);
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

int TautExpr::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

bool TautExpr::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

void TautExpr::require_compatible(const TautExpr& other, const char* op) const {
  if (!(spec_ == other.spec_)) {
    throw DomainError(std::string(op) + ": expressions live on different moduli specs " + spec_.str() +
                      " and " + other.spec_.str());
  }
  if (order_ != other.order_) throw DomainError(std::string(op) + ": truncation orders differ");
}

TautExpr TautExpr::operator-() const {
  TautExpr out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

TautExpr& TautExpr::operator+=(const TautExpr& rhs) {
  require_compatible(rhs, "add");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

TautExpr& TautExpr::operator-=(const TautExpr& rhs) {
  require_compatible(rhs, "subtract");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

TautExpr& TautExpr::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

TautExpr operator*(const TautExpr& a, const TautExpr& b) {
  a.require_compatible(b, "multiply");
  TautExpr out(a.spec_, a.order_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      // terms are sorted by degree, so the rest of b is too high as well
      if (ma.degree() + mb.degree() > out.order_) break;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

TautExpr TautExpr::pow(int k) const {
  if (k < 0) throw DomainError("negative power of an expression");
  TautExpr result = constant(spec_, order_, 1);
  TautExpr base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const TautExpr& a, const TautExpr& b) {
  return a.spec_ == b.spec_ && a.order_ == b.order_ && a.terms_ == b.terms_;
}

bool expr_equal(const TautExpr& a, const TautExpr& b) {
  a.require_compatible(b, "compare");
  return a.terms() == b.terms();
}

TautExpr substitute(const TautExpr& e, const Generator& source, const TautExpr& rule) {
  if (!(rule.spec() == e.spec())) throw DomainError("substitution rule lives on a different spec");
  if (!rule.is_homogeneous(source.degree())) {
    throw DomainError("substitution rule is not homogeneous of the source degree");
  }
  const TautExpr target = rule.with_order(e.order());
  std::vector<TautExpr> powers{TautExpr::constant(e.spec(), e.order(), 1)};
  auto power = [&](int k) -> const TautExpr& {
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * target);
    return powers[static_cast<std::size_t>(k)];
  };

  TautExpr out(e.spec(), e.order());
  for (const auto& [m, c] : e.terms()) {
    const int k = m.count(source);
    if (k == 0) {
      out.add_term(m, c);
      continue;
    }
    std::vector<Generator> rest;
    for (const auto& g : m.factors()) {
      if (!(g == source)) rest.push_back(g);
    }
    TautExpr head(e.spec(), e.order());
    head.add_term(Monomial(std::move(rest)), c);
    out += head * power(k);
  }
  return out;
}

namespace {

// m_(a,b) as a list of ordered exponent pairs
std::vector<std::pair<int, int>> sym_exponents(int a, int b) {
  if (a == b) return {{a, b}};
  return {{a, b}, {b, a}};
}

TautExpr sep_sum_concrete(const ModuliSpec& spec, int order, int a, int b, const Rational& scale) {
  TautExpr out(spec, order);
  for (const auto& split : spec.ordered_splits()) {
    for (const auto& [i, j] : sym_exponents(a, b)) {
      out.add_term(Monomial::of(Generator::b_sep(spec, split, i, j)), scale);
    }
  }
  return out;
}

}  // namespace

TautExpr delta_atoms(const ModuliSpec& spec, int order) {
  const Rational half(1, 2);
  TautExpr out = TautExpr::of(spec, order, Generator::b_irr(0, 0), half);
  if (spec.is_concrete()) {
    out += sep_sum_concrete(spec, order, 0, 0, half);
  } else {
    out += TautExpr::of(spec, order, Generator::b_sep_sum(0, 0), half);
  }
  return out;
}

TautExpr expand_delta(const TautExpr& e) {
  return substitute(e, Generator::delta(), delta_atoms(e.spec(), e.order()));
}

TautExpr expand_concrete(const TautExpr& e, const ModuliSpec& target) {
  if (!target.is_concrete()) throw DomainError("expand_concrete needs a concrete target spec");
  if (target.genus() != e.spec().genus() || target.n() != e.spec().n()) {
    throw DomainError("expand_concrete: target has a different (g, n)");
  }
  const int order = e.order();
  auto image = [&](const Generator& g) -> TautExpr {
    switch (g.kind) {
      case GenKind::PsiPow: {
        TautExpr s(target, order);
        for (int p = 0; p < target.n(); ++p) {
          s += TautExpr::of(target, order, Generator::psi(p)).pow(g.index);
        }
        return s;
      }
      case GenKind::Delta:
        return delta_atoms(target, order);
      case GenKind::BSepSum:
        return sep_sum_concrete(target, order, g.a, g.b, 1);
      default:
        return TautExpr::of(target, order, g);
    }
  };

  std::map<Generator, TautExpr> cache;
  TautExpr out(target, order);
  for (const auto& [m, c] : e.terms()) {
    TautExpr term = TautExpr::constant(target, order, c);
    for (const auto& g : m.factors()) {
      auto it = cache.find(g);
      if (it == cache.end()) it = cache.emplace(g, image(g)).first;
      term = term * it->second;
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

TautExpr expand_concrete(const TautExpr& e) { return expand_concrete(e, e.spec().as_concrete()); }

TautExpr fold_delta(const TautExpr& e) {
  if (e.order() < 1) return e;
  const TautExpr pattern = delta_atoms(e.spec(), e.order());
  if (pattern.is_zero()) return e;
  // eliminate the leading atom of delta: lead = (delta - rest) / weight
  const auto& [lead_mono, lead_weight] = *pattern.terms().begin();
  const Generator lead = lead_mono.factors().front();
  TautExpr rule = TautExpr::of(e.spec(), e.order(), Generator::delta());
  for (const auto& [m, w] : pattern.terms()) {
    if (!(m == lead_mono)) rule.add_term(m, -w);
  }
  rule *= Rational(1) / lead_weight;
  TautExpr folded = substitute(e, lead, rule);
  return folded.terms().size() <= e.terms().size() ? folded : e;
}

}  // namespace taut
