#include "taut/moduli.hpp"

#include <bit>
#include <set>
#include <sstream>

#include "taut/error.hpp"

namespace taut {

namespace {

constexpr int kMaxLabels = 62;

std::vector<std::string> default_labels(int n) {
  if (n < 0) throw DomainError("number of markings must be non-negative");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back("p" + std::to_string(i));
  return labels;
}

}  // namespace

ModuliSpec::ModuliSpec(int g, std::vector<std::string> labels, Mode mode)
    : genus_(g), labels_(std::move(labels)), mode_(mode) {
  if (g < 0) throw DomainError("genus must be non-negative");
  const int n = static_cast<int>(labels_.size());
  if (n > kMaxLabels) throw DomainError("at most 62 markings are supported");
  if (!(n > 2 - 2 * g)) {
    throw DomainError("unstable (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) +
                      "): stability requires n > 2 - 2g");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw DomainError("empty marking label");
    if (!seen.insert(l).second) throw DomainError("duplicate marking label '" + l + "'");
  }
}

ModuliSpec ModuliSpec::generic(int g, int n) { return {g, default_labels(n), Mode::Generic}; }

ModuliSpec ModuliSpec::concrete(int g, int n) { return {g, default_labels(n), Mode::Concrete}; }

ModuliSpec ModuliSpec::concrete(int g, std::vector<std::string> labels) {
  return {g, std::move(labels), Mode::Concrete};
}

ModuliSpec ModuliSpec::as_generic() const { return {genus_, labels_, Mode::Generic}; }
ModuliSpec ModuliSpec::as_concrete() const { return {genus_, labels_, Mode::Concrete}; }

LabelSet ModuliSpec::all_labels() const {
  return n() == 0 ? LabelSet{0} : ((LabelSet{1} << n()) - 1);
}

std::vector<SplitType> ModuliSpec::ordered_splits() const {
  std::vector<SplitType> out;
  const LabelSet full = all_labels();
  for (int h = 0; h <= genus_; ++h) {
    for (LabelSet a = 0;; ++a) {
      const int size_a = std::popcount(a);
      const int size_c = n() - size_a;
      if (2 * h - 1 + size_a > 0 && 2 * (genus_ - h) - 1 + size_c > 0) out.push_back({h, a});
      if (a == full) break;
    }
  }
  return out;
}

bool ModuliSpec::has_separating_boundary() const {
  for (int h = 0; h <= genus_; ++h) {
    for (int k = 0; k <= n(); ++k) {
      if (2 * h - 1 + k > 0 && 2 * (genus_ - h) - 1 + n() - k > 0) return true;
    }
  }
  return false;
}

SplitType ModuliSpec::complement(const SplitType& s) const {
  return {genus_ - s.h, all_labels() & ~s.subset};
}

std::string ModuliSpec::str() const {
  std::ostringstream os;
  os << "(g=" << genus_ << ", n=" << n() << ", " << (is_concrete() ? "concrete" : "generic") << ")";
  return os.str();
}

std::vector<BoundaryDivisor> enumerate_boundary(const ModuliSpec& spec) {
  std::vector<BoundaryDivisor> out;
  if (spec.genus() >= 1) out.push_back({true, {}});
  for (const auto& s : spec.ordered_splits()) {
    if (s <= spec.complement(s)) out.push_back({false, s});
  }
  return out;
}

}  // namespace taut
