#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace taut {

enum class Mode { Generic, Concrete };

/// Subset of the marking set, bit i standing for the i-th label.
using LabelSet = std::uint64_t;

/// One ordered separating split (h, A): genus h and markings A on the r1 side.
struct SplitType {
  int h = 0;
  LabelSet subset = 0;
  auto operator<=>(const SplitType&) const = default;
};

/// The pair (g, P) together with how boundary and psi classes are represented.
///
/// Generic specs carry aggregate classes (the total psi power sum, the sum of
/// all separating pushforwards); concrete specs carry one class per marking and
/// one atom per separating divisor, and truncate everything above the dimension.
class ModuliSpec {
 public:
  static ModuliSpec generic(int g, int n);
  static ModuliSpec concrete(int g, int n);
  static ModuliSpec concrete(int g, std::vector<std::string> labels);

  int genus() const { return genus_; }
  int n() const { return static_cast<int>(labels_.size()); }
  int dimension() const { return 3 * genus_ - 3 + n(); }
  Mode mode() const { return mode_; }
  bool is_concrete() const { return mode_ == Mode::Concrete; }
  const std::vector<std::string>& labels() const { return labels_; }
  LabelSet all_labels() const;

  /// Same (g, P) with the other mode.
  ModuliSpec as_generic() const;
  ModuliSpec as_concrete() const;

  /// Every ordered (h, A) with 2h-1+|A| > 0 and 2(g-h)-1+|A^c| > 0.
  std::vector<SplitType> ordered_splits() const;
  bool has_separating_boundary() const;
  /// The partner (g-h, A^c) of a split.
  SplitType complement(const SplitType& s) const;

  std::string str() const;

  friend bool operator==(const ModuliSpec&, const ModuliSpec&) = default;

 private:
  ModuliSpec(int g, std::vector<std::string> labels, Mode mode);

  int genus_ = 0;
  std::vector<std::string> labels_;
  Mode mode_ = Mode::Generic;
};

/// One boundary divisor; sep divisors are named by the canonical member of
/// {(h, A), (g-h, A^c)}.
struct BoundaryDivisor {
  bool irreducible = false;
  SplitType split;
};

std::vector<BoundaryDivisor> enumerate_boundary(const ModuliSpec& spec);

}  // namespace taut
