#pragma once

#include <cstddef>
#include <vector>

#include "subres/scalar.hpp"
#include "subres/unipoly.hpp"

namespace subres {

struct RootMultiplicity {
  Scalar root;
  std::size_t multiplicity = 1;

  friend bool operator==(const RootMultiplicity& a, const RootMultiplicity& b) {
    return a.root == b.root && a.multiplicity == b.multiplicity;
  }
};

/// Ordered roots with multiplicities: ((α_1,d_1); …; (α_m,d_m)).
/// Roots are pairwise distinct, multiplicities positive, total degree ≥ 1.
class MultiRootSet {
 public:
  MultiRootSet() = default;
  explicit MultiRootSet(std::vector<RootMultiplicity> entries);
  MultiRootSet(std::initializer_list<RootMultiplicity> entries)
      : MultiRootSet(std::vector<RootMultiplicity>(entries)) {}

  /// All multiplicities one.
  static MultiRootSet simple(const std::vector<Scalar>& roots);

  [[nodiscard]] std::size_t size() const { return entries_.size(); }  // m
  [[nodiscard]] std::size_t degree() const { return degree_; }        // d = Σ d_i
  [[nodiscard]] const RootMultiplicity& operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] const Scalar& root(std::size_t i) const { return entries_[i].root; }
  [[nodiscard]] std::size_t multiplicity(std::size_t i) const { return entries_[i].multiplicity; }
  [[nodiscard]] bool all_simple() const;
  [[nodiscard]] const std::vector<RootMultiplicity>& entries() const { return entries_; }
  /// Column offset of block i inside a d-column confluent matrix.
  [[nodiscard]] std::size_t offset(std::size_t i) const;

  [[nodiscard]] MultiRootSet substitute(const Scalar::Substitution& values) const;
  /// Concatenation Ā ∪ B̄; the result must still have distinct roots.
  [[nodiscard]] MultiRootSet joined(const MultiRootSet& other) const;
  [[nodiscard]] bool shares_root_with(const MultiRootSet& other) const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const MultiRootSet& a, const MultiRootSet& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<RootMultiplicity> entries_;
  std::size_t degree_ = 0;
};

/// ∏ (x − α_i)^{d_i}
UniPoly poly_from_roots(const MultiRootSet& a);

/// R(Ā, B̄) = ∏_{i,j} (α_i − β_j)^{d_i e_j}
Scalar pairing(const MultiRootSet& a, const MultiRootSet& b);

}  // namespace subres
