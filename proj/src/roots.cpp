#include "subres/roots.hpp"

#include "subres/errors.hpp"

namespace subres {

MultiRootSet::MultiRootSet(std::vector<RootMultiplicity> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].multiplicity == 0)
      throw DomainError("root multiplicity must be at least 1 (entry " + std::to_string(i + 1) + ")");
    for (std::size_t j = 0; j < i; ++j)
      if (entries_[i].root == entries_[j].root)
        throw DomainError("duplicate root " + entries_[i].root.to_string() + " in a multi-root set");
    degree_ += entries_[i].multiplicity;
  }
  if (degree_ == 0) throw DomainError("a multi-root set needs at least one root");
}

MultiRootSet MultiRootSet::simple(const std::vector<Scalar>& roots) {
  std::vector<RootMultiplicity> entries;
  entries.reserve(roots.size());
  for (const auto& r : roots) entries.push_back({r, 1});
  return MultiRootSet(std::move(entries));
}

bool MultiRootSet::all_simple() const {
  for (const auto& e : entries_)
    if (e.multiplicity != 1) return false;
  return true;
}

std::size_t MultiRootSet::offset(std::size_t i) const {
  std::size_t off = 0;
  for (std::size_t k = 0; k < i; ++k) off += entries_[k].multiplicity;
  return off;
}

MultiRootSet MultiRootSet::substitute(const Scalar::Substitution& values) const {
  std::vector<RootMultiplicity> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({e.root.substitute(values), e.multiplicity});
  return MultiRootSet(std::move(out));
}

MultiRootSet MultiRootSet::joined(const MultiRootSet& other) const {
  std::vector<RootMultiplicity> out = entries_;
  out.insert(out.end(), other.entries_.begin(), other.entries_.end());
  return MultiRootSet(std::move(out));
}

bool MultiRootSet::shares_root_with(const MultiRootSet& other) const {
  for (const auto& a : entries_)
    for (const auto& b : other.entries_)
      if (a.root == b.root) return true;
  return false;
}

UniPoly poly_from_roots(const MultiRootSet& a) {
  UniPoly out = UniPoly::constant(Scalar(1));
  for (const auto& e : a) out = out * UniPoly::linear_root(e.root).pow(static_cast<unsigned>(e.multiplicity));
  return out;
}

Scalar pairing(const MultiRootSet& a, const MultiRootSet& b) {
  Scalar out(1);
  for (const auto& x : a)
    for (const auto& y : b) out *= (x.root - y.root).pow(static_cast<unsigned>(x.multiplicity * y.multiplicity));
  return out;
}

}  // namespace subres
