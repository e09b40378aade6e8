#pragma once

#include <cstddef>
#include <vector>

namespace subres::detail {

/// Calls visit(parts) for every weak composition of `total` into
/// `count` nonnegative parts.  With count == 0 only total == 0 has a
/// (empty) composition.
template <class Visitor>
void for_each_composition(std::size_t total, std::size_t count, Visitor&& visit) {
  std::vector<std::size_t> parts(count, 0);
  if (count == 0) {
    if (total == 0) visit(parts);
    return;
  }
  auto recurse = [&](auto&& self, std::size_t index, std::size_t remaining) -> void {
    if (index + 1 == count) {
      parts[index] = remaining;
      visit(parts);
      return;
    }
    for (std::size_t v = 0; v <= remaining; ++v) {
      parts[index] = v;
      self(self, index + 1, remaining - v);
    }
  };
  recurse(recurse, 0, total);
}

}  // namespace subres::detail
