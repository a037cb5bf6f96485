#pragma once

#include <algorithm>
#include <vector>

#include "finloc/element_set.hpp"

namespace finloc {

/// Ganter's next-closure: every closed set of the closure operator `close`
/// on {0..n-1}, visited in lectic order, returned sorted by ascending
/// bitset value.
///
/// `close` must be extensive, monotone and idempotent; the enumeration is
/// only complete under those laws.
template <class Close>
std::vector<ElementSet> next_closure(int n, Close&& close) {
  std::vector<ElementSet> out;
  const ElementSet full = ElementSet::full(n);
  ElementSet current = close(ElementSet{});
  out.push_back(current);
  while (current != full) {
    bool advanced = false;
    for (int i = n - 1; i >= 0; --i) {
      if (current.contains(i)) continue;
      ElementSet seed = current.below(i);
      seed.insert(i);
      const ElementSet next = close(seed);
      // canonicity test: no new element below i
      if (next.below(i) == current.below(i)) {
        current = next;
        out.push_back(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace finloc
