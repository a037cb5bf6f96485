#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "finloc/element_set.hpp"

namespace finloc {

/// A finite carrier {0..n-1} with a binary relation read as "<=".
///
/// Nothing here assumes the relation is a partial order: mutated or
/// hand-built structures are checked against this type, and lub/glb simply
/// report absence when no unique bound exists.
class OrderedSet {
public:
  OrderedSet() = default;
  /// `up[i]` holds every j with i <= j.
  explicit OrderedSet(std::vector<ElementSet> up);

  /// Relation given by a predicate evaluated on every pair.
  template <class Leq>
  static OrderedSet from_predicate(int n, Leq&& leq) {
    std::vector<ElementSet> up(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq(i, j)) up[i].insert(j);
    return OrderedSet(std::move(up));
  }

  /// Inclusion order on a list of sets.
  static OrderedSet by_inclusion(const std::vector<ElementSet>& sets);

  int size() const { return static_cast<int>(up_.size()); }
  bool leq(int i, int j) const { return up_[i].contains(j); }
  ElementSet up(int i) const { return up_[i]; }
  ElementSet down(int i) const { return down_[i]; }
  ElementSet all() const { return ElementSet::full(size()); }

  /// Common upper (lower) bounds of every member of s; all() for empty s.
  ElementSet upper_bounds(ElementSet s) const;
  ElementSet lower_bounds(ElementSet s) const;
  std::optional<int> lub(ElementSet s) const;
  std::optional<int> glb(ElementSet s) const;

  bool is_reflexive() const;
  bool is_antisymmetric(std::pair<int, int>* witness = nullptr) const;
  bool is_transitive() const;
  bool is_partial_order() const { return is_reflexive() && is_antisymmetric() && is_transitive(); }

  OrderedSet dual() const;
  /// The relation restricted to `keep`; element k of the result is the k-th member.
  OrderedSet restricted(ElementSet keep) const;
  /// Copy with the bit (i, j) of the relation toggled.
  OrderedSet with_flipped(int i, int j) const;

  bool operator==(const OrderedSet&) const = default;

private:
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

}  // namespace finloc
