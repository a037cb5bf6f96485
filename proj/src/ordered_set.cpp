#include "finloc/ordered_set.hpp"

#include "finloc/error.hpp"

namespace finloc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::FrameTooLarge: return "FrameTooLarge";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

OrderedSet::OrderedSet(std::vector<ElementSet> up) : up_(std::move(up)), down_(up_.size()) {
  const int n = size();
  if (n > kMaxElements)
    throw FinlocError(ErrorKind::CarrierTooLarge, "ordered set has " + std::to_string(n) + " elements");
  for (int i = 0; i < n; ++i)
    for (int j : up_[i]) down_[j].insert(i);
}

OrderedSet OrderedSet::by_inclusion(const std::vector<ElementSet>& sets) {
  return from_predicate(static_cast<int>(sets.size()),
                        [&](int i, int j) { return sets[i].subset_of(sets[j]); });
}

ElementSet OrderedSet::upper_bounds(ElementSet s) const {
  ElementSet out = all();
  for (int i : s) out &= up_[i];
  return out;
}

ElementSet OrderedSet::lower_bounds(ElementSet s) const {
  ElementSet out = all();
  for (int i : s) out &= down_[i];
  return out;
}

std::optional<int> OrderedSet::lub(ElementSet s) const {
  const ElementSet ub = upper_bounds(s);
  for (int c : ub)
    if (ub.subset_of(up_[c])) return c;
  return std::nullopt;
}

std::optional<int> OrderedSet::glb(ElementSet s) const {
  const ElementSet lb = lower_bounds(s);
  for (int c : lb)
    if (lb.subset_of(down_[c])) return c;
  return std::nullopt;
}

bool OrderedSet::is_reflexive() const {
  for (int i = 0; i < size(); ++i)
    if (!leq(i, i)) return false;
  return true;
}

bool OrderedSet::is_antisymmetric(std::pair<int, int>* witness) const {
  for (int i = 0; i < size(); ++i)
    for (int j : up_[i])
      if (j != i && leq(j, i)) {
        if (witness) *witness = {i, j};
        return false;
      }
  return true;
}

bool OrderedSet::is_transitive() const {
  for (int i = 0; i < size(); ++i)
    for (int j : up_[i])
      if (!up_[j].subset_of(up_[i])) return false;
  return true;
}

OrderedSet OrderedSet::dual() const { return OrderedSet(down_); }

OrderedSet OrderedSet::restricted(ElementSet keep) const {
  const std::vector<int> items = keep.to_vector();
  return from_predicate(static_cast<int>(items.size()),
                        [&](int i, int j) { return leq(items[i], items[j]); });
}

OrderedSet OrderedSet::with_flipped(int i, int j) const {
  std::vector<ElementSet> up = up_;
  if (up[i].contains(j))
    up[i].erase(j);
  else
    up[i].insert(j);
  return OrderedSet(std::move(up));
}

}  // namespace finloc
