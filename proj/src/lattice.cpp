#include "finloc/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "finloc/error.hpp"

namespace finloc {

namespace {

nlohmann::json pair_witness(const std::vector<std::string>& names, int a, int b) {
  return nlohmann::json::array({names[a], names[b]});
}

}  // namespace

FiniteLattice FiniteLattice::from_order(std::vector<std::string> names, const OrderedSet& order) {
  const int n = order.size();
  if (static_cast<int>(names.size()) != n)
    throw FinlocError(ErrorKind::InvalidInput, "name count does not match the order");
  if (n == 0) throw FinlocError(ErrorKind::NotALattice, "empty carrier");
  if (n > kMaxElements)
    throw FinlocError(ErrorKind::CarrierTooLarge, std::to_string(n) + " elements");
  if (!order.is_reflexive() || !order.is_transitive())
    throw FinlocError(ErrorKind::NotAPoset, "relation is not reflexive and transitive");
  std::pair<int, int> clash;
  if (!order.is_antisymmetric(&clash))
    throw FinlocError(ErrorKind::NotAPoset,
                      "antisymmetry fails for " + names[clash.first] + ", " + names[clash.second],
                      pair_witness(names, clash.first, clash.second));

  FiniteLattice l;
  l.order_ = order;
  l.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  l.join_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const ElementSet pair = ElementSet::single(a) | ElementSet::single(b);
      const auto m = order.glb(pair);
      const auto j = order.lub(pair);
      if (!m || !j)
        throw FinlocError(ErrorKind::NotALattice,
                          std::string(m ? "no least upper bound" : "no greatest lower bound") +
                              " for " + names[a] + ", " + names[b],
                          pair_witness(names, a, b));
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint8_t>(*m);
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint8_t>(*j);
    }
  }
  const auto bot = order.glb(order.all());
  const auto top = order.lub(order.all());
  if (!bot || !top) throw FinlocError(ErrorKind::NotALattice, "no bottom or top");
  l.bottom_ = *bot;
  l.top_ = *top;
  l.names_ = std::move(names);
  return l;
}

int FiniteLattice::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

int FiniteLattice::meet_of(ElementSet s) const {
  int acc = top_;
  for (int i : s) acc = meet(acc, i);
  return acc;
}

int FiniteLattice::join_of(ElementSet s) const {
  int acc = bottom_;
  for (int i : s) acc = join(acc, i);
  return acc;
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b : up_set(a))
      if (a != b && (up_set(a) & down_set(b)).size() == 2) out.emplace_back(a, b);
  return out;
}

std::vector<int> FiniteLattice::heights() const {
  std::vector<int> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return down_set(a).size() < down_set(b).size(); });
  std::vector<int> h(size(), 0);
  for (int b : order)
    for (int a : down_set(b))
      if (a != b) h[b] = std::max(h[b], h[a] + 1);
  return h;
}

ElementSet FiniteLattice::meet_irreducibles() const {
  std::vector<int> upper_covers(size(), 0);
  for (auto [a, b] : covers()) ++upper_covers[a];
  ElementSet out;
  for (int a = 0; a < size(); ++a)
    if (a != top_ && upper_covers[a] == 1) out.insert(a);
  return out;
}

bool FiniteLattice::is_distributive() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      for (int c = 0; c < size(); ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
  return true;
}

FiniteLattice FiniteLattice::dual() const { return from_order(names_, order_.dual()); }

FiniteLattice FiniteLattice::sublattice(ElementSet keep) const {
  std::vector<std::string> names;
  for (int i : keep) names.push_back(names_[i]);
  return from_order(std::move(names), order_.restricted(keep));
}

FiniteLattice build_lattice(std::vector<std::string> elements,
                            const std::vector<std::pair<int, int>>& pairs) {
  const int n = static_cast<int>(elements.size());
  if (n > kMaxElements)
    throw FinlocError(ErrorKind::CarrierTooLarge, std::to_string(n) + " elements");
  std::vector<ElementSet> up(n);
  for (int i = 0; i < n; ++i) up[i].insert(i);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw FinlocError(ErrorKind::InvalidInput, "order pair refers to an undeclared element");
    up[a].insert(b);
  }
  // Warshall closure on the rows
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];
  return FiniteLattice::from_order(std::move(elements), OrderedSet(std::move(up)));
}

FiniteLattice build_lattice(std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<int, int>> idx;
  auto find = [&](const std::string& s) {
    auto it = std::find(elements.begin(), elements.end(), s);
    if (it == elements.end())
      throw FinlocError(ErrorKind::InvalidInput, "unknown element '" + s + "'");
    return static_cast<int>(it - elements.begin());
  };
  for (const auto& [a, b] : pairs) idx.emplace_back(find(a), find(b));
  return build_lattice(std::move(elements), idx);
}

bool frame_law_fails(const FiniteLattice& l, ElementSet family, int b) {
  int rhs = l.bottom();
  for (int a : family) rhs = l.join(rhs, l.meet(a, b));
  return l.meet(l.join_of(family), b) != rhs;
}

namespace {

int failing_b(const FiniteLattice& l, ElementSet family) {
  for (int b = 0; b < l.size(); ++b)
    if (frame_law_fails(l, family, b)) return b;
  return -1;
}

FrameLawWitness make_witness(const FiniteLattice& l, ElementSet family, int b) {
  // greedy shrink in ascending member order
  for (int a : family) {
    ElementSet smaller = family;
    smaller.erase(a);
    if (frame_law_fails(l, smaller, b)) family = smaller;
  }
  FrameLawWitness w;
  w.family = family;
  w.b = b;
  w.lhs = l.meet(l.join_of(family), b);
  w.rhs = l.bottom();
  for (int a : family) w.rhs = l.join(w.rhs, l.meet(a, b));
  return w;
}

}  // namespace

FrameCheckReport is_frame(const FiniteLattice& l, int exhaustive_threshold, Execution exec) {
  FrameCheckReport report;
  const int n = l.size();
  if (n <= exhaustive_threshold) {
    report.exhaustive = true;
    const auto bad = first_failing_subset(
        n, [&](std::uint64_t m) { return failing_b(l, ElementSet(m)) < 0; }, exec);
    if (bad) {
      const ElementSet family(*bad);
      report.is_distributive_frame = false;
      report.witness = make_witness(l, family, failing_b(l, family));
    }
    return report;
  }
  report.exhaustive = false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const ElementSet family = ElementSet::single(b) | ElementSet::single(c);
        if (frame_law_fails(l, family, a)) {
          report.is_distributive_frame = false;
          report.witness = make_witness(l, family, a);
          return report;
        }
      }
  return report;
}

Frame::Frame(FiniteLattice lattice, int exhaustive_threshold) : lattice_(std::move(lattice)) {
  const FrameCheckReport report = is_frame(lattice_, exhaustive_threshold);
  if (!report.is_distributive_frame) {
    const auto& w = *report.witness;
    nlohmann::json family = nlohmann::json::array();
    for (int a : w.family) family.push_back(lattice_.name(a));
    throw FinlocError(ErrorKind::NotAFrame, "frame distributivity fails",
                      {{"A", family},
                       {"b", lattice_.name(w.b)},
                       {"lhs", lattice_.name(w.lhs)},
                       {"rhs", lattice_.name(w.rhs)}});
  }
  const int n = size();
  arrow_.assign(static_cast<std::size_t>(n) * n, 0);
  diff_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ElementSet below, cover;
      for (int c = 0; c < n; ++c) {
        if (lattice_.leq(lattice_.meet(a, c), b)) below.insert(c);
        if (lattice_.leq(a, lattice_.join(b, c))) cover.insert(c);
      }
      arrow_[a * n + b] = static_cast<std::uint8_t>(lattice_.join_of(below));
      diff_[a * n + b] = static_cast<std::uint8_t>(lattice_.meet_of(cover));
    }
  for (int p = 0; p < n; ++p) {
    if (p == top()) continue;
    bool prime = true;
    for (int x = 0; x < n && prime; ++x)
      for (int y = 0; y < n && prime; ++y)
        if (leq(meet(x, y), p) && !leq(x, p) && !leq(y, p)) prime = false;
    if (prime) primes_.insert(p);
  }
}

bool Frame::is_boolean() const {
  for (int a = 0; a < size(); ++a)
    if (join(a, pseudocomplement(a)) != top()) return false;
  return true;
}

int heyting(const Frame& frame, int a, int b) { return frame.heyting(a, b); }
int pseudocomplement(const Frame& frame, int a) { return frame.pseudocomplement(a); }
ElementSet primes(const Frame& frame) { return frame.primes(); }

int coheyting_difference_dual(const FiniteLattice& l, int y, int x) {
  ElementSet cover;
  for (int c = 0; c < l.size(); ++c)
    if (l.leq(y, l.join(x, c))) cover.insert(c);
  return l.meet_of(cover);
}

ElementSet open_members(const Frame& frame, int a) {
  ElementSet out;
  for (int b = 0; b < frame.size(); ++b) out.insert(frame.heyting(a, b));
  return out;
}

ElementSet closed_members(const Frame& frame, int a) { return frame.up_set(a); }

namespace {

// Closure under the binary operation plus the unit, failing on the first
// pair (or the unit) that leaves s.
nlohmann::json closure_failure(ElementSet s, int unit, const char* what, auto&& op) {
  if (!s.contains(unit)) return {{"law", what}, {"missing", unit}};
  for (int a : s)
    for (int b : s)
      if (!s.contains(op(a, b))) return {{"law", what}, {"a", a}, {"b", b}, {"missing", op(a, b)}};
  return nullptr;
}

}  // namespace

nlohmann::json sublocale_failure(const FiniteLattice& l, ElementSet s) {
  auto w = closure_failure(s, l.top(), "S1", [&](int a, int b) { return l.meet(a, b); });
  if (!w.is_null()) return w;
  for (int a = 0; a < l.size(); ++a)
    for (int t : s) {
      ElementSet below;
      for (int c = 0; c < l.size(); ++c)
        if (l.leq(l.meet(a, c), t)) below.insert(c);
      const int arrow = l.join_of(below);
      if (!s.contains(arrow)) return {{"law", "S2"}, {"a", a}, {"s", t}, {"missing", arrow}};
    }
  return nullptr;
}

nlohmann::json subcolocale_failure(const FiniteLattice& c, ElementSet s) {
  auto w = closure_failure(s, c.bottom(), "S1", [&](int a, int b) { return c.join(a, b); });
  if (!w.is_null()) return w;
  for (int x = 0; x < c.size(); ++x)
    for (int t : s) {
      const int diff = coheyting_difference_dual(c, t, x);
      if (!s.contains(diff)) return {{"law", "S2"}, {"c", x}, {"s", t}, {"missing", diff}};
    }
  return nullptr;
}

}  // namespace finloc
