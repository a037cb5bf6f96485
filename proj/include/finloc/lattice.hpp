#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "finloc/element_set.hpp"
#include "finloc/kernels.hpp"
#include "finloc/ordered_set.hpp"

namespace finloc {

/// A finite lattice on element indices 0..n-1 with precomputed meet and
/// join tables. Immutable after construction.
class FiniteLattice {
public:
  /// Validates `order` (a partial order with all binary glbs and lubs) and
  /// tabulates it. Throws NotAPoset or NotALattice with the offending pair.
  static FiniteLattice from_order(std::vector<std::string> names, const OrderedSet& order);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of the element with this name, or -1.
  int index_of(std::string_view name) const;

  bool leq(int a, int b) const { return order_.leq(a, b); }
  bool less(int a, int b) const { return a != b && order_.leq(a, b); }
  int meet(int a, int b) const { return meet_[a * size() + b]; }
  int join(int a, int b) const { return join_[a * size() + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  /// Meet / join of a family; the empty meet is top and the empty join bottom.
  int meet_of(ElementSet s) const;
  int join_of(ElementSet s) const;

  ElementSet up_set(int a) const { return order_.up(a); }
  ElementSet down_set(int a) const { return order_.down(a); }
  ElementSet all() const { return ElementSet::full(size()); }
  const OrderedSet& order() const { return order_; }

  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;
  /// Length of the longest chain from bottom to each element.
  std::vector<int> heights() const;
  ElementSet meet_irreducibles() const;
  bool is_distributive() const;

  FiniteLattice dual() const;
  /// The sub-poset on `keep`, which must itself be a lattice.
  FiniteLattice sublattice(ElementSet keep) const;

private:
  std::vector<std::string> names_;
  OrderedSet order_;
  std::vector<std::uint8_t> meet_;
  std::vector<std::uint8_t> join_;
  int bottom_ = 0;
  int top_ = 0;
};

/// Lattice from a generating relation: leq is the reflexive-transitive
/// closure of `pairs` (index pairs).
FiniteLattice build_lattice(std::vector<std::string> elements,
                            const std::vector<std::pair<int, int>>& pairs);
/// Same, with the pairs given by element name.
FiniteLattice build_lattice(std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& pairs);

/// A failing instance of (\/A) /\ b = \/{a /\ b | a in A}.
struct FrameLawWitness {
  ElementSet family;
  int b = 0;
  int lhs = 0;  // (\/A) /\ b
  int rhs = 0;  // \/{a /\ b}
};

struct FrameCheckReport {
  bool is_lattice = true;
  bool is_distributive_frame = true;
  bool exhaustive = true;  // false when the binary law was used
  std::optional<FrameLawWitness> witness;
};

/// Re-evaluates the frame law on a witness; true when it fails there.
bool frame_law_fails(const FiniteLattice& lattice, ElementSet family, int b);

/// Checks the frame law over every family A and element b when the lattice
/// has at most `exhaustive_threshold` elements, and binary distributivity
/// beyond that. Failing families are shrunk greedily.
FrameCheckReport is_frame(const FiniteLattice& lattice, int exhaustive_threshold = 12,
                          Execution exec = Execution::parallel);

/// A lattice validated as a frame, with the Heyting arrow and co-Heyting
/// difference tabulated.
class Frame {
public:
  /// Throws NotAFrame (witness: family, b, lhs, rhs) if the law fails.
  explicit Frame(FiniteLattice lattice, int exhaustive_threshold = 12);

  const FiniteLattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }
  const std::string& name(int i) const { return lattice_.name(i); }
  bool leq(int a, int b) const { return lattice_.leq(a, b); }
  int meet(int a, int b) const { return lattice_.meet(a, b); }
  int join(int a, int b) const { return lattice_.join(a, b); }
  int meet_of(ElementSet s) const { return lattice_.meet_of(s); }
  int join_of(ElementSet s) const { return lattice_.join_of(s); }
  int bottom() const { return lattice_.bottom(); }
  int top() const { return lattice_.top(); }
  ElementSet up_set(int a) const { return lattice_.up_set(a); }
  ElementSet down_set(int a) const { return lattice_.down_set(a); }
  ElementSet all() const { return lattice_.all(); }

  /// a -> b, the largest c with a /\ c <= b.
  int heyting(int a, int b) const { return arrow_[a * size() + b]; }
  int pseudocomplement(int a) const { return heyting(a, bottom()); }
  /// y \ x, the least c with y <= x \/ c.
  int difference(int y, int x) const { return diff_[y * size() + x]; }
  /// Elements p != 1 with x /\ y <= p implying x <= p or y <= p.
  ElementSet primes() const { return primes_; }
  bool is_boolean() const;

private:
  FiniteLattice lattice_;
  std::vector<std::uint8_t> arrow_;
  std::vector<std::uint8_t> diff_;
  ElementSet primes_;
};

/// Free-function forms of the elementwise operations.
int heyting(const Frame& frame, int a, int b);
int pseudocomplement(const Frame& frame, int a);
int coheyting_difference_dual(const FiniteLattice& lattice, int y, int x);
ElementSet primes(const Frame& frame);

/// os(a) = { a -> b | b in L } and cs(a) = up-set of a, as element sets.
ElementSet open_members(const Frame& frame, int a);
ElementSet closed_members(const Frame& frame, int a);

/// Tests S against (S1)/(S2) inside an arbitrary finite lattice read as a
/// frame: closed under all meets (top included) and a -> s in S, with the
/// arrow found by scan. Returns the first failure, or null.
nlohmann::json sublocale_failure(const FiniteLattice& frame_lattice, ElementSet s);

/// The order dual: S is a subcolocale of the coframe C when it is closed
/// under all joins (bottom included) and s \ c in S for s in S, c in C.
nlohmann::json subcolocale_failure(const FiniteLattice& coframe, ElementSet s);

}  // namespace finloc
