#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "finloc/element_set.hpp"
#include "finloc/kernels.hpp"
#include "finloc/lattice.hpp"

namespace finloc {

/// Largest frame accepted by filter analyses.
inline constexpr int kFilterFrameCap = 16;
/// Exactness is decided by scanning all M ⊆ F up to this filter size; larger
/// filters use the principal-generator shortcut.
inline constexpr int kExactScanCap = 16;

/// Non-empty, up-closed and closed under binary meets.
bool is_filter(const Frame& frame, ElementSet s);

/// Facts about every subset M of a frame's carrier, indexed by mask.
struct SubsetTables {
  std::vector<std::uint8_t> meet;            // /\M (top for the empty set)
  std::vector<std::uint8_t> join;            // \/M (bottom for the empty set)
  std::vector<std::uint8_t> exact;           // (/\M) \/ b = /\{a \/ b} for every b
  std::vector<std::uint8_t> strongly_exact;  // intersection of os(a), a in M, is os(/\M)
  std::vector<std::uint8_t> directed;        // non-empty, any two members have an upper bound in M
};

/// Throws FrameTooLarge above kFilterFrameCap.
SubsetTables subset_tables(const Frame& frame, Execution exec = Execution::parallel);

// Definitional class tests for a filter F.
bool is_completely_prime(const Frame& frame, const SubsetTables& t, ElementSet f);
bool is_scott_open(const Frame& frame, const SubsetTables& t, ElementSet f);
enum class ExactMode { scan, shortcut, automatic };
bool is_exact(const Frame& frame, const SubsetTables& t, ElementSet f,
              ExactMode mode = ExactMode::automatic);
bool is_strongly_exact(const Frame& frame, const SubsetTables& t, ElementSet f);
/// F is strongly exact iff every b with /\_{a in F} os(a) ⊆ os(b) lies in F.
bool is_strongly_exact_by_lemma(const Frame& frame, ElementSet f);
/// { a | for all x, y: (for all f in F, y <= f \/ x) implies y <= a \/ x }.
ElementSet exact_formula(const Frame& frame, ElementSet f);

enum class FilterClass {
  all,
  principal,
  closed,
  locally_closed,
  regular,
  completely_prime,
  scott_open,
  exact,
  strongly_exact,
};
std::string_view to_string(FilterClass c);
/// Accepts the short names all, principal, cl, lcl, r, cp, so, ex, se.
std::optional<FilterClass> parse_filter_class(std::string_view name);

struct FilterTags {
  bool completely_prime = false;
  bool scott_open = false;
  bool exact = false;
  bool strongly_exact = false;
  bool closed = false;
  bool locally_closed = false;
  bool regular = false;
  bool principal = false;
  bool has(FilterClass c) const;
  nlohmann::json to_json() const;
};

/// Filt(L) ordered by reverse inclusion. Filters are indexed by their
/// generator, so filter i is the up-set of element i.
class FilterLattice {
public:
  explicit FilterLattice(Frame frame, Execution exec = Execution::parallel);

  const Frame& frame() const { return frame_; }
  int size() const { return static_cast<int>(filters_.size()); }
  ElementSet filter(int i) const { return filters_[i]; }
  const std::vector<ElementSet>& filters() const { return filters_; }
  int generator(int i) const { return generators_[i]; }
  /// Index of the filter with these members, or -1.
  int index_of(ElementSet members) const;
  int principal(int a) const { return index_of(frame_.up_set(a)); }
  /// Emp = L, the least filter; {1}, the largest.
  int emp() const { return principal(frame_.bottom()); }
  int top() const { return principal(frame_.top()); }
  /// (Filt(L), ⊑) with members named after their generators.
  const FiniteLattice& lattice() const { return lattice_; }
  const SubsetTables& tables() const { return tables_; }

  ElementSet join(ElementSet f, ElementSet g) const { return f & g; }
  /// { x | x >= f /\ g for some f in F, g in G }.
  ElementSet meet(ElementSet f, ElementSet g) const;
  /// H \ G = { a | b \/ a in H for every b in G }.
  ElementSet difference(ElementSet h, ElementSet g) const;
  /// F# = {1} \ F.
  ElementSet supplement(ElementSet f) const { return difference(filter(top()), f); }
  /// cf(a) = { x | x \/ a = 1 } and of(a) = up-set of a.
  ElementSet closed_filter(int a) const;
  ElementSet open_filter(int a) const { return frame_.up_set(a); }
  /// { a | y <= a \/ x }.
  ElementSet locally_closed_filter(int y, int x) const;

  /// Tags computed from the definitions.
  FilterTags classify(ElementSet f) const;
  const FilterTags& tags(int i) const { return tags_[i]; }
  /// Indices of the filters in a class, ascending by generator.
  ElementSet family(FilterClass c) const;
  /// Indices of all intersections of subfamilies; the empty intersection is L.
  ElementSet int_closure(ElementSet family) const;
  /// Index of filter(h) \ filter(g).
  int difference_index(int h, int g) const { return index_of(difference(filter(h), filter(g))); }

private:
  Frame frame_;
  SubsetTables tables_;
  std::vector<ElementSet> filters_;
  std::vector<int> generators_;
  std::vector<FilterTags> tags_;
  FiniteLattice lattice_;
};

struct RegularReport {
  ElementSet supplements;  // { {1} \ F }
  ElementSet int_closed;   // Int(Cl(L))
  bool equal() const { return supplements == int_closed; }
};
RegularReport regular_filters(const FilterLattice& fl);

struct SclReport {
  bool literal = true;      // F \ ↑a lies in the class itself
  bool relaxed = true;      // F \ ↑a lies in Int(class)
  bool subcolocale = true;  // Int(class) is a subcolocale of Filt(L)
  nlohmann::json witness;   // first literal failure, or the subcolocale failure
};
SclReport scl_condition(const FilterLattice& fl, ElementSet family);

struct SubfitnessReport {
  bool first_order = false;        // (i)
  bool principal_regular = false;  // (ii)
  bool ex_equals_r = false;        // (iii)
  bool open_from_closed = false;   // (iv)
  bool closed_supplement = false;  // (v)
  bool boolean_direct = false;     // every element complemented
  bool boolean_filters = false;    // of(a) ⊓ cf(a) = Emp for every a
  bool open_closed_lemma = false;  // of(a)# = cf(a) and of(a) ⊔ cf(a) = {1}
  nlohmann::json witness;          // (i) failure: a, b
  bool agree() const;
  bool subfit() const { return first_order; }
  nlohmann::json to_json() const;
};
SubfitnessReport subfitness_suite(const FilterLattice& fl);

/// Is the sub-poset of (Filt(L), ⊑) on these filter indices a Boolean lattice?
bool family_is_boolean(const FilterLattice& fl, ElementSet family);

}  // namespace finloc
