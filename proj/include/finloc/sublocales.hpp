#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "finloc/element_set.hpp"
#include "finloc/filters.hpp"
#include "finloc/kernels.hpp"
#include "finloc/lattice.hpp"

namespace finloc {

/// Largest frame whose sublocales are enumerated.
inline constexpr int kSublocaleFrameCap = 16;
/// (S1) scans every subset of S up to this size, binary meets beyond.
inline constexpr int kS1ExhaustiveCap = 12;
/// The raw 2^n sublocale filter is kept as an oracle up to this size.
inline constexpr int kRawSublocaleOracleCap = 10;

enum class S1Mode { exhaustive, binary, automatic };
/// (S1): closed under all meets, the empty meet (top) included.
bool satisfies_s1(const Frame& frame, ElementSet s, S1Mode mode = S1Mode::automatic);
/// (S2): a -> s in S for every a in L and s in S.
bool satisfies_s2(const Frame& frame, ElementSet s);
bool is_sublocale(const Frame& frame, ElementSet s);

/// Every subset passing (S1)/(S2), ascending; only up to kRawSublocaleOracleCap.
std::vector<ElementSet> sublocales_brute(const Frame& frame, Execution exec = Execution::parallel);

enum class SublocaleClass {
  open,          // os[L]
  closed,        // cs[L]
  fitted,        // So(L)
  locally_closed,// Slc(L)
  smooth,        // Sb(L) = J(Slc)
  joins_of_closed,  // Sc(L) = J(cs)
  compact,       // Sco(L)
  joins_of_compact, // Sk(L) = J(Sco)
  one_point,     // Sop(L)
  spatial,       // Ssp(L) = J(Sop)
};
std::string_view to_string(SublocaleClass c);

struct SublocaleTags {
  bool open = false;
  bool closed = false;
  bool fitted = false;
  bool locally_closed = false;
  bool smooth = false;
  bool joins_of_closed = false;
  bool compact = false;
  bool joins_of_compact = false;
  bool one_point = false;
  bool spatial = false;
  bool has(SublocaleClass c) const;
  nlohmann::json to_json() const;
};

/// Sl(L) ordered by inclusion. Sublocales are indexed in ascending bitset
/// order; families of sublocales are ElementSets of those indices.
class SublocaleLattice {
public:
  /// Throws FrameTooLarge above kSublocaleFrameCap and CarrierTooLarge when
  /// Sl(L) has more than 64 members.
  explicit SublocaleLattice(Frame frame, Execution exec = Execution::parallel);

  const Frame& frame() const { return frame_; }
  int size() const { return static_cast<int>(subs_.size()); }
  ElementSet member(int i) const { return subs_[i]; }
  const std::vector<ElementSet>& sublocales() const { return subs_; }
  int index_of(ElementSet s) const;
  /// Inclusion order; names list the members.
  const FiniteLattice& lattice() const { return lattice_; }

  ElementSet emp() const { return ElementSet::single(frame_.top()); }
  ElementSet fll() const { return frame_.all(); }
  ElementSet os(int a) const { return open_members(frame_, a); }
  ElementSet cs(int a) const { return closed_members(frame_, a); }
  /// { /\A | A ⊆ S ∪ T }.
  ElementSet join(ElementSet s, ElementSet t) const;
  ElementSet join_of(const std::vector<ElementSet>& family) const;
  ElementSet meet(ElementSet s, ElementSet t) const { return s & t; }

  /// Intersection of the opens containing S.
  ElementSet fit(ElementSet s) const;
  /// Intersection of the closed sublocales containing S.
  ElementSet closure(ElementSet s) const;
  /// b(p) = {p, 1}; throws NotPrime.
  ElementSet one_point(int p) const;
  /// Join of the b(p) inside S.
  ElementSet sp(ElementSet s) const;
  /// Least T with S ∨ T = Fll.
  ElementSet supplement(ElementSet s) const;
  /// fit(\/A).
  ElementSet fitted_join(const std::vector<ElementSet>& family) const;

  SublocaleTags classify(ElementSet s) const;
  const SublocaleTags& tags(int i) const { return tags_[i]; }
  ElementSet family(SublocaleClass c) const;

  /// J and M closures of an index family inside Sl(L); J adds Emp, M adds Fll.
  ElementSet join_closure(ElementSet fam) const;
  ElementSet meet_closure(ElementSet fam) const;
  /// Indices of fit(S) for S in the family.
  ElementSet fit_image(ElementSet fam) const;

private:
  bool compact_by_covers(ElementSet s) const;

  Frame frame_;
  std::vector<ElementSet> subs_;
  FiniteLattice lattice_;
  std::vector<SublocaleTags> tags_;
  std::vector<int> open_join_;        // index of the join of each family of opens
  std::vector<std::uint8_t> directed_opens_;
};

/// stf(S) = { a | S ⊆ os(a) } and fts(F) = intersection of os(a), a in F.
ElementSet stf(const Frame& frame, ElementSet s);
ElementSet fts(const Frame& frame, ElementSet f);

/// Failures of the open/closed sublocale law suite.
struct LawReport {
  std::vector<std::string> failed;
  nlohmann::json witness;
  bool passed() const { return failed.empty(); }
  void fail(const std::string& law, nlohmann::json w);
};

LawReport open_closed_laws(const SublocaleLattice& sl);
/// fit and cl closure operators, sp interior preserving finite joins, the
/// fixpoint descriptions of So and Ssp, cl(S) = ↑/\S, and the stf ⊣ fts
/// adjunction with its special values.
LawReport operator_laws(const SublocaleLattice& sl, const FilterLattice& fl);

}  // namespace finloc
