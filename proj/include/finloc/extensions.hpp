#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "finloc/filters.hpp"
#include "finloc/isomorphism.hpp"
#include "finloc/polarity.hpp"

namespace finloc {

/// Meet-preservation scans cover every subset up to this many masks and a
/// deterministic sample beyond.
inline constexpr int kMeetScanMasks = 4096;

/// The extension L^F = GC(F, L, ∋) of a frame for a class F of filters,
/// next to its concrete form Int(F).
struct FilterExtension {
  std::string label;
  ElementSet members;        // filter indices of the class
  std::vector<int> carrier;  // the same indices, ascending; X of the polarity
  Polarity polarity;         // carrier position Z a iff a lies in that filter
  GaloisClosedFamily gc;
  std::vector<int> e_map;    // L -> gc
  std::vector<int> k_map;    // carrier position -> gc
  ElementSet concrete;       // Int(F) as filter indices
  IsoProblem alpha;          // gc -> (Int(F), ⊑), M -> intersection of M
  std::optional<IsoWitness> alpha_failure;
};

FilterExtension build_extension(const FilterLattice& fl, ElementSet members, std::string label = {});

/// (D^F) and (C^F) for a candidate (C, e, k), with meets and joins taken as
/// glb / lub in C. Also checks k(F) = /\e[F] and the converse of (C^F).
struct AxiomReport {
  bool d = false;
  bool c = false;
  bool k_is_meet = false;
  bool converse_c = false;
  nlohmann::json witness;
  bool passed() const { return d && c && k_is_meet && converse_c; }
};
AxiomReport check_extension_axioms(const OrderedSet& c, const std::vector<int>& e_map,
                                   const std::vector<int>& k_map, const Polarity& membership);
AxiomReport check_extension_axioms(const FilterExtension& ext);

struct BasicPropertiesReport {
  bool k_monotone = false, k_injective = false, k_reflecting = false;  // item 1
  bool k_preserves = false;                                            // item 2
  int k_join_exceptions = 0;  // class joins that are not intersections, hence not preserved
  bool e_monotone = false;                                             // item 3
  bool e_zero_meets = false;                                           // item 4
  bool e_embedding_if_injective = false;                               // item 5
  bool e_injective = false, separable = false;                         // item 6
  nlohmann::json witness;
  bool passed() const;
};
BasicPropertiesReport basic_properties(const FilterLattice& fl, const FilterExtension& ext);

/// The four equivalent statements of the separability characterization.
struct GeneralCharReport {
  bool injective = false;
  bool separable = false;
  bool e_is_principal = false;        // concrete e(a) equals the up-set of a
  bool int_has_principal = false;     // Int(F) contains every principal filter
  bool agree() const {
    return injective == separable && separable == e_is_principal && e_is_principal == int_has_principal;
  }
};
GeneralCharReport generalchar(const FilterLattice& fl, const FilterExtension& ext);

/// e(/\M) = /\e[M] against "every filter of the class containing M contains /\M".
struct MeetVerdict {
  bool preserved = false;
  bool closed = false;
  bool agree() const { return preserved == closed; }
};
MeetVerdict meet_preservation(const FilterLattice& fl, const FilterExtension& ext, ElementSet m);

struct MeetScanReport {
  int scanned = 0;
  bool exhaustive = false;
  bool agree = true;               // preserved iff closed, on every scanned mask
  bool matches_meet_kind = true;   // for SE / Ex: preserved iff the meet is strongly exact / exact
  bool class_bullets = true;       // preserves all SE (Ex, all) meets iff the class is inside SE (Ex, principal)
  nlohmann::json witness;
  bool passed() const { return agree && matches_meet_kind && class_bullets; }
};
/// `kind` selects the extra comparison: strongly_exact, exact, or anything else for none.
MeetScanReport meet_preservation_scan(const FilterLattice& fl, const FilterExtension& ext,
                                      FilterClass kind);
/// The masks scanned: all of them when 2^n <= kMeetScanMasks, otherwise all
/// masks of popcount <= 3 plus a fixed-seed sample, ascending.
std::vector<std::uint64_t> meet_scan_masks(int n);

struct SpecialCasesReport {
  bool directed_joins = true;      // class ⊆ SO implies e preserves directed joins
  bool so_injective = true;        // SO ⊆ class and pre-spatial imply e injective
  bool cp_injective = true;        // CP ⊆ class and spatial imply e injective
  bool pre_spatial = false;        // SO-separable
  bool spatial = false;            // CP-separable
  bool pre_spatial_char = false;   // pre-spatial iff Int(SO) contains the principal filters
  bool spatial_char = false;       // spatial iff Int(CP) contains the principal filters
  nlohmann::json witness;
  bool passed() const {
    return directed_joins && so_injective && cp_injective && pre_spatial_char && spatial_char && spatial;
  }
};
SpecialCasesReport special_cases(const FilterLattice& fl, const FilterExtension& ext);

/// GC(Filt(D), Idl(D), F ∩ I ≠ ∅) for a finite distributive lattice D.
struct DlatExtensionReport {
  int filters = 0;
  int ideals = 0;
  GaloisClosedFamily gc;
  std::vector<int> e_map;  // d -> x^(↑d)
  bool e_agrees = false;   // x^(↑d) = y^(↓d)
  bool axiom_d = false;
  bool axiom_c = false;
  IsoProblem iso;          // D -> GC via e
  std::optional<IsoWitness> failure;
  nlohmann::json witness;
  bool passed() const { return e_agrees && axiom_d && axiom_c && !failure; }
};
/// Throws NotAFrame when D is not distributive.
DlatExtensionReport dlat_canonical_extension(const FiniteLattice& d);

/// Int(CP(L)) against the up-sets of (CP(L), ⊆) via G -> { Q in CP | G ⊆ Q }.
struct CpUpsetReport {
  int points = 0;
  int upsets = 0;
  bool cp_are_point_complements = false;  // CP(L) = { L \ ↓p | p prime }
  bool join_prime = false;                // each CP filter completely join-prime in Filt(L)
  std::vector<IsoProblem> problems;       // points -> CP, Int(CP) -> upsets
  std::optional<IsoWitness> failure;
  nlohmann::json witness;
  bool passed() const { return cp_are_point_complements && join_prime && !failure; }
};
CpUpsetReport cp_upset_lemma(const FilterLattice& fl);

}  // namespace finloc
