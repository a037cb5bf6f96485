#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finloc/lattice.hpp"
#include "finloc/ordered_set.hpp"

namespace finloc {

enum class CatalogKind { powerset, chain, downsets, topologies };

std::string_view to_string(CatalogKind kind);

struct CatalogEntry {
  std::string id;  // e.g. "chain:3", "downsets:4#17"
  FiniteLattice lattice;
};

/// An ordered list of (kind, bound) parts, e.g. "topologies:3,chain:6".
struct CatalogSpec {
  std::vector<std::pair<CatalogKind, int>> parts;
};

/// Parses "kind:bound[,kind:bound...]". Accepted kind names: powerset,
/// chain, downsets (alias posets), topologies. Throws InvalidInput.
CatalogSpec parse_catalog_spec(std::string_view text);
CatalogSpec default_catalog_spec();
std::string to_string(const CatalogSpec& spec);

/// Largest accepted bound per kind; larger bounds raise BoundTooLarge.
int catalog_bound_cap(CatalogKind kind);

/// Every lattice the kind produces up to `bound`, in enumeration order and
/// without removing isomorphic copies:
///   powerset   2^k for k = 1..bound
///   chain      chains with 2..bound+1 elements
///   downsets   down-set lattices of every partial order on 1..bound points
///   topologies open-set lattices of every topology on 1..bound points
std::vector<CatalogEntry> catalog_raw(CatalogKind kind, int bound);

/// The parts of `spec` concatenated, keeping the first lattice of every
/// isomorphism class across the whole catalog.
std::vector<CatalogEntry> build_catalog(const CatalogSpec& spec);

/// Drops later entries isomorphic to an earlier one.
std::vector<CatalogEntry> dedupe(std::vector<CatalogEntry> entries);

FiniteLattice powerset_lattice(int k);
FiniteLattice chain_lattice(int elements);
/// Down-sets of `poset` ordered by inclusion; points are named a, b, c, ...
FiniteLattice downset_lattice(const OrderedSet& poset);
/// The given open sets ordered by inclusion (no validation).
FiniteLattice opens_lattice(int points, const std::vector<ElementSet>& opens);

/// Every partial order on {0..m-1}, in ascending order of the strict
/// relation read as a bit string.
std::vector<OrderedSet> all_posets(int m);
/// Every topology on {0..m-1} as its ascending list of open sets.
std::vector<std::vector<ElementSet>> all_topologies(int m);

/// True when `opens` contains the empty and the full set and is closed
/// under binary unions and intersections.
bool is_topology(int points, const std::vector<ElementSet>& opens);

/// Set-style element name over points a, b, c, ...: "{}", "{a,c}".
std::string subset_name(ElementSet s);

}  // namespace finloc
