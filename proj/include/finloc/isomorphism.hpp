#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finloc/lattice.hpp"
#include "finloc/ordered_set.hpp"

namespace finloc {

/// Why a candidate map fails to be an order isomorphism.
struct IsoWitness {
  enum class Kind { Undefined, NotInjective, NotSurjective, NotMonotone, NotReflecting };
  Kind kind;
  int a = -1;  // source element (target element for NotSurjective)
  int b = -1;  // second source element for pairwise failures
};

std::string_view to_string(IsoWitness::Kind kind);

/// A candidate map between two finite ordered sets, with -1 marking
/// source elements that have no image.
struct IsoProblem {
  std::string label;
  OrderedSet source;
  OrderedSet target;
  std::vector<int> map;
};

// Pointwise conditions; a map is an order isomorphism iff all hold.
bool iso_defined(const IsoProblem& p, int a);
bool iso_injective(const IsoProblem& p, int a, int b);
bool iso_surjective(const IsoProblem& p, int t);
bool iso_monotone(const IsoProblem& p, int a, int b);
bool iso_reflecting(const IsoProblem& p, int a, int b);

/// First failing condition in the fixed order defined, injective,
/// surjective, monotone, reflecting; nullopt for an isomorphism.
std::optional<IsoWitness> verify_order_isomorphism(const IsoProblem& p);
/// True when the condition named by the witness fails on p.
bool witness_reproduces(const IsoProblem& p, const IsoWitness& w);

/// Mutation hooks used by negative controls.
struct Mutation {
  enum class Kind { DeleteTarget, FlipTargetOrder, PerturbMap };
  Kind kind;
  int i = 0;
  int j = 0;
};
std::string_view to_string(Mutation::Kind kind);

/// DeleteTarget drops target element i (images of it become undefined);
/// FlipTargetOrder toggles target relation bit (i, j); PerturbMap sends
/// source element i to the image of source element j.
IsoProblem apply_mutation(const IsoProblem& p, const Mutation& m);

/// Some lattice isomorphism a -> b, searched by backtracking over the
/// meet-irreducibles with height/degree pruning.
std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);
/// Number of lattice isomorphisms a -> b, stopping at `limit`.
std::size_t count_isomorphisms(const FiniteLattice& a, const FiniteLattice& b,
                               std::size_t limit = 1000);
bool isomorphic(const FiniteLattice& a, const FiniteLattice& b);
/// Every lattice isomorphism a -> b (at most `limit`), in search order.
std::vector<std::vector<int>> all_isomorphisms(const FiniteLattice& a, const FiniteLattice& b,
                                               std::size_t limit = 1000);

/// Isomorphism-invariant hash from iterated colour refinement over the
/// covering graph. Equal lattices up to isomorphism hash equal.
std::uint64_t canonical_hash(const FiniteLattice& lattice);

}  // namespace finloc
