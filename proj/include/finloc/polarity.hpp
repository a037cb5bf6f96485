#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "finloc/element_set.hpp"
#include "finloc/isomorphism.hpp"
#include "finloc/kernels.hpp"
#include "finloc/lattice.hpp"
#include "finloc/ordered_set.hpp"

namespace finloc {

/// Carriers up to this size are cross-checked against the 2^|X| scan.
inline constexpr int kGcOracleCap = 12;

/// A relation Z between finite carriers X and Y.
class Polarity {
public:
  /// rows[x] = { y | x Z y }. Throws CarrierTooLarge above 64 on either side.
  Polarity(int nx, int ny, std::vector<ElementSet> rows);

  template <class Rel>
  static Polarity from_relation(int nx, int ny, Rel&& related) {
    std::vector<ElementSet> rows(nx);
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y)
        if (related(x, y)) rows[x].insert(y);
    return Polarity(nx, ny, std::move(rows));
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  bool related(int x, int y) const { return rows_[x].contains(y); }
  ElementSet row(int x) const { return rows_[x]; }
  ElementSet column(int y) const { return cols_[y]; }

  /// p(M) = { y | every x in M is related to y }.
  ElementSet p(ElementSet m) const;
  /// q(N) = { x | x is related to every y in N }.
  ElementSet q(ElementSet n) const;
  ElementSet closure(ElementSet m) const { return q(p(m)); }

  /// (Y, X, Z^op).
  Polarity transposed() const;

  std::vector<std::string> x_names;
  std::vector<std::string> y_names;

private:
  int nx_;
  int ny_;
  std::vector<ElementSet> rows_;
  std::vector<ElementSet> cols_;
};

/// The Galois-closed subsets of X, sorted by ascending bitset, with the
/// canonical maps x^ and y^ as indices into `closed`.
struct GaloisClosedFamily {
  std::vector<ElementSet> closed;
  std::vector<int> xe;
  std::vector<int> ye;

  int size() const { return static_cast<int>(closed.size()); }
  /// Position of a closed set, or -1.
  int index_of(ElementSet s) const;
  /// Inclusion order (at most 64 members).
  OrderedSet order() const;
  /// The inclusion lattice with members named c0, c1, ... (at most 64).
  FiniteLattice lattice() const;
};

/// Closed sets of q.p by next-closure.
GaloisClosedFamily galois_closed(const Polarity& p);
/// Closed sets by filtering all 2^|X| subsets; ascending.
std::vector<ElementSet> galois_closed_brute(const Polarity& p, Execution exec = Execution::parallel);

/// x^(x) = qp({x}) and y^(y) = q({y}).
ElementSet xe(const Polarity& p, int x);
ElementSet ye(const Polarity& p, int y);

/// Join of closed sets: qp of the union.
ElementSet gc_join(const Polarity& p, const std::vector<ElementSet>& family);

/// Set-level checks used at any carrier size.
struct GcLawReport {
  bool adjunction = true;        // N <= p(M) iff M <= q(N), sampled on closed sets
  bool closure_laws = true;      // qp and pq inflationary, idempotent, monotone on closed sets
  bool item1 = true;             // join- and meet-density of x^ and y^
  bool item2 = true;             // x^(x) <= y^(y) iff x Z y
  bool dual_antiiso = true;      // M -> p(M) is an order-reversing bijection onto GC(Y,X,Z^op)
  bool join_formula = true;      // qp(union) is the least closed upper bound of each pair
  nlohmann::json witness;        // first failure, null when all hold
  bool all() const {
    return adjunction && closure_laws && item1 && item2 && dual_antiiso && join_formula;
  }
};
GcLawReport check_gc_laws(const Polarity& p, const GaloisClosedFamily& gc);

/// Outcome of the universal-property check of a candidate (C, x', y').
struct UniversalReport {
  bool item1 = false;
  bool item2 = false;
  bool iso = false;        // iota is an order isomorphism C -> GC(P)
  bool commutes = false;   // iota.x' = x^ and iota.y' = y^
  int commuting_isos = -1; // number of lattice isomorphisms commuting with the maps, when counted
  std::vector<int> iota;
  nlohmann::json witness;
  bool passed() const { return item1 && item2 && iso && commutes; }
};

/// Checks items 1 and 2 for maps x', y' into the finite poset C and, when
/// they hold, builds iota(u) = \/{x^(x) | x'(x) <= u} and verifies it.
/// Commuting isomorphisms are counted when C has at most `count_cap` elements.
UniversalReport check_universal_properties(const Polarity& p, const OrderedSet& c,
                                           const std::vector<int>& xe_c,
                                           const std::vector<int>& ye_c, int count_cap = 12);

/// GC(P) and GC(Y,X,Z^op) with the map M -> p(M) as an isomorphism from
/// GC(P) onto the dual of GC(Y,X,Z^op).
IsoProblem gc_dual_problem(const Polarity& p);

/// One biconditional of the poset lemmas: lhs computed in GC(P), rhs by
/// scanning the relation.
struct LemmaItem {
  std::string name;
  bool lhs = false;
  bool rhs = false;
  bool agree() const { return lhs == rhs; }
};

struct PosetLemmaReport {
  std::vector<LemmaItem> items;
  nlohmann::json witness;  // first disagreement
  bool all_agree() const;
};

/// The eight x^/y^ items, both preservation lemmas (scanned over subsets of
/// X and Y up to kGcOracleCap elements) and the injective-semilattice lemma
/// for x^ when X is a lattice.
PosetLemmaReport poset_lemma_suite(const Polarity& p, const OrderedSet& x_order,
                                   const OrderedSet& y_order);

/// Is f: a -> b an injective join-homomorphism, and does it reflect order?
struct SemilatticeMapReport {
  bool join_hom = false;
  bool injective = false;
  bool reflecting = false;
};
SemilatticeMapReport semilattice_map_report(const FiniteLattice& a, const FiniteLattice& b,
                                            const std::vector<int>& f);

/// cl_S and int_S inside a finite lattice, and the J / M closures.
int cl_in(const FiniteLattice& c, ElementSet s, int x);
int int_in(const FiniteLattice& c, ElementSet s, int x);
ElementSet join_closure(const FiniteLattice& c, ElementSet s);
ElementSet meet_closure(const FiniteLattice& c, ElementSet s);

struct ClIntReport {
  ElementSet int_side;      // int_X[M(Y)]
  ElementSet cl_side;       // cl_Y[J(X)]
  GaloisClosedFamily gc;    // GC(X, Y, <=), X and Y in ascending element order
  std::vector<IsoProblem> problems;  // alpha, cl_Y restricted, int_X restricted
  bool inverse = false;     // cl_Y and int_X are mutually inverse on the two sides
  std::optional<IsoWitness> failure;
  bool passed() const { return inverse && !failure; }
};
ClIntReport cl_int_inside(const FiniteLattice& c, ElementSet xsub, ElementSet ysub);

/// Deterministic random context with nx objects, ny attributes and the
/// given incidence density in [0, 1].
Polarity random_polarity(int nx, int ny, double density, std::uint64_t seed);

}  // namespace finloc
