#include <doctest.h>

#include "finloc/catalog.hpp"
#include "finloc/extensions.hpp"
#include "finloc/isomorphism.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace finloc;
using fixtures::at;

namespace {

FilterExtension ext_of(const FilterLattice& fl, FilterClass c) {
  return build_extension(fl, fl.family(c), std::string(to_string(c)));
}

}  // namespace

TEST_CASE("extension sizes") {
  const FilterLattice f4{Frame(fixtures::b4())};
  const auto pr = ext_of(f4, FilterClass::principal);
  CHECK(pr.gc.size() == 4);
  CHECK(isomorphic(pr.gc.lattice(), fixtures::b4()));
  CHECK_FALSE(pr.alpha_failure);
  CHECK(ext_of(f4, FilterClass::closed).gc.size() == 4);
  const FilterLattice f3{Frame(fixtures::three())};
  const auto cl3 = ext_of(f3, FilterClass::closed);
  CHECK(cl3.gc.size() == 2);
  CHECK(cl3.concrete.size() == 2);
}

TEST_CASE("extension axioms on every catalog frame and class") {
  for (const auto& e : build_catalog(default_catalog_spec())) {
    CAPTURE(e.id);
    const FilterLattice fl{Frame(e.lattice)};
    for (FilterClass c : {FilterClass::all, FilterClass::principal, FilterClass::closed, FilterClass::locally_closed,
                          FilterClass::regular, FilterClass::completely_prime, FilterClass::scott_open,
                          FilterClass::exact, FilterClass::strongly_exact}) {
      CAPTURE(to_string(c));
      const auto ext = ext_of(fl, c);
      CHECK_FALSE(ext.alpha_failure);
      CHECK(check_extension_axioms(ext).passed());
      // the closed sets coincide with the brute-force enumeration
      const auto expected = oracle::closed_sets(ext.polarity.nx(), ext.polarity.ny(), oracle::relation(ext.polarity));
      REQUIRE(ext.gc.size() == static_cast<int>(expected.size()));
      for (std::size_t i = 0; i < expected.size(); ++i) CHECK(ext.gc.closed[i] == ElementSet(expected[i]));
    }
  }
}

TEST_CASE("axiom checks reject a damaged candidate") {
  const FilterLattice f4{Frame(fixtures::b4())};
  const auto ext = ext_of(f4, FilterClass::all);
  std::vector<int> e = ext.e_map;
  std::swap(e[at(f4.frame().lattice(), "a")], e[at(f4.frame().lattice(), "b")]);
  CHECK_FALSE(check_extension_axioms(ext.gc.order(), e, ext.k_map, ext.polarity).passed());
}

TEST_CASE("basic properties and separability") {
  const FilterLattice f4{Frame(fixtures::b4())};
  const auto b = basic_properties(f4, ext_of(f4, FilterClass::closed));
  CHECK(b.passed());
  CHECK(b.e_injective);
  const FilterLattice f3{Frame(fixtures::three())};
  const auto t = basic_properties(f3, ext_of(f3, FilterClass::closed));
  CHECK(t.passed());
  CHECK_FALSE(t.e_injective);
  CHECK_FALSE(t.separable);
  for (const auto& l : {fixtures::three(), fixtures::b4(), chain_lattice(6), powerset_lattice(3)}) {
    const FilterLattice fl{Frame(l)};
    const auto se = basic_properties(fl, ext_of(fl, FilterClass::strongly_exact));
    CHECK(se.passed());
    CHECK(se.e_injective);
    CHECK(se.e_embedding_if_injective);
  }
  // CP misses the improper filter: its least member is not the intersection of nothing
  const auto cp = basic_properties(f3, ext_of(f3, FilterClass::completely_prime));
  CHECK(cp.passed());
  CHECK(cp.k_join_exceptions == 1);
}

TEST_CASE("the four statements of the separability characterization") {
  const FilterLattice f4{Frame(fixtures::b4())};
  const auto b = generalchar(f4, ext_of(f4, FilterClass::closed));
  CHECK(b.agree());
  CHECK(b.injective);
  const FilterLattice f3{Frame(fixtures::three())};
  const auto t = generalchar(f3, ext_of(f3, FilterClass::closed));
  CHECK(t.agree());
  CHECK_FALSE(t.injective);
  CHECK_FALSE(t.int_has_principal);
  for (const auto& l : {fixtures::two(), fixtures::b4(), chain_lattice(5)}) {
    const FilterLattice fl{Frame(l)};
    const auto p = generalchar(fl, ext_of(fl, FilterClass::principal));
    CHECK(p.agree());
    CHECK(p.e_is_principal);
  }
}

TEST_CASE("meet preservation") {
  for (const auto& l : {fixtures::three(), fixtures::b4(), chain_lattice(5), powerset_lattice(3)}) {
    const FilterLattice fl{Frame(l)};
    const auto se = ext_of(fl, FilterClass::strongly_exact);
    const auto r = meet_preservation_scan(fl, se, FilterClass::strongly_exact);
    CHECK(r.passed());
    CHECK(r.exhaustive);
    for (auto m : meet_scan_masks(l.size())) CHECK(meet_preservation(fl, se, ElementSet(m)).preserved);
    for (int a = 0; a < l.size(); ++a) {
      for (FilterClass c : {FilterClass::closed, FilterClass::completely_prime})
        CHECK(meet_preservation(fl, ext_of(fl, c), ElementSet::single(a)).preserved);
    }
  }
  // only {1}: every element but 1 is sent to the bottom
  const FilterLattice f4{Frame(fixtures::b4())};
  const auto top_only = build_extension(f4, ElementSet::single(f4.top()), "top");
  CHECK(meet_preservation_scan(f4, top_only, FilterClass::all).agree);
  CHECK(meet_scan_masks(4).size() == 16);
  const auto sampled = meet_scan_masks(16);
  CHECK(sampled.size() <= static_cast<std::size_t>(kMeetScanMasks));
  CHECK(std::is_sorted(sampled.begin(), sampled.end()));
}

TEST_CASE("special cases") {
  const FilterLattice f3{Frame(fixtures::three())};
  const auto cp = special_cases(f3, ext_of(f3, FilterClass::completely_prime));
  CHECK(cp.passed());
  CHECK(cp.spatial);
  const FilterLattice f4{Frame(fixtures::b4())};
  const auto so = special_cases(f4, ext_of(f4, FilterClass::scott_open));
  CHECK(so.passed());
  CHECK(so.directed_joins);
  const FilterLattice f2{Frame(fixtures::two())};
  CHECK(special_cases(f2, ext_of(f2, FilterClass::closed)).passed());
}

TEST_CASE("canonical extension of a finite distributive lattice") {
  for (const auto& l : {fixtures::two(), fixtures::three(), fixtures::b4()}) {
    const auto r = dlat_canonical_extension(l);
    CHECK(r.passed());
    CHECK(isomorphic(r.gc.lattice(), l));
  }
  CHECK_THROWS(dlat_canonical_extension(fixtures::m3()));
}

TEST_CASE("completely prime filters and up-sets of points") {
  const auto t = cp_upset_lemma(FilterLattice{Frame(fixtures::three())});
  CHECK(t.passed());
  CHECK(t.points == 2);
  CHECK(t.upsets == 3);
  const auto b = cp_upset_lemma(FilterLattice{Frame(fixtures::b4())});
  CHECK(b.passed());
  CHECK(b.points == 2);
  CHECK(b.upsets == 4);
  const auto two = cp_upset_lemma(FilterLattice{Frame(fixtures::two())});
  CHECK(two.points == 1);
  CHECK(two.upsets == 2);
}
