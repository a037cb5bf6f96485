#include <doctest.h>

#include "finloc/catalog.hpp"
#include "finloc/error.hpp"
#include "finloc/filters.hpp"
#include "finloc/isomorphism.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace finloc;
using fixtures::at;

namespace {

ElementSet named(const Frame& f, std::initializer_list<const char*> names) {
  ElementSet s;
  for (const char* n : names) s.insert(f.lattice().index_of(n));
  return s;
}

}  // namespace

TEST_CASE("filters of the small frames") {
  const FilterLattice f2{Frame(fixtures::two())};
  CHECK(f2.size() == 2);
  CHECK(f2.filter(f2.top()) == ElementSet::single(f2.frame().top()));
  CHECK(f2.filter(f2.emp()) == f2.frame().all());
  const FilterLattice f3{Frame(fixtures::three())};
  CHECK(f3.size() == 3);
  const FilterLattice f4{Frame(fixtures::b4())};
  CHECK(f4.size() == 4);
  // (Filt, reverse inclusion) is the lattice itself, hence the dual of Filt^op
  CHECK(isomorphic(f4.lattice(), fixtures::b4().dual()));
  CHECK(isomorphic(f3.lattice(), fixtures::three()));
}

TEST_CASE("filters agree with subset enumeration on every catalog frame") {
  for (const auto& e : build_catalog(default_catalog_spec())) {
    CAPTURE(e.id);
    const oracle::Order o(e.lattice);
    const FilterLattice fl{Frame(e.lattice)};
    const auto expected = o.filters();
    REQUIRE(fl.size() == static_cast<int>(expected.size()));
    for (auto m : expected) {
      const ElementSet s(m);
      CHECK(fl.index_of(s) >= 0);
      CHECK(s == ElementSet(o.up(e.lattice.meet_of(s))));
    }
    CHECK(is_frame(fl.lattice().dual()).is_distributive_frame);
  }
}

TEST_CASE("difference and supplement") {
  const FilterLattice fl{Frame(fixtures::b4())};
  const Frame& f = fl.frame();
  const ElementSet top = fl.filter(fl.top());
  // the improper filter is the least element, {1} the greatest
  for (int i = 0; i < fl.size(); ++i) {
    CHECK(fl.difference(fl.filter(i), fl.filter(fl.emp())) == fl.filter(i));
    CHECK(fl.difference(fl.filter(i), top) == f.all());
  }
  const int a = at(f.lattice(), "a");
  CHECK(fl.difference(top, f.up_set(a)) == named(f, {"b", "1"}));
  CHECK(fl.supplement(f.up_set(a)) == named(f, {"b", "1"}));
  CHECK(fl.supplement(fl.filter(fl.emp())) == top);
  CHECK(fl.supplement(top) == f.all());
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) {
      ElementSet expected;
      for (int c = 0; c < 4; ++c)
        if (f.leq(y, f.join(c, x))) expected.insert(c);
      CHECK(fl.difference(f.up_set(y), f.up_set(x)) == expected);
      CHECK(fl.locally_closed_filter(y, x) == expected);
    }
}

TEST_CASE("coheyting adjunction in Filt") {
  for (const auto& l : {fixtures::three(), fixtures::b4(), chain_lattice(5), powerset_lattice(3)}) {
    const FilterLattice fl{Frame(l)};
    const auto& L = fl.lattice();
    for (int h = 0; h < fl.size(); ++h)
      for (int g = 0; g < fl.size(); ++g)
        for (int x = 0; x < fl.size(); ++x) {
          const int d = fl.difference_index(h, g);
          CHECK(L.leq(d, x) == L.leq(h, L.join(x, g)));
        }
  }
}

TEST_CASE("classification on the examples") {
  const FilterLattice f3{Frame(fixtures::three())};
  const int m = at(f3.frame().lattice(), "m");
  const auto& tm = f3.tags(f3.principal(m));
  CHECK(tm.completely_prime);
  CHECK(tm.scott_open);
  CHECK(tm.exact);
  CHECK(tm.strongly_exact);

  const FilterLattice f4{Frame(fixtures::b4())};
  const ElementSet cfa = f4.closed_filter(at(f4.frame().lattice(), "a"));
  CHECK(cfa == named(f4.frame(), {"b", "1"}));
  const auto tags = f4.classify(cfa);
  CHECK(tags.closed);
  CHECK(tags.regular);
}

TEST_CASE("class tests against definitions on the catalog") {
  for (const auto& e : build_catalog(default_catalog_spec())) {
    CAPTURE(e.id);
    const oracle::Order o(e.lattice);
    const FilterLattice fl{Frame(e.lattice)};
    const int n = e.lattice.size();
    for (int i = 0; i < fl.size(); ++i) {
      const ElementSet f = fl.filter(i);
      // completely prime: every family with join in F meets F
      bool cp = true;
      for (oracle::Mask m = 0; m < (oracle::Mask{1} << n); ++m)
        if (f.contains(o.lub(m)) && (ElementSet(m) & f).empty()) cp = false;
      CHECK(fl.tags(i).completely_prime == cp);
      bool closed = false;
      for (int a = 0; a < n; ++a) closed = closed || ElementSet(o.cf(a)) == f;
      CHECK(fl.tags(i).closed == closed);
      CHECK(fl.tags(i).scott_open);
      CHECK(fl.tags(i).exact);
      CHECK(fl.tags(i).strongly_exact);
      CHECK(is_exact(fl.frame(), fl.tables(), f, ExactMode::scan) ==
            is_exact(fl.frame(), fl.tables(), f, ExactMode::shortcut));
      CHECK(is_strongly_exact_by_lemma(fl.frame(), f));
    }
    CHECK(fl.family(FilterClass::completely_prime).size() == ElementSet(o.primes()).size());
  }
}

TEST_CASE("intersection closures") {
  const FilterLattice f4{Frame(fixtures::b4())};
  CHECK(f4.int_closure(f4.family(FilterClass::closed)) == ElementSet::full(4));
  const FilterLattice f3{Frame(fixtures::three())};
  const ElementSet icl = f3.int_closure(f3.family(FilterClass::closed));
  CHECK(icl.size() == 2);
  CHECK(icl.contains(f3.top()));
  CHECK(icl.contains(f3.emp()));
  // the empty intersection is the whole frame
  CHECK(f3.int_closure(ElementSet{}) == ElementSet::single(f3.emp()));
}

TEST_CASE("regular filters") {
  CHECK(regular_filters(FilterLattice{Frame(fixtures::b4())}).supplements.size() == 4);
  CHECK(regular_filters(FilterLattice{Frame(fixtures::three())}).supplements.size() == 2);
  CHECK(regular_filters(FilterLattice{Frame(fixtures::two())}).supplements.size() == 2);
  for (const auto& l : {fixtures::three(), fixtures::b4(), chain_lattice(6), powerset_lattice(3)})
    CHECK(regular_filters(FilterLattice{Frame(l)}).equal());
}

TEST_CASE("the scl condition") {
  const FilterLattice f4{Frame(fixtures::b4())};
  const auto cl = scl_condition(f4, f4.family(FilterClass::closed));
  CHECK(cl.literal);
  CHECK(cl.subcolocale);
  const FilterLattice f3{Frame(fixtures::three())};
  const auto se = scl_condition(f3, f3.family(FilterClass::strongly_exact));
  CHECK(se.literal);
  CHECK(se.subcolocale);
  // {↑1} alone: {1} \ ↑0 is the whole frame, which is not in the class
  const auto only_top = scl_condition(f4, ElementSet::single(f4.top()));
  CHECK_FALSE(only_top.literal);
  CHECK_FALSE(only_top.witness.is_null());
  // completely prime filters never contain the improper filter L = F \ ↑a for a in F
  const auto cp = scl_condition(f3, f3.family(FilterClass::completely_prime));
  CHECK_FALSE(cp.literal);
  CHECK(cp.relaxed);
  CHECK(cp.subcolocale);
}

TEST_CASE("subfitness") {
  const auto b4 = subfitness_suite(FilterLattice{Frame(fixtures::b4())});
  CHECK(b4.agree());
  CHECK(b4.subfit());
  CHECK(b4.boolean_direct);
  CHECK(b4.boolean_filters);
  const auto t = subfitness_suite(FilterLattice{Frame(fixtures::three())});
  CHECK(t.agree());
  CHECK_FALSE(t.subfit());
  REQUIRE_FALSE(t.witness.is_null());
  CHECK(t.witness["a"] == "m");
  CHECK(t.witness["b"] == "0");
  const auto two = subfitness_suite(FilterLattice{Frame(fixtures::two())});
  CHECK(two.subfit());
  CHECK(two.boolean_direct);

  for (const auto& e : build_catalog(default_catalog_spec())) {
    CAPTURE(e.id);
    const FilterLattice fl{Frame(e.lattice)};
    const auto r = subfitness_suite(fl);
    CHECK(r.agree());
    CHECK(r.subfit() == oracle::Order(e.lattice).subfit());
    CHECK(family_is_boolean(fl, fl.family(FilterClass::exact)) == r.subfit());
  }
}

TEST_CASE("frames above the filter cap are refused") {
  CHECK_THROWS_AS(FilterLattice{Frame(chain_lattice(kFilterFrameCap + 1))}, FinlocError);
}
