#include <doctest.h>

#include "finloc/catalog.hpp"
#include "finloc/filters.hpp"
#include "finloc/sublocales.hpp"
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

TEST_CASE("sublocales of the small frames") {
  const SublocaleLattice s2{Frame(fixtures::two())};
  CHECK(s2.size() == 2);
  const SublocaleLattice s3{Frame(fixtures::three())};
  REQUIRE(s3.size() == 4);
  const Frame& f = s3.frame();
  CHECK(s3.index_of(named(f, {"1"})) >= 0);
  CHECK(s3.index_of(named(f, {"m", "1"})) >= 0);
  CHECK(s3.index_of(named(f, {"0", "1"})) >= 0);
  CHECK(s3.index_of(f.all()) >= 0);
  CHECK(SublocaleLattice{Frame(fixtures::b4())}.size() == 4);
}

TEST_CASE("sublocales agree with subset enumeration") {
  for (const auto& e : build_catalog(default_catalog_spec())) {
    if (e.lattice.size() > 10) continue;
    CAPTURE(e.id);
    const oracle::Order o(e.lattice);
    const SublocaleLattice sl{Frame(e.lattice)};
    const auto expected = o.sublocales();
    REQUIRE(sl.size() == static_cast<int>(expected.size()));
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(sl.member(static_cast<int>(i)) == ElementSet(expected[i]));
    CHECK(sl.size() == 1 << ElementSet(o.primes()).size());
    for (int a = 0; a < e.lattice.size(); ++a) {
      CHECK(sl.os(a) == ElementSet(o.os(a)));
      CHECK(sl.cs(a) == ElementSet(o.cs(a)));
    }
  }
}

TEST_CASE("open and closed sublocales") {
  const Frame b(fixtures::b4());
  const SublocaleLattice sl{b};
  CHECK(sl.os(b.top()) == sl.fll());
  CHECK(sl.os(b.bottom()) == sl.emp());
  CHECK(sl.cs(b.top()) == sl.emp());
  CHECK(sl.cs(b.bottom()) == sl.fll());
  CHECK(sl.os(at(b.lattice(), "a")) == sl.cs(at(b.lattice(), "b")));
  const SublocaleLattice s3{Frame(fixtures::three())};
  const Frame& t = s3.frame();
  CHECK(s3.os(at(t.lattice(), "m")) == named(t, {"0", "1"}));
  CHECK(open_closed_laws(sl).passed());
  CHECK(open_closed_laws(s3).passed());
  CHECK(open_closed_laws(SublocaleLattice{Frame(fixtures::two())}).passed());
}

TEST_CASE("fitting, closure and spatialization") {
  const SublocaleLattice s3{Frame(fixtures::three())};
  const Frame& t = s3.frame();
  const int m = at(t.lattice(), "m");
  CHECK(s3.fit(s3.os(m)) == s3.os(m));
  CHECK(s3.fit(s3.cs(m)) == s3.fll());
  CHECK(s3.fit(s3.emp()) == s3.emp());
  CHECK(s3.closure(s3.fll()) == s3.fll());
  CHECK(s3.closure(s3.os(m)) == s3.fll());
  CHECK(s3.one_point(m) == s3.cs(m));
  CHECK(s3.one_point(t.bottom()) == s3.os(m));
  CHECK(s3.sp(s3.emp()) == s3.emp());
  CHECK(s3.fitted_join({s3.cs(m), s3.cs(t.top())}) == s3.fll());
  CHECK(s3.fitted_join({}) == s3.emp());

  const SublocaleLattice sb{Frame(fixtures::b4())};
  const Frame& b = sb.frame();
  CHECK(sb.closure(named(b, {"a", "1"})) == b.up_set(at(b.lattice(), "a")));

  for (const auto& l : {fixtures::three(), fixtures::b4(), chain_lattice(5), powerset_lattice(3)}) {
    const SublocaleLattice sl{Frame(l)};
    const Frame& f = sl.frame();
    for (int p : f.primes())
      for (int a = 0; a < f.size(); ++a) CHECK(sl.one_point(p).subset_of(sl.os(a)) == !f.leq(a, p));
    for (int i = 0; i < sl.size(); ++i) {
      const ElementSet s = sl.member(i);
      CHECK(sl.closure(s) == f.up_set(f.meet_of(s)));
      CHECK(s.subset_of(sl.fit(s)));
      CHECK(sl.sp(s).subset_of(s));
    }
  }
}

TEST_CASE("classification of sublocales") {
  const SublocaleLattice s3{Frame(fixtures::three())};
  const auto tags = s3.classify(s3.cs(at(s3.frame().lattice(), "m")));
  CHECK(tags.closed);
  CHECK(tags.locally_closed);
  CHECK(tags.smooth);
  CHECK(tags.spatial);
  CHECK_FALSE(tags.open);
  CHECK_FALSE(tags.fitted);
  const auto fll = s3.classify(s3.fll());
  CHECK(fll.open);
  CHECK(fll.closed);
  CHECK(fll.fitted);
  CHECK(fll.smooth);
  CHECK(fll.spatial);
  for (int i = 0; i < s3.size(); ++i) CHECK(s3.tags(i).compact);
}

TEST_CASE("stf and fts") {
  for (const auto& l : {fixtures::two(), fixtures::three(), fixtures::b4(), chain_lattice(5), powerset_lattice(3)}) {
    const Frame f(l);
    const SublocaleLattice sl{f};
    const FilterLattice fl{f};
    for (int a = 0; a < f.size(); ++a) {
      CHECK(fts(f, f.up_set(a)) == sl.os(a));
      CHECK(stf(f, sl.os(a)) == f.up_set(a));
      CHECK(stf(f, sl.cs(a)) == fl.closed_filter(a));
    }
    for (int i = 0; i < sl.size(); ++i)
      for (int j = 0; j < fl.size(); ++j)
        // stf(S) ⊑ F iff F ⊆ stf(S) as sets
        CHECK(fl.filter(j).subset_of(stf(f, sl.member(i))) == sl.member(i).subset_of(fts(f, fl.filter(j))));
    CHECK(stf(f, sl.fll()) == ElementSet::single(f.top()));
    CHECK(operator_laws(sl, fl).passed());
  }
  const Frame t(fixtures::three());
  CHECK(stf(t, named(t, {"m", "1"})) == ElementSet::single(t.top()));
}
