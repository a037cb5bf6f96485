#include <doctest.h>

#include "finloc/closure.hpp"
#include "finloc/filters.hpp"
#include "finloc/polarity.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace finloc;

namespace {

Polarity identity2() { return Polarity::from_relation(2, 2, [](int x, int y) { return x == y; }); }

std::vector<ElementSet> as_sets(const std::vector<oracle::Mask>& masks) {
  std::vector<ElementSet> out;
  for (auto m : masks) out.emplace_back(m);
  return out;
}

}  // namespace

TEST_CASE("p and q") {
  const auto empty = Polarity::from_relation(2, 3, [](int, int) { return false; });
  CHECK(empty.p(ElementSet::full(2)).empty());
  const auto full = Polarity::from_relation(2, 3, [](int, int) { return true; });
  CHECK(full.p(ElementSet::single(1)) == ElementSet::full(3));
  CHECK(identity2().p(ElementSet::single(0)) == ElementSet::single(0));
}

TEST_CASE("closed sets on the examples") {
  const auto gc0 = galois_closed(Polarity::from_relation(1, 1, [](int, int) { return false; }));
  CHECK(gc0.closed == std::vector<ElementSet>{ElementSet{}, ElementSet::single(0)});
  const auto full = Polarity::from_relation(3, 2, [](int, int) { return true; });
  CHECK(galois_closed(full).closed == std::vector<ElementSet>{ElementSet::full(3)});
  const auto id = galois_closed(identity2());
  CHECK(id.size() == 4);
  CHECK(id.lattice().is_distributive());
  CHECK(id.closed[id.xe[0]] == ElementSet::single(0));
  CHECK(id.closed[id.ye[0]] == ElementSet::single(0));
  for (int x = 0; x < 3; ++x) CHECK(xe(full, x) == ElementSet::full(3));
  CHECK(ye(Polarity::from_relation(2, 1, [](int, int) { return false; }), 0).empty());
}

TEST_CASE("next closure equals subset filtering on random contexts") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int nx = 1 + static_cast<int>(seed % 9), ny = 1 + static_cast<int>((seed * 7) % 10);
    const auto p = random_polarity(nx, ny, 0.15 + 0.02 * static_cast<double>(seed % 30), seed);
    CAPTURE(seed);
    const auto expected = as_sets(oracle::closed_sets(nx, ny, oracle::relation(p)));
    CHECK(galois_closed(p).closed == expected);
    CHECK(galois_closed_brute(p, Execution::serial) == expected);
    CHECK(galois_closed_brute(p, Execution::parallel) == expected);
  }
  CHECK(random_polarity(5, 5, 0.5, 3).row(2) == random_polarity(5, 5, 0.5, 3).row(2));
}

TEST_CASE("next closure on a plain closure operator") {
  // closure: add 0 whenever 1 is present
  const auto sets = next_closure(3, [](ElementSet s) {
    if (s.contains(1)) s.insert(0);
    return s;
  });
  CHECK(sets.size() == 6);
}

TEST_CASE("laws and universal properties") {
  const auto p = identity2();
  const auto gc = galois_closed(p);
  CHECK(check_gc_laws(p, gc).all());
  const auto self = check_universal_properties(p, gc.order(), gc.xe, gc.ye);
  CHECK(self.passed());
  for (int i = 0; i < gc.size(); ++i) CHECK(self.iota[i] == i);

  // the transposed polarity, dualized, is another valid target
  const auto t = p.transposed();
  const auto gct = galois_closed(t);
  std::vector<int> xs, ys;
  for (int x = 0; x < p.nx(); ++x) xs.push_back(gct.ye[x]);
  for (int y = 0; y < p.ny(); ++y) ys.push_back(gct.xe[y]);
  CHECK(check_universal_properties(p, gct.order().dual(), xs, ys).passed());
  CHECK_FALSE(verify_order_isomorphism(gc_dual_problem(p)));

  // deleting an element of the target breaks join-density
  const auto smaller = gc.order().restricted(ElementSet::full(gc.size()) - ElementSet::single(gc.xe[0]));
  std::vector<int> xs2, ys2;
  auto shift = [&](int i) { return i > gc.xe[0] ? i - 1 : i; };
  for (int x : gc.xe) xs2.push_back(x == gc.xe[0] ? shift(gc.size() - 1) : shift(x));
  for (int y : gc.ye) ys2.push_back(y == gc.xe[0] ? shift(gc.size() - 1) : shift(y));
  const auto broken = check_universal_properties(p, smaller, xs2, ys2);
  CHECK_FALSE(broken.passed());
  CHECK_FALSE(broken.witness.is_null());
}

TEST_CASE("poset lemmas") {
  const FilterLattice fl{Frame(fixtures::three())};
  const Polarity z = Polarity::from_relation(fl.size(), 3, [&](int f, int a) { return fl.filter(f).contains(a); });
  const auto r = poset_lemma_suite(z, fl.lattice().order(), fixtures::three().order());
  CHECK(r.all_agree());
  for (const auto& item : r.items)
    if (item.name == "xe-monotone" || item.name == "xe-injective" || item.name == "xe-reflecting") CHECK(item.lhs);

  const auto full = Polarity::from_relation(3, 2, [](int, int) { return true; });
  const auto rf = poset_lemma_suite(full, fixtures::three().order(), fixtures::two().order());
  CHECK(rf.all_agree());
  for (const auto& item : rf.items)
    if (item.name == "xe-injective") CHECK_FALSE(item.lhs);

  const auto two = fixtures::two();
  const auto m = semilattice_map_report(two, two, {0, 1});
  CHECK(m.join_hom);
  CHECK(m.injective);
  CHECK(m.reflecting);
}

TEST_CASE("cl and int inside a lattice") {
  const auto b4 = fixtures::b4();
  const auto all = cl_int_inside(b4, b4.all(), b4.all());
  CHECK(all.passed());
  CHECK(all.int_side == b4.all());
  CHECK(all.cl_side == b4.all());
  const auto ab = cl_int_inside(b4, ElementSet::single(fixtures::at(b4, "a")), ElementSet::single(fixtures::at(b4, "b")));
  CHECK(ab.gc.size() == 2);
  CHECK(ab.passed());

  const FilterLattice fl{Frame(fixtures::three())};
  ElementSet principal;
  for (int a = 0; a < 3; ++a) principal.insert(fl.principal(a));
  const auto r = cl_int_inside(fl.lattice(), fl.family(FilterClass::closed), principal);
  CHECK(r.passed());
  CHECK(r.cl_side == fl.family(FilterClass::regular));
  CHECK(r.cl_side.size() == 2);
}
