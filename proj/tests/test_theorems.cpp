#include <doctest.h>

#include <set>

#include "finloc/catalog.hpp"
#include "finloc/error.hpp"
#include "finloc/theorems.hpp"
#include "fixtures.hpp"

using namespace finloc;

namespace {

FrameContext ctx(const char* id, const FiniteLattice& l) { return FrameContext::build(id, l); }

}  // namespace

TEST_CASE("registry ids are unique and selectable") {
  std::set<std::string> ids;
  for (const auto& t : theorem_registry()) CHECK(ids.insert(t.id).second);
  CHECK(find_theorem("thm-se-iso"));
  CHECK(find_theorem("prop-sfre"));
  CHECK_FALSE(find_theorem("thm-nothing"));
  CHECK(select_theorems("all").size() == theorem_registry().size());
  const auto some = select_theorems("prop-sfre,thm-*");
  CHECK(some.size() > 2);
  for (const auto* t : some) CHECK((t->id == "prop-sfre" || t->id.rfind("thm-", 0) == 0));
  CHECK_THROWS_AS(select_theorems("thm-unknown"), FinlocError);
}

TEST_CASE("named checkers on the reference frames") {
  for (const auto& [id, l] : std::vector<std::pair<const char*, FiniteLattice>>{
           {"2", fixtures::two()}, {"3", fixtures::three()}, {"B4", fixtures::b4()}}) {
    CAPTURE(id);
    const auto c = ctx(id, l);
    CHECK(check_se_iso(c).passed);
    for (const auto& v : check_restrictions(c)) CHECK(v.passed);
    CHECK(check_inclusion_diagrams(c).passed);
    CHECK(check_so_strongly_exact(c).passed);
    CHECK(check_booleanization(c).passed);
    CHECK(check_bool_polarity_corollary(c).passed);
    CHECK(check_exact_subset_order(c).passed);
    CHECK(check_fit_vs_int(c).passed);
  }
}

TEST_CASE("sizes reported by the checkers") {
  const auto b4 = ctx("B4", fixtures::b4());
  CHECK(check_booleanization(b4).notes["size"] == 4);
  CHECK(check_inclusion_diagrams(b4).notes["fit"] == true);
  CHECK(check_exact_subset_order(b4).notes["sc"] == 4);
  CHECK(check_bool_polarity_corollary(b4).notes["B(L)"] == 4);
  const auto t = ctx("3", fixtures::three());
  CHECK(check_booleanization(t).notes["size"] == 2);
  CHECK(check_exact_subset_order(t).notes["sc"] == 3);
  CHECK(check_bool_polarity_corollary(t).notes["B(L)"] == 2);
  CHECK(check_se_iso(t).notes["size"] == 3);
}

TEST_CASE("coframe booleanization") {
  // B4 read as a coframe is Boolean; the 3-chain has {0, 1}
  CHECK(coframe_booleanization(fixtures::b4().order()).size() == 4);
  const auto t = fixtures::three();
  CHECK(coframe_booleanization(t.order()) ==
        (ElementSet::single(t.index_of("0")) | ElementSet::single(t.index_of("1"))));
}

TEST_CASE("Scott-open implies strongly exact rejects non-filters") {
  const auto c = ctx("B4", fixtures::b4());
  const ElementSet not_filter = ElementSet::single(c.frame.lattice().index_of("a"));
  CHECK_THROWS_AS(so_implies_se(c.frame, c.filters.tables(), not_filter), FinlocError);
  CHECK(so_implies_se(c.frame, c.filters.tables(), c.frame.all()));
}

TEST_CASE("mutation hooks turn isomorphism checkers into failures") {
  const auto c = ctx("B4", fixtures::b4());
  const auto* t = find_theorem("thm-se-iso");
  const auto problems = theorem_problems(*t, c);
  REQUIRE(problems.size() >= 2);
  for (auto kind : {Mutation::Kind::DeleteTarget, Mutation::Kind::FlipTargetOrder, Mutation::Kind::PerturbMap}) {
    const MutationHook hook{Mutation{kind, 0, 1}, 0};
    const auto v = run_theorem(*t, c, &hook);
    CHECK_FALSE(v.passed);
    REQUIRE(v.failing_problem);
    CHECK(v.witness["problem"] == v.failing_problem->label);
    const auto w = verify_order_isomorphism(*v.failing_problem);
    REQUIRE(w);
    CHECK(witness_reproduces(*v.failing_problem, *w));
  }
}

TEST_CASE("suite runner") {
  const auto empty = run_suite({}, select_theorems("all"));
  CHECK(empty.verdicts.empty());
  CHECK(empty.summary["frames"] == 0);
  CHECK(empty.all_passed());

  std::vector<CatalogEntry> frames = {{"m3", fixtures::m3()}, {"3", fixtures::three()}};
  const auto r = run_suite(frames, select_theorems("prop-sfre,deg-*"), Execution::serial);
  CHECK(r.all_passed());
  REQUIRE(r.skipped.size() == 1);
  CHECK(r.skipped[0]["frame"] == "m3");
  CHECK(r.verdicts.size() == 3);
  for (const auto& v : r.verdicts) CHECK(v.frame_id == "3");

  // frame order and content do not depend on the execution mode
  const auto cat = build_catalog(parse_catalog_spec("chain:4,powerset:2"));
  const auto a = run_suite(cat, select_theorems("all"), Execution::serial);
  const auto b = run_suite(cat, select_theorems("all"), Execution::parallel);
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) CHECK(a.verdicts[i].to_json() == b.verdicts[i].to_json());
  CHECK(a.summary == b.summary);
}
