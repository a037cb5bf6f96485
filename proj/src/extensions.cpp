#include "finloc/extensions.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "finloc/error.hpp"

namespace finloc {

namespace {

ElementSet intersection_of(const FilterLattice& fl, ElementSet family) {
  ElementSet out = fl.frame().all();
  for (int i : family) out &= fl.filter(i);
  return out;
}

bool separates(const FilterLattice& fl, ElementSet family, nlohmann::json* witness = nullptr) {
  const int n = fl.frame().size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool split = false;
      for (int i : family) split = split || fl.filter(i).contains(a) != fl.filter(i).contains(b);
      if (!split) {
        if (witness) *witness = {{"a", fl.frame().name(a)}, {"b", fl.frame().name(b)}};
        return false;
      }
    }
  return true;
}

bool contains_principal(const FilterLattice& fl, ElementSet concrete) {
  for (int a = 0; a < fl.frame().size(); ++a)
    if (!concrete.contains(fl.principal(a))) return false;
  return true;
}

}  // namespace

FilterExtension build_extension(const FilterLattice& fl, ElementSet members, std::string label) {
  const Frame& frame = fl.frame();
  std::vector<int> carrier = members.to_vector();
  Polarity pol = Polarity::from_relation(static_cast<int>(carrier.size()), frame.size(), [&](int x, int a) {
    return fl.filter(carrier[x]).contains(a);
  });
  for (int i : carrier) pol.x_names.push_back(fl.lattice().name(i));
  pol.y_names = frame.lattice().names();
  GaloisClosedFamily gc = galois_closed(pol);
  const ElementSet concrete = fl.int_closure(members);
  IsoProblem alpha{label + ":alpha", gc.order(), fl.lattice().order().restricted(concrete),
                   std::vector<int>(gc.size(), -1)};
  for (int i = 0; i < gc.size(); ++i) {
    const int k = fl.index_of(intersection_of(fl, gather(gc.closed[i], carrier)));
    alpha.map[i] = concrete.contains(k) ? concrete.below(k).size() : -1;
  }
  auto failure = verify_order_isomorphism(alpha);
  std::vector<int> e_map = gc.ye;
  std::vector<int> k_map = gc.xe;
  return FilterExtension{std::move(label), members,          std::move(carrier), std::move(pol),
                         std::move(gc),    std::move(e_map), std::move(k_map),   concrete,
                         std::move(alpha), failure};
}

AxiomReport check_extension_axioms(const OrderedSet& c, const std::vector<int>& e_map,
                                   const std::vector<int>& k_map, const Polarity& z) {
  AxiomReport r;
  auto note = [&](nlohmann::json w) {
    if (r.witness.is_null()) r.witness = std::move(w);
  };
  const int m = c.size();
  auto defined = [&](int u) { return u >= 0 && u < m; };
  for (int a = 0; a < z.ny(); ++a)
    if (!defined(e_map[a])) {
      note({{"axiom", "e-defined"}, {"a", a}});
      return r;
    }
  for (int f = 0; f < z.nx(); ++f)
    if (!defined(k_map[f])) {
      note({{"axiom", "k-defined"}, {"filter", f}});
      return r;
    }
  r.d = true;
  for (int u = 0; u < m; ++u) {
    ElementSet below, above;
    for (int f = 0; f < z.nx(); ++f)
      if (c.leq(k_map[f], u)) below.insert(k_map[f]);
    for (int a = 0; a < z.ny(); ++a)
      if (c.leq(u, e_map[a])) above.insert(e_map[a]);
    const auto j = c.lub(below);
    const auto g = c.glb(above);
    if (!j || *j != u || !g || *g != u) {
      r.d = false;
      note({{"axiom", "D"}, {"element", u}});
    }
  }
  r.c = r.converse_c = r.k_is_meet = true;
  for (int f = 0; f < z.nx(); ++f) {
    ElementSet image;
    for (int a : z.row(f)) image.insert(e_map[a]);
    const auto g = c.glb(image);
    if (!g || *g != k_map[f]) {
      r.k_is_meet = false;
      note({{"axiom", "k-is-meet"}, {"filter", f}});
    }
    for (int a = 0; a < z.ny(); ++a) {
      const bool below = c.leq(k_map[f], e_map[a]);
      if (below && !z.related(f, a)) {
        r.c = false;
        note({{"axiom", "C"}, {"filter", f}, {"a", a}});
      }
      if (!below && z.related(f, a)) {
        r.converse_c = false;
        note({{"axiom", "C-converse"}, {"filter", f}, {"a", a}});
      }
    }
  }
  return r;
}

AxiomReport check_extension_axioms(const FilterExtension& ext) {
  return check_extension_axioms(ext.gc.order(), ext.e_map, ext.k_map, ext.polarity);
}

bool BasicPropertiesReport::passed() const {
  return k_monotone && k_injective && k_reflecting && k_preserves && e_monotone && e_zero_meets &&
         e_embedding_if_injective && e_injective == separable;
}

BasicPropertiesReport basic_properties(const FilterLattice& fl, const FilterExtension& ext) {
  BasicPropertiesReport r;
  auto note = [&](const char* item, nlohmann::json w) {
    if (r.witness.is_null()) r.witness = {{"item", item}, {"at", std::move(w)}};
  };
  const Frame& frame = fl.frame();
  const int n = frame.size();
  const int k = static_cast<int>(ext.carrier.size());
  const auto& gc = ext.gc;
  const Polarity& pol = ext.polarity;
  auto set_of = [&](int idx) { return gc.closed[idx]; };

  // item 1 on (class, ⊑)
  const OrderedSet cls = fl.lattice().order().restricted(ext.members);
  r.k_monotone = r.k_injective = r.k_reflecting = true;
  for (int f = 0; f < k; ++f)
    for (int g = 0; g < k; ++g) {
      const bool le = cls.leq(f, g);
      const bool img = set_of(ext.k_map[f]).subset_of(set_of(ext.k_map[g]));
      if (le && !img) r.k_monotone = false, note("k-monotone", {{"f", f}, {"g", g}});
      if (f != g && ext.k_map[f] == ext.k_map[g]) r.k_injective = false, note("k-injective", {{"f", f}, {"g", g}});
      if (img && !le) r.k_reflecting = false, note("k-reflecting", {{"f", f}, {"g", g}});
    }

  // item 2: existing joins and meets of the class
  r.k_preserves = true;
  const std::uint64_t families = std::uint64_t{1} << k;
  for (std::uint64_t m = 0; m < families; ++m) {
    const ElementSet a(m);
    std::vector<ElementSet> parts;
    ElementSet meet = ElementSet::full(k);
    for (int f : a) {
      parts.push_back(set_of(ext.k_map[f]));
      meet &= set_of(ext.k_map[f]);
    }
    // joins are preserved exactly when the class join is the intersection
    if (const auto j = cls.lub(a)) {
      ElementSet common = frame.all();
      for (int f : a) common &= fl.filter(ext.carrier[f]);
      const bool intersection = fl.filter(ext.carrier[*j]) == common;
      const bool preserved = set_of(ext.k_map[*j]) == gc_join(pol, parts);
      if (preserved != intersection)
        r.k_preserves = false, note("k-joins", {{"family", a.to_vector()}});
      if (!preserved) ++r.k_join_exceptions;
    }
    if (const auto g = cls.glb(a); g && set_of(ext.k_map[*g]) != meet)
      r.k_preserves = false, note("k-meets", {{"family", a.to_vector()}});
  }

  // items 3 and 4
  r.e_monotone = r.e_zero_meets = true;
  if (set_of(ext.e_map[frame.bottom()]) != pol.closure(ElementSet{}) ||
      set_of(ext.e_map[frame.top()]) != ElementSet::full(k))
    r.e_zero_meets = false, note("e-extremes", nullptr);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (frame.leq(a, b) && !set_of(ext.e_map[a]).subset_of(set_of(ext.e_map[b])))
        r.e_monotone = false, note("e-monotone", {{"a", a}, {"b", b}});
      if (set_of(ext.e_map[frame.meet(a, b)]) != (set_of(ext.e_map[a]) & set_of(ext.e_map[b])))
        r.e_zero_meets = false, note("e-meets", {{"a", a}, {"b", b}});
    }

  // items 5 and 6
  r.e_injective = true;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (ext.e_map[a] == ext.e_map[b]) r.e_injective = false;
  r.separable = separates(fl, ext.members);
  r.e_embedding_if_injective = true;
  if (r.e_injective) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (set_of(ext.e_map[a]).subset_of(set_of(ext.e_map[b])) && !frame.leq(a, b))
          r.e_embedding_if_injective = false, note("e-reflecting", {{"a", a}, {"b", b}});
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < subsets && r.e_embedding_if_injective; ++m) {
      std::vector<ElementSet> parts;
      for (int a : ElementSet(m)) parts.push_back(set_of(ext.e_map[a]));
      if (set_of(ext.e_map[fl.tables().join[m]]) != gc_join(pol, parts))
        r.e_embedding_if_injective = false, note("e-joins", {{"family", ElementSet(m).to_vector()}});
    }
  }
  if (r.e_injective != r.separable) note("separability", nullptr);
  return r;
}

GeneralCharReport generalchar(const FilterLattice& fl, const FilterExtension& ext) {
  GeneralCharReport r;
  const Frame& frame = fl.frame();
  r.injective = true;
  for (int a = 0; a < frame.size(); ++a)
    for (int b = a + 1; b < frame.size(); ++b)
      if (ext.e_map[a] == ext.e_map[b]) r.injective = false;
  r.separable = separates(fl, ext.members);
  r.e_is_principal = true;
  for (int a = 0; a < frame.size(); ++a) {
    ElementSet containing;
    for (int i : ext.members)
      if (fl.filter(i).contains(a)) containing.insert(i);
    if (intersection_of(fl, containing) != frame.up_set(a)) r.e_is_principal = false;
  }
  r.int_has_principal = contains_principal(fl, ext.concrete);
  return r;
}

MeetVerdict meet_preservation(const FilterLattice& fl, const FilterExtension& ext, ElementSet m) {
  MeetVerdict v;
  const int k = static_cast<int>(ext.carrier.size());
  const int meet = fl.frame().meet_of(m);
  ElementSet images = ElementSet::full(k);
  for (int a : m) images &= ext.gc.closed[ext.e_map[a]];
  v.preserved = ext.gc.closed[ext.e_map[meet]] == images;
  v.closed = true;
  for (int i : ext.members)
    if (m.subset_of(fl.filter(i)) && !fl.filter(i).contains(meet)) v.closed = false;
  return v;
}

std::vector<std::uint64_t> meet_scan_masks(int n) {
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint64_t> out;
  if (count <= static_cast<std::uint64_t>(kMeetScanMasks)) {
    for (std::uint64_t m = 0; m < count; ++m) out.push_back(m);
    return out;
  }
  std::set<std::uint64_t> picked;
  for (std::uint64_t m = 0; m < count; ++m)
    if (std::popcount(m) <= 3) picked.insert(m);
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
  while (picked.size() < static_cast<std::size_t>(kMeetScanMasks)) picked.insert(pick(rng));
  return {picked.begin(), picked.end()};
}

MeetScanReport meet_preservation_scan(const FilterLattice& fl, const FilterExtension& ext, FilterClass kind) {
  MeetScanReport r;
  const int n = fl.frame().size();
  const auto masks = meet_scan_masks(n);
  r.scanned = static_cast<int>(masks.size());
  r.exhaustive = masks.size() == (std::size_t{1} << n);
  const auto& t = fl.tables();
  bool all_se = true, all_ex = true, all = true;
  for (auto m : masks) {
    const auto v = meet_preservation(fl, ext, ElementSet(m));
    if (!v.agree() && r.agree) {
      r.agree = false;
      r.witness = {{"M", ElementSet(m).to_vector()}, {"preserved", v.preserved}, {"closed", v.closed}};
    }
    if (kind == FilterClass::strongly_exact && v.preserved != static_cast<bool>(t.strongly_exact[m]))
      r.matches_meet_kind = false;
    if (kind == FilterClass::exact && v.preserved != static_cast<bool>(t.exact[m])) r.matches_meet_kind = false;
    if (t.strongly_exact[m]) all_se = all_se && v.preserved;
    if (t.exact[m]) all_ex = all_ex && v.preserved;
    all = all && v.preserved;
  }
  auto inside = [&](FilterClass c) { return ext.members.subset_of(fl.family(c)); };
  r.class_bullets = all_se == inside(FilterClass::strongly_exact) && all_ex == inside(FilterClass::exact) &&
                    all == inside(FilterClass::principal);
  if (!r.matches_meet_kind && r.witness.is_null()) r.witness = {{"check", "meet-kind"}};
  if (!r.class_bullets && r.witness.is_null()) r.witness = {{"check", "class-bullets"}};
  return r;
}

SpecialCasesReport special_cases(const FilterLattice& fl, const FilterExtension& ext) {
  SpecialCasesReport r;
  const Frame& frame = fl.frame();
  const ElementSet so = fl.family(FilterClass::scott_open);
  const ElementSet cp = fl.family(FilterClass::completely_prime);
  const auto& t = fl.tables();
  bool injective = true;
  for (int a = 0; a < frame.size(); ++a)
    for (int b = a + 1; b < frame.size(); ++b)
      if (ext.e_map[a] == ext.e_map[b]) injective = false;

  if (ext.members.subset_of(so)) {
    const std::uint64_t count = std::uint64_t{1} << frame.size();
    for (std::uint64_t m = 1; m < count; ++m) {
      if (!t.directed[m]) continue;
      std::vector<ElementSet> parts;
      for (int a : ElementSet(m)) parts.push_back(ext.gc.closed[ext.e_map[a]]);
      if (ext.gc.closed[ext.e_map[t.join[m]]] != gc_join(ext.polarity, parts)) {
        r.directed_joins = false;
        if (r.witness.is_null()) r.witness = {{"item", 1}, {"D", ElementSet(m).to_vector()}};
      }
    }
  }
  r.pre_spatial = separates(fl, so);
  r.spatial = separates(fl, cp);
  if (so.subset_of(ext.members) && r.pre_spatial && !injective) r.so_injective = false;
  if (cp.subset_of(ext.members) && r.spatial && !injective) r.cp_injective = false;
  r.pre_spatial_char = r.pre_spatial == contains_principal(fl, fl.int_closure(so));
  r.spatial_char = r.spatial == contains_principal(fl, fl.int_closure(cp));
  if (!r.spatial && r.witness.is_null()) {
    nlohmann::json w;
    separates(fl, cp, &w);
    r.witness = {{"item", "spatial"}, {"at", w}};
  }
  return r;
}

DlatExtensionReport dlat_canonical_extension(const FiniteLattice& d) {
  const FilterLattice filters(Frame{d}, Execution::serial);
  const FilterLattice ideals(Frame{d.dual()}, Execution::serial);
  DlatExtensionReport r;
  r.filters = filters.size();
  r.ideals = ideals.size();
  const Polarity pol = Polarity::from_relation(r.filters, r.ideals, [&](int f, int i) {
    return filters.filter(f).intersects(ideals.filter(i));
  });
  r.gc = galois_closed(pol);
  const int n = d.size();
  r.e_map.resize(n);
  r.e_agrees = true;
  for (int x = 0; x < n; ++x) {
    r.e_map[x] = r.gc.xe[filters.principal(x)];
    if (r.gc.closed[r.e_map[x]] != ye(pol, ideals.principal(x))) r.e_agrees = false;
  }
  auto e = [&](int x) { return r.gc.closed[r.e_map[x]]; };
  // /\e[F] and \/e[I]
  std::vector<ElementSet> filter_meets(r.filters), ideal_joins(r.ideals);
  for (int f = 0; f < r.filters; ++f) {
    ElementSet meet = ElementSet::full(r.filters);
    for (int x : filters.filter(f)) meet &= e(x);
    filter_meets[f] = meet;
  }
  for (int i = 0; i < r.ideals; ++i) {
    std::vector<ElementSet> parts;
    for (int x : ideals.filter(i)) parts.push_back(e(x));
    ideal_joins[i] = gc_join(pol, parts);
  }
  r.axiom_d = true;
  for (ElementSet u : r.gc.closed) {
    std::vector<ElementSet> below;
    ElementSet above = ElementSet::full(r.filters);
    for (ElementSet m : filter_meets)
      if (m.subset_of(u)) below.push_back(m);
    for (ElementSet j : ideal_joins)
      if (u.subset_of(j)) above &= j;
    if (gc_join(pol, below) != u || above != u) {
      r.axiom_d = false;
      if (r.witness.is_null()) r.witness = {{"axiom", "D"}, {"element", u.to_vector()}};
    }
  }
  r.axiom_c = true;
  for (int f = 0; f < r.filters; ++f)
    for (int i = 0; i < r.ideals; ++i)
      if (filter_meets[f].subset_of(ideal_joins[i]) && !filters.filter(f).intersects(ideals.filter(i))) {
        r.axiom_c = false;
        if (r.witness.is_null()) r.witness = {{"axiom", "C"}, {"filter", f}, {"ideal", i}};
      }
  r.iso = IsoProblem{"dlat:e", d.order(), r.gc.order(), r.e_map};
  r.failure = verify_order_isomorphism(r.iso);
  return r;
}

CpUpsetReport cp_upset_lemma(const FilterLattice& fl) {
  CpUpsetReport r;
  const Frame& frame = fl.frame();
  const ElementSet cp = fl.family(FilterClass::completely_prime);
  const std::vector<int> cps = cp.to_vector();
  const std::vector<int> pts = frame.primes().to_vector();
  r.points = static_cast<int>(pts.size());

  ElementSet complements;
  for (int p : pts) complements.insert(fl.index_of(frame.all() - frame.down_set(p)));
  r.cp_are_point_complements = complements == cp;

  // points ordered by the dual of L, onto (CP, ⊆)
  const OrderedSet point_order =
      OrderedSet::from_predicate(r.points, [&](int i, int j) { return frame.leq(pts[j], pts[i]); });
  const OrderedSet cp_order = OrderedSet::from_predicate(
      static_cast<int>(cps.size()), [&](int i, int j) { return fl.filter(cps[i]).subset_of(fl.filter(cps[j])); });
  IsoProblem points{"cp:points", point_order, cp_order, std::vector<int>(r.points, -1)};
  for (int i = 0; i < r.points; ++i) {
    const int k = fl.index_of(frame.all() - frame.down_set(pts[i]));
    points.map[i] = cp.contains(k) ? cp.below(k).size() : -1;
  }

  // up-sets of (CP, ⊆), enumerated directly
  std::vector<ElementSet> ups;
  const std::uint64_t count = std::uint64_t{1} << cps.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    bool up = true;
    for (int i : ElementSet(m)) up = up && cp_order.up(i).subset_of(ElementSet(m));
    if (up) ups.emplace_back(m);
  }
  r.upsets = static_cast<int>(ups.size());
  r.problems.push_back(points);
  if (r.upsets <= kMaxElements) {
    const ElementSet ints = fl.int_closure(cp);
    IsoProblem upset{"cp:upsets", fl.lattice().order().restricted(ints), OrderedSet::by_inclusion(ups),
                     std::vector<int>(ints.size(), -1)};
    int pos = 0;
    for (int g : ints) {
      ElementSet above;
      for (int q = 0; q < static_cast<int>(cps.size()); ++q)
        if (fl.filter(g).subset_of(fl.filter(cps[q]))) above.insert(q);
      const auto it = std::find(ups.begin(), ups.end(), above);
      upset.map[pos++] = it == ups.end() ? -1 : static_cast<int>(it - ups.begin());
    }
    r.problems.push_back(upset);
  } else {
    r.witness = {{"skipped", "more than 64 up-sets"}, {"upsets", r.upsets}};
  }
  for (const auto& p : r.problems)
    if (!r.failure) r.failure = verify_order_isomorphism(p);

  // P ⊑ ⨆A implies P ⊑ F for some F in A
  r.join_prime = true;
  const std::uint64_t families = std::uint64_t{1} << fl.size();
  for (int q : cps)
    for (std::uint64_t m = 0; m < families && r.join_prime; ++m) {
      const ElementSet fam(m);
      if (!intersection_of(fl, fam).subset_of(fl.filter(q))) continue;
      bool some = false;
      for (int f : fam) some = some || fl.filter(f).subset_of(fl.filter(q));
      if (!some) {
        r.join_prime = false;
        r.witness = {{"filter", q}, {"family", fam.to_vector()}};
      }
    }
  return r;
}

}  // namespace finloc
