#include "finloc/theorems.hpp"

#include <algorithm>
#include <map>

#include "finloc/error.hpp"
#include "finloc/extensions.hpp"
#include "finloc/polarity.hpp"

namespace finloc {

FrameContext FrameContext::build(std::string id, const FiniteLattice& lattice, Execution exec) {
  Frame frame(lattice);
  FilterLattice fl(frame, exec);
  SublocaleLattice sl(frame, exec);
  return FrameContext{std::move(id), std::move(frame), std::move(fl), std::move(sl)};
}

nlohmann::json TheoremVerdict::to_json() const {
  nlohmann::json j = {{"frame", frame_id}, {"passed", passed}, {"theorem", theorem_id}};
  if (!witness.is_null()) j["witness"] = witness;
  if (!notes.is_null()) j["notes"] = notes;
  return j;
}

bool Check::iso(IsoProblem p) {
  const int ordinal = static_cast<int>(problems_.size());
  problems_.emplace_back(p.label, p.target.size());
  if (hook_ && hook_->problem == ordinal) {
    Mutation m = hook_->mutation;
    const int n = m.kind == Mutation::Kind::PerturbMap ? p.source.size() : p.target.size();
    if (n > 0) {
      m.i = ((m.i % n) + n) % n;
      m.j = ((m.j % n) + n) % n;
    }
    p = apply_mutation(p, m);
  }
  const auto w = verify_order_isomorphism(p);
  if (!w) return true;
  if (witness_.is_null()) {
    witness_ = {{"problem", p.label}, {"failure", std::string(to_string(w->kind))}, {"a", w->a}, {"b", w->b}};
    failing_ = std::move(p);
  }
  return false;
}

bool Check::require(std::string_view what, bool ok, nlohmann::json witness) {
  if (ok) return true;
  if (witness_.is_null()) {
    witness_ = {{"condition", std::string(what)}};
    if (!witness.is_null()) witness_["at"] = std::move(witness);
  }
  return false;
}

TheoremVerdict Check::verdict(std::string theorem_id, std::string frame_id) && {
  TheoremVerdict v;
  v.theorem_id = std::move(theorem_id);
  v.frame_id = std::move(frame_id);
  v.passed = witness_.is_null();
  v.witness = std::move(witness_);
  v.notes = std::move(notes_);
  v.failing_problem = std::move(failing_);
  return v;
}

bool so_implies_se(const Frame& frame, const SubsetTables& t, ElementSet f) {
  if (!is_filter(frame, f))
    throw FinlocError(ErrorKind::InvalidInput, "not a filter", {{"members", f.to_vector()}});
  return !is_scott_open(frame, t, f) || is_strongly_exact(frame, t, f);
}

ElementSet coframe_booleanization(const OrderedSet& p) {
  const int n = p.size();
  const auto top = p.glb(ElementSet{});
  if (!top) return {};
  std::vector<int> supp(n, -1);
  for (int c = 0; c < n; ++c) {
    ElementSet cands;
    for (int d = 0; d < n; ++d) {
      ElementSet pair = ElementSet::single(c);
      pair.insert(d);
      if (p.lub(pair) == top) cands.insert(d);
    }
    const auto least = p.glb(cands);
    if (least && cands.contains(*least)) supp[c] = *least;
  }
  ElementSet out;
  for (int c = 0; c < n; ++c)
    if (supp[c] >= 0 && supp[supp[c]] == c) out.insert(c);
  return out;
}

namespace {

int pos_in(ElementSet fam, int idx) { return idx >= 0 && fam.contains(idx) ? fam.below(idx).size() : -1; }

nlohmann::json element_names(const Frame& f, ElementSet s) {
  nlohmann::json out = nlohmann::json::array();
  for (int i : s) out.push_back(f.name(i));
  return out;
}

nlohmann::json filter_names(const FilterLattice& fl, ElementSet fam) {
  nlohmann::json out = nlohmann::json::array();
  for (int i : fam) out.push_back("↑" + fl.frame().name(fl.generator(i)));
  return out;
}

nlohmann::json sub_names(const SublocaleLattice& sl, ElementSet fam) {
  nlohmann::json out = nlohmann::json::array();
  for (int i : fam) out.push_back(sl.lattice().name(i));
  return out;
}

OrderedSet filter_order(const FilterLattice& fl, ElementSet fam) { return fl.lattice().order().restricted(fam); }
OrderedSet sub_order(const SublocaleLattice& sl, ElementSet fam) { return sl.lattice().order().restricted(fam); }

ElementSet fts_image(const FrameContext& c, ElementSet filters) {
  ElementSet out;
  for (int i : filters) out.insert(c.sublocales.index_of(fts(c.frame, c.filters.filter(i))));
  return out;
}

// fts restricted to a filter family, as a map into a sublocale family
IsoProblem fts_problem(const FrameContext& c, std::string label, ElementSet filters, ElementSet subs) {
  IsoProblem p{std::move(label), filter_order(c.filters, filters), sub_order(c.sublocales, subs), {}};
  for (int i : filters) p.map.push_back(pos_in(subs, c.sublocales.index_of(fts(c.frame, c.filters.filter(i)))));
  return p;
}

IsoProblem stf_problem(const FrameContext& c, std::string label, ElementSet subs, ElementSet filters) {
  IsoProblem p{std::move(label), sub_order(c.sublocales, subs), filter_order(c.filters, filters), {}};
  for (int i : subs) p.map.push_back(pos_in(filters, c.filters.index_of(stf(c.frame, c.sublocales.member(i)))));
  return p;
}

ElementSet opens(const FrameContext& c) { return c.sublocales.family(SublocaleClass::open); }
ElementSet fitted(const FrameContext& c) { return c.sublocales.family(SublocaleClass::fitted); }

// ---------------------------------------------------------------- lattice level

void chk_heyting(const FrameContext& c, Check& k) {
  const Frame& f = c.frame;
  const int n = f.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int h = f.heyting(a, b);
      for (int x = 0; x < n; ++x)
        k.require("meet-arrow adjunction", f.leq(f.meet(a, x), b) == f.leq(x, h),
                  {{"a", f.name(a)}, {"b", f.name(b)}, {"c", f.name(x)}});
      k.require("a->b = 1 iff a <= b", (h == f.top()) == f.leq(a, b), {{"a", f.name(a)}, {"b", f.name(b)}});
      const int d = f.difference(a, b);
      bool least = f.leq(a, f.join(b, d));
      for (int x = 0; x < n; ++x)
        if (f.leq(a, f.join(b, x)) && !f.leq(d, x)) least = false;
      k.require("difference is least", least, {{"y", f.name(a)}, {"x", f.name(b)}});
    }
  for (int a = 0; a < n; ++a)
    k.require("pseudocomplement", f.pseudocomplement(a) == f.heyting(a, f.bottom()), {{"a", f.name(a)}});
  for (int p = 0; p < n; ++p) {
    ElementSet b = ElementSet::single(p);
    b.insert(f.top());
    const bool sub = p != f.top() && sublocale_failure(f.lattice(), b).is_null();
    k.require("prime iff {p,1} sublocale", f.primes().contains(p) == sub, {{"p", f.name(p)}});
  }
  k.require("primes exist", n < 2 || !f.primes().empty());
}

void chk_arrow_fixpoint(const FrameContext& c, Check& k) {
  const Frame& f = c.frame;
  const int n = f.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool rhs = true;
      for (int z = 0; z < n; ++z)
        if (y != z && f.leq(y, z)) rhs = rhs && !f.leq(f.meet(z, x), y);
      k.require("x->y = y iff z > y implies z/\\x not <= y", (f.heyting(x, y) == y) == rhs,
                {{"x", f.name(x)}, {"y", f.name(y)}});
    }
}

// ---------------------------------------------------------------- degeneracy

void chk_deg_filters(const FrameContext& c, Check& k) {
  const Frame& f = c.frame;
  const FilterLattice& fl = c.filters;
  const auto raw = serial::filter_subsets(f.size(), [&](std::uint64_t m) { return is_filter(f, ElementSet(m)); });
  k.require("filter count", static_cast<int>(raw.size()) == fl.size(), {{"raw", raw.size()}, {"built", fl.size()}});
  for (auto m : raw) {
    const ElementSet s(m);
    k.require("every filter principal", s == f.up_set(f.meet_of(s)), {{"filter", element_names(f, s)}});
    k.require("enumerated", fl.index_of(s) >= 0, {{"filter", element_names(f, s)}});
  }
  const auto& t = fl.tables();
  for (int i = 0; i < fl.size(); ++i) {
    const ElementSet s = fl.filter(i);
    const nlohmann::json at = {{"filter", "↑" + f.name(fl.generator(i))}};
    k.require("scott-open", is_scott_open(f, t, s), at);
    k.require("strongly exact", is_strongly_exact(f, t, s), at);
    k.require("exact by scan", is_exact(f, t, s, ExactMode::scan), at);
    k.require("tags", fl.tags(i).scott_open && fl.tags(i).strongly_exact && fl.tags(i).exact, at);
  }
  const ElementSet all = fl.family(FilterClass::all);
  k.require("SO = Filt", fl.family(FilterClass::scott_open) == all);
  k.require("SE = Filt", fl.family(FilterClass::strongly_exact) == all);
  k.require("Ex = Filt", fl.family(FilterClass::exact) == all);
  k.note("filters", fl.size());
}

void chk_deg_sublocales(const FrameContext& c, Check& k) {
  const SublocaleLattice& sl = c.sublocales;
  const ElementSet all = ElementSet::full(sl.size());
  k.require("fitted sublocales are open", fitted(c).subset_of(opens(c)),
            {{"sublocales", sub_names(sl, fitted(c) - opens(c))}});
  k.require("every sublocale compact", sl.family(SublocaleClass::compact) == all,
            {{"sublocales", sub_names(sl, all - sl.family(SublocaleClass::compact))}});
  for (int i = 0; i < sl.size(); ++i)
    k.require("enumerated sets are sublocales", is_sublocale(c.frame, sl.member(i)), {{"sublocale", sl.lattice().name(i)}});
  if (c.frame.size() <= kRawSublocaleOracleCap)
    k.require("raw enumeration agrees", sublocales_brute(c.frame, Execution::serial) == sl.sublocales());
  k.note("sublocales", sl.size());
}

void chk_coframes(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  const SublocaleLattice& sl = c.sublocales;
  k.require("Filt(L) is a coframe", is_frame(fl.lattice().dual(), 12, Execution::serial).is_distributive_frame);
  k.require("Sl(L) is a coframe", is_frame(sl.lattice().dual(), 12, Execution::serial).is_distributive_frame);
  const int m = fl.size();
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      const ElementSet d = fl.difference(fl.filter(h), fl.filter(g));
      for (int f = 0; f < m; ++f) {
        const bool lhs = fl.filter(f).subset_of(d);
        const bool rhs = (fl.filter(f) & fl.filter(g)).subset_of(fl.filter(h));
        k.require("difference adjunction", lhs == rhs, {{"H", h}, {"G", g}, {"F", f}});
      }
      const int meet = fl.index_of(fl.meet(fl.filter(h), fl.filter(g)));
      k.require("filter meet formula", meet == fl.lattice().meet(h, g), {{"F", h}, {"G", g}});
    }
  for (int i = 0; i < sl.size(); ++i)
    for (int j = i; j < sl.size(); ++j)
      k.require("sublocale join formula", sl.index_of(sl.join(sl.member(i), sl.member(j))) == sl.lattice().join(i, j),
                {{"S", sl.lattice().name(i)}, {"T", sl.lattice().name(j)}});
}

// ---------------------------------------------------------------- polarities

void chk_polarities(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  for (FilterClass cls : {FilterClass::all, FilterClass::closed}) {
    const auto ext = build_extension(fl, fl.family(cls), std::string(to_string(cls)));
    const auto laws = check_gc_laws(ext.polarity, ext.gc);
    k.require("gc laws", laws.all(), laws.witness);
    if (ext.polarity.nx() <= kGcOracleCap)
      k.require("next-closure equals brute force", galois_closed_brute(ext.polarity, Execution::serial) == ext.gc.closed);
    const auto u = check_universal_properties(ext.polarity, ext.gc.order(), ext.gc.xe, ext.gc.ye);
    k.require("universal properties on GC itself", u.passed(), u.witness);
    if (u.iso) {
      IsoProblem iota{ext.label + ":iota", ext.gc.order(), ext.gc.order(), u.iota};
      k.iso(iota);
    }
    k.iso(gc_dual_problem(ext.polarity));
  }
}

void chk_xe_ye(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  const auto ext = build_extension(fl, fl.family(FilterClass::all), "all");
  const auto rep = poset_lemma_suite(ext.polarity, fl.lattice().order(), c.frame.lattice().order());
  k.require("lemma items agree", rep.all_agree(), rep.witness);
  for (const auto& item : rep.items)
    if (item.name == "xe-monotone" || item.name == "xe-injective" || item.name == "xe-reflecting")
      k.require(item.name, item.lhs);
}

void chk_int_cl(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  ElementSet principal;
  for (int a = 0; a < c.frame.size(); ++a) principal.insert(fl.principal(a));
  const auto rep = cl_int_inside(fl.lattice(), fl.family(FilterClass::closed), principal);
  for (const auto& p : rep.problems) k.iso(p);
  k.require("cl and int mutually inverse", rep.inverse);
  k.require("cl side is R(L)", rep.cl_side == fl.family(FilterClass::regular),
            {{"cl_side", filter_names(fl, rep.cl_side)}});
  const auto whole = cl_int_inside(fl.lattice(), fl.lattice().all(), fl.lattice().all());
  k.require("whole lattice on both sides", whole.passed() && whole.int_side == fl.lattice().all() &&
                                                 whole.cl_side == fl.lattice().all());
}

// ---------------------------------------------------------------- filter extensions

constexpr FilterClass kExtensionClasses[] = {
    FilterClass::all,        FilterClass::principal, FilterClass::closed,
    FilterClass::locally_closed, FilterClass::regular, FilterClass::completely_prime,
    FilterClass::scott_open, FilterClass::exact,     FilterClass::strongly_exact,
};

std::vector<FilterExtension> extensions(const FilterLattice& fl) {
  std::vector<FilterExtension> out;
  for (FilterClass cls : kExtensionClasses) out.push_back(build_extension(fl, fl.family(cls), std::string(to_string(cls))));
  return out;
}

void chk_fext_concr(const FrameContext& c, Check& k) {
  for (const auto& ext : extensions(c.filters)) {
    k.iso(ext.alpha);
    if (ext.label == to_string(FilterClass::principal))
      k.iso(IsoProblem{"principal:e", c.frame.lattice().order(), ext.gc.order(), ext.e_map});
  }
}

void chk_fext_axioms(const FrameContext& c, Check& k) {
  for (const auto& ext : extensions(c.filters)) {
    const auto r = check_extension_axioms(ext);
    k.require(ext.label + ": axioms", r.passed(), r.witness);
  }
}

void chk_fext_basic(const FrameContext& c, Check& k) {
  for (const auto& ext : extensions(c.filters)) {
    const auto r = basic_properties(c.filters, ext);
    k.require(ext.label + ": basic properties", r.passed(), r.witness);
    if (r.k_join_exceptions > 0) k.note(ext.label + ": unpreserved class joins", r.k_join_exceptions);
    if (ext.label == to_string(FilterClass::strongly_exact) || ext.label == to_string(FilterClass::exact))
      k.require(ext.label + ": frame embedding", r.e_injective && r.e_embedding_if_injective);
  }
}

void chk_generalchar(const FrameContext& c, Check& k) {
  for (const auto& ext : extensions(c.filters)) {
    const auto r = generalchar(c.filters, ext);
    k.require(ext.label + ": four statements agree", r.agree(),
              {{"injective", r.injective}, {"separable", r.separable}, {"principal", r.e_is_principal},
               {"int", r.int_has_principal}});
    if (ext.label == to_string(FilterClass::principal)) k.require("principal: separable", r.separable);
  }
}

void chk_meet_pres(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  for (FilterClass cls : kExtensionClasses) {
    const auto ext = build_extension(fl, fl.family(cls), std::string(to_string(cls)));
    const auto r = meet_preservation_scan(fl, ext, cls);
    if (!r.agree && r.witness.contains("M")) {
      ElementSet m;
      for (int a : r.witness["M"]) m.insert(a);
      k.family_fails(ext.label + ": preserved iff closed", m,
                     [&](ElementSet x) { return !meet_preservation(fl, ext, x).agree(); });
    }
    k.require(ext.label + ": meet scan", r.passed(), r.witness);
    for (int a = 0; a < c.frame.size(); ++a)
      k.require(ext.label + ": singleton meets", meet_preservation(fl, ext, ElementSet::single(a)).preserved);
    if (cls == FilterClass::all) k.note("meet_masks", r.scanned);
  }
}

void chk_special_cases(const FrameContext& c, Check& k) {
  for (const auto& ext : extensions(c.filters)) {
    const auto r = special_cases(c.filters, ext);
    k.require(ext.label + ": special cases", r.passed(), r.witness);
  }
}

void chk_dlat(const FrameContext& c, Check& k) {
  const auto r = dlat_canonical_extension(c.frame.lattice());
  k.iso(r.iso);
  k.require("e from filters equals e from ideals", r.e_agrees);
  k.require("axiom D", r.axiom_d, r.witness);
  k.require("axiom C", r.axiom_c, r.witness);
  k.note("filters", r.filters);
  k.note("ideals", r.ideals);
}

// ---------------------------------------------------------------- filter classes

void chk_so_se(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  for (int i = 0; i < fl.size(); ++i)
    k.require("scott-open implies strongly exact", so_implies_se(c.frame, fl.tables(), fl.filter(i)),
              {{"filter", "↑" + c.frame.name(fl.generator(i))}});
  k.require("Int(SO) inside SE",
            fl.int_closure(fl.family(FilterClass::scott_open)).subset_of(fl.family(FilterClass::strongly_exact)));
}

void chk_se_char(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  for (int i = 0; i < fl.size(); ++i)
    k.require("definition agrees with the characterization",
              is_strongly_exact(c.frame, fl.tables(), fl.filter(i)) == is_strongly_exact_by_lemma(c.frame, fl.filter(i)),
              {{"filter", "↑" + c.frame.name(fl.generator(i))}});
  const ElementSet se = fl.family(FilterClass::strongly_exact);
  const ElementSet ex = fl.family(FilterClass::exact);
  k.require("Int(SE) = SE", fl.int_closure(se) == se);
  k.require("Int(Ex) = Ex", fl.int_closure(ex) == ex);
  k.require("Ex inside SE", ex.subset_of(se));
}

void chk_cp_upset(const FrameContext& c, Check& k) {
  const auto r = cp_upset_lemma(c.filters);
  for (const auto& p : r.problems) k.iso(p);
  k.require("CP filters are point complements", r.cp_are_point_complements);
  k.require("CP filters completely join-prime", r.join_prime, r.witness);
  k.require("up-set side built", r.problems.size() == 2, r.witness);
  k.note("points", r.points);
  k.note("upsets", r.upsets);
}

void chk_ex_char(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  const auto& t = fl.tables();
  for (int i = 0; i < fl.size(); ++i) {
    const ElementSet f = fl.filter(i);
    const nlohmann::json at = {{"filter", "↑" + c.frame.name(fl.generator(i))}};
    const bool scan = is_exact(c.frame, t, f, ExactMode::scan);
    k.require("formula reproduces exact filters", (exact_formula(c.frame, f) == f) == scan, at);
    k.require("scan and shortcut agree", scan == is_exact(c.frame, t, f, ExactMode::shortcut), at);
  }
  const ElementSet cl = fl.family(FilterClass::closed);
  const ElementSet lcl = fl.family(FilterClass::locally_closed);
  const ElementSet ex = fl.family(FilterClass::exact);
  k.require("Cl inside LCl", cl.subset_of(lcl));
  k.require("LCl inside Ex", lcl.subset_of(ex));
  k.require("R inside Ex", fl.family(FilterClass::regular).subset_of(ex));
  for (int y = 0; y < c.frame.size(); ++y)
    for (int x = 0; x < c.frame.size(); ++x)
      k.require("difference of principal filters is locally closed",
                fl.difference(fl.open_filter(y), fl.open_filter(x)) == fl.locally_closed_filter(y, x),
                {{"y", c.frame.name(y)}, {"x", c.frame.name(x)}});
}

void chk_ex_lcl(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  const ElementSet joins = fl.int_closure(fl.family(FilterClass::locally_closed));
  k.require("Ex = J(LCl)", joins == fl.family(FilterClass::exact),
            {{"J(LCl)", filter_names(fl, joins)}, {"Ex", filter_names(fl, fl.family(FilterClass::exact))}});
}

void chk_regular(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  const auto r = regular_filters(fl);
  k.require("supplements = Int(Cl)", r.equal(),
            {{"supplements", filter_names(fl, r.supplements)}, {"int", filter_names(fl, r.int_closed)}});
  k.require("regular tags", fl.family(FilterClass::regular) == r.supplements);
  for (int a = 0; a < c.frame.size(); ++a)
    k.require("closed filter is a supplement", fl.supplement(fl.open_filter(a)) == fl.closed_filter(a),
              {{"a", c.frame.name(a)}});
  k.require("R(L) is the Booleanization of Filt(L)",
            gather(coframe_booleanization(fl.lattice().order()), fl.family(FilterClass::all).to_vector()) ==
                r.supplements);
  k.note("regular", r.supplements.size());
}

constexpr FilterClass kSclClasses[] = {FilterClass::closed, FilterClass::scott_open, FilterClass::completely_prime,
                                       FilterClass::exact, FilterClass::strongly_exact};

void chk_scl(const FrameContext& c, Check& k) {
  nlohmann::json literal;
  for (FilterClass cls : kSclClasses) {
    const auto r = scl_condition(c.filters, c.filters.family(cls));
    literal[std::string(to_string(cls))] = r.literal;
    if (cls == FilterClass::completely_prime) {
      // the improper filter L arises as F \ ↑a for a in F and is not CP
      k.require("cp: F \\ ↑a in Int(CP)", r.relaxed, r.witness);
    } else {
      k.require(std::string(to_string(cls)) + ": F \\ ↑a in class", r.literal, r.witness);
    }
  }
  k.note("literal", literal);
}

void chk_scl_main(const FrameContext& c, Check& k) {
  for (FilterClass cls : kSclClasses) {
    const auto r = scl_condition(c.filters, c.filters.family(cls));
    k.require(std::string(to_string(cls)) + ": Int(class) subcolocale", r.subcolocale, r.witness);
  }
}

// subcolocale inclusion small ⊆ big, both index families of `whole`
void subcolocale_inclusion(Check& k, const std::string& what, const FiniteLattice& whole, ElementSet small,
                           ElementSet big) {
  if (!k.require(what + ": inclusion", small.subset_of(big))) return;
  const auto in_whole = subcolocale_failure(whole, small);
  k.require(what + ": subcolocale of the ambient coframe", in_whole.is_null(), in_whole);
  ElementSet inner;
  for (int i : small) inner.insert(pos_in(big, i));
  const auto in_big = subcolocale_failure(whole.sublattice(big), inner);
  k.require(what + ": subcolocale inclusion", in_big.is_null(), in_big);
}

void chk_inclusion_diagrams(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  const SublocaleLattice& sl = c.sublocales;
  const FiniteLattice& filt = fl.lattice();
  const ElementSet r = fl.family(FilterClass::regular);
  const ElementSet ex = fl.family(FilterClass::exact);
  const ElementSet se = fl.family(FilterClass::strongly_exact);
  const ElementSet all = fl.family(FilterClass::all);
  const ElementSet icp = fl.int_closure(fl.family(FilterClass::completely_prime));
  const ElementSet iso = fl.int_closure(fl.family(FilterClass::scott_open));
  subcolocale_inclusion(k, "R in Ex", filt, r, ex);
  subcolocale_inclusion(k, "Ex in SE", filt, ex, se);
  subcolocale_inclusion(k, "SE in Filt", filt, se, all);
  subcolocale_inclusion(k, "J(CP) in J(SO)", filt, icp, iso);
  subcolocale_inclusion(k, "J(SO) in SE", filt, iso, se);

  const ElementSet so = fitted(c);
  const ElementSet fsc = sl.fit_image(sl.family(SublocaleClass::joins_of_closed));
  const ElementSet fsb = sl.fit_image(sl.family(SublocaleClass::smooth));
  const ElementSet fsp = sl.fit_image(sl.family(SublocaleClass::spatial));
  const ElementSet fsk = sl.fit_image(sl.family(SublocaleClass::joins_of_compact));
  const FiniteLattice so_lattice = sl.lattice().sublattice(so);
  auto in_so = [&](const std::string& what, ElementSet small, ElementSet big) {
    if (!k.require(what + ": inclusion", small.subset_of(big))) return;
    ElementSet s, b;
    for (int i : small) s.insert(pos_in(so, i));
    for (int i : big) b.insert(pos_in(so, i));
    subcolocale_inclusion(k, what, so_lattice, s, b);
  };
  in_so("fit[Sc] in fit[Sb]", fsc, fsb);
  in_so("fit[Sb] in So", fsb, so);
  in_so("fit[Ssp] in fit[Sk]", fsp, fsk);
  in_so("fit[Sk] in So", fsk, so);
  k.require("fts carries R onto fit[Sc]", fts_image(c, r) == fsc);
  k.require("fts carries Ex onto fit[Sb]", fts_image(c, ex) == fsb);
  k.require("fts carries J(CP) onto fit[Ssp]", fts_image(c, icp) == fsp);
  k.require("fts carries J(SO) onto fit[Sk]", fts_image(c, iso) == fsk);

  const bool fit = so == ElementSet::full(sl.size());
  k.note("fit", fit);
  if (fit) {
    const ElementSet sc = sl.family(SublocaleClass::joins_of_closed);
    const ElementSet sb = sl.family(SublocaleClass::smooth);
    const ElementSet ssp = sl.family(SublocaleClass::spatial);
    const ElementSet sk = sl.family(SublocaleClass::joins_of_compact);
    k.require("fit frame: Sc = Sb", sc == sb);
    subcolocale_inclusion(k, "fit frame: Sc in So", sl.lattice(), sc, so);
    subcolocale_inclusion(k, "fit frame: Ssp in Sk", sl.lattice(), ssp, sk);
    subcolocale_inclusion(k, "fit frame: Sk in So", sl.lattice(), sk, so);
    k.require("fit frames are subfit", subfitness_suite(fl).subfit());
  }
}

void chk_famouschar(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  ElementSet principal;
  for (int a = 0; a < c.frame.size(); ++a) principal.insert(fl.principal(a));
  auto separable = [&](ElementSet fam) {
    for (int a = 0; a < c.frame.size(); ++a)
      for (int b = a + 1; b < c.frame.size(); ++b) {
        bool split = false;
        for (int i : fam) split = split || fl.filter(i).contains(a) != fl.filter(i).contains(b);
        if (!split) return false;
      }
    return true;
  };
  const ElementSet so = fl.family(FilterClass::scott_open);
  const ElementSet cp = fl.family(FilterClass::completely_prime);
  k.require("pre-spatial iff J(SO) has the principal filters",
            separable(so) == principal.subset_of(fl.int_closure(so)));
  k.require("spatial iff J(CP) has the principal filters", separable(cp) == principal.subset_of(fl.int_closure(cp)));
  const auto sf = subfitness_suite(fl);
  k.require("subfit iff R has the principal filters",
            sf.subfit() == principal.subset_of(fl.family(FilterClass::regular)));
  k.require("finite frames are spatial", separable(cp));
}

void chk_sfre(const FrameContext& c, Check& k) {
  const auto sf = subfitness_suite(c.filters);
  k.require("five characterizations agree", sf.agree(), sf.to_json());
  k.require("subfit iff Ex = R", sf.subfit() == sf.ex_equals_r, sf.witness);
  k.note("subfit", sf.subfit());
}

void chk_ex_boolean(const FrameContext& c, Check& k) {
  const auto sf = subfitness_suite(c.filters);
  const bool boolean = family_is_boolean(c.filters, c.filters.family(FilterClass::exact));
  k.require("subfit iff Ex(L) Boolean", sf.subfit() == boolean, {{"subfit", sf.subfit()}, {"boolean", boolean}});
  k.note("ex_boolean", boolean);
}

void chk_subfit_joins_closed(const FrameContext& c, Check& k) {
  const auto sf = subfitness_suite(c.filters);
  k.require("subfit iff of(a) is a join of closed filters", sf.first_order == sf.open_from_closed, sf.to_json());
}

void chk_of_cf(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  for (int a = 0; a < c.frame.size(); ++a) {
    const ElementSet of = fl.open_filter(a);
    const ElementSet cf = fl.closed_filter(a);
    k.require("of(a)# = cf(a)", fl.supplement(of) == cf, {{"a", c.frame.name(a)}});
    k.require("of(a) join cf(a) = {1}", fl.join(of, cf) == fl.filter(fl.top()), {{"a", c.frame.name(a)}});
  }
  k.require("suite agrees", subfitness_suite(fl).open_closed_lemma);
}

void chk_open_closed_surprises(const FrameContext& c, Check& k) {
  const auto sf = subfitness_suite(c.filters);
  k.require("subfit iff cf(a)# = of(a)", sf.first_order == sf.closed_supplement, sf.to_json());
  k.require("Boolean iff of(a) meet cf(a) = Emp", sf.boolean_direct == sf.boolean_filters, sf.to_json());
  k.require("direct Boolean test", sf.boolean_direct == c.frame.is_boolean());
}

// ---------------------------------------------------------------- sublocales

void chk_open_closed_laws(const FrameContext& c, Check& k) {
  const auto r = open_closed_laws(c.sublocales);
  k.require("open/closed laws", r.passed(), {{"failed", r.failed}, {"witness", r.witness}});
}

void chk_operator_laws(const FrameContext& c, Check& k) {
  const auto r = operator_laws(c.sublocales, c.filters);
  k.require("operator laws", r.passed(), {{"failed", r.failed}, {"witness", r.witness}});
}

void chk_se_basics(const FrameContext& c, Check& k) {
  const ElementSet se = c.filters.family(FilterClass::strongly_exact);
  for (int i : fitted(c)) {
    const ElementSet s = c.sublocales.member(i);
    const ElementSet f = stf(c.frame, s);
    const int fi = c.filters.index_of(f);
    k.require("stf lands in SE", fi >= 0 && se.contains(fi), {{"S", c.sublocales.lattice().name(i)}});
    k.require("fts(stf(S)) = S", fts(c.frame, f) == s, {{"S", c.sublocales.lattice().name(i)}});
  }
}

void se_iso_into(const FrameContext& c, Check& k) {
  const ElementSet se = c.filters.family(FilterClass::strongly_exact);
  const ElementSet so = fitted(c);
  k.iso(fts_problem(c, "fts:SE->So", se, so));
  k.iso(stf_problem(c, "stf:So->SE", so, se));
  for (int i : se)
    k.require("stf(fts(F)) = F", stf(c.frame, fts(c.frame, c.filters.filter(i))) == c.filters.filter(i),
              {{"F", "↑" + c.frame.name(c.filters.generator(i))}});
  // os: L -> So satisfies the extension axioms for SE
  std::vector<int> e_map, k_map;
  for (int a = 0; a < c.frame.size(); ++a) e_map.push_back(pos_in(so, c.sublocales.index_of(c.sublocales.os(a))));
  const std::vector<int> carrier = se.to_vector();
  for (int i : carrier) k_map.push_back(pos_in(so, c.sublocales.index_of(fts(c.frame, c.filters.filter(i)))));
  const Polarity z = Polarity::from_relation(static_cast<int>(carrier.size()), c.frame.size(), [&](int x, int a) {
    return c.filters.filter(carrier[x]).contains(a);
  });
  const auto ax = check_extension_axioms(sub_order(c.sublocales, so), e_map, k_map, z);
  k.require("os satisfies the SE axioms", ax.passed(), ax.witness);
  k.note("size", se.size());
}

void chk_se_iso(const FrameContext& c, Check& k) { se_iso_into(c, k); }

struct Restriction {
  const char* id;
  const char* summary;
};

ElementSet restriction_filters(const FrameContext& c, int which) {
  const FilterLattice& fl = c.filters;
  switch (which) {
    case 0: return fl.family(FilterClass::locally_closed);
    case 1: return fl.family(FilterClass::exact);
    case 2: return fl.family(FilterClass::regular);
    case 3: return fl.family(FilterClass::scott_open);
    case 4: return fl.int_closure(fl.family(FilterClass::scott_open));
    default: return fl.int_closure(fl.family(FilterClass::completely_prime));
  }
}

ElementSet restriction_sublocales(const FrameContext& c, int which) {
  const SublocaleLattice& sl = c.sublocales;
  switch (which) {
    case 0: return sl.fit_image(sl.family(SublocaleClass::locally_closed));
    case 1: return sl.fit_image(sl.family(SublocaleClass::smooth));
    case 2: return sl.fit_image(sl.family(SublocaleClass::joins_of_closed));
    case 3: return fitted(c) & sl.family(SublocaleClass::compact);
    case 4: return sl.fit_image(sl.family(SublocaleClass::joins_of_compact));
    default: return sl.fit_image(sl.family(SublocaleClass::spatial));
  }
}

constexpr const char* kRestrictionIds[] = {"lem-lcl-iso", "thm-ex-iso", "thm-cl-iso",
                                           "prop-johnstone", "thm-so-iso", "thm-cp-iso"};

void restriction(const FrameContext& c, Check& k, int which) {
  const ElementSet filters = restriction_filters(c, which);
  const ElementSet subs = restriction_sublocales(c, which);
  k.require("filters inside SE", filters.subset_of(c.filters.family(FilterClass::strongly_exact)));
  k.require("sublocales fitted", subs.subset_of(fitted(c)));
  k.iso(fts_problem(c, std::string(kRestrictionIds[which]) + ":fts", filters, subs));
  k.note("size", filters.size());
}

void chk_fj_fittings(const FrameContext& c, Check& k) {
  const SublocaleLattice& sl = c.sublocales;
  for (SublocaleClass cls : {SublocaleClass::locally_closed, SublocaleClass::closed, SublocaleClass::compact,
                             SublocaleClass::one_point}) {
    ElementSet fj = sl.fit_image(sl.family(cls));
    fj.insert(sl.index_of(sl.fit(sl.emp())));
    for (ElementSet prev; prev != fj;) {
      prev = fj;
      for (int i : prev)
        for (int j : prev) fj.insert(sl.index_of(sl.fitted_join({sl.member(i), sl.member(j)})));
    }
    const ElementSet rhs = sl.fit_image(sl.join_closure(sl.family(cls)));
    k.require(std::string(to_string(cls)) + ": FJ(fit[A]) = fit[J(A)]", fj == rhs,
              {{"FJ", sub_names(sl, fj)}, {"fitJ", sub_names(sl, rhs)}});
  }
}

void chk_fit_vs_int(const FrameContext& c, Check& k) {
  const SublocaleLattice& sl = c.sublocales;
  const std::pair<SublocaleClass, SublocaleClass> items[] = {
      {SublocaleClass::locally_closed, SublocaleClass::smooth},
      {SublocaleClass::closed, SublocaleClass::joins_of_closed},
      {SublocaleClass::compact, SublocaleClass::joins_of_compact},
      {SublocaleClass::one_point, SublocaleClass::spatial},
  };
  const ElementSet so = fitted(c);
  for (const auto& [base, joins] : items) {
    const std::string name(to_string(base));
    const ElementSet d = sl.family(base);
    const auto rep = cl_int_inside(sl.lattice(), d, opens(c));
    for (auto p : rep.problems) {
      p.label = name + ":" + p.label;
      k.iso(std::move(p));
    }
    k.require(name + ": cl and int inverse", rep.inverse);
    k.require(name + ": J(class) is the joined family", sl.join_closure(d) == sl.family(joins));
    k.require(name + ": cl side is fit[J(class)]", rep.cl_side == sl.fit_image(sl.family(joins)),
              {{"cl_side", sub_names(sl, rep.cl_side)}});
    ElementSet interiors;
    for (int s : so) interiors.insert(int_in(sl.lattice(), d, s));
    k.require(name + ": int side is int_class[So]", rep.int_side == interiors,
              {{"int_side", sub_names(sl, rep.int_side)}});
    if (base == SublocaleClass::one_point) {
      ElementSet sps;
      for (int s : so) sps.insert(sl.index_of(sl.sp(sl.member(s))));
      k.require("int_Sop[So] = sp[So]", interiors == sps);
    }
  }
}

void chk_fext_polarity(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  const SublocaleLattice& sl = c.sublocales;
  const std::pair<FilterClass, SublocaleClass> items[] = {
      {FilterClass::exact, SublocaleClass::locally_closed},
      {FilterClass::closed, SublocaleClass::closed},
      {FilterClass::scott_open, SublocaleClass::compact},
      {FilterClass::completely_prime, SublocaleClass::one_point},
  };
  for (const auto& [fcls, scls] : items) {
    const std::string name(to_string(fcls));
    const auto ext = build_extension(fl, fl.family(fcls), name);
    const std::vector<int> subs = sl.family(scls).to_vector();
    const Polarity pol = Polarity::from_relation(static_cast<int>(subs.size()), c.frame.size(), [&](int x, int a) {
      return sl.member(subs[x]).subset_of(sl.os(a));
    });
    std::vector<int> xe_c;
    for (int s : subs) {
      const int fi = fl.index_of(stf(c.frame, sl.member(s)));
      const auto it = std::find(ext.carrier.begin(), ext.carrier.end(), fi);
      xe_c.push_back(it == ext.carrier.end() ? -1 : ext.k_map[it - ext.carrier.begin()]);
    }
    if (!k.require(name + ": stf of the sublocale class lands in the filter class",
                   std::find(xe_c.begin(), xe_c.end(), -1) == xe_c.end()))
      continue;
    const auto u = check_universal_properties(pol, ext.gc.order(), xe_c, ext.e_map);
    k.require(name + ": universal properties", u.item1 && u.item2, u.witness);
    if (u.item1 && u.item2) k.iso(IsoProblem{name + ":iota", ext.gc.order(), galois_closed(pol).order(), u.iota});
  }
  // L^Ex and L^LCl share the concrete side Ex(L)
  const auto ex = build_extension(fl, fl.family(FilterClass::exact), "exact");
  const auto lcl = build_extension(fl, fl.family(FilterClass::locally_closed), "locally_closed");
  if (k.require("Int(LCl) = Int(Ex)", ex.concrete == lcl.concrete)) {
    std::vector<int> inverse(lcl.gc.size(), -1);
    for (int i = 0; i < lcl.gc.size(); ++i)
      if (lcl.alpha.map[i] >= 0) inverse[lcl.alpha.map[i]] = i;
    IsoProblem p{"Ex->LCl", ex.gc.order(), lcl.gc.order(), {}};
    for (int i = 0; i < ex.gc.size(); ++i) p.map.push_back(ex.alpha.map[i] >= 0 ? inverse[ex.alpha.map[i]] : -1);
    k.iso(p);
  }
}

void chk_exact_subset(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  const SublocaleLattice& sl = c.sublocales;
  const Frame& f = c.frame;
  const std::vector<int> ex = fl.family(FilterClass::exact).to_vector();
  const ElementSet sc = sl.family(SublocaleClass::joins_of_closed);
  const Polarity pol = Polarity::from_relation(f.size(), static_cast<int>(ex.size()), [&](int a, int e) {
    return fl.filter(ex[e]).contains(a);
  });
  auto join_of_closed = [&](ElementSet members) {
    int acc = sl.lattice().bottom();
    for (int a : members) acc = sl.lattice().join(acc, sl.index_of(sl.cs(a)));
    return acc;
  };
  std::vector<int> xe_c, ye_c;
  for (int a = 0; a < f.size(); ++a) xe_c.push_back(pos_in(sc, sl.index_of(sl.cs(a))));
  for (int e : ex) ye_c.push_back(pos_in(sc, join_of_closed(fl.filter(e))));
  for (int a = 0; a < f.size(); ++a)
    for (int e = 0; e < static_cast<int>(ex.size()); ++e)
      k.require("cs(a) inside J(F) iff a in F",
                sl.lattice().leq(sl.index_of(sl.cs(a)), join_of_closed(fl.filter(ex[e]))) ==
                    fl.filter(ex[e]).contains(a),
                {{"a", f.name(a)}, {"F", "↑" + f.name(fl.generator(ex[e]))}});
  const OrderedSet sc_order = sub_order(sl, sc);
  const auto u = check_universal_properties(pol, sc_order, xe_c, ye_c);
  k.require("universal properties", u.passed(), u.witness);
  if (u.item1 && u.item2) k.iso(IsoProblem{"iota:Sc->GC", sc_order, galois_closed(pol).order(), u.iota});
  std::vector<ElementSet> ex_sets;
  for (int e : ex) ex_sets.push_back(fl.filter(e));
  k.iso(IsoProblem{"J:(Ex,subset)->Sc", OrderedSet::by_inclusion(ex_sets), sc_order, ye_c});

  const auto& t = fl.tables();
  for (auto m : meet_scan_masks(f.size())) {
    if (!t.exact[m]) continue;
    const ElementSet s(m);
    const bool ok = join_of_closed(s) == sl.index_of(sl.cs(t.meet[m]));
    if (!ok) {
      k.family_fails("cs turns exact meets into joins", s, [&](ElementSet x) {
        return t.exact[x.bits()] && join_of_closed(x) != sl.index_of(sl.cs(t.meet[x.bits()]));
      });
      break;
    }
  }
  k.note("sc", sc.size());
}

void chk_booleanization(const FrameContext& c, Check& k) {
  const FilterLattice& fl = c.filters;
  const SublocaleLattice& sl = c.sublocales;
  auto boole = [](const FiniteLattice& l, ElementSet fam) {
    return gather(coframe_booleanization(l.order().restricted(fam)), fam.to_vector());
  };
  const ElementSet b_filt = boole(fl.lattice(), fl.family(FilterClass::all));
  const ElementSet b_se = boole(fl.lattice(), fl.family(FilterClass::strongly_exact));
  const ElementSet b_ex = boole(fl.lattice(), fl.family(FilterClass::exact));
  const ElementSet r = fl.family(FilterClass::regular);
  k.require("R(L) = Int(Cl(L))", r == fl.int_closure(fl.family(FilterClass::closed)));
  k.require("R(L) = B(Ex(L))", r == b_ex, {{"B(Ex)", filter_names(fl, b_ex)}});
  k.require("B(Ex(L)) = B(SE(L))", b_ex == b_se, {{"B(SE)", filter_names(fl, b_se)}});
  k.require("B(SE(L)) = B(Filt(L))", b_se == b_filt, {{"B(Filt)", filter_names(fl, b_filt)}});

  const ElementSet fsc = sl.fit_image(sl.family(SublocaleClass::joins_of_closed));
  const ElementSet fsb = sl.fit_image(sl.family(SublocaleClass::smooth));
  const ElementSet b_fsb = boole(sl.lattice(), fsb);
  const ElementSet b_so = boole(sl.lattice(), fitted(c));
  k.require("fit[Sc] = B(fit[Sb])", fsc == b_fsb, {{"B(fit[Sb])", sub_names(sl, b_fsb)}});
  k.require("B(fit[Sb]) = B(So)", b_fsb == b_so, {{"B(So)", sub_names(sl, b_so)}});
  k.note("size", r.size());
}

void chk_bool_polarity(const FrameContext& c, Check& k) {
  const Frame& f = c.frame;
  const SublocaleLattice& sl = c.sublocales;
  const int n = f.size();
  auto same_sets = [&](const std::string& label, const Polarity& a, const Polarity& b) {
    const auto ga = galois_closed(a);
    const auto gb = galois_closed(b);
    IsoProblem p{label, ga.order(), gb.order(), {}};
    for (const auto& s : ga.closed) p.map.push_back(gb.index_of(s));
    k.iso(p);
    return gb;
  };
  auto join_members = [&](ElementSet xs, bool open) {
    int acc = sl.lattice().bottom();
    for (int a : xs) acc = sl.lattice().join(acc, sl.index_of(open ? sl.os(a) : sl.cs(a)));
    return acc;
  };

  // item 1
  const Polarity tot = Polarity::from_relation(n, n, [&](int x, int y) { return f.join(x, y) == f.top(); });
  const Polarity cs_os =
      Polarity::from_relation(n, n, [&](int a, int b) { return sl.cs(a).subset_of(sl.os(b)); });
  const auto g2 = same_sets("tot->cs-os", tot, cs_os);
  const ElementSet fsc = sl.fit_image(sl.family(SublocaleClass::joins_of_closed));
  const ElementSet b_so = gather(coframe_booleanization(sub_order(sl, fitted(c))), fitted(c).to_vector());
  k.require("fit[Sc] = B(So)", fsc == b_so);
  {
    IsoProblem p{"cs-os->fit[Sc]", g2.order(), sub_order(sl, fsc), {}};
    for (const auto& m : g2.closed) p.map.push_back(pos_in(fsc, sl.index_of(sl.fit(sl.member(join_members(m, false))))));
    k.iso(p);
    const auto rep = cl_int_inside(sl.lattice(), sl.family(SublocaleClass::closed), opens(c));
    k.require("item 1 via cl/int", rep.passed() && rep.cl_side == fsc);
  }

  // item 2
  const Polarity con = Polarity::from_relation(n, n, [&](int x, int y) { return f.meet(x, y) == f.bottom(); });
  const Polarity os_cs =
      Polarity::from_relation(n, n, [&](int a, int b) { return sl.os(a).subset_of(sl.cs(b)); });
  const auto g4 = same_sets("con->os-cs", con, os_cs);
  ElementSet cl_os;
  for (int x = 0; x < n; ++x) {
    const ElementSet cl = sl.closure(sl.os(x));
    k.require("cl(os(x)) = cs(x*)", cl == sl.cs(f.pseudocomplement(x)), {{"x", f.name(x)}});
    cl_os.insert(sl.index_of(cl));
  }
  const ElementSet closed = sl.family(SublocaleClass::closed);
  const ElementSet b_cs = gather(coframe_booleanization(sub_order(sl, closed)), closed.to_vector());
  k.require("cl[os[L]] = B(cs[L]^op)", cl_os == b_cs, {{"cl[os]", sub_names(sl, cl_os)}});
  {
    IsoProblem p{"os-cs->cl[os]", g4.order(), sub_order(sl, cl_os), {}};
    for (const auto& m : g4.closed)
      p.map.push_back(pos_in(cl_os, sl.index_of(sl.closure(sl.member(join_members(m, true))))));
    k.iso(p);
    const auto rep = cl_int_inside(sl.lattice(), opens(c), closed);
    k.require("item 2 via cl/int", rep.passed() && rep.cl_side == cl_os);
  }
  ElementSet regular;
  for (int a = 0; a < n; ++a)
    if (f.pseudocomplement(f.pseudocomplement(a)) == a) regular.insert(a);
  IsoProblem b{"B(L)->cl[os]", f.lattice().order().restricted(regular), sub_order(sl, cl_os).dual(), {}};
  for (int a : regular) b.map.push_back(pos_in(cl_os, sl.index_of(sl.cs(a))));
  k.iso(b);
  k.note("B(L)", regular.size());
}

// ---------------------------------------------------------------- registry

std::vector<TheoremInfo> make_registry() {
  std::vector<TheoremInfo> r = {
      {"lem-heyting", "Heyting adjunction, difference, primes as two-point sublocales", chk_heyting},
      {"lem-arrow-fixpoint", "x->y = y iff every z > y has z/\\x not below y", chk_arrow_fixpoint},
      {"deg-filters", "every filter principal; SO = SE = Ex = Filt", chk_deg_filters},
      {"deg-sublocales", "fitted sublocales open; every sublocale compact", chk_deg_sublocales},
      {"lem-coframes", "Filt(L) and Sl(L) are coframes; difference adjunction; join formulas", chk_coframes},
      {"thm-polarities", "GC laws, universal properties and the dual anti-isomorphism", chk_polarities, true},
      {"lem-xe-ye", "poset lemmas for (Filt(L), L, contains)", chk_xe_ye},
      {"prop-int-cl", "int_X[M(Y)] and cl_Y[J(X)] inside Filt(L)", chk_int_cl, true},
      {"prop-fext-concr", "L^F is isomorphic to Int(F)", chk_fext_concr, true},
      {"thm-fext-axioms", "(D^F) and (C^F) for every class", chk_fext_axioms},
      {"prop-fext-basic", "properties of e and k", chk_fext_basic},
      {"prop-generalchar", "injective iff separable iff e(a) = up-set iff Int(F) has the principal filters",
       chk_generalchar},
      {"prop-meet-pres", "meet preservation against closure of the class", chk_meet_pres},
      {"prop-special-cases", "directed joins, pre-spatial and spatial cases", chk_special_cases},
      {"ext-dlat", "canonical extension of a finite distributive lattice", chk_dlat, true},
      {"prop-so-se", "Scott-open filters are strongly exact", chk_so_se},
      {"lem-se-char", "strong exactness by definition and by characterization", chk_se_char},
      {"lem-cp-upset", "Int(CP(L)) against the up-sets of the points", chk_cp_upset, true},
      {"prop-ex-char", "the (ex) formula for exact filters", chk_ex_char},
      {"lem-ex-lcl", "exact filters are joins of locally closed filters", chk_ex_lcl},
      {"lem-regular", "regular filters are intersections of closed filters", chk_regular},
      {"lem-scl", "the (scl) condition for Cl, SO, CP, Ex, SE", chk_scl},
      {"thm-scl-main", "Int(F) is a subcolocale of Filt(L)", chk_scl_main},
      {"cor-all-subcoloc", "inclusion diagrams of filters and fitted sublocales", chk_inclusion_diagrams},
      {"prop-famouschar", "pre-spatial, spatial and subfit via principal filters", chk_famouschar},
      {"prop-sfre", "subfit iff every exact filter is regular", chk_sfre},
      {"cor-ex-boolean", "subfit iff Ex(L) is Boolean", chk_ex_boolean},
      {"laws-open-closed", "laws of open and closed sublocales", chk_open_closed_laws},
      {"laws-operators", "fit, cl, sp and the stf/fts adjunction", chk_operator_laws},
      {"lem-se-basics", "stf maps So into SE and fts.stf = id on So", chk_se_basics},
      {"thm-se-iso", "SE(L) and So(L) are isomorphic", chk_se_iso, true},
  };
  const char* summaries[] = {"LCl(L) and fit[Slc(L)]", "Ex(L) and fit[Sb(L)]", "R(L) and fit[Sc(L)]",
                             "SO(L) and compact fitted sublocales", "Int(SO(L)) and fit[Sk(L)]",
                             "Int(CP(L)) and fit[Ssp(L)]"};
  for (int i = 0; i < 6; ++i)
    r.push_back({kRestrictionIds[i], summaries[i], [i](const FrameContext& c, Check& k) { restriction(c, k, i); },
                 true});
  const std::vector<TheoremInfo> tail = {
      {"lem-fj-fittings", "fitted joins of fittings are fittings of joins", chk_fj_fittings},
      {"thm-fit-vs-int", "fit[J(D)] against int_D[So(L)]", chk_fit_vs_int, true},
      {"cor-fext-polarity", "filter extensions as polarities of sublocales", chk_fext_polarity, true},
      {"prop-exact-subset", "(Ex(L), subset) and Sc(L)", chk_exact_subset, true},
      {"thm-bool", "Booleanizations of the filter and sublocale coframes", chk_booleanization},
      {"cor-bool-polarity", "Booleanization as a polarity", chk_bool_polarity, true},
      {"prop-subfit-joins-closed", "subfit iff open filters are joins of closed filters", chk_subfit_joins_closed},
      {"lem-of-cf", "of(a)# = cf(a) and of(a) join cf(a) = {1}", chk_of_cf},
      {"prop-open-closed-surprises", "subfit and Boolean via open and closed filters", chk_open_closed_surprises},
  };
  r.insert(r.end(), tail.begin(), tail.end());
  return r;
}

TheoremVerdict run_by_id(std::string_view id, const FrameContext& ctx, const MutationHook* hook) {
  return run_theorem(*find_theorem(id), ctx, hook);
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> registry = make_registry();
  return registry;
}

const TheoremInfo* find_theorem(std::string_view id) {
  for (const auto& t : theorem_registry())
    if (t.id == id) return &t;
  return nullptr;
}

TheoremVerdict run_theorem(const TheoremInfo& t, const FrameContext& ctx, const MutationHook* hook) {
  Check k(hook);
  try {
    t.run(ctx, k);
  } catch (const FinlocError& e) {
    k.require("checker raised", false, {{"error", e.what()}, {"detail", e.witness()}});
  }
  return std::move(k).verdict(t.id, ctx.id);
}

std::vector<std::pair<std::string, int>> theorem_problems(const TheoremInfo& t, const FrameContext& ctx) {
  Check k;
  t.run(ctx, k);
  return k.problems();
}

TheoremVerdict check_se_iso(const FrameContext& ctx, const MutationHook* hook) {
  return run_by_id("thm-se-iso", ctx, hook);
}
std::vector<TheoremVerdict> check_restrictions(const FrameContext& ctx, const MutationHook* hook) {
  std::vector<TheoremVerdict> out;
  for (const char* id : kRestrictionIds) out.push_back(run_by_id(id, ctx, hook));
  return out;
}
TheoremVerdict check_inclusion_diagrams(const FrameContext& ctx, const MutationHook* hook) {
  return run_by_id("cor-all-subcoloc", ctx, hook);
}
TheoremVerdict check_so_strongly_exact(const FrameContext& ctx, const MutationHook* hook) {
  return run_by_id("prop-so-se", ctx, hook);
}
TheoremVerdict check_booleanization(const FrameContext& ctx, const MutationHook* hook) {
  return run_by_id("thm-bool", ctx, hook);
}
TheoremVerdict check_bool_polarity_corollary(const FrameContext& ctx, const MutationHook* hook) {
  return run_by_id("cor-bool-polarity", ctx, hook);
}
TheoremVerdict check_exact_subset_order(const FrameContext& ctx, const MutationHook* hook) {
  return run_by_id("prop-exact-subset", ctx, hook);
}
TheoremVerdict check_fit_vs_int(const FrameContext& ctx, const MutationHook* hook) {
  return run_by_id("thm-fit-vs-int", ctx, hook);
}

std::vector<const TheoremInfo*> select_theorems(std::string_view suite) {
  std::vector<const TheoremInfo*> out;
  if (suite.empty() || suite == "all") {
    for (const auto& t : theorem_registry()) out.push_back(&t);
    return out;
  }
  std::vector<bool> chosen(theorem_registry().size(), false);
  std::size_t start = 0;
  while (start <= suite.size()) {
    const std::size_t comma = suite.find(',', start);
    const std::string_view part = suite.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const bool prefix = !part.empty() && part.back() == '*';
    const std::string_view key = prefix ? part.substr(0, part.size() - 1) : part;
    bool hit = false;
    for (std::size_t i = 0; i < theorem_registry().size(); ++i) {
      const std::string& id = theorem_registry()[i].id;
      if (prefix ? id.starts_with(key) : id == key) chosen[i] = hit = true;
    }
    if (!hit) throw FinlocError(ErrorKind::InvalidInput, "unknown theorem id '" + std::string(part) + "'");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (std::size_t i = 0; i < chosen.size(); ++i)
    if (chosen[i]) out.push_back(&theorem_registry()[i]);
  return out;
}

bool SuiteResult::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const TheoremVerdict& v) { return v.passed; });
}

SuiteResult run_suite(const std::vector<CatalogEntry>& frames, const std::vector<const TheoremInfo*>& theorems,
                      Execution exec) {
  struct FrameOutcome {
    std::vector<TheoremVerdict> verdicts;
    nlohmann::json skipped;
  };
  const auto outcomes = map_indices<FrameOutcome>(
      static_cast<int>(frames.size()),
      [&](int i) {
        FrameOutcome out;
        try {
          const FrameContext ctx = FrameContext::build(frames[i].id, frames[i].lattice, Execution::serial);
          for (const TheoremInfo* t : theorems) out.verdicts.push_back(run_theorem(*t, ctx));
        } catch (const FinlocError& e) {
          out.skipped = {{"frame", frames[i].id}, {"reason", e.what()}};
        }
        return out;
      },
      exec);

  SuiteResult r;
  r.skipped = nlohmann::json::array();
  std::map<std::string, std::pair<int, int>> counts;
  for (const TheoremInfo* t : theorems) counts[t->id] = {0, 0};
  for (const auto& o : outcomes) {
    if (!o.skipped.is_null()) r.skipped.push_back(o.skipped);
    for (const auto& v : o.verdicts) {
      auto& [pass, fail] = counts[v.theorem_id];
      (v.passed ? pass : fail) += 1;
      r.verdicts.push_back(v);
    }
  }
  nlohmann::json per = nlohmann::json::object();
  int failed = 0;
  for (const auto& [id, pf] : counts) {
    per[id] = {{"failed", pf.second}, {"passed", pf.first}};
    failed += pf.second;
  }
  r.summary = {{"failed", failed},
               {"frames", static_cast<int>(frames.size()) - static_cast<int>(r.skipped.size())},
               {"skipped", r.skipped},
               {"theorems", per},
               {"verdicts", r.verdicts.size()}};
  return r;
}

}  // namespace finloc
