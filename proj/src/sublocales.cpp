#include "finloc/sublocales.hpp"

#include <algorithm>
#include <stdexcept>

#include "finloc/closure.hpp"
#include "finloc/error.hpp"

namespace finloc {

bool satisfies_s1(const Frame& frame, ElementSet s, S1Mode mode) {
  if (mode == S1Mode::automatic) mode = s.size() <= kS1ExhaustiveCap ? S1Mode::exhaustive : S1Mode::binary;
  if (mode == S1Mode::binary) {
    if (!s.contains(frame.top())) return false;
    for (int a : s)
      for (int b : s)
        if (!s.contains(frame.meet(a, b))) return false;
    return true;
  }
  const std::vector<int> members = s.to_vector();
  const std::uint64_t count = std::uint64_t{1} << members.size();
  for (std::uint64_t m = 0; m < count; ++m)
    if (!s.contains(frame.meet_of(gather(ElementSet(m), members)))) return false;
  return true;
}

bool satisfies_s2(const Frame& frame, ElementSet s) {
  for (int a = 0; a < frame.size(); ++a)
    for (int t : s)
      if (!s.contains(frame.heyting(a, t))) return false;
  return true;
}

bool is_sublocale(const Frame& frame, ElementSet s) { return satisfies_s1(frame, s) && satisfies_s2(frame, s); }

std::vector<ElementSet> sublocales_brute(const Frame& frame, Execution exec) {
  if (frame.size() > kRawSublocaleOracleCap)
    throw FinlocError(ErrorKind::FrameTooLarge, "raw sublocale scan is limited to " +
                                                    std::to_string(kRawSublocaleOracleCap) + " elements",
                      {{"elements", frame.size()}, {"cap", kRawSublocaleOracleCap}});
  const auto masks =
      filter_subsets(frame.size(), [&](std::uint64_t m) { return is_sublocale(frame, ElementSet(m)); }, exec);
  std::vector<ElementSet> out;
  for (auto m : masks) out.emplace_back(m);
  return out;
}

std::string_view to_string(SublocaleClass c) {
  switch (c) {
    case SublocaleClass::open: return "open";
    case SublocaleClass::closed: return "closed";
    case SublocaleClass::fitted: return "fitted";
    case SublocaleClass::locally_closed: return "locally_closed";
    case SublocaleClass::smooth: return "smooth";
    case SublocaleClass::joins_of_closed: return "joins_of_closed";
    case SublocaleClass::compact: return "compact";
    case SublocaleClass::joins_of_compact: return "joins_of_compact";
    case SublocaleClass::one_point: return "one_point";
    case SublocaleClass::spatial: return "spatial";
  }
  return "unknown";
}

bool SublocaleTags::has(SublocaleClass c) const {
  switch (c) {
    case SublocaleClass::open: return open;
    case SublocaleClass::closed: return closed;
    case SublocaleClass::fitted: return fitted;
    case SublocaleClass::locally_closed: return locally_closed;
    case SublocaleClass::smooth: return smooth;
    case SublocaleClass::joins_of_closed: return joins_of_closed;
    case SublocaleClass::compact: return compact;
    case SublocaleClass::joins_of_compact: return joins_of_compact;
    case SublocaleClass::one_point: return one_point;
    case SublocaleClass::spatial: return spatial;
  }
  return false;
}

nlohmann::json SublocaleTags::to_json() const {
  return {{"closed", closed},     {"compact", compact},
          {"fitted", fitted},     {"joins_of_closed", joins_of_closed},
          {"joins_of_compact", joins_of_compact}, {"locally_closed", locally_closed},
          {"one_point", one_point}, {"open", open},
          {"smooth", smooth},     {"spatial", spatial}};
}

SublocaleLattice::SublocaleLattice(Frame frame, Execution exec) : frame_(std::move(frame)) {
  const int n = frame_.size();
  if (n > kSublocaleFrameCap)
    throw FinlocError(ErrorKind::FrameTooLarge,
                      "sublocale enumeration is limited to " + std::to_string(kSublocaleFrameCap) + " elements",
                      {{"elements", n}, {"cap", kSublocaleFrameCap}});
  // least sublocale containing s: grow under binary meets and arrows from {1}
  auto generated = [&](ElementSet s) {
    s.insert(frame_.top());
    for (ElementSet prev; prev != s;) {
      prev = s;
      for (int t : prev) {
        for (int u : prev) s.insert(frame_.meet(t, u));
        for (int a = 0; a < n; ++a) s.insert(frame_.heyting(a, t));
      }
    }
    return s;
  };
  subs_ = next_closure(n, generated);
  if (size() > kMaxElements)
    throw FinlocError(ErrorKind::CarrierTooLarge, "Sl(L) has more than 64 members",
                      {{"sublocales", size()}, {"cap", kMaxElements}});
  for (ElementSet s : subs_)
    if (!is_sublocale(frame_, s)) throw std::logic_error("sublocale closure produced a non-sublocale");

  std::vector<std::string> names;
  for (ElementSet s : subs_) {
    std::string name = "{";
    bool first = true;
    for (int i : s) {
      if (!first) name += ',';
      name += frame_.name(i);
      first = false;
    }
    names.push_back(name + "}");
  }
  lattice_ = FiniteLattice::from_order(std::move(names), OrderedSet::by_inclusion(subs_));

  std::vector<int> os_index(n);
  for (int a = 0; a < n; ++a) os_index[a] = index_of(os(a));
  const std::size_t families = std::size_t{1} << n;
  open_join_.assign(families, index_of(emp()));
  for (std::size_t m = 1; m < families; ++m)
    open_join_[m] = lattice_.join(open_join_[m & (m - 1)], os_index[std::countr_zero(m)]);
  directed_opens_.assign(families, 0);
  const auto directed = filter_subsets(
      n,
      [&](std::uint64_t mask) {
        const ElementSet fam(mask);
        if (fam.empty()) return false;
        for (int a : fam)
          for (int b : fam) {
            bool bounded = false;
            for (int c : fam) bounded = bounded || (os(a) | os(b)).subset_of(os(c));
            if (!bounded) return false;
          }
        return true;
      },
      exec);
  for (auto m : directed) directed_opens_[m] = 1;

  ElementSet opens, closeds, lcl, points, compact;
  for (int a = 0; a < n; ++a) {
    opens.insert(index_of(os(a)));
    closeds.insert(index_of(cs(a)));
    for (int b = 0; b < n; ++b) lcl.insert(index_of(cs(a) & os(b)));
  }
  for (int p : frame_.primes()) points.insert(index_of(one_point(p)));
  const auto compact_flags =
      map_indices<int>(size(), [&](int i) { return compact_by_covers(subs_[i]) ? 1 : 0; }, exec);
  for (int i = 0; i < size(); ++i)
    if (compact_flags[i]) compact.insert(i);
  const ElementSet fitted = meet_closure(opens);
  const ElementSet smooth = join_closure(lcl);
  const ElementSet sc = join_closure(closeds);
  const ElementSet sk = join_closure(compact);
  const ElementSet spatial = join_closure(points);
  tags_.resize(size());
  for (int i = 0; i < size(); ++i) {
    SublocaleTags& t = tags_[i];
    t.open = opens.contains(i);
    t.closed = closeds.contains(i);
    t.fitted = fitted.contains(i);
    t.locally_closed = lcl.contains(i);
    t.smooth = smooth.contains(i);
    t.joins_of_closed = sc.contains(i);
    t.compact = compact.contains(i);
    t.joins_of_compact = sk.contains(i);
    t.one_point = points.contains(i);
    t.spatial = spatial.contains(i);
  }
}

int SublocaleLattice::index_of(ElementSet s) const {
  const auto it = std::lower_bound(subs_.begin(), subs_.end(), s);
  return it != subs_.end() && *it == s ? static_cast<int>(it - subs_.begin()) : -1;
}

ElementSet SublocaleLattice::join(ElementSet s, ElementSet t) const {
  ElementSet out = s | t;
  out.insert(frame_.top());
  for (ElementSet prev; prev != out;) {
    prev = out;
    for (int a : prev)
      for (int b : prev) out.insert(frame_.meet(a, b));
  }
  return out;
}

ElementSet SublocaleLattice::join_of(const std::vector<ElementSet>& family) const {
  ElementSet out = emp();
  for (ElementSet s : family) out = join(out, s);
  return out;
}

ElementSet SublocaleLattice::fit(ElementSet s) const {
  ElementSet out = fll();
  for (int a = 0; a < frame_.size(); ++a)
    if (s.subset_of(os(a))) out &= os(a);
  return out;
}

ElementSet SublocaleLattice::closure(ElementSet s) const {
  ElementSet out = fll();
  for (int a = 0; a < frame_.size(); ++a)
    if (s.subset_of(cs(a))) out &= cs(a);
  return out;
}

ElementSet SublocaleLattice::one_point(int p) const {
  if (p < 0 || p >= frame_.size() || !frame_.primes().contains(p))
    throw FinlocError(ErrorKind::NotPrime, "element is not prime",
                      {{"element", p >= 0 && p < frame_.size() ? nlohmann::json(frame_.name(p)) : nlohmann::json(p)}});
  ElementSet out = ElementSet::single(p);
  out.insert(frame_.top());
  return out;
}

ElementSet SublocaleLattice::sp(ElementSet s) const {
  ElementSet out = emp();
  for (int p : frame_.primes())
    if (one_point(p).subset_of(s)) out = join(out, one_point(p));
  return out;
}

ElementSet SublocaleLattice::supplement(ElementSet s) const {
  ElementSet out = fll();
  for (ElementSet t : subs_)
    if (join(s, t) == fll()) out &= t;
  return out;
}

ElementSet SublocaleLattice::fitted_join(const std::vector<ElementSet>& family) const {
  return fit(join_of(family));
}

SublocaleTags SublocaleLattice::classify(ElementSet s) const {
  const int i = index_of(s);
  return i < 0 ? SublocaleTags{} : tags_[i];
}

ElementSet SublocaleLattice::family(SublocaleClass c) const {
  ElementSet out;
  for (int i = 0; i < size(); ++i)
    if (tags_[i].has(c)) out.insert(i);
  return out;
}

ElementSet SublocaleLattice::join_closure(ElementSet fam) const {
  ElementSet out = fam;
  out.insert(lattice_.bottom());
  for (ElementSet prev; prev != out;) {
    prev = out;
    for (int i : prev)
      for (int j : prev) out.insert(lattice_.join(i, j));
  }
  return out;
}

ElementSet SublocaleLattice::meet_closure(ElementSet fam) const {
  ElementSet out = fam;
  out.insert(lattice_.top());
  for (ElementSet prev; prev != out;) {
    prev = out;
    for (int i : prev)
      for (int j : prev) out.insert(lattice_.meet(i, j));
  }
  return out;
}

ElementSet SublocaleLattice::fit_image(ElementSet fam) const {
  ElementSet out;
  for (int i : fam) out.insert(index_of(fit(subs_[i])));
  return out;
}

bool SublocaleLattice::compact_by_covers(ElementSet s) const {
  // every directed cover by opens has a member that already covers S
  const std::size_t families = open_join_.size();
  for (std::size_t m = 1; m < families; ++m) {
    if (!directed_opens_[m] || !s.subset_of(subs_[open_join_[m]])) continue;
    bool covered = false;
    for (int a : ElementSet(m)) covered = covered || s.subset_of(os(a));
    if (!covered) return false;
  }
  return true;
}

ElementSet stf(const Frame& frame, ElementSet s) {
  ElementSet out;
  for (int a = 0; a < frame.size(); ++a)
    if (s.subset_of(open_members(frame, a))) out.insert(a);
  return out;
}

ElementSet fts(const Frame& frame, ElementSet f) {
  ElementSet out = frame.all();
  for (int a : f) out &= open_members(frame, a);
  return out;
}

void LawReport::fail(const std::string& law, nlohmann::json w) {
  if (std::find(failed.begin(), failed.end(), law) == failed.end()) failed.push_back(law);
  if (witness.is_null()) witness = {{"law", law}, {"at", std::move(w)}};
}

LawReport open_closed_laws(const SublocaleLattice& sl) {
  LawReport r;
  const Frame& f = sl.frame();
  const int n = f.size();
  for (int a = 0; a < n; ++a) {
    if (!is_sublocale(f, sl.os(a))) r.fail("os-is-sublocale", {{"a", a}});
    if (!is_sublocale(f, sl.cs(a))) r.fail("cs-is-sublocale", {{"a", a}});
    ElementSet fixed;
    for (int x = 0; x < n; ++x)
      if (f.heyting(a, x) == x) fixed.insert(x);
    if (fixed != sl.os(a)) r.fail("os-fixpoints", {{"a", a}});
    if ((sl.cs(a) & sl.os(a)) != sl.emp()) r.fail("cs-meet-os", {{"a", a}});
    if (sl.join(sl.cs(a), sl.os(a)) != sl.fll()) r.fail("cs-join-os", {{"a", a}});
    for (int b = 0; b < n; ++b) {
      if ((sl.os(a) & sl.os(b)) != sl.os(f.meet(a, b))) r.fail("os-meet", {{"a", a}, {"b", b}});
      if (sl.join(sl.cs(a), sl.cs(b)) != sl.cs(f.meet(a, b))) r.fail("cs-join", {{"a", a}, {"b", b}});
    }
  }
  if (sl.os(f.top()) != sl.fll() || sl.os(f.bottom()) != sl.emp() || sl.cs(f.top()) != sl.emp() ||
      sl.cs(f.bottom()) != sl.fll())
    r.fail("extremes", nullptr);

  // families: joins of opens and intersections of closeds
  const std::size_t families = std::size_t{1} << n;
  std::vector<ElementSet> open_join(families, sl.emp());
  std::vector<ElementSet> closed_meet(families, sl.fll());
  std::vector<int> element_join(families, f.bottom());
  for (std::size_t m = 1; m < families; ++m) {
    const std::size_t rest = m & (m - 1);
    const int low = std::countr_zero(m);
    open_join[m] = sl.join(open_join[rest], sl.os(low));
    closed_meet[m] = closed_meet[rest] & sl.cs(low);
    element_join[m] = f.join(element_join[rest], low);
  }
  for (std::size_t m = 0; m < families; ++m) {
    if (open_join[m] != sl.os(element_join[m]))
      r.fail("os-joins", {{"family", ElementSet(m).to_vector()}});
    if (closed_meet[m] != sl.cs(element_join[m]))
      r.fail("cs-meets", {{"family", ElementSet(m).to_vector()}});
  }

  const FiniteLattice& l = sl.lattice();
  for (int i = 0; i < sl.size(); ++i)
    for (int j = 0; j < sl.size(); ++j)
      if (sl.index_of(sl.join(sl.member(i), sl.member(j))) != l.join(i, j))
        r.fail("join-formula", {{"s", i}, {"t", j}});
  if (is_frame(l.dual()).witness) r.fail("coframe", nullptr);
  return r;
}

LawReport operator_laws(const SublocaleLattice& sl, const FilterLattice& fl) {
  LawReport r;
  const Frame& f = sl.frame();
  const int n = f.size();
  const int k = sl.size();

  auto closure_laws = [&](const std::string& name, auto&& op, bool interior) {
    for (int i = 0; i < k; ++i) {
      const ElementSet s = sl.member(i);
      const ElementSet c = op(s);
      if (sl.index_of(c) < 0) r.fail(name + "-not-sublocale", {{"s", i}});
      if (interior ? !c.subset_of(s) : !s.subset_of(c)) r.fail(name + "-extensive", {{"s", i}});
      if (op(c) != c) r.fail(name + "-idempotent", {{"s", i}});
      for (int j = 0; j < k; ++j)
        if (s.subset_of(sl.member(j)) && !c.subset_of(op(sl.member(j))))
          r.fail(name + "-monotone", {{"s", i}, {"t", j}});
    }
  };
  closure_laws("fit", [&](ElementSet s) { return sl.fit(s); }, false);
  closure_laws("cl", [&](ElementSet s) { return sl.closure(s); }, false);
  closure_laws("sp", [&](ElementSet s) { return sl.sp(s); }, true);

  ElementSet fit_fixed, sp_fixed;
  for (int i = 0; i < k; ++i) {
    const ElementSet s = sl.member(i);
    if (sl.closure(s) != f.up_set(f.meet_of(s))) r.fail("cl-up-meet", {{"s", i}});
    if (sl.fit(s) == s) fit_fixed.insert(i);
    if (sl.sp(s) == s) sp_fixed.insert(i);
    for (int j = 0; j < k; ++j)
      if (sl.sp(sl.join(s, sl.member(j))) != sl.join(sl.sp(s), sl.sp(sl.member(j))))
        r.fail("sp-joins", {{"s", i}, {"t", j}});
  }
  if (sl.sp(sl.emp()) != sl.emp()) r.fail("sp-empty", nullptr);
  if (fit_fixed != sl.family(SublocaleClass::fitted)) r.fail("fit-fixpoints", nullptr);
  if (sp_fixed != sl.family(SublocaleClass::spatial)) r.fail("sp-fixpoints", nullptr);

  // stf -| fts
  for (int i = 0; i < k; ++i) {
    const ElementSet s = sl.member(i);
    const ElementSet st = stf(f, s);
    if (!is_filter(f, st)) r.fail("stf-filter", {{"s", i}});
    if (sl.fit(s) == s && fts(f, st) != s) r.fail("fts-stf-fitted", {{"s", i}});
    for (int j = 0; j < fl.size(); ++j) {
      const ElementSet g = fl.filter(j);
      if (g.subset_of(st) != s.subset_of(fts(f, g))) r.fail("stf-fts-adjunction", {{"s", i}, {"filter", j}});
    }
  }
  for (int j = 0; j < fl.size(); ++j)
    if (sl.index_of(fts(f, fl.filter(j))) < 0) r.fail("fts-sublocale", {{"filter", j}});
  for (int a = 0; a < n; ++a) {
    if (stf(f, sl.cs(a)) != fl.closed_filter(a)) r.fail("stf-cs", {{"a", a}});
    if (stf(f, sl.os(a)) != f.up_set(a)) r.fail("stf-os", {{"a", a}});
    if (fts(f, f.up_set(a)) != sl.os(a)) r.fail("fts-principal", {{"a", a}});
    for (int y = 0; y < n; ++y) {
      const ElementSet lc = stf(f, sl.cs(a) & sl.os(y));
      if (lc != fl.difference(f.up_set(y), f.up_set(a)) || lc != fl.locally_closed_filter(y, a))
        r.fail("stf-lcl", {{"x", a}, {"y", y}});
    }
  }

  // one-point sublocales
  for (int p = 0; p < n; ++p) {
    ElementSet pair = ElementSet::single(p);
    pair.insert(f.top());
    const bool prime = f.primes().contains(p);
    if (p != f.top() && prime != is_sublocale(f, pair)) r.fail("prime-iff-two-point", {{"p", p}});
    if (!prime) continue;
    for (int a = 0; a < n; ++a)
      if (sl.one_point(p).subset_of(sl.os(a)) != !f.leq(a, p)) r.fail("point-in-open", {{"p", p}, {"a", a}});
  }
  return r;
}

}  // namespace finloc
