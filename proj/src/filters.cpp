#include "finloc/filters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "finloc/closure.hpp"
#include "finloc/error.hpp"

namespace finloc {

bool is_filter(const Frame& frame, ElementSet s) {
  if (s.empty()) return false;
  for (int a : s) {
    if (!frame.up_set(a).subset_of(s)) return false;
    for (int b : s)
      if (!s.contains(frame.meet(a, b))) return false;
  }
  return true;
}

SubsetTables subset_tables(const Frame& frame, Execution exec) {
  const int n = frame.size();
  if (n > kFilterFrameCap)
    throw FinlocError(ErrorKind::FrameTooLarge,
                      "filter analyses are limited to " + std::to_string(kFilterFrameCap) + " elements",
                      {{"elements", n}, {"cap", kFilterFrameCap}});
  const std::size_t count = std::size_t{1} << n;
  SubsetTables t;
  t.meet.assign(count, static_cast<std::uint8_t>(frame.top()));
  t.join.assign(count, static_cast<std::uint8_t>(frame.bottom()));
  t.exact.assign(count, 1);
  t.strongly_exact.assign(count, 1);
  t.directed.assign(count, 0);

  std::vector<ElementSet> os(n);
  for (int a = 0; a < n; ++a) os[a] = open_members(frame, a);
  // meets of a \/ b over M, per b; and the intersection of os(a) over M
  std::vector<std::uint8_t> distributed(count * n, static_cast<std::uint8_t>(frame.top()));
  std::vector<ElementSet> os_meet(count, frame.all());
  for (std::size_t m = 1; m < count; ++m) {
    const int low = std::countr_zero(m);
    const std::size_t rest = m & (m - 1);
    t.meet[m] = static_cast<std::uint8_t>(frame.meet(t.meet[rest], low));
    t.join[m] = static_cast<std::uint8_t>(frame.join(t.join[rest], low));
    os_meet[m] = os_meet[rest] & os[low];
    bool exact = true;
    for (int b = 0; b < n; ++b) {
      const int d = frame.meet(distributed[rest * n + b], frame.join(low, b));
      distributed[m * n + b] = static_cast<std::uint8_t>(d);
      if (frame.join(t.meet[m], b) != d) exact = false;
    }
    t.exact[m] = exact;
    t.strongly_exact[m] = os_meet[m] == os[t.meet[m]];
  }

  const auto directed = filter_subsets(
      n,
      [&](std::uint64_t mask) {
        const ElementSet s(mask);
        if (s.empty()) return false;
        for (int a : s)
          for (int b : s)
            if ((s & frame.up_set(a) & frame.up_set(b)).empty()) return false;
        return true;
      },
      exec);
  for (auto m : directed) t.directed[m] = 1;
  return t;
}

namespace {

// Calls visit(sub) for every submask of `of`, including the empty one;
// stops when visit returns false.
template <class Visit>
bool all_submasks(ElementSet of, Visit&& visit) {
  const std::uint64_t full = of.bits();
  std::uint64_t sub = full;
  while (true) {
    if (!visit(sub)) return false;
    if (sub == 0) return true;
    sub = (sub - 1) & full;
  }
}

}  // namespace

bool is_completely_prime(const Frame& frame, const SubsetTables& t, ElementSet f) {
  return all_submasks(frame.all() - f, [&](std::uint64_t a) { return !f.contains(t.join[a]); });
}

bool is_scott_open(const Frame& frame, const SubsetTables& t, ElementSet f) {
  const std::uint64_t count = std::uint64_t{1} << frame.size();
  for (std::uint64_t m = 1; m < count; ++m)
    if (t.directed[m] && f.contains(t.join[m]) && !ElementSet(m).intersects(f)) return false;
  return true;
}

bool is_exact(const Frame& frame, const SubsetTables& t, ElementSet f, ExactMode mode) {
  if (mode == ExactMode::automatic) mode = f.size() <= kExactScanCap ? ExactMode::scan : ExactMode::shortcut;
  // every meet of members is above /\F, so containing /\F settles all of them
  if (mode == ExactMode::shortcut) return f.contains(frame.meet_of(f));
  return all_submasks(f, [&](std::uint64_t m) { return !t.exact[m] || f.contains(t.meet[m]); });
}

bool is_strongly_exact(const Frame&, const SubsetTables& t, ElementSet f) {
  return all_submasks(f, [&](std::uint64_t m) { return !t.strongly_exact[m] || f.contains(t.meet[m]); });
}

bool is_strongly_exact_by_lemma(const Frame& frame, ElementSet f) {
  ElementSet meet = frame.all();
  for (int a : f) meet &= open_members(frame, a);
  for (int b = 0; b < frame.size(); ++b)
    if (meet.subset_of(open_members(frame, b)) && !f.contains(b)) return false;
  return true;
}

ElementSet exact_formula(const Frame& frame, ElementSet f) {
  const int n = frame.size();
  ElementSet out;
  for (int a = 0; a < n; ++a) {
    bool member = true;
    for (int x = 0; x < n && member; ++x)
      for (int y = 0; y < n && member; ++y) {
        bool premise = true;
        for (int g : f) premise = premise && frame.leq(y, frame.join(g, x));
        if (premise && !frame.leq(y, frame.join(a, x))) member = false;
      }
    if (member) out.insert(a);
  }
  return out;
}

std::string_view to_string(FilterClass c) {
  switch (c) {
    case FilterClass::all: return "all";
    case FilterClass::principal: return "principal";
    case FilterClass::closed: return "cl";
    case FilterClass::locally_closed: return "lcl";
    case FilterClass::regular: return "r";
    case FilterClass::completely_prime: return "cp";
    case FilterClass::scott_open: return "so";
    case FilterClass::exact: return "ex";
    case FilterClass::strongly_exact: return "se";
  }
  return "unknown";
}

std::optional<FilterClass> parse_filter_class(std::string_view name) {
  for (auto c : {FilterClass::all, FilterClass::principal, FilterClass::closed, FilterClass::locally_closed,
                 FilterClass::regular, FilterClass::completely_prime, FilterClass::scott_open,
                 FilterClass::exact, FilterClass::strongly_exact})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

bool FilterTags::has(FilterClass c) const {
  switch (c) {
    case FilterClass::all: return true;
    case FilterClass::principal: return principal;
    case FilterClass::closed: return closed;
    case FilterClass::locally_closed: return locally_closed;
    case FilterClass::regular: return regular;
    case FilterClass::completely_prime: return completely_prime;
    case FilterClass::scott_open: return scott_open;
    case FilterClass::exact: return exact;
    case FilterClass::strongly_exact: return strongly_exact;
  }
  return false;
}

nlohmann::json FilterTags::to_json() const {
  return {{"closed", closed},
          {"completely_prime", completely_prime},
          {"exact", exact},
          {"locally_closed", locally_closed},
          {"principal", principal},
          {"regular", regular},
          {"scott_open", scott_open},
          {"strongly_exact", strongly_exact}};
}

FilterLattice::FilterLattice(Frame frame, Execution exec)
    : frame_(std::move(frame)), tables_(subset_tables(frame_, exec)) {
  const int n = frame_.size();
  // smallest filter containing s: add 1, then close under meets and up-sets
  auto generated = [&](ElementSet s) {
    s.insert(frame_.top());
    for (ElementSet prev; prev != s;) {
      prev = s;
      for (int a : prev) {
        s |= frame_.up_set(a);
        for (int b : prev) s.insert(frame_.meet(a, b));
      }
    }
    return s;
  };
  filters_ = next_closure(n, generated);
  for (ElementSet f : filters_) {
    if (!is_filter(frame_, f)) throw std::logic_error("filter closure produced a non-filter");
    const int g = frame_.meet_of(f);
    if (frame_.up_set(g) != f) throw std::logic_error("non-principal filter on a finite frame");
  }
  std::sort(filters_.begin(), filters_.end(),
            [&](ElementSet a, ElementSet b) { return frame_.meet_of(a) < frame_.meet_of(b); });
  for (ElementSet f : filters_) generators_.push_back(frame_.meet_of(f));

  std::vector<std::string> names;
  for (int g : generators_) names.push_back("↑" + frame_.name(g));
  lattice_ = FiniteLattice::from_order(
      std::move(names),
      OrderedSet::from_predicate(size(), [&](int i, int j) { return filters_[j].subset_of(filters_[i]); }));
  tags_ = map_indices<FilterTags>(size(), [&](int i) { return classify(filters_[i]); }, exec);
}

int FilterLattice::index_of(ElementSet members) const {
  for (int i = 0; i < size(); ++i)
    if (filters_[i] == members) return i;
  return -1;
}

ElementSet FilterLattice::meet(ElementSet f, ElementSet g) const {
  ElementSet out;
  for (int a : f)
    for (int b : g) out |= frame_.up_set(frame_.meet(a, b));
  return out;
}

ElementSet FilterLattice::difference(ElementSet h, ElementSet g) const {
  ElementSet out;
  for (int a = 0; a < frame_.size(); ++a) {
    bool member = true;
    for (int b : g) member = member && h.contains(frame_.join(b, a));
    if (member) out.insert(a);
  }
  return out;
}

ElementSet FilterLattice::closed_filter(int a) const {
  ElementSet out;
  for (int x = 0; x < frame_.size(); ++x)
    if (frame_.join(x, a) == frame_.top()) out.insert(x);
  return out;
}

ElementSet FilterLattice::locally_closed_filter(int y, int x) const {
  ElementSet out;
  for (int a = 0; a < frame_.size(); ++a)
    if (frame_.leq(y, frame_.join(a, x))) out.insert(a);
  return out;
}

FilterTags FilterLattice::classify(ElementSet f) const {
  const int n = frame_.size();
  FilterTags t;
  t.completely_prime = is_completely_prime(frame_, tables_, f);
  t.scott_open = is_scott_open(frame_, tables_, f);
  t.exact = is_exact(frame_, tables_, f);
  t.strongly_exact = is_strongly_exact(frame_, tables_, f);
  for (int a = 0; a < n; ++a) {
    t.principal = t.principal || frame_.up_set(a) == f;
    t.closed = t.closed || closed_filter(a) == f;
    for (int x = 0; x < n; ++x) t.locally_closed = t.locally_closed || locally_closed_filter(a, x) == f;
  }
  for (ElementSet g : filters_) t.regular = t.regular || supplement(g) == f;
  return t;
}

ElementSet FilterLattice::family(FilterClass c) const {
  ElementSet out;
  for (int i = 0; i < size(); ++i)
    if (tags_[i].has(c)) out.insert(i);
  return out;
}

ElementSet FilterLattice::int_closure(ElementSet fam) const {
  ElementSet out = fam;
  out.insert(emp());
  for (ElementSet prev; prev != out;) {
    prev = out;
    for (int i : prev)
      for (int j : prev) out.insert(index_of(filters_[i] & filters_[j]));
  }
  return out;
}

RegularReport regular_filters(const FilterLattice& fl) {
  RegularReport r;
  for (int i = 0; i < fl.size(); ++i) r.supplements.insert(fl.index_of(fl.supplement(fl.filter(i))));
  r.int_closed = fl.int_closure(fl.family(FilterClass::closed));
  return r;
}

SclReport scl_condition(const FilterLattice& fl, ElementSet fam) {
  SclReport r;
  const Frame& frame = fl.frame();
  const ElementSet closure = fl.int_closure(fam);
  for (int i : fam)
    for (int a = 0; a < frame.size(); ++a) {
      ElementSet shifted;
      for (int x = 0; x < frame.size(); ++x)
        if (fl.filter(i).contains(frame.join(x, a))) shifted.insert(x);
      const int k = fl.index_of(shifted);
      if (shifted != fl.difference(fl.filter(i), frame.up_set(a)))
        throw std::logic_error("set formula for F minus an up-set disagrees with the difference");
      if (k < 0 || !fam.contains(k)) {
        if (r.literal) r.witness = {{"filter", i}, {"a", a}, {"result", k}};
        r.literal = false;
      }
      if (k < 0 || !closure.contains(k)) r.relaxed = false;
    }
  const auto w = subcolocale_failure(fl.lattice(), closure);
  if (!w.is_null()) {
    r.subcolocale = false;
    r.witness = w;
  }
  return r;
}

bool SubfitnessReport::agree() const {
  const bool s = first_order;
  return principal_regular == s && ex_equals_r == s && open_from_closed == s && closed_supplement == s &&
         boolean_direct == boolean_filters && open_closed_lemma;
}

nlohmann::json SubfitnessReport::to_json() const {
  return {{"boolean_direct", boolean_direct},
          {"boolean_filters", boolean_filters},
          {"closed_supplement", closed_supplement},
          {"ex_equals_r", ex_equals_r},
          {"first_order", first_order},
          {"open_closed_lemma", open_closed_lemma},
          {"open_from_closed", open_from_closed},
          {"principal_regular", principal_regular},
          {"witness", witness}};
}

SubfitnessReport subfitness_suite(const FilterLattice& fl) {
  const Frame& frame = fl.frame();
  const int n = frame.size();
  const ElementSet one = fl.filter(fl.top());
  SubfitnessReport r;

  r.first_order = true;
  for (int a = 0; a < n && r.first_order; ++a)
    for (int b = 0; b < n; ++b) {
      bool premise = true;
      for (int c = 0; c < n; ++c)
        if (frame.join(a, c) == frame.top() && frame.join(b, c) != frame.top()) premise = false;
      if (premise && !frame.leq(a, b)) {
        r.first_order = false;
        r.witness = {{"a", frame.name(a)}, {"b", frame.name(b)}};
        break;
      }
    }

  r.principal_regular = true;
  for (int a = 0; a < n; ++a) r.principal_regular = r.principal_regular && fl.tags(fl.principal(a)).regular;
  r.ex_equals_r = fl.family(FilterClass::exact) == fl.family(FilterClass::regular);

  r.open_from_closed = r.closed_supplement = r.boolean_filters = r.open_closed_lemma = true;
  for (int a = 0; a < n; ++a) {
    const ElementSet of = fl.open_filter(a);
    const ElementSet cf = fl.closed_filter(a);
    ElementSet join = frame.all();
    for (int x = 0; x < n; ++x) {
      const ElementSet c = fl.closed_filter(x);
      if (fl.lattice().leq(fl.index_of(c), fl.index_of(of))) join &= c;
    }
    r.open_from_closed = r.open_from_closed && join == of;
    r.closed_supplement = r.closed_supplement && fl.supplement(cf) == of;
    r.boolean_filters = r.boolean_filters && fl.meet(of, cf) == frame.all();
    r.open_closed_lemma = r.open_closed_lemma && fl.supplement(of) == cf && fl.join(of, cf) == one;
  }
  r.boolean_direct = frame.is_boolean();
  return r;
}

bool family_is_boolean(const FilterLattice& fl, ElementSet fam) {
  if (fam.empty()) return false;
  std::vector<std::string> names;
  for (int i : fam) names.push_back(fl.lattice().name(i));
  try {
    const FiniteLattice sub = FiniteLattice::from_order(std::move(names), fl.lattice().order().restricted(fam));
    if (!sub.is_distributive()) return false;
    for (int x = 0; x < sub.size(); ++x) {
      bool complemented = false;
      for (int y = 0; y < sub.size() && !complemented; ++y)
        complemented = sub.meet(x, y) == sub.bottom() && sub.join(x, y) == sub.top();
      if (!complemented) return false;
    }
    return true;
  } catch (const FinlocError&) {
    return false;
  }
}

}  // namespace finloc
