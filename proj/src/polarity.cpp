#include "finloc/polarity.hpp"

#include <algorithm>
#include <random>

#include "finloc/closure.hpp"
#include "finloc/error.hpp"

namespace finloc {

Polarity::Polarity(int nx, int ny, std::vector<ElementSet> rows)
    : nx_(nx), ny_(ny), rows_(std::move(rows)), cols_(ny) {
  if (nx > kMaxElements || ny > kMaxElements)
    throw FinlocError(ErrorKind::CarrierTooLarge,
                      "polarity carriers " + std::to_string(nx) + " x " + std::to_string(ny),
                      {{"nx", nx}, {"ny", ny}, {"cap", kMaxElements}});
  if (static_cast<int>(rows_.size()) != nx)
    throw FinlocError(ErrorKind::InvalidInput, "row count does not match |X|");
  for (int x = 0; x < nx; ++x)
    for (int y : rows_[x]) {
      if (y >= ny) throw FinlocError(ErrorKind::InvalidInput, "incidence refers to a missing attribute");
      cols_[y].insert(x);
    }
}

ElementSet Polarity::p(ElementSet m) const {
  ElementSet out = ElementSet::full(ny_);
  for (int x : m) out &= rows_[x];
  return out;
}

ElementSet Polarity::q(ElementSet n) const {
  ElementSet out = ElementSet::full(nx_);
  for (int y : n) out &= cols_[y];
  return out;
}

Polarity Polarity::transposed() const {
  Polarity t(ny_, nx_, cols_);
  t.x_names = y_names;
  t.y_names = x_names;
  return t;
}

int GaloisClosedFamily::index_of(ElementSet s) const {
  const auto it = std::lower_bound(closed.begin(), closed.end(), s);
  return it != closed.end() && *it == s ? static_cast<int>(it - closed.begin()) : -1;
}

OrderedSet GaloisClosedFamily::order() const { return OrderedSet::by_inclusion(closed); }

FiniteLattice GaloisClosedFamily::lattice() const {
  std::vector<std::string> names;
  for (int i = 0; i < size(); ++i) names.push_back("c" + std::to_string(i));
  return FiniteLattice::from_order(std::move(names), order());
}

ElementSet xe(const Polarity& p, int x) { return p.closure(ElementSet::single(x)); }
ElementSet ye(const Polarity& p, int y) { return p.q(ElementSet::single(y)); }

GaloisClosedFamily galois_closed(const Polarity& p) {
  GaloisClosedFamily gc;
  gc.closed = next_closure(p.nx(), [&](ElementSet m) { return p.closure(m); });
  for (int x = 0; x < p.nx(); ++x) gc.xe.push_back(gc.index_of(xe(p, x)));
  for (int y = 0; y < p.ny(); ++y) gc.ye.push_back(gc.index_of(ye(p, y)));
  return gc;
}

std::vector<ElementSet> galois_closed_brute(const Polarity& p, Execution exec) {
  if (p.nx() > kGcOracleCap)
    throw FinlocError(ErrorKind::CarrierTooLarge,
                      "brute-force oracle is limited to " + std::to_string(kGcOracleCap) + " objects",
                      {{"nx", p.nx()}, {"cap", kGcOracleCap}});
  const auto masks = filter_subsets(
      p.nx(), [&](std::uint64_t m) { return p.closure(ElementSet(m)) == ElementSet(m); }, exec);
  std::vector<ElementSet> out;
  for (auto m : masks) out.emplace_back(m);
  return out;
}

ElementSet gc_join(const Polarity& p, const std::vector<ElementSet>& family) {
  ElementSet u;
  for (ElementSet s : family) u |= s;
  return p.closure(u);
}

namespace {

nlohmann::json set_json(ElementSet s) { return s.to_vector(); }

}  // namespace

GcLawReport check_gc_laws(const Polarity& p, const GaloisClosedFamily& gc) {
  GcLawReport r;
  auto fail = [&](bool& flag, nlohmann::json w) {
    if (flag && r.witness.is_null()) r.witness = std::move(w);
    flag = false;
  };
  const int k = gc.size();
  const Polarity t = p.transposed();

  for (ElementSet m : gc.closed)
    for (int y = 0; y < p.ny(); ++y) {
      const ElementSet n = ElementSet::single(y);
      if (n.subset_of(p.p(m)) != m.subset_of(p.q(n)))
        fail(r.adjunction, {{"law", "adjunction"}, {"M", set_json(m)}, {"y", y}});
    }

  auto closure_ok = [](auto&& close, ElementSet a) {
    const ElementSet c = close(a);
    return a.subset_of(c) && close(c) == c;
  };
  auto qp = [&](ElementSet m) { return p.closure(m); };
  auto pq = [&](ElementSet n) { return p.p(p.q(n)); };
  for (int x = 0; x < p.nx(); ++x)
    if (!closure_ok(qp, ElementSet::single(x)))
      fail(r.closure_laws, {{"law", "qp-closure"}, {"x", x}});
  for (int y = 0; y < p.ny(); ++y)
    if (!closure_ok(pq, ElementSet::single(y)))
      fail(r.closure_laws, {{"law", "pq-closure"}, {"y", y}});
  for (int i = 0; i < k; ++i) {
    if (qp(gc.closed[i]) != gc.closed[i]) fail(r.closure_laws, {{"law", "not-closed"}, {"M", i}});
    for (int j = 0; j < k; ++j) {
      const ElementSet a = gc.closed[i] & gc.closed[j];
      const ElementSet b = gc.closed[i] | gc.closed[j];
      if (!qp(a).subset_of(qp(b)) || !pq(p.p(b)).subset_of(pq(p.p(a))))
        fail(r.closure_laws, {{"law", "monotone"}, {"M", i}, {"N", j}});
    }
  }

  for (int u = 0; u < k; ++u) {
    std::vector<ElementSet> below;
    ElementSet above = ElementSet::full(p.nx());
    for (int x = 0; x < p.nx(); ++x)
      if (gc.closed[gc.xe[x]].subset_of(gc.closed[u])) below.push_back(gc.closed[gc.xe[x]]);
    for (int y = 0; y < p.ny(); ++y)
      if (gc.closed[u].subset_of(gc.closed[gc.ye[y]])) above &= gc.closed[gc.ye[y]];
    if (gc_join(p, below) != gc.closed[u] || above != gc.closed[u])
      fail(r.item1, {{"law", "item1"}, {"u", set_json(gc.closed[u])}});
  }
  for (int x = 0; x < p.nx(); ++x)
    for (int y = 0; y < p.ny(); ++y)
      if (gc.closed[gc.xe[x]].subset_of(gc.closed[gc.ye[y]]) != p.related(x, y))
        fail(r.item2, {{"law", "item2"}, {"x", x}, {"y", y}});

  const GaloisClosedFamily dual = galois_closed(t);
  if (dual.size() != k) fail(r.dual_antiiso, {{"law", "dual-size"}, {"gc", k}, {"dual", dual.size()}});
  std::vector<int> image(k, -1);
  for (int i = 0; i < k; ++i) {
    image[i] = dual.index_of(p.p(gc.closed[i]));
    if (image[i] < 0) fail(r.dual_antiiso, {{"law", "dual-undefined"}, {"M", set_json(gc.closed[i])}});
  }
  for (int i = 0; i < k && r.dual_antiiso; ++i)
    for (int j = 0; j < k; ++j) {
      if (i != j && image[i] == image[j])
        fail(r.dual_antiiso, {{"law", "dual-injective"}, {"M", i}, {"N", j}});
      else if (gc.closed[i].subset_of(gc.closed[j]) !=
               dual.closed[image[j]].subset_of(dual.closed[image[i]]))
        fail(r.dual_antiiso, {{"law", "dual-antitone"}, {"M", i}, {"N", j}});
    }

  auto check_pair = [&](int i, int j) {
    const ElementSet u = gc.closed[i] | gc.closed[j];
    const ElementSet join = p.closure(u);
    ElementSet least = ElementSet::full(p.nx());
    for (ElementSet kset : gc.closed)
      if (u.subset_of(kset)) least &= kset;
    if (join != least) fail(r.join_formula, {{"law", "join"}, {"M", i}, {"N", j}});
  };
  if (k <= 128) {
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) check_pair(i, j);
  } else {
    for (int i = 0; i < k; ++i) check_pair(i, (i * 7 + 3) % k);
  }
  return r;
}

UniversalReport check_universal_properties(const Polarity& p, const OrderedSet& c,
                                           const std::vector<int>& xe_c,
                                           const std::vector<int>& ye_c, int count_cap) {
  UniversalReport r;
  const int m = c.size();
  auto defined = [&](int i) { return i >= 0 && i < m; };
  r.item1 = true;
  for (int u = 0; u < m && r.item1; ++u) {
    ElementSet below, above;
    for (int x = 0; x < p.nx(); ++x)
      if (defined(xe_c[x]) && c.leq(xe_c[x], u)) below.insert(xe_c[x]);
    for (int y = 0; y < p.ny(); ++y)
      if (defined(ye_c[y]) && c.leq(u, ye_c[y])) above.insert(ye_c[y]);
    const auto j = c.lub(below);
    const auto g = c.glb(above);
    if (!j || *j != u || !g || *g != u) {
      r.item1 = false;
      r.witness = {{"item", 1}, {"u", u}};
    }
  }
  for (int x = 0; x < p.nx(); ++x)
    if (!defined(xe_c[x]) && r.item1) {
      r.item1 = false;
      r.witness = {{"item", 1}, {"undefined_x", x}};
    }
  for (int y = 0; y < p.ny(); ++y)
    if (!defined(ye_c[y]) && r.item1) {
      r.item1 = false;
      r.witness = {{"item", 1}, {"undefined_y", y}};
    }
  if (!r.item1) return r;
  r.item2 = true;
  for (int x = 0; x < p.nx() && r.item2; ++x)
    for (int y = 0; y < p.ny(); ++y)
      if (c.leq(xe_c[x], ye_c[y]) != p.related(x, y)) {
        r.item2 = false;
        r.witness = {{"item", 2}, {"x", x}, {"y", y}};
        break;
      }
  if (!r.item2) return r;

  const GaloisClosedFamily gc = galois_closed(p);
  if (gc.size() > kMaxElements) {
    r.witness = {{"item", 3}, {"gc_size", gc.size()}};
    return r;
  }
  r.iota.assign(m, -1);
  for (int u = 0; u < m; ++u) {
    std::vector<ElementSet> parts;
    for (int x = 0; x < p.nx(); ++x)
      if (c.leq(xe_c[x], u)) parts.push_back(xe(p, x));
    r.iota[u] = gc.index_of(gc_join(p, parts));
  }
  const IsoProblem prob{"iota", c, gc.order(), r.iota};
  const auto w = verify_order_isomorphism(prob);
  r.iso = !w;
  if (w) {
    r.witness = {{"item", 3}, {"kind", to_string(w->kind)}, {"a", w->a}, {"b", w->b}};
    return r;
  }
  r.commutes = true;
  for (int x = 0; x < p.nx(); ++x)
    if (r.iota[xe_c[x]] != gc.xe[x]) r.commutes = false;
  for (int y = 0; y < p.ny(); ++y)
    if (r.iota[ye_c[y]] != gc.ye[y]) r.commutes = false;
  if (!r.commutes) r.witness = {{"item", 3}, {"kind", "not-commuting"}};

  if (m <= count_cap) {
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) names[i] = "u" + std::to_string(i);
    const FiniteLattice cl = FiniteLattice::from_order(std::move(names), c);
    int count = 0;
    for (const auto& iso : all_isomorphisms(cl, gc.lattice())) {
      bool ok = true;
      for (int x = 0; x < p.nx(); ++x) ok = ok && iso[xe_c[x]] == gc.xe[x];
      for (int y = 0; y < p.ny(); ++y) ok = ok && iso[ye_c[y]] == gc.ye[y];
      if (ok) ++count;
    }
    r.commuting_isos = count;
  }
  return r;
}

IsoProblem gc_dual_problem(const Polarity& p) {
  const GaloisClosedFamily gc = galois_closed(p);
  const GaloisClosedFamily dual = galois_closed(p.transposed());
  IsoProblem prob{"gc-dual", gc.order(), dual.order().dual(), std::vector<int>(gc.size())};
  for (int i = 0; i < gc.size(); ++i) prob.map[i] = dual.index_of(p.p(gc.closed[i]));
  return prob;
}

bool PosetLemmaReport::all_agree() const {
  return std::all_of(items.begin(), items.end(), [](const LemmaItem& i) { return i.agree(); });
}

namespace {

// Records a pointwise biconditional: the first disagreement wins.
struct Pointwise {
  bool lhs = true;
  bool rhs = true;
  bool seen = false;
  nlohmann::json where;
  void add(bool l, bool r, nlohmann::json w) {
    if (!seen && l != r) {
      lhs = l;
      rhs = r;
      seen = true;
      where = std::move(w);
    }
  }
};

}  // namespace

PosetLemmaReport poset_lemma_suite(const Polarity& p, const OrderedSet& xo, const OrderedSet& yo) {
  PosetLemmaReport rep;
  const int nx = p.nx();
  const int ny = p.ny();
  std::vector<ElementSet> xs(nx), ys(ny);
  for (int x = 0; x < nx; ++x) xs[x] = xe(p, x);
  for (int y = 0; y < ny; ++y) ys[y] = ye(p, y);

  auto x_cond = [&](int x, int x2) { return p.row(x2).subset_of(p.row(x)); };    // x'Zy => xZy
  auto y_cond = [&](int y, int y2) { return p.column(y).subset_of(p.column(y2)); };  // xZy => xZy'

  auto push = [&](std::string name, const Pointwise& pw) {
    rep.items.push_back({std::move(name), pw.lhs, pw.rhs});
    if (pw.seen && rep.witness.is_null()) rep.witness = {{"item", rep.items.back().name}, {"at", pw.where}};
  };
  auto push_bool = [&](std::string name, bool lhs, bool rhs, bool implication = false) {
    LemmaItem item{std::move(name), lhs, rhs};
    const bool ok = implication ? (!lhs || rhs) : lhs == rhs;
    if (!ok && rep.witness.is_null()) rep.witness = {{"item", item.name}};
    if (implication) item.rhs = !lhs || rhs, item.lhs = true;
    rep.items.push_back(std::move(item));
  };

  Pointwise order_x, order_y;
  for (int x = 0; x < nx; ++x)
    for (int x2 = 0; x2 < nx; ++x2)
      order_x.add(xs[x].subset_of(xs[x2]), x_cond(x, x2), {{"x", x}, {"x2", x2}});
  for (int y = 0; y < ny; ++y)
    for (int y2 = 0; y2 < ny; ++y2)
      order_y.add(ys[y].subset_of(ys[y2]), y_cond(y, y2), {{"y", y}, {"y2", y2}});

  bool xm_l = true, xm_r = true, xi_l = true, xi_r = true, xr_l = true, xr_r = true;
  for (int x = 0; x < nx; ++x)
    for (int x2 = 0; x2 < nx; ++x2) {
      if (xo.leq(x, x2)) {
        xm_l = xm_l && xs[x].subset_of(xs[x2]);
        xm_r = xm_r && x_cond(x, x2);
      }
      if (x != x2) {
        xi_l = xi_l && xs[x] != xs[x2];
        xi_r = xi_r && !(x_cond(x, x2) && x_cond(x2, x));
      }
      xr_l = xr_l && (!xs[x].subset_of(xs[x2]) || xo.leq(x, x2));
      xr_r = xr_r && (!x_cond(x, x2) || xo.leq(x, x2));
    }
  bool ym_l = true, ym_r = true, yi_l = true, yi_r = true, yr_l = true, yr_r = true;
  for (int y = 0; y < ny; ++y)
    for (int y2 = 0; y2 < ny; ++y2) {
      if (yo.leq(y, y2)) {
        ym_l = ym_l && ys[y].subset_of(ys[y2]);
        ym_r = ym_r && y_cond(y, y2);
      }
      if (y != y2) {
        yi_l = yi_l && ys[y] != ys[y2];
        yi_r = yi_r && !(y_cond(y, y2) && y_cond(y2, y));
      }
      yr_l = yr_l && (!ys[y].subset_of(ys[y2]) || yo.leq(y, y2));
      yr_r = yr_r && (!y_cond(y, y2) || yo.leq(y, y2));
    }
  push("xe-order", order_x);
  push_bool("xe-monotone", xm_l, xm_r);
  push_bool("xe-injective", xi_l, xi_r);
  push_bool("xe-reflecting", xr_l, xr_r);
  push("ye-order", order_y);
  push_bool("ye-monotone", ym_l, ym_r);
  push_bool("ye-injective", yi_l, yi_r);
  push_bool("ye-reflecting", yr_l, yr_r);

  // preservation lemmas, scanned over subsets
  if (nx <= kGcOracleCap) {
    Pointwise join_pres;
    bool meet_pres = true;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << nx); ++m) {
      const ElementSet a(m);
      if (const auto j = xo.lub(a)) {
        std::vector<ElementSet> parts;
        for (int x : a) parts.push_back(xs[x]);
        const bool lhs = xs[*j] == gc_join(p, parts);
        const bool rhs = p.p(a).subset_of(p.row(*j));
        join_pres.add(lhs, rhs, {{"A", a.to_vector()}});
      }
      if (const auto g = xo.glb(a)) {
        ElementSet meet = ElementSet::full(nx);
        for (int x : a) meet &= xs[x];
        meet_pres = meet_pres && xs[*g] == meet;
      }
    }
    push("xe-join-preservation", join_pres);
    push_bool("xe-meet-preservation", xm_l && xr_l, meet_pres, true);
  }
  if (ny <= kGcOracleCap) {
    Pointwise meet_pres;
    bool join_pres = true;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ny); ++m) {
      const ElementSet b(m);
      if (const auto g = yo.glb(b)) {
        ElementSet meet = ElementSet::full(nx);
        for (int y : b) meet &= ys[y];
        const bool lhs = ys[*g] == meet;
        const bool rhs = p.q(b).subset_of(p.column(*g));
        meet_pres.add(lhs, rhs, {{"B", b.to_vector()}});
      }
      if (const auto j = yo.lub(b)) {
        std::vector<ElementSet> parts;
        for (int y : b) parts.push_back(ys[y]);
        join_pres = join_pres && ys[*j] == gc_join(p, parts);
      }
    }
    push("ye-meet-preservation", meet_pres);
    push_bool("ye-join-preservation", ym_l && yr_l, join_pres, true);
  }

  // injective join-homomorphisms reflect order
  if (xo.is_partial_order()) {
    const GaloisClosedFamily gc = galois_closed(p);
    bool lattice_ok = gc.size() <= kMaxElements;
    std::optional<FiniteLattice> xl;
    if (lattice_ok) {
      try {
        std::vector<std::string> names(nx);
        for (int i = 0; i < nx; ++i) names[i] = "x" + std::to_string(i);
        xl = FiniteLattice::from_order(std::move(names), xo);
      } catch (const FinlocError&) {
        lattice_ok = false;
      }
    }
    if (lattice_ok && nx > 0) {
      std::vector<int> f(nx);
      for (int x = 0; x < nx; ++x) f[x] = gc.xe[x];
      const auto s = semilattice_map_report(*xl, gc.lattice(), f);
      push_bool("injective-semilattice-reflects", s.join_hom && s.injective, s.reflecting, true);
    }
  }
  return rep;
}

SemilatticeMapReport semilattice_map_report(const FiniteLattice& a, const FiniteLattice& b,
                                            const std::vector<int>& f) {
  SemilatticeMapReport r;
  r.join_hom = r.injective = r.reflecting = true;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      if (f[a.join(x, y)] != b.join(f[x], f[y])) r.join_hom = false;
      if (x != y && f[x] == f[y]) r.injective = false;
      if (b.leq(f[x], f[y]) && !a.leq(x, y)) r.reflecting = false;
    }
  return r;
}

int cl_in(const FiniteLattice& c, ElementSet s, int x) { return c.meet_of(s & c.up_set(x)); }
int int_in(const FiniteLattice& c, ElementSet s, int x) { return c.join_of(s & c.down_set(x)); }

ElementSet join_closure(const FiniteLattice& c, ElementSet s) {
  ElementSet out = s;
  out.insert(c.bottom());
  for (bool grew = true; grew;) {
    grew = false;
    for (int a : out)
      for (int b : out)
        if (!out.contains(c.join(a, b))) {
          out.insert(c.join(a, b));
          grew = true;
        }
  }
  return out;
}

ElementSet meet_closure(const FiniteLattice& c, ElementSet s) {
  ElementSet out = s;
  out.insert(c.top());
  for (bool grew = true; grew;) {
    grew = false;
    for (int a : out)
      for (int b : out)
        if (!out.contains(c.meet(a, b))) {
          out.insert(c.meet(a, b));
          grew = true;
        }
  }
  return out;
}

namespace {

int position(ElementSet s, int element) {
  return s.contains(element) ? s.below(element).size() : -1;
}

}  // namespace

ClIntReport cl_int_inside(const FiniteLattice& c, ElementSet xsub, ElementSet ysub) {
  ClIntReport r;
  const std::vector<int> xs = xsub.to_vector();
  const std::vector<int> ys = ysub.to_vector();
  const Polarity pol = Polarity::from_relation(static_cast<int>(xs.size()), static_cast<int>(ys.size()),
                                               [&](int i, int j) { return c.leq(xs[i], ys[j]); });
  r.gc = galois_closed(pol);
  const ElementSet my = meet_closure(c, ysub);
  const ElementSet jx = join_closure(c, xsub);
  for (int m : my) r.int_side.insert(int_in(c, xsub, m));
  for (int j : jx) r.cl_side.insert(cl_in(c, ysub, j));

  IsoProblem alpha{"alpha", r.gc.order(), c.order().restricted(r.int_side),
                   std::vector<int>(r.gc.size())};
  for (int i = 0; i < r.gc.size(); ++i)
    alpha.map[i] = position(r.int_side, c.join_of(gather(r.gc.closed[i], xs)));
  IsoProblem cl{"cl", c.order().restricted(r.int_side), c.order().restricted(r.cl_side),
                std::vector<int>(r.int_side.size())};
  IsoProblem in{"int", c.order().restricted(r.cl_side), c.order().restricted(r.int_side),
                std::vector<int>(r.cl_side.size())};
  r.inverse = true;
  int k = 0;
  for (int u : r.int_side) {
    const int v = cl_in(c, ysub, u);
    cl.map[k++] = position(r.cl_side, v);
    if (int_in(c, xsub, v) != u) r.inverse = false;
  }
  k = 0;
  for (int v : r.cl_side) {
    const int u = int_in(c, xsub, v);
    in.map[k++] = position(r.int_side, u);
    if (cl_in(c, ysub, u) != v) r.inverse = false;
  }
  r.problems = {alpha, cl, in};
  for (const auto& prob : r.problems)
    if (!r.failure) r.failure = verify_order_isomorphism(prob);
  return r;
}

Polarity random_polarity(int nx, int ny, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(std::clamp(density, 0.0, 1.0));
  std::vector<ElementSet> rows(nx);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if (coin(rng)) rows[x].insert(y);
  return Polarity(nx, ny, std::move(rows));
}

}  // namespace finloc
