#include "finloc/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace finloc {

std::string_view to_string(IsoWitness::Kind kind) {
  switch (kind) {
    case IsoWitness::Kind::Undefined: return "undefined";
    case IsoWitness::Kind::NotInjective: return "not-injective";
    case IsoWitness::Kind::NotSurjective: return "not-surjective";
    case IsoWitness::Kind::NotMonotone: return "not-monotone";
    case IsoWitness::Kind::NotReflecting: return "not-reflecting";
  }
  return "unknown";
}

std::string_view to_string(Mutation::Kind kind) {
  switch (kind) {
    case Mutation::Kind::DeleteTarget: return "delete-target";
    case Mutation::Kind::FlipTargetOrder: return "flip-target-order";
    case Mutation::Kind::PerturbMap: return "perturb-map";
  }
  return "unknown";
}

bool iso_defined(const IsoProblem& p, int a) {
  return p.map[a] >= 0 && p.map[a] < p.target.size();
}

bool iso_injective(const IsoProblem& p, int a, int b) {
  return a == b || !iso_defined(p, a) || !iso_defined(p, b) || p.map[a] != p.map[b];
}

bool iso_surjective(const IsoProblem& p, int t) {
  return std::find(p.map.begin(), p.map.end(), t) != p.map.end();
}

bool iso_monotone(const IsoProblem& p, int a, int b) {
  if (!iso_defined(p, a) || !iso_defined(p, b)) return true;
  return !p.source.leq(a, b) || p.target.leq(p.map[a], p.map[b]);
}

bool iso_reflecting(const IsoProblem& p, int a, int b) {
  if (!iso_defined(p, a) || !iso_defined(p, b)) return true;
  return !p.target.leq(p.map[a], p.map[b]) || p.source.leq(a, b);
}

std::optional<IsoWitness> verify_order_isomorphism(const IsoProblem& p) {
  using K = IsoWitness::Kind;
  const int n = p.source.size();
  if (static_cast<int>(p.map.size()) != n) return IsoWitness{K::Undefined, n, -1};
  for (int a = 0; a < n; ++a)
    if (!iso_defined(p, a)) return IsoWitness{K::Undefined, a, -1};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!iso_injective(p, a, b)) return IsoWitness{K::NotInjective, a, b};
  for (int t = 0; t < p.target.size(); ++t)
    if (!iso_surjective(p, t)) return IsoWitness{K::NotSurjective, t, -1};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!iso_monotone(p, a, b)) return IsoWitness{K::NotMonotone, a, b};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!iso_reflecting(p, a, b)) return IsoWitness{K::NotReflecting, a, b};
  return std::nullopt;
}

bool witness_reproduces(const IsoProblem& p, const IsoWitness& w) {
  using K = IsoWitness::Kind;
  const int n = p.source.size();
  auto in_source = [&](int i) { return i >= 0 && i < n; };
  switch (w.kind) {
    case K::Undefined:
      return static_cast<int>(p.map.size()) != n || (in_source(w.a) && !iso_defined(p, w.a));
    case K::NotInjective:
      return in_source(w.a) && in_source(w.b) && !iso_injective(p, w.a, w.b);
    case K::NotSurjective:
      return w.a >= 0 && w.a < p.target.size() && !iso_surjective(p, w.a);
    case K::NotMonotone:
      return in_source(w.a) && in_source(w.b) && !iso_monotone(p, w.a, w.b);
    case K::NotReflecting:
      return in_source(w.a) && in_source(w.b) && !iso_reflecting(p, w.a, w.b);
  }
  return false;
}

IsoProblem apply_mutation(const IsoProblem& p, const Mutation& m) {
  IsoProblem out = p;
  out.label = p.label + "[" + std::string(to_string(m.kind)) + "]";
  switch (m.kind) {
    case Mutation::Kind::DeleteTarget: {
      const ElementSet keep = p.target.all() - ElementSet::single(m.i);
      out.target = p.target.restricted(keep);
      for (int& t : out.map) {
        if (t == m.i)
          t = -1;
        else if (t > m.i)
          --t;
      }
      break;
    }
    case Mutation::Kind::FlipTargetOrder:
      out.target = p.target.with_flipped(m.i, m.j);
      break;
    case Mutation::Kind::PerturbMap:
      out.map[m.i] = p.map[m.j];
      break;
  }
  return out;
}

namespace {

using Invariant = std::tuple<int, int, int>;

std::vector<Invariant> invariants(const FiniteLattice& l) {
  const auto h = l.heights();
  std::vector<Invariant> out;
  for (int i = 0; i < l.size(); ++i)
    out.emplace_back(h[i], l.up_set(i).size(), l.down_set(i).size());
  return out;
}

// Calls visit(map) for each lattice isomorphism a -> b until visit returns true.
void for_each_isomorphism(const FiniteLattice& a, const FiniteLattice& b,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  if (a.size() != b.size()) return;
  const std::vector<int> mi_a = a.meet_irreducibles().to_vector();
  const std::vector<int> mi_b = b.meet_irreducibles().to_vector();
  if (mi_a.size() != mi_b.size()) return;
  const auto inv_a = invariants(a);
  const auto inv_b = invariants(b);

  const int k = static_cast<int>(mi_a.size());
  std::vector<int> phi(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  const OrderedSet& oa = a.order();
  const OrderedSet& ob = b.order();

  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == k) {
      IsoProblem p{"", oa, ob, std::vector<int>(a.size(), -1)};
      for (int x = 0; x < a.size(); ++x) {
        int image = b.top();
        for (int m : mi_a)
          if (a.leq(x, m)) image = b.meet(image, phi[m]);
        p.map[x] = image;
      }
      if (verify_order_isomorphism(p)) return false;
      return visit(p.map);
    }
    const int m = mi_a[depth];
    for (int c : mi_b) {
      if (used[c] || inv_a[m] != inv_b[c]) continue;
      bool consistent = true;
      for (int d = 0; d < depth && consistent; ++d) {
        const int prev = mi_a[d];
        consistent = oa.leq(m, prev) == ob.leq(c, phi[prev]) &&
                     oa.leq(prev, m) == ob.leq(phi[prev], c);
      }
      if (!consistent) continue;
      phi[m] = c;
      used[c] = true;
      if (extend(depth + 1)) return true;
      used[c] = false;
      phi[m] = -1;
    }
    return false;
  };
  extend(0);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  std::optional<std::vector<int>> found;
  for_each_isomorphism(a, b, [&](const std::vector<int>& map) {
    found = map;
    return true;
  });
  return found;
}

std::size_t count_isomorphisms(const FiniteLattice& a, const FiniteLattice& b, std::size_t limit) {
  std::size_t count = 0;
  for_each_isomorphism(a, b, [&](const std::vector<int>&) { return ++count >= limit; });
  return count;
}

std::vector<std::vector<int>> all_isomorphisms(const FiniteLattice& a, const FiniteLattice& b,
                                               std::size_t limit) {
  std::vector<std::vector<int>> out;
  for_each_isomorphism(a, b, [&](const std::vector<int>& map) {
    out.push_back(map);
    return out.size() >= limit;
  });
  return out;
}

bool isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return find_isomorphism(a, b).has_value();
}

std::uint64_t canonical_hash(const FiniteLattice& l) {
  const int n = l.size();
  const auto h = l.heights();
  const auto cov = l.covers();
  std::vector<std::vector<int>> upper(n), lower(n);
  for (auto [x, y] : cov) {
    upper[x].push_back(y);
    lower[y].push_back(x);
  }
  std::vector<std::uint64_t> colour(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t c = mix(0, h[i]);
    c = mix(c, l.up_set(i).size());
    c = mix(c, l.down_set(i).size());
    c = mix(c, upper[i].size());
    colour[i] = mix(c, lower[i].size());
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint64_t> up, down;
      for (int j : upper[i]) up.push_back(colour[j]);
      for (int j : lower[i]) down.push_back(colour[j]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      std::uint64_t c = mix(colour[i], 1);
      for (auto v : up) c = mix(c, v);
      c = mix(c, 2);
      for (auto v : down) c = mix(c, v);
      next[i] = c;
    }
    colour = std::move(next);
  }
  std::sort(colour.begin(), colour.end());
  std::uint64_t out = mix(0, n);
  for (auto v : colour) out = mix(out, v);
  return out;
}

}  // namespace finloc
