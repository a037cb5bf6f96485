#pragma once
// Brute-force reference computations used by the tests. They read only the
// order relation (or the raw incidence of a context) and recompute
// everything else from definitions with plain loops, so they share no code
// with the library beyond the input.

#include <cstdint>
#include <vector>

#include "finloc/lattice.hpp"
#include "finloc/polarity.hpp"

namespace oracle {

using Mask = std::uint64_t;

struct Order {
  int n = 0;
  std::vector<std::vector<char>> le;

  std::vector<std::vector<int>> meet_t, join_t, arrow_t;

  explicit Order(const finloc::FiniteLattice& l) : n(l.size()), le(n, std::vector<char>(n, 0)) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) le[a][b] = l.leq(a, b);
    meet_t.assign(n, std::vector<int>(n));
    join_t.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        meet_t[a][b] = glb((Mask{1} << a) | (Mask{1} << b));
        join_t[a][b] = lub((Mask{1} << a) | (Mask{1} << b));
      }
    arrow_t.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Mask cs = 0;
        for (int c = 0; c < n; ++c)
          if (le[meet(a, c)][b]) cs |= Mask{1} << c;
        arrow_t[a][b] = lub(cs);
      }
  }

  bool in(Mask m, int i) const { return (m >> i) & 1U; }

  int lub(Mask m) const {
    for (int u = 0; u < n; ++u) {
      bool upper = true;
      for (int a = 0; a < n; ++a)
        if (in(m, a) && !le[a][u]) upper = false;
      if (!upper) continue;
      bool least = true;
      for (int v = 0; v < n; ++v) {
        bool vu = true;
        for (int a = 0; a < n; ++a)
          if (in(m, a) && !le[a][v]) vu = false;
        if (vu && !le[u][v]) least = false;
      }
      if (least) return u;
    }
    return -1;
  }
  int glb(Mask m) const {
    for (int l = 0; l < n; ++l) {
      bool lower = true;
      for (int a = 0; a < n; ++a)
        if (in(m, a) && !le[l][a]) lower = false;
      if (!lower) continue;
      bool greatest = true;
      for (int v = 0; v < n; ++v) {
        bool vl = true;
        for (int a = 0; a < n; ++a)
          if (in(m, a) && !le[v][a]) vl = false;
        if (vl && !le[v][l]) greatest = false;
      }
      if (greatest) return l;
    }
    return -1;
  }
  int join(int a, int b) const { return join_t[a][b]; }
  int meet(int a, int b) const { return meet_t[a][b]; }
  int top() const { return glb(0); }
  int bottom() const { return lub(0); }

  /// \/{ c | a /\ c <= b }
  int heyting(int a, int b) const { return arrow_t[a][b]; }
  int difference(int y, int x) const {
    Mask cs = 0;
    for (int c = 0; c < n; ++c)
      if (le[y][join(x, c)]) cs |= Mask{1} << c;
    return glb(cs);
  }

  /// p != top and x /\ y <= p implies x <= p or y <= p.
  Mask primes() const {
    Mask out = 0;
    for (int p = 0; p < n; ++p) {
      if (p == top()) continue;
      bool prime = true;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (le[meet(x, y)][p] && !le[x][p] && !le[y][p]) prime = false;
      if (prime) out |= Mask{1} << p;
    }
    return out;
  }

  /// The frame law over every family and element.
  bool frame_law() const {
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      for (int b = 0; b < n; ++b) {
        Mask parts = 0;
        for (int a = 0; a < n; ++a)
          if (in(m, a)) parts |= Mask{1} << meet(a, b);
        if (meet(lub(m), b) != lub(parts)) return false;
      }
    return true;
  }

  bool is_filter(Mask s) const {
    if (s == 0) return false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (in(s, a) && le[a][b] && !in(s, b)) return false;
        if (in(s, a) && in(s, b) && !in(s, meet(a, b))) return false;
      }
    return true;
  }
  std::vector<Mask> filters() const {
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << n); ++s)
      if (is_filter(s)) out.push_back(s);
    return out;
  }

  /// Closed under meets (finite, so top and binary meets) and a -> s for s in S.
  bool is_sublocale(Mask s) const {
    if (!in(s, top())) return false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (in(s, a) && in(s, b) && !in(s, meet(a, b))) return false;
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < n; ++x)
        if (in(s, x) && !in(s, heyting(a, x))) return false;
    return true;
  }
  std::vector<Mask> sublocales() const {
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << n); ++s)
      if (is_sublocale(s)) out.push_back(s);
    return out;
  }

  Mask os(int a) const {
    Mask out = 0;
    for (int b = 0; b < n; ++b) out |= Mask{1} << heyting(a, b);
    return out;
  }
  Mask cs(int a) const {
    Mask out = 0;
    for (int b = 0; b < n; ++b)
      if (le[a][b]) out |= Mask{1} << b;
    return out;
  }
  Mask up(int a) const { return cs(a); }
  Mask cf(int a) const {
    Mask out = 0;
    for (int x = 0; x < n; ++x)
      if (join(x, a) == top()) out |= Mask{1} << x;
    return out;
  }

  /// Whenever a is not below b, some c has a \/ c = 1 but b \/ c != 1.
  bool subfit() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (le[a][b]) continue;
        bool found = false;
        for (int c = 0; c < n; ++c)
          if (join(a, c) == top() && join(b, c) != top()) found = true;
        if (!found) return false;
      }
    return true;
  }
};

/// Closed sets of a context by filtering every subset of X.
inline std::vector<Mask> closed_sets(int nx, int ny, const std::vector<std::vector<char>>& rel) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << nx); ++m) {
    Mask ys = 0;
    for (int y = 0; y < ny; ++y) {
      bool all = true;
      for (int x = 0; x < nx; ++x)
        if (((m >> x) & 1U) && !rel[x][y]) all = false;
      if (all) ys |= Mask{1} << y;
    }
    Mask back = 0;
    for (int x = 0; x < nx; ++x) {
      bool all = true;
      for (int y = 0; y < ny; ++y)
        if (((ys >> y) & 1U) && !rel[x][y]) all = false;
      if (all) back |= Mask{1} << x;
    }
    if (back == m) out.push_back(m);
  }
  return out;
}

inline std::vector<std::vector<char>> relation(const finloc::Polarity& p) {
  std::vector<std::vector<char>> rel(p.nx(), std::vector<char>(p.ny(), 0));
  for (int x = 0; x < p.nx(); ++x)
    for (int y = 0; y < p.ny(); ++y) rel[x][y] = p.related(x, y);
  return rel;
}

/// Number of topologies on m points by direct subset-family search.
inline int count_topologies(int m) {
  const int subsets = 1 << m;
  const Mask full = (Mask{1} << m) - 1;
  int count = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    if (!((fam >> 0) & 1U) || !((fam >> full) & 1U)) continue;
    bool ok = true;
    for (int a = 0; a < subsets && ok; ++a)
      for (int b = 0; b < subsets && ok; ++b)
        if (((fam >> a) & 1U) && ((fam >> b) & 1U))
          ok = ((fam >> (a | b)) & 1U) && ((fam >> (a & b)) & 1U);
    if (ok) ++count;
  }
  return count;
}

}  // namespace oracle
