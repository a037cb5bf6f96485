#include "finloc/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "finloc/error.hpp"
#include "finloc/isomorphism.hpp"

namespace finloc {

std::string_view to_string(CatalogKind kind) {
  switch (kind) {
    case CatalogKind::powerset: return "powerset";
    case CatalogKind::chain: return "chain";
    case CatalogKind::downsets: return "downsets";
    case CatalogKind::topologies: return "topologies";
  }
  return "unknown";
}

int catalog_bound_cap(CatalogKind kind) {
  switch (kind) {
    case CatalogKind::powerset: return 6;
    case CatalogKind::chain: return 63;
    case CatalogKind::downsets: return 5;
    case CatalogKind::topologies: return 4;
  }
  return 0;
}

CatalogSpec parse_catalog_spec(std::string_view text) {
  static const std::map<std::string, CatalogKind, std::less<>> kinds = {
      {"powerset", CatalogKind::powerset},   {"chain", CatalogKind::chain},
      {"chains", CatalogKind::chain},        {"downsets", CatalogKind::downsets},
      {"posets", CatalogKind::downsets},     {"topologies", CatalogKind::topologies}};
  CatalogSpec spec;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view part = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (part.empty()) continue;
    const auto colon = part.find(':');
    if (colon == std::string_view::npos)
      throw FinlocError(ErrorKind::InvalidInput,
                        "catalog part '" + std::string(part) + "' is not kind:bound");
    const auto name = part.substr(0, colon);
    const auto number = part.substr(colon + 1);
    const auto it = kinds.find(name);
    if (it == kinds.end())
      throw FinlocError(ErrorKind::InvalidInput, "unknown catalog kind '" + std::string(name) + "'");
    int bound = 0;
    const auto [end, ec] = std::from_chars(number.data(), number.data() + number.size(), bound);
    if (ec != std::errc{} || end != number.data() + number.size() || bound < 0)
      throw FinlocError(ErrorKind::InvalidInput, "bad catalog bound '" + std::string(number) + "'");
    if (bound > catalog_bound_cap(it->second))
      throw FinlocError(ErrorKind::BoundTooLarge,
                        std::string(name) + " bound " + std::to_string(bound) + " exceeds " +
                            std::to_string(catalog_bound_cap(it->second)),
                        {{"bound", bound}, {"cap", catalog_bound_cap(it->second)}});
    spec.parts.emplace_back(it->second, bound);
  }
  return spec;
}

CatalogSpec default_catalog_spec() {
  return {{{CatalogKind::topologies, 3},
           {CatalogKind::downsets, 4},
           {CatalogKind::chain, 6},
           {CatalogKind::powerset, 3}}};
}

std::string to_string(const CatalogSpec& spec) {
  std::string out;
  for (const auto& [kind, bound] : spec.parts) {
    if (!out.empty()) out += ',';
    out += std::string(to_string(kind)) + ":" + std::to_string(bound);
  }
  return out;
}

std::string subset_name(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ',';
    out += static_cast<char>('a' + i);
    first = false;
  }
  return out + "}";
}

FiniteLattice opens_lattice(int points, const std::vector<ElementSet>& opens) {
  (void)points;
  std::vector<std::string> names;
  for (ElementSet s : opens) names.push_back(subset_name(s));
  return FiniteLattice::from_order(std::move(names), OrderedSet::by_inclusion(opens));
}

FiniteLattice powerset_lattice(int k) {
  std::vector<ElementSet> sets;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) sets.emplace_back(m);
  return opens_lattice(k, sets);
}

FiniteLattice chain_lattice(int elements) {
  std::vector<std::string> names;
  for (int i = 0; i < elements; ++i) names.push_back(std::to_string(i));
  return FiniteLattice::from_order(std::move(names), OrderedSet::from_predicate(
                                                         elements, [](int a, int b) { return a <= b; }));
}

FiniteLattice downset_lattice(const OrderedSet& poset) {
  const int m = poset.size();
  std::vector<ElementSet> downs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const ElementSet s(mask);
    bool closed = true;
    for (int i : s)
      if (!poset.down(i).subset_of(s)) closed = false;
    if (closed) downs.push_back(s);
  }
  return opens_lattice(m, downs);
}

std::vector<OrderedSet> all_posets(int m) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<OrderedSet> out;
  const std::uint64_t end = std::uint64_t{1} << slots.size();
  for (std::uint64_t r = 0; r < end; ++r) {
    std::vector<ElementSet> up(m);
    for (int i = 0; i < m; ++i) up[i].insert(i);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((r >> k) & 1U) up[slots[k].first].insert(slots[k].second);
    OrderedSet o(std::move(up));
    if (o.is_antisymmetric() && o.is_transitive()) out.push_back(std::move(o));
  }
  return out;
}

bool is_topology(int points, const std::vector<ElementSet>& opens) {
  auto has = [&](ElementSet s) { return std::find(opens.begin(), opens.end(), s) != opens.end(); };
  if (!has(ElementSet{}) || !has(ElementSet::full(points))) return false;
  for (ElementSet a : opens) {
    if (!a.subset_of(ElementSet::full(points))) return false;
    for (ElementSet b : opens)
      if (!has(a | b) || !has(a & b)) return false;
  }
  return true;
}

std::vector<std::vector<ElementSet>> all_topologies(int m) {
  const std::uint64_t full = ElementSet::full(m).bits();
  std::vector<ElementSet> middle;
  for (std::uint64_t s = 1; s < full; ++s) middle.emplace_back(s);
  std::vector<std::vector<ElementSet>> out;
  const std::uint64_t end = std::uint64_t{1} << middle.size();
  for (std::uint64_t pick = 0; pick < end; ++pick) {
    std::vector<ElementSet> opens{ElementSet{}};
    for (std::size_t k = 0; k < middle.size(); ++k)
      if ((pick >> k) & 1U) opens.push_back(middle[k]);
    opens.push_back(ElementSet(full));
    if (m == 0) opens.pop_back();
    if (is_topology(m, opens)) out.push_back(std::move(opens));
  }
  return out;
}

std::vector<CatalogEntry> catalog_raw(CatalogKind kind, int bound) {
  if (bound > catalog_bound_cap(kind))
    throw FinlocError(ErrorKind::BoundTooLarge,
                      std::string(to_string(kind)) + " bound " + std::to_string(bound) +
                          " exceeds " + std::to_string(catalog_bound_cap(kind)),
                      {{"bound", bound}, {"cap", catalog_bound_cap(kind)}});
  std::vector<CatalogEntry> out;
  switch (kind) {
    case CatalogKind::powerset:
      for (int k = 1; k <= bound; ++k)
        out.push_back({"powerset:" + std::to_string(k), powerset_lattice(k)});
      break;
    case CatalogKind::chain:
      for (int n = 2; n <= bound + 1; ++n)
        out.push_back({"chain:" + std::to_string(n), chain_lattice(n)});
      break;
    case CatalogKind::downsets:
      for (int m = 1; m <= bound; ++m) {
        const auto posets = all_posets(m);
        for (std::size_t i = 0; i < posets.size(); ++i)
          out.push_back({"downsets:" + std::to_string(m) + "#" + std::to_string(i),
                         downset_lattice(posets[i])});
      }
      break;
    case CatalogKind::topologies:
      for (int m = 1; m <= bound; ++m) {
        const auto tops = all_topologies(m);
        for (std::size_t i = 0; i < tops.size(); ++i)
          out.push_back({"topologies:" + std::to_string(m) + "#" + std::to_string(i),
                         opens_lattice(m, tops[i])});
      }
      break;
  }
  return out;
}

std::vector<CatalogEntry> dedupe(std::vector<CatalogEntry> entries) {
  std::vector<CatalogEntry> kept;
  std::vector<std::uint64_t> hashes;
  for (auto& e : entries) {
    const std::uint64_t h = canonical_hash(e.lattice);
    bool duplicate = false;
    for (std::size_t k = 0; k < kept.size() && !duplicate; ++k)
      duplicate = hashes[k] == h && kept[k].lattice.size() == e.lattice.size() &&
                  isomorphic(kept[k].lattice, e.lattice);
    if (!duplicate) {
      hashes.push_back(h);
      kept.push_back(std::move(e));
    }
  }
  return kept;
}

std::vector<CatalogEntry> build_catalog(const CatalogSpec& spec) {
  std::vector<CatalogEntry> all;
  for (const auto& [kind, bound] : spec.parts) {
    auto part = catalog_raw(kind, bound);
    for (auto& e : part) all.push_back(std::move(e));
  }
  return dedupe(std::move(all));
}

}  // namespace finloc
