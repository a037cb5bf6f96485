#include "finloc/io.hpp"

#include <fstream>
#include <sstream>

#include "finloc/catalog.hpp"
#include "finloc/error.hpp"

namespace finloc {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FinlocError(ErrorKind::InvalidInput, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* key) {
  const json& arr = require(j, key);
  if (!arr.is_array()) throw FinlocError(ErrorKind::InvalidInput, std::string("'") + key + "' must be a list");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string())
      throw FinlocError(ErrorKind::InvalidInput, std::string("'") + key + "' entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

int lookup(const std::vector<std::string>& names, const std::string& name, const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw FinlocError(ErrorKind::InvalidInput, std::string("unknown ") + what + " '" + name + "'",
                    {{"name", name}});
}

void check_unique(const std::vector<std::string>& names, const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw FinlocError(ErrorKind::InvalidInput, std::string("duplicate ") + what + " '" + names[i] + "'");
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

FiniteLattice lattice_from_json(const json& j) {
  auto names = string_list(j, "elements");
  if (names.empty()) throw FinlocError(ErrorKind::InvalidInput, "a lattice needs at least one element");
  if (static_cast<int>(names.size()) > kMaxElements)
    throw FinlocError(ErrorKind::CarrierTooLarge, "more than 64 elements",
                      {{"elements", names.size()}, {"cap", kMaxElements}});
  check_unique(names, "element");
  std::vector<std::pair<int, int>> pairs;
  const json& leq = require(j, "leq");
  if (!leq.is_array()) throw FinlocError(ErrorKind::InvalidInput, "'leq' must be a list of pairs");
  for (const auto& p : leq) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw FinlocError(ErrorKind::InvalidInput, "'leq' entries must be [name, name]");
    pairs.emplace_back(lookup(names, p[0], "element"), lookup(names, p[1], "element"));
  }
  return build_lattice(std::move(names), pairs);
}

FiniteLattice topology_from_json(const json& j) {
  const auto points = string_list(j, "points");
  if (static_cast<int>(points.size()) > kMaxElements)
    throw FinlocError(ErrorKind::CarrierTooLarge, "more than 64 points");
  check_unique(points, "point");
  const json& arr = require(j, "opens");
  if (!arr.is_array()) throw FinlocError(ErrorKind::InvalidInput, "'opens' must be a list");
  std::vector<ElementSet> opens;
  for (const auto& o : arr) {
    if (!o.is_array()) throw FinlocError(ErrorKind::InvalidInput, "each open must be a list of points");
    ElementSet s;
    for (const auto& p : o) {
      if (!p.is_string()) throw FinlocError(ErrorKind::InvalidInput, "points must be strings");
      s.insert(lookup(points, p, "point"));
    }
    if (std::find(opens.begin(), opens.end(), s) == opens.end()) opens.push_back(s);
  }
  const int n = static_cast<int>(points.size());
  if (!is_topology(n, opens)) {
    json w = json::object();
    auto has = [&](ElementSet s) { return std::find(opens.begin(), opens.end(), s) != opens.end(); };
    auto named = [&](ElementSet s) {
      json out = json::array();
      for (int i : s) out.push_back(points[i]);
      return out;
    };
    if (!has(ElementSet{})) w = {{"missing", json::array()}};
    else if (!has(ElementSet::full(n))) w = {{"missing", named(ElementSet::full(n))}};
    else
      for (ElementSet a : opens)
        for (ElementSet b : opens)
          if (w.empty() && (!has(a | b) || !has(a & b)))
            w = {{"a", named(a)}, {"b", named(b)}, {"missing", named(has(a | b) ? a & b : a | b)}};
    throw FinlocError(ErrorKind::InvalidInput, "opens are not a topology", w);
  }
  std::sort(opens.begin(), opens.end());
  std::vector<std::string> names;
  for (ElementSet s : opens) {
    std::string name = "{";
    bool first = true;
    for (int i : s) {
      if (!first) name += ',';
      name += points[i];
      first = false;
    }
    names.push_back(name + "}");
  }
  return FiniteLattice::from_order(std::move(names), OrderedSet::by_inclusion(opens));
}

FiniteLattice frame_input_from_json(const json& j) {
  if (j.is_object() && j.contains("points")) return topology_from_json(j);
  return lattice_from_json(j);
}

Polarity polarity_from_json(const json& j) {
  auto objects = string_list(j, "objects");
  auto attributes = string_list(j, "attributes");
  const int nx = static_cast<int>(objects.size());
  const int ny = static_cast<int>(attributes.size());
  if (nx > kMaxElements || ny > kMaxElements)
    throw FinlocError(ErrorKind::CarrierTooLarge, "context carriers above 64",
                      {{"objects", nx}, {"attributes", ny}, {"cap", kMaxElements}});
  std::vector<ElementSet> rows(nx);
  const json& inc = require(j, "incidence");
  if (!inc.is_array()) throw FinlocError(ErrorKind::InvalidInput, "'incidence' must be a list of pairs");
  for (const auto& p : inc) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw FinlocError(ErrorKind::InvalidInput, "'incidence' entries must be [object, attribute]");
    const int x = p[0];
    const int y = p[1];
    if (x < 0 || x >= nx || y < 0 || y >= ny)
      throw FinlocError(ErrorKind::InvalidInput, "incidence index out of range", {{"pair", p}});
    rows[x].insert(y);
  }
  Polarity pol(nx, ny, std::move(rows));
  pol.x_names = std::move(objects);
  pol.y_names = std::move(attributes);
  return pol;
}

json lattice_to_json(const FiniteLattice& l) {
  json leq = json::array();
  for (auto [a, b] : l.covers()) leq.push_back({l.name(a), l.name(b)});
  return {{"elements", l.names()}, {"leq", leq}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FinlocError(ErrorKind::InvalidInput, "cannot open '" + path + "'", {{"path", path}});
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FinlocError(ErrorKind::InvalidInput, "'" + path + "' is not valid JSON: " + e.what(),
                      {{"path", path}});
  }
}

std::string hasse_dot(const FiniteLattice& l, const std::string& graph_name,
                      const std::map<int, std::string>& classes) {
  std::ostringstream out;
  out << "digraph \"" << escape(graph_name) << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
  const auto heights = l.heights();
  int max_h = 0;
  for (int h : heights) max_h = std::max(max_h, h);
  for (int h = 0; h <= max_h; ++h) {
    out << "  { rank=same;";
    for (int i = 0; i < l.size(); ++i)
      if (heights[i] == h) out << " n" << i << ";";
    out << " }\n";
  }
  for (int i = 0; i < l.size(); ++i) {
    out << "  n" << i << " [label=\"" << escape(l.name(i)) << "\"";
    if (auto it = classes.find(i); it != classes.end())
      out << ", style=filled, fillcolor=\"" << escape(it->second) << "\"";
    out << "];\n";
  }
  for (auto [a, b] : l.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace finloc
