#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finloc/lattice.hpp"

namespace fixtures {

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline finloc::FiniteLattice two() { return finloc::build_lattice({"0", "1"}, Pairs{{"0", "1"}}); }
inline finloc::FiniteLattice three() {
  return finloc::build_lattice({"0", "m", "1"}, Pairs{{"0", "m"}, {"m", "1"}});
}
inline finloc::FiniteLattice b4() {
  return finloc::build_lattice({"0", "a", "b", "1"}, Pairs{{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}
inline finloc::FiniteLattice m3() {
  return finloc::build_lattice({"0", "a", "b", "c", "1"},
                               Pairs{{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}
inline finloc::FiniteLattice n5() {
  return finloc::build_lattice({"0", "a", "b", "c", "1"},
                               Pairs{{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

inline int at(const finloc::FiniteLattice& l, const std::string& name) { return l.index_of(name); }

}  // namespace fixtures
