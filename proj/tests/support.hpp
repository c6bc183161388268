#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gtq/io.hpp"
#include "gtq/star.hpp"

namespace gtq::test {

inline std::string data(const std::string& name) { return std::string(GTQ_DATA_DIR) + "/" + name; }
inline GenTriQuiver quiver(const std::string& name) { return load_quiver(data(name)); }

// Rotate a cycle so that it starts at its least element.
inline std::vector<std::string> rotate_least(std::vector<std::string> c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

inline std::vector<std::vector<std::string>> normalize(std::vector<std::vector<std::string>> cs) {
  for (auto& c : cs) c = rotate_least(c);
  std::sort(cs.begin(), cs.end());
  return cs;
}

struct Loaded {
  GenTriQuiver q;
  StarQuiver sq;
  OrbitData od;
  WeightData w;
};

inline Loaded load(const std::string& gtq, const std::string& wts, const std::map<std::string, long long>& bind = {}) {
  Loaded l;
  l.q = quiver(gtq);
  l.sq = star_quiver(l.q);
  l.od = orbit_data(l.sq);
  l.w = resolve_weights(l.sq, l.od, wts.empty() ? std::vector<WeightEntry>{} : load_weights(data(wts)));
  for (const auto& [s, v] : bind) l.w.bind(s, Rational(v));
  return l;
}

inline GluingSpec two_loops() {
  GluingSpec s;
  s.blocks = {build_block(BlockKind::I, "p"), build_block(BlockKind::I, "q")};
  s.pairing = {{{0, 0}, {1, 0}}};
  return s;
}

}  // namespace gtq::test
