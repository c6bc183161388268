#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gtq/quiver.hpp"
#include "gtq/weights.hpp"

namespace gtq {

// Q* together with the permutations f, bar and g = bar o f (applied as g(a) = bar(f(a))).
struct StarQuiver {
  GenTriQuiver base;
  std::set<std::string> vertices;
  std::vector<std::string> arrows;  // sorted
  std::map<std::string, std::string> f, bar, g;

  bool contains(const std::string& arrow) const { return f.count(arrow) != 0; }
  std::vector<std::string> out_arrows(const std::string& vertex) const;
};

StarQuiver star_quiver(const GenTriQuiver& q);

struct OrbitData {
  std::vector<std::vector<std::string>> f_orbits;
  std::vector<std::vector<std::string>> g_orbits;  // each starts at its least arrow; list sorted
  std::vector<int> n, nu_count, phi_count;          // indexed like g_orbits
  std::set<std::string> border;
  std::map<std::string, std::size_t> orbit_of;      // arrow -> g-orbit index

  std::size_t orbit(const std::string& arrow) const { return orbit_of.at(arrow); }
  const std::string& rep(std::size_t orbit) const { return g_orbits[orbit].front(); }
  const std::string& rep(const std::string& arrow) const { return rep(orbit(arrow)); }
  int length(const std::string& arrow) const { return n[orbit(arrow)]; }
};

OrbitData orbit_data(const StarQuiver& sq);

// Arrows and (merged) vertices of a type-IV / type-V block, by role.
struct TypeIV {
  std::size_t block;
  std::string alpha, tau, beta, nu, delta;
  std::string a, b, c, d;
};
struct TypeV {
  std::size_t block;
  std::string epsilon, rho, sigma, eta, psi, omega, gamma, phi;
  std::string z, x1, x2, y1, y2;
};
std::vector<TypeIV> type_iv_blocks(const GenTriQuiver& q);
std::vector<TypeV> type_v_blocks(const GenTriQuiver& q);

std::vector<Diagnostic> validate_weights(const StarQuiver& sq, const OrbitData& od, const WeightData& w);
// Arrows with m*n = 2; IndeterminateError when a symbolic weight leaves this open.
std::set<std::string> virtual_arrows(const OrbitData& od, const WeightData& w);
bool is_virtual(const OrbitData& od, const WeightData& w, const std::string& arrow);

// Resolve parsed .wts entries against the orbits of q; omitted m/c/b become fresh symbols.
WeightData resolve_weights(const StarQuiver& sq, const OrbitData& od, const std::vector<WeightEntry>& entries);

}  // namespace gtq
