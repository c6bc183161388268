#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtq/relations.hpp"

namespace gtq {

// constant + sum coeff * symbol, with integer coefficients.
struct DimensionPoly {
  long long constant = 0;
  std::map<std::string, long long> coeffs;

  DimensionPoly& operator+=(const DimensionPoly& o);
  bool operator==(const DimensionPoly&) const = default;
  // Integer value when no symbol is left.
  std::optional<long long> value() const;
  // Throws IndeterminateError when a symbol has no value.
  long long evaluate(const std::map<std::string, long long>& values) const;
  std::string str() const;  // "36*m + n + 13"
};

struct BasisSet {
  std::string vertex;
  std::string case_tag;        // clause applied, e.g. "(5)"
  std::vector<Path> elements;  // sorted, stationary path included
  std::size_t duplicates = 0;  // collisions while forming the unions; should stay 0
};

BasisSet basis_at_vertex(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od, const WeightData& w,
                         const std::string& x);
// Closed form for |B_x|; symbolic m allowed.
DimensionPoly basis_counts_closed(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od,
                                  const WeightData& w, const std::string& x);
DimensionPoly dimension_generalized(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od,
                                    const WeightData& w);

// Triangulation quivers (blocks I-III only); otherwise NotTriangulationError.
DimensionPoly dimension_triangulation(const GenTriQuiver& q, const OrbitData& od, const WeightData& w);
BasisSet basis_triangulation(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od, const WeightData& w,
                             const std::string& x);

}  // namespace gtq
