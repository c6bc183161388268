#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtq/star.hpp"
#include "gtq/weights.hpp"

namespace gtq {

// Arrows read left to right: t(arrows[k]) = s(arrows[k+1]). No arrows means the stationary path at source.
struct Path {
  std::vector<std::string> arrows;
  std::string source, target;

  std::size_t length() const { return arrows.size(); }
  bool stationary() const { return arrows.empty(); }
  std::string str() const;  // "a.b.c", or "e_<vertex>"
  auto operator<=>(const Path&) const = default;
};

Path stationary_path(const std::string& vertex);
// Throws std::logic_error if the arrows do not compose.
Path make_path(const GenTriQuiver& q, const std::vector<std::string>& arrows);
Path concat(const Path& a, const Path& b);
Path prefix(const GenTriQuiver& q, const Path& p, std::size_t length);  // length 0: e_source

// alpha g(alpha) ... of the given length.
Path g_walk(const StarQuiver& sq, const std::string& alpha, std::size_t length);

struct Coefficient {
  Rational rational{1};
  std::vector<std::string> symbols;  // sorted multiset

  std::string str() const;
  bool operator==(const Coefficient&) const = default;
};

Coefficient coefficient_of(const ParamValue& p, long long sign = 1);

struct Term {
  Coefficient coeff;
  Path path;
};

// sum of terms = 0; the first term has rational part 1.
struct Relation {
  std::string family;  // "1".."6", or "lambda-dblprime"
  std::vector<Term> terms;

  bool monomial() const { return terms.size() == 1; }
  std::string str() const;
};

struct RelationSet {
  std::vector<Relation> relations;

  std::string str() const;  // one relation per line
  std::size_t count(const std::string& family) const;
};

struct StandardPaths {
  Path A, B;
  std::optional<Path> A_prime;
};

// Throws IndeterminateError when m of the orbit is symbolic.
long long concrete_m(const OrbitData& od, const WeightData& w, const std::string& arrow);
StandardPaths standard_paths(const StarQuiver& sq, const OrbitData& od, const WeightData& w,
                             const std::string& alpha);

// The cycles through removed black vertices, keyed by alpha_i, eta_j and omega_j.
std::map<std::string, Path> special_cycles(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od,
                                           const WeightData& w);

RelationSet relations_generalized(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od,
                                  const WeightData& w);
// Only for quivers glued from blocks I-III; otherwise NotTriangulationError.
RelationSet relations_triangulation(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od,
                                    const WeightData& w);

struct MutationResult;
// Relations of the algebra on Q'' (stage-one quiver without the pi_j and kappa_j arrows).
RelationSet relations_lambda_dblprime(const MutationResult& stage1);

}  // namespace gtq
