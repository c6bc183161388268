#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtq/star.hpp"
#include "gtq/weights.hpp"

namespace gtq {

// Where an arrow of Q^Delta comes from: the source block and a role tag.
// New arrows carry the tags xi, mu, xi', mu', theta, lambda, kappa, zeta; kept arrows their original role.
struct ArrowOrigin {
  std::string block;
  std::string role;
};

struct DeltaResult {
  GenTriQuiver source;
  WeightData source_weights;
  GenTriQuiver quiver;  // Q^Delta, glued from blocks I-III only
  WeightData weights;   // (m^Delta, c^Delta, b^Delta)
  std::map<std::string, ArrowOrigin> arrow_origin;
};

// A type-V block of the source and the arrows added for it at stage one.
struct Region {
  Block original;
  std::string p4, p2;  // names of the type-IV and type-II blocks that replace it
  std::string pi, kappa;
};

struct MutationResult {
  int stage = 1;
  GenTriQuiver quiver;
  WeightData weights;
  std::vector<std::string> virtual_sequence;
  std::vector<Region> regions;
  GenTriQuiver source;  // the quiver Q the pipeline started from
  WeightData source_weights;
};

DeltaResult delta_construction(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od,
                               const WeightData& w);
std::vector<std::string> detect_exceptional(const DeltaResult& d);
// (xi_1..xi_s, xi'_1..xi'_t) in block order.
std::vector<std::string> virtual_sequence(const DeltaResult& d);
MutationResult mutate_stage1(const DeltaResult& d);
// StageError unless m1 is a stage-one result.
MutationResult mutate_stage2(const MutationResult& m1);

struct RoundTripReport {
  bool pass = false;
  std::vector<std::string> lines;  // checks run, "ok ..." or "FAIL ..."
  std::optional<Isomorphism> witness;
  std::string str() const;
};

RoundTripReport roundtrip_check(const GenTriQuiver& q, const WeightData& w);

}  // namespace gtq
