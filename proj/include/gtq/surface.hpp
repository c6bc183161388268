#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gtq/quiver.hpp"

namespace gtq {

struct SurfaceEdge {
  std::string id;
  bool boundary = false;
};

// Ordinary triangle, edges listed along the orientation of the surface.
struct SurfaceTriangle {
  std::array<std::string, 3> edges;
  int line = 0;
};

struct SelfFolded {
  std::string folded, enclosing;
  bool marked = false;
  int line = 0;
};

struct Surface {
  std::vector<SurfaceEdge> edges;  // declaration order
  std::vector<SurfaceTriangle> triangles;
  std::vector<SelfFolded> self_folded;

  const SurfaceEdge* find_edge(std::string_view id) const;
};

// .surf text:
//   edge <id> [boundary]
//   triangle <a> <b> <c>
//   selffolded <folded> <enclosing> [marked]
// Syntax errors -> ParseError; violated surface invariants -> StructureError.
Surface parse_surface(std::string_view text);
void validate_surface(const Surface& s);

// Vertices are the edges; blocks are named after the rule that produced them.
GenTriQuiver surface_to_quiver(const Surface& s);

}  // namespace gtq
