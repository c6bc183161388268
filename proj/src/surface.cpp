#include "gtq/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gtq/errors.hpp"
#include "text.hpp"

namespace gtq {

const SurfaceEdge* Surface::find_edge(std::string_view id) const {
  for (const auto& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

Surface parse_surface(std::string_view text) {
  Surface s;
  std::set<std::string> seen;
  int lineno = 0;
  auto need = [&](const std::string& id) {
    if (!seen.count(id)) throw ParseError(lineno, "undeclared edge '" + id + "'");
  };
  for (const auto& raw : split_lines(text)) {
    ++lineno;
    auto tok = tokens(strip_comment(raw));
    if (tok.empty()) continue;
    if (tok[0] == "edge") {
      if (tok.size() < 2 || tok.size() > 3 || (tok.size() == 3 && tok[2] != "boundary"))
        throw ParseError(lineno, "expected: edge <id> [boundary]");
      if (!valid_name(tok[1])) throw ParseError(lineno, "invalid edge id '" + tok[1] + "'");
      if (!seen.insert(tok[1]).second) throw ParseError(lineno, "duplicate edge '" + tok[1] + "'");
      s.edges.push_back({tok[1], tok.size() == 3});
    } else if (tok[0] == "triangle") {
      if (tok.size() != 4) throw ParseError(lineno, "expected: triangle <a> <b> <c>");
      for (int k = 1; k <= 3; ++k) need(tok[k]);
      s.triangles.push_back({{tok[1], tok[2], tok[3]}, lineno});
    } else if (tok[0] == "selffolded") {
      if (tok.size() < 3 || tok.size() > 4 || (tok.size() == 4 && tok[3] != "marked"))
        throw ParseError(lineno, "expected: selffolded <folded> <enclosing> [marked]");
      need(tok[1]);
      need(tok[2]);
      s.self_folded.push_back({tok[1], tok[2], tok.size() == 4, lineno});
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  validate_surface(s);
  return s;
}

void validate_surface(const Surface& s) {
  if (s.edges.size() < 2) throw StructureError("a triangulation has at least two edges");
  if (s.triangles.empty() && s.self_folded.empty()) {
    bool digon = s.edges.size() == 2 && s.edges[0].boundary && s.edges[1].boundary;
    throw StructureError(digon ? "the unpunctured digon is excluded" : "surface has no triangles");
  }
  std::map<std::string, int> slots, folded;
  for (const auto& t : s.triangles) {
    const auto& e = t.edges;
    if (e[0] == e[1] || e[1] == e[2] || e[0] == e[2])
      throw StructureError("line " + std::to_string(t.line) + ": triangle edges must be pairwise different");
    for (const auto& x : e) ++slots[x];
  }
  for (const auto& f : s.self_folded) {
    if (f.folded == f.enclosing)
      throw StructureError("line " + std::to_string(f.line) + ": folded and enclosing edge coincide");
    ++folded[f.folded];
    ++slots[f.enclosing];
    if (f.marked && s.find_edge(f.enclosing)->boundary)
      throw StructureError("line " + std::to_string(f.line) + ": marked self-folded triangle with boundary edge " +
                           f.enclosing);
  }
  for (const auto& e : s.edges) {
    int n = slots[e.id], k = folded[e.id];
    if (k > 0) {
      if (k != 1 || n != 0 || e.boundary)
        throw StructureError("edge " + e.id + " is a folded edge and must lie in nothing else");
      continue;
    }
    if (n + (e.boundary ? 1 : 0) != 2)
      throw StructureError("edge " + e.id + " lies in " + std::to_string(n) + " triangle sides" +
                           (e.boundary ? " plus the boundary" : "") + ", expected two");
  }
}

GenTriQuiver surface_to_quiver(const Surface& s) {
  validate_surface(s);
  using Ids = std::map<std::string, std::string>;
  std::vector<Block> blocks;
  auto add = [&](BlockKind kind, const std::string& name, Ids vertices) {
    blocks.push_back(build_block(kind, name, vertices, {}));
  };

  std::map<std::string, const SelfFolded*> marked;  // by enclosing edge
  for (const auto& f : s.self_folded)
    if (f.marked) marked[f.enclosing] = &f;
  std::set<std::string> consumed;

  for (std::size_t i = 0; i < s.triangles.size(); ++i) {
    std::string name = "t" + std::to_string(i + 1);
    auto e = s.triangles[i].edges;
    int count = 0;
    for (const auto& x : e) count += marked.count(x) ? 1 : 0;
    auto fold = [&](const std::string& x) { return marked.at(x)->folded; };
    auto rotate_until = [&](auto pred) {
      for (int r = 0; r < 3 && !pred(); ++r) std::rotate(e.begin(), e.begin() + 1, e.end());
    };
    switch (count) {
      case 0:  // rule (2)
        add(BlockKind::II, name, {{"a", e[0]}, {"b", e[1]}, {"c", e[2]}});
        break;
      case 1:  // rule (4): (a b c) with c enclosing the marked triangle
        rotate_until([&] { return marked.count(e[2]) != 0; });
        add(BlockKind::IV, name, {{"a", e[0]}, {"b", e[1]}, {"c", e[2]}, {"d", fold(e[2])}});
        break;
      case 2:  // rule (5): (x1 z x2)
        rotate_until([&] { return marked.count(e[1]) == 0; });
        add(BlockKind::V, name,
            {{"z", e[1]}, {"x1", e[0]}, {"x2", e[2]}, {"y1", fold(e[0])}, {"y2", fold(e[2])}});
        break;
      default: {  // rule (6): four triangles of the tetrahedral quiver
        std::array<std::string, 3> f{fold(e[0]), fold(e[1]), fold(e[2])};
        add(BlockKind::II, name + "a", {{"a", e[0]}, {"b", e[1]}, {"c", e[2]}});
        add(BlockKind::II, name + "b", {{"a", f[0]}, {"b", e[1]}, {"c", f[2]}});
        add(BlockKind::II, name + "c", {{"a", e[0]}, {"b", f[1]}, {"c", f[2]}});
        add(BlockKind::II, name + "d", {{"a", f[0]}, {"b", f[1]}, {"c", e[2]}});
      }
    }
    for (const auto& x : e)
      if (marked.count(x)) consumed.insert(x);
  }
  for (const auto& [enclosing, f] : marked)
    if (!consumed.count(enclosing))
      throw StructureError("marked self-folded triangle at " + f->folded + " has no ordinary neighbour");

  for (std::size_t i = 0; i < s.self_folded.size(); ++i) {
    const auto& f = s.self_folded[i];
    if (!f.marked)  // rule (3)
      add(BlockKind::III, "s" + std::to_string(i + 1), {{"x", f.folded}, {"y", f.enclosing}});
  }
  for (const auto& e : s.edges)  // rule (1)
    if (e.boundary) add(BlockKind::I, "b_" + e.id, {{"v", e.id}});
  return glue_by_ids(std::move(blocks));
}

}  // namespace gtq
