#include <doctest.h>

#include "gtq/enumeration.hpp"
#include "gtq/errors.hpp"
#include "gtq/surface.hpp"
#include "support.hpp"

using namespace gtq;
using namespace gtq::test;

namespace {

GenTriQuiver from_surface(const std::string& name) { return surface_to_quiver(load_surface(data(name))); }

bool same_triangulation(const GenTriQuiver& a, const GenTriQuiver& b) {
  auto sa = star_quiver(a), sb = star_quiver(b);
  return quiver_isomorphic(a, b, {&sa.f, &sb.f}).has_value();
}

}  // namespace

TEST_CASE("surface parsing") {
  auto s = load_surface(data("ex53.surf"));
  CHECK(s.edges.size() == 6);
  CHECK(s.triangles.size() == 1);
  CHECK(s.self_folded.size() == 3);
  CHECK(std::count_if(s.self_folded.begin(), s.self_folded.end(), [](auto& f) { return f.marked; }) == 2);

  CHECK_THROWS_AS(load_surface(data("digon.surf")), StructureError);
  try {
    parse_surface("edge a\nedge b\ntriangle a b q\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(parse_surface("edge a\nwedge b\n"), ParseError);
  CHECK_THROWS_AS(parse_surface("edge a\nedge a\n"), ParseError);
  // marked self-folded triangle whose enclosing edge is on the boundary
  CHECK_THROWS_AS(parse_surface("edge d\nedge c boundary\nselffolded d c marked\n"), StructureError);
  // edge used three times
  CHECK_THROWS_AS(parse_surface("edge a\nedge b\nedge c\ntriangle a b c\ntriangle a b c\ntriangle a b c\n"),
                  StructureError);
  CHECK_THROWS_AS(parse_surface("edge a boundary\nedge b boundary\nedge c boundary\ntriangle a a b\n"),
                  StructureError);
}

TEST_CASE("surface of the III+V quiver") {
  auto q = from_surface("ex53.surf");
  CHECK(validate(q).empty());
  CHECK(q.vertices.size() == 6);
  CHECK(q.count_blocks(BlockKind::V) == 1);
  CHECK(q.count_blocks(BlockKind::III) == 1);
  CHECK(q.vertex("1").color == Color::black);
  CHECK(q.vertex("2").color == Color::white);
  CHECK(same_triangulation(q, quiver("ex32.gtq")));
}

TEST_CASE("tetrahedral sphere") {
  auto q = from_surface("tetra.surf");
  CHECK(validate(q).empty());
  CHECK(q.vertices.size() == 6);
  CHECK(q.arrows.size() == 12);
  CHECK(q.marking.empty());
  auto sq = star_quiver(q);
  CHECK(sq.arrows.size() == q.arrows.size());
  auto od = orbit_data(sq);
  // g-orbits: four 3-cycles around the vertices of the tetrahedron
  CHECK(od.g_orbits.size() == 4);
  for (int n : od.n) CHECK(n == 3);
  auto w = resolve_weights(sq, od, {});
  for (const auto& [rep, m] : w.m) w.bind(m.symbol, Rational(1));
  CHECK(dimension_triangulation(q, od, w).value() == 36);
  // three marked self-folded triangles around one triangle give the same quiver
  CHECK(same_triangulation(q, from_surface("three_marked.surf")));
}

TEST_CASE("one-triangle disc") {
  auto q = from_surface("disc.surf");
  CHECK(q.vertices.size() == 3);
  CHECK(q.count_blocks(BlockKind::I) == 3);
  CHECK(q.count_blocks(BlockKind::II) == 1);
  int loops = 0;
  for (const auto& a : q.arrows) loops += a.source == a.target;
  CHECK(loops == 3);
  CHECK(orbit_data(star_quiver(q)).border == std::set<std::string>{"a", "b", "c"});
}

TEST_CASE("surface rule selection") {
  SUBCASE("one marked self-folded triangle: type IV") {
    auto q = surface_to_quiver(parse_surface(
        "edge a boundary\nedge b boundary\nedge c\nedge d\ntriangle a b c\nselffolded d c marked\n"));
    CHECK(q.count_blocks(BlockKind::IV) == 1);
    CHECK(q.marking.size() == 1);
    CHECK(q.vertex("c").color == Color::black);
    CHECK(q.vertex("d").color == Color::black);
    CHECK(validate(q).empty());
    // the marked arrow runs a -> b
    const Arrow& tau = q.arrow(q.marking[0][0]);
    CHECK(tau.source == "a");
    CHECK(tau.target == "b");
  }
  SUBCASE("unmarked self-folded triangle: type III") {
    auto q = surface_to_quiver(parse_surface(
        "edge a boundary\nedge b boundary\nedge c\nedge d\ntriangle a b c\nselffolded d c\n"));
    CHECK(q.count_blocks(BlockKind::III) == 1);
    CHECK(q.marking.empty());
    auto sq = star_quiver(q);
    CHECK(sq.arrows.size() == q.arrows.size());
  }
  SUBCASE("marked self-folded triangle without an ordinary neighbour") {
    CHECK_THROWS_AS(surface_to_quiver(parse_surface("edge d\nedge c\nedge e\nselffolded d c marked\nselffolded e c\n")),
                    StructureError);
  }
}
