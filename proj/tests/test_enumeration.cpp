#include <doctest.h>

#include "gtq/enumeration.hpp"
#include "gtq/errors.hpp"
#include "gtq/transforms.hpp"
#include "support.hpp"

using namespace gtq;
using namespace gtq::test;

namespace {

bool has(const BasisSet& b, const std::string& path) {
  for (const auto& p : b.elements)
    if (p.str() == path) return true;
  return false;
}

long long enumerated_total(const Loaded& l) {
  long long total = 0;
  for (const auto& v : l.q.vertices) total += basis_at_vertex(l.q, l.sq, l.od, l.w, v.id).elements.size();
  return total;
}

}  // namespace

TEST_CASE("III+V gluing: enumeration, closed forms and dimension agree") {
  for (long long m : {1, 2, 3})
    for (long long n : {2, 3, 4}) {
      CAPTURE(m);
      CAPTURE(n);
      auto l = load("ex32.gtq", "ex32.wts", {{"m", m}, {"n", n}});
      long long closed = 0;
      for (const auto& v : l.q.vertices) {
        auto b = basis_at_vertex(l.q, l.sq, l.od, l.w, v.id);
        CHECK(b.duplicates == 0);
        for (const auto& p : b.elements) CHECK(p.source == v.id);
        auto c = basis_counts_closed(l.q, l.sq, l.od, l.w, v.id).value();
        REQUIRE(c.has_value());
        CHECK(static_cast<long long>(b.elements.size()) == *c);
        closed += *c;
      }
      auto dim = dimension_generalized(l.q, l.sq, l.od, l.w).value();
      REQUIRE(dim.has_value());
      CHECK(enumerated_total(l) == closed);
      CHECK(closed == *dim);
      CHECK(*dim == 49 * m + n);
    }
}

TEST_CASE("III+V gluing: per-vertex cases") {
  auto l = load("ex32.gtq", "ex32.wts", {{"m", 1}, {"n", 2}});
  auto y = basis_at_vertex(l.q, l.sq, l.od, l.w, "iii:y");
  CHECK(y.elements.size() == 14);
  CHECK(y.case_tag == "(1)");
  auto x2 = basis_at_vertex(l.q, l.sq, l.od, l.w, "v:x2");
  CHECK(x2.case_tag == "(5)");
  CHECK(has(x2, "v:sigma"));
  CHECK(has(x2, "e_v:x2"));
  CHECK(basis_at_vertex(l.q, l.sq, l.od, l.w, "v:x1").case_tag == "(4)");
  CHECK(basis_at_vertex(l.q, l.sq, l.od, l.w, "v:y1").case_tag == "(4)");
  auto y2 = basis_at_vertex(l.q, l.sq, l.od, l.w, "v:y2");
  CHECK(y2.case_tag == "(6)");
  CHECK(has(y2, "v:rho"));
  CHECK(dimension_generalized(l.q, l.sq, l.od, l.w).value() == 51);

  auto s = load("ex32.gtq", "ex32.wts");
  CHECK(basis_counts_closed(s.q, s.sq, s.od, s.w, "iii:y").str() == "14*m");
  CHECK(basis_counts_closed(s.q, s.sq, s.od, s.w, "iii:x").str() == "7*m + n");
  CHECK(dimension_generalized(s.q, s.sq, s.od, s.w).str() == "49*m + n");
  CHECK_THROWS_AS(basis_at_vertex(s.q, s.sq, s.od, s.w, "iii:y"), IndeterminateError);
  CHECK_THROWS_AS(basis_at_vertex(l.q, l.sq, l.od, l.w, "nowhere"), UsageError);
}

TEST_CASE("seven-block gluing: enumeration matches the closed forms") {
  for (long long p : {2, 3}) {
    auto l = load("ex33.gtq", "ex33.wts", {{"m", 2}, {"n", 1}, {"p", p}});
    auto c = basis_at_vertex(l.q, l.sq, l.od, l.w, "iv:c");
    CHECK(c.case_tag == "(3)");
    CHECK(c.duplicates == 0);
    auto closed = basis_counts_closed(l.q, l.sq, l.od, l.w, "iv:c").value();
    REQUIRE(closed.has_value());
    CHECK(static_cast<long long>(c.elements.size()) == *closed);
    CHECK(basis_at_vertex(l.q, l.sq, l.od, l.w, "iv:d").case_tag == "(3)");
    CHECK(enumerated_total(l) == dimension_generalized(l.q, l.sq, l.od, l.w).value());
  }
  auto s = load("ex33.gtq", "ex33.wts");
  CHECK(dimension_generalized(s.q, s.sq, s.od, s.w).str() == "196*m + 49*n + p");
}

TEST_CASE("virtual bar-arrow: case (2) counts the virtual orbit") {
  // p = 2 makes the loop orbit virtual (m n = 2).
  auto l = load("ex33.gtq", "ex33.wts", {{"m", 1}, {"n", 1}, {"p", 2}});
  auto x = basis_at_vertex(l.q, l.sq, l.od, l.w, "iii:x");
  CHECK(x.case_tag == "(2)");
  CHECK(has(x, "iii:xy.iii:yx"));
  CHECK(static_cast<long long>(x.elements.size()) ==
        basis_counts_closed(l.q, l.sq, l.od, l.w, "iii:x").value().value());
}

TEST_CASE("triangulation dimension and bases") {
  SUBCASE("two loops") {
    auto q = glue(two_loops());
    auto sq = star_quiver(q);
    auto od = orbit_data(sq);
    auto w = resolve_weights(sq, od, {});
    CHECK(dimension_triangulation(q, od, w).str() == "4*m_p_loop");
    for (long long m : {2, 3}) {
      auto wm = w;
      wm.bind("m_p_loop", Rational(m));
      auto b = basis_triangulation(q, sq, od, wm, q.vertices[0].id);
      CHECK(static_cast<long long>(b.elements.size()) == 4 * m);
      CHECK(b.case_tag == "(2)");
    }
  }
  SUBCASE("delta of the III+V gluing") {
    auto s = load("ex32.gtq", "ex32.wts");
    auto d = delta_construction(s.q, s.sq, s.od, s.w);
    auto dsq = star_quiver(d.quiver);
    auto dod = orbit_data(dsq);
    CHECK(dimension_triangulation(d.quiver, dod, d.weights).str() == "36*m + n + 13");
    for (long long m : {1, 2})
      for (long long n : {2, 3}) {
        auto w = d.weights;
        w.bind("m", Rational(m));
        w.bind("n", Rational(n));
        long long total = 0;
        for (const auto& v : d.quiver.vertices) {
          auto b = basis_triangulation(d.quiver, dsq, dod, w, v.id);
          CHECK(b.duplicates == 0);
          total += b.elements.size();
        }
        CHECK(total == 36 * m + n + 13);
      }
  }
  SUBCASE("type IV/V blocks are rejected") {
    auto s = load("ex32.gtq", "ex32.wts");
    CHECK_THROWS_AS(dimension_triangulation(s.q, s.od, s.w), NotTriangulationError);
  }
}

TEST_CASE("dimension grows with every weight") {
  auto a = load("ex33.gtq", "ex33.wts", {{"m", 1}, {"n", 1}, {"p", 2}});
  auto base = *dimension_generalized(a.q, a.sq, a.od, a.w).value();
  for (const char* sym : {"m", "n", "p"}) {
    std::map<std::string, long long> bind{{"m", 1}, {"n", 1}, {"p", 2}};
    ++bind[sym];
    auto b = load("ex33.gtq", "ex33.wts", bind);
    CHECK(*dimension_generalized(b.q, b.sq, b.od, b.w).value() > base);
  }
}
