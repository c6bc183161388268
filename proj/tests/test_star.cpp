#include <doctest.h>

#include "gtq/errors.hpp"
#include "support.hpp"

using namespace gtq;

namespace {

bool has_code(const std::vector<Diagnostic>& ds, const std::string& prefix) {
  for (const auto& d : ds)
    if (d.code.rfind(prefix, 0) == 0) return true;
  return false;
}

WeightData weights(const StarQuiver& sq, const OrbitData& od, const std::string& text) {
  return resolve_weights(sq, od, parse_weights(text));
}

}  // namespace

TEST_CASE("star quiver of III + V") {
  auto q = test::quiver("ex32.gtq");
  auto sq = star_quiver(q);
  CHECK(sq.vertices == std::set<std::string>{"iii:x", "iii:y", "v:y1", "v:y2"});
  CHECK(sq.arrows ==
        std::vector<std::string>{"iii:loop", "iii:xy", "iii:yx", "v:epsilon", "v:phi", "v:psi"});
  auto od = orbit_data(sq);
  using C = std::vector<std::vector<std::string>>;
  CHECK(od.g_orbits == C{{"iii:loop"}, {"iii:xy", "v:phi", "v:epsilon", "v:psi", "iii:yx"}});
  CHECK(od.f_orbits == C{{"iii:loop", "iii:xy", "iii:yx"}, {"v:epsilon", "v:psi", "v:phi"}});
  CHECK(od.n == std::vector<int>{1, 5});
  CHECK(od.phi_count == std::vector<int>{0, 1});
  CHECK(od.nu_count == std::vector<int>{0, 0});
  CHECK(od.border.empty());
  for (const auto& a : sq.arrows) {
    CHECK(sq.f.at(sq.f.at(sq.f.at(a))) == a);
    CHECK(sq.bar.at(sq.bar.at(a)) == a);
    CHECK(q.arrow(a).target == q.arrow(sq.f.at(a)).source);
  }
}

TEST_CASE("two loops: one g-orbit, two fixed f-orbits, border") {
  auto q = glue(test::two_loops());
  auto sq = star_quiver(q);
  auto od = orbit_data(sq);
  CHECK(od.g_orbits.size() == 1);
  CHECK(od.g_orbits[0] == std::vector<std::string>{"p:loop", "q:loop"});
  CHECK(od.f_orbits.size() == 2);
  CHECK(od.border == std::set<std::string>{"p:v"});

  auto w = weights(sq, od, "m p:loop 1\n");
  CHECK(has_code(validate_weights(sq, od, w), "restriction (3) violated"));
  CHECK(virtual_arrows(od, w) == std::set<std::string>{"p:loop", "q:loop"});
  w = weights(sq, od, "m p:loop 2\n");
  CHECK(validate_weights(sq, od, w).empty());
  CHECK(virtual_arrows(od, w).empty());
}

TEST_CASE("weights of III + V") {
  auto q = test::quiver("ex32.gtq");
  auto sq = star_quiver(q);
  auto od = orbit_data(sq);

  auto w = weights(sq, od, "m iii:xy 1\nm iii:loop 1\n");
  CHECK(has_code(validate_weights(sq, od, w), "restriction (1) violated"));

  w = weights(sq, od, "m iii:xy 1\nm iii:loop 2\n");
  CHECK(validate_weights(sq, od, w).empty());
  CHECK(virtual_arrows(od, w) == std::set<std::string>{"iii:loop"});

  // symbolic n with the default bound 1 cannot be checked
  w = weights(sq, od, "m iii:xy 1\nm iii:loop n\n");
  CHECK(has_code(validate_weights(sq, od, w), "cannot verify restriction (1)"));
  CHECK_THROWS_AS(virtual_arrows(od, w), IndeterminateError);
  w = weights(sq, od, "m iii:xy 1\nm iii:loop n>=3\n");
  CHECK(validate_weights(sq, od, w).empty());
  CHECK(virtual_arrows(od, w).empty());
  auto w2 = w;
  w.bind("n", 4);
  CHECK(w.m.at("iii:loop").value == 4);
  CHECK_THROWS_AS(w2.bind("n", 2), WeightError);  // below the declared bound
  CHECK_THROWS_AS(w2.bind("n", Rational(7, 2)), WeightError);
}

TEST_CASE("weight defaults and resolution errors") {
  auto q = test::quiver("ex32.gtq");
  auto sq = star_quiver(q);
  auto od = orbit_data(sq);
  auto w = weights(sq, od, "");
  CHECK(w.m.at("iii:xy").symbol == "m_iii_xy");
  CHECK(w.c.at("iii:loop").symbol == "c_iii_loop");
  CHECK(w.b.empty());
  // any arrow of the orbit may name it
  w = weights(sq, od, "m v:psi 3\nc v:phi 1/2\n");
  CHECK(w.m.at("iii:xy").value == 3);
  CHECK(w.c.at("iii:xy").value == Rational(1, 2));
  CHECK_THROWS_AS(weights(sq, od, "m v:psi 3\nm iii:yx 2\n"), WeightError);
  CHECK_THROWS_AS(weights(sq, od, "m v:sigma 3\n"), WeightError);
  CHECK_THROWS_AS(weights(sq, od, "b iii:x 3\n"), WeightError);
  CHECK_THROWS_AS(parse_weights("c v:psi 0\n"), ParseError);
  CHECK_THROWS_AS(parse_weights("m v:psi 0\n"), ParseError);
  CHECK_THROWS_AS(parse_weights("m v:psi\n"), ParseError);
}
