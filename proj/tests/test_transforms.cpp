#include <doctest.h>

#include "gtq/errors.hpp"
#include "gtq/relations.hpp"
#include "gtq/transforms.hpp"
#include "support.hpp"

using namespace gtq;
using namespace gtq::test;

namespace {

std::map<std::string, std::pair<std::string, std::string>> ends(const GenTriQuiver& q) {
  std::map<std::string, std::pair<std::string, std::string>> out;
  for (const auto& a : q.arrows) out[a.id] = {a.source, a.target};
  return out;
}

bool has_monomial(const RelationSet& rs, const std::string& path) {
  for (const auto& r : rs.relations)
    if (r.monomial() && r.terms[0].path.str() == path) return true;
  return false;
}

}  // namespace

TEST_CASE("delta of the III+V gluing") {
  auto l = load("ex32.gtq", "ex32.wts");
  auto d = delta_construction(l.q, l.sq, l.od, l.w);
  CHECK(validate(d.quiver).empty());
  CHECK(d.quiver.vertices.size() == l.q.vertices.size());
  for (const auto& b : d.quiver.blocks) CHECK(b.kind != BlockKind::IV);
  CHECK(d.quiver.count_blocks(BlockKind::V) == 0);

  auto dsq = star_quiver(d.quiver);
  auto dod = orbit_data(dsq);
  CHECK(dsq.arrows.size() == d.quiver.arrows.size());
  // (xi' mu'), (theta kappa eta), (alpha zeta lambda epsilon psi beta), (mu)
  CHECK(normalize(dod.g_orbits) == normalize({{"v:xip", "v:mup"},
                                              {"v:theta", "v:kappa", "v:eta"},
                                              {"iii:xy", "v:zeta", "v:lambda", "v:epsilon", "v:psi", "iii:yx"},
                                              {"iii:loop"}}));
  CHECK(ends(d.quiver).at("v:eta") == std::make_pair(std::string("v:y1"), std::string("v:x2")));
  CHECK(d.arrow_origin.at("v:xip").role == "xi'");
  CHECK(d.arrow_origin.at("v:kappa").block == "v");
  CHECK(d.weights.m.at(dod.rep("v:xip")).value == 1);
  CHECK(d.weights.m.at(dod.rep("v:eta")).value == 1);
  CHECK(d.weights.m.at(dod.rep("v:zeta")).symbol == "m");
  CHECK(d.weights.m.at(dod.rep("iii:loop")).symbol == "n");
  CHECK(d.weights.c.at(dod.rep("v:theta")).value == Rational(1));
  CHECK(dod.border == l.od.border);
  CHECK(virtual_sequence(d) == std::vector<std::string>{"v:xip"});
  CHECK(detect_exceptional(d).empty());
}

TEST_CASE("delta relations of the III+V gluing") {
  auto l = load("ex32.gtq", "ex32.wts", {{"m", 1}, {"n", 2}});
  auto d = delta_construction(l.q, l.sq, l.od, l.w);
  auto dsq = star_quiver(d.quiver);
  auto dod = orbit_data(dsq);
  auto rs = relations_triangulation(d.quiver, dsq, dod, d.weights);
  CHECK(has_monomial(rs, "v:zeta.v:kappa.v:eta"));
  CHECK_FALSE(has_monomial(rs, "v:psi.v:zeta.v:lambda"));
  bool commutes = false;
  for (const auto& r : rs.relations) {
    if (r.terms.size() != 2) continue;
    std::set<std::string> ps{r.terms[0].path.str(), r.terms[1].path.str()};
    commutes = commutes || ps == std::set<std::string>{"v:psi.v:zeta", "v:eta.v:theta"};
  }
  CHECK(commutes);
}

TEST_CASE("delta of the seven-block gluing") {
  auto l = load("ex33.gtq", "ex33.wts");
  auto d = delta_construction(l.q, l.sq, l.od, l.w);
  auto dod = orbit_data(star_quiver(d.quiver));
  CHECK(virtual_sequence(d) == std::vector<std::string>{"iv:xi", "v:xip"});
  CHECK(detect_exceptional(d).empty());
  CHECK(d.weights.m.at(dod.rep("iv:xi")).value == 1);
  CHECK(dod.n[dod.orbit("iv:xi")] == 2);
  // alpha, beta take the weight of tau
  CHECK(d.weights.m.at(dod.rep("iv:alpha")) == l.w.m.at(l.od.rep("iv:tau")));
  CHECK(d.weights.m.at(dod.rep("iv:beta")) == l.w.m.at(l.od.rep("iv:tau")));
  // g-orbit census: s (xi mu), t (xi' mu'), t (theta kappa eta), plus the substituted orbits of Q*
  CHECK(dod.g_orbits.size() == l.od.g_orbits.size() + 3);
  std::map<std::string, std::vector<std::string>> sub;
  for (const auto& iv : type_iv_blocks(l.q)) sub[iv.tau] = {iv.alpha, iv.beta};
  for (const auto& v : type_v_blocks(l.q)) sub[v.phi] = {"v:zeta", "v:lambda"};
  for (const auto& orbit : l.od.g_orbits) {
    std::vector<std::string> expect;
    for (const auto& a : orbit) {
      auto it = sub.find(a);
      if (it == sub.end())
        expect.push_back(a);
      else
        expect.insert(expect.end(), it->second.begin(), it->second.end());
    }
    CHECK(rotate_least(dod.g_orbits[dod.orbit(expect[0])]) == rotate_least(expect));
  }
}

TEST_CASE("blocks I-III: every stage is the identity") {
  auto q = glue(two_loops());
  auto sq = star_quiver(q);
  auto od = orbit_data(sq);
  auto w = resolve_weights(sq, od, {});
  auto d = delta_construction(q, sq, od, w);
  CHECK(ends(d.quiver) == ends(q));
  CHECK(d.weights.m == w.m);
  CHECK(virtual_sequence(d).empty());
  CHECK(detect_exceptional(d) == std::vector<std::string>{"singular disc, triangle and tetrahedral shapes: not checked"});
  auto m1 = mutate_stage1(d);
  auto m2 = mutate_stage2(m1);
  CHECK(ends(m2.quiver) == ends(q));
  CHECK(roundtrip_check(q, w).pass);
}

TEST_CASE("stage one restores type-IV blocks and builds B' regions") {
  SUBCASE("only type IV: Q' = Q with the same marking") {
    auto l = load("two_iv.gtq", "");
    auto m1 = mutate_stage1(delta_construction(l.q, l.sq, l.od, l.w));
    CHECK(ends(m1.quiver) == ends(l.q));
    CHECK(m1.quiver.marking == l.q.marking);
    CHECK(m1.regions.empty());
    CHECK(m1.virtual_sequence == std::vector<std::string>{"p:xi", "q:xi"});
  }
  SUBCASE("III+V") {
    auto l = load("ex32.gtq", "ex32.wts");
    auto d = delta_construction(l.q, l.sq, l.od, l.w);
    auto m1 = mutate_stage1(d);
    CHECK(m1.stage == 1);
    REQUIRE(m1.regions.size() == 1);
    const auto& e = ends(m1.quiver);
    CHECK(e.at("v:pi") == std::make_pair(std::string("v:y1"), std::string("v:x1")));
    CHECK(e.at("v:kappa") == std::make_pair(std::string("v:x1"), std::string("v:y1")));
    CHECK(e.at("v:eta") == std::make_pair(std::string("v:x2"), std::string("v:y1")));
    CHECK(e.at("v:theta") == std::make_pair(std::string("v:x1"), std::string("v:x2")));
    CHECK_FALSE(e.count("v:xip"));
    CHECK_FALSE(e.count("v:mup"));
    CHECK(validate(m1.quiver).empty());
    auto sq1 = star_quiver(m1.quiver);
    auto od1 = orbit_data(sq1);
    CHECK(rotate_least(od1.g_orbits[od1.orbit("v:pi")]) == std::vector<std::string>{"v:kappa", "v:pi"});
    auto dod = orbit_data(star_quiver(d.quiver));
    CHECK(m1.weights.m.at(od1.rep("v:pi")) == d.weights.m.at(dod.rep("v:eta")));
    CHECK(is_virtual(od1, m1.weights, "v:pi"));
  }
}

TEST_CASE("stage two recovers the input") {
  for (const char* name : {"ex32", "ex33"}) {
    CAPTURE(name);
    auto l = load(std::string(name) + ".gtq", std::string(name) + ".wts");
    auto m1 = mutate_stage1(delta_construction(l.q, l.sq, l.od, l.w));
    auto m2 = mutate_stage2(m1);
    CHECK(m2.stage == 2);
    CHECK(ends(m2.quiver) == ends(l.q));
    CHECK(validate(m2.quiver).empty());
    CHECK(quiver_isomorphic(l.q, m2.quiver).has_value());
    CHECK_THROWS_AS(mutate_stage2(m2), StageError);
  }
}

TEST_CASE("round trips") {
  for (const char* name : {"ex32", "ex33", "two_iv"}) {
    CAPTURE(name);
    std::string n(name);
    auto l = load(n + ".gtq", n == "two_iv" ? "" : n + ".wts");
    auto rep = roundtrip_check(l.q, l.w);
    CAPTURE(rep.str());
    CHECK(rep.pass);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->arrows.size() == l.q.arrows.size());
    CHECK(rep.str().rfind("PASS: isomorphism found", 0) == 0);
  }
  auto l = load("ex33.gtq", "ex33.wts", {{"m", 2}, {"n", 1}, {"p", 3}});
  CHECK(roundtrip_check(l.q, l.w).pass);
}

TEST_CASE("spherical shape warnings") {
  auto l = load("two_iv.gtq", "");
  auto d = delta_construction(l.q, l.sq, l.od, l.w);
  auto warnings = detect_exceptional(d);
  REQUIRE_FALSE(warnings.empty());
  CHECK(warnings[0].rfind("spherical shape", 0) == 0);
  bool c_note = false;
  for (const auto& w : warnings) c_note = c_note || w == "singularity condition c_{delta1}c_{tau1} != -1 unverifiable";
  CHECK(c_note);

  const std::string m = l.w.m.at(l.od.rep("p:tau")).symbol;
  const std::string cd = l.w.c.at(l.od.rep("p:delta")).symbol;
  const std::string ct = l.w.c.at(l.od.rep("p:tau")).symbol;
  auto with = [&](long long mv, long long cdv, long long ctv) {
    auto w = l.w;
    w.bind(m, Rational(mv));
    w.bind(cd, Rational(cdv));
    w.bind(ct, Rational(ctv));
    return detect_exceptional(delta_construction(l.q, l.sq, l.od, w));
  };
  CHECK(with(2, 1, -1).empty());
  CHECK(with(1, 2, 1).empty());
  auto singular = with(1, 1, -1);
  REQUIRE(singular.size() == 1);
  CHECK(singular[0].rfind("spherical shape", 0) == 0);

  // Same-direction middle arrows are not spherical.
  GluingSpec s = parse_gtq("block p type IV\nblock q type IV\nglue p.1 q.1\nglue p.2 q.2\n");
  auto q = glue(s);
  auto sq = star_quiver(q);
  auto od = orbit_data(sq);
  auto w = resolve_weights(sq, od, {});
  for (const auto& msg : detect_exceptional(delta_construction(q, sq, od, w)))
    CHECK(msg.rfind("spherical", 0) != 0);
}

TEST_CASE("relations after removing pi and kappa") {
  auto l = load("ex32.gtq", "ex32.wts", {{"m", 1}, {"n", 2}});
  auto m1 = mutate_stage1(delta_construction(l.q, l.sq, l.od, l.w));
  auto rs = relations_lambda_dblprime(m1);
  CHECK(has_monomial(rs, "v:psi.v:zeta.v:theta"));
  CHECK(has_monomial(rs, "v:eta.v:psi.v:zeta"));
  CHECK(has_monomial(rs, "v:zeta.v:lambda.v:epsilon.v:psi.v:zeta"));
  for (const auto& r : rs.relations)
    for (const auto& t : r.terms)
      for (const auto& a : t.path.arrows) {
        CHECK(a != "v:pi");
        CHECK(a != "v:kappa");
      }
  // A_lambda followed by the other arrow at z
  auto sq1 = star_quiver(m1.quiver);
  auto od1 = orbit_data(sq1);
  auto a = concat(standard_paths(sq1, od1, m1.weights, "v:lambda").A,
                  make_path(m1.quiver, {sq1.bar.at("v:zeta")}));
  CHECK(has_monomial(rs, a.str()));
  CHECK(rs.count("lambda-dblprime") == 12);
  CHECK(rs.count("3") == 0);

  SUBCASE("no type-V block: the generalized relations") {
    auto two = load("two_iv.gtq", "");
    auto w = two.w;
    for (const auto& [rep, val] : two.w.m) w.bind(val.symbol, Rational(2));
    auto d = delta_construction(two.q, two.sq, two.od, w);
    auto m = mutate_stage1(d);
    CHECK(relations_lambda_dblprime(m).str() == relations_generalized(two.q, two.sq, two.od, w).str());
  }
}
