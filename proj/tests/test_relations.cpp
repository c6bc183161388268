#include <doctest.h>

#include <set>
#include <sstream>

#include "gtq/errors.hpp"
#include "gtq/relations.hpp"
#include "support.hpp"

using namespace gtq;
using namespace gtq::test;

namespace {

// Translate "alpha beta mu" into dotted arrow ids.
std::string ids(const std::map<std::string, std::string>& names, const std::string& spaced) {
  std::istringstream is(spaced);
  std::string out;
  for (std::string t; is >> t;) out += (out.empty() ? "" : ".") + names.at(t);
  return out;
}

std::set<std::string> monomials(const RelationSet& rs, const std::string& family) {
  std::set<std::string> out;
  for (const auto& r : rs.relations)
    if (r.family == family && r.monomial()) out.insert(r.terms[0].path.str());
  return out;
}

bool contains(const RelationSet& rs, const std::string& line) {
  for (const auto& r : rs.relations)
    if (r.str() == line) return true;
  return false;
}

const std::map<std::string, std::string> ex32_names{
    {"alpha", "iii:xy"}, {"beta", "iii:yx"},     {"mu", "iii:loop"},   {"phi", "v:phi"},
    {"epsilon", "v:epsilon"}, {"psi", "v:psi"},  {"gamma", "v:gamma"}, {"eta", "v:eta"},
    {"rho", "v:rho"},     {"omega", "v:omega"}, {"sigma", "v:sigma"},
};

const std::map<std::string, std::string> ex33_names{
    {"phi", "v:phi"},     {"epsilon", "v:epsilon"}, {"psi", "v:psi"},     {"gamma", "v:gamma"},
    {"eta", "v:eta"},     {"rho", "v:rho"},         {"omega", "v:omega"}, {"sigma", "v:sigma"},
    {"alpha", "iv:alpha"}, {"tau", "iv:tau"},       {"beta", "iv:beta"},  {"nu", "iv:nu"},
    {"delta", "iv:delta"}, {"pi1", "t1:ab"},        {"lambda1", "t1:bc"}, {"theta1", "t1:ca"},
    {"pi2", "t2:ab"},     {"lambda2", "t2:bc"},     {"theta2", "t2:ca"},  {"pi3", "t3:ab"},
    {"lambda3", "t3:bc"}, {"theta3", "t3:ca"},      {"kappa", "iii:loop"}, {"mu", "iii:xy"},
    {"xi", "iii:yx"},     {"zeta", "i:loop"},
};

}  // namespace

TEST_CASE("paths compose and print") {
  auto l = load("ex32.gtq", "ex32.wts", {{"m", 1}, {"n", 2}});
  auto p = make_path(l.q, {"iii:xy", "iii:yx"});
  CHECK(p.source == "iii:x");
  CHECK(p.target == "iii:x");
  CHECK(p.str() == "iii:xy.iii:yx");
  CHECK(stationary_path("iii:x").str() == "e_iii:x");
  CHECK_THROWS_AS(make_path(l.q, {"iii:xy", "iii:xy"}), std::logic_error);
  CHECK(prefix(l.q, p, 1).str() == "iii:xy");
  CHECK(prefix(l.q, p, 0).stationary());
}

TEST_CASE("standard paths along g-orbits") {
  auto l = load("ex32.gtq", "ex32.wts", {{"m", 1}, {"n", 2}});
  auto sp = standard_paths(l.sq, l.od, l.w, "iii:xy");
  CHECK(sp.B.str() == ids(ex32_names, "alpha phi epsilon psi beta"));
  CHECK(sp.A.str() == ids(ex32_names, "alpha phi epsilon psi"));
  CHECK(sp.A_prime->length() == 3);
  CHECK(sp.B.source == sp.B.target);

  auto mu = standard_paths(l.sq, l.od, l.w, "iii:loop");  // n = 2: virtual
  CHECK(mu.A.str() == "iii:loop");
  CHECK_FALSE(mu.A_prime);

  GenTriQuiver q = glue(two_loops());
  auto sq = star_quiver(q);
  auto od = orbit_data(sq);
  auto w = resolve_weights(sq, od, {});
  w.bind("m_p_loop", Rational(2));
  CHECK(standard_paths(sq, od, w, "p:loop").B.str() == "p:loop.q:loop.p:loop.q:loop");

  auto sym = load("ex32.gtq", "ex32.wts");
  CHECK_THROWS_AS(standard_paths(sym.sq, sym.od, sym.w, "iii:xy"), IndeterminateError);
}

TEST_CASE("special cycles through removed vertices") {
  auto l = load("ex32.gtq", "ex32.wts", {{"m", 1}, {"n", 2}});
  auto sc = special_cycles(l.q, l.sq, l.od, l.w);
  CHECK(sc.size() == 2);  // s = 0, t = 1
  CHECK(sc.at("v:eta").str() == ids(ex32_names, "eta psi beta alpha gamma"));
  CHECK(sc.at("v:eta").length() == 5);
  CHECK(sc.at("v:omega").str() == ids(ex32_names, "omega beta alpha phi rho"));

  for (long long m : {1, 2}) {
    auto e = load("ex33.gtq", "ex33.wts", {{"m", m}, {"n", 1}, {"p", 2}});
    auto c = special_cycles(e.q, e.sq, e.od, e.w);
    CHECK(c.at("iv:alpha").length() == static_cast<std::size_t>(11 * m));
    CHECK(c.at("iv:alpha").source == "iv:c");
    CHECK(c.at("iv:alpha").target == "iv:c");
  }
}

TEST_CASE("generalized relations of the III+V gluing") {
  for (long long n : {2, 3, 4}) {
    CAPTURE(n);
    auto l = load("ex32.gtq", "ex32.wts", {{"m", 1}, {"n", n}});
    auto rs = relations_generalized(l.q, l.sq, l.od, l.w);
    std::string mu_power = ids(ex32_names, "mu");
    for (long long k = 2; k < n; ++k) mu_power += ".iii:loop";
    CHECK(contains(rs, "family=2 : 1*iii:xy.iii:yx + -1*d*" + mu_power + " = 0"));
    auto z4 = monomials(rs, "4");
    for (const char* s : {"omega gamma", "omega phi", "psi gamma", "phi epsilon psi phi", "psi beta mu"})
      CHECK(z4.count(ids(ex32_names, s)));
    CHECK(contains(rs, "family=4 : 1*v:gamma.v:sigma + -1*v:phi.v:rho = 0"));
    CHECK(contains(rs, "family=4 : 1*v:sigma.v:omega + -1*v:eta.v:psi = 0"));
    auto z5 = monomials(rs, "5");
    auto z6 = monomials(rs, "6");
    CHECK(z5.count(ids(ex32_names, "mu alpha phi")));
    CHECK(z5.count(ids(ex32_names, "beta mu mu")));
    CHECK(z6.count(ids(ex32_names, "mu mu alpha")));
    CHECK(z5.count(ids(ex32_names, "alpha beta alpha")) == (n >= 3));
    CHECK(z6.count(ids(ex32_names, "beta alpha beta")) == (n >= 3));
    CHECK(rs.count("1") == 0);
    CHECK(rs.count("2") == 3);
    CHECK(rs.count("3") == 0);
    CHECK(rs.count("4") == 13);
  }
}

TEST_CASE("generalized relations of the seven-block gluing") {
  for (long long p : {2, 3}) {
    CAPTURE(p);
    auto l = load("ex33.gtq", "ex33.wts", {{"m", 2}, {"n", 1}, {"p", p}});
    auto rs = relations_generalized(l.q, l.sq, l.od, l.w);
    const auto& N = ex33_names;
    std::string cyc = ids(N, "lambda2 nu delta theta3 theta1 phi epsilon psi pi1 pi2");
    std::string border = "family=1 : 1*i:loop.i:loop + -1*a*" + cyc + ".i:loop." + cyc + " + -1*b*i:loop." + cyc +
                         ".i:loop." + cyc + " = 0";
    CHECK(contains(rs, border));

    std::set<std::string> f3, f5, f6;
    for (const char* s : {"alpha tau", "tau beta", "delta tau theta2", "tau theta2 pi2", "delta theta3 pi3"})
      f3.insert(ids(N, s));
    for (const char* s : {"zeta zeta lambda2", "pi1 lambda1 pi3", "lambda1 theta1 phi", "theta1 pi1 pi2",
                          "pi2 lambda2 nu", "lambda2 theta2 lambda1", "theta2 pi2 zeta", "pi3 lambda3 tau",
                          "lambda3 theta3 theta1", "theta3 pi3 xi", "xi kappa kappa", "kappa mu lambda3"})
      f5.insert(ids(N, s));
    for (const char* s : {"zeta lambda2 theta2", "pi1 pi2 lambda2", "lambda1 pi3 lambda3", "pi2 zeta zeta",
                          "theta2 lambda1 theta1", "pi3 xi kappa", "lambda3 tau nu", "theta3 theta1 pi1",
                          "mu lambda3 theta3", "kappa kappa mu"})
      f6.insert(ids(N, s));
    if (p >= 3) {
      f5.insert(ids(N, "mu xi mu"));
      f6.insert(ids(N, "xi mu xi"));
    }
    CHECK(monomials(rs, "3") == f3);
    CHECK(monomials(rs, "5") == f5);
    CHECK(monomials(rs, "6") == f6);
    CHECK(monomials(rs, "4").count(ids(N, "psi pi1 lambda1")));
    CHECK(rs.count("2") == 12);
  }
}

TEST_CASE("relation invariants") {
  auto l = load("ex33.gtq", "ex33.wts", {{"m", 1}, {"n", 2}, {"p", 2}});
  auto rs = relations_generalized(l.q, l.sq, l.od, l.w);
  for (const auto& r : rs.relations) {
    CHECK(r.terms[0].coeff.rational == Rational(1));
    for (const auto& t : r.terms) {
      CHECK(t.path.source == r.terms[0].path.source);
      CHECK(t.path.target == r.terms[0].path.target);
      for (const auto& a : t.path.arrows) CHECK(l.q.find_arrow(a));
    }
  }
  // raising a weight only lengthens paths; families 1-4 keep their census
  auto l2 = load("ex33.gtq", "ex33.wts", {{"m", 2}, {"n", 3}, {"p", 2}});
  auto rs2 = relations_generalized(l2.q, l2.sq, l2.od, l2.w);
  for (const char* f : {"1", "2", "3", "4"}) CHECK(rs.count(f) == rs2.count(f));

  auto bad = load("ex32.gtq", "ex32.wts", {{"m", 1}});
  CHECK_THROWS_AS(relations_generalized(bad.q, bad.sq, bad.od, bad.w), IndeterminateError);
}

TEST_CASE("triangulation relations") {
  GenTriQuiver q = glue(two_loops());
  auto sq = star_quiver(q);
  auto od = orbit_data(sq);
  auto w = resolve_weights(sq, od, {});
  w.bind("m_p_loop", Rational(2));
  auto rs = relations_triangulation(q, sq, od, w);
  CHECK(contains(rs, "family=1 : 1*p:loop.p:loop + -1*c_p_loop*q:loop.p:loop.q:loop + -1*b_p_v*"
                     "p:loop.q:loop.p:loop.q:loop = 0"));
  CHECK(contains(rs, "family=1 : 1*q:loop.q:loop + -1*c_p_loop*p:loop.q:loop.p:loop + -1*b_p_v*"
                     "q:loop.p:loop.q:loop.p:loop = 0"));
  w.bind("b_p_v", Rational(0));
  auto rs0 = relations_triangulation(q, sq, od, w);
  CHECK(rs0.relations[0].terms.size() == 2);

  auto l = load("ex32.gtq", "ex32.wts", {{"m", 1}, {"n", 2}});
  CHECK_THROWS_AS(relations_triangulation(l.q, l.sq, l.od, l.w), NotTriangulationError);
}

TEST_CASE("both definitions agree on blocks I-III") {
  GluingSpec s;
  s.blocks = {build_block(BlockKind::III, "t"), build_block(BlockKind::I, "u")};
  s.pairing = {{{0, 0}, {1, 0}}};
  for (long long mt : {1, 2, 3}) {
    GenTriQuiver q = glue(s);
    auto sq = star_quiver(q);
    auto od = orbit_data(sq);
    auto w = resolve_weights(sq, od, {});
    for (auto& [rep, m] : w.m) m.value = rep == "t:loop" ? 2 : mt;
    if (!validate_weights(sq, od, w).empty()) continue;
    auto g = relations_generalized(q, sq, od, w);
    auto t = relations_triangulation(q, sq, od, w);
    REQUIRE(g.relations.size() == t.relations.size());
    const std::map<std::string, std::string> fam{{"1", "1"}, {"2", "2"}, {"5", "3"}, {"6", "4"}};
    for (std::size_t k = 0; k < g.relations.size(); ++k) {
      CHECK(fam.at(g.relations[k].family) == t.relations[k].family);
      CHECK(g.relations[k].str().substr(9) == t.relations[k].str().substr(9));
    }
  }
}
