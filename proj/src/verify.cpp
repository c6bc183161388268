#include "gtq/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gtq/enumeration.hpp"
#include "gtq/errors.hpp"
#include "gtq/io.hpp"
#include "gtq/relations.hpp"
#include "gtq/surface.hpp"
#include "gtq/transforms.hpp"

namespace gtq {

std::string CriterionResult::line() const {
  std::string out = (pass() ? "PASS " : "FAIL ") + std::to_string(number) + " " + title;
  if (!pass()) {
    out += ": " + failures.front();
    if (failures.size() > 1) out += " (+" + std::to_string(failures.size() - 1) + " more)";
  }
  return out;
}

namespace {

using Cycles = std::vector<std::vector<std::string>>;
using Names = std::map<std::string, std::string>;

struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Cycles normalized(Cycles cs) {
  for (auto& c : cs) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(cs.begin(), cs.end());
  return cs;
}

// "phi epsilon psi" -> arrow ids
std::vector<std::string> translate(const Names& names, const std::string& spaced) {
  std::istringstream is(spaced);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(names.at(t));
  return out;
}

std::string dotted(const Names& names, const std::string& spaced) {
  std::string out;
  for (const auto& a : translate(names, spaced)) out += (out.empty() ? "" : ".") + a;
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + x;
  return out;
}

struct Loaded {
  GenTriQuiver q;
  StarQuiver sq;
  OrbitData od;
  WeightData w;
};

Loaded prepare(GenTriQuiver q, const std::vector<WeightEntry>& entries) {
  Loaded l;
  l.q = std::move(q);
  l.sq = star_quiver(l.q);
  l.od = orbit_data(l.sq);
  l.w = resolve_weights(l.sq, l.od, entries);
  return l;
}

class Suite {
 public:
  explicit Suite(std::string dir) : dir_(std::move(dir)) {}

  std::string path(const std::string& name) const { return (std::filesystem::path(dir_) / name).string(); }
  GenTriQuiver quiver(const std::string& name) const { return load_quiver(path(name)); }
  Loaded load(const std::string& gtq, const std::string& wts, const std::map<std::string, long long>& bind = {}) const {
    auto q = quiver(gtq);
    try {
      auto l = prepare(std::move(q), wts.empty() ? std::vector<WeightEntry>{} : load_weights(path(wts)));
      for (const auto& [s, v] : bind) l.w.bind(s, Rational(v));
      return l;
    } catch (const WeightError& e) {
      throw WeightError(wts + ": " + e.what());
    }
  }

  void orbits_of_five_types(Checker& c) const;
  void seven_block_gluing(Checker& c) const;
  void delta_dimension(Checker& c) const;
  void dimension_cross_check(Checker& c) const;
  void triangulation_cross_check(Checker& c) const;
  void relation_spot_checks(Checker& c) const;
  void round_trips(Checker& c) const;
  void surfaces(Checker& c) const;
  void structural_invariants(Checker& c) const;

 private:
  std::string dir_;
};

void Suite::orbits_of_five_types(Checker& c) const {
  const Names n{
      {"phi", "v:phi"},       {"epsilon", "v:epsilon"}, {"psi", "v:psi"},       {"pi", "lam:bc"},
      {"lambda", "lam:ab"},   {"chi", "lam:ca"},        {"alpha4", "a4:ab"},    {"xi4", "a4:bc"},
      {"delta4", "a4:ca"},    {"beta4", "b4:ab"},       {"nu4", "b4:bc"},       {"mu4", "b4:ca"},
      {"alpha5", "a5:ab"},    {"xi5", "a5:bc"},         {"delta5", "a5:ca"},    {"beta5", "b5:ab"},
      {"nu5", "b5:bc"},       {"mu5", "b5:ca"},         {"u1", "u1:ab"},        {"v1", "u1:bc"},
      {"w1", "u1:ca"},        {"u2", "u2:ab"},          {"v2", "u2:bc"},        {"w2", "u2:ca"},
      {"tau1", "iv1:tau"},    {"nu1", "iv1:nu"},        {"delta1", "iv1:delta"}, {"tau2", "iv2:tau"},
      {"nu2", "iv2:nu"},      {"delta2", "iv2:delta"},  {"tau3", "iv3:tau"},    {"nu3", "iv3:nu"},
      {"delta3", "iv3:delta"}, {"theta", "iii:loop"},   {"kappa", "iii:xy"},    {"iota", "iii:yx"},
      {"zeta", "i:loop"},
  };
  Cycles g, f;
  for (const char* s : {"phi epsilon psi pi alpha5 beta5 v2 tau3 tau2 nu1 delta1 v1 alpha4 beta4 lambda",
                        "chi nu4 delta4 w1 zeta u1 tau1 nu2 delta2 nu3 delta3 w2 iota kappa u2 nu5 delta5",
                        "xi5 mu5", "xi4 mu4", "theta"})
    g.push_back(translate(n, s));
  for (const char* s : {"phi epsilon psi", "lambda pi chi", "nu1 delta1 tau1", "nu2 delta2 tau2", "nu3 delta3 tau3",
                        "alpha4 xi4 delta4", "beta4 nu4 mu4", "alpha5 xi5 delta5", "beta5 nu5 mu5", "u1 v1 w1",
                        "u2 v2 w2", "theta kappa iota", "zeta"})
    f.push_back(translate(n, s));

  auto q = quiver("ex23.gtq");
  auto sq = star_quiver(q);
  auto od = orbit_data(sq);
  c.expect(q.blocks.size() == 13, "expected 13 blocks, got " + std::to_string(q.blocks.size()));
  std::vector<int> lengths(od.n.begin(), od.n.end()), want{1, 2, 2, 15, 17};
  std::sort(lengths.begin(), lengths.end());
  c.expect(lengths == want, "g-orbit lengths differ from 15, 17, 2, 2, 1");
  c.expect(normalized(od.g_orbits) == normalized(g), "g-orbit contents differ");
  c.expect(normalized(od.f_orbits) == normalized(f), "f-orbit contents differ");
  std::set<std::string> removed;
  for (const auto& v : q.vertices)
    if (!sq.vertices.count(v.id)) removed.insert(v.id);
  c.expect(removed == std::set<std::string>{"iv1:c", "iv2:c", "iv3:c", "v:x1", "v:x2"},
           "Q* removes the wrong vertices: " + join({removed.begin(), removed.end()}));
}

void Suite::seven_block_gluing(Checker& c) const {
  auto l = load("ex33.gtq", "ex33.wts");
  std::vector<int> lengths(l.od.n.begin(), l.od.n.end());
  std::sort(lengths.begin(), lengths.end());
  c.expect(lengths == std::vector<int>{1, 7, 11}, "g-orbit lengths differ from {11, 7, 1}");
  c.expect(l.od.border == std::set<std::string>{"i:v"},
           "border is {" + join({l.od.border.begin(), l.od.border.end()}) + "}, expected {i:v}");
  for (long long p : {2, 3, 4}) {
    auto b = load("ex33.gtq", "ex33.wts", {{"m", 2}, {"n", 1}, {"p", p}});
    c.expect(is_virtual(b.od, b.w, "iii:loop") == (p == 2),
             "kappa virtual flag wrong at p = " + std::to_string(p));
  }
}

void Suite::delta_dimension(Checker& c) const {
  auto l = load("ex32.gtq", "ex32.wts");
  auto d = delta_construction(l.q, l.sq, l.od, l.w);
  auto dsq = star_quiver(d.quiver);
  auto dod = orbit_data(dsq);
  auto dim = dimension_triangulation(d.quiver, dod, d.weights).str();
  c.expect(dim == "36*m + n + 13", "dimension is " + dim + ", expected 36*m + n + 13");
  Cycles want{{"v:xip", "v:mup"},
              {"v:theta", "v:kappa", "v:eta"},
              {"iii:xy", "v:zeta", "v:lambda", "v:epsilon", "v:psi", "iii:yx"},
              {"iii:loop"}};
  c.expect(normalized(dod.g_orbits) == normalized(want), "g-orbits of Q^Delta differ");

  // the same quiver written out by hand
  auto h = load("ex44.gtq", "ex44.wts");
  auto hdim = dimension_triangulation(h.q, h.od, h.w).str();
  c.expect(hdim == "36*m + n + 13", "ex44.gtq dimension is " + hdim);
  auto sh = star_quiver(h.q);
  c.expect(quiver_isomorphic(d.quiver, h.q, {&dsq.f, &sh.f}).has_value(), "ex44.gtq is not isomorphic to Q^Delta");
}

void Suite::dimension_cross_check(Checker& c) const {
  for (long long m : {1, 2, 3})
    for (long long n : {2, 3, 4}) {
      auto l = load("ex32.gtq", "ex32.wts", {{"m", m}, {"n", n}});
      std::string at = " at (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")";
      long long enumerated = 0, closed = 0;
      for (const auto& v : l.q.vertices) {
        auto b = basis_at_vertex(l.q, l.sq, l.od, l.w, v.id);
        auto k = basis_counts_closed(l.q, l.sq, l.od, l.w, v.id).value();
        c.expect(b.duplicates == 0, "duplicate basis elements at " + v.id + at);
        c.expect(k.has_value() && *k == static_cast<long long>(b.elements.size()),
                 "closed form disagrees at " + v.id + at);
        enumerated += b.elements.size();
        closed += k.value_or(0);
      }
      auto dim = dimension_generalized(l.q, l.sq, l.od, l.w).value();
      c.expect(enumerated == closed, "enumeration " + std::to_string(enumerated) + " != closed forms " +
                                         std::to_string(closed) + at);
      c.expect(dim && *dim == enumerated, "dimension formula disagrees" + at);
    }
}

namespace {

// sum over g-orbits of m_O n_O^2, from concrete weights
long long orbit_sum(const OrbitData& od, const WeightData& w) {
  long long total = 0;
  for (std::size_t i = 0; i < od.g_orbits.size(); ++i) {
    const auto& m = w.m.at(od.rep(i));
    if (!m.concrete()) throw IndeterminateError("weight " + m.symbol + " is symbolic");
    total += *m.value * od.n[i] * od.n[i];
  }
  return total;
}

long long enumerated_triangulation(const Loaded& l, Checker& c, const std::string& at) {
  long long total = 0;
  for (const auto& v : l.q.vertices) {
    auto b = basis_triangulation(l.q, l.sq, l.od, l.w, v.id);
    c.expect(b.duplicates == 0, "duplicate basis elements at " + v.id + at);
    total += b.elements.size();
  }
  return total;
}

}  // namespace

void Suite::triangulation_cross_check(Checker& c) const {
  auto src = load("ex32.gtq", "ex32.wts");
  auto d = delta_construction(src.q, src.sq, src.od, src.w);
  for (long long m : {1, 2, 3})
    for (long long n : {2, 3}) {
      auto l = prepare(d.quiver, {});
      l.w = d.weights;
      l.w.bind("m", Rational(m));
      l.w.bind("n", Rational(n));
      std::string at = " in Q^Delta at (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")";
      long long e = enumerated_triangulation(l, c, at), s = orbit_sum(l.od, l.w);
      c.expect(e == s, "basis " + std::to_string(e) + " != sum m n^2 = " + std::to_string(s) + at);
    }
  GluingSpec loops;
  loops.blocks = {build_block(BlockKind::I, "p"), build_block(BlockKind::I, "q")};
  loops.pairing = {{{0, 0}, {1, 0}}};
  for (long long m : {2, 3, 4}) {
    auto l = prepare(glue(loops), {});
    for (const auto& [rep, w] : std::map<std::string, WeightValue>(l.w.m))
      if (!w.concrete()) l.w.bind(w.symbol, Rational(m));
    std::string at = " for two loops at m = " + std::to_string(m);
    long long e = enumerated_triangulation(l, c, at), s = orbit_sum(l.od, l.w);
    c.expect(e == s, "basis " + std::to_string(e) + " != sum m n^2 = " + std::to_string(s) + at);
  }
}

namespace {

std::set<std::string> monomials(const RelationSet& rs, const std::string& family) {
  std::set<std::string> out;
  for (const auto& r : rs.relations)
    if (r.family == family && r.monomial()) out.insert(r.terms[0].path.str());
  return out;
}

bool contains(const RelationSet& rs, const std::string& line) {
  return std::any_of(rs.relations.begin(), rs.relations.end(), [&](const Relation& r) { return r.str() == line; });
}

}  // namespace

void Suite::relation_spot_checks(Checker& c) const {
  const Names a{{"alpha", "iii:xy"}, {"beta", "iii:yx"},  {"mu", "iii:loop"},  {"phi", "v:phi"},
                {"psi", "v:psi"},    {"gamma", "v:gamma"}, {"omega", "v:omega"}};
  for (long long n : {2, 3, 4}) {
    auto l = load("ex32.gtq", "ex32.wts", {{"m", 1}, {"n", n}});
    auto rs = relations_generalized(l.q, l.sq, l.od, l.w);
    std::string at = " at n = " + std::to_string(n);
    std::string mu_power = a.at("mu");
    for (long long k = 2; k < n; ++k) mu_power += "." + a.at("mu");
    c.expect(contains(rs, "family=2 : 1*" + dotted(a, "alpha beta") + " + -1*d*" + mu_power + " = 0"),
             "alpha beta = d mu^(n-1) missing" + at);
    auto zero = monomials(rs, "4");
    for (const char* s : {"omega gamma", "omega phi", "psi gamma"})
      c.expect(zero.count(dotted(a, s)) == 1, std::string("zero relation ") + s + " missing" + at);
    bool aba = monomials(rs, "5").count(dotted(a, "alpha beta alpha")) == 1;
    bool bab = monomials(rs, "6").count(dotted(a, "beta alpha beta")) == 1;
    c.expect(aba == (n != 2), "alpha beta alpha presence wrong" + at);
    c.expect(bab == (n != 2), "beta alpha beta presence wrong" + at);
  }

  const Names b{{"lambda2", "t2:bc"}, {"nu", "iv:nu"},     {"delta", "iv:delta"}, {"theta3", "t3:ca"},
                {"theta1", "t1:ca"},  {"phi", "v:phi"},    {"epsilon", "v:epsilon"}, {"psi", "v:psi"},
                {"pi1", "t1:ab"},     {"pi2", "t2:ab"},    {"zeta", "i:loop"}};
  for (long long m : {1, 2}) {
    auto l = load("ex33.gtq", "ex33.wts", {{"m", m}, {"n", 1}, {"p", 2}});
    auto rs = relations_generalized(l.q, l.sq, l.od, l.w);
    auto cycle = dotted(b, "lambda2 nu delta theta3 theta1 phi epsilon psi pi1 pi2");
    c.expect(l.od.length("i:loop") == 11, "the orbit through zeta does not have 11 arrows");
    // zeta^2 = a (cycle zeta)^(m-1) cycle + b (zeta cycle)^m
    std::string a_term = cycle, b_term = b.at("zeta") + "." + cycle;
    for (long long k = 1; k < m; ++k) {
      a_term = cycle + "." + b.at("zeta") + "." + a_term;
      b_term += "." + b.at("zeta") + "." + cycle;
    }
    std::string line = "family=1 : 1*" + dotted(b, "zeta zeta") + " + -1*a*" + a_term + " + -1*b*" + b_term + " = 0";
    c.expect(contains(rs, line), "border relation at zeta missing at m = " + std::to_string(m));
  }
}

void Suite::round_trips(Checker& c) const {
  for (const char* name : {"ex32", "ex33", "two_iv"}) {
    std::string n(name);
    auto l = load(n + ".gtq", n == "two_iv" ? "" : n + ".wts");
    auto rep = roundtrip_check(l.q, l.w);
    std::string failed;
    for (const auto& line : rep.lines)
      if (line.rfind("FAIL", 0) == 0) failed = line;
    c.expect(rep.pass && rep.witness.has_value(), n + ": " + (failed.empty() ? "no isomorphism" : failed));
  }
}

void Suite::surfaces(Checker& c) const {
  auto same = [](const GenTriQuiver& x, const GenTriQuiver& y) {
    auto sx = star_quiver(x), sy = star_quiver(y);
    return quiver_isomorphic(x, y, {&sx.f, &sy.f}).has_value();
  };
  auto s53 = surface_to_quiver(load_surface(path("ex53.surf")));
  c.expect(validate(s53).empty(), "ex53.surf quiver does not validate");
  c.expect(same(s53, quiver("ex32.gtq")), "ex53.surf quiver is not isomorphic to ex32.gtq");

  auto tetra = surface_to_quiver(load_surface(path("tetra.surf")));
  auto tsq = star_quiver(tetra);
  auto tod = orbit_data(tsq);
  c.expect(tetra.vertices.size() == 6 && tetra.arrows.size() == 12, "tetrahedral quiver is not 6 vertices, 12 arrows");
  c.expect(tetra.marking.empty() && tsq.arrows.size() == 12, "tetrahedral quiver is not a triangulation quiver");
  bool triangles = tod.g_orbits.size() == 4 && std::all_of(tod.n.begin(), tod.n.end(), [](int k) { return k == 3; });
  c.expect(triangles, "tetrahedral quiver does not have four g-orbits of length 3");
  bool f_triangles = tod.f_orbits.size() == 4 &&
                     std::all_of(tod.f_orbits.begin(), tod.f_orbits.end(), [](auto& o) { return o.size() == 3; });
  c.expect(f_triangles, "tetrahedral quiver does not have four f-orbits of length 3");

  auto disc = surface_to_quiver(load_surface(path("disc.surf")));
  int loops = 0;
  for (const auto& a : disc.arrows) loops += a.source == a.target;
  auto dod = orbit_data(star_quiver(disc));
  bool cycle = std::any_of(dod.f_orbits.begin(), dod.f_orbits.end(), [&](const auto& o) {
    return o.size() == 3 && std::none_of(o.begin(), o.end(), [&](const std::string& a) {
             const auto& x = disc.arrow(a);
             return x.source == x.target;
           });
  });
  c.expect(disc.vertices.size() == 3 && loops == 3 && disc.arrows.size() == 6 && cycle,
           "disc quiver is not 3 loops and a 3-cycle");
}

// Stable text of everything computed for one gluing.
std::string fingerprint(const GenTriQuiver& q) {
  auto sq = star_quiver(q);
  auto od = orbit_data(sq);
  auto w = resolve_weights(sq, od, {});
  std::string out = serialize(q);
  for (const auto& o : od.g_orbits) out += "g " + join(o) + "\n";
  for (const auto& o : od.f_orbits) out += "f " + join(o) + "\n";
  out += dimension_generalized(q, sq, od, w).str() + "\n";
  auto d = delta_construction(q, sq, od, w);
  out += serialize(d.quiver);
  return out;
}

void Suite::structural_invariants(Checker& c) const {
  const unsigned seed = 20240417;
  const std::size_t count = 60;
  auto specs = random_gluings(seed, count, 10);
  c.expect(specs.size() == count, "only " + std::to_string(specs.size()) + " random gluings generated");
  std::string all;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    std::string at = " (random gluing " + std::to_string(i) + ")";
    try {
      auto q = glue(specs[i]);
      c.expect(validate(q).empty(), "validate reports diagnostics" + at);
      auto sq = star_quiver(q);
      bool f3 = true, bar2 = true, ends = true;
      for (const auto& a : sq.arrows) {
        f3 &= sq.f.at(sq.f.at(sq.f.at(a))) == a;
        bar2 &= sq.bar.at(sq.bar.at(a)) == a;
        ends &= q.arrow(a).target == q.arrow(sq.f.at(a)).source;
      }
      c.expect(f3, "f^3 != id" + at);
      c.expect(bar2, "bar^2 != id" + at);
      c.expect(ends, "t(a) != s(f(a))" + at);

      auto od = orbit_data(sq);
      auto partition = [&](const Cycles& cs) {
        std::multiset<std::string> seen;
        for (const auto& o : cs) seen.insert(o.begin(), o.end());
        return seen == std::multiset<std::string>(sq.arrows.begin(), sq.arrows.end());
      };
      c.expect(partition(od.g_orbits), "g-orbits do not partition Q*_1" + at);
      c.expect(partition(od.f_orbits), "f-orbits do not partition Q*_1" + at);

      for (const auto& v : sq.vertices) {
        if (q.vertex(v).color != Color::white) continue;
        int out = 0, in = 0;
        for (const auto& a : sq.arrows) {
          out += q.arrow(a).source == v;
          in += q.arrow(a).target == v;
        }
        c.expect(out == 2 && in == 2, "white vertex " + v + " of Q* is not 2-regular" + at);
      }

      auto w = resolve_weights(sq, od, {});
      auto d = delta_construction(q, sq, od, w);
      auto dsq = star_quiver(d.quiver);
      c.expect(validate(d.quiver).empty(), "Q^Delta does not validate" + at);
      c.expect(dsq.arrows.size() == d.quiver.arrows.size(), "Q^Delta has black vertices" + at);
      c.expect(orbit_data(dsq).border == od.border, "border changes under delta" + at);

      auto first = fingerprint(q);
      c.expect(first == fingerprint(q), "outputs differ between runs" + at);
      c.expect(serialize(glue(parse_gtq(to_gtq(q)))) == serialize(q), "gtq text does not round-trip" + at);
      all += first;
    } catch (const std::exception& e) {
      c.expect(false, e.what() + at);
    }
  }
  std::string again;
  for (const auto& s : random_gluings(seed, count, 10)) {
    try {
      again += fingerprint(glue(s));
    } catch (const std::exception&) {
      again += "error\n";
    }
  }
  c.expect(all == again, "regenerating the random gluings gives different output");
}

}  // namespace

std::vector<GluingSpec> random_gluings(unsigned seed, std::size_t count, std::size_t max_blocks) {
  std::mt19937 rng(seed);
  const BlockKind kinds[] = {BlockKind::I, BlockKind::II, BlockKind::III, BlockKind::IV, BlockKind::V};
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::vector<GluingSpec> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 100 * count; ++attempt) {
    GluingSpec s;
    std::size_t n = 1 + pick(max_blocks);
    for (std::size_t i = 0; i < n; ++i) {
      BlockKind k = kinds[pick(5)];
      s.blocks.push_back(build_block(k, "b" + std::to_string(i)));
    }
    // spanning tree first, so the result is connected
    std::vector<OutletRef> open;
    bool stuck = false;
    for (std::size_t b = 0; b < n && !stuck; ++b) {
      std::vector<OutletRef> mine;
      for (std::size_t o = 0; o < s.blocks[b].outlets.size(); ++o) mine.push_back({b, o});
      std::shuffle(mine.begin(), mine.end(), rng);
      if (b > 0) {
        if (open.empty()) {
          stuck = true;
          break;
        }
        std::size_t j = pick(open.size());
        s.pairing.push_back({open[j], mine.back()});
        open.erase(open.begin() + j);
        mine.pop_back();
      }
      open.insert(open.end(), mine.begin(), mine.end());
    }
    if (stuck || open.size() % 2) continue;
    // pair the rest across blocks
    std::shuffle(open.begin(), open.end(), rng);
    while (!open.empty()) {
      auto x = open.back();
      open.pop_back();
      auto it = std::find_if(open.begin(), open.end(), [&](const OutletRef& y) { return y.block != x.block; });
      if (it == open.end()) break;
      s.pairing.push_back({x, *it});
      open.erase(it);
    }
    if (!open.empty()) continue;
    try {
      if (validate(glue(s)).empty()) out.push_back(std::move(s));
    } catch (const Error&) {
    }
  }
  return out;
}

std::vector<CriterionResult> run_acceptance(const std::string& data_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (data_dir.empty() || !fs::is_directory(data_dir, ec))
    throw UsageError("example directory '" + data_dir + "' does not exist");
  bool any = false;
  for (const auto& e : fs::directory_iterator(data_dir, ec)) {
    auto ext = e.path().extension();
    any |= ext == ".gtq" || ext == ".wts" || ext == ".surf";
  }
  if (!any) throw UsageError("example directory '" + data_dir + "' holds no example files");

  Suite suite(data_dir);
  using Check = void (Suite::*)(Checker&) const;
  const std::vector<std::pair<std::string, Check>> criteria{
      {"five-type gluing: g- and f-orbits", &Suite::orbits_of_five_types},
      {"seven-block gluing: orbit lengths, border, virtual loop", &Suite::seven_block_gluing},
      {"delta of the III+V gluing: 36*m + n + 13 and its orbits", &Suite::delta_dimension},
      {"III+V gluing: enumeration = closed forms = dimension", &Suite::dimension_cross_check},
      {"triangulation bases = sum m n^2", &Suite::triangulation_cross_check},
      {"relation spot checks", &Suite::relation_spot_checks},
      {"round trips through delta and both mutation stages", &Suite::round_trips},
      {"surface pipeline", &Suite::surfaces},
      {"structural invariants on random gluings", &Suite::structural_invariants},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    CriterionResult r{static_cast<int>(i + 1), criteria[i].first, {}};
    Checker c;
    try {
      (suite.*criteria[i].second)(c);
    } catch (const std::exception& e) {
      c.failures.push_back(e.what());
    }
    r.failures = std::move(c.failures);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gtq
