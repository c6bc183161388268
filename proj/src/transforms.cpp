#include "gtq/transforms.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gtq/errors.hpp"

namespace gtq {

namespace {

using Ids = std::map<std::string, std::string>;

std::string fresh_name(std::set<std::string>& used, std::string base) {
  while (used.count(base)) base += "_";
  used.insert(base);
  return base;
}

// Copy of b with every vertex renamed to its merged id in q.
Block renamed(const GenTriQuiver& q, const Block& b) {
  Ids vids, aids;
  for (const auto& v : b.vertices) vids[v.role] = q.merged(v.id);
  for (const auto& a : b.arrows) aids[a.role] = a.id;
  return build_block(b.kind, b.name, vids, aids);
}

std::map<std::string, std::pair<std::string, std::string>> arrow_ends(const GenTriQuiver& q) {
  std::map<std::string, std::pair<std::string, std::string>> out;
  for (const auto& a : q.arrows) out[a.id] = {a.source, a.target};
  return out;
}

struct Candidate {
  WeightValue m;
  ParamValue c;
  std::string from;  // arrow the value was read from, for messages
};

// One (m, c) per g-orbit of the target; all candidates of an orbit must agree.
WeightData transport(const OrbitData& od, const std::function<std::optional<Candidate>(const std::string&)>& lookup,
                     const std::map<std::string, ParamValue>& b, const std::string& stage) {
  WeightData out;
  for (std::size_t o = 0; o < od.g_orbits.size(); ++o) {
    std::optional<Candidate> chosen;
    for (const auto& a : od.g_orbits[o]) {
      auto cand = lookup(a);
      if (!cand) continue;
      if (!chosen) {
        chosen = cand;
      } else if (!(cand->m == chosen->m) || !(cand->c == chosen->c)) {
        throw WeightError(stage + ": orbit of " + od.rep(o) + " receives " + chosen->m.str() + "/" +
                          chosen->c.str() + " via " + chosen->from + " and " + cand->m.str() + "/" +
                          cand->c.str() + " via " + cand->from);
      }
    }
    if (!chosen) throw std::logic_error(stage + ": no weight reaches the orbit of " + od.rep(o));
    out.m[od.rep(o)] = chosen->m;
    out.c[od.rep(o)] = chosen->c;
  }
  for (const auto& v : od.border) {
    auto it = b.find(v);
    if (it == b.end()) throw std::logic_error(stage + ": no border value for " + v);
    out.b[v] = it->second;
  }
  return out;
}

Candidate read(const OrbitData& od, const WeightData& w, const std::string& arrow, const std::string& from) {
  const std::string& rep = od.rep(arrow);
  return {w.m.at(rep), w.c.at(rep), from};
}

Candidate unit(const std::string& from) { return {WeightValue{1, "", 1}, ParamValue{Rational(1), ""}, from}; }

std::string id_of(const std::string& block, const std::string& tag) {
  std::string t = tag;
  if (!t.empty() && t.back() == '\'') t.back() = 'p';
  return block + ":" + t;
}

std::array<std::string, 3> rotated(Triangle t) {
  std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
  return t;
}

// The identity map, if it is an isomorphism preserving colors, marking and f.
std::optional<Isomorphism> identity_witness(const GenTriQuiver& q1, const StarQuiver& s1, const GenTriQuiver& q2,
                                            const StarQuiver& s2) {
  if (q1.vertices.size() != q2.vertices.size() || q1.arrows.size() != q2.arrows.size()) return std::nullopt;
  Isomorphism iso;
  for (const auto& v : q1.vertices) {
    const Vertex* u = q2.find_vertex(v.id);
    if (!u || u->color != v.color) return std::nullopt;
    iso.vertices[v.id] = v.id;
  }
  if (arrow_ends(q1) != arrow_ends(q2)) return std::nullopt;
  for (const auto& a : q1.arrows) iso.arrows[a.id] = a.id;
  std::set<Triangle> m1, m2;
  for (const auto& t : q1.marking) m1.insert(rotated(t));
  for (const auto& t : q2.marking) m2.insert(rotated(t));
  if (m1 != m2 || s1.f != s2.f) return std::nullopt;
  return iso;
}

}  // namespace

DeltaResult delta_construction(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od,
                               const WeightData& w) {
  DeltaResult d;
  d.source = q;
  d.source_weights = w;

  std::set<std::string> names;
  for (const auto& b : q.blocks) names.insert(b.name);
  std::vector<Block> blocks;
  // Special orbits get m = c = 1; alpha_i, beta_i inherit from tau_i; zeta_j, lambda_j from phi_j.
  std::map<std::string, std::function<Candidate()>> special;

  auto add_ii = [&](const std::string& base, const std::string& owner, Ids vids,
                    const std::array<std::pair<std::string, std::string>, 3>& arrows) {
    Ids aids;
    const char* roles[] = {"ab", "bc", "ca"};
    for (int k = 0; k < 3; ++k) {
      const auto& [id, tag] = arrows[k];
      aids[roles[k]] = id;
      d.arrow_origin[id] = {owner, tag};
    }
    blocks.push_back(build_block(BlockKind::II, fresh_name(names, base), vids, aids));
  };

  for (const auto& b : q.blocks) {
    auto v = [&](const char* role) { return q.merged(b.vertex_id(role)); };
    auto a = [&](const char* role) { return b.arrow_id(role); };
    if (b.kind == BlockKind::IV) {
      std::string xi = id_of(b.name, "xi"), mu = id_of(b.name, "mu");
      add_ii(b.name + "_d1", b.name, {{"a", v("a")}, {"b", v("c")}, {"c", v("d")}},
             {{{a("alpha"), "alpha"}, {xi, "xi"}, {a("delta"), "delta"}}});
      add_ii(b.name + "_d2", b.name, {{"a", v("c")}, {"b", v("b")}, {"c", v("d")}},
             {{{a("beta"), "beta"}, {a("nu"), "nu"}, {mu, "mu"}}});
      for (const auto& s : {xi, mu}) special[s] = [s] { return unit(s); };
      std::string tau = a("tau");
      for (const auto& s : {a("alpha"), a("beta")})
        special[s] = [&od, &w, tau, s] { return read(od, w, tau, s); };
    } else if (b.kind == BlockKind::V) {
      std::string xip = id_of(b.name, "xi'"), mup = id_of(b.name, "mu'"), theta = id_of(b.name, "theta"),
                  lambda = id_of(b.name, "lambda"), kappa = id_of(b.name, "kappa"), zeta = id_of(b.name, "zeta");
      add_ii(b.name + "_c1", b.name, {{"a", v("y1")}, {"b", v("x2")}, {"c", v("y2")}},
             {{{a("eta"), "eta"}, {xip, "xi'"}, {a("epsilon"), "epsilon"}}});
      add_ii(b.name + "_c2", b.name, {{"a", v("x2")}, {"b", v("x1")}, {"c", v("y2")}},
             {{{theta, "theta"}, {lambda, "lambda"}, {mup, "mu'"}}});
      add_ii(b.name + "_c3", b.name, {{"a", v("y1")}, {"b", v("z")}, {"c", v("x1")}},
             {{{a("psi"), "psi"}, {zeta, "zeta"}, {kappa, "kappa"}}});
      for (const auto& s : {xip, mup, theta, kappa, a("eta")}) special[s] = [s] { return unit(s); };
      std::string phi = a("phi");
      for (const auto& s : {zeta, lambda}) special[s] = [&od, &w, phi, s] { return read(od, w, phi, s); };
    } else {
      blocks.push_back(renamed(q, b));
      for (const auto& arrow : b.arrows) d.arrow_origin[arrow.id] = {b.name, arrow.role};
    }
  }
  d.quiver = glue_by_ids(std::move(blocks));

  StarQuiver dsq = star_quiver(d.quiver);
  OrbitData dod = orbit_data(dsq);
  d.weights = transport(
      dod,
      [&](const std::string& a) -> std::optional<Candidate> {
        if (auto it = special.find(a); it != special.end()) return it->second();
        if (sq.contains(a)) return read(od, w, a, a);
        return std::nullopt;
      },
      w.b, "delta");
  return d;
}

std::vector<std::string> virtual_sequence(const DeltaResult& d) {
  std::vector<std::string> xi, xip;
  for (const auto& b : d.source.blocks) {
    if (b.kind == BlockKind::IV) xi.push_back(id_of(b.name, "xi"));
    if (b.kind == BlockKind::V) xip.push_back(id_of(b.name, "xi'"));
  }
  xi.insert(xi.end(), xip.begin(), xip.end());
  for (const auto& id : xi)
    if (!d.arrow_origin.count(id)) throw std::logic_error("missing virtual arrow " + id);
  return xi;
}

std::vector<std::string> detect_exceptional(const DeltaResult& d) {
  const GenTriQuiver& q = d.source;
  std::vector<std::string> out;
  auto iv = type_iv_blocks(q);
  if (iv.empty() && type_v_blocks(q).empty()) {
    out.push_back("singular disc, triangle and tetrahedral shapes: not checked");
    return out;
  }
  if (q.blocks.size() != 2 || iv.size() != 2) return out;
  const TypeIV &t1 = iv[0], &t2 = iv[1];
  if (!(t1.a == t2.b && t1.b == t2.a)) return out;

  StarQuiver sq = star_quiver(q);
  OrbitData od = orbit_data(sq);
  const WeightData& w = d.source_weights;
  const WeightValue& m = w.m.at(od.rep(t1.tau));
  if (m.least() >= 2) return out;
  const ParamValue& cd = w.c.at(od.rep(t1.delta));
  const ParamValue& ct = w.c.at(od.rep(t1.tau));
  if (m.concrete() && cd.concrete() && ct.concrete()) {
    if (*cd.value * *ct.value != Rational(-1)) return out;
    out.push_back("spherical shape: singular, m_{tau1} = 1 and c_{delta1}c_{tau1} = -1");
    return out;
  }
  out.push_back("spherical shape: two type-IV blocks with opposed middle arrows " + t1.tau + ", " + t2.tau);
  if (!m.concrete()) out.push_back("singularity condition m_{tau1} >= 2 unverifiable (" + m.str() + ")");
  if (!cd.concrete() || !ct.concrete())
    out.push_back("singularity condition c_{delta1}c_{tau1} != -1 unverifiable");
  return out;
}

MutationResult mutate_stage1(const DeltaResult& d) {
  const GenTriQuiver& q = d.source;
  MutationResult r;
  r.stage = 1;
  r.source = d.source;
  r.source_weights = d.source_weights;
  r.virtual_sequence = virtual_sequence(d);

  std::set<std::string> names;
  for (const auto& b : q.blocks) names.insert(b.name);
  std::vector<Block> blocks;
  std::map<std::string, std::string> special;  // tau_i -> alpha_i, pi_j -> eta_j

  // Arrow-level rewrite of Q^Delta, used to check the block assembly below.
  auto expected = arrow_ends(d.quiver);
  auto reverse = [&](const std::string& id) { std::swap(expected.at(id).first, expected.at(id).second); };

  for (const auto& b : q.blocks) {
    auto v = [&](const char* role) { return q.merged(b.vertex_id(role)); };
    auto a = [&](const char* role) { return b.arrow_id(role); };
    if (b.kind == BlockKind::IV) {
      blocks.push_back(renamed(q, b));
      special[a("tau")] = a("alpha");
      for (const auto& t : {"xi", "mu"}) expected.erase(id_of(b.name, t));
      reverse(a("alpha"));
      reverse(a("beta"));
      expected[a("tau")] = {v("a"), v("b")};
    } else if (b.kind == BlockKind::V) {
      Region reg;
      reg.original = b;
      reg.pi = id_of(b.name, "pi");
      reg.kappa = id_of(b.name, "kappa");
      reg.p4 = fresh_name(names, b.name + "_p4");
      reg.p2 = fresh_name(names, b.name + "_p2");
      blocks.push_back(build_block(BlockKind::IV, reg.p4,
                                   {{"a", v("y1")}, {"b", v("x1")}, {"c", v("x2")}, {"d", v("y2")}},
                                   {{"tau", reg.pi},
                                    {"beta", id_of(b.name, "theta")},
                                    {"alpha", a("eta")},
                                    {"nu", id_of(b.name, "lambda")},
                                    {"delta", a("epsilon")}}));
      blocks.push_back(build_block(BlockKind::II, reg.p2, {{"a", v("y1")}, {"b", v("z")}, {"c", v("x1")}},
                                   {{"ab", a("psi")}, {"bc", id_of(b.name, "zeta")}, {"ca", reg.kappa}}));
      special[reg.pi] = a("eta");
      for (const auto& t : {"xi'", "mu'"}) expected.erase(id_of(b.name, t));
      reverse(a("eta"));
      reverse(id_of(b.name, "theta"));
      expected[reg.pi] = {v("y1"), v("x1")};
      r.regions.push_back(std::move(reg));
    } else {
      blocks.push_back(renamed(q, b));
    }
  }
  r.quiver = glue_by_ids(std::move(blocks));
  if (arrow_ends(r.quiver) != expected)
    throw std::logic_error("stage one: block assembly differs from the arrow rewrite of Q^Delta");

  StarQuiver dsq = star_quiver(d.quiver);
  OrbitData dod = orbit_data(dsq);
  OrbitData od = orbit_data(star_quiver(r.quiver));
  r.weights = transport(
      od,
      [&](const std::string& a) -> std::optional<Candidate> {
        if (auto it = special.find(a); it != special.end()) return read(dod, d.weights, it->second, a);
        if (dsq.contains(a)) return read(dod, d.weights, a, a);
        return std::nullopt;
      },
      d.weights.b, "stage one");
  return r;
}

MutationResult mutate_stage2(const MutationResult& m1) {
  if (m1.stage != 1) throw StageError("stage two needs a stage-one result, got stage " + std::to_string(m1.stage));
  MutationResult r = m1;
  r.stage = 2;
  if (m1.regions.empty()) return r;

  const GenTriQuiver& q1 = m1.quiver;
  std::map<std::string, const Region*> by_p4;
  std::set<std::string> p2;
  for (const auto& reg : m1.regions) {
    by_p4[reg.p4] = &reg;
    p2.insert(reg.p2);
  }
  std::vector<Block> blocks;
  std::map<std::string, std::string> special;  // phi_j -> lambda_j
  for (const auto& b : q1.blocks) {
    if (p2.count(b.name)) continue;
    auto it = by_p4.find(b.name);
    if (it == by_p4.end()) {
      blocks.push_back(b);
      continue;
    }
    const Block& v = it->second->original;
    blocks.push_back(renamed(m1.source, v));
    special[v.arrow_id("phi")] = id_of(v.name, "lambda");
  }
  r.quiver = glue_by_ids(std::move(blocks));

  StarQuiver sq1 = star_quiver(q1);
  OrbitData od1 = orbit_data(sq1);
  OrbitData od = orbit_data(star_quiver(r.quiver));
  r.weights = transport(
      od,
      [&](const std::string& a) -> std::optional<Candidate> {
        if (auto it = special.find(a); it != special.end()) return read(od1, m1.weights, it->second, a);
        if (sq1.contains(a)) return read(od1, m1.weights, a, a);
        return std::nullopt;
      },
      m1.weights.b, "stage two");
  return r;
}

std::string RoundTripReport::str() const {
  std::ostringstream os;
  if (pass)
    os << "PASS: isomorphism found\n";
  else
    os << "FAIL: round trip does not return the input\n";
  for (const auto& l : lines) os << "  " << l << '\n';
  if (witness) {
    os << "witness:\n";
    for (const auto& [a, b] : witness->vertices) os << "  vertex " << a << " -> " << b << '\n';
    for (const auto& [a, b] : witness->arrows) os << "  arrow " << a << " -> " << b << '\n';
  }
  return os.str();
}

RoundTripReport roundtrip_check(const GenTriQuiver& q, const WeightData& w) {
  RoundTripReport rep;
  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    rep.lines.push_back((cond ? "ok " : "FAIL ") + what);
    ok = ok && cond;
  };
  try {
    StarQuiver sq = star_quiver(q);
    OrbitData od = orbit_data(sq);

    DeltaResult d = delta_construction(q, sq, od, w);
    StarQuiver dsq = star_quiver(d.quiver);
    OrbitData dod = orbit_data(dsq);
    check(validate(d.quiver).empty(), "Q^Delta is a triangulation quiver");
    check(dsq.arrows.size() == d.quiver.arrows.size(), "Q^Delta = (Q^Delta)*");
    bool f3 = true;
    for (const auto& a : dsq.arrows) f3 = f3 && dsq.f.at(dsq.f.at(dsq.f.at(a))) == a;
    check(f3, "f^Delta has order dividing 3");
    check(d.quiver.vertices.size() == q.vertices.size(), "|Q^Delta_0| = |Q_0|");
    check(dod.border == od.border, "border preserved by delta");

    MutationResult m1 = mutate_stage1(d);
    OrbitData od1 = orbit_data(star_quiver(m1.quiver));
    check(validate(m1.quiver).empty(), "stage-one quiver is a generalized triangulation quiver");
    check(od1.border == od.border, "border preserved by stage one");

    MutationResult m2 = mutate_stage2(m1);
    StarQuiver sq2 = star_quiver(m2.quiver);
    OrbitData od2 = orbit_data(sq2);
    check(validate(m2.quiver).empty(), "stage-two quiver is a generalized triangulation quiver");
    check(od2.border == od.border, "border preserved by stage two");

    rep.witness = identity_witness(q, sq, m2.quiver, sq2);
    if (!rep.witness) rep.witness = quiver_isomorphic(q, m2.quiver, {&sq.f, &sq2.f});
    check(rep.witness.has_value(), "stage-two quiver isomorphic to the input (marking and f preserved)");
    if (rep.witness) {
      for (std::size_t o = 0; o < od.g_orbits.size(); ++o) {
        const std::string& r1 = od.rep(o);
        const std::string& r2 = od2.rep(rep.witness->arrows.at(r1));
        bool same = w.m.at(r1) == m2.weights.m.at(r2) && w.c.at(r1) == m2.weights.c.at(r2);
        check(same, "weights of the orbit of " + r1 + ": m=" + w.m.at(r1).str() + " c=" + w.c.at(r1).str() +
                        " -> m=" + m2.weights.m.at(r2).str() + " c=" + m2.weights.c.at(r2).str());
      }
      for (const auto& v : od.border) {
        const std::string& u = rep.witness->vertices.at(v);
        check(od2.border.count(u) && w.b.at(v) == m2.weights.b.at(u), "border value at " + v);
      }
    }
  } catch (const std::exception& e) {
    check(false, std::string("pipeline raised: ") + e.what());
  }
  rep.pass = ok;
  return rep;
}

}  // namespace gtq
