#include "gtq/star.hpp"

#include <algorithm>
#include <cctype>

#include "gtq/errors.hpp"

namespace gtq {

namespace {

// Successor of an arrow role under f, inside its block.
const char* next_role(BlockKind kind, const std::string& role) {
  static const std::map<BlockKind, std::map<std::string, const char*>> table{
      {BlockKind::I, {{"loop", "loop"}}},
      {BlockKind::II, {{"ab", "bc"}, {"bc", "ca"}, {"ca", "ab"}}},
      {BlockKind::III, {{"xy", "yx"}, {"yx", "loop"}, {"loop", "xy"}}},
      {BlockKind::IV, {{"nu", "delta"}, {"delta", "tau"}, {"tau", "nu"}}},
      {BlockKind::V, {{"phi", "epsilon"}, {"epsilon", "psi"}, {"psi", "phi"}}},
  };
  const auto& t = table.at(kind);
  auto it = t.find(role);
  return it == t.end() ? nullptr : it->second;
}

std::vector<std::vector<std::string>> cycles(const std::vector<std::string>& domain,
                                             const std::map<std::string, std::string>& perm) {
  std::vector<std::vector<std::string>> out;
  std::set<std::string> seen;
  for (const auto& a : domain) {  // domain is sorted, so each cycle starts at its least arrow
    if (seen.count(a)) continue;
    std::vector<std::string> cyc;
    for (std::string x = a; !seen.count(x); x = perm.at(x)) {
      seen.insert(x);
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char ch : s) out += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return out;
}

}  // namespace

std::vector<std::string> StarQuiver::out_arrows(const std::string& vertex) const {
  std::vector<std::string> out;
  for (const auto& a : arrows)
    if (base.arrow(a).source == vertex) out.push_back(a);
  return out;
}

StarQuiver star_quiver(const GenTriQuiver& q) {
  StarQuiver sq;
  sq.base = q;
  std::set<std::string> removed;
  for (const auto& t : q.marking)
    for (const auto& id : t) {
      const Arrow& a = q.arrow(id);
      for (const auto& v : {a.source, a.target})
        if (q.vertex(v).color == Color::black) removed.insert(v);
    }
  for (const auto& v : q.vertices)
    if (!removed.count(v.id)) sq.vertices.insert(v.id);
  for (const auto& a : q.arrows)
    if (sq.vertices.count(a.source) && sq.vertices.count(a.target)) sq.arrows.push_back(a.id);

  for (const auto& id : sq.arrows) {
    const Arrow& a = q.arrow(id);
    const Block& b = q.blocks[a.block];
    const char* nr = next_role(b.kind, a.role);
    if (!nr) throw std::logic_error("arrow " + id + " has no f-successor");
    const std::string& next = b.arrow_id(nr);
    if (q.arrow(next).source != a.target) throw std::logic_error("f does not compose at " + id);
    sq.f[id] = next;
  }
  for (const auto& v : sq.vertices) {
    auto out = sq.out_arrows(v);
    if (out.size() == 2) {
      sq.bar[out[0]] = out[1];
      sq.bar[out[1]] = out[0];
    } else {
      for (const auto& a : out) sq.bar[a] = a;
    }
  }
  for (const auto& id : sq.arrows) sq.g[id] = sq.bar.at(sq.f.at(id));
  return sq;
}

OrbitData orbit_data(const StarQuiver& sq) {
  OrbitData od;
  od.f_orbits = cycles(sq.arrows, sq.f);
  od.g_orbits = cycles(sq.arrows, sq.g);
  for (std::size_t i = 0; i < od.g_orbits.size(); ++i) {
    od.n.push_back(static_cast<int>(od.g_orbits[i].size()));
    for (const auto& a : od.g_orbits[i]) od.orbit_of[a] = i;
  }
  od.nu_count.assign(od.g_orbits.size(), 0);
  od.phi_count.assign(od.g_orbits.size(), 0);
  for (const auto& iv : type_iv_blocks(sq.base)) ++od.nu_count[od.orbit(iv.nu)];
  for (const auto& v : type_v_blocks(sq.base)) ++od.phi_count[od.orbit(v.phi)];
  for (const auto& [a, fa] : sq.f)
    if (a == fa) od.border.insert(sq.base.arrow(a).source);
  return od;
}

std::vector<TypeIV> type_iv_blocks(const GenTriQuiver& q) {
  std::vector<TypeIV> out;
  for (std::size_t i = 0; i < q.blocks.size(); ++i) {
    const Block& b = q.blocks[i];
    if (b.kind != BlockKind::IV) continue;
    out.push_back({i, b.arrow_id("alpha"), b.arrow_id("tau"), b.arrow_id("beta"), b.arrow_id("nu"),
                   b.arrow_id("delta"), q.merged(b.vertex_id("a")), q.merged(b.vertex_id("b")),
                   q.merged(b.vertex_id("c")), q.merged(b.vertex_id("d"))});
  }
  return out;
}

std::vector<TypeV> type_v_blocks(const GenTriQuiver& q) {
  std::vector<TypeV> out;
  for (std::size_t i = 0; i < q.blocks.size(); ++i) {
    const Block& b = q.blocks[i];
    if (b.kind != BlockKind::V) continue;
    out.push_back({i, b.arrow_id("epsilon"), b.arrow_id("rho"), b.arrow_id("sigma"), b.arrow_id("eta"),
                   b.arrow_id("psi"), b.arrow_id("omega"), b.arrow_id("gamma"), b.arrow_id("phi"),
                   q.merged(b.vertex_id("z")), q.merged(b.vertex_id("x1")), q.merged(b.vertex_id("x2")),
                   q.merged(b.vertex_id("y1")), q.merged(b.vertex_id("y2"))});
  }
  return out;
}

namespace {

enum class Tri { no, yes, unknown };

Tri virtual_state(const OrbitData& od, const WeightData& w, std::size_t orbit) {
  const WeightValue& m = w.m.at(od.rep(orbit));
  long long n = od.n[orbit];
  if (m.concrete()) return *m.value * n == 2 ? Tri::yes : Tri::no;
  return m.lower_bound * n >= 3 ? Tri::no : Tri::unknown;
}

}  // namespace

std::vector<Diagnostic> validate_weights(const StarQuiver& sq, const OrbitData& od, const WeightData& w) {
  std::vector<Diagnostic> out;
  for (const auto& a : sq.arrows) {
    std::size_t o = od.orbit(a);
    auto mit = w.m.find(od.rep(o));
    if (mit == w.m.end()) {
      out.push_back({"missing weight", a, "no m-value for its orbit"});
      continue;
    }
    const WeightValue& m = mit->second;
    long long mn = m.least() * od.n[o];
    auto check = [&](long long need, const std::string& which) {
      if (mn >= need) return;
      std::string detail = "m*n = " + (m.concrete() ? std::to_string(mn) : m.symbol + "*" + std::to_string(od.n[o])) +
                           ", needs >= " + std::to_string(need);
      if (m.concrete())
        out.push_back({"restriction " + which + " violated", a, detail});
      else
        out.push_back({"cannot verify restriction " + which, a, detail + " (lower bound " +
                                                                    std::to_string(m.lower_bound) + ")"});
    };
    check(2, "(1)");
    const std::string& b = sq.bar.at(a);
    if (b == a) continue;
    Tri v = virtual_state(od, w, od.orbit(b));
    if (v == Tri::no) continue;
    const Arrow& ba = sq.base.arrow(b);
    bool loop = ba.source == ba.target;
    if (v == Tri::yes)
      check(loop ? 4 : 3, loop ? "(3)" : "(2)");
    else if (mn < (loop ? 4 : 3))
      out.push_back({std::string("cannot verify restriction ") + (loop ? "(3)" : "(2)"), a,
                     "virtuality of " + b + " depends on a symbolic weight"});
  }
  for (const auto& [rep, c] : w.c)
    if (c.concrete() && is_zero(*c.value)) out.push_back({"zero parameter", rep, "c must be nonzero"});
  for (const auto& [v, b] : w.b)
    if (!od.border.count(v)) out.push_back({"border value off border", v, "not a border vertex"});
  return out;
}

std::set<std::string> virtual_arrows(const OrbitData& od, const WeightData& w) {
  std::set<std::string> out;
  for (std::size_t o = 0; o < od.g_orbits.size(); ++o) {
    Tri v = virtual_state(od, w, o);
    if (v == Tri::unknown)
      throw IndeterminateError("virtuality of orbit of " + od.rep(o) + " depends on symbolic weight " +
                               w.m.at(od.rep(o)).symbol);
    if (v == Tri::yes) out.insert(od.g_orbits[o].begin(), od.g_orbits[o].end());
  }
  return out;
}

bool is_virtual(const OrbitData& od, const WeightData& w, const std::string& arrow) {
  std::size_t o = od.orbit(arrow);
  Tri v = virtual_state(od, w, o);
  if (v == Tri::unknown)
    throw IndeterminateError("virtuality of " + arrow + " depends on symbolic weight " + w.m.at(od.rep(o)).symbol);
  return v == Tri::yes;
}

WeightData resolve_weights(const StarQuiver& sq, const OrbitData& od, const std::vector<WeightEntry>& entries) {
  WeightData w;
  auto where = [](const WeightEntry& e) { return "line " + std::to_string(e.line) + ": "; };
  for (const auto& e : entries) {
    if (e.kind == 'b') {
      if (!od.border.count(e.key)) throw WeightError(where(e) + e.key + " is not a border vertex");
      if (!w.b.emplace(e.key, parse_param_value(e.value)).second)
        throw WeightError(where(e) + "duplicate border value for " + e.key);
      continue;
    }
    if (!sq.contains(e.key)) throw WeightError(where(e) + e.key + " is not an arrow of Q*");
    const std::string& rep = od.rep(e.key);
    bool fresh = e.kind == 'm' ? w.m.emplace(rep, parse_weight_value(e.value)).second
                               : w.c.emplace(rep, parse_param_value(e.value)).second;
    if (!fresh)
      throw WeightError(where(e) + "duplicate " + std::string(1, e.kind) + "-assignment to the orbit of " + rep);
    if (e.kind == 'c' && w.c.at(rep).concrete() && is_zero(*w.c.at(rep).value))
      throw WeightError(where(e) + "parameter must be nonzero");
  }
  for (std::size_t o = 0; o < od.g_orbits.size(); ++o) {
    const std::string& rep = od.rep(o);
    if (!w.m.count(rep)) w.m[rep] = WeightValue{std::nullopt, "m_" + sanitize(rep), 1};
    if (!w.c.count(rep)) w.c[rep] = ParamValue{std::nullopt, "c_" + sanitize(rep)};
  }
  for (const auto& v : od.border)
    if (!w.b.count(v)) w.b[v] = ParamValue{std::nullopt, "b_" + sanitize(v)};
  return w;
}

}  // namespace gtq
