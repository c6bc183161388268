#include "gtq/relations.hpp"

#include <algorithm>
#include <set>

#include "gtq/errors.hpp"
#include "gtq/transforms.hpp"

namespace gtq {

std::string Path::str() const {
  if (arrows.empty()) return "e_" + source;
  std::string out;
  for (const auto& a : arrows) out += (out.empty() ? "" : ".") + a;
  return out;
}

Path stationary_path(const std::string& vertex) { return Path{{}, vertex, vertex}; }

Path make_path(const GenTriQuiver& q, const std::vector<std::string>& arrows) {
  if (arrows.empty()) throw std::logic_error("make_path needs at least one arrow");
  Path p{arrows, q.arrow(arrows.front()).source, q.arrow(arrows.back()).target};
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
    if (q.arrow(arrows[k]).target != q.arrow(arrows[k + 1]).source)
      throw std::logic_error("arrows " + arrows[k] + " and " + arrows[k + 1] + " do not compose");
  return p;
}

Path concat(const Path& a, const Path& b) {
  if (a.target != b.source) throw std::logic_error("cannot compose " + a.str() + " with " + b.str());
  Path p = a;
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  p.target = b.target;
  return p;
}

Path prefix(const GenTriQuiver& q, const Path& p, std::size_t length) {
  if (length > p.length()) throw std::logic_error("prefix longer than path " + p.str());
  if (length == 0) return stationary_path(p.source);
  return make_path(q, {p.arrows.begin(), p.arrows.begin() + static_cast<std::ptrdiff_t>(length)});
}

Path g_walk(const StarQuiver& sq, const std::string& alpha, std::size_t length) {
  if (length == 0) return stationary_path(sq.base.arrow(alpha).source);
  std::vector<std::string> arrows;
  std::string a = alpha;
  for (std::size_t k = 0; k < length; ++k, a = sq.g.at(a)) arrows.push_back(a);
  return make_path(sq.base, arrows);
}

std::string Coefficient::str() const {
  std::string out = to_string(rational);
  for (const auto& s : symbols) out += "*" + s;
  return out;
}

Coefficient coefficient_of(const ParamValue& p, long long sign) {
  if (p.concrete()) return {*p.value * sign, {}};
  return {Rational(sign), {p.symbol}};
}

std::string Relation::str() const {
  std::string out = "family=" + family + " :";
  for (std::size_t k = 0; k < terms.size(); ++k)
    out += std::string(k ? " + " : " ") + terms[k].coeff.str() + "*" + terms[k].path.str();
  return out + " = 0";
}

std::string RelationSet::str() const {
  std::string out;
  for (const auto& r : relations) out += r.str() + "\n";
  return out;
}

std::size_t RelationSet::count(const std::string& family) const {
  return std::count_if(relations.begin(), relations.end(), [&](const Relation& r) { return r.family == family; });
}

long long concrete_m(const OrbitData& od, const WeightData& w, const std::string& arrow) {
  const WeightValue& m = w.m.at(od.rep(arrow));
  if (!m.concrete())
    throw IndeterminateError("weight " + m.symbol + " of the orbit of " + arrow + " must be concrete here");
  return *m.value;
}

StandardPaths standard_paths(const StarQuiver& sq, const OrbitData& od, const WeightData& w,
                             const std::string& alpha) {
  if (!sq.contains(alpha)) throw std::logic_error(alpha + " is not an arrow of Q*");
  auto mn = static_cast<std::size_t>(concrete_m(od, w, alpha) * od.length(alpha));
  StandardPaths sp{g_walk(sq, alpha, mn - 1), g_walk(sq, alpha, mn), std::nullopt};
  if (mn >= 3) sp.A_prime = g_walk(sq, alpha, mn - 2);
  return sp;
}

namespace {

// C*_x: A_x without its first arrow (possibly stationary).
Path c_star(const GenTriQuiver& q, const Path& a) {
  if (a.length() == 1) return stationary_path(a.target);
  return make_path(q, {a.arrows.begin() + 1, a.arrows.end()});
}

Path cycle_through(const GenTriQuiver& q, const std::string& first, const Path& middle, const std::string& last) {
  return concat(concat(make_path(q, {first}), middle), make_path(q, {last}));
}

}  // namespace

std::map<std::string, Path> special_cycles(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od,
                                           const WeightData& w) {
  std::map<std::string, Path> out;
  for (const auto& iv : type_iv_blocks(q))
    out.emplace(iv.alpha, cycle_through(q, iv.alpha, c_star(q, standard_paths(sq, od, w, iv.delta).A), iv.beta));
  for (const auto& v : type_v_blocks(q)) {
    out.emplace(v.eta, cycle_through(q, v.eta, c_star(q, standard_paths(sq, od, w, v.epsilon).A), v.gamma));
    out.emplace(v.omega, cycle_through(q, v.omega, c_star(q, standard_paths(sq, od, w, v.psi).A), v.rho));
  }
  return out;
}

namespace {

Relation finish(const std::string& family, std::vector<Term> terms) {
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (is_zero(t.coeff.rational)) continue;
    auto same = std::find_if(merged.begin(), merged.end(), [&](const Term& m) { return m.path == t.path; });
    if (same == merged.end()) {
      merged.push_back(std::move(t));
      continue;
    }
    if (same->coeff.symbols != t.coeff.symbols)
      throw std::logic_error("relation repeats path " + t.path.str() + " with unlike coefficients");
    same->coeff.rational += t.coeff.rational;
    if (is_zero(same->coeff.rational)) merged.erase(same);
  }
  if (merged.empty()) throw std::logic_error("relation of family " + family + " cancels to zero");
  for (const auto& t : merged)
    if (t.path.source != merged[0].path.source || t.path.target != merged[0].path.target)
      throw std::logic_error("relation of family " + family + " mixes non-parallel paths");
  Rational lead = merged[0].coeff.rational;
  for (auto& t : merged) t.coeff.rational /= lead;
  return {family, std::move(merged)};
}

Term term(const Path& p, Coefficient c = {}) { return {std::move(c), p}; }

class Generator {
 public:
  Generator(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od, const WeightData& w)
      : q_(q), sq_(sq), od_(od), w_(w) {}

  Path P(const std::vector<std::string>& arrows) const { return make_path(q_, arrows); }
  StandardPaths S(const std::string& a) const { return standard_paths(sq_, od_, w_, a); }
  Coefficient neg_c(const std::string& a) const { return coefficient_of(w_.c.at(od_.rep(a)), -1); }
  bool virt(const std::string& a) const { return is_virtual(od_, w_, a); }
  long long m(const std::string& a) const { return concrete_m(od_, w_, a); }
  int n(const std::string& a) const { return od_.length(a); }
  const std::string& f(const std::string& a) const { return sq_.f.at(a); }
  const std::string& g(const std::string& a) const { return sq_.g.at(a); }
  const std::string& bar(const std::string& a) const { return sq_.bar.at(a); }

  // alpha f(alpha) - c_{bar alpha} A_{bar alpha}
  Relation commutativity(const std::string& fam, const std::string& a) const {
    return finish(fam, {term(P({a, f(a)})), term(S(bar(a)).A, neg_c(bar(a)))});
  }
  Relation border(const std::string& fam, const std::string& a) const {
    const std::string& v = q_.arrow(a).source;
    return finish(fam, {term(P({a, a})), term(S(bar(a)).A, neg_c(bar(a))),
                        term(S(a).B, coefficient_of(w_.b.at(v), -1))});
  }
  Relation zero(const std::string& fam, const std::vector<std::string>& arrows) const {
    return finish(fam, {term(P(arrows))});
  }
  Relation zero(const std::string& fam, const Path& p) const { return finish(fam, {term(p)}); }

  // alpha f(alpha) g(f(alpha)), with the escapes of families 5 / (3).
  std::optional<Relation> f_then_g(const std::string& fam, const std::string& a) const {
    const std::string& ab = bar(a);
    if (virt(f(f(a))) || (virt(f(ab)) && m(ab) == 1 && n(ab) == 3)) return std::nullopt;
    return zero(fam, {a, f(a), g(f(a))});
  }
  // alpha g(alpha) f(g(alpha)), with the escapes of families 6 / (4).
  std::optional<Relation> g_then_f(const std::string& fam, const std::string& a) const {
    const std::string& fa = f(a);
    if (virt(fa) || (virt(f(fa)) && m(fa) == 1 && n(fa) == 3)) return std::nullopt;
    return zero(fam, {a, g(a), f(g(a))});
  }

  // Arrows of a block, in id order.
  std::vector<std::string> block_arrows(std::size_t block) const {
    std::vector<std::string> out;
    for (const auto& a : q_.blocks[block].arrows) out.push_back(a.id);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const GenTriQuiver& q_;
  const StarQuiver& sq_;
  const OrbitData& od_;
  const WeightData& w_;
};

void require_concrete(const OrbitData& od, const WeightData& w) {
  for (std::size_t o = 0; o < od.g_orbits.size(); ++o) concrete_m(od, w, od.rep(o));
}

void require_valid(const StarQuiver& sq, const OrbitData& od, const WeightData& w) {
  require_concrete(od, w);
  auto diags = validate_weights(sq, od, w);
  if (!diags.empty()) throw WeightError(diags.front().str());
}

bool small_block(BlockKind k) { return k == BlockKind::I || k == BlockKind::II || k == BlockKind::III; }

}  // namespace

namespace {

// All families, leaving out the blocks listed in skip.
RelationSet generalized(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od, const WeightData& w,
                        const std::set<std::size_t>& skip) {
  require_valid(sq, od, w);
  Generator G(q, sq, od, w);
  RelationSet rs;
  auto add = [&](std::optional<Relation> r) {
    if (r) rs.relations.push_back(std::move(*r));
  };
  std::set<std::string> np;
  for (const auto& iv : type_iv_blocks(q)) np.insert(iv.nu);
  for (const auto& v : type_v_blocks(q)) np.insert(v.phi);

  for (std::size_t b = 0; b < q.blocks.size(); ++b)
    if (q.blocks[b].kind == BlockKind::I && !skip.count(b))
      for (const auto& a : G.block_arrows(b)) add(G.border("1", a));
  for (std::size_t b = 0; b < q.blocks.size(); ++b)
    if ((q.blocks[b].kind == BlockKind::II || q.blocks[b].kind == BlockKind::III) && !skip.count(b))
      for (const auto& a : G.block_arrows(b)) add(G.commutativity("2", a));

  for (const auto& iv : type_iv_blocks(q)) {
    if (skip.count(iv.block)) continue;
    const std::string &nu = iv.nu, &de = iv.delta, &ta = iv.tau;
    add(finish("3", {term(G.P({nu, de})), term(G.P({iv.beta, iv.alpha}), {Rational(-1), {}}),
                     term(G.S(G.bar(nu)).A, G.neg_c(G.bar(nu)))}));
    add(finish("3", {term(G.P({de, ta})), term(G.S(G.bar(de)).A, G.neg_c(G.bar(de)))}));
    add(finish("3", {term(G.P({ta, nu})), term(G.S(G.bar(ta)).A, G.neg_c(G.bar(ta)))}));
    add(G.zero("3", {iv.alpha, ta}));
    add(G.zero("3", {ta, iv.beta}));
    add(G.zero("3", {de, ta, G.g(ta)}));
    if (!G.virt(ta) && !np.count(G.g(de))) add(G.zero("3", {de, G.g(de), G.f(G.g(de))}));
    if (!(G.m(nu) == 1 && G.n(nu) == 3) && !np.count(G.g(ta))) add(G.zero("3", {ta, G.g(ta), G.f(G.g(ta))}));
  }

  for (const auto& v : type_v_blocks(q)) {
    if (skip.count(v.block)) continue;
    const std::string &ph = v.phi, &ep = v.epsilon, &ps = v.psi;
    Coefficient minus1{Rational(-1), {}};
    add(finish("4", {term(G.P({ph, ep})), term(G.P({v.gamma, v.eta}), minus1),
                     term(G.S(G.bar(ph)).A, G.neg_c(G.bar(ph)))}));
    add(finish("4", {term(G.P({ep, ps})), term(G.P({v.rho, v.omega}), minus1),
                     term(G.S(G.bar(ep)).A, G.neg_c(G.bar(ep)))}));
    add(finish("4", {term(G.P({ps, ph})), term(G.S(G.bar(ps)).A, G.neg_c(G.bar(ps)))}));
    add(finish("4", {term(G.P({v.gamma, v.sigma})), term(G.P({ph, v.rho}), minus1)}));
    add(finish("4", {term(G.P({v.sigma, v.omega})), term(G.P({v.eta, ps}), minus1)}));
    add(G.zero("4", {v.omega, v.gamma}));
    add(G.zero("4", {v.omega, ph}));
    add(G.zero("4", {ps, v.gamma}));
    add(G.zero("4", {ph, ep, ps, ph}));
    add(G.zero("4", {ep, ps, ph, ep}));
    add(G.zero("4", {ps, ph, ep, ps}));
    add(G.zero("4", concat(G.S(ph).B, G.P({G.bar(ph)}))));
    if (!np.count(G.g(ps))) add(G.zero("4", {ps, G.g(ps), G.f(G.g(ps))}));
  }

  for (std::size_t b = 0; b < q.blocks.size(); ++b)
    if (small_block(q.blocks[b].kind) && !skip.count(b))
      for (const auto& a : G.block_arrows(b)) add(G.f_then_g("5", a));
  for (std::size_t b = 0; b < q.blocks.size(); ++b)
    if (small_block(q.blocks[b].kind) && !skip.count(b))
      for (const auto& a : G.block_arrows(b))
        if (!np.count(G.g(a))) add(G.g_then_f("6", a));
  return rs;
}

}  // namespace

RelationSet relations_generalized(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od,
                                  const WeightData& w) {
  return generalized(q, sq, od, w, {});
}

RelationSet relations_triangulation(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od,
                                    const WeightData& w) {
  for (const auto& b : q.blocks)
    if (!small_block(b.kind)) throw NotTriangulationError("block " + b.name + " has type " + to_string(b.kind));
  require_valid(sq, od, w);
  Generator G(q, sq, od, w);
  RelationSet rs;
  std::vector<std::string> arrows;  // block order, as in relations_generalized
  for (std::size_t b = 0; b < q.blocks.size(); ++b)
    for (const auto& a : G.block_arrows(b)) arrows.push_back(a);
  for (const auto& a : arrows)
    if (G.f(a) == a) rs.relations.push_back(G.border("1", a));
  for (const auto& a : arrows)
    if (G.f(a) != a) rs.relations.push_back(G.commutativity("2", a));
  for (const auto& a : arrows)
    if (auto r = G.f_then_g("3", a)) rs.relations.push_back(*r);
  for (const auto& a : arrows)
    if (auto r = G.g_then_f("4", a)) rs.relations.push_back(*r);
  return rs;
}

namespace {

using Expansion = std::map<std::string, std::vector<std::pair<Rational, std::vector<std::string>>>>;

// Rewrite every term through the expansion of its arrows, multiplying out.
Relation substitute(const GenTriQuiver& q, const Relation& r, const Expansion& ex) {
  std::vector<Term> out;
  for (const auto& t : r.terms) {
    std::vector<std::pair<Rational, std::vector<std::string>>> partial{{Rational(1), {}}};
    for (const auto& a : t.path.arrows) {
      auto it = ex.find(a);
      std::vector<std::pair<Rational, std::vector<std::string>>> next;
      for (const auto& [c, arrows] : partial) {
        if (it == ex.end()) {
          next.emplace_back(c, arrows);
          next.back().second.push_back(a);
          continue;
        }
        for (const auto& [c2, piece] : it->second) {
          next.emplace_back(c * c2, arrows);
          next.back().second.insert(next.back().second.end(), piece.begin(), piece.end());
        }
      }
      partial = std::move(next);
    }
    if (t.path.stationary()) {
      out.push_back(t);
      continue;
    }
    for (const auto& [c, arrows] : partial) {
      Coefficient k = t.coeff;
      k.rational *= c;
      out.push_back(term(make_path(q, arrows), k));
    }
  }
  return finish(r.family, std::move(out));
}

}  // namespace

RelationSet relations_lambda_dblprime(const MutationResult& stage1) {
  if (stage1.stage != 1) throw StageError("relations of Q'' need a stage-one result");
  const GenTriQuiver& q = stage1.quiver;
  StarQuiver sq = star_quiver(q);
  OrbitData od = orbit_data(sq);
  const WeightData& w = stage1.weights;

  std::set<std::size_t> skip;
  for (std::size_t b = 0; b < q.blocks.size(); ++b)
    for (const auto& reg : stage1.regions)
      if (q.blocks[b].name == reg.p4 || q.blocks[b].name == reg.p2) skip.insert(b);
  RelationSet retained = generalized(q, sq, od, w, skip);
  if (stage1.regions.empty()) return retained;

  // pi_j = psi_j zeta_j and kappa_j = lambda_j epsilon_j - theta_j eta_j hold in the stage-one algebra.
  Expansion ex;
  std::set<std::string> nu;
  for (const auto& iv : type_iv_blocks(q))
    if (!skip.count(iv.block)) nu.insert(iv.nu);
  struct Arrows {
    std::string lambda, epsilon, psi, zeta, theta, eta;
  };
  std::vector<Arrows> regions;
  for (const auto& reg : stage1.regions) {
    const Block* p4 = nullptr;
    const Block* p2 = nullptr;
    for (const auto& b : q.blocks) {
      if (b.name == reg.p4) p4 = &b;
      if (b.name == reg.p2) p2 = &b;
    }
    if (!p4 || !p2) throw StageError("stage-one quiver lacks the blocks of region " + reg.original.name);
    Arrows r{p4->arrow_id("nu"), p4->arrow_id("delta"), p2->arrow_id("ab"),
             p2->arrow_id("bc"), p4->arrow_id("beta"),  p4->arrow_id("alpha")};
    ex[reg.pi] = {{Rational(1), {r.psi, r.zeta}}};
    ex[reg.kappa] = {{Rational(1), {r.lambda, r.epsilon}}, {Rational(-1), {r.theta, r.eta}}};
    regions.push_back(r);
  }

  RelationSet rs;
  for (const auto& r : retained.relations) rs.relations.push_back(substitute(q, r, ex));

  Generator G(q, sq, od, w);
  const std::string fam = "lambda-dblprime";
  Coefficient minus1{Rational(-1), {}};
  for (const auto& r : regions) {
    const std::string& zb = G.bar(r.zeta);
    rs.relations.push_back(finish(fam, {term(G.P({r.lambda, r.epsilon, r.psi})),
                                        term(G.P({r.theta, r.eta, r.psi}), minus1),
                                        term(G.S(r.lambda).A, G.neg_c(r.lambda))}));
    rs.relations.push_back(finish(fam, {term(G.P({r.zeta, r.lambda, r.epsilon})),
                                        term(G.P({r.zeta, r.theta, r.eta}), minus1),
                                        term(G.S(zb).A, G.neg_c(zb))}));
    rs.relations.push_back(
        finish(fam, {term(G.P({r.epsilon, r.psi, r.zeta})), term(G.S(r.epsilon).A, G.neg_c(r.epsilon))}));
    rs.relations.push_back(
        finish(fam, {term(G.P({r.psi, r.zeta, r.lambda})), term(G.S(r.psi).A, G.neg_c(r.psi))}));
    rs.relations.push_back(G.zero(fam, {r.psi, r.zeta, r.theta}));
    rs.relations.push_back(G.zero(fam, {r.eta, r.psi, r.zeta}));
    rs.relations.push_back(G.zero(fam, {r.lambda, r.epsilon, r.psi, r.zeta, r.lambda}));
    rs.relations.push_back(G.zero(fam, {r.epsilon, r.psi, r.zeta, r.lambda, r.epsilon}));
    rs.relations.push_back(G.zero(fam, {r.psi, r.zeta, r.lambda, r.epsilon, r.psi}));
    rs.relations.push_back(G.zero(fam, {r.zeta, r.lambda, r.epsilon, r.psi, r.zeta}));
    rs.relations.push_back(G.zero(fam, concat(G.S(r.lambda).A, G.P({zb}))));
    const std::string& gp = G.g(r.psi);
    if (!nu.count(gp)) rs.relations.push_back(G.zero(fam, {r.psi, gp, G.f(gp)}));
  }
  return rs;
}

}  // namespace gtq
