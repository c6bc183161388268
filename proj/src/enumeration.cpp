#include "gtq/enumeration.hpp"

#include <algorithm>
#include <set>

#include "gtq/errors.hpp"

namespace gtq {

DimensionPoly& DimensionPoly::operator+=(const DimensionPoly& o) {
  constant += o.constant;
  for (const auto& [s, c] : o.coeffs) coeffs[s] += c;
  return *this;
}

std::optional<long long> DimensionPoly::value() const {
  for (const auto& [s, c] : coeffs)
    if (c != 0) return std::nullopt;
  return constant;
}

long long DimensionPoly::evaluate(const std::map<std::string, long long>& values) const {
  long long out = constant;
  for (const auto& [s, c] : coeffs) {
    if (c == 0) continue;
    auto it = values.find(s);
    if (it == values.end()) throw IndeterminateError("no value for " + s);
    out += c * it->second;
  }
  return out;
}

std::string DimensionPoly::str() const {
  std::string out;
  for (const auto& [s, c] : coeffs) {
    if (c == 0) continue;
    out += (out.empty() ? "" : " + ") + (c == 1 ? s : std::to_string(c) + "*" + s);
  }
  if (constant != 0 || out.empty()) out += (out.empty() ? "" : " + ") + std::to_string(constant);
  return out;
}

namespace {

// m_eta * k as a polynomial.
DimensionPoly weight_times(const OrbitData& od, const WeightData& w, const std::string& eta, long long k) {
  const WeightValue& m = w.m.at(od.rep(eta));
  DimensionPoly p;
  if (m.concrete())
    p.constant = *m.value * k;
  else
    p.coeffs[m.symbol] = k;
  return p;
}

// m_eta (n_eta + n^nu_eta + 2 n^phi_eta)
DimensionPoly cor_term(const OrbitData& od, const WeightData& w, const std::string& eta) {
  std::size_t o = od.orbit(eta);
  return weight_times(od, w, eta, od.n[o] + od.nu_count[o] + 2LL * od.phi_count[o]);
}

struct Roles {
  std::map<std::string, TypeIV> iv_by_vertex;  // c_i, d_i
  std::map<std::string, TypeV> v_by_vertex;    // x1, x2, y1, y2
  std::map<std::string, TypeIV> by_nu;
  std::map<std::string, TypeV> by_phi;

  explicit Roles(const GenTriQuiver& q) {
    for (const auto& iv : type_iv_blocks(q)) {
      iv_by_vertex.emplace(iv.c, iv);
      iv_by_vertex.emplace(iv.d, iv);
      by_nu.emplace(iv.nu, iv);
    }
    for (const auto& v : type_v_blocks(q)) {
      for (const auto& x : {v.x1, v.x2, v.y1, v.y2}) v_by_vertex.emplace(x, v);
      by_phi.emplace(v.phi, v);
    }
  }
};

class Basis {
 public:
  Basis(const GenTriQuiver& q, const std::string& x) : q_(q) { out_.vertex = x; }

  void add(const Path& p) {
    if (!seen_.insert(p).second) ++out_.duplicates;
  }
  void add(const std::vector<std::string>& arrows) { add(make_path(q_, arrows)); }

  BasisSet finish(std::string tag) {
    out_.case_tag = std::move(tag);
    out_.elements.assign(seen_.begin(), seen_.end());
    return out_;
  }

 private:
  const GenTriQuiver& q_;
  BasisSet out_;
  std::set<Path> seen_;
};

class Enumerator {
 public:
  Enumerator(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od, const WeightData& w)
      : q_(q), sq_(sq), od_(od), w_(w), roles_(q), special_(special_cycles(q, sq, od, w)) {
    for (const auto& [phi, v] : roles_.by_phi) {
      a_psi_.insert(standard_paths(sq, od, w, v.psi).A);
      const Path& bw = special_.at(v.omega);
      a_omega_.insert(prefix(q, bw, bw.length() - 1));
    }
  }

  Path B(const std::string& eta) const {
    if (sq_.contains(eta)) return standard_paths(sq_, od_, w_, eta).B;
    return special_.at(eta);
  }

  // B~_eta = proper prefixes of B_eta, with the u.beta_i and u.gamma_j(.sigma_j) detours.
  void tilde(Basis& out, const std::string& eta) const {
    Path b = B(eta);
    for (std::size_t len = 1; len < b.length(); ++len) {
      Path p = prefix(q_, b, len);
      out.add(p);
      const std::string& last = p.arrows.back();
      Path u = prefix(q_, b, len - 1);
      if (auto it = roles_.by_nu.find(last); it != roles_.by_nu.end())
        out.add(concat(u, make_path(q_, {it->second.beta})));
      if (auto it = roles_.by_phi.find(last); it != roles_.by_phi.end()) {
        out.add(concat(u, make_path(q_, {it->second.gamma})));
        if (!a_psi_.count(p) && !a_omega_.count(p))
          out.add(concat(u, make_path(q_, {it->second.gamma, it->second.sigma})));
      }
    }
  }

  BasisSet at(const std::string& x) const {
    Basis out(q_, x);
    out.add(stationary_path(x));
    if (!sq_.vertices.count(x)) {
      if (auto it = roles_.iv_by_vertex.find(x); it != roles_.iv_by_vertex.end()) {
        return single(out, it->second.alpha, "(3)");
      }
      const TypeV& v = roles_.v_by_vertex.at(x);
      if (x == v.x1) return single(out, v.omega, "(4)");
      tilde(out, v.eta);
      out.add(B(v.eta));
      out.add({v.sigma});
      return out.finish("(5)");
    }
    auto arrows = sq_.out_arrows(x);
    if (arrows.size() == 2) {
      bool v0 = is_virtual(od_, w_, arrows[0]), v1 = is_virtual(od_, w_, arrows[1]);
      if (v0 && v1) throw WeightError("both arrows at " + x + " are virtual");
      if (!v0 && !v1) {
        tilde(out, arrows[0]);
        tilde(out, arrows[1]);
        out.add(B(arrows[0]));
        return out.finish("(1)");
      }
      const std::string& eta = v0 ? arrows[1] : arrows[0];
      tilde(out, eta);
      out.add(B(eta));
      out.add({eta, sq_.f.at(eta)});
      return out.finish("(2)");
    }
    if (auto it = roles_.iv_by_vertex.find(x); it != roles_.iv_by_vertex.end())
      return single(out, it->second.delta, "(3)");
    const TypeV& v = roles_.v_by_vertex.at(x);
    if (x == v.y1) return single(out, v.psi, "(4)");
    tilde(out, v.epsilon);
    out.add(B(v.epsilon));
    out.add({v.rho});
    return out.finish("(6)");
  }

 private:
  BasisSet single(Basis& out, const std::string& eta, const char* tag) const {
    tilde(out, eta);
    out.add(B(eta));
    return out.finish(tag);
  }

  const GenTriQuiver& q_;
  const StarQuiver& sq_;
  const OrbitData& od_;
  const WeightData& w_;
  Roles roles_;
  std::map<std::string, Path> special_;
  std::set<Path> a_psi_, a_omega_;
};

void require_vertex(const GenTriQuiver& q, const std::string& x) {
  if (!q.find_vertex(x)) throw UsageError("no vertex " + x);
}

void require_triangulation(const GenTriQuiver& q) {
  for (const auto& b : q.blocks)
    if (b.kind == BlockKind::IV || b.kind == BlockKind::V)
      throw NotTriangulationError("block " + b.name + " has type " + to_string(b.kind));
}

}  // namespace

BasisSet basis_at_vertex(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od, const WeightData& w,
                         const std::string& x) {
  require_vertex(q, x);
  return Enumerator(q, sq, od, w).at(x);
}

DimensionPoly basis_counts_closed(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od,
                                  const WeightData& w, const std::string& x) {
  require_vertex(q, x);
  Roles roles(q);
  if (auto it = roles.iv_by_vertex.find(x); it != roles.iv_by_vertex.end()) return cor_term(od, w, it->second.delta);
  if (auto it = roles.v_by_vertex.find(x); it != roles.v_by_vertex.end()) return cor_term(od, w, it->second.psi);
  DimensionPoly p;
  for (const auto& a : sq.out_arrows(x)) p += cor_term(od, w, a);
  return p;
}

DimensionPoly dimension_generalized(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od,
                                    const WeightData& w) {
  DimensionPoly p;
  for (const auto& a : sq.arrows) p += cor_term(od, w, a);
  for (const auto& iv : type_iv_blocks(q)) p += cor_term(od, w, iv.delta);
  for (const auto& v : type_v_blocks(q)) {
    p += cor_term(od, w, v.psi);
    p += cor_term(od, w, v.psi);
  }
  return p;
}

DimensionPoly dimension_triangulation(const GenTriQuiver& q, const OrbitData& od, const WeightData& w) {
  require_triangulation(q);
  DimensionPoly p;
  for (std::size_t o = 0; o < od.g_orbits.size(); ++o)
    p += weight_times(od, w, od.rep(o), static_cast<long long>(od.n[o]) * od.n[o]);
  return p;
}

BasisSet basis_triangulation(const GenTriQuiver& q, const StarQuiver& sq, const OrbitData& od, const WeightData& w,
                             const std::string& x) {
  require_triangulation(q);
  require_vertex(q, x);
  auto arrows = sq.out_arrows(x);
  if (arrows.size() != 2) throw StructureError("vertex " + x + " is not 2-regular");
  Basis out(q, x);
  out.add(stationary_path(x));
  bool v0 = is_virtual(od, w, arrows[0]), v1 = is_virtual(od, w, arrows[1]);
  if (v0 && v1) throw WeightError("both arrows at " + x + " are virtual");
  if (v0 || v1) {
    const std::string& other = v0 ? arrows[1] : arrows[0];
    Path b = standard_paths(sq, od, w, other).B;
    for (std::size_t len = 1; len <= b.length(); ++len) out.add(prefix(q, b, len));
    out.add({other, sq.f.at(other)});
    return out.finish("(1)");
  }
  for (const auto& a : arrows) {
    Path b = standard_paths(sq, od, w, a).B;
    for (std::size_t len = 1; len < b.length(); ++len) out.add(prefix(q, b, len));
  }
  out.add(standard_paths(sq, od, w, arrows[0]).B);
  return out.finish("(2)");
}

}  // namespace gtq
