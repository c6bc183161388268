#include "gtq/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "gtq/errors.hpp"
#include "text.hpp"

namespace gtq {

namespace {

struct ArrowShape {
  const char* role;
  const char* source;
  const char* target;
};

struct Shape {
  std::vector<std::pair<std::string, Color>> vertices;
  std::vector<ArrowShape> arrows;
  std::vector<std::string> outlets;
  std::optional<Triangle> marked;
};

const Shape& shape(BlockKind kind) {
  static const Shape I{{{"v", Color::white}}, {{"loop", "v", "v"}}, {"v"}, std::nullopt};
  static const Shape II{{{"a", Color::white}, {"b", Color::white}, {"c", Color::white}},
                        {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}},
                        {"a", "b", "c"},
                        std::nullopt};
  static const Shape III{{{"x", Color::black}, {"y", Color::white}},
                         {{"loop", "x", "x"}, {"xy", "x", "y"}, {"yx", "y", "x"}},
                         {"y"},
                         std::nullopt};
  static const Shape IV{
      {{"a", Color::white}, {"b", Color::white}, {"c", Color::black}, {"d", Color::black}},
      {{"alpha", "c", "a"}, {"tau", "a", "b"}, {"beta", "b", "c"}, {"nu", "b", "d"}, {"delta", "d", "a"}},
      {"a", "b"},
      Triangle{"tau", "beta", "alpha"}};
  static const Shape V{{{"z", Color::white},
                        {"x1", Color::black},
                        {"x2", Color::black},
                        {"y1", Color::black},
                        {"y2", Color::black}},
                       {{"epsilon", "y2", "y1"},
                        {"rho", "y2", "x1"},
                        {"sigma", "x2", "x1"},
                        {"eta", "x2", "y1"},
                        {"psi", "y1", "z"},
                        {"omega", "x1", "z"},
                        {"gamma", "z", "x2"},
                        {"phi", "z", "y2"}},
                       {"z"},
                       Triangle{"sigma", "omega", "gamma"}};
  switch (kind) {
    case BlockKind::I: return I;
    case BlockKind::II: return II;
    case BlockKind::III: return III;
    case BlockKind::IV: return IV;
    case BlockKind::V: return V;
  }
  throw std::invalid_argument("unknown block kind");
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool connected(const GenTriQuiver& q) {
  if (q.vertices.empty()) return true;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& a : q.arrows) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  std::set<std::string> seen{q.vertices.front().id};
  std::vector<std::string> stack{q.vertices.front().id};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == q.vertices.size();
}

std::string outlet_name(const std::vector<Block>& blocks, OutletRef r) {
  return blocks[r.block].name + "." + std::to_string(r.outlet + 1);
}

GenTriQuiver build(const GluingSpec& spec) {
  const auto& blocks = spec.blocks;
  GenTriQuiver q;
  q.blocks = blocks;

  std::set<std::string> names;
  for (const auto& b : blocks)
    if (!names.insert(b.name).second) throw GluingError("duplicate block name " + b.name);

  std::set<OutletRef> used;
  for (auto [x, y] : spec.pairing) {
    for (auto r : {x, y}) {
      if (r.block >= blocks.size() || r.outlet >= blocks[r.block].outlets.size())
        throw GluingError("pairing references a nonexistent outlet");
    }
    if (x == y) throw GluingError("pairing has a fixed point at " + outlet_name(blocks, x));
    if (x.block == y.block)
      throw GluingError("pairing joins two outlets of block " + blocks[x.block].name);
    for (auto r : {x, y})
      if (!used.insert(r).second)
        throw GluingError("pairing is not an involution: " + outlet_name(blocks, r) + " is paired twice");
    q.pairing.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(q.pairing.begin(), q.pairing.end());

  // Global vertex numbering: (block, local index).
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::map<std::pair<std::size_t, std::string>, std::size_t> slot_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t k = 0; k < blocks[b].vertices.size(); ++k) {
      if (!slot_of.emplace(std::make_pair(b, blocks[b].vertices[k].id), slots.size()).second)
        throw GluingError("duplicate vertex id " + blocks[b].vertices[k].id + " in block " + blocks[b].name);
      slots.emplace_back(b, k);
    }
  }
  UnionFind uf(slots.size());
  for (auto [x, y] : q.pairing)
    uf.unite(slot_of.at({x.block, blocks[x.block].outlets[x.outlet]}),
             slot_of.at({y.block, blocks[y.block].outlets[y.outlet]}));

  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t s = 0; s < slots.size(); ++s) classes[uf.find(s)].push_back(s);

  std::map<std::size_t, std::string> merged_id;
  std::set<std::string> taken;
  for (const auto& [root, members] : classes) {
    Vertex v;
    std::set<std::string> aliases;
    bool white = false;
    for (auto s : members) {
      const auto& bv = blocks[slots[s].first].vertices[slots[s].second];
      aliases.insert(bv.id);
      white = white || bv.color == Color::white;
    }
    v.aliases.assign(aliases.begin(), aliases.end());
    v.id = v.aliases.front();
    v.color = white ? Color::white : Color::black;
    if (members.size() == 1) v.role = blocks[slots[members[0]].first].vertices[slots[members[0]].second].role;
    for (const auto& a : v.aliases) {
      if (!taken.insert(a).second) throw GluingError("vertex name " + a + " used by two unglued vertices");
      q.alias_to_vertex[a] = v.id;
    }
    merged_id[root] = v.id;
    q.vertices.push_back(std::move(v));
  }

  std::set<std::string> arrow_ids;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& a : blocks[b].arrows) {
      if (!arrow_ids.insert(a.id).second) throw GluingError("duplicate arrow id " + a.id);
      Arrow m = a;
      m.source = merged_id.at(uf.find(slot_of.at({b, a.source})));
      m.target = merged_id.at(uf.find(slot_of.at({b, a.target})));
      m.block = b;
      q.arrows.push_back(std::move(m));
    }
    if (blocks[b].marked_triangle) {
      Triangle t;
      for (int i = 0; i < 3; ++i) t[i] = blocks[b].arrow_id((*blocks[b].marked_triangle)[i]);
      q.marking.push_back(t);
    }
  }

  std::sort(q.vertices.begin(), q.vertices.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::sort(q.arrows.begin(), q.arrows.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < q.vertices.size(); ++i) q.vertex_index[q.vertices[i].id] = i;
  for (std::size_t i = 0; i < q.arrows.size(); ++i) q.arrow_index[q.arrows[i].id] = i;
  return q;
}

}  // namespace

std::string to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::I: return "I";
    case BlockKind::II: return "II";
    case BlockKind::III: return "III";
    case BlockKind::IV: return "IV";
    case BlockKind::V: return "V";
  }
  return "?";
}

std::optional<BlockKind> parse_block_kind(std::string_view text) {
  if (text == "I") return BlockKind::I;
  if (text == "II") return BlockKind::II;
  if (text == "III") return BlockKind::III;
  if (text == "IV") return BlockKind::IV;
  if (text == "V") return BlockKind::V;
  return std::nullopt;
}

const std::vector<std::string>& block_vertex_roles(BlockKind kind) {
  static std::map<BlockKind, std::vector<std::string>> cache;
  auto it = cache.find(kind);
  if (it == cache.end()) {
    std::vector<std::string> roles;
    for (const auto& [r, c] : shape(kind).vertices) roles.push_back(r);
    it = cache.emplace(kind, roles).first;
  }
  return it->second;
}

const std::vector<std::string>& block_arrow_roles(BlockKind kind) {
  static std::map<BlockKind, std::vector<std::string>> cache;
  auto it = cache.find(kind);
  if (it == cache.end()) {
    std::vector<std::string> roles;
    for (const auto& a : shape(kind).arrows) roles.push_back(a.role);
    it = cache.emplace(kind, roles).first;
  }
  return it->second;
}

const Vertex& Block::vertex_by_role(std::string_view role) const {
  for (const auto& v : vertices)
    if (v.role == role) return v;
  throw std::out_of_range("block " + name + " has no vertex role " + std::string(role));
}

const Arrow& Block::arrow_by_role(std::string_view role) const {
  for (const auto& a : arrows)
    if (a.role == role) return a;
  throw std::out_of_range("block " + name + " has no arrow role " + std::string(role));
}

Block build_block(BlockKind kind, const std::string& name) { return build_block(kind, name, {}, {}); }

Block build_block(BlockKind kind, const std::string& name, const std::map<std::string, std::string>& vertex_ids,
                  const std::map<std::string, std::string>& arrow_ids) {
  const Shape& s = shape(kind);
  auto pick = [&](const std::map<std::string, std::string>& ids, const std::string& role) {
    auto it = ids.find(role);
    return it != ids.end() ? it->second : name + ":" + role;
  };
  Block b;
  b.name = name;
  b.kind = kind;
  std::map<std::string, std::string> vid;
  for (const auto& [role, color] : s.vertices) {
    Vertex v;
    v.id = pick(vertex_ids, role);
    v.color = color;
    v.role = role;
    v.aliases = {v.id};
    vid[role] = v.id;
    b.vertices.push_back(v);
  }
  for (const auto& a : s.arrows) {
    Arrow arrow;
    arrow.id = pick(arrow_ids, a.role);
    arrow.source = vid.at(a.source);
    arrow.target = vid.at(a.target);
    arrow.role = a.role;
    b.arrows.push_back(arrow);
  }
  for (const auto& o : s.outlets) b.outlets.push_back(vid.at(o));
  b.marked_triangle = s.marked;
  return b;
}

const Vertex* GenTriQuiver::find_vertex(std::string_view id) const {
  auto it = vertex_index.find(id);
  return it == vertex_index.end() ? nullptr : &vertices[it->second];
}

const Arrow* GenTriQuiver::find_arrow(std::string_view id) const {
  auto it = arrow_index.find(id);
  return it == arrow_index.end() ? nullptr : &arrows[it->second];
}

const Vertex& GenTriQuiver::vertex(std::string_view id) const {
  if (auto* v = find_vertex(id)) return *v;
  throw std::out_of_range("no vertex " + std::string(id));
}

const Arrow& GenTriQuiver::arrow(std::string_view id) const {
  if (auto* a = find_arrow(id)) return *a;
  throw std::out_of_range("no arrow " + std::string(id));
}

std::vector<const Arrow*> GenTriQuiver::out_arrows(std::string_view v) const {
  std::vector<const Arrow*> out;
  for (const auto& a : arrows)
    if (a.source == v) out.push_back(&a);
  return out;
}

std::vector<const Arrow*> GenTriQuiver::in_arrows(std::string_view v) const {
  std::vector<const Arrow*> in;
  for (const auto& a : arrows)
    if (a.target == v) in.push_back(&a);
  return in;
}

const std::string& GenTriQuiver::merged(std::string_view alias) const {
  auto it = alias_to_vertex.find(alias);
  if (it == alias_to_vertex.end()) throw std::out_of_range("no vertex alias " + std::string(alias));
  return it->second;
}

std::size_t GenTriQuiver::count_blocks(BlockKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.kind == kind; }));
}

bool GenTriQuiver::paired(OutletRef outlet) const {
  return std::any_of(pairing.begin(), pairing.end(),
                     [&](const auto& p) { return p.first == outlet || p.second == outlet; });
}

GenTriQuiver glue(const GluingSpec& spec) {
  GenTriQuiver q = build(spec);
  if (!connected(q)) throw ConnectivityError("glued quiver is not connected");
  return q;
}

GenTriQuiver assemble(const GluingSpec& spec) { return build(spec); }

GenTriQuiver glue_by_ids(std::vector<Block> blocks) {
  std::map<std::string, std::vector<OutletRef>> at;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t k = 0; k < blocks[b].outlets.size(); ++k) at[blocks[b].outlets[k]].push_back({b, k});
  GluingSpec spec;
  spec.blocks = std::move(blocks);
  for (const auto& [id, refs] : at) {
    if (refs.size() > 2) throw std::logic_error("vertex " + id + " lies on " + std::to_string(refs.size()) + " outlets");
    if (refs.size() == 2) spec.pairing.emplace_back(refs[0], refs[1]);
  }
  return glue(spec);
}


std::string Diagnostic::str() const { return code + ": " + subject + (message.empty() ? "" : " (" + message + ")"); }

std::vector<Diagnostic> validate(const GenTriQuiver& q) {
  std::vector<Diagnostic> out;
  for (std::size_t b = 0; b < q.blocks.size(); ++b) {
    const Block& block = q.blocks[b];
    const Shape& s = shape(block.kind);
    bool shape_ok = block.vertices.size() == s.vertices.size() && block.arrows.size() == s.arrows.size() &&
                    block.outlets.size() == s.outlets.size();
    if (shape_ok) {
      for (const auto& a : s.arrows) {
        auto it = std::find_if(block.arrows.begin(), block.arrows.end(),
                               [&](const Arrow& x) { return x.role == a.role; });
        if (it == block.arrows.end() || block.vertex_by_role(a.source).id != it->source ||
            block.vertex_by_role(a.target).id != it->target) {
          shape_ok = false;
          break;
        }
      }
    }
    if (!shape_ok)
      out.push_back({"block shape", block.name, "does not match type " + to_string(block.kind)});
    if (block.marked_triangle.has_value() != (block.kind == BlockKind::IV || block.kind == BlockKind::V))
      out.push_back({"marking", block.name, "marked triangle required exactly for types IV and V"});
    for (std::size_t k = 0; k < block.outlets.size(); ++k)
      if (!q.paired({b, k}))
        out.push_back({"unpaired outlet", block.name + "." + std::to_string(k + 1), "vertex " + block.outlets[k]});
  }
  for (const auto& a : q.arrows)
    if (!q.find_vertex(a.source) || !q.find_vertex(a.target))
      out.push_back({"arrow endpoint missing", a.id, ""});
  if (!connected(q)) out.push_back({"not connected", "quiver", ""});
  // Arrows touching the black vertices of a marked triangle do not count: the 2-regularity
  // of outlets is a statement about Q*, where those vertices are gone.
  std::set<std::string> hidden;
  for (const auto& t : q.marking)
    for (const auto& id : t)
      if (const Arrow* a = q.find_arrow(id))
        for (const auto* v : {&a->source, &a->target})
          if (const Vertex* x = q.find_vertex(*v); x && x->color == Color::black) hidden.insert(*v);
  auto visible = [&](const std::vector<const Arrow*>& as) {
    return std::count_if(as.begin(), as.end(),
                         [&](const Arrow* a) { return !hidden.count(a->source) && !hidden.count(a->target); });
  };
  for (const auto& v : q.vertices) {
    if (v.color != Color::white || v.aliases.size() < 2) continue;
    auto in = visible(q.in_arrows(v.id)), outd = visible(q.out_arrows(v.id));
    if (in != 2 || outd != 2)
      out.push_back({"white vertex not 2-regular", v.id,
                     "in=" + std::to_string(in) + " out=" + std::to_string(outd)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

struct IsoView {
  const GenTriQuiver* q;
  std::size_t nv = 0;
  std::vector<int> color, indeg, outdeg, loops;
  std::vector<std::vector<int>> count;              // count[u][v] arrows u->v
  std::map<std::pair<int, int>, std::vector<int>> between;  // arrow indices u->v
  std::vector<std::vector<int>> neighbours;
  std::vector<int> src, tgt;
  std::vector<int> perm;       // arrow -> arrow or -1
  std::vector<int> perm_inv;   // preimage or -1
  std::vector<char> marked;
  std::set<Triangle> triangles;  // rotation-normalised arrow index triples encoded as strings
  std::vector<std::string> signature;

  IsoView(const GenTriQuiver& g, const std::map<std::string, std::string>* p) : q(&g) {
    nv = g.vertices.size();
    color.resize(nv);
    indeg.assign(nv, 0);
    outdeg.assign(nv, 0);
    loops.assign(nv, 0);
    count.assign(nv, std::vector<int>(nv, 0));
    neighbours.resize(nv);
    for (std::size_t i = 0; i < nv; ++i) color[i] = g.vertices[i].color == Color::white ? 0 : 1;
    for (std::size_t k = 0; k < g.arrows.size(); ++k) {
      int s = static_cast<int>(g.vertex_index.find(g.arrows[k].source)->second);
      int t = static_cast<int>(g.vertex_index.find(g.arrows[k].target)->second);
      src.push_back(s);
      tgt.push_back(t);
      ++outdeg[s];
      ++indeg[t];
      if (s == t) ++loops[s];
      ++count[s][t];
      between[{s, t}].push_back(static_cast<int>(k));
      neighbours[s].push_back(t);
      neighbours[t].push_back(s);
    }
    for (auto& n : neighbours) {
      std::sort(n.begin(), n.end());
      n.erase(std::unique(n.begin(), n.end()), n.end());
    }
    perm.assign(g.arrows.size(), -1);
    perm_inv.assign(g.arrows.size(), -1);
    if (p) {
      for (const auto& [a, b] : *p) {
        auto ia = g.arrow_index.find(a), ib = g.arrow_index.find(b);
        if (ia == g.arrow_index.end() || ib == g.arrow_index.end()) continue;
        perm[ia->second] = static_cast<int>(ib->second);
        perm_inv[ib->second] = static_cast<int>(ia->second);
      }
    }
    marked.assign(g.arrows.size(), 0);
    for (const auto& t : g.marking)
      for (const auto& a : t) marked[g.arrow_index.find(a)->second] = 1;
    // Refined vertex signatures: local degrees plus the multiset of neighbour degrees.
    std::vector<std::string> base(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      std::ostringstream os;
      os << color[i] << '/' << indeg[i] << '/' << outdeg[i] << '/' << loops[i];
      base[i] = os.str();
    }
    signature.resize(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      std::vector<std::string> outs, ins;
      for (std::size_t j = 0; j < nv; ++j) {
        for (int c = 0; c < count[i][j]; ++c) outs.push_back(base[j]);
        for (int c = 0; c < count[j][i]; ++c) ins.push_back(base[j]);
      }
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      std::ostringstream os;
      os << base[i] << '|';
      for (const auto& s : outs) os << s << ',';
      os << '|';
      for (const auto& s : ins) os << s << ',';
      signature[i] = os.str();
    }
  }
};

std::array<int, 3> normalise(std::array<int, 3> t) {
  auto it = std::min_element(t.begin(), t.end());
  std::rotate(t.begin(), it, t.end());
  return t;
}

class IsoSearch {
 public:
  IsoSearch(const IsoView& a, const IsoView& b) : a_(a), b_(b) {}

  std::optional<Isomorphism> run() {
    if (a_.nv != b_.nv || a_.src.size() != b_.src.size() || a_.q->marking.size() != b_.q->marking.size())
      return std::nullopt;
    std::vector<std::string> sa = a_.signature, sb = b_.signature;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    order_vertices();
    vmap_.assign(a_.nv, -1);
    vused_.assign(b_.nv, 0);
    amap_.assign(a_.src.size(), -1);
    aused_.assign(b_.src.size(), 0);
    for (const auto& t : b_.q->marking) {
      std::array<int, 3> x;
      for (int i = 0; i < 3; ++i) x[i] = static_cast<int>(b_.q->arrow_index.find(t[i])->second);
      btri_.insert(normalise(x));
    }
    if (!place_vertex(0)) return std::nullopt;
    Isomorphism iso;
    for (std::size_t i = 0; i < a_.nv; ++i) iso.vertices[a_.q->vertices[i].id] = b_.q->vertices[vmap_[i]].id;
    for (std::size_t k = 0; k < amap_.size(); ++k) iso.arrows[a_.q->arrows[k].id] = b_.q->arrows[amap_[k]].id;
    return iso;
  }

 private:
  void order_vertices() {
    std::vector<char> seen(a_.nv, 0);
    parent_.assign(a_.nv, -1);
    for (std::size_t start = 0; start < a_.nv; ++start) {
      if (seen[start]) continue;
      std::queue<int> bfs;
      bfs.push(static_cast<int>(start));
      seen[start] = 1;
      while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        order_.push_back(v);
        for (int w : a_.neighbours[v])
          if (!seen[w]) {
            seen[w] = 1;
            parent_[w] = v;
            bfs.push(w);
          }
      }
    }
  }

  bool consistent(int v, int w) const {
    if (a_.signature[v] != b_.signature[w]) return false;
    for (std::size_t u = 0; u < a_.nv; ++u) {
      if (vmap_[u] < 0) continue;
      if (a_.count[v][u] != b_.count[w][vmap_[u]] || a_.count[u][v] != b_.count[vmap_[u]][w]) return false;
    }
    return a_.count[v][v] == b_.count[w][w];
  }

  bool place_vertex(std::size_t pos) {
    if (pos == order_.size()) return place_arrow(0);
    int v = order_[pos];
    std::vector<int> candidates;
    if (parent_[v] >= 0) {
      candidates = b_.neighbours[vmap_[parent_[v]]];
    } else {
      candidates.resize(b_.nv);
      std::iota(candidates.begin(), candidates.end(), 0);
    }
    for (int w : candidates) {
      if (vused_[w] || !consistent(v, w)) continue;
      vmap_[v] = w;
      vused_[w] = 1;
      if (place_vertex(pos + 1)) return true;
      vmap_[v] = -1;
      vused_[w] = 0;
    }
    return false;
  }

  bool arrow_ok(int x, int y) const {
    if (a_.marked[x] != b_.marked[y]) return false;
    if ((a_.perm[x] >= 0) != (b_.perm[y] >= 0)) return false;
    if (a_.perm[x] >= 0 && amap_[a_.perm[x]] >= 0 && amap_[a_.perm[x]] != b_.perm[y]) return false;
    int pre = a_.perm_inv[x];
    if (pre >= 0 && amap_[pre] >= 0 && b_.perm[amap_[pre]] != y) return false;
    if (a_.perm[x] == x && b_.perm[y] != y) return false;
    return true;
  }

  bool markings_match() const {
    for (const auto& t : a_.q->marking) {
      std::array<int, 3> x;
      for (int i = 0; i < 3; ++i) x[i] = amap_[a_.q->arrow_index.find(t[i])->second];
      if (!btri_.count(normalise(x))) return false;
    }
    return true;
  }

  bool place_arrow(std::size_t k) {
    if (k == amap_.size()) return markings_match();
    int s = vmap_[a_.src[k]], t = vmap_[a_.tgt[k]];
    auto it = b_.between.find({s, t});
    if (it == b_.between.end()) return false;
    for (int y : it->second) {
      if (aused_[y] || !arrow_ok(static_cast<int>(k), y)) continue;
      amap_[k] = y;
      aused_[y] = 1;
      if (place_arrow(k + 1)) return true;
      amap_[k] = -1;
      aused_[y] = 0;
    }
    return false;
  }

  const IsoView& a_;
  const IsoView& b_;
  std::vector<int> order_, parent_, vmap_, amap_;
  std::vector<char> vused_, aused_;
  std::set<std::array<int, 3>> btri_;
};

}  // namespace

std::optional<Isomorphism> quiver_isomorphic(const GenTriQuiver& q1, const GenTriQuiver& q2,
                                             const IsoConstraints& extra) {
  IsoView a(q1, extra.perm1), b(q2, extra.perm2);
  return IsoSearch(a, b).run();
}

// ---------------------------------------------------------------------------
// Text forms

std::string export_dot(const GenTriQuiver& q) {
  std::set<std::string> starred;
  for (const auto& t : q.marking) starred.insert(t[0]);
  std::ostringstream os;
  os << "digraph Q {\n  node [shape=circle];\n";
  for (const auto& v : q.vertices) {
    os << "  " << quote(v.id);
    if (v.color == Color::black) os << " [style=filled, fillcolor=black, fontcolor=white]";
    os << ";\n";
  }
  for (const auto& a : q.arrows) {
    os << "  " << quote(a.source) << " -> " << quote(a.target);
    if (starred.count(a.id))
      os << " [label=\"*\", xlabel=" << quote(a.id) << "]";
    else
      os << " [label=" << quote(a.id) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string serialize(const GenTriQuiver& q) {
  std::ostringstream os;
  for (const auto& b : q.blocks) os << "block " << b.name << ' ' << to_string(b.kind) << '\n';
  for (const auto& v : q.vertices) {
    os << "vertex " << v.id << ' ' << (v.color == Color::white ? "white" : "black");
    for (const auto& a : v.aliases) os << ' ' << a;
    os << '\n';
  }
  for (const auto& a : q.arrows)
    os << "arrow " << a.id << ' ' << a.source << ' ' << a.target << ' ' << q.blocks[a.block].name << ' ' << a.role
       << '\n';
  for (const auto& t : q.marking) os << "marked " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return os.str();
}

std::string to_gtq(const GenTriQuiver& q) {
  std::ostringstream os;
  for (const auto& b : q.blocks) {
    os << "block " << b.name << " type " << to_string(b.kind) << '\n';
    for (const auto& a : b.arrows)
      if (a.id != b.name + ":" + a.role) os << "#   arrow " << b.name << ':' << a.role << " = " << a.id << '\n';
    for (const auto& v : b.vertices)
      if (v.id != b.name + ":" + v.role) os << "#   vertex " << b.name << ':' << v.role << " = " << v.id << '\n';
  }
  for (const auto& [x, y] : q.pairing)
    os << "glue " << outlet_name(q.blocks, x) << ' ' << outlet_name(q.blocks, y) << '\n';
  return os.str();
}

GluingSpec parse_gtq(std::string_view text) {
  GluingSpec spec;
  std::map<std::string, std::size_t> index;
  struct PendingGlue {
    std::string a, b;
    int line;
  };
  std::vector<PendingGlue> glues;
  int lineno = 0;
  for (const auto& raw : split_lines(text)) {
    ++lineno;
    auto tok = tokens(strip_comment(raw));
    if (tok.empty()) continue;
    if (tok[0] == "block") {
      if (tok.size() != 4 || tok[2] != "type") throw ParseError(lineno, "expected: block <name> type <kind>");
      if (!valid_name(tok[1])) throw ParseError(lineno, "invalid block name '" + tok[1] + "'");
      auto kind = parse_block_kind(tok[3]);
      if (!kind) throw ParseError(lineno, "unknown block type '" + tok[3] + "'");
      if (index.count(tok[1])) throw ParseError(lineno, "duplicate block '" + tok[1] + "'");
      index[tok[1]] = spec.blocks.size();
      spec.blocks.push_back(build_block(*kind, tok[1]));
    } else if (tok[0] == "glue") {
      if (tok.size() != 3) throw ParseError(lineno, "expected: glue <name>.<k> <name>.<k>");
      glues.push_back({tok[1], tok[2], lineno});
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  auto outlet = [&](const std::string& ref, int line) {
    auto dot = ref.rfind('.');
    if (dot == std::string::npos) throw ParseError(line, "outlet reference '" + ref + "' lacks '.<index>'");
    auto it = index.find(ref.substr(0, dot));
    if (it == index.end()) throw ParseError(line, "unknown block '" + ref.substr(0, dot) + "'");
    auto k = parse_int(ref.substr(dot + 1));
    if (!k || *k < 1 || static_cast<std::size_t>(*k) > spec.blocks[it->second].outlets.size())
      throw ParseError(line, "outlet index out of range in '" + ref + "'");
    return OutletRef{it->second, static_cast<std::size_t>(*k - 1)};
  };
  for (const auto& g : glues) spec.pairing.emplace_back(outlet(g.a, g.line), outlet(g.b, g.line));
  return spec;
}

}  // namespace gtq
