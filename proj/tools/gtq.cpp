#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "gtq/enumeration.hpp"
#include "gtq/errors.hpp"
#include "gtq/io.hpp"
#include "gtq/relations.hpp"
#include "gtq/surface.hpp"
#include "gtq/transforms.hpp"
#include "gtq/verify.hpp"

using namespace gtq;

namespace {

struct Options {
  std::string input, second, weights, out, vertex, data_dir = GTQ_DATA_DIR;
  std::vector<std::string> sets;
  bool triangulation = false, dblprime = false;
  int stage = 2;
};

struct Loaded {
  GenTriQuiver q;
  StarQuiver sq;
  OrbitData od;
  WeightData w;
};

Loaded load(const Options& o) {
  Loaded l;
  l.q = load_quiver(o.input);
  l.sq = star_quiver(l.q);
  l.od = orbit_data(l.sq);
  l.w = resolve_weights(l.sq, l.od, o.weights.empty() ? std::vector<WeightEntry>{} : load_weights(o.weights));
  for (const auto& s : o.sets) {
    auto eq = s.find('=');
    auto value = eq == std::string::npos ? std::nullopt : parse_rational(s.substr(eq + 1));
    if (!value) throw UsageError("--set expects symbol=value, got '" + s + "'");
    l.w.bind(s.substr(0, eq), *value);
  }
  return l;
}

std::string cycle(const std::vector<std::string>& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + c[i];
  return out + ")";
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
    std::cout << "wrote " << o.out << "\n";
  }
}

// Weights keyed by the default ids a written .gtq file will have once parsed again.
std::string weights_text(const GenTriQuiver& q, const WeightData& w) {
  auto sq = star_quiver(q);
  auto od = orbit_data(sq);
  std::map<std::string, std::string> arrow, vertex;
  for (const auto& a : q.arrows) arrow[a.id] = q.blocks[a.block].name + ":" + a.role;
  for (const auto& b : q.blocks)
    for (const auto& v : b.vertices) {
      auto cand = b.name + ":" + v.role;
      auto& cur = vertex[q.merged(v.id)];
      if (cur.empty() || cand < cur) cur = cand;
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < od.g_orbits.size(); ++i) {
    const auto& rep = od.rep(i);
    os << "m " << arrow.at(rep) << " " << w.m.at(rep).str() << "   # orbit length " << od.n[i] << "\n";
  }
  for (std::size_t i = 0; i < od.g_orbits.size(); ++i)
    os << "c " << arrow.at(od.rep(i)) << " " << w.c.at(od.rep(i)).str() << "\n";
  for (const auto& [v, b] : w.b) os << "b " << vertex.at(v) << " " << b.str() << "\n";
  return os.str();
}

void write_quiver_and_weights(const Options& o, const GenTriQuiver& q, const WeightData& w) {
  if (o.out.empty()) {
    std::cout << to_gtq(q) << "\n# weights\n";
    std::istringstream is(weights_text(q, w));
    for (std::string line; std::getline(is, line);) std::cout << "# " << line << "\n";
    return;
  }
  auto wts = std::filesystem::path(o.out).replace_extension(".wts").string();
  write_file(o.out, to_gtq(q));
  write_file(wts, weights_text(q, w));
  std::cout << "wrote " << o.out << " and " << wts << "\n";
}

int cmd_validate(const Options& o) {
  auto q = assemble(parse_gtq(read_file(o.input)));
  auto diags = validate(q);
  for (const auto& d : diags) std::cout << d.str() << "\n";
  if (!diags.empty()) return 1;
  std::cout << "valid: " << q.vertices.size() << " vertices, " << q.arrows.size() << " arrows, " << q.blocks.size()
            << " blocks (";
  const char* sep = "";
  for (auto k : {BlockKind::I, BlockKind::II, BlockKind::III, BlockKind::IV, BlockKind::V})
    if (auto n = q.count_blocks(k)) {
      std::cout << sep << to_string(k) << ": " << n;
      sep = ", ";
    }
  std::cout << ")\n";
  return 0;
}

int cmd_orbits(const Options& o) {
  auto q = load_quiver(o.input);
  auto sq = star_quiver(q);
  auto od = orbit_data(sq);
  std::cout << "Q*: " << sq.vertices.size() << " vertices, " << sq.arrows.size() << " arrows\n";
  std::vector<std::string> removed;
  for (const auto& v : q.vertices)
    if (!sq.vertices.count(v.id)) removed.push_back(v.id);
  if (!removed.empty()) std::cout << "removed vertices: " << cycle(removed) << "\n";
  std::cout << "f-orbits: " << od.f_orbits.size() << "\n";
  for (const auto& c : od.f_orbits) std::cout << "  " << cycle(c) << "\n";
  std::cout << "g-orbits: " << od.g_orbits.size() << "\n";
  for (std::size_t i = 0; i < od.g_orbits.size(); ++i)
    std::cout << "  length " << od.n[i] << ": " << cycle(od.g_orbits[i]) << "\n";
  std::cout << "border: " << cycle({od.border.begin(), od.border.end()}) << "\n";
  return 0;
}

int cmd_weights(const Options& o) {
  auto l = load(o);
  for (std::size_t i = 0; i < l.od.g_orbits.size(); ++i) {
    const auto& rep = l.od.rep(i);
    std::cout << "orbit " << rep << "  n = " << l.od.n[i] << "  m = " << l.w.m.at(rep).str()
              << "  c = " << l.w.c.at(rep).str() << "\n";
  }
  for (const auto& [v, b] : l.w.b) std::cout << "border " << v << "  b = " << b.str() << "\n";
  try {
    auto va = virtual_arrows(l.od, l.w);
    std::cout << "virtual arrows: " << cycle({va.begin(), va.end()}) << "\n";
  } catch (const IndeterminateError& e) {
    std::cout << "virtual arrows: undetermined (" << e.what() << ")\n";
  }
  auto diags = validate_weights(l.sq, l.od, l.w);
  for (const auto& d : diags) std::cout << d.str() << "\n";
  return diags.empty() ? 0 : 1;
}

int cmd_relations(const Options& o) {
  if (o.triangulation && o.dblprime) throw UsageError("--triangulation and --dblprime are exclusive");
  auto l = load(o);
  if (o.dblprime) {
    auto d = delta_construction(l.q, l.sq, l.od, l.w);
    std::cout << relations_lambda_dblprime(mutate_stage1(d)).str();
  } else if (o.triangulation) {
    std::cout << relations_triangulation(l.q, l.sq, l.od, l.w).str();
  } else {
    std::cout << relations_generalized(l.q, l.sq, l.od, l.w).str();
  }
  return 0;
}

int cmd_basis(const Options& o) {
  auto l = load(o);
  if (!o.vertex.empty()) {
    auto b = basis_at_vertex(l.q, l.sq, l.od, l.w, o.vertex);
    std::cout << "vertex " << b.vertex << " case " << b.case_tag << ": " << b.elements.size() << " elements\n";
    for (const auto& p : b.elements) std::cout << "  " << p.str() << "\n";
    return b.duplicates == 0 ? 0 : 1;
  }
  std::size_t width = 6;
  for (const auto& v : l.q.vertices) width = std::max(width, v.id.size());
  auto pad = [&](const std::string& s) { return s + std::string(width + 2 - std::min(width, s.size()), ' '); };
  std::cout << pad("vertex") << "case  closed form  enumerated\n";
  long long total = 0;
  bool concrete = true, agree = true;
  for (const auto& v : l.q.vertices) {
    auto closed = basis_counts_closed(l.q, l.sq, l.od, l.w, v.id);
    std::string tag = "-", count = "-";
    try {
      auto b = basis_at_vertex(l.q, l.sq, l.od, l.w, v.id);
      tag = b.case_tag;
      count = std::to_string(b.elements.size());
      total += b.elements.size();
      agree &= closed.value() == static_cast<long long>(b.elements.size()) && b.duplicates == 0;
    } catch (const IndeterminateError&) {
      concrete = false;
    }
    auto cf = closed.str();
    std::cout << pad(v.id) << tag << std::string(6 - std::min<std::size_t>(5, tag.size()), ' ') << cf
              << std::string(13 - std::min<std::size_t>(12, cf.size()), ' ') << count << "\n";
  }
  auto dim = dimension_generalized(l.q, l.sq, l.od, l.w);
  if (concrete) std::cout << "total enumerated: " << total << "\n";
  std::cout << "dimension: " << dim.str() << "\n";
  if (concrete && (!agree || dim.value() != total)) {
    std::cout << "FAIL: enumeration and closed forms disagree\n";
    return 1;
  }
  return 0;
}

int cmd_dim(const Options& o) {
  auto l = load(o);
  auto d = o.triangulation ? dimension_triangulation(l.q, l.od, l.w) : dimension_generalized(l.q, l.sq, l.od, l.w);
  std::cout << d.str() << "\n";
  return 0;
}

void print_notes(const std::vector<std::string>& virtual_seq, const std::vector<std::string>& warnings) {
  std::cout << "# virtual sequence: " << cycle(virtual_seq) << "\n";
  for (const auto& w : warnings) std::cout << "# warning: " << w << "\n";
}

int cmd_delta(const Options& o) {
  auto l = load(o);
  auto d = delta_construction(l.q, l.sq, l.od, l.w);
  write_quiver_and_weights(o, d.quiver, d.weights);
  print_notes(virtual_sequence(d), detect_exceptional(d));
  return 0;
}

int cmd_mutate(const Options& o) {
  if (o.stage != 1 && o.stage != 2) throw UsageError("--stage must be 1 or 2");
  auto l = load(o);
  auto d = delta_construction(l.q, l.sq, l.od, l.w);
  auto m = mutate_stage1(d);
  if (o.stage == 2) m = mutate_stage2(m);
  write_quiver_and_weights(o, m.quiver, m.weights);
  print_notes(m.virtual_sequence, detect_exceptional(d));
  return 0;
}

int cmd_roundtrip(const Options& o) {
  auto l = load(o);
  auto r = roundtrip_check(l.q, l.w);
  std::cout << r.str();
  return r.pass ? 0 : 1;
}

int cmd_surface(const Options& o) {
  emit(o, to_gtq(surface_to_quiver(load_surface(o.input))));
  return 0;
}

int cmd_iso(const Options& o) {
  auto a = load_quiver(o.input), b = load_quiver(o.second);
  auto sa = star_quiver(a), sb = star_quiver(b);
  auto iso = quiver_isomorphic(a, b, {&sa.f, &sb.f});
  if (!iso) {
    std::cout << "not isomorphic\n";
    return 1;
  }
  std::cout << "isomorphic\n";
  for (const auto& [x, y] : iso->vertices) std::cout << "  vertex " << x << " -> " << y << "\n";
  for (const auto& [x, y] : iso->arrows) std::cout << "  arrow " << x << " -> " << y << "\n";
  return 0;
}

int cmd_dot(const Options& o) {
  emit(o, export_dot(load_quiver(o.input)));
  return 0;
}

int cmd_verify(const Options& o) {
  bool ok = true;
  for (const auto& r : run_acceptance(o.data_dir)) {
    std::cout << r.line() << "\n";
    ok &= r.pass();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized triangulation quivers"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, int (*)(const Options&)> run;

  auto quiver_in = [&](CLI::App* c) { c->add_option("quiver", o.input, ".gtq file")->required()->check(CLI::ExistingFile); };
  auto weighted = [&](CLI::App* c) {
    quiver_in(c);
    c->add_option("-w,--weights", o.weights, ".wts file; omitted values stay symbolic")->check(CLI::ExistingFile);
    c->add_option("--set", o.sets, "bind a symbol, e.g. --set m=2");
  };
  auto out = [&](CLI::App* c, const char* what) { c->add_option("-o,--output", o.out, what); };

  auto* c = app.add_subcommand("validate", "check a gluing and report violated invariants");
  quiver_in(c);
  run[c] = cmd_validate;
  c = app.add_subcommand("orbits", "Q*, f-orbits, g-orbits and border vertices");
  quiver_in(c);
  run[c] = cmd_orbits;
  c = app.add_subcommand("weights", "resolved weight and parameter functions");
  weighted(c);
  run[c] = cmd_weights;
  c = app.add_subcommand("relations", "defining relations");
  weighted(c);
  c->add_flag("--triangulation", o.triangulation, "relations of the triangulation algebra");
  c->add_flag("--dblprime", o.dblprime, "relations after the first mutation stage, with pi and kappa removed");
  run[c] = cmd_relations;
  c = app.add_subcommand("basis", "basis sizes per vertex, or the basis at one vertex");
  weighted(c);
  c->add_option("--vertex", o.vertex, "list the basis at this vertex");
  run[c] = cmd_basis;
  c = app.add_subcommand("dim", "dimension polynomial");
  weighted(c);
  c->add_flag("--triangulation", o.triangulation, "sum of m n^2 over g-orbits (blocks I-III only)");
  run[c] = cmd_dim;
  c = app.add_subcommand("delta", "triangulation quiver Q^Delta with transported weights");
  weighted(c);
  out(c, "write Q^Delta here, and its weights next to it as .wts");
  run[c] = cmd_delta;
  c = app.add_subcommand("mutate", "mutate Q^Delta at the virtual sequence");
  weighted(c);
  c->add_option("--stage", o.stage, "1 or 2 (default 2)");
  out(c, "write the result here, and its weights next to it as .wts");
  run[c] = cmd_mutate;
  c = app.add_subcommand("roundtrip", "delta, both mutation stages, and an isomorphism back to the input");
  weighted(c);
  run[c] = cmd_roundtrip;
  c = app.add_subcommand("surface", "quiver of a marked triangulated surface");
  c->add_option("surface", o.input, ".surf file")->required()->check(CLI::ExistingFile);
  out(c, "write the .gtq here");
  run[c] = cmd_surface;
  c = app.add_subcommand("iso", "isomorphism of two quivers preserving f");
  quiver_in(c);
  c->add_option("other", o.second, "second .gtq file")->required()->check(CLI::ExistingFile);
  run[c] = cmd_iso;
  c = app.add_subcommand("dot", "Graphviz export");
  quiver_in(c);
  out(c, "write the .dot here");
  run[c] = cmd_dot;
  c = app.add_subcommand("verify", "run the bundled acceptance checks");
  c->add_option("dir", o.data_dir, "example directory");
  run[c] = cmd_verify;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run.at(app.get_subcommands().front())(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
