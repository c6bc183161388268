#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gtq {

enum class Color { white, black };
enum class BlockKind { I, II, III, IV, V };

std::string to_string(BlockKind kind);
std::optional<BlockKind> parse_block_kind(std::string_view text);

struct Vertex {
  std::string id;
  Color color = Color::white;
  std::string role;                  // role inside the block; empty for merged vertices
  std::vector<std::string> aliases;  // pre-gluing names, sorted
};

struct Arrow {
  std::string id;
  std::string source;
  std::string target;
  std::string role;
  std::size_t block = 0;  // index into the owning quiver's block list
};

using Triangle = std::array<std::string, 3>;

struct Block {
  std::string name;
  BlockKind kind = BlockKind::I;
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;         // source/target are block vertex ids
  std::vector<std::string> outlets;  // vertex ids in canonical order
  std::optional<Triangle> marked_triangle;  // arrow roles

  const Vertex& vertex_by_role(std::string_view role) const;
  const Arrow& arrow_by_role(std::string_view role) const;
  const std::string& vertex_id(std::string_view role) const { return vertex_by_role(role).id; }
  const std::string& arrow_id(std::string_view role) const { return arrow_by_role(role).id; }
};

// Canonical block: vertices "<name>:<role>", arrows "<name>:<role>".
Block build_block(BlockKind kind, const std::string& name);
// Same shape with caller-chosen ids keyed by role; roles not listed keep the default id.
Block build_block(BlockKind kind, const std::string& name,
                  const std::map<std::string, std::string>& vertex_ids,
                  const std::map<std::string, std::string>& arrow_ids);

// Vertex roles of a kind, in canonical order, and the roles of its outlets.
const std::vector<std::string>& block_vertex_roles(BlockKind kind);
const std::vector<std::string>& block_arrow_roles(BlockKind kind);

struct OutletRef {
  std::size_t block = 0;
  std::size_t outlet = 0;  // 0-based
  auto operator<=>(const OutletRef&) const = default;
};

struct GluingSpec {
  std::vector<Block> blocks;
  std::vector<std::pair<OutletRef, OutletRef>> pairing;
};

struct GenTriQuiver {
  std::vector<Block> blocks;
  std::vector<std::pair<OutletRef, OutletRef>> pairing;  // each pair ordered, list sorted
  std::vector<Vertex> vertices;                          // sorted by id
  std::vector<Arrow> arrows;                             // sorted by id
  std::vector<Triangle> marking;                         // arrow ids, in block order
  std::map<std::string, std::string, std::less<>> alias_to_vertex;

  const Vertex* find_vertex(std::string_view id) const;
  const Arrow* find_arrow(std::string_view id) const;
  const Vertex& vertex(std::string_view id) const;
  const Arrow& arrow(std::string_view id) const;
  std::vector<const Arrow*> out_arrows(std::string_view vertex) const;
  std::vector<const Arrow*> in_arrows(std::string_view vertex) const;
  // Merged vertex id of a block-local vertex id.
  const std::string& merged(std::string_view alias) const;
  std::size_t count_blocks(BlockKind kind) const;
  bool paired(OutletRef outlet) const;

  std::map<std::string, std::size_t, std::less<>> vertex_index;
  std::map<std::string, std::size_t, std::less<>> arrow_index;
};

// Strict gluing: malformed pairing -> GluingError, disconnected result -> ConnectivityError.
GenTriQuiver glue(const GluingSpec& spec);
// Like glue but tolerates disconnected results and unpaired outlets (for diagnostics).
GenTriQuiver assemble(const GluingSpec& spec);
// Glue the blocks whose outlets carry the same vertex id; an id on three or more outlets is a logic error.
GenTriQuiver glue_by_ids(std::vector<Block> blocks);

struct Diagnostic {
  std::string code;     // name of the violated invariant
  std::string subject;  // offending vertex/arrow/outlet
  std::string message;
  std::string str() const;
};

std::vector<Diagnostic> validate(const GenTriQuiver& q);

struct Isomorphism {
  std::map<std::string, std::string> vertices;
  std::map<std::string, std::string> arrows;
};

// Optional extra structure to preserve: partial arrow permutations (typically f on Q*).
struct IsoConstraints {
  const std::map<std::string, std::string>* perm1 = nullptr;
  const std::map<std::string, std::string>* perm2 = nullptr;
};

std::optional<Isomorphism> quiver_isomorphic(const GenTriQuiver& q1, const GenTriQuiver& q2,
                                             const IsoConstraints& extra = {});

std::string export_dot(const GenTriQuiver& q);
// Canonical text form; equal quivers give identical bytes.
std::string serialize(const GenTriQuiver& q);
// .gtq text: block and glue lines; non-default ids are listed in comments.
std::string to_gtq(const GenTriQuiver& q);
GluingSpec parse_gtq(std::string_view text);

}  // namespace gtq
