#include "gtq/io.hpp"

#include <fstream>
#include <sstream>

#include "gtq/errors.hpp"
#include "gtq/surface.hpp"

namespace gtq {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write " + path);
}

GenTriQuiver load_quiver(const std::string& path) {
  try {
    return glue(parse_gtq(read_file(path)));
  } catch (const ParseError& e) {
    throw ParseError(e.line, e.detail, path);
  }
}

std::vector<WeightEntry> load_weights(const std::string& path) {
  try {
    return parse_weights(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line, e.detail, path);
  }
}

Surface load_surface(const std::string& path) {
  try {
    return parse_surface(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line, e.detail, path);
  }
}

}  // namespace gtq
