#pragma once

#include <string>

#include "gtq/quiver.hpp"
#include "gtq/weights.hpp"

namespace gtq {

struct Surface;

std::string read_file(const std::string& path);  // throws Error
void write_file(const std::string& path, const std::string& text);

GenTriQuiver load_quiver(const std::string& path);
std::vector<WeightEntry> load_weights(const std::string& path);
Surface load_surface(const std::string& path);

}  // namespace gtq
