#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "laby/grid.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(LABY_FIXTURE_DIR) + "/" + name;
}

inline std::string fixture_text(const std::string& name) { return read_file(fixture_path(name)); }

inline laby::Pattern fixture(const std::string& name) {
  return laby::read_pattern(fixture_text(name));
}

}  // namespace testutil
