#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qx::testing {

inline std::string fixture_path(const std::string& name) { return std::string(QX_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qx::testing
