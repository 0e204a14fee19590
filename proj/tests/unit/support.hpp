#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace support {

inline std::string readText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing test file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string corpus(const std::string& name) {
  return readText(std::string(AMLOWL_TEST_DATA) + "/corpus/" + name + ".owlx");
}

inline std::string golden(const std::string& name) {
  return readText(std::string(AMLOWL_TEST_DATA) + "/golden/" + name + ".aml");
}

} // namespace support
