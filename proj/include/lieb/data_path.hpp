#pragma once
// Resolution of the fixture/data directory: the LIEB_DATA_DIR environment
// variable wins, otherwise the compile-time default (the source tree's data/
// directory) is used.
#include <cstdlib>
#include <string>

namespace lieb {

inline std::string data_dir() {
  if (const char* env = std::getenv("LIEB_DATA_DIR"); env && *env) return env;
#ifdef LIEB_DATA_DIR
  return LIEB_DATA_DIR;
#else
  return "data";
#endif
}

inline std::string data_file(const std::string& name) {
  return data_dir() + "/" + name;
}

}  // namespace lieb
