#pragma once

#include <cstdio>
#include <string>

namespace pwp::cli {

/// 12 significant digits, the precision of every number the tool prints.
inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace pwp::cli
