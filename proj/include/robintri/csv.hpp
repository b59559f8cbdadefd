#ifndef ROBINTRI_CSV_HPP
#define ROBINTRI_CSV_HPP

#include <cstdio>
#include <string>

namespace robintri {

/// 17-significant-digit rendering, enough to round-trip a double exactly.
inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace robintri

#endif // ROBINTRI_CSV_HPP
