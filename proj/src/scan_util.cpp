#include "picklab/scan_util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace picklab {

ScanVerdict stabilization_verdict(const std::vector<double>& values) {
  if (values.empty()) return ScanVerdict::Inconclusive;
  for (double v : values)
    if (v > 1e9 || std::isinf(v) || std::isnan(v)) return ScanVerdict::Unbounded;

  size_t n = values.size();
  size_t q = std::max<size_t>(1, n - n / 4);  // start of the last quartile

  double rm = 0.0;
  double rm_at_q = 0.0;
  for (size_t i = 0; i < n; ++i) {
    rm = std::max(rm, values[i]);
    if (i + 1 == q) rm_at_q = rm;
  }
  if (n < 4) rm_at_q = rm;
  // 5%-stabilization wins over monotone growth: a series creeping up toward a
  // finite limit is bounded even though every step is an increase
  if (rm == 0.0) return ScanVerdict::Bounded;
  if (rm <= 1.05 * rm_at_q) return ScanVerdict::Bounded;

  if (n >= 4) {
    bool strictly_increasing = true;
    for (size_t i = q; i < n; ++i)
      if (!(values[i] > values[i - 1])) { strictly_increasing = false; break; }
    if (strictly_increasing) return ScanVerdict::Unbounded;
  }
  return ScanVerdict::Inconclusive;
}

std::string format_sig17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

}  // namespace picklab
