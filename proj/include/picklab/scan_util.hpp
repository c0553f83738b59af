#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "picklab/common.hpp"

namespace picklab {

// Shared surrogate for "bounded as the parameter shrinks", applied to a series
// ordered from coarse to fine:
//   Unbounded    if any value exceeds 1e9, or the series is strictly
//                increasing over its last quartile;
//   Bounded      if the running maximum at the end is within 5% of the running
//                maximum three quarters of the way in (an all-zero series is
//                Bounded);
//   Inconclusive otherwise.
ScanVerdict stabilization_verdict(const std::vector<double>& values);

// 17-significant-digit decimal rendering used by every CSV emitter, so output
// round-trips and is byte-identical across runs.
std::string format_sig17(double v);

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);

}  // namespace picklab
