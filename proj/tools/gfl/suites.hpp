#pragma once

#include <vector>

#include "record.hpp"

namespace gfl {

// Command bodies.  Each renders its records through write_report and
// returns the process exit code: 0 success, 1 verification failure,
// 2 config/usage error (callers map exceptions to 2 as well).

int run_sigma(const RunConfig& cfg, cplx z);

int run_verify(const RunConfig& cfg);

int run_scan(const RunConfig& cfg, const std::vector<double>& radii);

int run_reconstruct(const RunConfig& cfg, std::vector<double> radii, bool have_z,
                    cplx z, bool have_seed);

} // namespace gfl
