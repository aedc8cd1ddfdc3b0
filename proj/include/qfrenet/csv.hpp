#pragma once

#include <string>
#include <vector>

#include "qfrenet/frenet.hpp"

namespace qfrenet {

// 17-significant-digit decimal rendering ('.' separator, no locale).
std::string format_double(double value);

// Fixed column contract:
//   t,s,v,v_dot,ax,ay,az,kappa2_bloch,kappa2_expect,kappa2_projector,
//   tau2_expect,tau2_residual
// NaN entries are emitted as empty fields. '\n' line endings.
std::string trajectory_csv(const std::vector<FrenetSample>& samples);

void write_file(const std::string& path, const std::string& content);

}  // namespace qfrenet
