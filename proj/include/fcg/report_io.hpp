#pragma once

#include <string>

#include "fcg/report.hpp"

namespace fcg {

// {"solution":[...], "iterations":N, "restarts":N, "residual_norm":x,
//  "flops":{"add":N,"mul":N}, "converged":bool,
//  "trace":[{"k":..,"E":..,"d_norm":..,"alpha":..,"beta":..,"v":..}]}
std::string report_to_json(const SolveReport& rep);
SolveReport report_from_json(const std::string& text);

std::string report_to_text(const SolveReport& rep);

}  // namespace fcg
