#pragma once

#include <string>

#include "fcg/tsk.hpp"

namespace fcg {

// {"S": int, "M": int, "centers": [[...]], "widths": [[...]], "consequents": [...]}
// centers/widths are M rows of S values.
std::string tsk_to_json(const TSKModel& model);
TSKModel tsk_from_json(const std::string& text);
TSKModel load_tsk_file(const std::string& path);

}  // namespace fcg
