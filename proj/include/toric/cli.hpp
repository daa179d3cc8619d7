#pragma once

// Batch command-line front end. Exit codes: 0 ok, 1 internal error,
// 2 invalid input, 3 unsupported input.

#include <iosfwd>
#include <string>
#include <vector>

#include "toric/toric_variety.hpp"

namespace toric::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Fan document {"rank", "rays", "max_cones" (1-based), "names", "grading"}.
std::string fan_to_json(const NormalToricVariety& v);

/// Any accepted variety document: constructor, fan, cone or product form.
NormalToricVariety variety_from_json(const std::string& text);

}  // namespace toric::cli
