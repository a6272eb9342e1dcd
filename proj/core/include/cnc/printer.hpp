// Canonical pretty-printer. 2-space indentation, one declaration per line,
// declarations in original order, comments dropped. parse(pretty_print(m))
// is structurally equal to m, and printing is a fixpoint after one round.
#pragma once

#include <string>

#include "cnc/model.hpp"

namespace cnc {

std::string pretty_print(const Architecture& arch);
std::string pretty_print(const Library& lib);
std::string pretty_print(const ApplicationConfig& cfg);

}  // namespace cnc
