#pragma once

// Helpers shared between the checker and binding validation. Not installed.

#include <string>

#include "cnc/model.hpp"
#include "cnc/scope.hpp"

namespace cnc::detail {

/// Empty result means the argument fits the parameter type; otherwise a
/// complete human-readable problem description.
std::string argument_mismatch(const Scope& scope, const ArgumentValue& arg,
                              const DataTypeRef& param);

}  // namespace cnc::detail
