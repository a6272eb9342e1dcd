// Well-formedness checking of architectures and libraries.
#pragma once

#include <vector>

#include "cnc/model.hpp"
#include "cnc/scope.hpp"

namespace cnc {

/// Independent: no atomicImpl type and no rts reachable from the root
/// (platform-independent source architectures). Specific: the dual rule for
/// bound outputs — every instantiated atomic type must carry a behavior.
enum class PlatformRule { Independent, Specific };

/// Returns diagnostics sorted by (file, span, code); empty means the
/// architecture satisfies every model invariant.
std::vector<Diagnostic> check_architecture(const Architecture& arch, const Scope& scope,
                                           PlatformRule rule = PlatformRule::Independent);

std::vector<Diagnostic> check_library(const Library& lib, const Scope& scope);

}  // namespace cnc
