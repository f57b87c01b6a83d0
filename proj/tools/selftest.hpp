#pragma once

#include "adelic/json_io.hpp"

namespace adelic::tools {

/// Quick randomized invariant checks; {"checks": {name: bool}, "passed": bool}.
json_io::Json run_selftest(std::uint32_t ell, std::size_t prec);

}  // namespace adelic::tools
