#pragma once

#include <ostream>

namespace lcsparse::cli {

/// Exit codes: 0 success, 1 condition fails or bound not applicable,
/// 2 usage, format or resource error, 3 FatalInconsistency.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lcsparse::cli
