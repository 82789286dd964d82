#pragma once

namespace qheun {

// Batch CLI entry point (testable in-process). Exit codes: 0 success,
// 1 domain error (JSON report on stderr), 2 usage error.
int cli_main(int argc, const char* const* argv);

}  // namespace qheun
