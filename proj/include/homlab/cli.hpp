#pragma once

namespace homlab {

/// Exit codes: 0 success, 1 a verification found violations, 2 usage error.
int run(int argc, char** argv);

}  // namespace homlab
