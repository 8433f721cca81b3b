#pragma once

namespace esh2d::cli {

// Command dispatch for the eshelby2d binary. Exit codes: 0 success,
// 1 I/O or parse failure, 2 symmetry validation failure, 3 negative verdict
// of `equivalent`.
int run(int argc, char** argv);

}  // namespace esh2d::cli
