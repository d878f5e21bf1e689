#pragma once

#include <ostream>

namespace extwhit::cli {

// Entry point of the extwhit executable. Returns the process exit code:
// 0 ok, 1 usage or domain error, 2 non-convergence, 3 failed identity suite
// (or asymptotic slope outside its band).
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace extwhit::cli
