#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ctxdist {

// Exit codes: 0 ok, 1 assertion failed (--assert-satisfied with a violated
// result), 2 input error, 3 solver failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ctxdist
