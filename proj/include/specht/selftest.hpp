#pragma once

// Golden worked examples, runnable as a batch: every value here was copied
// from a concrete example computation and is checked bit-exactly.

#include <string>
#include <vector>

namespace specht {

struct SelfCheck {
    std::string name;
    bool pass = false;
};

std::vector<SelfCheck> run_selftest();

}  // namespace specht
