#pragma once

#include <string>

namespace sympbranch {

struct SweepOptions {
    int max_rank = 3;
    int max_entry = 3;
    unsigned threads = 1;  // 0 means hardware concurrency
};

struct SweepOutcome {
    bool ok = true;
    std::string counterexample;  // first failing check, empty when ok
    long long checks = 0;

    SweepOutcome& merge(const SweepOutcome& other);
};

// Exhaustive invariant sweeps.  Each returns the failure from the
// earliest failing cell so the reported counterexample is stable under
// any thread count.
SweepOutcome sweep_semigroup(const SweepOptions& opts);
SweepOutcome sweep_decomp(const SweepOptions& opts);
SweepOutcome sweep_characters(const SweepOptions& opts);

}  // namespace sympbranch
