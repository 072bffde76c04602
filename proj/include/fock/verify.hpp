#pragma once

#include "fock/report.hpp"

namespace fock {

struct VerifyOptions {
    bool quick = false;    // reduced ranges, completes in a few seconds
    int n_focus = -1;      // restrict sequence sections to one n (-1: all of 1..4)
    int kmax = 200;        // conjecture scan depth
    unsigned seed = 7;     // randomized-property seed
};

/// Runs the full verification suite and returns the report. Exit-code
/// semantics live on the report (0 unless some check FAILs; INCONCLUSIVE and
/// EXPLORATORY never affect it).
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace fock
