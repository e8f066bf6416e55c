#pragma once

#include <ostream>

namespace fibdyn {

// Self-contained verification suite: exercises the classifier, the potential
// estimators, the parameter-plane classifier, the boundary tracer, and the
// renderer against known identities and closed forms, printing one PASS/FAIL
// line per check. Sampling is seeded, so runs are reproducible. fast mode
// shrinks sample counts and resolutions for a quick smoke pass.
struct AcceptanceOptions {
    bool fast = false;
};

// Returns the number of failed checks (0 when everything passed).
int run_acceptance(const AcceptanceOptions& opts, std::ostream& out);

} // namespace fibdyn
