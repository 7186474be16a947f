#pragma once

namespace sb::par {

// Worker count used by parallel kernels when a call site passes jobs == 0.
// jobs == 1 selects the serial reference path everywhere.
int hardware_jobs();
int jobs();
void set_jobs(int n);
int effective(int requested);

}  // namespace sb::par
