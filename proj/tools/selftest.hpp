#pragma once

namespace qschur::cli {

/// Runs the invariant sweeps at the given size bound, printing one line per
/// suite; returns true when everything holds. inject_sign_fault flips the
/// sign of the first preimage term inside the reduction cross-check, so a
/// run with the fault must come back false.
bool run_selftest(int max_size, bool inject_sign_fault);

} // namespace qschur::cli
