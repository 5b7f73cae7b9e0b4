#pragma once

namespace upsc {

/// Execution policy for batch operations whose items are independent
/// (per-record fits, per-value sweep curves). Results are merged in item
/// order, so serial and parallel runs produce bit-identical output.
struct ExecPolicy {
    enum class Mode { serial, parallel };

    Mode mode = Mode::parallel;
    int jobs = 0; // 0 = runtime default thread count

    static ExecPolicy serial() { return {Mode::serial, 1}; }
    static ExecPolicy parallel(int jobs = 0) { return {Mode::parallel, jobs}; }
};

} // namespace upsc
