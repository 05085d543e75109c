#include "casforest/perf.hpp"

#include "casforest/error.hpp"

namespace casforest {

namespace {

void check_profile(const ResourceProfile& profile) {
    if (profile.clb_per_processing_node <= 0 || profile.clb_per_exit_node <= 0 ||
        !(profile.clock_processing_hz > 0) || !(profile.clock_exit_hz > 0) ||
        !(profile.clock_divided_hz > 0)) {
        throw CasError("resource profile fields must be positive");
    }
}

}  // namespace

ClbEstimate estimate_clbs(const NodeCounts& counts, const ResourceProfile& profile) {
    check_profile(profile);
    if (counts.processing < 0 || counts.exits < 0) {
        throw CasError("node counts must be non-negative");
    }
    ClbEstimate est;
    est.processing_clbs = counts.processing * profile.clb_per_processing_node;
    est.exit_clbs = counts.exits * profile.clb_per_exit_node;
    return est;
}

double estimate_latency(long long l, int m, double clock_hz) {
    if (m < 1 || l < m) {
        throw CasError("latency model needs l >= m >= 1, got l = " + std::to_string(l) +
                       ", m = " + std::to_string(m));
    }
    if (!(clock_hz > 0)) {
        throw CasError("clock rate must be positive");
    }
    return static_cast<double>(2 * l + m) / clock_hz;
}

Feasibility feasibility(const NodeCounts& counts, long long device_clbs,
                        const ResourceProfile& profile) {
    if (device_clbs <= 0) {
        throw CasError("device CLB capacity must be positive");
    }
    Feasibility f;
    f.estimate = estimate_clbs(counts, profile);
    f.device_clbs = device_clbs;
    f.feasible = f.estimate.total() <= device_clbs;
    f.utilization = static_cast<double>(f.estimate.total()) / static_cast<double>(device_clbs);
    return f;
}

}  // namespace casforest
