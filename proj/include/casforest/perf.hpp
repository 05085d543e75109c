#pragma once

#include "casforest/forest.hpp"

namespace casforest {

// Area and clock figures measured on the reference hardware build.
struct ResourceProfile {
    int clb_per_processing_node = 8;
    int clb_per_exit_node = 130;
    double clock_processing_hz = 166.639e6;
    double clock_exit_hz = 57.991e6;
    double clock_divided_hz = 93.032e6;
};

// Whole-forest measurement of the 21-node, 10-exit reference build. The
// linear model lands within 2% above it; synthesis shares logic the model
// does not see.
inline constexpr int kMeasuredReferenceForestClbs = 1452;

struct ClbEstimate {
    long long processing_clbs = 0;
    long long exit_clbs = 0;

    long long total() const { return processing_clbs + exit_clbs; }

    bool operator==(const ClbEstimate& other) const = default;
};

// Linear area model: per-node cost times count, per kind. Monotone in both
// counts and never below the synthesized figure.
ClbEstimate estimate_clbs(const NodeCounts& counts,
                          const ResourceProfile& profile = ResourceProfile{});

// Seconds to stream one length-l query: 2l + m ticks at the given clock.
// Requires l >= m >= 1 and a positive clock.
double estimate_latency(long long l, int m, double clock_hz);

struct Feasibility {
    ClbEstimate estimate;
    long long device_clbs = 0;
    bool feasible = false;
    double utilization = 0.0;  // estimate total over device capacity
};

Feasibility feasibility(const NodeCounts& counts, long long device_clbs,
                        const ResourceProfile& profile = ResourceProfile{});

}  // namespace casforest
