#pragma once

#include "../core/types.hpp"

namespace menuprobe::geom {

// Upper envelope V(t) = max_j (slope_j * t + intercept_j) of one type's
// effective utility lines over the unit interval. Segments cover [0, 1]
// left to right with strictly increasing slopes (convexity).
class Envelope1D {
public:
    struct Segment {
        double t_begin = 0.0;
        double t_end = 1.0;
        int action = -1;
        double slope = 0.0;
        double intercept = 0.0;
    };

    struct Breakpoint {
        double t = 0.0;
        int left_action = -1; // best on the left of t
        int right_action = -1; // best on the right of t
    };

    explicit Envelope1D(std::vector<Segment> segments);

    const std::vector<Segment>& segments() const { return segments_; }
    std::vector<Breakpoint> breakpoints() const;

    double value(double t) const;
    // Action attaining the envelope at t; exact breakpoints resolve to the
    // lower action index, matching the default best-response tie rule.
    int action_at(double t) const;

private:
    const Segment& segment_at(double t) const;
    std::vector<Segment> segments_;
};

// Builds the exact upper envelope of the type's effective lines. Requires a
// one-dimensional space whose effective interval is [0, 1]. Collinear
// duplicate lines are merged keeping the lowest action index.
Envelope1D build_envelope(const AgentType& type, const StrategySpace& space);

// Leftmost minimizer of the envelope: the left endpoint of the first
// segment with nonnegative slope, or 1.0 when every slope is negative.
double envelope_minimizer(const Envelope1D& env);

} // namespace menuprobe::geom
