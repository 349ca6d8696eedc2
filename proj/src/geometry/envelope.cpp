#include "envelope.hpp"

#include <algorithm>
#include <cmath>

#include "../error.hpp"

namespace menuprobe::geom {

Envelope1D::Envelope1D(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) raise(ErrorCode::Internal, "Envelope1D: no segments");
    for (size_t i = 0; i + 1 < segments_.size(); ++i) {
        if (segments_[i].slope >= segments_[i + 1].slope)
            raise(ErrorCode::Internal, "Envelope1D: slopes must increase");
        if (std::fabs(segments_[i].t_end - segments_[i + 1].t_begin) > 1e-12)
            raise(ErrorCode::Internal, "Envelope1D: segment gap");
    }
}

std::vector<Envelope1D::Breakpoint> Envelope1D::breakpoints() const {
    std::vector<Breakpoint> out;
    for (size_t i = 0; i + 1 < segments_.size(); ++i)
        out.push_back(Breakpoint{segments_[i].t_end, segments_[i].action, segments_[i + 1].action});
    return out;
}

const Envelope1D::Segment& Envelope1D::segment_at(double t) const {
    for (const auto& s : segments_)
        if (t <= s.t_end) return s;
    return segments_.back();
}

double Envelope1D::value(double t) const {
    const Segment& s = segment_at(t);
    return s.slope * t + s.intercept;
}

int Envelope1D::action_at(double t) const {
    for (size_t i = 0; i + 1 < segments_.size(); ++i)
        if (t == segments_[i].t_end) return std::min(segments_[i].action, segments_[i + 1].action);
    return segment_at(t).action;
}

Envelope1D build_envelope(const AgentType& type, const StrategySpace& space) {
    if (space.effective_dim() != 1)
        raise(ErrorCode::DimensionMismatch, "build_envelope: requires an effective dimension of 1");

    struct Line {
        double slope, intercept;
        int action;
    };
    std::vector<Line> lines;
    for (int j = 0; j < type.actions(); ++j) {
        const Vec w = space.effective_gradient(type.directions[j]);
        lines.push_back(Line{w[0], space.effective_intercept(type.directions[j], type.intercepts[j]), j});
    }
    // Sort by slope; among equal slopes only the highest intercept can touch
    // the envelope, and among exact duplicates the lowest action wins.
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        if (a.slope != b.slope) return a.slope < b.slope;
        if (a.intercept != b.intercept) return a.intercept > b.intercept;
        return a.action < b.action;
    });
    std::vector<Line> keep;
    for (const auto& l : lines)
        if (keep.empty() || keep.back().slope != l.slope) keep.push_back(l);

    // Standard max-hull scan producing start abscissae within [0, 1].
    std::vector<Line> hull;
    std::vector<double> start; // start[i] = where hull[i] becomes maximal
    for (const auto& l : keep) {
        double s = 0.0;
        while (!hull.empty()) {
            // l overtakes the current top at x (l.slope > top.slope).
            const Line& top = hull.back();
            const double x = (top.intercept - l.intercept) / (l.slope - top.slope);
            if (x <= start.back()) {
                hull.pop_back();
                start.pop_back();
                continue;
            }
            s = x;
            break;
        }
        if (s >= 1.0) continue; // never maximal inside [0, 1]
        hull.push_back(l);
        start.push_back(std::max(0.0, s));
    }

    std::vector<Envelope1D::Segment> segs;
    for (size_t i = 0; i < hull.size(); ++i) {
        const double b = start[i];
        const double e = (i + 1 < hull.size()) ? start[i + 1] : 1.0;
        if (e <= b) continue;
        segs.push_back(Envelope1D::Segment{b, e, hull[i].action, hull[i].slope, hull[i].intercept});
    }
    return Envelope1D(std::move(segs));
}

double envelope_minimizer(const Envelope1D& env) {
    for (const auto& s : env.segments())
        if (s.slope >= 0.0) return s.t_begin;
    return 1.0;
}

} // namespace menuprobe::geom
