#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "exhauster/angle.hpp"
#include "exhauster/support.hpp"

namespace exh {

// Below this, amplitudes and offsets are zero and |R - |dc|| means tangency.
inline constexpr double kTangencyTol = 1e-12;

struct IntersectionResult {
    bool identical = false;
    // Crossing angles in [0, 2pi), ascending; 0, 1 (tangency) or 2 entries.
    std::vector<double> angles;
};

/// Solves s1(theta) = s2(theta) on the circle in closed form.
IntersectionResult sinusoid_intersections(const Sinusoid& s1, const Sinusoid& s2);

struct Extremum {
    double value = 0.0;
    double theta = 0.0;
};

/// max of s1 - s2 over the closed arc. Candidates are the two endpoints and
/// the interior critical point of the difference sinusoid; ties go to the
/// earliest candidate (arc start first).
Extremum difference_max(const Sinusoid& s1, const Sinusoid& s2, const Arc& arc);

/// Maximal arcs on which s1 <= s2 + 1e-9. One full arc if s1 <= s2
/// everywhere, none if s1 > s2 everywhere.
std::vector<Arc> dominance_arcs(const Sinusoid& s1, const Sinusoid& s2);

/// Pointwise minimum of a family of curves. `curve()` carries the winning
/// body index in each piece's `source`; `attaining(k)` lists every body
/// within tol of the minimum on piece k.
class Envelope {
public:
    Envelope(SupportCurve curve, std::vector<std::vector<std::size_t>> attaining);

    const SupportCurve& curve() const { return curve_; }
    std::size_t size() const { return curve_.size(); }
    const std::vector<std::size_t>& attaining(std::size_t piece) const { return attaining_[piece]; }
    std::size_t winner(std::size_t piece) const {
        return static_cast<std::size_t>(curve_.pieces()[piece].source);
    }

    double operator()(double theta) const { return curve_(theta); }

    // Maximal arcs formed by consecutive pieces whose attaining set holds `body`.
    std::vector<Arc> contact_arcs(std::size_t body) const;

private:
    SupportCurve curve_;
    std::vector<std::vector<std::size_t>> attaining_;
};

/// Throws ValidationError on an empty family.
Envelope lower_envelope(std::span<const SupportCurve> curves, double tol = kDefaultTol);

// --- piecewise tools over pairs of curves -----------------------------------

/// Arcs between consecutive breakpoints (sorted, deduplicated circularly).
/// No breakpoints gives one full arc starting at 0.
std::vector<Arc> elementary_arcs(std::vector<double> breakpoints);

// max over the circle of f - g.
Extremum max_difference(const SupportCurve& f, const SupportCurve& g);
// max over the closed arc of f - g.
Extremum max_difference(const SupportCurve& f, const SupportCurve& g, const Arc& arc);

/// Maximal arcs on which f - g >= level. Isolated touching points are dropped.
std::vector<Arc> superlevel_arcs(const SupportCurve& f, const SupportCurve& g, double level);

}  // namespace exh
