#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "exhauster/angle.hpp"
#include "exhauster/geometry.hpp"

namespace exh {

/// theta -> a cos(theta) + b sin(theta) + c, the theta-rho image of a point
/// (a, b) offset by c. Equivalently amplitude() * sin(theta + phase()) + c.
struct Sinusoid {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double operator()(double theta) const { return a * std::cos(theta) + b * std::sin(theta) + c; }
    double amplitude() const { return std::hypot(a, b); }
    double phase() const { return std::atan2(a, b); }

    friend Sinusoid operator-(const Sinusoid& l, const Sinusoid& r) {
        return {l.a - r.a, l.b - r.b, l.c - r.c};
    }
    friend bool operator==(const Sinusoid&, const Sinusoid&) = default;
};

Sinusoid vertex_sinusoid(const Point2& v);

/// Counter-clockwise arc [start, start + length) of the circle. start lies in
/// [0, 2pi) and length in (0, 2pi]; length 2pi is the full circle.
class Arc {
public:
    // Throws ValidationError unless 0 < length <= 2pi (a hair of slack above 2pi is clamped).
    Arc(double start, double length);

    static Arc full(double start = 0.0) { return Arc(start, kTwoPi); }
    // CCW arc from start to end. Equal endpoints give the full circle.
    static Arc between(double start, double end);

    double start() const { return start_; }
    double length() const { return length_; }
    double end() const { return normalize_angle(start_ + length_); }
    bool wraps() const { return start_ + length_ > kTwoPi; }
    bool is_full() const { return length_ >= kTwoPi; }
    double midpoint() const { return normalize_angle(start_ + 0.5 * length_); }

    // Half-open membership, wrap-aware.
    bool contains(double theta) const;
    // Closed membership with slack eps on both ends.
    bool contains_closed(double theta, double eps = 0.0) const;

private:
    double start_;
    double length_;
};

struct CurvePiece {
    Arc arc;
    Sinusoid sinusoid;
    // Vertex index for polygon curves, -1 for discs; body index for envelopes.
    int source = -1;
};

/// Circular piecewise-sinusoid function of theta. Pieces are sorted by arc
/// start and partition the circle; the last piece may wrap through 0.
class SupportCurve {
public:
    // Sorts the pieces; throws ValidationError if they do not tile the circle.
    explicit SupportCurve(std::vector<CurvePiece> pieces);

    const std::vector<CurvePiece>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }

    // Index of the piece whose half-open arc contains theta (mod 2pi).
    std::size_t locate(double theta) const;
    double operator()(double theta) const;

    // Piece start angles, ascending (the breakpoints of a multi-piece curve).
    std::vector<double> breakpoints() const;

private:
    std::vector<CurvePiece> pieces_;
};

/// Exact theta-rho curve rho_C of a body: upper envelope of the vertex
/// sinusoids, split at the outer edge normals.
SupportCurve support_curve(const ConvexBody& body);

double eval_curve(const SupportCurve& curve, double theta);

// n uniformly spaced samples theta_k = 2 pi k / n. Throws ValidationError if n < 2.
std::vector<std::pair<double, double>> sample_curve(const SupportCurve& curve, std::size_t n);

}  // namespace exh
