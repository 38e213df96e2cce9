#include "exhauster/support.hpp"

#include <algorithm>
#include <cmath>

#include "exhauster/error.hpp"

namespace exh {

Sinusoid vertex_sinusoid(const Point2& v) { return {v.x, v.y, 0.0}; }

Arc::Arc(double start, double length) : start_(normalize_angle(start)), length_(length) {
    if (!std::isfinite(start) || !std::isfinite(length)) throw ValidationError("non-finite arc");
    if (length <= 0.0) throw ValidationError("arc must have positive length");
    if (length > kTwoPi * (1.0 + 1e-12)) throw ValidationError("arc longer than the full circle");
    length_ = std::min(length, kTwoPi);
}

Arc Arc::between(double start, double end) {
    const double len = ccw_distance(start, end);
    return Arc(start, len > 0.0 ? len : kTwoPi);
}

bool Arc::contains(double theta) const {
    if (is_full()) return true;
    return ccw_distance(start_, theta) < length_;
}

bool Arc::contains_closed(double theta, double eps) const {
    if (is_full()) return true;
    const double off = ccw_distance(start_, theta);
    return off <= length_ + eps || off >= kTwoPi - eps;
}

SupportCurve::SupportCurve(std::vector<CurvePiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw ValidationError("support curve needs at least one piece");
    std::sort(pieces_.begin(), pieces_.end(),
              [](const CurvePiece& l, const CurvePiece& r) { return l.arc.start() < r.arc.start(); });
    double total = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        total += pieces_[i].arc.length();
        const double next = pieces_[(i + 1) % pieces_.size()].arc.start();
        const double gap = ccw_distance(pieces_[i].arc.end(), next);
        if (pieces_.size() > 1 && std::min(gap, kTwoPi - gap) > 1e-9) {
            throw ValidationError("support curve pieces do not tile the circle");
        }
    }
    if (std::abs(total - kTwoPi) > 1e-9) throw ValidationError("support curve pieces do not tile the circle");
}

std::size_t SupportCurve::locate(double theta) const {
    const double t = normalize_angle(theta);
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                               [](double v, const CurvePiece& p) { return v < p.arc.start(); });
    if (it == pieces_.begin()) return pieces_.size() - 1;
    return static_cast<std::size_t>(std::distance(pieces_.begin(), it) - 1);
}

double SupportCurve::operator()(double theta) const { return pieces_[locate(theta)].sinusoid(theta); }

std::vector<double> SupportCurve::breakpoints() const {
    std::vector<double> out;
    if (pieces_.size() == 1) return out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) out.push_back(p.arc.start());
    return out;
}

SupportCurve support_curve(const ConvexBody& body) {
    if (body.is_disc()) {
        const auto& c = body.center();
        return SupportCurve({{Arc::full(), {c.x, c.y, body.radius()}, -1}});
    }
    const auto& v = body.vertices();
    const std::size_t k = v.size();
    if (k == 1) return SupportCurve({{Arc::full(), vertex_sinusoid(v[0]), 0}});

    // Outer normal of edge (v_j, v_{j+1}): edge direction rotated by -90 degrees.
    std::vector<double> normal(k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto& p = v[j];
        const auto& q = v[(j + 1) % k];
        normal[j] = normalize_angle(std::atan2(-(q.x - p.x), q.y - p.y));
    }
    // v_{j+1} is the maximizer between the normals of its incident edges e_j and e_{j+1}.
    std::vector<CurvePiece> pieces;
    pieces.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t vi = (j + 1) % k;
        pieces.push_back({Arc::between(normal[j], normal[vi]), vertex_sinusoid(v[vi]), static_cast<int>(vi)});
    }
    return SupportCurve(std::move(pieces));
}

double eval_curve(const SupportCurve& curve, double theta) { return curve(theta); }

std::vector<std::pair<double, double>> sample_curve(const SupportCurve& curve, std::size_t n) {
    if (n < 2) throw ValidationError("sample_curve needs at least 2 samples");
    std::vector<std::pair<double, double>> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        out.emplace_back(theta, curve(theta));
    }
    return out;
}

}  // namespace exh
