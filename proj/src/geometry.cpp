#include "exhauster/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "exhauster/angle.hpp"
#include "exhauster/envelope.hpp"
#include "exhauster/error.hpp"
#include "exhauster/support.hpp"

namespace exh {

namespace {

constexpr double kCollinearRel = 1e-12;

double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain; pops on cross <= eps so collinear and repeated
// points never survive.
std::vector<Point2> monotone_chain(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& p, const Point2& q) {
        return p.x < q.x || (p.x == q.x && p.y < q.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return pts;

    double scale = 0.0;
    for (const auto& p : pts) scale = std::max({scale, std::abs(p.x - pts[0].x), std::abs(p.y - pts[0].y)});
    const double eps = kCollinearRel * std::max(scale * scale, 1e-300);

    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= eps) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= eps) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);

    // Near-duplicates that slipped through (all points within eps of each other).
    if (hull.size() == 2 && std::hypot(hull[1].x - hull[0].x, hull[1].y - hull[0].y) <= kCollinearRel * scale) {
        hull.resize(1);
    }
    return hull;
}

// Half-plane n.x <= offset, used to clip by another polygon.
struct HalfPlane {
    Point2 normal;
    double offset;
};

std::vector<HalfPlane> half_planes(const ConvexBody& body) {
    const auto& v = body.vertices();
    std::vector<Point2> normals;
    if (v.size() == 1) {
        normals = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    } else if (v.size() == 2) {
        const Point2 d{v[1].x - v[0].x, v[1].y - v[0].y};
        normals = {d, {-d.x, -d.y}, {d.y, -d.x}, {-d.y, d.x}};
    } else {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& p = v[i];
            const auto& q = v[(i + 1) % v.size()];
            normals.push_back({q.y - p.y, p.x - q.x});
        }
    }
    std::vector<HalfPlane> out;
    out.reserve(normals.size());
    for (const auto& n : normals) out.push_back({n, support_value(body, n)});
    return out;
}

std::vector<Point2> clip(const std::vector<Point2>& poly, const HalfPlane& hp) {
    const double norm = std::hypot(hp.normal.x, hp.normal.y);
    const double eps = 1e-12 * norm * (1.0 + std::abs(hp.offset) / norm);
    auto side = [&](const Point2& p) { return dot(hp.normal, p) - hp.offset; };

    std::vector<Point2> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2& cur = poly[i];
        const Point2& nxt = poly[(i + 1) % poly.size()];
        const double sc = side(cur);
        const double sn = side(nxt);
        const bool in_c = sc <= eps;
        const bool in_n = sn <= eps;
        if (in_c) out.push_back(cur);
        if (in_c != in_n && std::abs(sc - sn) > 0.0) {
            const double t = sc / (sc - sn);
            if (t > 0.0 && t < 1.0) out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
        }
    }
    return out;
}

}  // namespace

Point2::Point2(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x_) || !std::isfinite(y_)) throw ValidationError("non-finite coordinate");
}

Direction::Direction(double theta) : theta_(normalize_angle(theta)) {
    if (!std::isfinite(theta)) throw ValidationError("non-finite direction angle");
}

Direction Direction::of(const Point2& g) {
    if (g.x == 0.0 && g.y == 0.0) throw ValidationError("zero vector has no direction");
    return Direction(std::atan2(g.y, g.x));
}

Point2 Direction::unit() const { return {std::cos(theta_), std::sin(theta_)}; }

ConvexBody ConvexBody::polygon(std::span<const Point2> points, std::string label) {
    if (points.empty()) throw ValidationError("polygon needs at least one point");
    for (const auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ValidationError("non-finite coordinate");
    }
    ConvexBody body;
    body.kind_ = BodyKind::polygon;
    body.vertices_ = monotone_chain({points.begin(), points.end()});
    body.label_ = std::move(label);
    return body;
}

ConvexBody ConvexBody::disc(Point2 center, double radius, std::string label) {
    if (!std::isfinite(radius)) throw ValidationError("non-finite radius");
    if (radius < 0.0) throw ValidationError("negative radius");
    ConvexBody body;
    body.kind_ = BodyKind::disc;
    body.center_ = center;
    body.radius_ = radius;
    body.label_ = std::move(label);
    return body;
}

ConvexBody ConvexBody::with_label(std::string label) const {
    ConvexBody copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

bool ConvexBody::same_shape(const ConvexBody& other) const {
    if (kind_ != other.kind_) return false;
    if (is_disc()) return center_ == other.center_ && radius_ == other.radius_;
    if (vertices_.size() != other.vertices_.size()) return false;
    // Canonical form starts at the lexicographically smallest vertex.
    return vertices_ == other.vertices_;
}

ConvexBody canonicalize_polygon(std::span<const Point2> points) { return ConvexBody::polygon(points); }

double support_value(const ConvexBody& body, const Point2& g) {
    if (body.is_disc()) return dot(body.center(), g) + body.radius() * std::hypot(g.x, g.y);
    double best = -HUGE_VAL;
    for (const auto& v : body.vertices()) best = std::max(best, dot(v, g));
    return best;
}

double support_value(const ConvexBody& body, const Direction& dir) { return support_value(body, dir.unit()); }

bool contains(const ConvexBody& outer, const ConvexBody& inner, double tol) {
    return max_difference(support_curve(inner), support_curve(outer)).value <= tol;
}

std::optional<ConvexBody> intersect_polygons(const ConvexBody& a, const ConvexBody& b) {
    if (!a.is_polygon() || !b.is_polygon()) {
        throw UnsupportedKindError("intersect_polygons: disc bodies are not supported");
    }
    std::vector<Point2> poly = a.vertices();
    for (const auto& hp : half_planes(b)) {
        poly = clip(poly, hp);
        if (poly.empty()) return std::nullopt;
    }
    return ConvexBody::polygon(poly);
}

Exhauster::Exhauster(std::vector<ConvexBody> bodies) : bodies_(std::move(bodies)) {
    if (bodies_.empty()) throw ValidationError("an exhauster needs at least one body");
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < bodies_.size(); ++i) {
        if (bodies_[i].label().empty()) bodies_[i] = bodies_[i].with_label("C" + std::to_string(i));
        if (!seen.insert(bodies_[i].label()).second) {
            throw ValidationError("duplicate body label '" + bodies_[i].label() + "'");
        }
    }
}

const ConvexBody& Exhauster::at(std::size_t i) const {
    if (i >= bodies_.size()) {
        throw IndexError("body index " + std::to_string(i) + " out of range (exhauster has " +
                         std::to_string(bodies_.size()) + " bodies)");
    }
    return bodies_[i];
}

std::optional<std::size_t> Exhauster::find(const std::string& label) const {
    for (std::size_t i = 0; i < bodies_.size(); ++i) {
        if (bodies_[i].label() == label) return i;
    }
    return std::nullopt;
}

Exhauster Exhauster::without(std::size_t i) const {
    at(i);
    if (bodies_.size() == 1) throw CannotDiscardLastError();
    std::vector<ConvexBody> rest;
    rest.reserve(bodies_.size() - 1);
    for (std::size_t j = 0; j < bodies_.size(); ++j) {
        if (j != i) rest.push_back(bodies_[j]);
    }
    return Exhauster(std::move(rest));
}

}  // namespace exh
