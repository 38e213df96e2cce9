#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace exh {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    // Throws ValidationError on NaN or infinite coordinates.
    Point2(double x_, double y_);

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

// Unit direction u = (cos theta, sin theta) with theta kept in [0, 2pi).
class Direction {
public:
    explicit Direction(double theta);
    // Direction of a nonzero vector.
    static Direction of(const Point2& g);

    double theta() const { return theta_; }
    Point2 unit() const;

private:
    double theta_;
};

enum class BodyKind { polygon, disc };

/// A nonempty compact convex set of the plane: either a canonical polygon
/// (CCW, strictly convex, 1 to n vertices) or a disc. Bodies are immutable;
/// the only ways to build one are the factories below, which canonicalize.
class ConvexBody {
public:
    static ConvexBody polygon(std::span<const Point2> points, std::string label = {});
    static ConvexBody disc(Point2 center, double radius, std::string label = {});

    BodyKind kind() const { return kind_; }
    bool is_polygon() const { return kind_ == BodyKind::polygon; }
    bool is_disc() const { return kind_ == BodyKind::disc; }

    // Polygon vertices, CCW. Empty for discs.
    const std::vector<Point2>& vertices() const { return vertices_; }
    const Point2& center() const { return center_; }
    double radius() const { return radius_; }
    const std::string& label() const { return label_; }

    ConvexBody with_label(std::string label) const;

    // Same point set (labels ignored). Polygons compare as cyclic vertex lists.
    bool same_shape(const ConvexBody& other) const;

private:
    ConvexBody() = default;

    BodyKind kind_ = BodyKind::polygon;
    std::vector<Point2> vertices_;
    Point2 center_;
    double radius_ = 0.0;
    std::string label_;
};

/// Convex hull of `points` as a CCW polygon without duplicate or collinear
/// vertices. Cross products below 1e-12 times the squared coordinate scale
/// count as collinear. Throws ValidationError on empty input.
ConvexBody canonicalize_polygon(std::span<const Point2> points);

// H(C, u_theta).
double support_value(const ConvexBody& body, const Direction& dir);
// H(C, g) for an arbitrary (not necessarily unit) vector g; positively homogeneous in g.
double support_value(const ConvexBody& body, const Point2& g);

// inner ⊆ outer, decided by exact support-curve dominance within `tol`.
bool contains(const ConvexBody& outer, const ConvexBody& inner, double tol = 1e-9);

/// Intersection of two polygon-kind bodies by half-plane clipping.
/// Returns std::nullopt when the intersection is empty.
/// Throws UnsupportedKindError for discs.
std::optional<ConvexBody> intersect_polygons(const ConvexBody& a, const ConvexBody& b);

/// Ordered, nonempty list of bodies with unique labels. Bodies without a
/// label are named "C<index>".
class Exhauster {
public:
    explicit Exhauster(std::vector<ConvexBody> bodies);

    std::size_t size() const { return bodies_.size(); }
    const ConvexBody& operator[](std::size_t i) const { return bodies_[i]; }
    const ConvexBody& at(std::size_t i) const;
    const std::vector<ConvexBody>& bodies() const { return bodies_; }

    // Index of the body with the given label, if any.
    std::optional<std::size_t> find(const std::string& label) const;

    // Copy with body i removed. Throws CannotDiscardLastError if it is the only one.
    Exhauster without(std::size_t i) const;

private:
    std::vector<ConvexBody> bodies_;
};

}  // namespace exh
