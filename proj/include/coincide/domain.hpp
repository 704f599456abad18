#pragma once

#include "coincide/bezier.hpp"

#include <optional>
#include <vector>

namespace coincide {

struct Polygon2 {
    std::vector<Point2> vertices;
    size_t size() const { return vertices.size(); }
    friend bool operator==(const Polygon2&, const Polygon2&) = default;
};

struct Decomposition {
    std::vector<Polygon2> quads;
    std::optional<Polygon2> tri;
};

Rat signed_area(const Polygon2& p);
Rat area(const Polygon2& p);  // positive for CCW input
bool is_convex(const Polygon2& p);

// CCW, collinear and repeated vertices removed, starting at the
// lexicographically smallest (u, v) vertex.
Polygon2 canonical(const Polygon2& p);

// Intersection of a convex polygon with [0,1]^2. The raw version returns the
// (possibly degenerate: empty, a point, or a segment) canonical vertex list.
Polygon2 clip_to_unit_square_raw(const Polygon2& q);
std::optional<Polygon2> clip_quad_to_unit_square(const Polygon2& q);

// Fan from vertex 0: (v0,v1,v2,v3), (v0,v3,v4,v5), ... plus a final triangle
// when the vertex count is odd.
Decomposition decompose(const Polygon2& g);

bool point_in_convex(const Polygon2& p, const Point2& x);  // closed polygon, CCW

}  // namespace coincide
