#include "coincide/domain.hpp"

#include <algorithm>
#include <stdexcept>

namespace coincide {

namespace {

Rat orient(const Point2& a, const Point2& b, const Point2& c)
{
    return (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u);
}

bool lex_less(const Point2& a, const Point2& b)
{
    return a.u < b.u || (a.u == b.u && a.v < b.v);
}

// Keep the part of p with f(x) >= 0 where f is affine.
template <class F>
std::vector<Point2> clip_half_plane(const std::vector<Point2>& p, F f)
{
    std::vector<Point2> out;
    size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = p[i];
        const Point2& b = p[(i + 1) % n];
        Rat fa = f(a), fb = f(b);
        if (fa.sign() >= 0)
            out.push_back(a);
        if ((fa.sign() > 0 && fb.sign() < 0) || (fa.sign() < 0 && fb.sign() > 0)) {
            Rat t = fa / (fa - fb);
            out.push_back({a.u + t * (b.u - a.u), a.v + t * (b.v - a.v)});
        }
    }
    return out;
}

}  // namespace

Rat signed_area(const Polygon2& p)
{
    Rat s;
    size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = p.vertices[i];
        const Point2& b = p.vertices[(i + 1) % n];
        s += a.u * b.v - b.u * a.v;
    }
    return s / Rat(2);
}

Rat area(const Polygon2& p)
{
    return signed_area(p);
}

bool is_convex(const Polygon2& p)
{
    // every vertex on the closed left side (or every one on the right side)
    // of every edge line, with positive area
    size_t n = p.size();
    if (n < 3)
        return false;
    int sign = signed_area(p).sign();
    if (sign == 0)
        return false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int s = orient(p.vertices[i], p.vertices[(i + 1) % n], p.vertices[j]).sign();
            if (s != 0 && s != sign)
                return false;
        }
    return true;
}

Polygon2 canonical(const Polygon2& p)
{
    std::vector<Point2> v;
    for (const auto& x : p.vertices)
        if (v.empty() || !(v.back() == x))
            v.push_back(x);
    while (v.size() > 1 && v.front() == v.back())
        v.pop_back();

    Polygon2 tmp{v};
    if (v.size() >= 3 && signed_area(tmp).is_zero()) {
        // degenerate: a segment (or a point)
        auto [lo, hi] = std::minmax_element(v.begin(), v.end(), lex_less);
        if (*lo == *hi)
            return Polygon2{{*lo}};
        return Polygon2{{*lo, *hi}};
    }
    if (v.size() < 3)
        return Polygon2{v};

    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        for (size_t i = 0; i < v.size(); ++i) {
            size_t n = v.size();
            const Point2& a = v[(i + n - 1) % n];
            const Point2& b = v[i];
            const Point2& c = v[(i + 1) % n];
            if (orient(a, b, c).is_zero()) {
                v.erase(v.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    if (signed_area(Polygon2{v}).sign() < 0)
        std::reverse(v.begin(), v.end());
    auto first = std::min_element(v.begin(), v.end(), lex_less);
    std::rotate(v.begin(), first, v.end());
    return Polygon2{v};
}

Polygon2 clip_to_unit_square_raw(const Polygon2& q)
{
    std::vector<Point2> p = q.vertices;
    p = clip_half_plane(p, [](const Point2& x) { return x.u; });
    p = clip_half_plane(p, [](const Point2& x) { return Rat(1) - x.u; });
    p = clip_half_plane(p, [](const Point2& x) { return x.v; });
    p = clip_half_plane(p, [](const Point2& x) { return Rat(1) - x.v; });
    if (p.empty())
        return Polygon2{};
    return canonical(Polygon2{p});
}

std::optional<Polygon2> clip_quad_to_unit_square(const Polygon2& q)
{
    if (!is_convex(q))
        throw std::invalid_argument("clip: polygon is not convex");
    Polygon2 g = clip_to_unit_square_raw(q);
    if (g.size() < 3)
        return std::nullopt;
    return g;
}

Decomposition decompose(const Polygon2& g)
{
    size_t n = g.size();
    if (n < 3)
        throw std::invalid_argument("decompose: fewer than 3 vertices");
    const auto& v = g.vertices;
    Decomposition d;
    size_t k = 1;
    while (k + 2 < n) {
        d.quads.push_back(Polygon2{{v[0], v[k], v[k + 1], v[k + 2]}});
        k += 2;
    }
    if (k + 1 < n)
        d.tri = Polygon2{{v[0], v[k], v[k + 1]}};
    return d;
}

bool point_in_convex(const Polygon2& p, const Point2& x)
{
    size_t n = p.size();
    for (size_t i = 0; i < n; ++i)
        if (orient(p.vertices[i], p.vertices[(i + 1) % n], x).sign() < 0)
            return false;
    return true;
}

}  // namespace coincide
