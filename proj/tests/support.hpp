#pragma once
// Helpers shared by the unit tests and the acceptance runner. Everything here
// is an independent oracle: nothing calls into the code path being checked.

#include "coincide/cross_degree.hpp"
#include "coincide/generator.hpp"
#include "coincide/io.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <string>

namespace testsupport {

using namespace coincide;

inline std::string fixture_path(const std::string& name)
{
    return std::string(COINCIDE_FIXTURE_DIR) + "/" + name + ".json";
}

inline ControlNet fixture(const std::string& name) { return read_net_file(fixture_path(name)); }

inline std::vector<Rat> rats(std::initializer_list<Rat> l) { return l; }

// ---- overlap oracle: separating axis test on closed convex polygons ----

inline Rat cross2(const Point2& a, const Point2& b) { return a.u * b.v - a.v * b.u; }

// Convex polygons with non-empty interior. Returns true when the interiors
// intersect, i.e. no edge normal gives projections overlapping in at most a
// point.
inline bool interiors_overlap(const std::vector<Point2>& p, const std::vector<Point2>& q)
{
    auto separated_by_edges = [](const std::vector<Point2>& a, const std::vector<Point2>& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            const Point2& p0 = a[i];
            const Point2& p1 = a[(i + 1) % a.size()];
            Point2 axis{p0.v - p1.v, p1.u - p0.u};
            if (axis.u.is_zero() && axis.v.is_zero())
                continue;
            auto proj = [&](const Point2& x) { return axis.u * x.u + axis.v * x.v; };
            Rat amin = proj(a[0]), amax = amin, bmin = proj(b[0]), bmax = bmin;
            for (const auto& x : a) {
                amin = std::min(amin, proj(x));
                amax = std::max(amax, proj(x));
            }
            for (const auto& x : b) {
                bmin = std::min(bmin, proj(x));
                bmax = std::max(bmax, proj(x));
            }
            if (amax <= bmin || bmax <= amin)
                return true;
        }
        return false;
    };
    return !separated_by_edges(p, q) && !separated_by_edges(q, p);
}

inline std::vector<Point2> unit_square() { return {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; }

inline bool same_vertex_set(std::vector<Point2> a, std::vector<Point2> b)
{
    auto lt = [](const Point2& x, const Point2& y) { return x.u < y.u || (x.u == y.u && x.v < y.v); };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    return a == b;
}

// Expected relation for a planted parameter region (convex, non-degenerate).
inline Relation expected_relation(const std::vector<Point2>& region)
{
    if (same_vertex_set(region, unit_square()))
        return Relation::Coincident;
    return interiors_overlap(region, unit_square()) ? Relation::CoincidentPart : Relation::Disjoint;
}

inline std::vector<Point2> window_region(const AffineReparam& w)
{
    return {{w.a, w.c}, {w.b, w.c}, {w.b, w.d}, {w.a, w.d}};
}

inline std::vector<Point2> quad_region(const BilinearReparam& q) { return {q.A, q.B, q.C, q.D}; }

// ---- Q(sqrt D) arithmetic for evaluating nets at quadratic irrationals ----

struct QSqrt {
    Rat a, b;  // a + b sqrt(D), D shared and not a rational square
    const Rat* D = nullptr;
    QSqrt operator+(const QSqrt& o) const { return {a + o.a, b + o.b, D}; }
    QSqrt operator-(const QSqrt& o) const { return {a - o.a, b - o.b, D}; }
    QSqrt operator*(const QSqrt& o) const { return {a * o.a + b * o.b * *D, a * o.b + b * o.a, D}; }
    QSqrt operator*(const Rat& r) const { return {a * r, b * r, D}; }
    QSqrt inv() const
    {
        Rat nrm = a * a - b * b * *D;
        return {a / nrm, -b / nrm, D};
    }
    bool operator==(const QSqrt& o) const { return a == o.a && b == o.b; }
    double approx() const { return a.to_double() + b.to_double() * std::sqrt(D->to_double()); }
};

inline bool is_rational_square(const Rat& r)
{
    return r.sign() >= 0 && mpz_perfect_square_p(r.num().get_mpz_t()) && mpz_perfect_square_p(r.den().get_mpz_t());
}

inline Rat rational_sqrt(const Rat& r)
{
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), r.num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.den().get_mpz_t());
    return Rat(mpq_class(n, d));
}

struct QPoint3 {
    QSqrt x, y, z;
};

// Plain Bernstein sum, independent of the library's de Casteljau.
inline QPoint3 evaluate_q(const ControlNet& net, const QSqrt& u, const QSqrt& v)
{
    const Rat* D = u.D;
    QSqrt one{1, 0, D};
    auto bern = [&](int n, int i, const QSqrt& t) {
        QSqrt r{binom(n, i), 0, D};
        for (int k = 0; k < i; ++k)
            r = r * t;
        for (int k = 0; k < n - i; ++k)
            r = r * (one - t);
        return r;
    };
    QPoint3 out{{0, 0, D}, {0, 0, D}, {0, 0, D}};
    for (int i = 0; i <= net.degree_u(); ++i)
        for (int j = 0; j <= net.degree_v(); ++j) {
            QSqrt w = bern(net.degree_u(), i, u) * bern(net.degree_v(), j, v);
            const Point3& p = net(i, j);
            out.x = out.x + w * p.x;
            out.y = out.y + w * p.y;
            out.z = out.z + w * p.z;
        }
    return out;
}

// Checks net(psi^{-1}(P)) == expected where psi is bilinear and the preimage
// is the one inside [0,1]^2. The preimage solves a quadratic, so it lives in
// Q(sqrt disc); when disc is a rational square the arithmetic is rational.
inline bool preimage_matches(const ControlNet& net, const BilinearReparam& psi, const Point2& P, const Point3& expected)
{
    Point2 e{psi.B.u - psi.A.u, psi.B.v - psi.A.v};
    Point2 f{psi.D.u - psi.A.u, psi.D.v - psi.A.v};
    Point2 g{psi.A.u - psi.B.u + psi.C.u - psi.D.u, psi.A.v - psi.B.v + psi.C.v - psi.D.v};
    Point2 h{P.u - psi.A.u, P.v - psi.A.v};
    // h = s e + t f + s t g; eliminating s gives k2 t^2 + k1 t + k0 = 0
    Rat k2 = cross2(g, f), k1 = cross2(e, f) + cross2(h, g), k0 = cross2(h, e);
    Rat disc = k1 * k1 - Rat(4) * k2 * k0;
    Rat Dval = is_rational_square(disc) ? Rat(0) : disc;
    Rat root = is_rational_square(disc) ? rational_sqrt(disc) : Rat(0);
    const Rat* D = &Dval;

    std::vector<QSqrt> ts;
    if (k2.is_zero()) {
        ts.push_back({-k0 / k1, 0, D});
    } else {
        for (int sgn : {1, -1}) {
            QSqrt sq = Dval.is_zero() ? QSqrt{root, 0, D} : QSqrt{0, 1, D};
            ts.push_back((QSqrt{-k1, 0, D} + sq * Rat(sgn)) * (Rat(1) / (Rat(2) * k2)));
        }
    }
    for (const QSqrt& t : ts) {
        double td = t.approx();
        if (td < -1e-12 || td > 1 + 1e-12)
            continue;
        // s from whichever component has a nonzero denominator e + t g
        QSqrt den = QSqrt{e.u, 0, D} + t * g.u;
        QSqrt num = QSqrt{h.u, 0, D} - t * f.u;
        if (den.a.is_zero() && den.b.is_zero()) {
            den = QSqrt{e.v, 0, D} + t * g.v;
            num = QSqrt{h.v, 0, D} - t * f.v;
        }
        QSqrt s = num * den.inv();
        double sd = s.approx();
        if (sd < -1e-12 || sd > 1 + 1e-12)
            continue;
        QPoint3 q = evaluate_q(net, s, t);
        QSqrt ex{expected.x, 0, D}, ey{expected.y, 0, D}, ez{expected.z, 0, D};
        return q.x == ex && q.y == ey && q.z == ez;
    }
    return false;
}

// Random rational point in the unit square.
inline Point2 random_param(Rng& rng) { return {rng.rational(0, 1, 97), rng.rational(0, 1, 89)}; }

// Random convex combination of a convex polygon's vertices.
inline Point2 random_point_in(const std::vector<Point2>& poly, Rng& rng)
{
    std::vector<Rat> w;
    Rat total = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        w.push_back(Rat(rng.integer(0, 20)));
        total = total + w.back();
    }
    if (total.is_zero()) {
        w[0] = 1;
        total = 1;
    }
    Point2 p{0, 0};
    for (size_t i = 0; i < poly.size(); ++i) {
        p.u = p.u + w[i] * poly[i].u / total;
        p.v = p.v + w[i] * poly[i].v / total;
    }
    return p;
}

// The planted map for the transposed pair (base^T, other^T) of a mixed case.
inline BilinearReparam transposed_map(const BilinearReparam& p)
{
    auto sw = [](const Point2& x) { return Point2{x.v, x.u}; };
    return {sw(p.A), sw(p.D), sw(p.C), sw(p.B)};
}

}  // namespace testsupport
