#pragma once

#include "coincide/bezier.hpp"

#include <utility>
#include <vector>

namespace coincide {

struct AffineReparam {
    Rat a, b, c, d;  // u = (1-s)a + s b, v = (1-t)c + t d
    friend bool operator==(const AffineReparam&, const AffineReparam&) = default;
};

// (s,t) = (0,0) -> A, (1,0) -> B, (1,1) -> C, (0,1) -> D
struct BilinearReparam {
    Point2 A, B, C, D;

    Point2 operator()(const Rat& s, const Rat& t) const;
    std::vector<Rat> flat() const { return {A.u, A.v, B.u, B.v, C.u, C.v, D.u, D.v}; }
    static BilinearReparam from_flat(const std::vector<Rat>& f);
    friend bool operator==(const BilinearReparam&, const BilinearReparam&) = default;
};

// Total degree d; q(nu, mu) with nu copies of M and mu copies of N.
struct TriangularNet {
    int degree = 0;
    std::vector<Point3> points;  // row-major by nu

    TriangularNet() = default;
    explicit TriangularNet(int d) : degree(d), points(static_cast<size_t>(d + 1) * (d + 2) / 2) {}
    static size_t index(int d, int nu, int mu);
    Point3& operator()(int nu, int mu) { return points[index(degree, nu, mu)]; }
    const Point3& operator()(int nu, int mu) const { return points[index(degree, nu, mu)]; }
    friend bool operator==(const TriangularNet&, const TriangularNet&) = default;
};

Point3 tensor_blossom_direct(const MonomialForm& mf, const std::vector<Rat>& u_args, const std::vector<Rat>& v_args);
Point3 tri_blossom_direct(const MonomialForm& mf, const std::vector<Point2>& args);

ControlNet reparam_rectangle(const ControlNet& net, const AffineReparam& phi);
// S(psi(s,t)) as a degree (n+m, n+m) net, or at the given target degrees
// when the composition is known to be of lower degree.
ControlNet reparam_bilinear(const ControlNet& net, const BilinearReparam& psi);
ControlNet reparam_bilinear(const ControlNet& net, const BilinearReparam& psi, int target_n, int target_m);

TriangularNet extract_triangle(const ControlNet& net, const Point2& M, const Point2& N, const Point2& P);
// Evaluate at barycentric weights (wM, wN, 1 - wM - wN).
Point3 evaluate(const TriangularNet& tri, const Rat& wM, const Rat& wN);

}  // namespace coincide
