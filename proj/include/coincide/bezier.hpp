#pragma once

#include "coincide/rat.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace coincide {

struct Vec3 {
    Rat x, y, z;

    Vec3() = default;
    Vec3(Rat x_, Rat y_, Rat z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    const Rat& operator[](int k) const { return k == 0 ? x : k == 1 ? y : z; }
    Rat& operator[](int k) { return k == 0 ? x : k == 1 ? y : z; }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(const Rat& s) { x *= s; y *= s; z *= s; return *this; }
    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator-(const Vec3& a) { return Vec3(-a.x, -a.y, -a.z); }
    friend Vec3 operator*(Vec3 a, const Rat& s) { return a *= s; }
    friend Vec3 operator*(const Rat& s, Vec3 a) { return a *= s; }
    friend Vec3 operator/(const Vec3& a, const Rat& s) { return a * s.inv(); }
    friend bool operator==(const Vec3& a, const Vec3& b) = default;
};
using Point3 = Vec3;

Rat dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
std::string to_string(const Vec3& v);

struct Point2 {
    Rat u, v;
    friend bool operator==(const Point2&, const Point2&) = default;
};

// (n+1) x (m+1) grid; points(i, j) with i along u and j along v.
class ControlNet {
public:
    ControlNet() = default;
    ControlNet(int n, int m);
    explicit ControlNet(std::vector<std::vector<Point3>> rows);

    int degree_u() const { return n_; }
    int degree_v() const { return m_; }
    Point3& operator()(int i, int j) { return p_[static_cast<size_t>(i) * (m_ + 1) + j]; }
    const Point3& operator()(int i, int j) const { return p_[static_cast<size_t>(i) * (m_ + 1) + j]; }
    const std::vector<Point3>& data() const { return p_; }

    friend bool operator==(const ControlNet&, const ControlNet&) = default;

private:
    int n_ = 0, m_ = 0;
    std::vector<Point3> p_;
};

// S(u,v) = sum c(i,j) u^i v^j
struct MonomialForm {
    int n = 0, m = 0;
    std::vector<Vec3> c;

    MonomialForm() = default;
    MonomialForm(int n_, int m_) : n(n_), m(m_), c(static_cast<size_t>(n_ + 1) * (m_ + 1)) {}
    Vec3& operator()(int i, int j) { return c[static_cast<size_t>(i) * (m + 1) + j]; }
    const Vec3& operator()(int i, int j) const { return c[static_cast<size_t>(i) * (m + 1) + j]; }
    friend bool operator==(const MonomialForm&, const MonomialForm&) = default;
};

struct FDSet {
    Vec3 rho, rho10, rho01;
};

struct BoundaryFD {
    std::array<Vec3, 4> delta, delta1;
};

struct NetSymmetry {
    bool flip_u = false, flip_v = false, transpose = false;

    std::string name() const;
    static std::optional<NetSymmetry> from_name(const std::string& s);
    friend bool operator==(const NetSymmetry&, const NetSymmetry&) = default;
};

// Identity first; transposing elements only when the net is square.
std::vector<NetSymmetry> symmetries(int n, int m);
ControlNet apply(const NetSymmetry& s, const ControlNet& net);

struct BezierCurve3 {
    std::vector<Point3> points;
    int degree() const { return static_cast<int>(points.size()) - 1; }
};

Point3 evaluate(const ControlNet& net, const Rat& u, const Rat& v);
Point3 evaluate(const MonomialForm& mf, const Rat& u, const Rat& v);
Point3 evaluate(const BezierCurve3& c, const Rat& t);

MonomialForm to_monomial(const ControlNet& net);
ControlNet from_monomial(const MonomialForm& mf);
// Bernstein net of degree (n, m) for a monomial form of degree <= (n, m).
ControlNet from_monomial(const MonomialForm& mf, int n, int m);

FDSet finite_differences(const ControlNet& net);
BoundaryFD boundary_differences(const ControlNet& net);
// Top and next-to-top alternating sums of a single control polygon.
Vec3 top_difference(const std::vector<Point3>& pts);
Vec3 top_difference1(const std::vector<Point3>& pts);

ControlNet subdivide(const ControlNet& net, const Rat& a, const Rat& b, const Rat& c, const Rat& d);
ControlNet degree_elevate_u(const ControlNet& net);
ControlNet degree_elevate_v(const ControlNet& net);
ControlNet transpose(const ControlNet& net);

BezierCurve3 row_curve(const ControlNet& net, int j);  // C^u_j: points (i, j), i = 0..n
BezierCurve3 col_curve(const ControlNet& net, int i);  // C^v_i: points (i, j), j = 0..m

std::optional<Rat> collinear(const Vec3& v1, const Vec3& v2);  // kappa with v2 = kappa v1
bool coplanar(const std::vector<Vec3>& vs);
std::optional<NetSymmetry> nets_equal_up_to_symmetry(const ControlNet& n1, const ControlNet& n2);

}  // namespace coincide
