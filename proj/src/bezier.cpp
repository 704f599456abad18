#include "coincide/bezier.hpp"

#include "coincide/linalg.hpp"

#include <stdexcept>

namespace coincide {

Rat dot(const Vec3& a, const Vec3& b)
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

Vec3 cross(const Vec3& a, const Vec3& b)
{
    return Vec3(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x);
}

std::string to_string(const Vec3& v)
{
    return "(" + v.x.str() + ", " + v.y.str() + ", " + v.z.str() + ")";
}

ControlNet::ControlNet(int n, int m) : n_(n), m_(m), p_(static_cast<size_t>(n + 1) * (m + 1))
{
    if (n < 0 || m < 0)
        throw std::invalid_argument("negative degree");
}

ControlNet::ControlNet(std::vector<std::vector<Point3>> rows)
{
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("empty control net");
    n_ = static_cast<int>(rows.size()) - 1;
    m_ = static_cast<int>(rows[0].size()) - 1;
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != m_ + 1)
            throw std::invalid_argument("ragged control net");
        for (auto& p : r)
            p_.push_back(std::move(p));
    }
}

std::string NetSymmetry::name() const
{
    std::string s = transpose ? "transpose" : "";
    if (flip_u)
        s += s.empty() ? "flip_u" : "+flip_u";
    if (flip_v)
        s += s.empty() ? "flip_v" : "+flip_v";
    return s.empty() ? "identity" : s;
}

std::optional<NetSymmetry> NetSymmetry::from_name(const std::string& s)
{
    for (int k = 0; k < 8; ++k) {
        NetSymmetry y{(k & 1) != 0, (k & 2) != 0, (k & 4) != 0};
        if (y.name() == s)
            return y;
    }
    return std::nullopt;
}

std::vector<NetSymmetry> symmetries(int n, int m)
{
    std::vector<NetSymmetry> out;
    int count = n == m ? 8 : 4;
    for (int k = 0; k < count; ++k)
        out.push_back(NetSymmetry{(k & 1) != 0, (k & 2) != 0, (k & 4) != 0});
    return out;
}

ControlNet apply(const NetSymmetry& s, const ControlNet& net)
{
    ControlNet t = s.transpose ? transpose(net) : net;
    int n = t.degree_u(), m = t.degree_v();
    ControlNet r(n, m);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
            r(i, j) = t(s.flip_u ? n - i : i, s.flip_v ? m - j : j);
    return r;
}

namespace {

// de Casteljau with a different parameter at each level; with all levels
// equal this is plain evaluation, in general it is the curve's blossom.
Point3 blossom_curve(std::vector<Point3> pts, const std::vector<Rat>& args)
{
    int n = static_cast<int>(pts.size()) - 1;
    for (int r = 1; r <= n; ++r) {
        const Rat& t = args[r - 1];
        Rat s = Rat(1) - t;
        for (int i = 0; i + r <= n; ++i)
            pts[i] = s * pts[i] + t * pts[i + 1];
    }
    return pts[0];
}

Point3 casteljau(std::vector<Point3> pts, const Rat& t)
{
    size_t n = pts.empty() ? 0 : pts.size() - 1;
    std::vector<Rat> args(n, t);
    return blossom_curve(std::move(pts), args);
}

// Control points of a curve over [a, b]: blossoms f(a^{n-k}, b^k).
std::vector<Point3> subdivide_curve(const std::vector<Point3>& pts, const Rat& a, const Rat& b)
{
    int n = static_cast<int>(pts.size()) - 1;
    std::vector<Point3> out(pts.size());
    std::vector<Rat> args(n);
    for (int k = 0; k <= n; ++k) {
        for (int r = 0; r < n; ++r)
            args[r] = r < n - k ? a : b;
        out[k] = blossom_curve(pts, args);
    }
    return out;
}

}  // namespace

Point3 evaluate(const BezierCurve3& c, const Rat& t)
{
    return casteljau(c.points, t);
}

Point3 evaluate(const ControlNet& net, const Rat& u, const Rat& v)
{
    int n = net.degree_u(), m = net.degree_v();
    std::vector<Point3> col(n + 1);
    for (int i = 0; i <= n; ++i) {
        std::vector<Point3> row(m + 1);
        for (int j = 0; j <= m; ++j)
            row[j] = net(i, j);
        col[i] = casteljau(std::move(row), v);
    }
    return casteljau(std::move(col), u);
}

Point3 evaluate(const MonomialForm& mf, const Rat& u, const Rat& v)
{
    Point3 acc;
    for (int i = mf.n; i >= 0; --i) {
        Point3 inner;
        for (int j = mf.m; j >= 0; --j)
            inner = inner * v + mf(i, j);
        acc = acc * u + inner;
    }
    return acc;
}

MonomialForm to_monomial(const ControlNet& net)
{
    int n = net.degree_u(), m = net.degree_v();
    // first along u, then along v
    MonomialForm tmp(n, m), out(n, m);
    for (int j = 0; j <= m; ++j)
        for (int k = 0; k <= n; ++k) {
            Vec3 s;
            for (int i = 0; i <= k; ++i) {
                Rat w = binom(k, i);
                s += ((k - i) % 2 ? -w : w) * net(i, j);
            }
            tmp(k, j) = binom(n, k) * s;
        }
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= m; ++l) {
            Vec3 s;
            for (int j = 0; j <= l; ++j) {
                Rat w = binom(l, j);
                s += ((l - j) % 2 ? -w : w) * tmp(k, j);
            }
            out(k, l) = binom(m, l) * s;
        }
    return out;
}

ControlNet from_monomial(const MonomialForm& mf)
{
    return from_monomial(mf, mf.n, mf.m);
}

ControlNet from_monomial(const MonomialForm& mf, int n, int m)
{
    for (int a = 0; a <= mf.n; ++a)
        for (int b = 0; b <= mf.m; ++b)
            if ((a > n || b > m) && !mf(a, b).is_zero())
                throw std::invalid_argument("monomial form exceeds target degree");
    int na = std::min(n, mf.n), mb = std::min(m, mf.m);
    ControlNet tmp(n, mb), out(n, m);
    for (int b = 0; b <= mb; ++b)
        for (int i = 0; i <= n; ++i) {
            Vec3 s;
            for (int a = 0; a <= std::min(i, na); ++a)
                s += (binom(i, a) / binom(n, a)) * mf(a, b);
            tmp(i, b) = s;
        }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j) {
            Vec3 s;
            for (int b = 0; b <= std::min(j, mb); ++b)
                s += (binom(j, b) / binom(m, b)) * tmp(i, b);
            out(i, j) = s;
        }
    return out;
}

FDSet finite_differences(const ControlNet& net)
{
    int n = net.degree_u(), m = net.degree_v();
    FDSet fd;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j) {
            Rat w = binom(n, i) * binom(m, j);
            if ((n + m - i - j) % 2)
                w = -w;
            fd.rho += w * net(i, j);
            fd.rho10 += (w * Rat(i - n)) * net(i, j);
            fd.rho01 += (w * Rat(j - m)) * net(i, j);
        }
    if (n > 0)
        fd.rho10 = fd.rho10 / Rat(n);
    if (m > 0)
        fd.rho01 = fd.rho01 / Rat(m);
    return fd;
}

Vec3 top_difference(const std::vector<Point3>& pts)
{
    int d = static_cast<int>(pts.size()) - 1;
    Vec3 s;
    for (int i = 0; i <= d; ++i) {
        Rat w = binom(d, i);
        s += ((d - i) % 2 ? -w : w) * pts[i];
    }
    return s;
}

Vec3 top_difference1(const std::vector<Point3>& pts)
{
    int d = static_cast<int>(pts.size()) - 1;
    Vec3 s;
    for (int i = 0; i <= d; ++i) {
        Rat w = binom(d, i) * Rat(i - d);
        s += ((d - i) % 2 ? -w : w) * pts[i];
    }
    return s;
}

BoundaryFD boundary_differences(const ControlNet& net)
{
    int d = net.degree_u();
    if (net.degree_v() != d)
        throw std::invalid_argument("boundary differences need a square-degree net");
    std::array<BezierCurve3, 4> edges{row_curve(net, 0), col_curve(net, 0), row_curve(net, d), col_curve(net, d)};
    BoundaryFD b;
    for (int k = 0; k < 4; ++k) {
        b.delta[k] = top_difference(edges[k].points);
        b.delta1[k] = top_difference1(edges[k].points);
    }
    return b;
}

ControlNet subdivide(const ControlNet& net, const Rat& a, const Rat& b, const Rat& c, const Rat& d)
{
    if (a == b || c == d)
        throw std::invalid_argument("degenerate window");
    int n = net.degree_u(), m = net.degree_v();
    ControlNet tmp(n, m), out(n, m);
    for (int j = 0; j <= m; ++j) {
        auto r = subdivide_curve(row_curve(net, j).points, a, b);
        for (int i = 0; i <= n; ++i)
            tmp(i, j) = r[i];
    }
    for (int i = 0; i <= n; ++i) {
        auto r = subdivide_curve(col_curve(tmp, i).points, c, d);
        for (int j = 0; j <= m; ++j)
            out(i, j) = r[j];
    }
    return out;
}

ControlNet degree_elevate_u(const ControlNet& net)
{
    int n = net.degree_u(), m = net.degree_v();
    ControlNet out(n + 1, m);
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= n + 1; ++i) {
            Rat t(i, n + 1);
            Point3 p;
            if (i > 0)
                p += t * net(i - 1, j);
            if (i <= n)
                p += (Rat(1) - t) * net(i, j);
            out(i, j) = p;
        }
    return out;
}

ControlNet degree_elevate_v(const ControlNet& net)
{
    return transpose(degree_elevate_u(transpose(net)));
}

ControlNet transpose(const ControlNet& net)
{
    ControlNet t(net.degree_v(), net.degree_u());
    for (int i = 0; i <= net.degree_u(); ++i)
        for (int j = 0; j <= net.degree_v(); ++j)
            t(j, i) = net(i, j);
    return t;
}

BezierCurve3 row_curve(const ControlNet& net, int j)
{
    BezierCurve3 c;
    for (int i = 0; i <= net.degree_u(); ++i)
        c.points.push_back(net(i, j));
    return c;
}

BezierCurve3 col_curve(const ControlNet& net, int i)
{
    BezierCurve3 c;
    for (int j = 0; j <= net.degree_v(); ++j)
        c.points.push_back(net(i, j));
    return c;
}

std::optional<Rat> collinear(const Vec3& v1, const Vec3& v2)
{
    if (v1.is_zero())
        throw std::invalid_argument("collinear: reference vector is zero");
    if (!cross(v1, v2).is_zero())
        return std::nullopt;
    for (int k = 0; k < 3; ++k)
        if (!v1[k].is_zero())
            return v2[k] / v1[k];
    return std::nullopt;
}

bool coplanar(const std::vector<Vec3>& vs)
{
    RatMatrix m;
    for (const auto& v : vs)
        m.append_row({v.x, v.y, v.z});
    return rank(m) <= 2;
}

std::optional<NetSymmetry> nets_equal_up_to_symmetry(const ControlNet& n1, const ControlNet& n2)
{
    for (const auto& s : symmetries(n1.degree_u(), n1.degree_v())) {
        bool dims = s.transpose ? (n1.degree_v() == n2.degree_u() && n1.degree_u() == n2.degree_v())
                                : (n1.degree_u() == n2.degree_u() && n1.degree_v() == n2.degree_v());
        if (dims && apply(s, n1) == n2)
            return s;
    }
    return std::nullopt;
}

}  // namespace coincide
