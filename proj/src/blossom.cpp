#include "coincide/blossom.hpp"

#include <stdexcept>

namespace coincide {

Point2 BilinearReparam::operator()(const Rat& s, const Rat& t) const
{
    Rat s0 = Rat(1) - s, t0 = Rat(1) - t;
    Rat wa = s0 * t0, wb = s * t0, wc = s * t, wd = s0 * t;
    return {wa * A.u + wb * B.u + wc * C.u + wd * D.u, wa * A.v + wb * B.v + wc * C.v + wd * D.v};
}

BilinearReparam BilinearReparam::from_flat(const std::vector<Rat>& f)
{
    if (f.size() != 8)
        throw std::invalid_argument("bilinear reparametrization needs 8 numbers");
    return {{f[0], f[1]}, {f[2], f[3]}, {f[4], f[5]}, {f[6], f[7]}};
}

size_t TriangularNet::index(int d, int nu, int mu)
{
    if (nu < 0 || mu < 0 || nu + mu > d)
        throw std::out_of_range("triangular index");
    return static_cast<size_t>(nu * (d + 1) - nu * (nu - 1) / 2 + mu);
}

namespace {

// sum over all subsets of size k of the product of their elements
Rat subset_sum(const std::vector<Rat>& xs, int k)
{
    int n = static_cast<int>(xs.size());
    Rat total;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k)
            continue;
        Rat p(1);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                p *= xs[i];
        total += p;
    }
    return total;
}

Rat multinomial(int n, int i, int j)
{
    return binom(n, i) * binom(n - i, j);
}

// Minimal dense bivariate polynomial in (s, t).
struct BiPoly {
    int ds = 0, dt = 0;
    std::vector<Rat> c;

    BiPoly(int ds_, int dt_) : ds(ds_), dt(dt_), c(static_cast<size_t>(ds_ + 1) * (dt_ + 1)) {}
    Rat& at(int i, int j) { return c[static_cast<size_t>(i) * (dt + 1) + j]; }
    const Rat& at(int i, int j) const { return c[static_cast<size_t>(i) * (dt + 1) + j]; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b)
    {
        BiPoly r(a.ds + b.ds, a.dt + b.dt);
        for (int i = 0; i <= a.ds; ++i)
            for (int j = 0; j <= a.dt; ++j) {
                if (a.at(i, j).is_zero())
                    continue;
                for (int k = 0; k <= b.ds; ++k)
                    for (int l = 0; l <= b.dt; ++l)
                        r.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
            }
        return r;
    }
};

BiPoly bilinear_coordinate(const Rat& a, const Rat& b, const Rat& c, const Rat& d)
{
    // (1-s)(1-t)a + s(1-t)b + st c + (1-s)t d
    BiPoly p(1, 1);
    p.at(0, 0) = a;
    p.at(1, 0) = b - a;
    p.at(0, 1) = d - a;
    p.at(1, 1) = a - b + c - d;
    return p;
}

}  // namespace

Point3 tensor_blossom_direct(const MonomialForm& mf, const std::vector<Rat>& u_args, const std::vector<Rat>& v_args)
{
    if (static_cast<int>(u_args.size()) != mf.n || static_cast<int>(v_args.size()) != mf.m)
        throw std::invalid_argument("blossom argument count must match the degrees");
    Point3 out;
    for (int i = 0; i <= mf.n; ++i) {
        Rat bu = subset_sum(u_args, i) / binom(mf.n, i);
        for (int j = 0; j <= mf.m; ++j)
            out += (bu * subset_sum(v_args, j) / binom(mf.m, j)) * mf(i, j);
    }
    return out;
}

Point3 tri_blossom_direct(const MonomialForm& mf, const std::vector<Point2>& args)
{
    int d = mf.n + mf.m;
    if (static_cast<int>(args.size()) != d)
        throw std::invalid_argument("triangular blossom needs n+m arguments");
    // enumerate every assignment of the argument slots to {u, v, unused}
    std::vector<std::vector<Rat>> sums(mf.n + 1, std::vector<Rat>(mf.m + 1));
    int total = 1;
    for (int k = 0; k < d; ++k)
        total *= 3;
    for (int code = 0; code < total; ++code) {
        int c = code, ni = 0, nj = 0;
        Rat p(1);
        for (int k = 0; k < d; ++k, c /= 3) {
            if (c % 3 == 1) {
                ++ni;
                p *= args[k].u;
            } else if (c % 3 == 2) {
                ++nj;
                p *= args[k].v;
            }
        }
        if (ni <= mf.n && nj <= mf.m)
            sums[ni][nj] += p;
    }
    Point3 out;
    for (int i = 0; i <= mf.n; ++i)
        for (int j = 0; j <= mf.m; ++j)
            out += (sums[i][j] / multinomial(d, i, j)) * mf(i, j);
    return out;
}

ControlNet reparam_rectangle(const ControlNet& net, const AffineReparam& phi)
{
    int n = net.degree_u(), m = net.degree_v();
    MonomialForm mf = to_monomial(net);
    // e_i of the u-arguments (n-nu copies of a, nu of b), likewise for v
    auto sym = [](int deg, int nb, int i, const Rat& a, const Rat& b) {
        Rat s;
        for (int k = 0; k <= i; ++k) {
            Rat w = binom(deg - nb, k) * binom(nb, i - k);
            if (!w.is_zero())
                s += w * pow(a, k) * pow(b, i - k);
        }
        return s;
    };
    ControlNet out(n, m);
    for (int nu = 0; nu <= n; ++nu)
        for (int mu = 0; mu <= m; ++mu) {
            Point3 p;
            for (int i = 0; i <= n; ++i) {
                Rat su = sym(n, nu, i, phi.a, phi.b) / binom(n, i);
                if (su.is_zero())
                    continue;
                for (int j = 0; j <= m; ++j) {
                    Rat w = su * sym(m, mu, j, phi.c, phi.d) / binom(m, j);
                    if (!w.is_zero())
                        p += w * mf(i, j);
                }
            }
            out(nu, mu) = p;
        }
    return out;
}

ControlNet reparam_bilinear(const ControlNet& net, const BilinearReparam& psi)
{
    int d = net.degree_u() + net.degree_v();
    return reparam_bilinear(net, psi, d, d);
}

ControlNet reparam_bilinear(const ControlNet& net, const BilinearReparam& psi, int target_n, int target_m)
{
    int n = net.degree_u(), m = net.degree_v();
    MonomialForm mf = to_monomial(net);
    BiPoly U = bilinear_coordinate(psi.A.u, psi.B.u, psi.C.u, psi.D.u);
    BiPoly V = bilinear_coordinate(psi.A.v, psi.B.v, psi.C.v, psi.D.v);
    std::vector<BiPoly> up{BiPoly(0, 0)}, vp{BiPoly(0, 0)};
    up[0].at(0, 0) = Rat(1);
    vp[0].at(0, 0) = Rat(1);
    for (int i = 1; i <= n; ++i)
        up.push_back(up.back() * U);
    for (int j = 1; j <= m; ++j)
        vp.push_back(vp.back() * V);

    MonomialForm out(n + m, n + m);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j) {
            if (mf(i, j).is_zero())
                continue;
            BiPoly w = up[i] * vp[j];
            for (int k = 0; k <= w.ds; ++k)
                for (int l = 0; l <= w.dt; ++l)
                    if (!w.at(k, l).is_zero())
                        out(k, l) += w.at(k, l) * mf(i, j);
        }
    return from_monomial(out, target_n, target_m);
}

TriangularNet extract_triangle(const ControlNet& net, const Point2& M, const Point2& N, const Point2& P)
{
    Rat orient = (N.u - M.u) * (P.v - M.v) - (N.v - M.v) * (P.u - M.u);
    if (orient.is_zero())
        throw std::invalid_argument("triangle vertices are collinear");
    int n = net.degree_u(), m = net.degree_v(), d = n + m;
    MonomialForm mf = to_monomial(net);
    const Rat &a1 = M.u, &a2 = M.v, &b1 = N.u, &b2 = N.v, &c1 = P.u, &c2 = P.v;

    TriangularNet tri(d);
    for (int nu = 0; nu <= d; ++nu)
        for (int mu = 0; nu + mu <= d; ++mu) {
            int lam = d - nu - mu;
            Point3 q;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= m; ++j) {
                    if (mf(i, j).is_zero())
                        continue;
                    Rat s;
                    for (int ia = std::max(0, i - mu - lam); ia <= std::min(i, nu); ++ia)
                        for (int ib = std::max(0, i - nu - lam); ib <= std::min(i - ia, mu); ++ib) {
                            int ig = i - ia - ib;
                            if (ig < 0 || ig > lam)
                                continue;
                            Rat wi = binom(nu, ia) * binom(mu, ib) * binom(lam, ig) * pow(a1, ia) * pow(b1, ib) * pow(c1, ig);
                            int ja_lo = std::max(0, j - (mu - ib) - (lam - ig)), ja_hi = std::min(j, nu - ia);
                            for (int ja = ja_lo; ja <= ja_hi; ++ja) {
                                int jb_lo = std::max(0, j - (nu - ia) - (lam - ig)), jb_hi = std::min(j - ja, mu - ib);
                                for (int jb = jb_lo; jb <= jb_hi; ++jb) {
                                    int jg = j - ja - jb;
                                    Rat wj = binom(nu - ia, ja) * binom(mu - ib, jb) * binom(lam - ig, jg);
                                    if (wj.is_zero())
                                        continue;
                                    s += wi * wj * pow(a2, ja) * pow(b2, jb) * pow(c2, jg);
                                }
                            }
                        }
                    q += (s / multinomial(d, i, j)) * mf(i, j);
                }
            tri(nu, mu) = q;
        }
    return tri;
}

Point3 evaluate(const TriangularNet& tri, const Rat& wM, const Rat& wN)
{
    int d = tri.degree;
    Rat wP = Rat(1) - wM - wN;
    Point3 out;
    for (int nu = 0; nu <= d; ++nu)
        for (int mu = 0; nu + mu <= d; ++mu) {
            int lam = d - nu - mu;
            Rat w = multinomial(d, nu, mu) * pow(wM, nu) * pow(wN, mu) * pow(wP, lam);
            out += w * tri(nu, mu);
        }
    return out;
}

}  // namespace coincide
