#include "coincide/generator.hpp"

#include "coincide/domain.hpp"
#include "coincide/irreducibility.hpp"

#include <array>
#include <stdexcept>

namespace coincide {

long Rng::integer(long lo, long hi)
{
    if (hi < lo)
        throw std::invalid_argument("empty range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(g_() % span);
}

Rat Rng::rational(long lo, long hi, long max_den)
{
    long d = integer(1, max_den);
    long k = integer(lo * d, hi * d);
    return Rat(k, d);
}

ControlNet random_irreducible_net(int n, int m, Rng& rng, bool rank2, int max_tries)
{
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        ControlNet net(n, m);
        Rat ax = rng.rational(1, 4, 2), bx = rng.rational(1, 4, 2), cx = rng.rational(-2, 2, 2);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= m; ++j) {
                Rat x = rank2 ? cx + ax * Rat(i, n) + bx * Rat(j, m) : rng.rational(-4, 4, 3);
                net(i, j) = Point3(x, rng.rational(-4, 4, 3), rng.rational(-4, 4, 3));
            }
        if (surface_irreducible(net))
            return net;
    }
    throw std::runtime_error("could not generate an irreducible net");
}

AffineReparam random_window(Rng& rng)
{
    for (;;) {
        Rat a = rng.rational(-1, 2, 4) / Rat(2), b = rng.rational(-1, 2, 4) / Rat(2);
        Rat c = rng.rational(-1, 2, 4) / Rat(2), d = rng.rational(-1, 2, 4) / Rat(2);
        if (a != b && c != d)
            return {a, b, c, d};
    }
}

namespace {

// strictly convex: no repeated corners and no straight angles
bool convex_quad(const BilinearReparam& p)
{
    std::array<Point2, 4> v{p.A, p.B, p.C, p.D};
    int sign = 0;
    for (int i = 0; i < 4; ++i) {
        const Point2 &a = v[i], &b = v[(i + 1) % 4], &c = v[(i + 2) % 4];
        int s = ((b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u)).sign();
        if (s == 0 || (sign != 0 && s != sign))
            return false;
        sign = s;
    }
    return is_convex(Polygon2{{p.A, p.B, p.C, p.D}});
}

Point2 random_point(Rng& rng)
{
    return {rng.rational(-1, 3, 4) / Rat(2), rng.rational(-1, 3, 4) / Rat(2)};
}

}  // namespace

BilinearReparam random_convex_quad(Rng& rng)
{
    for (;;) {
        BilinearReparam p{random_point(rng), random_point(rng), random_point(rng), random_point(rng)};
        if (convex_quad(p))
            return p;
    }
}

BilinearReparam random_trapezoid(Rng& rng)
{
    for (;;) {
        Rat a1 = rng.rational(-1, 3, 4) / Rat(2), b1 = rng.rational(-1, 3, 4) / Rat(2);
        BilinearReparam p{{a1, rng.rational(-1, 3, 4) / Rat(2)},
                          {b1, rng.rational(-1, 3, 4) / Rat(2)},
                          {b1, rng.rational(-1, 3, 4) / Rat(2)},
                          {a1, rng.rational(-1, 3, 4) / Rat(2)}};
        if (a1 != b1 && convex_quad(p))
            return p;
    }
}

GenPair gen_same_degree(int n, int m, const AffineReparam& phi, Rng& rng)
{
    ControlNet base = random_irreducible_net(n, m, rng);
    return {base, subdivide(base, phi.a, phi.b, phi.c, phi.d), phi};
}

GenPair gen_cross_degree(int n, int m, const BilinearReparam& psi, Rng& rng, bool rank2)
{
    if (!convex_quad(psi))
        throw std::invalid_argument("planted quadrilateral is degenerate or not convex");
    ControlNet base = random_irreducible_net(n, m, rng, rank2);
    ControlNet other = reparam_bilinear(base, psi);
    if (!surface_irreducible(other))
        throw std::invalid_argument("planted quadrilateral yields a reducible second net");
    return {base, other, psi};
}

GenPair gen_mixed(int n, int m, const BilinearReparam& t, Rng& rng)
{
    if (t.A.u != t.D.u || t.B.u != t.C.u || !convex_quad(t))
        throw std::invalid_argument("planted map must be a convex trapezoid with D.u = A.u and C.u = B.u");
    ControlNet base = random_irreducible_net(n, m, rng);
    ControlNet other = reparam_bilinear(base, t, n + m, m);
    if (!surface_irreducible(other))
        throw std::invalid_argument("planted trapezoid yields a reducible second net");
    return {base, other, t};
}

namespace {

template <class Draw>
GenPair retry(Draw draw, int max_tries)
{
    for (int k = 0; k < max_tries; ++k) {
        try {
            return draw();
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("no planted map gave an irreducible pair");
}

}  // namespace

GenPair draw_cross_degree(int n, int m, Rng& rng, bool rank2, int max_tries)
{
    return retry([&] { return gen_cross_degree(n, m, random_convex_quad(rng), rng, rank2); }, max_tries);
}

GenPair draw_mixed(int n, int m, Rng& rng, int max_tries)
{
    return retry([&] { return gen_mixed(n, m, random_trapezoid(rng), rng); }, max_tries);
}

}  // namespace coincide
