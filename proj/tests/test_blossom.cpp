#include "support.hpp"

#include <gtest/gtest.h>

using namespace coincide;
using namespace testsupport;

namespace {

ControlNet random_net(int n, int m, Rng& rng)
{
    ControlNet net(n, m);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
            net(i, j) = Point3(rng.rational(-6, 6, 5), rng.rational(-6, 6, 5), rng.rational(-6, 6, 5));
    return net;
}

Point2 lerp3(const Point2& M, const Point2& N, const Point2& P, const Rat& a, const Rat& b)
{
    Rat c = Rat(1) - a - b;
    return {a * M.u + b * N.u + c * P.u, a * M.v + b * N.v + c * P.v};
}

}  // namespace

TEST(Blossom, TriangularIndexIsRowMajorByNu)
{
    int d = 3;
    size_t k = 0;
    for (int nu = 0; nu <= d; ++nu)
        for (int mu = 0; nu + mu <= d; ++mu)
            EXPECT_EQ(TriangularNet::index(d, nu, mu), k++);
    EXPECT_EQ(TriangularNet(d).points.size(), k);
}

TEST(Blossom, TensorBlossomOnDiagonalIsEvaluation)
{
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        int n = static_cast<int>(rng.integer(1, 4)), m = static_cast<int>(rng.integer(1, 4));
        ControlNet net = random_net(n, m, rng);
        Rat u = rng.rational(-1, 2, 7), v = rng.rational(-1, 2, 7);
        EXPECT_EQ(tensor_blossom_direct(to_monomial(net), std::vector<Rat>(n, u), std::vector<Rat>(m, v)),
                  evaluate(net, u, v));
        // control points are blossom values at 0/1 arguments
        int i = static_cast<int>(rng.integer(0, n)), j = static_cast<int>(rng.integer(0, m));
        std::vector<Rat> us(n - i, Rat(0)), vs(m - j, Rat(0));
        us.insert(us.end(), i, Rat(1));
        vs.insert(vs.end(), j, Rat(1));
        EXPECT_EQ(tensor_blossom_direct(to_monomial(net), us, vs), net(i, j));
    }
}

TEST(Blossom, ReparamRectangleSpecialWindows)
{
    Rng rng(42);
    ControlNet net = random_net(3, 2, rng);
    EXPECT_EQ(reparam_rectangle(net, {0, 1, 0, 1}), net);
    EXPECT_EQ(reparam_rectangle(net, {1, 0, 0, 1}), apply(NetSymmetry{true, false, false}, net));
    EXPECT_EQ(reparam_rectangle(net, {0, 1, 1, 0}), apply(NetSymmetry{false, true, false}, net));
    for (int t = 0; t < 20; ++t) {
        AffineReparam w = random_window(rng);
        EXPECT_EQ(reparam_rectangle(net, w), subdivide(net, w.a, w.b, w.c, w.d));
    }
}

TEST(Blossom, ReparamBilinearEvaluatesComposition)
{
    Rng rng(43);
    for (int t = 0; t < 15; ++t) {
        int n = static_cast<int>(rng.integer(1, 3)), m = static_cast<int>(rng.integer(1, 3));
        ControlNet net = random_net(n, m, rng);
        BilinearReparam psi = random_convex_quad(rng);
        ControlNet img = reparam_bilinear(net, psi);
        EXPECT_EQ(img.degree_u(), n + m);
        EXPECT_EQ(img.degree_v(), n + m);
        for (int k = 0; k < 5; ++k) {
            Point2 st = random_param(rng);
            Point2 uv = psi(st.u, st.v);
            EXPECT_EQ(evaluate(img, st.u, st.v), evaluate(net, uv.u, uv.v));
        }
    }
}

TEST(Blossom, BilinearCornerConvention)
{
    BilinearReparam psi{{0, 0}, {2, 0}, {3, 3}, {0, 1}};
    EXPECT_EQ(psi(0, 0), psi.A);
    EXPECT_EQ(psi(1, 0), psi.B);
    EXPECT_EQ(psi(1, 1), psi.C);
    EXPECT_EQ(psi(0, 1), psi.D);
    EXPECT_EQ(BilinearReparam::from_flat(psi.flat()), psi);
}

TEST(Blossom, ReparamBilinearTargetDegreeForTrapezoid)
{
    Rng rng(44);
    ControlNet net = random_net(2, 1, rng);
    BilinearReparam t{{Rat(1, 4), 0}, {Rat(3, 4), Rat(1, 8)}, {Rat(3, 4), 1}, {Rat(1, 4), Rat(7, 8)}};
    ControlNet low = reparam_bilinear(net, t, 3, 1);
    ControlNet full = reparam_bilinear(net, t);
    for (int k = 0; k < 5; ++k) {
        Point2 st = random_param(rng);
        EXPECT_EQ(evaluate(low, st.u, st.v), evaluate(full, st.u, st.v));
    }
    // u is affine in s only, so degree (n+m, m) suffices; asking for less fails
    EXPECT_THROW(reparam_bilinear(net, t, 2, 1), std::invalid_argument);
}

TEST(Blossom, ExtractTriangleEvaluatesSurface)
{
    Rng rng(45);
    for (int t = 0; t < 10; ++t) {
        int n = static_cast<int>(rng.integer(1, 3)), m = static_cast<int>(rng.integer(1, 3));
        ControlNet net = random_net(n, m, rng);
        Point2 M{0, 0}, N{1, Rat(1, 3)}, P{Rat(1, 2), 1};
        TriangularNet tri = extract_triangle(net, M, N, P);
        EXPECT_EQ(tri.degree, n + m);
        EXPECT_EQ(tri(n + m, 0), evaluate(net, M.u, M.v));
        EXPECT_EQ(tri(0, n + m), evaluate(net, N.u, N.v));
        EXPECT_EQ(tri(0, 0), evaluate(net, P.u, P.v));
        for (int k = 0; k < 5; ++k) {
            Rat a = rng.rational(0, 1, 9), b = (Rat(1) - a) * rng.rational(0, 1, 7);
            Point2 x = lerp3(M, N, P, a, b);
            EXPECT_EQ(evaluate(tri, a, b), evaluate(net, x.u, x.v));
        }
    }
}

TEST(Blossom, ExtractTriangleRejectsCollinearVertices)
{
    ControlNet net = fixture("example4_s1");
    EXPECT_THROW(extract_triangle(net, {0, 0}, {1, 1}, {2, 2}), std::invalid_argument);
}
