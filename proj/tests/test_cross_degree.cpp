#include "support.hpp"

#include "coincide/irreducibility.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

using namespace coincide;
using namespace testsupport;

namespace {

// Edge vectors (x_k, y_k) of a bilinear map, in edge order 1..4.
std::array<std::pair<Rat, Rat>, 4> edges_of(const BilinearReparam& p)
{
    auto d = [](const Point2& from, const Point2& to) { return std::make_pair(to.u - from.u, to.v - from.v); };
    return {d(p.A, p.B), d(p.A, p.D), d(p.D, p.C), d(p.B, p.C)};
}

void expect_patches_match(const CoincidenceResult& r, const ControlNet& s1, const ControlNet& s2,
                          const BilinearReparam& psi, Rng& rng, int samples)
{
    ASSERT_TRUE(r.shared_domain);
    const auto& g = r.shared_domain->vertices;
    size_t q = 0;
    for (size_t k = 1; k + 2 < g.size(); k += 2, ++q) {
        ASSERT_LT(q, r.patches.size());
        BilinearReparam piece{g[0], g[k], g[k + 1], g[k + 2]};
        for (int t = 0; t < samples; ++t) {
            Point2 st = random_param(rng);
            Point2 uv = piece(st.u, st.v);
            Point3 p = evaluate(r.patches[q], st.u, st.v);
            EXPECT_EQ(p, evaluate(s1, uv.u, uv.v));
            EXPECT_TRUE(preimage_matches(s2, psi, uv, p));
        }
    }
    EXPECT_EQ(q, r.patches.size());
    if (g.size() % 2) {
        ASSERT_TRUE(r.triangle);
        const Point2 &M = g[0], &N = g[g.size() - 2], &P = g[g.size() - 1];
        for (int t = 0; t < samples; ++t) {
            Rat a = rng.rational(0, 1, 11), b = (Rat(1) - a) * rng.rational(0, 1, 13);
            Point2 uv{a * M.u + b * N.u + (Rat(1) - a - b) * P.u, a * M.v + b * N.v + (Rat(1) - a - b) * P.v};
            Point3 p = evaluate(*r.triangle, a, b);
            EXPECT_EQ(p, evaluate(s1, uv.u, uv.v));
            EXPECT_TRUE(preimage_matches(s2, psi, uv, p));
        }
    } else {
        EXPECT_FALSE(r.triangle);
    }
}

}  // namespace

TEST(CrossDegree, RankThreeKappasMatchKnownMap)
{
    ControlNet s1 = fixture("example3_s1"), s2 = fixture("example3_s2");
    auto sys = make_cross_system(s1, s2);
    ASSERT_TRUE(sys);
    EXPECT_EQ(sys->m_rank, 3);
    auto psi = BilinearReparam::from_flat(rats({0, Rat(1, 2), Rat(1, 2), 0, 1, Rat(1, 2), Rat(1, 2), 1}));
    auto e = edges_of(psi);
    for (int k = 0; k < 4; ++k)
        EXPECT_EQ(sys->kappas[k], pow(e[k].first, s1.degree_u()) * pow(e[k].second, s1.degree_v())) << k;
    EXPECT_EQ(sys->kappas[0], Rat(1, 32));
}

TEST(CrossDegree, RankTwoFixtureHasTwoCandidates)
{
    auto sys = make_cross_system(fixture("example4_s1"), fixture("example4_s2"));
    ASSERT_TRUE(sys);
    EXPECT_EQ(sys->m_rank, 2);
    auto cands = cross_candidates(*sys);
    EXPECT_EQ(cands.size(), 2u);
    for (const auto& c : cands)
        EXPECT_TRUE(satisfies_vertex_system(*sys, c));
}

TEST(CrossDegree, EdgeSolutionsSatisfyKappa)
{
    for (auto [a, b] : {std::pair{"example3_s1", "example3_s2"}, {"example4_s1", "example4_s2"},
                        {"example5_s1", "example5_s2"}}) {
        ControlNet s1 = fixture(a);
        auto sys = make_cross_system(s1, fixture(b));
        ASSERT_TRUE(sys);
        for (int e = 1; e <= 4; ++e) {
            auto sol = solve_edge_equation(*sys, e);
            EXPECT_GE(sol.pairs.size(), 1u) << a << " edge " << e;
            for (auto [x, y] : sol.pairs)
                EXPECT_EQ(pow(x, s1.degree_u()) * pow(y, s1.degree_v()), sys->kappas[e - 1]);
        }
    }
}

TEST(CrossDegree, BoundaryFilterRejectsUnrelatedNets)
{
    Rng rng(71);
    ControlNet a = random_irreducible_net(1, 2, rng), b = random_irreducible_net(3, 3, rng);
    EXPECT_FALSE(boundary_filter(finite_differences(a), boundary_differences(b)));
    auto r = dispatch(a, b);
    EXPECT_EQ(r.relation, Relation::Different);
}

TEST(CrossDegree, DispatchRouting)
{
    Rng rng(72);
    auto r = dispatch(random_irreducible_net(2, 2, rng), random_irreducible_net(3, 5, rng));
    EXPECT_EQ(r.relation, Relation::Different);
    ASSERT_EQ(r.diagnostics.size(), 1u);
    EXPECT_EQ(r.diagnostics[0].rfind("no admissible degree relation", 0), 0u);
    auto r3 = dispatch(fixture("example3_s1"), fixture("example3_s2"));
    EXPECT_EQ(r3.base, "s1");
    auto swapped = dispatch(fixture("example3_s2"), fixture("example3_s1"));
    EXPECT_EQ(swapped.base, "s2");
    EXPECT_EQ(swapped.relation, r3.relation);
    EXPECT_EQ(swapped.reparam, r3.reparam);
}

TEST(CrossDegree, SecondCandidateRejected)
{
    auto r = dispatch(fixture("example4_s1"), fixture("example4_s2"));
    ASSERT_EQ(r.candidates.size(), 2u);
    bool noted = false;
    for (const auto& d : r.diagnostics)
        noted = noted || d.find("not verified") != std::string::npos ||
                d.find("differ after reparametrization") != std::string::npos;
    EXPECT_TRUE(noted);
}

TEST(CrossDegree, PlantedPatchesMatchBothInputs)
{
    Rng rng(73);
    int triangles = 0, parts = 0;
    for (int t = 0; t < 40; ++t) {
        int n = static_cast<int>(rng.integer(1, 2)), m = static_cast<int>(rng.integer(1, 2));
        auto pair = draw_cross_degree(n, m, rng, t % 4 == 3);
        auto psi = std::get<BilinearReparam>(pair.planted);
        auto r = dispatch(pair.base, pair.other);
        ASSERT_EQ(r.reparam, std::optional<Reparam>(psi));
        EXPECT_LE(r.candidates.size(), 2u);
        if (r.relation != Relation::CoincidentPart)
            continue;
        ++parts;
        triangles += r.triangle ? 1 : 0;
        expect_patches_match(r, pair.base, pair.other, psi, rng, 10);
        Rat total = 0;
        for (auto piece : decompose(*r.shared_domain).quads)
            total = total + area(piece);
        if (auto tri = decompose(*r.shared_domain).tri)
            total = total + area(*tri);
        EXPECT_EQ(total, area(*r.shared_domain));
    }
    EXPECT_GT(parts, 10);
    EXPECT_GT(triangles, 0);
}

TEST(CrossDegree, HexagonPatchesMatchBothInputs)
{
    ControlNet s1 = fixture("example5_s1"), s2 = fixture("example5_s2");
    auto r = dispatch(s1, s2);
    ASSERT_TRUE(r.reparam);
    Rng rng(74);
    expect_patches_match(r, s1, s2, std::get<BilinearReparam>(*r.reparam), rng, 50);
}

TEST(CrossDegree, PerturbedImageIsDifferent)
{
    Rng rng(75);
    for (int t = 0; t < 10; ++t) {
        auto pair = draw_cross_degree(2, 1, rng);
        pair.other(1, 2).y = pair.other(1, 2).y + Rat(1, 1000000);
        EXPECT_EQ(dispatch(pair.base, pair.other).relation, Relation::Different);
    }
}

TEST(MixedDegree, PlantedTwoOneRecovered)
{
    Rng rng(76);
    for (int t = 0; t < 10; ++t) {
        auto pair = draw_mixed(2, 1, rng);
        auto planted = std::get<BilinearReparam>(pair.planted);
        EXPECT_EQ(pair.other.degree_u(), 3);
        EXPECT_EQ(pair.other.degree_v(), 1);
        auto r = dispatch(pair.base, pair.other);
        ASSERT_EQ(r.reparam, std::optional<Reparam>(planted)) << t;
        EXPECT_EQ(r.relation, expected_relation(quad_region(planted)));
        if (r.relation == Relation::CoincidentPart)
            expect_patches_match(r, pair.base, pair.other, planted, rng, 10);
    }
}

TEST(MixedDegree, TransposedFamilyRecovered)
{
    Rng rng(77);
    for (int t = 0; t < 10; ++t) {
        auto pair = draw_mixed(1, 2, rng);
        auto planted = transposed_map(std::get<BilinearReparam>(pair.planted));
        ControlNet b = transpose(pair.base), o = transpose(pair.other);
        EXPECT_EQ(o.degree_u(), 2);
        EXPECT_EQ(o.degree_v(), 3);
        auto r = dispatch(b, o);
        ASSERT_EQ(r.reparam, std::optional<Reparam>(planted)) << t;
        EXPECT_EQ(r.relation, expected_relation(quad_region(planted)));
    }
}

TEST(MixedDegree, PerturbedIsDifferent)
{
    Rng rng(78);
    for (int t = 0; t < 10; ++t) {
        auto pair = draw_mixed(1, 1, rng);
        pair.other(0, 1).x = pair.other(0, 1).x - Rat(1, 1000000);
        EXPECT_EQ(dispatch(pair.base, pair.other).relation, Relation::Different);
    }
}

// rho is non-collinear with rho10 on irreducible base nets, but not on their
// bilinear images: the top coefficients of an image factor through rho.
TEST(CrossDegree, BilinearImagesHaveCollinearTopDifferences)
{
    for (const char* f : {"example3_s2", "example4_s2", "example5_s2"}) {
        FDSet fd = finite_differences(fixture(f));
        EXPECT_TRUE(cross(fd.rho, fd.rho10).is_zero()) << f;
        EXPECT_TRUE(cross(fd.rho, fd.rho01).is_zero()) << f;
    }
}

namespace {

// Real solutions of one rank-2 edge, counted without the library's reduction.
// With p = 1/x, q = 1/y the edge equation is kappa (n p rho10 + m q rho01 + w' rho) = delta1.
// Crossing with rho and writing rho01 x rho = c (rho10 x rho) leaves n p + m c q = s, and
// x^n y^m = kappa becomes kappa p^n q^m = 1.  Returns -1 when c = 0.
int oracle_edge_count(const CrossDegreeSystem& sys, int edge)
{
    Vec3 a = cross(sys.fd.rho10, sys.fd.rho), b = cross(sys.fd.rho01, sys.fd.rho);
    Vec3 d = cross(sys.bfd.delta1[edge - 1], sys.fd.rho);
    int k = !a.x.is_zero() ? 0 : !a.y.is_zero() ? 1 : 2;
    Rat c = b[k] / a[k], s = d[k] / (a[k] * sys.kappas[edge - 1]);
    if (c.is_zero())
        return -1;
    int n = sys.n, m = sys.m;
    Poly lin({s, Rat(-n)});
    Poly P = Poly::constant(sys.kappas[edge - 1]);
    for (int i = 0; i < n; ++i)
        P = P * Poly({Rat(0), Rat(1)});
    for (int i = 0; i < m; ++i)
        P = P * lin;
    P = P - Poly::constant(pow(Rat(m) * c, m));
    int deg = P.degree();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    double lead = P.lead().to_double();
    for (int i = 0; i < deg; ++i) {
        comp(0, i) = -P.coeff(deg - 1 - i).to_double() / lead;
        if (i + 1 < deg)
            comp(i + 1, i) = 1.0;
    }
    Eigen::VectorXcd ev = comp.eigenvalues();
    int real = 0;
    for (int i = 0; i < deg; ++i) {
        double p = ev[i].real();
        bool is_real = std::abs(ev[i].imag()) < 1e-7 * std::max(1.0, std::abs(ev[i]));
        // q = (s - n p) / (m c) must be nonzero as well
        bool q_ok = std::abs(s.to_double() - n * p) > 1e-9;
        if (is_real && std::abs(p) > 1e-12 && q_ok)
            ++real;
    }
    return real;
}

}  // namespace

TEST(CrossDegree, EdgeRootCountMatchesCompanionOracle)
{
    Rng rng(79);
    int compared = 0;
    std::vector<std::pair<ControlNet, ControlNet>> cases = {{fixture("example4_s1"), fixture("example4_s2")},
                                                            {fixture("example5_s1"), fixture("example5_s2")}};
    for (int t = 0; t < 30; ++t) {
        auto pair = draw_cross_degree(static_cast<int>(rng.integer(1, 2)), static_cast<int>(rng.integer(1, 2)), rng, true);
        cases.emplace_back(pair.base, pair.other);
    }
    for (const auto& [s1, s2] : cases) {
        auto sys = make_cross_system(s1, s2);
        ASSERT_TRUE(sys);
        if (sys->m_rank != 2)
            continue;
        for (int e = 1; e <= 4; ++e) {
            int oracle = oracle_edge_count(*sys, e);
            if (oracle < 0)
                continue;
            ++compared;
            EXPECT_EQ(solve_edge_equation(*sys, e).real_count(), oracle) << "edge " << e;
        }
    }
    EXPECT_GT(compared, 40);
}
