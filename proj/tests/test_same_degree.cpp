#include "support.hpp"

#include "coincide/same_degree.hpp"

#include <gtest/gtest.h>

using namespace coincide;
using namespace testsupport;

namespace {

ControlNet transform(const ControlNet& net, const Rat& scale, const Vec3& shift)
{
    // rotation by the 3-4-5 angle about z, then uniform scale and shift
    ControlNet out = net;
    for (int i = 0; i <= net.degree_u(); ++i)
        for (int j = 0; j <= net.degree_v(); ++j) {
            const Point3& p = net(i, j);
            Point3 r(Rat(3, 5) * p.x - Rat(4, 5) * p.y, Rat(4, 5) * p.x + Rat(3, 5) * p.y, p.z);
            out(i, j) = r * scale + shift;
        }
    return out;
}

}  // namespace

TEST(SameDegree, FilterRecoversKappa)
{
    FDSet f1 = finite_differences(fixture("example1_s1"));
    FDSet f3 = finite_differences(fixture("example2_s3"));
    auto kappa = same_degree_filter(f1, f3);
    ASSERT_TRUE(kappa);
    ControlNet s1 = fixture("example1_s1");
    // kappa = (b-a)^n (d-c)^m for the window (-1/5, 1/2, 1/6, 3/4)
    EXPECT_EQ(*kappa, pow(Rat(7, 10), s1.degree_u()) * pow(Rat(7, 12), s1.degree_v()));
}

TEST(SameDegree, FilterRejectsUnrelatedNets)
{
    Rng rng(61);
    ControlNet a = random_irreducible_net(2, 3, rng), b = random_irreducible_net(2, 3, rng);
    EXPECT_FALSE(same_degree_filter(finite_differences(a), finite_differences(b)));
}

TEST(SameDegree, SelfTestIsCoincident)
{
    ControlNet s1 = fixture("example1_s1");
    auto r = test_same_degree(s1, s1);
    EXPECT_EQ(r.relation, Relation::Coincident);
    ASSERT_TRUE(r.reparam);
    EXPECT_EQ(std::get<AffineReparam>(*r.reparam), (AffineReparam{0, 1, 0, 1}));
    EXPECT_EQ(r.symmetry->name(), "identity");
}

TEST(SameDegree, ReversedEnumerationIsCoincident)
{
    ControlNet s1 = fixture("example1_s1");
    auto r = test_same_degree(s1, apply(NetSymmetry{true, true, false}, s1));
    EXPECT_EQ(r.relation, Relation::Coincident);
    EXPECT_EQ(std::get<AffineReparam>(*r.reparam), (AffineReparam{1, 0, 1, 0}));
}

TEST(SameDegree, TouchingWindowIsDisjointWithDiagnostic)
{
    ControlNet s1 = fixture("example1_s1");
    auto edge = test_same_degree(s1, subdivide(s1, 1, 2, 0, 1));
    EXPECT_EQ(edge.relation, Relation::Disjoint);
    ASSERT_EQ(edge.diagnostics.size(), 1u);
    EXPECT_EQ(edge.diagnostics[0], "surfaces touch along a boundary curve");
    auto corner = test_same_degree(s1, subdivide(s1, 1, 2, 1, 3));
    EXPECT_EQ(corner.relation, Relation::Disjoint);
    EXPECT_EQ(corner.diagnostics[0], "surfaces touch at a single point");
    auto far = test_same_degree(s1, subdivide(s1, 2, 3, 0, 1));
    EXPECT_EQ(far.relation, Relation::Disjoint);
    EXPECT_TRUE(far.diagnostics.empty());
}

TEST(SameDegree, ReducibleInputThrows)
{
    ControlNet bad = degree_elevate_u(fixture("example4_s1"));
    EXPECT_THROW(test_same_degree(bad, bad), ReducibleInput);
}

TEST(SameDegree, EquivariantUnderScalingAndRigidMotion)
{
    Rng rng(62);
    for (int t = 0; t < 10; ++t) {
        AffineReparam w = random_window(rng);
        auto pair = gen_same_degree(2, 3, w, rng);
        Rat scale = rng.rational(1, 5, 3);
        Vec3 shift(rng.rational(-3, 3, 2), rng.rational(-3, 3, 2), rng.rational(-3, 3, 2));
        auto r = test_same_degree(transform(pair.base, scale, shift), transform(pair.other, scale, shift));
        ASSERT_TRUE(r.reparam);
        EXPECT_EQ(std::get<AffineReparam>(*r.reparam), w);
    }
}

TEST(SameDegree, PatchesMatchBothInputs)
{
    Rng rng(63);
    int checked = 0;
    for (int t = 0; t < 20; ++t) {
        AffineReparam w = random_window(rng);
        auto pair = gen_same_degree(static_cast<int>(rng.integer(1, 3)), static_cast<int>(rng.integer(1, 3)), w, rng);
        auto r = test_same_degree(pair.base, pair.other);
        if (r.relation != Relation::CoincidentPart && r.relation != Relation::Coincident)
            continue;
        ++checked;
        ASSERT_EQ(r.patches.size(), 1u);
        const auto& g = r.shared_domain->vertices;
        Rat ulo = g[0].u, vlo = g[0].v, uhi = g[2].u, vhi = g[2].v;
        for (int k = 0; k < 50; ++k) {
            Point2 st = random_param(rng);
            Rat u = ulo + st.u * (uhi - ulo), v = vlo + st.v * (vhi - vlo);
            Point3 p = evaluate(r.patches[0], st.u, st.v);
            EXPECT_EQ(p, evaluate(pair.base, u, v));
            EXPECT_EQ(p, evaluate(pair.other, (u - w.a) / (w.b - w.a), (v - w.c) / (w.d - w.c)));
        }
    }
    EXPECT_GT(checked, 5);
}

TEST(SameDegree, RelationSymmetricUnderSwap)
{
    Rng rng(64);
    for (int t = 0; t < 30; ++t) {
        AffineReparam w = random_window(rng);
        auto pair = gen_same_degree(static_cast<int>(rng.integer(1, 3)), static_cast<int>(rng.integer(1, 3)), w, rng);
        EXPECT_EQ(test_same_degree(pair.base, pair.other).relation, test_same_degree(pair.other, pair.base).relation);
    }
}

TEST(SameDegree, PerturbedNetIsDifferent)
{
    ControlNet s2 = fixture("example1_s2");
    s2(1, 1).z = s2(1, 1).z + Rat(1, 1000000);
    auto r = test_same_degree(fixture("example1_s1"), s2);
    EXPECT_EQ(r.relation, Relation::Different);
    EXPECT_FALSE(r.diagnostics.empty());
}
