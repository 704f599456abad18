#include "coincide/same_degree.hpp"

#include <stdexcept>

namespace coincide {

std::optional<Rat> same_degree_filter(const FDSet& fd1, const FDSet& fd2)
{
    if (fd1.rho.is_zero())
        return std::nullopt;
    auto kappa = collinear(fd1.rho, fd2.rho);
    if (!kappa || kappa->is_zero())
        return std::nullopt;
    if (!coplanar({fd1.rho, fd2.rho, fd1.rho10, fd2.rho10}))
        return std::nullopt;
    if (!coplanar({fd1.rho, fd2.rho, fd1.rho01, fd2.rho01}))
        return std::nullopt;
    return kappa;
}

SameDegreeSystem assemble_same_degree(const FDSet& fd1, const FDSet& fd2, const Rat& kappa)
{
    SameDegreeSystem sys{fd1, fd2, kappa, RatMatrix(3, 2), RatMatrix(3, 2), {}, {}};
    // b rho2^{10} - a (rho2 + rho2^{10}) = kappa rho1^{10}, and the 01 analogue
    for (int q = 0; q < 3; ++q) {
        sys.sys_ab(q, 0) = -(fd2.rho[q] + fd2.rho10[q]);
        sys.sys_ab(q, 1) = fd2.rho10[q];
        sys.rhs_ab.push_back(kappa * fd1.rho10[q]);
        sys.sys_cd(q, 0) = -(fd2.rho[q] + fd2.rho01[q]);
        sys.sys_cd(q, 1) = fd2.rho01[q];
        sys.rhs_cd.push_back(kappa * fd1.rho01[q]);
    }
    return sys;
}

std::optional<AffineReparam> solve_affine(const FDSet& fd1, const FDSet& fd2, const Rat& kappa, int n, int m)
{
    auto sys = assemble_same_degree(fd1, fd2, kappa);
    auto ab = solve_linear(sys.sys_ab, sys.rhs_ab);
    auto cd = solve_linear(sys.sys_cd, sys.rhs_cd);
    using K = LinearSolveOutcome::Kind;
    if (ab.kind == K::Inconsistent || cd.kind == K::Inconsistent)
        return std::nullopt;
    if (ab.kind == K::Underdetermined || cd.kind == K::Underdetermined)
        throw std::domain_error("rank degeneracy: rho collinear with rho10 or rho01");
    AffineReparam phi{ab.x[0], ab.x[1], cd.x[0], cd.x[1]};
    if (phi.a == phi.b || phi.c == phi.d)
        return std::nullopt;
    if (pow(phi.b - phi.a, n) * pow(phi.d - phi.c, m) != kappa)
        return std::nullopt;
    return phi;
}

namespace {

struct Interval {
    Rat lo, hi;
};

Interval ordered(const Rat& a, const Rat& b)
{
    return a < b ? Interval{a, b} : Interval{b, a};
}

}  // namespace

CoincidenceResult test_same_degree(const ControlNet& s1, const ControlNet& s2)
{
    int n = s1.degree_u(), m = s1.degree_v();
    if (s2.degree_u() != n || s2.degree_v() != m)
        throw std::invalid_argument("test_same_degree: degree mismatch");
    require_irreducible(s1, "s1");
    require_irreducible(s2, "s2");

    CoincidenceResult res;
    FDSet fd1 = finite_differences(s1);
    std::vector<std::string> notes;

    for (const auto& sigma : symmetries(n, m)) {
        ControlNet t2 = apply(sigma, s2);
        FDSet fd2 = finite_differences(t2);
        auto kappa = same_degree_filter(fd1, fd2);
        if (!kappa) {
            notes.push_back(sigma.name() + ": finite differences not collinear or not coplanar");
            continue;
        }
        std::optional<AffineReparam> phi;
        try {
            phi = solve_affine(fd1, fd2, *kappa, n, m);
        } catch (const std::domain_error& e) {
            notes.push_back(sigma.name() + ": " + e.what());
            continue;
        }
        if (!phi) {
            notes.push_back(sigma.name() + ": affine systems inconsistent");
            continue;
        }
        if (reparam_rectangle(s1, *phi) != t2) {
            notes.push_back(sigma.name() + ": control nets differ after reparametrization");
            continue;
        }

        res.reparam = *phi;
        res.symmetry = sigma;
        Interval iu = ordered(phi->a, phi->b), iv = ordered(phi->c, phi->d);
        Rat ulo = std::max(iu.lo, Rat(0)), uhi = std::min(iu.hi, Rat(1));
        Rat vlo = std::max(iv.lo, Rat(0)), vhi = std::min(iv.hi, Rat(1));
        if (ulo > uhi || vlo > vhi) {
            res.relation = Relation::Disjoint;
            return res;
        }
        if (ulo == uhi || vlo == vhi) {
            res.relation = Relation::Disjoint;
            res.diagnostics.push_back(ulo == uhi && vlo == vhi
                                          ? "surfaces touch at a single point"
                                          : "surfaces touch along a boundary curve");
            return res;
        }
        res.shared_domain = Polygon2{{{ulo, vlo}, {uhi, vlo}, {uhi, vhi}, {ulo, vhi}}};
        bool full1 = ulo == 0 && uhi == 1 && vlo == 0 && vhi == 1;
        bool full2 = iu.lo == 0 && iu.hi == 1 && iv.lo == 0 && iv.hi == 1;
        res.relation = full1 && full2 ? Relation::Coincident : Relation::CoincidentPart;
        res.patches.push_back(reparam_rectangle(s1, AffineReparam{ulo, uhi, vlo, vhi}));
        return res;
    }
    res.relation = Relation::Different;
    res.diagnostics = std::move(notes);
    return res;
}

}  // namespace coincide
