#include "coincide/cross_degree.hpp"

#include "coincide/same_degree.hpp"

#include <cstdio>
#include <stdexcept>

namespace coincide {

std::optional<std::array<Rat, 4>> boundary_filter(const FDSet& fd, const BoundaryFD& bfd)
{
    if (fd.rho.is_zero())
        return std::nullopt;
    std::array<Rat, 4> k;
    for (int e = 0; e < 4; ++e) {
        auto c = collinear(fd.rho, bfd.delta[e]);
        if (!c || c->is_zero())
            return std::nullopt;
        k[e] = *c;
    }
    return k;
}

namespace {

std::string approx(const RootLocation& r)
{
    auto mid = refine(r, Rat(1, 1000000000));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", ((mid.lo + mid.hi) / Rat(2)).to_double());
    return buf;
}


RatMatrix make_m_matrix(const FDSet& fd, int n, int m)
{
    RatMatrix M(3, 4);
    for (int q = 0; q < 3; ++q) {
        M(q, 0) = Rat(n) * fd.rho10[q];
        M(q, 1) = Rat(m) * fd.rho01[q];
        M(q, 2) = Rat(n) * fd.rho[q];
        M(q, 3) = Rat(m) * fd.rho[q];
    }
    return M;
}

// pure power: x^k = c
std::vector<RootLocation> power_roots(int k, const Rat& c)
{
    std::vector<Rat> co(k + 1, Rat(0));
    co[0] = -c;
    co[k] = Rat(1);
    return isolate_real_roots(co);
}

}  // namespace

std::optional<CrossDegreeSystem> make_cross_system(const ControlNet& s1, const ControlNet& s2)
{
    int n = s1.degree_u(), m = s1.degree_v();
    if (s2.degree_u() != n + m || s2.degree_v() != n + m)
        throw std::invalid_argument("cross-degree system needs a (n+m, n+m) second net");
    CrossDegreeSystem sys;
    sys.n = n;
    sys.m = m;
    sys.fd = finite_differences(s1);
    sys.bfd = boundary_differences(s2);
    auto k = boundary_filter(sys.fd, sys.bfd);
    if (!k)
        return std::nullopt;
    sys.kappas = *k;
    sys.m_matrix = make_m_matrix(sys.fd, n, m);
    sys.m_rank = rank(sys.m_matrix);
    return sys;
}

ReducedEdgeEquation reduce_edge_equation(const FDSet& fd, int n, int m, const Rat& kappa, const Vec3& delta1)
{
    Vec3 nu = cross(fd.rho, fd.rho10);
    if (nu.is_zero())
        throw std::domain_error("rho collinear with rho10 on an irreducible input");
    Vec3 omega = cross(nu, fd.rho);
    return {kappa * Rat(m) * dot(omega, fd.rho01), kappa * Rat(n) * dot(omega, fd.rho10), dot(omega, delta1)};
}

EdgeSolutionSet solve_edge(const FDSet& fd, int n, int m, int rank_m, const Rat& kappa, const Vec3& delta1)
{
    EdgeSolutionSet out;
    auto accept = [&](const Rat& x, const Rat& y) {
        if (x.is_zero() || y.is_zero())
            return;
        if (pow(x, n) * pow(y, m) != kappa)
            return;
        for (const auto& p : out.pairs)
            if (p.first == x && p.second == y)
                return;
        out.pairs.emplace_back(x, y);
    };

    if (rank_m == 3) {
        // divide by xy: unknowns (1/x, 1/y, w/(xy))
        RatMatrix A(3, 3);
        std::vector<Rat> b(3);
        for (int q = 0; q < 3; ++q) {
            A(q, 0) = kappa * Rat(n) * fd.rho10[q];
            A(q, 1) = kappa * Rat(m) * fd.rho01[q];
            A(q, 2) = kappa * fd.rho[q];
            b[q] = delta1[q];
        }
        auto sol = solve_linear(A, b);
        if (sol.unique() && !sol.x[0].is_zero() && !sol.x[1].is_zero())
            accept(sol.x[0].inv(), sol.x[1].inv());
        return out;
    }

    // rank 2: delta1 must lie in the plane of rho, rho10
    Vec3 nu = cross(fd.rho, fd.rho10);
    if (nu.is_zero())
        throw std::domain_error("rho collinear with rho10 on an irreducible input");
    if (!dot(nu, delta1).is_zero())
        return out;
    auto [alpha, beta, C] = reduce_edge_equation(fd, n, m, kappa, delta1);

    auto keep_irrational = [&](const RootLocation& r) { out.irrational.push_back(r); };

    if (alpha.is_zero() && beta.is_zero()) {
        if (C.is_zero())
            throw std::domain_error("edge equation vanishes identically");
        return out;  // C x y = 0 has no solution with x, y != 0
    }
    if (C.is_zero()) {
        // alpha x + beta y = 0
        if (alpha.is_zero() || beta.is_zero())
            return out;
        Rat ratio = -alpha / beta;  // y = ratio x
        for (const auto& r : power_roots(n + m, kappa / pow(ratio, m))) {
            if (r.exact())
                accept(r.value, ratio * r.value);
            else
                keep_irrational(r);
        }
        return out;
    }
    if (alpha.is_zero()) {
        // beta y = C x y  ->  x = beta / C, then y^m = kappa / x^n
        Rat x = beta / C;
        for (const auto& r : power_roots(m, kappa / pow(x, n))) {
            if (r.exact())
                accept(x, r.value);
            else
                keep_irrational(r);
        }
        return out;
    }
    if (beta.is_zero()) {
        Rat y = alpha / C;
        for (const auto& r : power_roots(n, kappa / pow(y, m))) {
            if (r.exact())
                accept(r.value, y);
            else
                keep_irrational(r);
        }
        return out;
    }
    // y = alpha x / (C x - beta);  x^n (alpha x)^m - kappa (C x - beta)^m = 0
    Poly lin({-beta, C});
    Poly p = Poly::monomial(pow(alpha, m), n + m) - kappa * pow(lin, m);
    for (const auto& r : isolate_real_roots(p)) {
        if (!r.exact()) {
            keep_irrational(r);
            continue;
        }
        const Rat& x = r.value;
        Rat den = C * x - beta;
        if (x.is_zero() || den.is_zero())
            continue;
        accept(x, alpha * x / den);
    }
    return out;
}

EdgeSolutionSet solve_edge_equation(const CrossDegreeSystem& sys, int edge)
{
    if (edge < 1 || edge > 4)
        throw std::out_of_range("edge index must be 1..4");
    return solve_edge(sys.fd, sys.n, sys.m, sys.m_rank, sys.kappas[edge - 1], sys.bfd.delta1[edge - 1]);
}

namespace {

struct EdgeGeom {
    Point2 base, tip;
};

std::array<EdgeGeom, 4> edges_of(const BilinearReparam& p)
{
    return {EdgeGeom{p.A, p.B}, EdgeGeom{p.A, p.D}, EdgeGeom{p.D, p.C}, EdgeGeom{p.B, p.C}};
}

}  // namespace

bool satisfies_vertex_system(const CrossDegreeSystem& sys, const BilinearReparam& psi)
{
    int n = sys.n, m = sys.m;
    const FDSet& fd = sys.fd;
    auto edges = edges_of(psi);
    for (int k = 0; k < 4; ++k) {
        Rat x = edges[k].tip.u - edges[k].base.u, y = edges[k].tip.v - edges[k].base.v;
        if (x.is_zero() || y.is_zero())
            return false;
        if (pow(x, n) * pow(y, m) * fd.rho != sys.bfd.delta[k])
            return false;
        Vec3 inner = Rat(n) * y * fd.rho10 + Rat(m) * x * fd.rho01
                   + (Rat(n) * y * edges[k].base.u + Rat(m) * x * edges[k].base.v) * fd.rho;
        if (pow(x, n - 1) * pow(y, m - 1) * inner != sys.bfd.delta1[k])
            return false;
    }
    return true;
}

std::optional<BilinearReparam> assemble_bilinear(const CrossDegreeSystem& sys,
                                                 const std::array<std::pair<Rat, Rat>, 4>& picks)
{
    const auto& [x1, y1] = picks[0];
    const auto& [x2, y2] = picks[1];
    const auto& [x3, y3] = picks[2];
    const auto& [x4, y4] = picks[3];
    if (x1 - x2 - x3 + x4 != 0 || y1 - y2 - y3 + y4 != 0)
        return std::nullopt;

    int n = sys.n, m = sys.m;
    const FDSet& fd = sys.fd;
    // offsets of each edge's base point from A
    std::array<Point2, 4> off{Point2{0, 0}, Point2{0, 0}, Point2{x2, y2}, Point2{x1, y1}};
    // rho (n y a1 + m x a2) = x y delta1 / kappa - n y rho10 - m x rho01 - rho (n y o_u + m x o_v)
    RatMatrix A(12, 2);
    std::vector<Rat> b(12);
    for (int k = 0; k < 4; ++k) {
        const Rat& x = picks[k].first;
        const Rat& y = picks[k].second;
        Vec3 R = (x * y / sys.kappas[k]) * sys.bfd.delta1[k] - (Rat(n) * y) * fd.rho10 - (Rat(m) * x) * fd.rho01
               - (Rat(n) * y * off[k].u + Rat(m) * x * off[k].v) * fd.rho;
        for (int q = 0; q < 3; ++q) {
            A(3 * k + q, 0) = Rat(n) * y * fd.rho[q];
            A(3 * k + q, 1) = Rat(m) * x * fd.rho[q];
            b[3 * k + q] = R[q];
        }
    }
    auto sol = solve_linear(A, b);
    if (!sol.unique())
        return std::nullopt;
    Point2 a{sol.x[0], sol.x[1]};
    BilinearReparam psi;
    psi.A = a;
    psi.B = {a.u + x1, a.v + y1};
    psi.D = {a.u + x2, a.v + y2};
    psi.C = {psi.D.u + x3, psi.D.v + y3};
    if (!satisfies_vertex_system(sys, psi))
        return std::nullopt;
    return psi;
}

std::vector<BilinearReparam> cross_candidates(const CrossDegreeSystem& sys, std::vector<std::string>* diagnostics)
{
    std::array<EdgeSolutionSet, 4> sols;
    for (int e = 1; e <= 4; ++e) {
        sols[e - 1] = solve_edge_equation(sys, e);
        if (diagnostics)
            for (const auto& r : sols[e - 1].irrational)
                diagnostics->push_back("edge " + std::to_string(e) + ": irrational root near " + approx(r));
    }
    std::vector<BilinearReparam> out;
    for (const auto& p1 : sols[0].pairs)
        for (const auto& p2 : sols[1].pairs)
            for (const auto& p3 : sols[2].pairs)
                for (const auto& p4 : sols[3].pairs)
                    if (auto psi = assemble_bilinear(sys, {p1, p2, p3, p4})) {
                        bool dup = false;
                        for (const auto& q : out)
                            dup = dup || q == *psi;
                        if (!dup)
                            out.push_back(*psi);
                    }
    return out;
}

namespace {

bool has_irrational_note(const std::vector<std::string>& d)
{
    for (const auto& s : d)
        if (s.find("irrational") != std::string::npos)
            return true;
    return false;
}

Polygon2 unit_square()
{
    return Polygon2{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
}

// Verify candidates in order against s2; on the first match compute the
// shared domain and the coincident-part patches in s1's parameter plane.
CoincidenceResult finish_bilinear(const ControlNet& s1, const ControlNet& s2, std::vector<BilinearReparam> cands,
                                  std::vector<std::string> diags)
{
    CoincidenceResult res;
    res.candidates = cands;
    for (size_t k = 0; k < cands.size(); ++k) {
        const auto& psi = cands[k];
        ControlNet composed;
        try {
            composed = reparam_bilinear(s1, psi, s2.degree_u(), s2.degree_v());
        } catch (const std::invalid_argument&) {
            diags.push_back("candidate " + std::to_string(k + 1) + ": composition exceeds the target degree");
            continue;
        }
        auto sigma = nets_equal_up_to_symmetry(composed, s2);
        if (!sigma) {
            diags.push_back("candidate " + std::to_string(k + 1) + ": control nets differ after reparametrization");
            continue;
        }
        for (size_t j = k + 1; j < cands.size(); ++j)
            diags.push_back("candidate " + std::to_string(j + 1) + " not verified (first match accepted)");
        res.reparam = psi;
        res.symmetry = *sigma;

        Polygon2 quad{{psi.A, psi.B, psi.C, psi.D}};
        if (!is_convex(quad))
            throw std::runtime_error("verified bilinear map has a non-convex image");
        Polygon2 g = clip_to_unit_square_raw(quad);
        if (g.size() < 3) {
            res.relation = Relation::Disjoint;
            if (g.size() == 1)
                diags.push_back("surfaces touch at a single point");
            else if (g.size() == 2)
                diags.push_back("surfaces touch along a boundary curve");
            res.diagnostics = std::move(diags);
            return res;
        }
        res.shared_domain = g;
        bool full = g == unit_square() && canonical(quad) == unit_square();
        res.relation = full ? Relation::Coincident : Relation::CoincidentPart;
        Decomposition dec = decompose(g);
        for (const auto& q : dec.quads) {
            BilinearReparam piece{q.vertices[0], q.vertices[1], q.vertices[2], q.vertices[3]};
            res.patches.push_back(reparam_bilinear(s1, piece));
        }
        if (dec.tri)
            res.triangle = extract_triangle(s1, dec.tri->vertices[0], dec.tri->vertices[1], dec.tri->vertices[2]);
        res.diagnostics = std::move(diags);
        return res;
    }
    res.relation = Relation::Different;
    if (cands.empty()) {
        if (has_irrational_note(diags))
            diags.insert(diags.begin(), "different (no rational witness)");
        else
            diags.insert(diags.begin(), "vertex system has no real solution");
    }
    res.diagnostics = std::move(diags);
    return res;
}

// ---- mixed degree: s2 of degree (n+m, m), map u = u(s), v bilinear ----

std::vector<BilinearReparam> mixed_candidates_core(const ControlNet& s1, const ControlNet& s2,
                                                   std::vector<std::string>& diags)
{
    int n = s1.degree_u(), m = s1.degree_v(), N = n + m;
    std::vector<BilinearReparam> out;
    FDSet fd = finite_differences(s1);
    if (fd.rho.is_zero())
        return out;

    auto row0 = row_curve(s2, 0).points, rowm = row_curve(s2, m).points;
    auto col0 = col_curve(s2, 0).points, colN = col_curve(s2, N).points;
    Vec3 d1 = top_difference(row0), d3 = top_difference(rowm);
    Vec3 e1 = top_difference1(row0), e3 = top_difference1(rowm);
    auto k1 = collinear(fd.rho, d1), k3 = collinear(fd.rho, d3);
    if (!k1 || !k3 || k1->is_zero() || k3->is_zero()) {
        diags.push_back("boundary differences not collinear with rho");
        return out;
    }
    int rk = rank(make_m_matrix(fd, n, m));
    EdgeSolutionSet s1e = solve_edge(fd, n, m, rk, *k1, e1);
    EdgeSolutionSet s3e = solve_edge(fd, n, m, rk, *k3, e3);
    for (const auto& r : s1e.irrational)
        diags.push_back("edge 1: irrational root near " + approx(r));
    for (const auto& r : s3e.irrational)
        diags.push_back("edge 3: irrational root near " + approx(r));

    // Q(u) = coefficient of v^m in S1, as a polynomial in u
    MonomialForm mf = to_monomial(s1);
    std::array<Poly, 3> Q;
    for (int q = 0; q < 3; ++q) {
        std::vector<Rat> c(n + 1);
        for (int i = 0; i <= n; ++i)
            c[i] = mf(i, m)[q];
        Q[q] = Poly(c);
    }
    Vec3 top0 = top_difference(col0), topN = top_difference(colN);

    for (const auto& [x1, y1] : s1e.pairs)
        for (const auto& [x3, y3] : s3e.pairs) {
            if (x1 != x3)
                continue;
            Vec3 R1 = (x1 * y1 / *k1) * e1 - (Rat(n) * y1) * fd.rho10 - (Rat(m) * x1) * fd.rho01;
            Vec3 R3 = (x3 * y3 / *k3) * e3 - (Rat(n) * y3) * fd.rho10 - (Rat(m) * x3) * fd.rho01;
            auto r1 = collinear(fd.rho, R1), r3 = collinear(fd.rho, R3);
            if (!r1 || !r3)
                continue;
            // a1 = lambda; a2 and y2 affine in lambda
            Poly lam = Poly::x();
            Poly a2 = (Poly::constant(*r1) - Rat(n) * y1 * lam) * (Rat(m) * x1).inv();
            Poly y2 = (Poly::constant(*r3) - Rat(n) * y3 * lam - Rat(m) * x3 * a2) * (Rat(m) * x3).inv();
            Poly y4 = y2 + Poly::constant(y3 - y1);
            Poly shift({x1, Rat(1)});
            std::vector<Poly> eqs;
            for (int q = 0; q < 3; ++q)
                eqs.push_back(pow(y2, m) * Q[q] - Poly::constant(top0[q]));
            for (int q = 0; q < 3; ++q)
                eqs.push_back(pow(y4, m) * Q[q].compose(shift) - Poly::constant(topN[q]));
            const Poly* lead = nullptr;
            for (const auto& e : eqs)
                if (!e.is_zero()) {
                    lead = &e;
                    break;
                }
            if (!lead) {
                diags.push_back("column conditions vanish identically; base point undetermined");
                continue;
            }
            for (const auto& r : isolate_real_roots(*lead)) {
                if (!r.exact()) {
                    diags.push_back("base point: irrational root near " + approx(r));
                    continue;
                }
                const Rat& l = r.value;
                bool ok = true;
                for (const auto& e : eqs)
                    ok = ok && e.eval(l).is_zero();
                if (!ok)
                    continue;
                Rat A1 = l, A2 = a2.eval(l), Y2 = y2.eval(l);
                if (Y2.is_zero())
                    continue;
                BilinearReparam psi;
                psi.A = {A1, A2};
                psi.B = {A1 + x1, A2 + y1};
                psi.D = {A1, A2 + Y2};
                psi.C = {A1 + x1, A2 + Y2 + y3};
                bool dup = false;
                for (const auto& q : out)
                    dup = dup || q == psi;
                if (!dup)
                    out.push_back(psi);
            }
        }
    return out;
}

Point2 swap(const Point2& p)
{
    return {p.v, p.u};
}

// psi for (S1^T, S2^T) -> psi for (S1, S2)
BilinearReparam untranspose_both(const BilinearReparam& t)
{
    return {swap(t.A), swap(t.D), swap(t.C), swap(t.B)};
}

// psi for (S1^T, S2) -> psi for (S1, S2)
BilinearReparam untranspose_base(const BilinearReparam& t)
{
    return {swap(t.A), swap(t.B), swap(t.C), swap(t.D)};
}

}  // namespace

CoincidenceResult test_cross_degree(const ControlNet& s1, const ControlNet& s2)
{
    int n = s1.degree_u(), m = s1.degree_v();
    if (s2.degree_u() != n + m || s2.degree_v() != n + m)
        throw std::invalid_argument("test_cross_degree: second net must have degree (n+m, n+m)");
    require_irreducible(s1, "s1");
    require_irreducible(s2, "s2");

    auto sys = make_cross_system(s1, s2);
    if (!sys) {
        CoincidenceResult res;
        res.diagnostics.push_back("boundary differences not collinear with rho");
        return res;
    }
    std::vector<std::string> diags;
    diags.push_back("rank(M) = " + std::to_string(sys->m_rank));
    auto cands = cross_candidates(*sys, &diags);
    return finish_bilinear(s1, s2, std::move(cands), std::move(diags));
}

CoincidenceResult test_mixed_degree(const ControlNet& s1, const ControlNet& s2)
{
    int n = s1.degree_u(), m = s1.degree_v();
    int N = s2.degree_u(), M = s2.degree_v();
    bool along_u = N == n + m && M == m;
    bool along_v = N == n && M == n + m;
    if (!along_u && !along_v)
        throw std::invalid_argument("test_mixed_degree: second net must have degree (n+m, m) or (n, n+m)");
    require_irreducible(s1, "s1");
    require_irreducible(s2, "s2");

    std::vector<std::string> diags;
    std::vector<BilinearReparam> cands;
    auto add = [&](const BilinearReparam& p) {
        for (const auto& q : cands)
            if (q == p)
                return;
        cands.push_back(p);
    };
    if (along_u) {
        for (const auto& p : mixed_candidates_core(s1, s2, diags))
            add(p);
        if (n == m)
            for (const auto& p : mixed_candidates_core(transpose(s1), s2, diags))
                add(untranspose_base(p));
    } else {
        ControlNet t1 = transpose(s1), t2 = transpose(s2);
        for (const auto& p : mixed_candidates_core(t1, t2, diags))
            add(untranspose_both(p));
        if (n == m)
            for (const auto& p : mixed_candidates_core(s1, t2, diags))
                add(untranspose_both(untranspose_base(p)));
    }
    return finish_bilinear(s1, s2, std::move(cands), std::move(diags));
}

namespace {

enum class Route { Same, Cross, Mixed, None };

Route route(int n, int m, int N, int M)
{
    if (N == n && M == m)
        return Route::Same;
    if (N == n + m && M == n + m)
        return Route::Cross;
    if ((N == n + m && M == m) || (N == n && M == n + m))
        return Route::Mixed;
    return Route::None;
}

CoincidenceResult run(Route r, const ControlNet& a, const ControlNet& b)
{
    switch (r) {
    case Route::Same: return test_same_degree(a, b);
    case Route::Cross: return test_cross_degree(a, b);
    case Route::Mixed: return test_mixed_degree(a, b);
    case Route::None: break;
    }
    return {};
}

}  // namespace

CoincidenceResult dispatch(const ControlNet& s1, const ControlNet& s2)
{
    int n = s1.degree_u(), m = s1.degree_v(), N = s2.degree_u(), M = s2.degree_v();
    Route fwd = route(n, m, N, M);
    if (fwd != Route::None)
        return run(fwd, s1, s2);
    Route back = route(N, M, n, m);
    if (back != Route::None) {
        // the lower-degree net is the base; re-label the irreducibility diagnostics
        CoincidenceResult res;
        try {
            res = run(back, s2, s1);
        } catch (const ReducibleInput& e) {
            throw ReducibleInput(e.which() == "s1" ? "s2" : "s1", e.failures());
        }
        res.base = "s2";
        res.diagnostics.insert(res.diagnostics.begin(), "roles swapped: the second input is the base net");
        return res;
    }
    require_irreducible(s1, "s1");
    require_irreducible(s2, "s2");
    CoincidenceResult res;
    res.diagnostics.push_back("no admissible degree relation between (" + std::to_string(n) + "," + std::to_string(m)
                              + ") and (" + std::to_string(N) + "," + std::to_string(M) + ")");
    return res;
}

}  // namespace coincide
