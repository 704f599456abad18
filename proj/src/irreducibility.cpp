#include "coincide/irreducibility.hpp"

namespace coincide {

std::array<Poly, 3> curve_polys(const BezierCurve3& c)
{
    int n = c.degree();
    std::array<std::vector<Rat>, 3> co;
    for (auto& v : co)
        v.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        Vec3 s;
        for (int i = 0; i <= k; ++i) {
            Rat w = binom(k, i);
            s += ((k - i) % 2 ? -w : w) * c.points[i];
        }
        s *= binom(n, k);
        for (int q = 0; q < 3; ++q)
            co[q][k] = s[q];
    }
    return {Poly(co[0]), Poly(co[1]), Poly(co[2])};
}

bool is_degree_elevated(const BezierCurve3& c)
{
    return top_difference(c.points).is_zero();
}

namespace {

// Monic h with h(0) = 0 of degree d such that h^k agrees with f/lead(f) in
// the top d coefficients, where k = deg f / d.
Poly approximate_root(const Poly& f, int d)
{
    int n = f.degree();
    int k = n / d;
    Poly F = f.monic();
    // reversed coefficients, F_j = coeff of t^(n-j)
    std::vector<Rat> g(d, Rat(0));
    g[0] = Rat(1);
    for (int j = 1; j < d; ++j) {
        // coefficient of s^j in (g_0 + ... + g_{j-1} s^{j-1})^k
        std::vector<Rat> acc{Rat(1)};
        for (int e = 0; e < k; ++e) {
            std::vector<Rat> next(j + 1, Rat(0));
            for (size_t a = 0; a < acc.size(); ++a)
                for (int b = 0; b < j && a + b <= static_cast<size_t>(j); ++b)
                    next[a + b] += acc[a] * g[b];
            acc = std::move(next);
        }
        g[j] = (F.coeff(n - j) - acc[j]) / Rat(k);
    }
    std::vector<Rat> h(d + 1, Rat(0));
    for (int j = 0; j < d; ++j)
        h[d - j] = g[j];
    return Poly(h);
}

// True iff p is a polynomial in h, i.e. every digit of its h-adic expansion
// is a constant.
bool is_polynomial_in(Poly p, const Poly& h)
{
    while (!p.is_zero()) {
        auto [q, r] = divmod(p, h);
        if (r.degree() > 0)
            return false;
        p = std::move(q);
    }
    return true;
}

}  // namespace

std::optional<Poly> inner_polynomial(const BezierCurve3& c)
{
    int n = c.degree();
    if (n < 2)
        return std::nullopt;
    auto polys = curve_polys(c);
    const Poly* f = nullptr;
    for (const auto& p : polys)
        if (p.degree() == n) {
            f = &p;
            break;
        }
    if (!f)
        return std::nullopt;  // elevated
    for (int d = 2; d <= n; ++d) {
        if (n % d)
            continue;
        Poly h = approximate_root(*f, d);
        bool ok = true;
        for (const auto& p : polys)
            if (!is_polynomial_in(p, h)) {
                ok = false;
                break;
            }
        if (ok)
            return h;
    }
    return std::nullopt;
}

bool is_composed(const BezierCurve3& c)
{
    return inner_polynomial(c).has_value();
}

IrreducibilityReport analyze_curve(const BezierCurve3& c)
{
    IrreducibilityReport r;
    if (is_degree_elevated(c)) {
        r.elevated = true;
        r.witness = "top difference vanishes";
        return r;
    }
    if (auto h = inner_polynomial(c)) {
        r.composed = true;
        r.witness = "inner degree " + std::to_string(h->degree());
    }
    return r;
}

SurfaceReport analyze_surface(const ControlNet& net)
{
    SurfaceReport rep;
    auto note = [&](const std::string& what, int idx, const IrreducibilityReport& r) {
        if (r.irreducible())
            return;
        rep.irreducible = false;
        std::string s = what + " " + std::to_string(idx) + (r.elevated ? " elevated" : " composed");
        if (r.composed)
            s += " (" + r.witness + ")";
        rep.failures.push_back(s);
    };
    for (int j = 0; j <= net.degree_v(); ++j)
        note("row curve", j, analyze_curve(row_curve(net, j)));
    for (int i = 0; i <= net.degree_u(); ++i)
        note("column curve", i, analyze_curve(col_curve(net, i)));
    return rep;
}

bool surface_irreducible(const ControlNet& net)
{
    return analyze_surface(net).irreducible;
}

}  // namespace coincide
