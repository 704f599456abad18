#include "coincide/roots.hpp"

#include <stdexcept>

namespace coincide {

namespace {

std::vector<Poly> sturm_sequence(const Poly& p)
{
    std::vector<Poly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        Poly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero())
            break;
        seq.push_back(-r);
    }
    if (seq.back().is_zero())
        seq.pop_back();
    return seq;
}

int variations(const std::vector<int>& signs)
{
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<Poly>& seq, const Rat& x)
{
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& q : seq)
        s.push_back(q.sign_at(x));
    return variations(s);
}

int variations_at_inf(const std::vector<Poly>& seq, bool positive)
{
    std::vector<int> s;
    for (const auto& q : seq) {
        int sg = q.lead().sign();
        if (!positive && q.degree() % 2 == 1)
            sg = -sg;
        s.push_back(sg);
    }
    return variations(s);
}

Rat floor_rat(const Rat& x)
{
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.mpq().get_num_mpz_t(), x.mpq().get_den_mpz_t());
    return Rat(f);
}

struct Isolator {
    std::shared_ptr<const Poly> sf;
    std::vector<Poly> seq;
    Rat rational_width;  // below this, the interval holds at most one candidate rational root

    explicit Isolator(const Poly& p)
    {
        sf = std::make_shared<const Poly>(squarefree_part(p));
        seq = sturm_sequence(*sf);
        mpz_class an = integer_normalize(*sf).back();
        rational_width = Rat(mpq_class(mpz_class(1), an * an));
    }

    int count(const Rat& a, const Rat& b) const
    {
        return variations_at(seq, a) - variations_at(seq, b);
    }

    RootLocation exact(const Rat& x) const
    {
        RootLocation r;
        r.kind = RootLocation::Kind::Exact;
        r.value = x;
        r.poly = sf;
        return r;
    }

    // (a, b] holds exactly one root. Bisect until it is identified as a
    // rational root or proven irrational.
    RootLocation resolve(Rat a, Rat b) const
    {
        for (;;) {
            if (sf->eval(b).is_zero())
                return exact(b);
            Rat cand = simplest_between(a, b);
            if (cand != a && sf->eval(cand).is_zero())
                return exact(cand);
            if (b - a < rational_width)
                break;
            Rat mid = (a + b) / Rat(2);
            if (count(a, mid) == 1)
                b = mid;
            else
                a = mid;
        }
        RootLocation r;
        r.kind = RootLocation::Kind::Isolated;
        r.lo = a;
        r.hi = b;
        r.poly = sf;
        return r;
    }

    void isolate(const Rat& a, const Rat& b, int c, std::vector<RootLocation>& out) const
    {
        if (c == 0)
            return;
        if (c == 1) {
            out.push_back(resolve(a, b));
            return;
        }
        Rat mid = (a + b) / Rat(2);
        int left = count(a, mid);
        isolate(a, mid, left, out);
        isolate(mid, b, c - left, out);
    }
};

}  // namespace

std::string RootLocation::str() const
{
    if (exact())
        return value.str();
    return "(" + lo.str() + ", " + hi.str() + ")";
}

Rat simplest_between(const Rat& lo, const Rat& hi)
{
    if (hi < lo)
        return simplest_between(hi, lo);
    if (lo.sign() <= 0 && hi.sign() >= 0)
        return Rat(0);
    if (hi.sign() < 0)
        return -simplest_between(-hi, -lo);
    Rat fl = floor_rat(lo);
    if (fl == lo)
        return lo;
    if (fl + Rat(1) <= hi)
        return fl + Rat(1);
    return fl + simplest_between((hi - fl).inv(), (lo - fl).inv()).inv();
}

int sturm_count(const Poly& p, const Rat& a, const Rat& b)
{
    auto seq = sturm_sequence(squarefree_part(p));
    return variations_at(seq, a) - variations_at(seq, b);
}

int sturm_count_all(const Poly& p)
{
    auto seq = sturm_sequence(squarefree_part(p));
    return variations_at_inf(seq, false) - variations_at_inf(seq, true);
}

std::vector<RootLocation> isolate_real_roots(const Poly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("identically zero");
    std::vector<RootLocation> out;
    if (p.degree() == 0)
        return out;
    Isolator iso(p);
    const Poly& sf = *iso.sf;
    // Cauchy bound: every root lies in (-B, B)
    Rat bound(0);
    Rat l = sf.lead();
    for (int k = 0; k < sf.degree(); ++k) {
        Rat r = (sf.coeff(k) / l).abs();
        if (r > bound)
            bound = r;
    }
    bound += Rat(1);
    int total = iso.count(-bound, bound);
    iso.isolate(-bound, bound, total, out);
    return out;
}

std::vector<RootLocation> isolate_real_roots(const std::vector<Rat>& coeffs)
{
    return isolate_real_roots(Poly(coeffs));
}

RootLocation refine(const RootLocation& r, const Rat& width)
{
    if (r.exact())
        return r;
    auto seq = sturm_sequence(*r.poly);
    RootLocation out = r;
    while (out.hi - out.lo > width) {
        Rat mid = (out.lo + out.hi) / Rat(2);
        if (r.poly->eval(mid).is_zero()) {
            out.kind = RootLocation::Kind::Exact;
            out.value = mid;
            return out;
        }
        if (variations_at(seq, out.lo) - variations_at(seq, mid) == 1)
            out.hi = mid;
        else
            out.lo = mid;
    }
    return out;
}

}  // namespace coincide
