#include "coincide/result.hpp"

#include "coincide/irreducibility.hpp"

namespace coincide {

std::string to_string(Relation r)
{
    switch (r) {
    case Relation::Different: return "different";
    case Relation::Disjoint: return "disjoint";
    case Relation::CoincidentPart: return "coincident_part";
    case Relation::Coincident: return "coincident";
    }
    return "different";
}

std::optional<Relation> relation_from_string(const std::string& s)
{
    for (auto r : {Relation::Different, Relation::Disjoint, Relation::CoincidentPart, Relation::Coincident})
        if (to_string(r) == s)
            return r;
    return std::nullopt;
}

namespace {

std::string join_failures(const std::string& which, const std::vector<std::string>& f)
{
    std::string s = "input not irreducible: " + which;
    for (const auto& x : f)
        s += "; " + x;
    return s;
}

}  // namespace

ReducibleInput::ReducibleInput(std::string which, std::vector<std::string> failures)
    : std::runtime_error(join_failures(which, failures)), which_(std::move(which)), failures_(std::move(failures))
{
}

void require_irreducible(const ControlNet& net, const std::string& which)
{
    auto rep = analyze_surface(net);
    if (!rep.irreducible)
        throw ReducibleInput(which, rep.failures);
}

}  // namespace coincide
