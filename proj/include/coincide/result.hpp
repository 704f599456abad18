#pragma once

#include "coincide/blossom.hpp"
#include "coincide/domain.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace coincide {

enum class Relation { Different, Disjoint, CoincidentPart, Coincident };

std::string to_string(Relation r);  // "different", "disjoint", ...
std::optional<Relation> relation_from_string(const std::string& s);

using Reparam = std::variant<AffineReparam, BilinearReparam>;

struct CoincidenceResult {
    Relation relation = Relation::Different;
    std::optional<Reparam> reparam;  // maps the second argument's domain into the base's
    std::optional<NetSymmetry> symmetry;
    std::vector<ControlNet> patches;
    std::optional<TriangularNet> triangle;
    std::optional<Polygon2> shared_domain;  // in the base net's (u, v) plane
    std::vector<BilinearReparam> candidates;  // every assembled candidate, cross/mixed only
    std::vector<std::string> diagnostics;
    std::string base = "s1";  // which input plays the lower-degree role
};

// Thrown when an input fails the irreducibility test.
class ReducibleInput : public std::runtime_error {
public:
    ReducibleInput(std::string which, std::vector<std::string> failures);
    const std::string& which() const { return which_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::string which_;
    std::vector<std::string> failures_;
};

void require_irreducible(const ControlNet& net, const std::string& which);

}  // namespace coincide
