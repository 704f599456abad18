#pragma once

#include "coincide/result.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace coincide {

using json = nlohmann::json;

// Thrown for malformed net/result files.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ControlNet net_from_json(const json& j);
json net_to_json(const ControlNet& net);
ControlNet read_net_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

json tri_to_json(const TriangularNet& t);
TriangularNet tri_from_json(const json& j);
json point2_to_json(const Point2& p);
json bilinear_to_json(const BilinearReparam& p);
json result_to_json(const CoincidenceResult& r);
CoincidenceResult result_from_json(const json& j);

// Wavefront OBJ with `v` and `f` records only. Several patches go into one
// file with shared vertex numbering.
struct Mesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<size_t, 3>> faces;  // 1-based
};
void append_patch(Mesh& mesh, const ControlNet& net, int samples);
void append_patch(Mesh& mesh, const TriangularNet& tri, int samples);
void write_obj(std::ostream& os, const Mesh& mesh);
void write_obj_file(const std::string& path, const Mesh& mesh);
std::string format_double(double d);  // %.17g

}  // namespace coincide
