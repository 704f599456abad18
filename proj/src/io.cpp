#include "coincide/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace coincide {

namespace {

Rat rat_from_json(const json& v)
{
    if (v.is_string())
        return Rat::parse(v.get<std::string>());
    if (v.is_number_integer())
        return Rat(v.get<long>());
    throw ParseError("coordinate must be an exact rational string or an integer");
}

Point3 point3_from_json(const json& p)
{
    if (!p.is_array() || p.size() != 3)
        throw ParseError("control point must be an array of three coordinates");
    return Point3(rat_from_json(p[0]), rat_from_json(p[1]), rat_from_json(p[2]));
}

json point3_to_json(const Point3& p)
{
    return json::array({p.x.str(), p.y.str(), p.z.str()});
}

Point2 point2_from_json(const json& p)
{
    if (!p.is_array() || p.size() != 2)
        throw ParseError("parameter point must be an array of two coordinates");
    return {rat_from_json(p[0]), rat_from_json(p[1])};
}

}  // namespace

ControlNet net_from_json(const json& j)
{
    try {
        if (!j.is_object() || !j.contains("degree") || !j.contains("points"))
            throw ParseError("net file needs 'degree' and 'points'");
        const json& deg = j.at("degree");
        if (!deg.is_array() || deg.size() != 2)
            throw ParseError("'degree' must be [n, m]");
        int n = deg[0].get<int>(), m = deg[1].get<int>();
        if (n < 1 || m < 1)
            throw ParseError("degrees must be at least 1");
        const json& pts = j.at("points");
        if (!pts.is_array() || static_cast<int>(pts.size()) != n + 1)
            throw ParseError("'points' must have n+1 rows");
        ControlNet net(n, m);
        for (int i = 0; i <= n; ++i) {
            if (!pts[i].is_array() || static_cast<int>(pts[i].size()) != m + 1)
                throw ParseError("row " + std::to_string(i) + " must have m+1 points");
            for (int k = 0; k <= m; ++k)
                net(i, k) = point3_from_json(pts[i][k]);
        }
        return net;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

json net_to_json(const ControlNet& net)
{
    json rows = json::array();
    for (int i = 0; i <= net.degree_u(); ++i) {
        json row = json::array();
        for (int j = 0; j <= net.degree_v(); ++j)
            row.push_back(point3_to_json(net(i, j)));
        rows.push_back(row);
    }
    return json{{"degree", {net.degree_u(), net.degree_v()}}, {"points", rows}};
}

ControlNet read_net_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return net_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << j.dump(1) << "\n";
}

json tri_to_json(const TriangularNet& t)
{
    json rows = json::array();
    for (int nu = 0; nu <= t.degree; ++nu) {
        json row = json::array();
        for (int mu = 0; nu + mu <= t.degree; ++mu)
            row.push_back(point3_to_json(t(nu, mu)));
        rows.push_back(row);
    }
    return json{{"total_degree", t.degree}, {"points", rows}};
}

TriangularNet tri_from_json(const json& j)
{
    int d = j.at("total_degree").get<int>();
    TriangularNet t(d);
    const json& rows = j.at("points");
    for (int nu = 0; nu <= d; ++nu)
        for (int mu = 0; nu + mu <= d; ++mu)
            t(nu, mu) = point3_from_json(rows.at(nu).at(mu));
    return t;
}

json point2_to_json(const Point2& p)
{
    return json::array({p.u.str(), p.v.str()});
}

json bilinear_to_json(const BilinearReparam& p)
{
    json params = json::array();
    for (const auto& r : p.flat())
        params.push_back(r.str());
    return json{{"kind", "bilinear"},
                {"A", point2_to_json(p.A)},
                {"B", point2_to_json(p.B)},
                {"C", point2_to_json(p.C)},
                {"D", point2_to_json(p.D)},
                {"params", params}};
}

json result_to_json(const CoincidenceResult& r)
{
    json j;
    j["relation"] = to_string(r.relation);
    j["base"] = r.base;
    if (!r.reparam) {
        j["reparam"] = nullptr;
    } else if (auto a = std::get_if<AffineReparam>(&*r.reparam)) {
        j["reparam"] = json{{"kind", "affine"},
                            {"a", a->a.str()},
                            {"b", a->b.str()},
                            {"c", a->c.str()},
                            {"d", a->d.str()},
                            {"params", {a->a.str(), a->b.str(), a->c.str(), a->d.str()}}};
    } else {
        j["reparam"] = bilinear_to_json(std::get<BilinearReparam>(*r.reparam));
    }
    j["symmetry"] = r.symmetry ? json(r.symmetry->name()) : json(nullptr);
    if (r.shared_domain) {
        json g = json::array();
        for (const auto& p : r.shared_domain->vertices)
            g.push_back(point2_to_json(p));
        j["shared_domain"] = g;
    } else {
        j["shared_domain"] = nullptr;
    }
    json patches = json::array();
    for (const auto& p : r.patches)
        patches.push_back(net_to_json(p));
    j["patches"] = patches;
    j["triangle"] = r.triangle ? tri_to_json(*r.triangle) : json(nullptr);
    json cands = json::array();
    for (const auto& c : r.candidates)
        cands.push_back(bilinear_to_json(c));
    j["candidates"] = cands;
    j["diagnostics"] = r.diagnostics;
    return j;
}

CoincidenceResult result_from_json(const json& j)
{
    try {
        CoincidenceResult r;
        auto rel = relation_from_string(j.at("relation").get<std::string>());
        if (!rel)
            throw ParseError("unknown relation");
        r.relation = *rel;
        if (j.contains("base"))
            r.base = j["base"].get<std::string>();
        if (j.contains("reparam") && !j["reparam"].is_null()) {
            const json& rp = j["reparam"];
            if (rp.at("kind") == "affine")
                r.reparam = AffineReparam{rat_from_json(rp.at("a")), rat_from_json(rp.at("b")), rat_from_json(rp.at("c")),
                                          rat_from_json(rp.at("d"))};
            else
                r.reparam = BilinearReparam{point2_from_json(rp.at("A")), point2_from_json(rp.at("B")),
                                            point2_from_json(rp.at("C")), point2_from_json(rp.at("D"))};
        }
        if (j.contains("symmetry") && j["symmetry"].is_string())
            r.symmetry = NetSymmetry::from_name(j["symmetry"].get<std::string>());
        if (j.contains("shared_domain") && j["shared_domain"].is_array()) {
            Polygon2 g;
            for (const auto& p : j["shared_domain"])
                g.vertices.push_back(point2_from_json(p));
            r.shared_domain = g;
        }
        if (j.contains("patches"))
            for (const auto& p : j["patches"])
                r.patches.push_back(net_from_json(p));
        if (j.contains("triangle") && !j["triangle"].is_null())
            r.triangle = tri_from_json(j["triangle"]);
        if (j.contains("candidates"))
            for (const auto& c : j["candidates"])
                r.candidates.push_back(BilinearReparam{point2_from_json(c.at("A")), point2_from_json(c.at("B")),
                                                       point2_from_json(c.at("C")), point2_from_json(c.at("D"))});
        if (j.contains("diagnostics"))
            r.diagnostics = j["diagnostics"].get<std::vector<std::string>>();
        return r;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("result file: ") + e.what());
    }
}

std::string format_double(double d)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

namespace {

std::array<double, 3> to_doubles(const Point3& p)
{
    return {p.x.to_double(), p.y.to_double(), p.z.to_double()};
}

}  // namespace

void append_patch(Mesh& mesh, const ControlNet& net, int samples)
{
    if (samples < 1)
        throw std::invalid_argument("samples must be positive");
    size_t base = mesh.vertices.size() + 1;
    for (int i = 0; i <= samples; ++i)
        for (int j = 0; j <= samples; ++j)
            mesh.vertices.push_back(to_doubles(evaluate(net, Rat(i, samples), Rat(j, samples))));
    auto id = [&](int i, int j) { return base + static_cast<size_t>(i) * (samples + 1) + j; };
    for (int i = 0; i < samples; ++i)
        for (int j = 0; j < samples; ++j) {
            mesh.faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            mesh.faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
}

void append_patch(Mesh& mesh, const TriangularNet& tri, int samples)
{
    if (samples < 1)
        throw std::invalid_argument("samples must be positive");
    std::vector<std::vector<size_t>> id(samples + 1);
    for (int a = 0; a <= samples; ++a)
        for (int b = 0; a + b <= samples; ++b) {
            id[a].push_back(mesh.vertices.size() + 1);
            mesh.vertices.push_back(to_doubles(evaluate(tri, Rat(a, samples), Rat(b, samples))));
        }
    for (int a = 0; a < samples; ++a)
        for (int b = 0; a + b < samples; ++b) {
            mesh.faces.push_back({id[a][b], id[a + 1][b], id[a][b + 1]});
            if (a + b + 1 < samples)
                mesh.faces.push_back({id[a + 1][b], id[a + 1][b + 1], id[a][b + 1]});
        }
}

void write_obj(std::ostream& os, const Mesh& mesh)
{
    for (const auto& v : mesh.vertices)
        os << "v " << format_double(v[0]) << ' ' << format_double(v[1]) << ' ' << format_double(v[2]) << '\n';
    for (const auto& f : mesh.faces)
        os << "f " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

void write_obj_file(const std::string& path, const Mesh& mesh)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    write_obj(out, mesh);
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

}  // namespace coincide
