// coincide: test two tensor-product Bezier control nets for coincidence.
#include "coincide/cross_degree.hpp"
#include "coincide/generator.hpp"
#include "coincide/io.hpp"
#include "coincide/irreducibility.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace coincide;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitReducible = 3;

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    return out;
}

std::vector<Rat> parse_rats(const std::string& s, size_t count, const char* what)
{
    auto parts = split(s, ',');
    if (parts.size() != count)
        throw ParseError(std::string(what) + ": expected " + std::to_string(count) + " comma-separated values");
    std::vector<Rat> out;
    for (const auto& p : parts)
        out.push_back(Rat::parse(p));
    return out;
}

BilinearReparam parse_quad(const std::string& s)
{
    auto pts = split(s, ';');
    if (pts.size() != 4)
        throw ParseError("--quad: expected four 'u,v' pairs separated by ';'");
    std::vector<Rat> flat;
    for (const auto& p : pts)
        for (const auto& r : parse_rats(p, 2, "--quad"))
            flat.push_back(r);
    return BilinearReparam::from_flat(flat);
}

void emit(const json& j, const std::string& out)
{
    if (out.empty())
        std::cout << j.dump(1) << "\n";
    else
        write_json_file(out, j);
}

Mesh mesh_of(const ControlNet& net, int samples)
{
    Mesh m;
    append_patch(m, net, samples);
    return m;
}

Mesh mesh_of(const CoincidenceResult& r, int samples)
{
    Mesh m;
    for (const auto& p : r.patches)
        append_patch(m, p, samples);
    if (r.triangle)
        append_patch(m, *r.triangle, samples);
    return m;
}

int cmd_check(const std::string& a, const std::string& b, const std::string& out, const std::string& mesh_out,
              int samples)
{
    ControlNet s1 = read_net_file(a);
    ControlNet s2 = read_net_file(b);
    CoincidenceResult r = dispatch(s1, s2);
    emit(result_to_json(r), out);
    if (!mesh_out.empty()) {
        write_obj_file(mesh_out + "_s1.obj", mesh_of(s1, samples));
        write_obj_file(mesh_out + "_s2.obj", mesh_of(s2, samples));
        write_obj_file(mesh_out + "_part.obj", mesh_of(r, samples));
    }
    return 0;
}

int cmd_gen(const std::string& kind, const std::string& degree, const std::string& window, const std::string& quad,
            uint64_t seed, bool rank2, const std::string& out)
{
    auto deg = split(degree, ',');
    if (deg.size() != 2)
        throw ParseError("--degree: expected n,m");
    int n = std::stoi(deg[0]), m = std::stoi(deg[1]);
    if (n < 1 || m < 1)
        throw ParseError("--degree: degrees must be at least 1");
    Rng rng(seed);
    GenPair pair;
    if (kind == "same-degree") {
        AffineReparam phi = window.empty() ? random_window(rng) : [&] {
            auto w = parse_rats(window, 4, "--window");
            return AffineReparam{w[0], w[1], w[2], w[3]};
        }();
        pair = gen_same_degree(n, m, phi, rng);
    } else if (kind == "cross-degree") {
        pair = quad.empty() ? draw_cross_degree(n, m, rng, rank2) : gen_cross_degree(n, m, parse_quad(quad), rng, rank2);
    } else if (kind == "mixed") {
        pair = quad.empty() ? draw_mixed(n, m, rng) : gen_mixed(n, m, parse_quad(quad), rng);
    } else {
        throw ParseError("unknown kind '" + kind + "' (same-degree, cross-degree, mixed)");
    }
    json planted;
    if (auto a = std::get_if<AffineReparam>(&pair.planted))
        planted = json{{"kind", "affine"}, {"params", {a->a.str(), a->b.str(), a->c.str(), a->d.str()}}};
    else
        planted = bilinear_to_json(std::get<BilinearReparam>(pair.planted));
    if (out.empty()) {
        std::cout << json{{"s1", net_to_json(pair.base)}, {"s2", net_to_json(pair.other)}, {"planted", planted}}.dump(1)
                  << "\n";
    } else {
        write_json_file(out + "_1.json", net_to_json(pair.base));
        write_json_file(out + "_2.json", net_to_json(pair.other));
        std::cout << json{{"s1", out + "_1.json"}, {"s2", out + "_2.json"}, {"planted", planted}}.dump(1) << "\n";
    }
    return 0;
}

int cmd_fd(const std::string& file)
{
    ControlNet net = read_net_file(file);
    FDSet fd = finite_differences(net);
    json j{{"degree", {net.degree_u(), net.degree_v()}},
           {"rho", {fd.rho.x.str(), fd.rho.y.str(), fd.rho.z.str()}},
           {"rho10", {fd.rho10.x.str(), fd.rho10.y.str(), fd.rho10.z.str()}},
           {"rho01", {fd.rho01.x.str(), fd.rho01.y.str(), fd.rho01.z.str()}}};
    if (net.degree_u() == net.degree_v()) {
        BoundaryFD b = boundary_differences(net);
        json d = json::array(), d1 = json::array();
        for (int k = 0; k < 4; ++k) {
            d.push_back({b.delta[k].x.str(), b.delta[k].y.str(), b.delta[k].z.str()});
            d1.push_back({b.delta1[k].x.str(), b.delta1[k].y.str(), b.delta1[k].z.str()});
        }
        j["delta"] = d;
        j["delta1"] = d1;
    }
    std::cout << j.dump(1) << "\n";
    return 0;
}

int cmd_irreducible(const std::string& file)
{
    ControlNet net = read_net_file(file);
    json curves = json::array();
    bool all = true;
    auto add = [&](const std::string& kind, int idx, const BezierCurve3& c) {
        auto r = analyze_curve(c);
        all = all && r.irreducible();
        std::string verdict = r.elevated ? "elevated" : r.composed ? "composed" : "irreducible";
        curves.push_back(json{{"curve", kind + " " + std::to_string(idx)}, {"verdict", verdict}, {"witness", r.witness}});
    };
    for (int j = 0; j <= net.degree_v(); ++j)
        add("row curve", j, row_curve(net, j));
    for (int i = 0; i <= net.degree_u(); ++i)
        add("column curve", i, col_curve(net, i));
    json out{{"irreducible", all}, {"curves", curves}};
    if (!all) {
        auto rep = analyze_surface(net);
        out["reducible"] = rep.failures;
    }
    std::cout << out.dump(1) << "\n";
    return 0;
}

int cmd_export_mesh(const std::string& file, const std::string& out, int samples)
{
    std::ifstream in(file);
    if (!in)
        throw ParseError("cannot open " + file);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(file + ": " + e.what());
    }
    Mesh mesh = j.contains("relation") ? mesh_of(result_from_json(j), samples) : mesh_of(net_from_json(j), samples);
    if (out.empty())
        write_obj(std::cout, mesh);
    else
        write_obj_file(out, mesh);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coincidence test for tensor-product Bezier surfaces"};
    app.require_subcommand(1);

    std::string out, mesh_out, window, quad, degree = "2,2";
    int samples = 16;
    uint64_t seed = 1;
    bool rank2 = false;

    std::string a, b;
    auto* check = app.add_subcommand("check", "classify two control nets");
    check->add_option("file_a", a, "first net (JSON)")->required();
    check->add_option("file_b", b, "second net (JSON)")->required();
    check->add_option("--out", out, "write the result file here instead of stdout");
    check->add_option("--mesh-out", mesh_out, "write PREFIX_s1.obj, PREFIX_s2.obj, PREFIX_part.obj");
    check->add_option("--samples", samples, "mesh samples per direction")->check(CLI::PositiveNumber);

    std::string kind;
    auto* gen = app.add_subcommand("gen", "generate a coincident pair");
    gen->add_option("kind", kind, "same-degree | cross-degree | mixed")->required();
    gen->add_option("--degree", degree, "base degree n,m");
    gen->add_option("--window", window, "a,b,c,d for same-degree");
    gen->add_option("--quad", quad, "u,v;u,v;u,v;u,v vertices A;B;C;D");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_flag("--rank2", rank2, "make rank(M) = 2 (cross-degree)");
    gen->add_option("--out", out, "write PREFIX_1.json and PREFIX_2.json");

    std::string file;
    auto* fd = app.add_subcommand("fd", "print finite-difference vectors");
    fd->add_option("file", file, "net (JSON)")->required();

    auto* irr = app.add_subcommand("irreducible", "irreducibility verdict per iso-curve");
    irr->add_option("file", file, "net (JSON)")->required();

    auto* mesh = app.add_subcommand("export-mesh", "write an OBJ mesh of a net or of a result's patches");
    mesh->add_option("file", file, "net or result file (JSON)")->required();
    mesh->add_option("--out", out, "OBJ path (default stdout)");
    mesh->add_option("--samples", samples, "samples per direction")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (*check)
            return cmd_check(a, b, out, mesh_out, samples);
        if (*gen)
            return cmd_gen(kind, degree, window, quad, seed, rank2, out);
        if (*fd)
            return cmd_fd(file);
        if (*irr)
            return cmd_irreducible(file);
        if (*mesh)
            return cmd_export_mesh(file, out, samples);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ReducibleInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitReducible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
