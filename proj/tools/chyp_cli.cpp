// Command-line front end: representations, spheres, ridges, the Ford domain,
// its ideal boundary, the spine and the group computations.
#include "chyp/errors.hpp"
#include "chyp/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>

using namespace chyp;

namespace {

constexpr int kUsage = 1;
constexpr int kAssertion = 2;
constexpr int kTangency = 3;

struct Common {
    std::string config;
    int n = 4;
    double tolerance = 1e-9;
    CLI::Option* n_opt = nullptr;
    CLI::Option* tol_opt = nullptr;

    RunConfig resolve() const {
        RunConfig c;
        if (!config.empty()) c = load_config(config, c);
        if (n_opt && n_opt->count()) apply_setting(c, "n", std::to_string(n));
        if (tol_opt && tol_opt->count()) c.tolerance = tolerance;
        return c;
    }
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--config", c.config, "key=value run configuration")->check(CLI::ExistingFile);
    c.n_opt = app->add_option("--n", c.n, "cusp parameter, 4 or 6")->check(CLI::IsMember({4, 6}));
    c.tol_opt = app->add_option("--tolerance", c.tolerance, "numerical tolerance");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::Io, "cannot write " + path);
    f << text;
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::Io, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// A census name or a presentation file.
Presentation load_group(const std::string& what) {
    if (what == "m038" || what == "s090") return census_group(what);
    return parse_presentation(read_text(what));
}

// "w" or "w^k" naming a sphere of the domain.
int find_sphere(const PartialDomain& d, const std::string& label) {
    std::string w = label;
    int k = 0;
    if (const auto c = label.find('^'); c != std::string::npos) {
        w = label.substr(0, c);
        k = std::stoi(label.substr(c + 1));
    }
    const auto loc = d.locate(w, k);
    if (!loc) throw Error(ErrorCode::InvalidWord, "no sphere " + label + " in the domain");
    const int i = d.index(loc->first, loc->second);
    if (i < 0) throw Error(ErrorCode::InvalidWord, label + " lies outside the translate window");
    return i;
}

struct Built {
    PartialDomain d;
    BoundaryComplex bc;
    std::vector<RidgeCycle> cycles;
    QuotientComplex q;
};

PartialDomain make_domain(const RunConfig& c) {
    return build_partial_domain(generators(c.n), standard_word_set(c.n), c.kmin, c.kmax);
}

// The boundary complex keeps a pointer to the domain, so the domain lives in the result.
std::unique_ptr<Built> build_all(const RunConfig& c) {
    auto b = std::make_unique<Built>();
    b->d = make_domain(c);
    b->bc = ideal_boundary(b->d);
    b->cycles = ridge_cycles(b->bc, 64, c.tolerance);
    b->q = quotient_complex(b->bc, b->cycles);
    return b;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ford domains and spines for the groups Delta(3,4,n;inf), n = 4, 6"};
    app.require_subcommand(1);
    int code = 0;

    // rep dump
    Common rep_c;
    std::string rep_format = "json";
    auto* rep = app.add_subcommand("rep", "generator matrices and relations");
    auto* rep_dump = rep->add_subcommand("dump", "print the representation");
    rep->require_subcommand(1);
    add_common(rep_dump, rep_c);
    rep_dump->add_option("--format", rep_format)->check(CLI::IsMember({"json"}));
    rep_dump->callback([&] {
        const RunConfig c = rep_c.resolve();
        const Json j = rep_json(generators(c.n), c.tolerance);
        print_json(j);
        if (!j["relations_pass"].get<bool>()) code = kAssertion;
    });

    // spheres
    Common sph_c;
    std::string sph_format = "json";
    auto* sph = app.add_subcommand("spheres", "isometric spheres of the word set and their translates");
    add_common(sph, sph_c);
    sph->add_option("--format", sph_format)->check(CLI::IsMember({"json", "text"}));
    sph->callback([&] {
        const RunConfig c = sph_c.resolve();
        const PartialDomain d = make_domain(c);
        if (sph_format == "json") {
            print_json(with_table(spheres_json(d), "1"));
            return;
        }
        for (const auto& f : d.families) {
            const int i = d.index(d.locate(f, 0)->first, 0);
            const auto& s = d.spheres[static_cast<std::size_t>(i)].sphere;
            std::cout << f << "  centre (" << s.center.z.real() << ", " << s.center.z.imag() << ", " << s.center.t
                      << ")  radius " << s.radius << "\n";
        }
    });

    // giraud
    Common gir_c;
    std::string pair;
    int grid = 64;
    auto* gir = app.add_subcommand("giraud", "ridge of two spheres in Giraud torus coordinates");
    add_common(gir, gir_c);
    gir->add_option("--pair", pair, "w1,w2 with optional ^k suffixes")->required();
    gir->add_option("--grid", grid, "samples per torus angle")->check(CLI::Range(4, 4096));
    gir->callback([&] {
        const RunConfig c = gir_c.resolve();
        const auto comma = pair.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--pair", "expected w1,w2");
        const PartialDomain d = make_domain(c);
        const int s1 = find_sphere(d, pair.substr(0, comma)), s2 = find_sphere(d, pair.substr(comma + 1));
        Json j;
        const auto& S1 = d.spheres[static_cast<std::size_t>(s1)].sphere;
        const auto& S2 = d.spheres[static_cast<std::size_t>(s2)].sphere;
        j["pair"] = {d.label(s1), d.label(s2)};
        j["intersect"] = spheres_intersect(S1, S2);
        if (j["intersect"].get<bool>()) {
            const GiraudChart chart = make_giraud(S1, S2);
            Json rows = Json::array();
            for (int a = 0; a < grid; ++a) {
                std::string row;
                for (int b = 0; b < grid; ++b) {
                    const TorusPoint p{2 * std::numbers::pi * a / grid, 2 * std::numbers::pi * b / grid};
                    row += giraud_norm(chart, p) < 0 ? '#' : '.';
                }
                rows.push_back(row);
            }
            j["grid"] = grid;
            j["disk"] = rows;
            const RidgeRegion r = compute_ridge(d, s1, s2);
            j["ridge"] = ridge_json(d, r);
            if (r.tangency) code = kTangency;
        }
        print_json(j);
    });

    // ford build / ford report
    Common ford_c;
    std::string ford_out, side = "B";
    auto* ford = app.add_subcommand("ford", "partial Ford domain");
    ford->require_subcommand(1);
    auto* ford_build = ford->add_subcommand("build", "spheres, side reports and the x-axis check");
    add_common(ford_build, ford_c);
    ford_build->add_option("--out", ford_out, "output JSON file, - for stdout");
    ford_build->callback([&] {
        const RunConfig c = ford_c.resolve();
        const PartialDomain d = make_domain(c);
        const Json j = domain_json(d);
        write_text(ford_out, j.dump(2) + "\n");
        for (const auto& s : j["sides"])
            for (const auto& r : s["ridges"])
                if (r["tangency"].get<bool>()) code = kTangency;
        if (code == 0 && !j["x_axis_check"]["pass"].get<bool>()) code = kAssertion;
    });
    Common rep_side_c;
    auto* ford_report = ford->add_subcommand("report", "ridges on one side");
    add_common(ford_report, rep_side_c);
    ford_report->add_option("--side", side, "sphere word, optional ^k");
    ford_report->callback([&] {
        const RunConfig c = rep_side_c.resolve();
        const PartialDomain d = make_domain(c);
        const SideReport r = side_report(d, find_sphere(d, side));
        print_json(side_json(d, r));
        for (const auto& e : r.entries)
            if (e.ridge.tangency) code = kTangency;
    });

    // boundary
    Common bd_c;
    std::string bd_svg, bd_obj;
    auto* bd = app.add_subcommand("boundary", "ideal boundary complex and its quotient");
    add_common(bd, bd_c);
    bd->add_option("--svg", bd_svg, "write the strip as SVG");
    bd->add_option("--obj", bd_obj, "write the boundary edges as OBJ polylines");
    bd->callback([&] {
        const RunConfig c = bd_c.resolve();
        const auto b = build_all(c);
        const StripSearch ss = search_strips(b->bc, b->q, b->q.class_sizes(), c.strip_restarts, c.seed);
        Json j = with_table(boundary_json(b->bc, b->q, ss.minimal), "3");
        j["cycles"] = cycles_json(b->d, b->cycles);
        print_json(j);
        if (!bd_svg.empty()) write_text(bd_svg, svg_strip(b->bc, b->q, ss.minimal));
        if (!bd_obj.empty()) write_text(bd_obj, obj_boundary(b->bc));
        if (b->bc.euler() != 0) code = kAssertion;
    });

    // spine
    Common sp_c;
    std::string sp_format = "json";
    auto* sp = app.add_subcommand("spine", "2-spine of the manifold at infinity");
    add_common(sp, sp_c);
    sp->add_option("--format", sp_format)->check(CLI::IsMember({"json", "text"}));
    sp->callback([&] {
        const RunConfig c = sp_c.resolve();
        const auto b = build_all(c);
        const SpineComplex s = build_spine(b->bc, b->q);
        if (sp_format == "json")
            print_json(spine_json(s));
        else
            std::cout << format_presentation(s.presentation());
        if (!s.disks_closed()) code = kAssertion;
    });

    // group
    auto* grp = app.add_subcommand("group", "presentations: files in the ngens + relators format, or m038, s090");
    grp->require_subcommand(1);
    std::string g_in, g_in2;
    int g_index = 6;
    auto* g_simplify = grp->add_subcommand("simplify", "Tietze simplification");
    g_simplify->add_option("input", g_in)->required();
    g_simplify->callback([&] { std::cout << format_presentation(tietze_simplify(load_group(g_in))); });
    auto* g_abel = grp->add_subcommand("abel", "abelianization");
    g_abel->add_option("input", g_in)->required();
    g_abel->callback([&] { std::cout << abelianization(load_group(g_in)).to_string() << "\n"; });
    auto* g_low = grp->add_subcommand("low-index", "conjugacy classes of subgroups by index");
    g_low->add_option("input", g_in)->required();
    g_low->add_option("--index", g_index)->check(CLI::Range(1, 12));
    g_low->callback([&] { print_json(profile_json(low_index_profile(load_group(g_in), g_index))); });
    auto* g_match = grp->add_subcommand("match", "graded isomorphism verdict");
    g_match->add_option("first", g_in)->required();
    g_match->add_option("second", g_in2)->required();
    g_match->add_option("--index", g_index)->check(CLI::Range(1, 12));
    g_match->callback([&] {
        const MatchVerdict v = match_presentations(load_group(g_in), load_group(g_in2), {g_index});
        print_json(verdict_json(v));
    });

    // viz
    auto* viz = app.add_subcommand("viz", "figures");
    viz->require_subcommand(1);
    Common vz_c;
    std::string vz_out;
    ObjOptions obj_opt;
    auto* viz_svg = viz->add_subcommand("svg", "strip of the ideal boundary");
    add_common(viz_svg, vz_c);
    viz_svg->add_option("--out", vz_out)->required();
    viz_svg->callback([&] {
        const RunConfig c = vz_c.resolve();
        const auto b = build_all(c);
        const StripSearch ss = search_strips(b->bc, b->q, b->q.class_sizes(), c.strip_restarts, c.seed);
        write_text(vz_out, svg_strip(b->bc, b->q, ss.minimal));
    });
    auto* viz_obj = viz->add_subcommand("obj", "isometric sphere meshes");
    add_common(viz_obj, vz_c);
    viz_obj->add_option("--out", vz_out)->required();
    viz_obj->add_option("--kmin", obj_opt.kmin);
    viz_obj->add_option("--kmax", obj_opt.kmax);
    viz_obj->add_option("--resolution", obj_opt.resolution)->check(CLI::Range(2, 1024));
    viz_obj->callback([&] {
        const RunConfig c = vz_c.resolve();
        PartialDomain d = make_domain(c);
        write_text(vz_out, obj_spheres(d, obj_opt));
    });

    // pipeline
    Common pl_c;
    std::string pl_out;
    auto* pl = app.add_subcommand("pipeline", "all stages through the census match");
    add_common(pl, pl_c);
    pl->add_option("--out-dir", pl_out, "directory for report.json, strip.svg, spheres.obj, presentation.txt");
    pl->callback([&] {
        RunConfig c = pl_c.resolve();
        if (!pl_out.empty()) c.out_dir = pl_out;
        const PipelineResult r = run_pipeline(c);
        for (const auto& [what, pass] : r.checks) std::cout << (pass ? "PASS " : "FAIL ") << what << "\n";
        if (c.out_dir.empty()) print_json(r.report);
        if (r.tangency)
            code = kTangency;
        else if (!r.ok())
            code = kAssertion;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::Tangency ? kTangency : kAssertion;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kAssertion;
    }
    return code;
}
