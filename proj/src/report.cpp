#include "chyp/report.hpp"

#include "chyp/errors.hpp"
#include "chyp/words.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace chyp {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int to_int(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    int out = 0;
    try {
        out = std::stoi(v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != v.size()) throw Error(ErrorCode::Parse, key + ": not an integer: " + v);
    return out;
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double out = 0;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != v.size()) throw Error(ErrorCode::Parse, key + ": not a number: " + v);
    return out;
}

Json cx_json(const Cx& z) { return Json::array({z.real(), z.imag()}); }

Json heis_json(const HeisPoint& p) { return {{"x", p.z.real()}, {"y", p.z.imag()}, {"t", p.t}}; }

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p);
    if (!f) throw Error(ErrorCode::Io, "cannot write " + p.string());
    f << text;
}

}  // namespace

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
    if (key == "n")
        c.n = to_int(key, value);
    else if (key == "tolerance")
        c.tolerance = to_double(key, value);
    else if (key == "kmin")
        c.kmin = to_int(key, value);
    else if (key == "kmax")
        c.kmax = to_int(key, value);
    else if (key == "profile_index")
        c.profile_index = to_int(key, value);
    else if (key == "strip_restarts")
        c.strip_restarts = to_int(key, value);
    else if (key == "seed")
        c.seed = static_cast<unsigned>(to_int(key, value));
    else if (key == "out_dir")
        c.out_dir = value;
    else
        throw Error(ErrorCode::Parse, "unknown key: " + key);
    if (c.n != 4 && c.n != 6) throw Error(ErrorCode::UnsupportedN, "n = " + std::to_string(c.n));
    if (!(c.tolerance > 0)) throw Error(ErrorCode::Parse, "tolerance must be positive");
    if (c.kmin > 0 || c.kmax < 0) throw Error(ErrorCode::Parse, "window must contain k = 0");
}

RunConfig parse_config(std::string_view text, RunConfig base) {
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::Parse, "line " + std::to_string(number) + ": expected key = value");
        apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::Io, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

Json to_json(const Mat3c& M) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) row.push_back(cx_json(M(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json exact_json(const Mat3q& M) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) row.push_back(to_string(M(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json rep_json(const RepresentationBundle& b, double tol) {
    Json j;
    j["n"] = b.n;
    const std::vector<std::pair<const char*, const GroupElement*>> gens = {
        {"I1", &b.I1}, {"I2", &b.I2}, {"I3", &b.I3}, {"A", &b.A}, {"B", &b.B}};
    Json g = Json::object();
    for (const auto& [name, e] : gens) {
        Json x;
        x["word"] = e->word;
        x["matrix"] = to_json(e->matrix);
        x["su21_residual"] = su21_residual(e->matrix);
        x["class"] = to_string(classify_isometry(e->matrix, 1e-9));
        g[name] = x;
    }
    if (b.exact) {
        const std::vector<std::pair<const char*, const Mat3q*>> ex = {{"I1", &b.exact->I1}, {"I2", &b.exact->I2},
                                                                      {"I3", &b.exact->I3}, {"A", &b.exact->A},
                                                                      {"B", &b.exact->B}};
        for (const auto& [name, M] : ex) g[name]["exact"] = exact_json(*M);
    }
    j["generators"] = g;
    const auto rel = verify_relations(b, tol);
    Json rs = Json::array();
    for (const auto& c : rel.checks) {
        Json r{{"name", c.name}, {"order", c.order}, {"deviation", c.deviation},
               {"min_proper_deviation", c.min_proper_deviation}, {"pass", c.pass}};
        if (c.exact_identity) r["exact_identity"] = *c.exact_identity;
        rs.push_back(r);
    }
    j["relations"] = rs;
    j["relations_pass"] = rel.all_pass();
    return j;
}

Json sphere_json(const PartialDomain& d, int i) {
    const DomainSphere& ds = d.spheres[static_cast<std::size_t>(i)];
    Json j;
    j["label"] = d.label(i);
    j["family"] = d.families[static_cast<std::size_t>(ds.family)];
    j["k"] = ds.k;
    j["names"] = d.names(ds.family, ds.k);
    j["center"] = heis_json(ds.sphere.center);
    j["radius"] = ds.sphere.radius;
    if (d.bundle.exact) {
        const auto M = eval_word_exact(d.bundle, conjugate_by_A(d.families[static_cast<std::size_t>(ds.family)], ds.k));
        const ExactSphere e = exact_isometric_sphere(M);
        j["exact"] = {{"x", to_string(e.center.z.real())},
                      {"y", to_string(e.center.z.imag())},
                      {"t", to_string(e.center.t)},
                      {"r4", to_string(e.radius4)}};
    }
    return j;
}

Json spheres_json(const PartialDomain& d) {
    Json j;
    j["n"] = d.n;
    j["words"] = d.words.words;
    j["families"] = d.families;
    Json al = Json::object();
    for (const auto& [w, fk] : d.aliases) al[w] = d.label(fk.first, fk.second);
    j["aliases"] = al;
    j["kmin"] = d.kmin;
    j["kmax"] = d.kmax;
    Json ss = Json::array();
    for (int i = 0; i < static_cast<int>(d.spheres.size()); ++i) ss.push_back(sphere_json(d, i));
    j["spheres"] = ss;
    return j;
}

Json ridge_json(const PartialDomain& d, const RidgeRegion& r) {
    Json j;
    j["with"] = d.label(r.s1) + " & " + d.label(r.s2);
    j["type"] = r.type();
    j["infinite"] = r.infinite();
    j["tangency"] = r.tangency;
    Json bs = Json::array();
    for (const auto& b : r.boundaries) {
        Json sides = Json::array();
        for (const auto& l : b.sides) sides.push_back(l.at_infinity ? std::string("inf") : d.label(l.family, l.k));
        bs.push_back({{"component", b.component}, {"sides", sides}, {"infinite", b.infinite()}});
    }
    j["boundaries"] = bs;
    return j;
}

Json side_json(const PartialDomain& d, const SideReport& r) {
    Json j;
    j["sphere"] = d.label(r.sphere);
    Json es = Json::array();
    for (const auto& e : r.entries) {
        Json x = ridge_json(d, e.ridge);
        x["other"] = d.label(e.other);
        es.push_back(x);
    }
    j["ridges"] = es;
    j["infinite_ridges"] = r.infinite_count();
    Json tc = Json::object();
    for (const auto& [t, c] : r.type_counts()) tc[t] = c;
    j["type_counts"] = tc;
    return j;
}

Json domain_json(const PartialDomain& d) {
    Json j = spheres_json(d);
    j["translate_reach"] = translate_reach(d);
    Json sides = Json::array();
    for (int f = 0; f < static_cast<int>(d.families.size()); ++f) {
        const int i = d.index(f, 0);
        if (i >= 0) sides.push_back(side_json(d, side_report(d, i)));
    }
    j["sides"] = sides;
    const AxisCheck ax = x_axis_check(d);
    j["x_axis_check"] = {{"pass", ax.pass}, {"margin_left", ax.margin_left}, {"margin_right", ax.margin_right}};
    return j;
}

Json cycles_json(const PartialDomain& d, const std::vector<RidgeCycle>& cycles) {
    Json out = Json::array();
    for (const auto& c : cycles) {
        Json steps = Json::array();
        for (const auto& s : c.steps)
            steps.push_back({{"edge", s.edge}, {"shift", s.shift}, {"pairing", d.label(s.family, s.k)}});
        out.push_back({{"steps", steps},
                       {"a_power", c.a_power},
                       {"word", c.word},
                       {"order", c.order},
                       {"relation", c.relation},
                       {"deviation", c.deviation}});
    }
    return out;
}

Json boundary_json(const BoundaryComplex& bc, const QuotientComplex& q, const Strip& strip) {
    Json j;
    j["vertices"] = bc.vertices.size();
    j["edges"] = bc.edges.size();
    j["faces"] = bc.faces.size();
    j["euler"] = bc.euler();
    Json fs = Json::array();
    for (int f = 0; f < static_cast<int>(bc.faces.size()); ++f) {
        const auto& F = bc.faces[static_cast<std::size_t>(f)];
        fs.push_back({{"family", bc.domain ? bc.domain->families[static_cast<std::size_t>(F.family)] : ""},
                      {"piece", F.piece},
                      {"neighbours", bc.neighbour_labels(f)}});
    }
    j["face_list"] = fs;
    j["edge_classes"] = q.n_edge_classes;
    j["vertex_classes"] = q.n_vertex_classes;
    j["class_sizes"] = q.class_sizes();
    Json ends = Json::array();
    for (const auto& [t, h] : q.class_ends) ends.push_back({t, h});
    j["class_ends"] = ends;
    j["strip"] = {{"offsets", strip.offsets},
                  {"drawn_edges", strip.drawn_edges},
                  {"boundary_edges", strip.boundary_edges},
                  {"sizes", strip.sizes},
                  {"connected", strip.connected}};
    return j;
}

Json spine_json(const SpineComplex& s) {
    Json j;
    j["vertices"] = s.n_vertices;
    j["edges"] = s.n_edges();
    j["disks"] = s.disks.size();
    j["euler"] = s.euler();
    j["rank"] = s.rank();
    j["disks_closed"] = s.disks_closed();
    Json ends = Json::array();
    for (const auto& [t, h] : s.ends) ends.push_back({t, h});
    j["ends"] = ends;
    j["tree"] = s.tree;
    j["generators"] = s.generators;
    Json loops = Json::array();
    for (const auto& l : s.loops) loops.push_back(l);
    j["loops"] = loops;
    Json ds = Json::array();
    for (std::size_t i = 0; i < s.disks.size(); ++i)
        ds.push_back({{"name", i < s.disk_names.size() ? s.disk_names[i] : ""},
                      {"boundary", s.disks[i]},
                      {"relator", format_word(s.relators[i])}});
    j["disk_list"] = ds;
    j["presentation"] = presentation_json(s.presentation());
    return j;
}

Json presentation_json(const Presentation& p) {
    Json rs = Json::array();
    for (const auto& r : p.relators) rs.push_back(format_word(r));
    return {{"generators", p.ngens},
            {"relators", rs},
            {"total_length", p.total_length()},
            {"text", format_presentation(p)}};
}

Json abelianization_json(const Abelianization& a) {
    return {{"free_rank", a.free_rank}, {"torsion", a.torsion}, {"group", a.to_string()}};
}

Json profile_json(const LowIndexProfile& p) {
    Json es = Json::array();
    for (const auto& e : p.entries)
        es.push_back({{"index", e.index}, {"classes", e.classes}, {"abelianizations", e.abelianizations}});
    return {{"max_index", p.max_index}, {"entries", es}, {"text", p.to_string()}};
}

Json verdict_json(const MatchVerdict& v) {
    return {{"verdict", verdict_name(v)}, {"rank", verdict_rank(v)}, {"details", verdict_details(v)}};
}

Json with_table(Json j, const std::string& id) {
    j["table"] = id;
    return j;
}

std::string family_colour(const std::string& f) {
    if (f == "b" || f == "B") return "#3b6fd8";
    if (f == "bAB" || f == "baB") return "#d83b3b";
    if (f == "bAb" || f == "BaB") return "#3bab4f";
    if (f == "bab" || f == "BAB") return "#e8c830";
    if (f == "Bab" || f == "BAb") return "#222222";
    return "#9b59b6";
}

std::string svg_strip(const BoundaryComplex& bc, const QuotientComplex& q, const Strip& strip, const SvgOptions& opt) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(opt.width) << "\" height=\""
       << fmt(opt.height) << "\" viewBox=\"0 0 " << fmt(opt.width) << " " << fmt(opt.height) << "\">\n";
    if (bc.faces.empty() || strip.offsets.size() != bc.faces.size()) {
        os << "</svg>\n";
        return os.str();
    }
    // Coordinates (x, y, s) with s = t + 2xy, in which A is the translation x -> x - 2.
    double y0 = 0, s0 = 0;
    for (const auto& v : bc.vertices) {
        y0 += v(1);
        s0 += v(2) + 2 * v(0) * v(1);
    }
    y0 /= static_cast<double>(bc.vertices.size());
    s0 /= static_cast<double>(bc.vertices.size());
    double vy = 0, vs = 0;
    for (const auto& v : bc.vertices) {
        vy += (v(1) - y0) * (v(1) - y0);
        const double s = v(2) + 2 * v(0) * v(1) - s0;
        vs += s * s;
    }
    const double aspect = vy > 0 && vs > 0 ? std::sqrt(vs / vy) : 1.0;
    auto unrolled = [&](const Heis3& p) {
        const double s = p(2) + 2 * p(0) * p(1) - s0;
        return Eigen::Vector2d(p(0), std::atan2(s / aspect, p(1) - y0));
    };
    struct Poly {
        std::vector<Eigen::Vector2d> pts;
        std::string colour, name;
    };
    std::vector<Poly> polys;
    struct Label {
        Eigen::Vector2d at;
        int cls;
    };
    std::vector<Label> labels;
    const double two_pi = 2 * std::numbers::pi;
    for (std::size_t f = 0; f < bc.faces.size(); ++f) {
        const auto& F = bc.faces[f];
        Poly poly;
        const std::string fam = bc.domain->families[static_cast<std::size_t>(F.family)];
        poly.colour = family_colour(fam);
        poly.name = fam + "_" + std::to_string(F.piece + 1);
        for (const auto& side : F.sides) {
            const auto& e = bc.edges[static_cast<std::size_t>(side.edge)];
            const int m = side.shift + strip.offsets[f];
            std::vector<Eigen::Vector2d> pts;
            for (const auto& p : e.points) pts.push_back(unrolled(a_translate(p, m)));
            if (!side.forward) std::reverse(pts.begin(), pts.end());
            std::vector<Eigen::Vector2d> thin;
            const std::size_t stride = std::max<std::size_t>(1, pts.size() / 24);
            for (std::size_t i = 0; i + 1 < pts.size(); i += stride) thin.push_back(pts[i]);
            poly.pts.insert(poly.pts.end(), thin.begin(), thin.end());
            labels.push_back({unrolled(a_translate(e.mid(), m)), q.edge_class[static_cast<std::size_t>(side.edge)]});
        }
        for (std::size_t i = 1; i < poly.pts.size(); ++i) {
            double& th = poly.pts[i](1);
            const double prev = poly.pts[i - 1](1);
            while (th - prev > std::numbers::pi) th -= two_pi;
            while (th - prev < -std::numbers::pi) th += two_pi;
        }
        polys.push_back(std::move(poly));
    }
    double xmin = 1e300, xmax = -1e300, tmin = 1e300, tmax = -1e300;
    for (const auto& p : polys)
        for (const auto& v : p.pts) {
            xmin = std::min(xmin, v(0));
            xmax = std::max(xmax, v(0));
            tmin = std::min(tmin, v(1));
            tmax = std::max(tmax, v(1));
        }
    const double margin = 20;
    const double sx = (opt.width - 2 * margin) / std::max(xmax - xmin, 1e-9);
    const double sy = (opt.height - 2 * margin) / std::max(tmax - tmin, 1e-9);
    auto X = [&](double x) { return margin + (x - xmin) * sx; };
    auto Y = [&](double t) { return opt.height - margin - (t - tmin) * sy; };
    for (const auto& p : polys) {
        os << "<polygon data-face=\"" << xml_escape(p.name) << "\" fill=\"" << p.colour
           << "\" fill-opacity=\"0.55\" stroke=\"#000\" stroke-width=\"0.8\" points=\"";
        for (const auto& v : p.pts) os << fmt(X(v(0))) << "," << fmt(Y(v(1))) << " ";
        os << "\"/>\n";
    }
    if (opt.labels)
        for (const auto& l : labels) {
            double th = l.at(1);
            while (th < tmin) th += two_pi;
            while (th > tmax) th -= two_pi;
            os << "<text x=\"" << fmt(X(l.at(0))) << "\" y=\"" << fmt(Y(th))
               << "\" font-size=\"10\" text-anchor=\"middle\">E" << l.cls + 1 << "</text>\n";
        }
    os << "</svg>\n";
    return os.str();
}

std::vector<Heis3> sphere_mesh(const IsometricSphere& s, int resolution) {
    if (!(s.radius > 0)) throw Error(ErrorCode::NonPositiveRadius, "sphere " + s.word);
    if (resolution < 2) throw Error(ErrorCode::Parse, "mesh resolution below 2");
    std::vector<Heis3> out;
    out.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
    const double r2 = s.radius * s.radius;
    for (int i = 0; i < resolution; ++i) {
        const double alpha = -std::numbers::pi / 2 + std::numbers::pi * i / (resolution - 1);
        const double rho = s.radius * std::sqrt(std::max(0.0, std::cos(alpha)));
        const double sv = r2 * std::sin(alpha);
        for (int j = 0; j < resolution; ++j) {
            const double beta = 2 * std::numbers::pi * j / resolution;
            const HeisPoint local{std::polar(rho, beta), sv};
            out.push_back(to_heis3(heis_mul(s.center, local)));
        }
    }
    return out;
}

std::string obj_spheres(const PartialDomain& d, const ObjOptions& opt) {
    std::ostringstream os;
    os.precision(12);
    os << "# isometric spheres n = " << d.n << ", k in [" << opt.kmin << ", " << opt.kmax << "]\n";
    os << "# coordinates x y t*" << opt.t_scale << "\n";
    const int R = opt.resolution;
    long base = 1;
    for (int f = 0; f < static_cast<int>(d.families.size()); ++f)
        for (int k = opt.kmin; k <= opt.kmax; ++k) {
            const int i = d.index(f, k);
            const IsometricSphere s = i >= 0 ? d.spheres[static_cast<std::size_t>(i)].sphere
                                             : translate_sphere(d.spheres[static_cast<std::size_t>(d.index(f, 0))].sphere,
                                                                k, d.bundle.A.matrix);
            const auto pts = sphere_mesh(s, R);
            os << "g " << d.families[static_cast<std::size_t>(f)] << "_" << k << "\n";
            for (const auto& p : pts) os << "v " << p(0) << " " << p(1) << " " << p(2) * opt.t_scale << "\n";
            for (int a = 0; a + 1 < R; ++a)
                for (int b = 0; b < R; ++b) {
                    const long v00 = base + a * R + b, v01 = base + a * R + (b + 1) % R;
                    const long v10 = base + (a + 1) * R + b, v11 = base + (a + 1) * R + (b + 1) % R;
                    os << "f " << v00 << " " << v01 << " " << v11 << " " << v10 << "\n";
                }
            base += static_cast<long>(pts.size());
        }
    return os.str();
}

std::string obj_boundary(const BoundaryComplex& bc, const ObjOptions& opt) {
    std::ostringstream os;
    os.precision(12);
    os << "# ideal boundary edges, translates A^m for m in [" << opt.kmin << ", " << opt.kmax << "]\n";
    os << "# coordinates x y t*" << opt.t_scale << "\n";
    long base = 1;
    for (int m = opt.kmin; m <= opt.kmax; ++m)
        for (std::size_t e = 0; e < bc.edges.size(); ++e) {
            const auto& pts = bc.edges[e].points;
            os << "g edge" << e << "_" << m << "\n";
            for (const auto& p : pts) {
                const Heis3 q = a_translate(p, m);
                os << "v " << q(0) << " " << q(1) << " " << q(2) * opt.t_scale << "\n";
            }
            os << "l";
            for (std::size_t i = 0; i < pts.size(); ++i) os << " " << base + static_cast<long>(i);
            os << "\n";
            base += static_cast<long>(pts.size());
        }
    return os.str();
}

bool PipelineResult::ok() const {
    return !tangency && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::string census_name(int n) {
    if (n == 4) return "m038";
    if (n == 6) return "s090";
    throw Error(ErrorCode::UnsupportedN, "n = " + std::to_string(n));
}

PipelineResult run_pipeline(const RunConfig& c) {
    PipelineResult res;
    Json& out = res.report;
    out["n"] = c.n;
    const RepresentationBundle b = generators(c.n);
    out["representation"] = rep_json(b, c.tolerance);
    res.checks.emplace_back("relations", out["representation"]["relations_pass"].get<bool>());

    const PartialDomain d = build_partial_domain(b, standard_word_set(c.n), c.kmin, c.kmax);
    out["spheres"] = spheres_json(d);
    const int iB = d.index(d.locate("B", 0)->first, 0);
    const SideReport side = side_report(d, iB);
    out["side_B"] = side_json(d, side);
    for (const auto& e : side.entries) res.tangency = res.tangency || e.ridge.tangency;
    const AxisCheck ax = x_axis_check(d);
    out["x_axis_check"] = {{"pass", ax.pass}, {"margin_left", ax.margin_left}, {"margin_right", ax.margin_right}};
    res.checks.emplace_back("x-axis", ax.pass);

    const BoundaryComplex bc = ideal_boundary(d);
    const auto cycles = ridge_cycles(bc, 64, c.tolerance);
    out["cycles"] = cycles_json(d, cycles);
    res.checks.emplace_back("cycles are the identity", std::all_of(cycles.begin(), cycles.end(), [&](const auto& r) {
                                return r.deviation < c.tolerance;
                            }));
    const QuotientComplex q = quotient_complex(bc, cycles);
    const StripSearch ss = search_strips(bc, q, q.class_sizes(), c.strip_restarts, c.seed);
    const Strip& strip = ss.minimal;
    out["boundary"] = boundary_json(bc, q, strip);
    res.checks.emplace_back("boundary is a torus", bc.euler() == 0);
    const ParabolicReport pr = check_no_boundary_parabolics(bc, cycles);
    Json pe = Json::array();
    for (const auto& e : pr.entries)
        pe.push_back({{"what", e.what}, {"class", e.classification}, {"boundary_parabolic", e.boundary_parabolic}});
    out["parabolics"] = {{"clean", pr.clean()}, {"entries", pe}};
    res.checks.emplace_back("no boundary parabolics", pr.clean());

    const SpineComplex sp = build_spine(bc, q);
    out["spine"] = spine_json(sp);
    res.checks.emplace_back("spine disks closed", sp.disks_closed());
    const Presentation p = sp.presentation();
    const Presentation simple = tietze_simplify(p);
    out["simplified"] = presentation_json(simple);
    const Abelianization ab = abelianization(simple);
    out["abelianization"] = abelianization_json(ab);
    res.checks.emplace_back("H1 = Z", ab.to_string() == "Z");

    const std::string name = census_name(c.n);
    const Presentation census = census_group(name);
    const LowIndexProfile ours = low_index_profile(simple, c.profile_index);
    const LowIndexProfile theirs = low_index_profile(census, c.profile_index);
    const MatchVerdict v = match_presentations(simple, census, {c.profile_index});
    out["match"] = {{"census", name},
                    {"verdict", verdict_json(v)},
                    {"profile", profile_json(ours)},
                    {"census_profile", profile_json(theirs)},
                    {"first_difference", first_difference(ours, theirs)}};
    res.checks.emplace_back("census match", verdict_rank(v) >= 1);

    Json checks = Json::array();
    for (const auto& [what, pass] : res.checks) checks.push_back({{"check", what}, {"pass", pass}});
    out["checks"] = checks;
    out["tangency"] = res.tangency;

    if (!c.out_dir.empty()) {
        const std::filesystem::path dir(c.out_dir);
        std::filesystem::create_directories(dir);
        write_file(dir / "report.json", out.dump(2) + "\n");
        write_file(dir / "strip.svg", svg_strip(bc, q, strip));
        write_file(dir / "spheres.obj", obj_spheres(d));
        write_file(dir / "presentation.txt", format_presentation(simple));
    }
    return res;
}

}  // namespace chyp
