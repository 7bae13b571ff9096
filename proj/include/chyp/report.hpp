// JSON reports, SVG and OBJ output, run configuration and the full pipeline.
#pragma once

#include "chyp/fpgroup.hpp"
#include "chyp/ideal_boundary.hpp"
#include "chyp/spine.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chyp {

using Json = nlohmann::ordered_json;

// key = value lines, '#' starts a comment.
struct RunConfig {
    int n = 4;
    double tolerance = 1e-9;
    int kmin = -6, kmax = 6;
    int profile_index = 6;
    int strip_restarts = 3000;
    unsigned seed = 1;
    std::string out_dir;  // empty: write no files
};
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});
// Applies one key = value pair; throws Parse on unknown keys or bad values.
void apply_setting(RunConfig& c, const std::string& key, const std::string& value);

Json to_json(const Mat3c& M);
Json exact_json(const Mat3q& M);
Json rep_json(const RepresentationBundle& b, double tol = 1e-9);
Json sphere_json(const PartialDomain& d, int sphere);
Json spheres_json(const PartialDomain& d);
Json ridge_json(const PartialDomain& d, const RidgeRegion& r);
Json side_json(const PartialDomain& d, const SideReport& r);
Json domain_json(const PartialDomain& d);
Json cycles_json(const PartialDomain& d, const std::vector<RidgeCycle>& cycles);
Json boundary_json(const BoundaryComplex& bc, const QuotientComplex& q, const Strip& strip);
Json spine_json(const SpineComplex& s);
Json presentation_json(const Presentation& p);
Json abelianization_json(const Abelianization& a);
Json profile_json(const LowIndexProfile& p);
Json verdict_json(const MatchVerdict& v);
// Adds "table": id, the number of the published table the report reproduces.
Json with_table(Json j, const std::string& id);

struct SvgOptions {
    double width = 1200, height = 600;
    bool labels = true;
};
// The strip drawn on the annulus unrolled along the A-direction. Faces are
// coloured by family, edges labelled by class.
std::string svg_strip(const BoundaryComplex& bc, const QuotientComplex& q, const Strip& strip,
                      const SvgOptions& opt = {});
std::string family_colour(const std::string& family);

struct ObjOptions {
    int kmin = -2, kmax = 2;
    int resolution = 64;
    double t_scale = 0.25;
};
// Points c * (w, s), |w|^4 + s^2 = r^4, on a resolution x resolution grid; rows are
// latitudes from s = -r^2 to s = r^2.
std::vector<Heis3> sphere_mesh(const IsometricSphere& s, int resolution);
// One group per family translate, named word_k.
std::string obj_spheres(const PartialDomain& d, const ObjOptions& opt = {});
// Edges of the ideal boundary as polylines, translates kmin..kmax.
std::string obj_boundary(const BoundaryComplex& bc, const ObjOptions& opt = {});

struct PipelineResult {
    Json report;
    std::vector<std::pair<std::string, bool>> checks;
    bool tangency = false;
    bool ok() const;
};
// Representation through census match; writes report.json, strip.svg and
// spheres.obj into out_dir when set.
PipelineResult run_pipeline(const RunConfig& c);

std::string census_name(int n);

}  // namespace chyp
