// Partial Ford domains D_S and the ridges on their sides.
#pragma once

#include "chyp/bisectors.hpp"
#include "chyp/reps.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chyp {

struct DomainSphere {
    IsometricSphere sphere;
    int family = 0;
    int k = 0;
};

struct PartialDomain {
    int n = 0;
    RepresentationBundle bundle;
    WordSet words;
    int kmin = -6, kmax = 6;
    std::vector<std::string> families;
    // word -> (family, offset) with I(word) = I_family^offset
    std::map<std::string, std::pair<int, int>> aliases;
    std::vector<DomainSphere> spheres;

    int index(int family, int k) const;  // -1 when outside the window
    std::string label(int family, int k) const;
    std::string label(int sphere) const { return label(spheres[sphere].family, spheres[sphere].k); }
    // Words of the set naming I_family^k, e.g. {"BaB^1"} next to "bAb^0".
    std::vector<std::string> names(int family, int k) const;
    std::optional<std::pair<int, int>> locate(const IsometricSphere& s) const;
    std::optional<std::pair<int, int>> locate(const std::string& word, int k) const;
    // Side-pairing element A^k W_f a^k of I_f^k.
    Mat3c element(int family, int k) const;
    // Side pairing of I_family^k: A^j w a^j for the least word w of the set naming
    // a translate of the sphere (BaB before bAb), unless pairing_names picks w.
    GroupElement pairing(int family, int k) const;
    std::map<std::pair<int, int>, std::string> pairing_names;
};

PartialDomain build_partial_domain(const RepresentationBundle& b, const WordSet& words, int kmin = -6, int kmax = 6);
// Largest |k| for which some translate of a family still meets the k = 0 spheres.
int translate_reach(const PartialDomain& d);

struct ArcLabel {
    bool at_infinity = false;
    int family = -1;
    int k = 0;
    friend bool operator==(const ArcLabel&, const ArcLabel&) = default;
};

struct RidgeArc {
    ArcLabel label;
    std::vector<TorusPoint> points;
};

// One boundary cycle of a ridge region.
struct RidgeBoundary {
    std::vector<RidgeArc> arcs;
    std::vector<ArcLabel> sides;  // arcs merged by label
    int component = 0;
    bool infinite() const;
};

struct RidgeRegion {
    int s1 = -1, s2 = -1;
    GiraudChart chart;
    // Norm form first, then every sphere form that cuts the disk.
    std::vector<TorusForm> constraints;
    std::vector<ArcLabel> constraint_labels;
    std::vector<RidgeBoundary> boundaries;
    bool tangency = false;
    bool empty() const { return boundaries.empty(); }
    bool infinite() const;
    int components() const;
    // "empty", "triangle+inf", "pentagon+inf&quadrangle", "dodecagon"; components joined by " ; "
    std::string type() const;
};

RidgeRegion compute_ridge(const PartialDomain& d, int s1, int s2);

// Position of a sphere relative to a computed ridge region.
DiskTest region_inside_sphere(const PartialDomain& d, const RidgeRegion& r, const IsometricSphere& s);

struct SideEntry {
    int other = -1;
    RidgeRegion ridge;
};
struct SideReport {
    int sphere = -1;
    std::vector<SideEntry> entries;  // every sphere whose bisector meets this one
    int infinite_count() const;
    std::map<std::string, int> type_counts() const;
};
SideReport side_report(const PartialDomain& d, int sphere);

// Both halves of the x-axis segment lie inside S_{b^1} and S_B.
struct AxisCheck {
    bool pass = false;
    double margin_left = 0, margin_right = 0;
};
AxisCheck x_axis_check(const PartialDomain& d, int samples = 1000);

std::string polygon_name(int sides);

}  // namespace chyp
