// The ideal boundary of the Ford domain as a 2-complex on the spheres, modulo A,
// with the side pairings acting on its cells.
#pragma once

#include "chyp/ford.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chyp {

// Heisenberg points as (x, y, t).
using Heis3 = Eigen::Vector3d;

Heis3 to_heis3(const HeisPoint& p);
HeisPoint from_heis3(const Heis3& p);
// A^m applied to p.
Heis3 a_translate(const Heis3& p, int m);
// |w|^4 + s^2 - r^4 for p = c * (w, s); negative inside the sphere.
double spinal_value(const IsometricSphere& s, const Heis3& p);
Heis3 spinal_gradient(const IsometricSphere& s, const Heis3& p);

struct BoundaryEdge {
    int s1 = -1, s2 = -1;        // domain spheres, s1 with k = 0
    int cut_a = -1, cut_b = -1;  // spheres ending the edge at a and at b
    std::vector<Heis3> points;   // from a to b
    int va = -1, vb = -1;        // vertex ids
    int ma = 0, mb = 0;          // a = A^ma vertices[va], b = A^mb vertices[vb]
    Heis3 a() const { return points.front(); }
    Heis3 b() const { return points.back(); }
    Heis3 mid() const { return points[points.size() / 2]; }
};

// An edge translated by A^shift, traversed forward (a to b) or backward.
struct FaceSide {
    int edge = -1;
    int shift = 0;
    bool forward = true;
    int nb_family = -1, nb_k = 0;  // neighbour sphere relative to the face
    friend bool operator==(const FaceSide&, const FaceSide&) = default;
};

struct BoundaryFace {
    int family = -1;
    int piece = 0;  // index among the faces of the same family
    std::vector<FaceSide> sides;
};

struct BoundaryOptions {
    int seed_rows = 48, seed_cols = 96;
    double step = 0.004;  // times the smaller radius
    double vertex_tol = 1e-4;
};

struct BoundaryComplex {
    const PartialDomain* domain = nullptr;
    std::vector<Heis3> vertices;  // canonical representatives, x in [-1, 1)
    std::vector<BoundaryEdge> edges;
    std::vector<BoundaryFace> faces;
    int euler() const {
        return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) + static_cast<int>(faces.size());
    }
    // Neighbour words of a face, as "w^k" labels, in traversal order.
    std::vector<std::string> neighbour_labels(int face) const;
};

BoundaryComplex ideal_boundary(const PartialDomain& d, const BoundaryOptions& opt = {});

// Image of edge e translated by A^shift under the pairing of one of its spheres.
struct EdgeImage {
    int edge = -1;
    int shift = 0;
    bool forward = true;  // the image of a is the translate of a
};
// Sphere (family, k) of I(G^{-1}) when G is the element of I_family^k.
std::pair<int, int> inverse_sphere(const PartialDomain& d, int family, int k);
EdgeImage map_edge(const BoundaryComplex& bc, int edge, int shift, int family, int k);
// Edge and shift whose translate passes through p.
std::optional<std::pair<int, int>> find_edge(const BoundaryComplex& bc, const Heis3& p, double tol = 1e-6);

struct CycleStep {
    int edge = -1;
    int shift = 0;
    int family = -1, k = 0;  // pairing applied
};
struct RidgeCycle {
    std::vector<CycleStep> steps;
    int a_power = 0;  // T = A^{-a_power} G_n ... G_1 fixes the first edge
    Mat3c transformation;
    std::string word;
    int order = 0;
    double deviation = 0;  // of T^order from the identity
    std::string relation;  // normal form of the word of T^order
    std::vector<int> edges() const;
};

std::vector<RidgeCycle> ridge_cycles(const BoundaryComplex& bc, int max_steps = 64, double tol = 1e-9);

// Relation classes of the cycles under each choice of pairing words on the
// translates named by two words, looking for one that gives the target classes.
struct NamingSearch {
    std::vector<std::string> default_classes;  // sorted
    std::vector<std::pair<int, int>> ambiguous;  // (family, k) with two names
    int tried = 0;
    std::optional<std::map<std::pair<int, int>, std::string>> naming;
    std::vector<std::string> classes;  // under naming, sorted
};
NamingSearch search_pairing_names(const BoundaryComplex& bc, const std::vector<RidgeCycle>& cycles,
                                  const std::vector<std::string>& target);

// Pairing of faces F and G(F), G the element of the sphere carrying F.
struct FacePairing {
    int face = -1, image = -1;
    int family = -1;
};
std::vector<FacePairing> face_pairings(const BoundaryComplex& bc);

struct QuotientComplex {
    std::vector<int> edge_class;    // per edge
    std::vector<int> edge_sign;     // +1 when the edge runs along its class orientation
    std::vector<int> vertex_class;  // per vertex
    int n_edge_classes = 0, n_vertex_classes = 0;
    std::vector<std::pair<int, int>> class_ends;  // tail, head vertex classes
    // Disks F, G(F) with boundaries in signed class ids (+c+1 / -(c+1)).
    std::vector<std::pair<int, int>> disks;
    std::vector<std::vector<int>> disk_words;
    std::vector<int> class_sizes() const;
};

QuotientComplex quotient_complex(const BoundaryComplex& bc, const std::vector<RidgeCycle>& cycles);

// A strip: one A-translate of every face, A^offset F. Edges shared by two faces of
// the strip are drawn once, the others once per face.
struct Strip {
    std::vector<int> offsets;
    int drawn_edges = 0;
    int boundary_edges = 0;
    std::vector<int> sizes;  // drawn edges per class
    bool connected = false;
};
Strip evaluate_strip(const BoundaryComplex& bc, const QuotientComplex& q, const std::vector<int>& offsets);
// Strip grown breadth-first from face 0 through shared edges.
Strip breadth_first_strip(const BoundaryComplex& bc, const QuotientComplex& q);

struct StripSearch {
    Strip minimal;                    // fewest drawn edges found
    std::optional<Strip> realizing;   // connected strip with the target class sizes
};
// Descent over connected strips from randomized breadth-first seeds.
StripSearch search_strips(const BoundaryComplex& bc, const QuotientComplex& q, std::vector<int> target_sizes,
                          int restarts = 3000, unsigned seed = 1);

struct ParabolicReport {
    struct Entry {
        std::string what;
        std::string classification;
        bool boundary_parabolic = false;
    };
    std::vector<Entry> entries;
    bool clean() const;
};
ParabolicReport check_no_boundary_parabolics(const BoundaryComplex& bc, const std::vector<RidgeCycle>& cycles);

// Rows of an adjacency table: a sphere word and its neighbour words in cyclic order.
struct AdjacencyRow {
    std::string face;
    std::vector<std::string> neighbours;
};
struct AdjacencyMatch {
    std::vector<int> face_of_row;  // -1 when no face matches
    bool all_rows = false;
    bool all_faces = false;
};
AdjacencyMatch match_adjacency(const BoundaryComplex& bc, const std::vector<AdjacencyRow>& rows);

}  // namespace chyp
