// The 2-spine of the manifold at infinity: quotient graph, spanning tree, loops
// and attached disks, and the presentation it carries.
#pragma once

#include "chyp/fpgroup.hpp"
#include "chyp/ideal_boundary.hpp"

#include <string>
#include <utility>
#include <vector>

namespace chyp {

// Edge words are signed 1-based edge classes: +e along the class orientation.
struct SpineComplex {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> ends;  // tail, head per edge class
    int base = 0;
    std::vector<int> tree;        // edge classes of the spanning tree
    std::vector<int> generators;  // non-tree edge classes, generator i is generators[i-1]
    std::vector<Word> loops;      // closed edge paths at base, one per generator
    std::vector<std::string> disk_names;
    std::vector<Word> disks;
    std::vector<Word> relators;  // disks read in generator letters

    int n_edges() const { return static_cast<int>(ends.size()); }
    int rank() const { return n_edges() - n_vertices + 1; }
    int euler() const { return n_vertices - n_edges() + static_cast<int>(disks.size()); }
    Presentation presentation() const { return {static_cast<int>(generators.size()), relators}; }
    // Every disk boundary is a closed path in the graph.
    bool disks_closed() const;
};

// Spanning tree grown breadth-first from vertex class 0, lowest edge class first.
SpineComplex build_spine(const BoundaryComplex& bc, const QuotientComplex& q);
// The same graph and disks with a prescribed tree.
SpineComplex build_spine(const QuotientComplex& q, std::vector<std::string> disk_names, const std::vector<int>& tree,
                         int base);

// A cell structure written down by hand: edge ends, disk boundaries, the loops
// phi_i as edge paths and the disk relations in phi letters.
struct SpineTable {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> ends;  // 0-based tail, head
    std::vector<std::string> disk_names;
    std::vector<Word> disks;
    std::vector<Word> loops;
    std::vector<Word> relations;
};

// Edge class of each loop occurring once over all loops, signed by that occurrence.
std::vector<int> designated_edges(const SpineTable& t);
// Disks of the table read through the designated edges.
std::vector<Word> table_relations(const SpineTable& t);

struct SpineMatch {
    bool graph = false;               // vertex and signed edge bijection preserving ends
    bool disks = false;               // disk boundaries correspond as cyclic words
    std::vector<int> vertex_map;      // table vertex -> our vertex class
    std::vector<int> edge_map;        // table edge i -> signed our class
    int table_distinct_disks = 0;
    std::vector<Word> relators;       // our disks read through the table tree and loops
    bool relations = false;           // relators agree with the table relations as cyclic words
    std::vector<std::string> notes;
};
SpineMatch match_spine(const SpineComplex& s, const SpineTable& t);

}  // namespace chyp
