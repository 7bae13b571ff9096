// Tables transcribed from the published construction, used as oracles.
#pragma once

#include "chyp/ideal_boundary.hpp"
#include "chyp/spine.hpp"

#include <string>
#include <vector>

namespace fixtures {

using chyp::Word;

// Sphere centres (Re z, Im z, t) and fourth powers of radii, n = 4.
struct SphereRow {
    const char* word;
    long cx_num, cx_den, cy_num, cy_den, t_num, t_den;
    long r4_num, r4_den;
};
inline const std::vector<SphereRow> table1 = {
    {"b", 1, 1, -1, 1, 4, 1, 16, 1},    {"B", 1, 1, 1, 1, 0, 1, 16, 1},
    {"baB", 7, 5, 1, 5, 4, 1, 16, 5},   {"bAB", 3, 5, 1, 5, -4, 5, 16, 5},
    {"BAb", 3, 5, -1, 5, 24, 5, 16, 5}, {"Bab", 7, 5, -1, 5, 0, 1, 16, 5},
    {"bAb", 0, 1, 0, 1, 4, 1, 4, 1},    {"bab", 2, 1, 0, 1, 0, 1, 4, 1},
};

// Neighbours of each face in cyclic order, n = 4.
inline const std::vector<chyp::AdjacencyRow> adjacency4 = {
    {"bAb", {"b", "Aba", "AbaBa"}},
    {"bAb", {"B", "BAb", "ABa"}},
    {"BaB", {"B", "aBA", "aBAbA"}},
    {"BaB", {"b", "baB", "abA"}},
    {"bab", {"B", "Bab", "aBA"}},
    {"bab", {"b", "abA", "abABA"}},
    {"BAB", {"b", "bAB", "Aba"}},
    {"BAB", {"B", "ABa", "ABaba"}},
    {"Bab", {"b", "aBA", "bab", "B", "bAB"}},
    {"BAb", {"b", "ABa", "bAb", "B", "baB"}},
    {"bAB", {"B", "Aba", "Ababa", "b", "Bab"}},
    {"baB", {"B", "abA", "BaB", "b", "BAb"}},
    {"B", {"Aba", "bAB", "Bab", "bab", "aBA", "abAbA", "aBAbA", "abA", "baB", "BAb", "bAb", "ABa", "Ababa", "ABaba"}},
    {"b", {"bab", "abABA", "aBA", "Bab", "bAB", "BAB", "Aba", "bAb", "AbaBa", "ABa", "BAb", "baB", "abAbA", "abA"}},
};

// Cycle relations, one per infinite ridge cycle.
inline const std::vector<std::string> cycle_relations4 = {"(aB)^4", "(ab)^4", "B^3", "B^3", "b^3",
                                                           "b^3",    "id",     "(AB)^4", "id", "(aB)^4"};
inline const std::vector<std::string> cycle_relations6 = {"B^3", "id",  "(Ab)^6", "(Ab)^6", "id",  "B^3",
                                                           "B^3", "id",  "id",     "id",     "b^3", "id",
                                                           "id",  "id",  "B^3",    "B^3",    "id",  "id"};

// Edge classes as drawn: the label sets per class.
inline const std::vector<std::vector<int>> edge_labels4 = {
    {1, 23, 44, 33, 18}, {2, 29, 40, 27, 10}, {3, 13, 37, 20}, {4, 8, 15},          {5, 36, 21, 12},
    {6, 7, 16},          {9, 42, 35, 25, 22}, {11, 26, 41, 28, 39, 30}, {14, 38, 31, 17}, {19, 24, 34, 43, 32, 45},
};
// Labels glued pairwise in the drawing.
inline const std::vector<std::pair<int, int>> glued4 = {{35, 22}, {36, 21}, {37, 20}};
inline const std::vector<std::vector<int>> edge_labels6 = {
    {1, 62, 9, 32},     {2, 33, 8, 65},     {3, 34, 7, 69},     {4, 35, 6, 71},     {5, 36, 22, 37, 72},
    {10, 31, 23, 18, 44}, {11, 30, 24, 17, 58}, {12, 29, 50, 59}, {13, 28, 54, 14, 27}, {15, 26, 55, 52},
    {16, 25, 56, 48},   {19, 40, 64, 45},   {20, 39, 68, 42},   {21, 38, 70, 41},   {43, 60, 67},
    {46, 57, 53},       {47, 63, 51},       {49, 61, 66},
};

inline std::vector<int> class_sizes(const std::vector<std::vector<int>>& labels) {
    std::vector<int> out;
    for (const auto& l : labels) out.push_back(static_cast<int>(l.size()));
    return out;
}

// Spine of n = 4: vertex classes V1..V5, edge classes E1..E10 with E- at the tail.
inline chyp::SpineTable spine4() {
    chyp::SpineTable t;
    t.n_vertices = 5;
    t.ends = {{0, 1}, {3, 2}, {0, 4}, {4, 1}, {3, 4}, {4, 2}, {1, 3}, {2, 3}, {0, 2}, {0, 1}};
    t.disk_names = {"b", "BAB", "bAB", "Bab", "baB"};
    t.disks = {
        {10, -1, 10, 7, 5, -3, 9, 8, 2, 8, -7, -4, 6, -9},
        {-8, -6, -5},
        {5, 4, -1, 9, -2},
        {1, 7, 2, -6, -3},
        {4, -10, 3},
    };
    t.loops = {{4, 7, 5}, {-5, 2, -6}, {6, -9, 3}, {-3, 1, -4}, {6, 8, 5}, {4, -10, 3}};
    t.relations = {
        {3, -6, -4, -6, 1, -3, 5, 2, 5, -1},
        {5},
        {-4, -3, -2},
        {4, 1, 2},
        {6},
    };
    return t;
}

// Spine of n = 6: vertex classes V1..V9, edge classes E1..E18.
inline chyp::SpineTable spine6() {
    chyp::SpineTable t;
    t.n_vertices = 9;
    t.ends = {{1, 0}, {0, 2}, {2, 3}, {3, 4}, {4, 4}, {5, 1}, {7, 5}, {6, 7}, {6, 6},
              {8, 6}, {7, 8}, {2, 1}, {3, 2}, {4, 3}, {5, 0}, {8, 5}, {8, 1}, {7, 0}};
    t.disk_names = {"[B]20", "ABaBa", "bAbAb", "bAb", "BAb", "[b]5", "Aba", "Ababa", "BAB", "bAB"};
    t.disks = {
        {1, -15, -16, -11, -8, -9, -9, -10, -11, 7, 6, 1, 2, 3, 4, 5, 5, 14, 13, 12},
        {4, -5, 14},
        {3, -14, -4, 13},
        {2, -13, -3, 12, -6, 15},
        {6, -17, 16},
        {-12, -2, -18, 11, 17},
        {1, -18, -8, -10, 17},
        {17, -6, -16},
        {16, -7, -8, 9, -10},
        {18, -15, -7},
    };
    t.loops = {
        {1, 2, 12},
        {-12, 3, 13, 12},
        {-12, 3, 4, 14, -3, 12},
        {-12, 3, 4, 5, -4, -3, 12},
        {1, -15, 6},
        {1, -18, 7, 6},
        {-17, 16, 6},
        {-6, -7, 11, 17},
        {-6, -7, -8, -10, 17},
        {-6, -7, -8, 9, 8, 7, 6},
    };
    t.relations = {
        {5, -7, -8, -10, -10, 9, -8, 1, 4, 4, 3, 2},
        {-4, 3},
        {-3, 2},
        {1, -2, -5},
        {7},
        {-1, 6, 8},
        {6, 9},
        {-7},
        {7, 10, 9},
        {5, -6},
    };
    return t;
}

// Final simplified presentation for n = 4.
inline const char* final_relator4 = "X2,X1,x2,x2,X1,X2,x1,x2,x1,x2,x1";

}  // namespace fixtures
