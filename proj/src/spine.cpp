#include "chyp/spine.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace chyp {

namespace {

int tail_of(const std::vector<std::pair<int, int>>& ends, int letter) {
    const auto& [t, h] = ends[static_cast<std::size_t>(std::abs(letter) - 1)];
    return letter > 0 ? t : h;
}
int head_of(const std::vector<std::pair<int, int>>& ends, int letter) { return tail_of(ends, -letter); }

bool closed_path(const std::vector<std::pair<int, int>>& ends, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (head_of(ends, w[i]) != tail_of(ends, w[(i + 1) % w.size()])) return false;
    return true;
}

// Letters of the designated edges, as generator letters.
Word read_through(const Word& disk, const std::map<int, int>& letter_of_edge) {
    Word out;
    for (int x : disk) {
        const auto it = letter_of_edge.find(std::abs(x));
        if (it != letter_of_edge.end()) out.push_back(x > 0 ? it->second : -it->second);
    }
    return free_reduce(out);
}

std::multiset<Word> keys(const std::vector<Word>& ws) {
    std::multiset<Word> out;
    for (const auto& w : ws) out.insert(cyclic_key(w));
    return out;
}

}  // namespace

bool SpineComplex::disks_closed() const {
    return std::all_of(disks.begin(), disks.end(), [&](const Word& w) { return closed_path(ends, w); });
}

SpineComplex build_spine(const QuotientComplex& q, std::vector<std::string> disk_names, const std::vector<int>& tree,
                         int base) {
    SpineComplex s;
    s.n_vertices = q.n_vertex_classes;
    s.ends = q.class_ends;
    s.base = base;
    s.tree = tree;
    std::sort(s.tree.begin(), s.tree.end());
    s.disk_names = std::move(disk_names);
    s.disks = q.disk_words;
    // Tree path from base to each vertex.
    std::vector<Word> path(static_cast<std::size_t>(s.n_vertices));
    std::vector<bool> seen(static_cast<std::size_t>(s.n_vertices), false);
    seen[static_cast<std::size_t>(base)] = true;
    std::deque<int> queue{base};
    const std::set<int> in_tree(s.tree.begin(), s.tree.end());
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int c : s.tree)
            for (int letter : {c + 1, -(c + 1)}) {
                if (tail_of(s.ends, letter) != v) continue;
                const int w = head_of(s.ends, letter);
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = true;
                path[static_cast<std::size_t>(w)] = path[static_cast<std::size_t>(v)];
                path[static_cast<std::size_t>(w)].push_back(letter);
                queue.push_back(w);
            }
    }
    std::map<int, int> letter_of_edge;
    for (int c = 0; c < s.n_edges(); ++c) {
        if (in_tree.count(c)) continue;
        s.generators.push_back(c);
        letter_of_edge[c + 1] = static_cast<int>(s.generators.size());
        Word loop = path[static_cast<std::size_t>(s.ends[static_cast<std::size_t>(c)].first)];
        loop.push_back(c + 1);
        const Word back = inverse(path[static_cast<std::size_t>(s.ends[static_cast<std::size_t>(c)].second)]);
        loop.insert(loop.end(), back.begin(), back.end());
        s.loops.push_back(free_reduce(loop));
    }
    for (const auto& d : s.disks) s.relators.push_back(cyclic_reduce(read_through(d, letter_of_edge)));
    return s;
}

SpineComplex build_spine(const BoundaryComplex& bc, const QuotientComplex& q) {
    std::vector<int> tree;
    std::vector<bool> seen(static_cast<std::size_t>(q.n_vertex_classes), false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int c = 0; c < q.n_edge_classes; ++c) {
            const auto [t, h] = q.class_ends[static_cast<std::size_t>(c)];
            int w = -1;
            if (t == v) w = h;
            if (h == v) w = t;
            if (w < 0 || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            tree.push_back(c);
            queue.push_back(w);
        }
    }
    std::vector<std::string> names;
    const auto& fams = bc.domain->families;
    for (const auto& [f, g] : q.disks) {
        auto name = [&](int face) {
            const auto& F = bc.faces[static_cast<std::size_t>(face)];
            const bool split = std::count_if(bc.faces.begin(), bc.faces.end(),
                                             [&](const BoundaryFace& o) { return o.family == F.family; }) > 1;
            return fams[static_cast<std::size_t>(F.family)] + (split ? "_" + std::to_string(F.piece + 1) : "");
        };
        names.push_back(name(f) + "|" + name(g));
    }
    return build_spine(q, std::move(names), tree, 0);
}

std::vector<int> designated_edges(const SpineTable& t) {
    std::map<int, int> count;
    for (const auto& l : t.loops)
        for (int x : l) ++count[std::abs(x)];
    std::vector<int> out;
    for (const auto& l : t.loops) {
        int d = 0;
        for (int x : l)
            if (count[std::abs(x)] == 1) d = d ? d : x;
        out.push_back(d);
    }
    return out;
}

std::vector<Word> table_relations(const SpineTable& t) {
    std::map<int, int> letter;
    const auto d = designated_edges(t);
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i]) letter[std::abs(d[i])] = d[i] > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
    std::vector<Word> out;
    for (const auto& w : t.disks) out.push_back(cyclic_reduce(read_through(w, letter)));
    return out;
}

SpineMatch match_spine(const SpineComplex& s, const SpineTable& t) {
    SpineMatch m;
    const int E = static_cast<int>(t.ends.size());
    const std::set<Word> table_disks = [&] {
        std::set<Word> out;
        for (const auto& w : t.disks) out.insert(cyclic_key(w));
        return out;
    }();
    m.table_distinct_disks = static_cast<int>(table_disks.size());
    if (E != s.n_edges() || t.n_vertices != s.n_vertices) {
        m.notes.push_back("cell counts differ");
        return m;
    }
    const auto ours = keys(s.disks);
    std::vector<int> vmap(static_cast<std::size_t>(t.n_vertices), -1), vinv(static_cast<std::size_t>(s.n_vertices), -1);
    std::vector<int> emap(static_cast<std::size_t>(E), 0);
    std::vector<bool> used(static_cast<std::size_t>(E), false);
    // Edges taken so that each one after the first touches an earlier vertex.
    std::vector<int> order;
    {
        std::vector<bool> placed(static_cast<std::size_t>(E), false), vis(static_cast<std::size_t>(t.n_vertices), false);
        while (static_cast<int>(order.size()) < E) {
            int pick = -1;
            for (int e = 0; e < E && pick < 0; ++e)
                if (!placed[static_cast<std::size_t>(e)] &&
                    (order.empty() || vis[static_cast<std::size_t>(t.ends[e].first)] ||
                     vis[static_cast<std::size_t>(t.ends[e].second)]))
                    pick = e;
            if (pick < 0)
                for (int e = 0; e < E && pick < 0; ++e)
                    if (!placed[static_cast<std::size_t>(e)]) pick = e;
            placed[static_cast<std::size_t>(pick)] = true;
            vis[static_cast<std::size_t>(t.ends[pick].first)] = vis[static_cast<std::size_t>(t.ends[pick].second)] = true;
            order.push_back(pick);
        }
    }
    auto bind = [&](int tv, int ov, std::vector<std::pair<int, int>>& undo) {
        if (vmap[static_cast<std::size_t>(tv)] >= 0) return vmap[static_cast<std::size_t>(tv)] == ov;
        if (vinv[static_cast<std::size_t>(ov)] >= 0) return false;
        vmap[static_cast<std::size_t>(tv)] = ov;
        vinv[static_cast<std::size_t>(ov)] = tv;
        undo.emplace_back(tv, ov);
        return true;
    };
    auto disks_ok = [&] {
        std::multiset<Word> mapped;
        for (const auto& w : table_disks) {
            Word x;
            for (int l : w) {
                const int e = emap[static_cast<std::size_t>(std::abs(l) - 1)];
                x.push_back(l > 0 ? e : -e);
            }
            mapped.insert(cyclic_key(x));
        }
        return mapped == ours;
    };
    bool graph_found = false;
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == order.size()) {
            if (!graph_found) {
                graph_found = true;
                m.vertex_map = vmap;
                m.edge_map = emap;
            }
            return disks_ok();
        }
        const int e = order[i];
        const auto [tt, th] = t.ends[static_cast<std::size_t>(e)];
        for (int c = 0; c < E; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            for (int sign : {1, -1}) {
                const int ot = sign > 0 ? s.ends[c].first : s.ends[c].second;
                const int oh = sign > 0 ? s.ends[c].second : s.ends[c].first;
                if ((tt == th) != (ot == oh)) continue;
                std::vector<std::pair<int, int>> undo;
                if (bind(tt, ot, undo) && bind(th, oh, undo)) {
                    used[static_cast<std::size_t>(c)] = true;
                    emap[static_cast<std::size_t>(e)] = sign * (c + 1);
                    if (search(i + 1)) return true;
                    used[static_cast<std::size_t>(c)] = false;
                }
                for (const auto& [a, b] : undo) {
                    vmap[static_cast<std::size_t>(a)] = -1;
                    vinv[static_cast<std::size_t>(b)] = -1;
                }
            }
        }
        return false;
    };
    m.disks = search(0);
    m.graph = graph_found;
    if (m.disks) {
        m.vertex_map = vmap;
        m.edge_map = emap;
    }
    if (!m.graph) {
        m.notes.push_back("no end-preserving bijection of the graphs");
        return m;
    }
    if (!m.disks) m.notes.push_back("graphs agree but no bijection carries the disks");
    if (static_cast<int>(t.disks.size()) != m.table_distinct_disks)
        m.notes.push_back("table lists " + std::to_string(t.disks.size()) + " disks, " +
                          std::to_string(m.table_distinct_disks) + " distinct");
    // Our disks in table edge labels, read through the table loops.
    std::map<int, int> to_table;
    for (int e = 0; e < E; ++e) {
        const int o = m.edge_map[static_cast<std::size_t>(e)];
        to_table[std::abs(o)] = o > 0 ? e + 1 : -(e + 1);
    }
    std::map<int, int> letter;
    const auto d = designated_edges(t);
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i]) letter[std::abs(d[i])] = d[i] > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
    for (const auto& w : s.disks) {
        Word x;
        for (int l : w) {
            const int e = to_table[std::abs(l)];
            x.push_back(l > 0 ? e : -e);
        }
        m.relators.push_back(cyclic_reduce(read_through(x, letter)));
    }
    std::set<Word> table_set, our_set;
    for (const auto& r : t.relations) table_set.insert(cyclic_key(r));
    for (const auto& r : m.relators) our_set.insert(cyclic_key(r));
    m.relations = m.disks && table_set == our_set;
    return m;
}

}  // namespace chyp
