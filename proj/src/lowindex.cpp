#include "chyp/errors.hpp"
#include "chyp/fpgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace chyp {

namespace {

int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

using Table = std::vector<std::vector<int>>;

// Standard-form search over coset tables of index at most N.
class LowIndexSearch {
public:
    LowIndexSearch(const Presentation& p, int max_index, long long budget)
        : p_(normalize(p)), cols_(2 * p.ngens), N_(max_index), budget_(budget) {}

    std::vector<std::vector<Table>> run() {
        found_.assign(N_ + 1, {});
        if (cols_ == 0) {
            found_[1].push_back(Table(1));
            return found_;
        }
        Table t(1, std::vector<int>(cols_, -1));
        extend(t);
        return found_;
    }

private:
    bool close(Table& t) const {
        for (bool changed = true; changed;) {
            changed = false;
            for (int c = 0; c < static_cast<int>(t.size()); ++c)
                for (const auto& r : p_.relators) {
                    const int n = static_cast<int>(r.size());
                    int f = c, i = 0;
                    while (i < n && t[f][column(r[i])] >= 0) f = t[f][column(r[i++])];
                    if (i == n) {
                        if (f != c) return false;
                        continue;
                    }
                    int b = c, j = n - 1;
                    while (j > i && t[b][column(r[j]) ^ 1] >= 0) b = t[b][column(r[j--]) ^ 1];
                    if (j == i) {
                        const int x = column(r[i]);
                        if (t[b][x ^ 1] >= 0) return false;
                        t[f][x] = b;
                        t[b][x ^ 1] = f;
                        changed = true;
                    }
                }
        }
        return true;
    }

    void extend(const Table& t) {
        if (++nodes_ > budget_) throw Error(ErrorCode::SearchBudgetExceeded, "low-index node budget");
        int rc = -1, cc = -1;
        for (int c = 0; c < static_cast<int>(t.size()) && rc < 0; ++c)
            for (int x = 0; x < cols_; ++x)
                if (t[c][x] < 0) {
                    rc = c;
                    cc = x;
                    break;
                }
        if (rc < 0) {
            found_[t.size()].push_back(t);
            return;
        }
        const int k = static_cast<int>(t.size());
        for (int d = 0; d <= k; ++d) {
            if (d == k && k >= N_) break;
            Table s = t;
            if (d == k) s.emplace_back(cols_, -1);
            if (s[d][cc ^ 1] >= 0) continue;
            s[rc][cc] = d;
            s[d][cc ^ 1] = rc;
            if (close(s)) extend(s);
        }
    }

    Presentation p_;
    int cols_, N_;
    long long budget_, nodes_ = 0;
    std::vector<std::vector<Table>> found_;
};

// Table renumbered in first-appearance order from basepoint b.
Table rebase(const Table& t, int b) {
    const int n = static_cast<int>(t.size());
    std::vector<int> id(n, -1), order{b};
    id[b] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int v : t[order[i]])
            if (id[v] < 0) {
                id[v] = static_cast<int>(order.size());
                order.push_back(v);
            }
    Table out(n);
    for (int i = 0; i < n; ++i)
        for (int v : t[order[i]]) out[i].push_back(id[v]);
    return out;
}

Table class_key(const Table& t) {
    Table best = rebase(t, 0);
    for (int b = 1; b < static_cast<int>(t.size()); ++b) best = std::min(best, rebase(t, b));
    return best;
}

// Abelianization of the subgroup with coset table t, by Reidemeister-Schreier.
std::string subgroup_abelianization(const Presentation& p, const Table& t) {
    const int n = static_cast<int>(t.size());
    const int d = p.ngens;
    std::vector<std::vector<bool>> tree(n, std::vector<bool>(d, false));
    std::vector<bool> seen(n, false);
    std::vector<int> order{0};
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int c = order[i];
        for (int x = 0; x < 2 * d; ++x) {
            const int e = t[c][x];
            if (seen[e]) continue;
            seen[e] = true;
            order.push_back(e);
            if (x % 2 == 0)
                tree[c][x / 2] = true;
            else
                tree[e][x / 2] = true;
        }
    }
    std::map<std::pair<int, int>, int> gen;
    for (int c = 0; c < n; ++c)
        for (int g = 0; g < d; ++g)
            if (!tree[c][g]) gen.emplace(std::pair{c, g}, static_cast<int>(gen.size()));
    std::vector<std::vector<long long>> rows;
    for (const auto& r : p.relators)
        for (int c = 0; c < n; ++c) {
            std::vector<long long> row(gen.size(), 0);
            int cur = c;
            for (int x : r) {
                const int g = std::abs(x) - 1;
                if (x > 0) {
                    if (auto it = gen.find({cur, g}); it != gen.end()) ++row[it->second];
                    cur = t[cur][2 * g];
                } else {
                    const int prev = t[cur][2 * g + 1];
                    if (auto it = gen.find({prev, g}); it != gen.end()) --row[it->second];
                    cur = prev;
                }
            }
            rows.push_back(std::move(row));
        }
    const auto inv = smith_invariants(rows, static_cast<int>(gen.size()));
    Abelianization ab;
    ab.free_rank = static_cast<int>(gen.size() - inv.size());
    for (const auto& s : inv)
        if (s != "1") ab.torsion.push_back(s);
    return ab.to_string();
}

}  // namespace

LowIndexProfile low_index_profile(const Presentation& p, int max_index, long long node_budget) {
    LowIndexProfile prof;
    prof.max_index = max_index;
    const Presentation np = normalize(p);
    const auto found = LowIndexSearch(np, max_index, node_budget).run();
    for (int k = 1; k <= max_index; ++k) {
        std::set<Table> classes;
        for (const auto& t : found[k]) classes.insert(class_key(t));
        ProfileEntry e;
        e.index = k;
        e.classes = static_cast<int>(classes.size());
        for (const auto& c : classes) e.abelianizations.push_back(np.ngens ? subgroup_abelianization(np, c) : "0");
        std::sort(e.abelianizations.begin(), e.abelianizations.end());
        prof.entries.push_back(std::move(e));
    }
    return prof;
}

int first_difference(const LowIndexProfile& a, const LowIndexProfile& b) {
    const std::size_t n = std::min(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!(a.entries[i] == b.entries[i])) return static_cast<int>(i) + 1;
    return 0;
}

std::string LowIndexProfile::to_string() const {
    std::string s;
    for (const auto& e : entries) {
        if (!s.empty()) s += " ";
        s += std::to_string(e.index) + ":" + std::to_string(e.classes) + "[";
        for (std::size_t i = 0; i < e.abelianizations.size(); ++i)
            s += (i ? "," : "") + e.abelianizations[i];
        s += "]";
    }
    return s;
}

}  // namespace chyp
