#include "chyp/fpgroup.hpp"

#include "chyp/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace chyp {

using boost::multiprecision::cpp_int;

int Presentation::total_length() const {
    int s = 0;
    for (const auto& r : relators) s += static_cast<int>(r.size());
    return s;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
        ++i;
        --j;
    }
    return Word(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

Word inverse(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (int& x : r) x = -x;
    return r;
}

namespace {

Word least_rotation(const Word& w) {
    Word best = w;
    Word cur = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

int count_gen(const Word& w, int g) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [g](int x) { return std::abs(x) == g; }));
}

Word substitute(const Word& w, int g, const Word& image) {
    Word out;
    const Word inv = inverse(image);
    for (int x : w) {
        if (x == g)
            out.insert(out.end(), image.begin(), image.end());
        else if (x == -g)
            out.insert(out.end(), inv.begin(), inv.end());
        else
            out.push_back(x);
    }
    return out;
}

Word drop_generator(const Word& w, int g) {
    Word out = w;
    for (int& x : out)
        if (std::abs(x) > g) x += x > 0 ? -1 : 1;
    return out;
}

}  // namespace

Word cyclic_key(const Word& w) {
    const Word r = cyclic_reduce(w);
    return std::min(least_rotation(r), least_rotation(inverse(r)));
}

bool cyclically_equal(const Word& a, const Word& b) { return cyclic_key(a) == cyclic_key(b); }

Word word_power(const Word& w, int e) {
    const Word base = e < 0 ? inverse(w) : w;
    Word out;
    for (int i = 0; i < std::abs(e); ++i) out.insert(out.end(), base.begin(), base.end());
    return free_reduce(out);
}

std::string format_word(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += w[i] > 0 ? 'x' : 'X';
        s += std::to_string(std::abs(w[i]));
    }
    return s;
}

Word parse_word(std::string_view s) {
    Word w;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c != 'x' && c != 'X') throw Error(ErrorCode::Parse, "bad letter in word: " + std::string(s));
        std::size_t j = i + 1;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
        if (j == i + 1) throw Error(ErrorCode::Parse, "missing generator index: " + std::string(s));
        const int g = std::stoi(std::string(s.substr(i + 1, j - i - 1)));
        if (g < 1) throw Error(ErrorCode::Parse, "generator index must be positive");
        w.push_back(c == 'x' ? g : -g);
        i = j;
    }
    return w;
}

std::string format_presentation(const Presentation& p) {
    std::string s = std::to_string(p.ngens) + "\n";
    for (const auto& r : p.relators) s += format_word(r) + "\n";
    return s;
}

Presentation parse_presentation(std::string_view text) {
    Presentation p;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (!header) {
            if (blank) continue;
            try {
                p.ngens = std::stoi(line);
            } catch (const std::exception&) {
                throw Error(ErrorCode::Parse, "first line must be the generator count");
            }
            if (p.ngens < 0) throw Error(ErrorCode::Parse, "negative generator count");
            header = true;
            continue;
        }
        if (blank) continue;
        Word w = parse_word(line);
        for (int x : w)
            if (std::abs(x) > p.ngens) throw Error(ErrorCode::Parse, "generator out of range: " + line);
        p.relators.push_back(std::move(w));
    }
    if (!header) throw Error(ErrorCode::Parse, "empty presentation");
    return p;
}

std::string pretty_presentation(const Presentation& p) {
    std::string s = "<";
    for (int i = 1; i <= p.ngens; ++i) s += (i > 1 ? "," : "") + std::string("x") + std::to_string(i);
    s += " |";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        s += r ? ", " : " ";
        const Word& w = p.relators[r];
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            s += "x" + std::to_string(std::abs(w[i]));
            const int e = static_cast<int>(j - i) * (w[i] > 0 ? 1 : -1);
            if (e != 1) s += "^" + std::to_string(e);
            i = j;
        }
    }
    return s + ">";
}

Presentation normalize(const Presentation& p) {
    Presentation out{p.ngens, {}};
    std::set<Word> seen;
    for (const auto& r : p.relators) {
        Word c = cyclic_reduce(r);
        if (c.empty()) continue;
        if (seen.insert(cyclic_key(c)).second) out.relators.push_back(std::move(c));
    }
    return out;
}

namespace {

// Generator g occurring once in relator r, solved as g = image.
struct Elimination {
    int relator = -1, gen = 0;
    Word image;
    int cost = 0;
};

std::optional<Elimination> best_elimination(const Presentation& p) {
    std::optional<Elimination> best;
    for (int ri = 0; ri < static_cast<int>(p.relators.size()); ++ri) {
        const Word& r = p.relators[ri];
        for (int g = 1; g <= p.ngens; ++g) {
            if (count_gen(r, g) != 1) continue;
            const auto pos = std::find_if(r.begin(), r.end(), [g](int x) { return std::abs(x) == g; });
            Word rot(pos, r.end());
            rot.insert(rot.end(), r.begin(), pos);
            const Word rest(rot.begin() + 1, rot.end());
            Word image = rot.front() > 0 ? inverse(rest) : rest;
            int cost = 0;
            for (int rj = 0; rj < static_cast<int>(p.relators.size()); ++rj)
                if (rj != ri) cost += static_cast<int>(cyclic_reduce(substitute(p.relators[rj], g, image)).size());
            if (!best || cost < best->cost) best = Elimination{ri, g, std::move(image), cost};
        }
    }
    return best;
}

Presentation eliminate(const Presentation& p, const Elimination& e) {
    Presentation out{p.ngens - 1, {}};
    for (int rj = 0; rj < static_cast<int>(p.relators.size()); ++rj)
        if (rj != e.relator) out.relators.push_back(drop_generator(substitute(p.relators[rj], e.gen, e.image), e.gen));
    return normalize(out);
}

// Find p, a piece of a rotation of r or r^-1 longer than half of it, as a cyclic
// subword of s and replace it by the shorter complement.
bool shorten_with(const Word& r, Word& s) {
    const int L = static_cast<int>(r.size());
    const int n = static_cast<int>(s.size());
    if (L == 0 || L > n + L / 2) return false;
    for (const Word& base : {r, inverse(r)}) {
        for (int rot = 0; rot < L; ++rot) {
            Word u(base.begin() + rot, base.end());
            u.insert(u.end(), base.begin(), base.begin() + rot);
            for (int l = L; 2 * l > L; --l) {
                if (l > n) continue;
                for (int start = 0; start < n; ++start) {
                    bool hit = true;
                    for (int t = 0; t < l && hit; ++t) hit = s[(start + t) % n] == u[t];
                    if (!hit) continue;
                    Word q(u.begin() + l, u.end());
                    Word repl = inverse(q);
                    Word out;
                    for (int t = l; t < n; ++t) out.push_back(s[(start + t) % n]);
                    Word next = repl;
                    next.insert(next.end(), out.begin(), out.end());
                    s = cyclic_reduce(next);
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, int budget) {
    Presentation cur = normalize(p);
    for (int step = 0; step < budget; ++step) {
        if (auto e = best_elimination(cur)) {
            cur = eliminate(cur, *e);
            continue;
        }
        bool changed = false;
        for (std::size_t i = 0; i < cur.relators.size() && !changed; ++i)
            for (std::size_t j = 0; j < cur.relators.size() && !changed; ++j) {
                if (i == j || cur.relators[i].size() > cur.relators[j].size()) continue;
                Word s = cur.relators[j];
                if (shorten_with(cur.relators[i], s) && s.size() < cur.relators[j].size()) {
                    cur.relators[j] = s;
                    changed = true;
                }
            }
        if (!changed) break;
        cur = normalize(cur);
    }
    return cur;
}

std::string Abelianization::to_string() const {
    std::string s;
    if (free_rank == 1) s = "Z";
    if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t;
    return s.empty() ? "0" : s;
}

std::vector<std::string> smith_invariants(const std::vector<std::vector<long long>>& rows, int cols) {
    const int m = static_cast<int>(rows.size());
    std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(cols));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = rows[i][j];
    std::vector<cpp_int> diag;
    for (int t = 0; t < std::min(m, cols); ++t) {
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) {
                t = std::min(m, cols);
                break;
            }
            std::swap(a[t], a[pi]);
            for (int i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                const cpp_int q = a[i][t] / a[t][t];
                if (q != 0)
                    for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                const cpp_int q = a[t][j] / a[t][t];
                if (q != 0)
                    for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) {
                diag.push_back(abs(a[t][t]));
                break;
            }
            for (int j = t; j < cols; ++j) a[t][j] += a[bad][j];
        }
    }
    std::vector<std::string> out;
    for (const auto& d : diag) out.push_back(d.str());
    return out;
}

Abelianization abelianization(const Presentation& p) {
    std::vector<std::vector<long long>> rows;
    for (const auto& r : p.relators) {
        std::vector<long long> row(p.ngens, 0);
        for (int x : r) row[std::abs(x) - 1] += x > 0 ? 1 : -1;
        rows.push_back(std::move(row));
    }
    const auto inv = smith_invariants(rows, p.ngens);
    Abelianization ab;
    ab.free_rank = p.ngens - static_cast<int>(inv.size());
    for (const auto& d : inv)
        if (d != "1") ab.torsion.push_back(d);
    return ab;
}

namespace {

int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

// HLT enumeration with coincidence processing.
class Enumerator {
public:
    Enumerator(int ngens, int max_cosets) : cols_(2 * ngens), max_(max_cosets) { new_coset(); }

    int new_coset() {
        if (live_ >= max_) throw Error(ErrorCode::CosetLimitExceeded, "more than " + std::to_string(max_) + " cosets");
        table_.emplace_back(cols_, -1);
        parent_.push_back(static_cast<int>(parent_.size()));
        ++live_;
        return static_cast<int>(table_.size()) - 1;
    }
    bool live(int c) const { return parent_[c] == c; }
    int size() const { return static_cast<int>(table_.size()); }

    void define(int c, int col) {
        const int d = new_coset();
        table_[c][col] = d;
        table_[d][col ^ 1] = c;
    }

    void scan_and_fill(int c, const Word& w) {
        const int n = static_cast<int>(w.size());
        if (n == 0) return;
        int f = c, b = c, i = 0, j = n - 1;
        for (;;) {
            while (i <= j && table_[f][column(w[i])] >= 0) f = table_[f][column(w[i++])];
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && table_[b][column(w[j]) ^ 1] >= 0) b = table_[b][column(w[j--]) ^ 1];
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                table_[f][column(w[i])] = b;
                table_[b][column(w[i]) ^ 1] = f;
                return;
            }
            define(f, column(w[i]));
        }
    }

    void fill_row(int c) {
        for (int x = 0; x < cols_ && live(c); ++x)
            if (table_[c][x] < 0) define(c, x);
    }

    CosetTable compact(int ngens) const {
        std::vector<int> id(table_.size(), -1);
        int k = 0;
        for (int c = 0; c < size(); ++c)
            if (live(c)) id[c] = k++;
        CosetTable t;
        t.ngens = ngens;
        t.complete = true;
        for (int c = 0; c < size(); ++c) {
            if (!live(c)) continue;
            std::vector<int> row(cols_);
            for (int x = 0; x < cols_; ++x) {
                row[x] = table_[c][x] < 0 ? -1 : id[table_[c][x]];
                if (row[x] < 0) t.complete = false;
            }
            t.rows.push_back(std::move(row));
        }
        return t;
    }

private:
    int rep(int c) {
        int r = c;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[c] != r) {
            const int next = parent_[c];
            parent_[c] = r;
            c = next;
        }
        return r;
    }
    void merge(int a, int b, std::deque<int>& q) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        --live_;
        q.push_back(b);
    }
    void coincidence(int a, int b) {
        std::deque<int> q;
        merge(a, b, q);
        while (!q.empty()) {
            const int e = q.front();
            q.pop_front();
            for (int x = 0; x < cols_; ++x) {
                const int f = table_[e][x];
                if (f < 0) continue;
                if (table_[f][x ^ 1] == e) table_[f][x ^ 1] = -1;
                const int e1 = rep(e), f1 = rep(f);
                if (table_[e1][x] >= 0)
                    merge(f1, table_[e1][x], q);
                else if (table_[f1][x ^ 1] >= 0)
                    merge(e1, table_[f1][x ^ 1], q);
                else {
                    table_[e1][x] = f1;
                    table_[f1][x ^ 1] = e1;
                }
            }
        }
    }

    int cols_, max_;
    int live_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> parent_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, int max_cosets) {
    Enumerator e(p.ngens, max_cosets);
    const Presentation np = normalize(p);
    for (const auto& h : subgroup) e.scan_and_fill(0, free_reduce(h));
    for (int c = 0; c < e.size(); ++c) {
        for (const auto& r : np.relators) {
            if (!e.live(c)) break;
            e.scan_and_fill(c, r);
        }
        if (e.live(c)) e.fill_row(c);
    }
    return e.compact(p.ngens);
}

Word FreeMap::apply(const Word& w) const {
    Word out;
    for (int x : w) {
        const Word& im = images[std::abs(x) - 1];
        if (x > 0)
            out.insert(out.end(), im.begin(), im.end());
        else {
            const Word inv = inverse(im);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return free_reduce(out);
}

std::string FreeMap::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < images.size(); ++i)
        s += (i ? " ; " : "") + std::string("x") + std::to_string(i + 1) + "->" + format_word(images[i]);
    return s;
}

namespace {

FreeMap identity_map(int n) {
    FreeMap m;
    for (int i = 1; i <= n; ++i) m.images.push_back(Word{i});
    return m;
}

FreeMap compose(const FreeMap& outer, const FreeMap& inner) {
    FreeMap m;
    for (const auto& im : inner.images) m.images.push_back(outer.apply(im));
    return m;
}

// Whitehead automorphisms of the second kind: fix the letter a, send each other
// generator y to y, y a, a^-1 y or a^-1 y a.
std::vector<FreeMap> whitehead_moves(int n) {
    std::vector<FreeMap> moves;
    for (int g = 1; g <= n; ++g)
        for (int a : {g, -g}) {
            int combos = 1;
            for (int i = 1; i < n; ++i) combos *= 4;
            for (int c = 0; c < combos; ++c) {
                FreeMap m = identity_map(n);
                int code = c;
                bool trivial = true;
                for (int y = 1; y <= n; ++y) {
                    if (y == g) continue;
                    const int opt = code % 4;
                    code /= 4;
                    if (opt == 0) continue;
                    trivial = false;
                    Word im{y};
                    if (opt == 1 || opt == 3) im.push_back(a);
                    if (opt == 2 || opt == 3) im.insert(im.begin(), -a);
                    m.images[y - 1] = im;
                }
                if (!trivial) moves.push_back(std::move(m));
            }
        }
    return moves;
}

std::vector<FreeMap> signed_permutations(int n) {
    std::vector<FreeMap> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (int signs = 0; signs < (1 << n); ++signs) {
            FreeMap m;
            for (int i = 0; i < n; ++i) m.images.push_back(Word{(signs >> i & 1) ? -perm[i] : perm[i]});
            out.push_back(std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

WhiteheadReduction whitehead_reduce(const Word& w, int ngens) {
    WhiteheadReduction r{cyclic_reduce(w), identity_map(ngens)};
    const auto moves = whitehead_moves(ngens);
    for (;;) {
        const FreeMap* best = nullptr;
        std::size_t best_len = r.minimal.size();
        for (const auto& m : moves) {
            const std::size_t len = cyclic_reduce(m.apply(r.minimal)).size();
            if (len < best_len) {
                best_len = len;
                best = &m;
            }
        }
        if (!best) return r;
        r.minimal = cyclic_reduce(best->apply(r.minimal));
        r.map = compose(*best, r.map);
    }
}

bool whitehead_equivalent(const Word& r1, const Word& r2, int ngens, FreeMap* map1, FreeMap* map2, int orbit_cap) {
    const auto a = whitehead_reduce(r1, ngens);
    const auto b = whitehead_reduce(r2, ngens);
    if (a.minimal.size() != b.minimal.size()) return false;
    const Word target = cyclic_key(b.minimal);
    std::vector<FreeMap> moves = whitehead_moves(ngens);
    for (auto& m : signed_permutations(ngens)) moves.push_back(std::move(m));
    std::map<Word, FreeMap> seen;
    std::deque<std::pair<Word, FreeMap>> queue;
    seen.emplace(cyclic_key(a.minimal), a.map);
    queue.emplace_back(a.minimal, a.map);
    while (!queue.empty()) {
        auto [w, m] = queue.front();
        queue.pop_front();
        if (cyclic_key(w) == target) {
            if (map1) *map1 = m;
            if (map2) *map2 = b.map;
            return true;
        }
        for (const auto& mv : moves) {
            Word next = cyclic_reduce(mv.apply(w));
            if (next.size() != w.size()) continue;
            Word key = cyclic_key(next);
            if (seen.count(key)) continue;
            if (static_cast<int>(seen.size()) >= orbit_cap)
                throw Error(ErrorCode::SearchBudgetExceeded, "Whitehead orbit larger than cap");
            FreeMap composed = compose(mv, m);
            seen.emplace(key, composed);
            queue.emplace_back(std::move(next), std::move(composed));
        }
    }
    return false;
}

const char* verdict_name(const MatchVerdict& v) {
    switch (v.index()) {
    case 0: return "Distinguished";
    case 1: return "StrongEvidence";
    default: return "HomomorphismCertified";
    }
}

int verdict_rank(const MatchVerdict& v) { return static_cast<int>(v.index()); }

std::string verdict_details(const MatchVerdict& v) {
    if (const auto* d = std::get_if<Distinguished>(&v)) return d->witness;
    auto join = [](const std::vector<std::string>& xs) {
        std::string s;
        for (const auto& x : xs) s += (s.empty() ? "" : "; ") + x;
        return s;
    };
    if (const auto* s = std::get_if<StrongEvidence>(&v)) return join(s->invariants);
    const auto& h = std::get<HomomorphismCertified>(v);
    return join(h.maps) + " | " + join(h.invariants);
}

MatchVerdict match_presentations(const Presentation& p1, const Presentation& p2, const MatchOptions& opt) {
    const Presentation s1 = tietze_simplify(p1), s2 = tietze_simplify(p2);
    const auto a1 = abelianization(s1), a2 = abelianization(s2);
    if (!(a1 == a2)) return Distinguished{"H1 " + a1.to_string() + " vs " + a2.to_string()};
    std::vector<std::string> inv{"H1 = " + a1.to_string()};
    const auto l1 = low_index_profile(s1, opt.profile_index), l2 = low_index_profile(s2, opt.profile_index);
    if (const int k = first_difference(l1, l2))
        return Distinguished{"low-index profile differs at index " + std::to_string(k) + ": " +
                             LowIndexProfile{k, {l1.entries[k - 1]}}.to_string() + " vs " +
                             LowIndexProfile{k, {l2.entries[k - 1]}}.to_string()};
    inv.push_back("low-index profile to index " + std::to_string(opt.profile_index) + ": " + l1.to_string());
    if (s1.ngens == s2.ngens && s1.relators.size() == 1 && s2.relators.size() == 1) {
        FreeMap m1, m2;
        try {
            if (whitehead_equivalent(s1.relators[0], s2.relators[0], s1.ngens, &m1, &m2))
                return HomomorphismCertified{{"first: " + m1.to_string(), "second: " + m2.to_string()}, inv};
        } catch (const Error&) {
        }
    }
    return StrongEvidence{inv};
}

Presentation census_group(std::string_view name) {
    if (name == "m038") return parse_presentation("2\nx1,x1,x1,X2,X1,x2,x2,x2,X1,X2\n");
    if (name == "s090") return parse_presentation("2\nx1,x1,x1,x1,x1,X2,X1,x2,x2,x2,X1,X2\n");
    throw Error(ErrorCode::Parse, "unknown census group: " + std::string(name));
}

}  // namespace chyp
