#include "chyp/words.hpp"

#include "chyp/errors.hpp"

#include <algorithm>
#include <vector>

namespace chyp {

bool is_group_word(std::string_view w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == 'A' || c == 'a' || c == 'B' || c == 'b'; });
}

char inverse_letter(char c) {
    switch (c) {
        case 'A': return 'a';
        case 'a': return 'A';
        case 'B': return 'b';
        case 'b': return 'B';
    }
    throw Error(ErrorCode::InvalidWord, std::string("letter ") + c);
}

std::string inverse_word(std::string_view w) {
    std::string r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(inverse_letter(*it));
    return r;
}

std::string free_reduce(std::string_view w) {
    std::string r;
    for (char c : w) {
        if (!r.empty() && r.back() == inverse_letter(c)) r.pop_back();
        else r.push_back(c);
    }
    return r;
}

std::string cyclic_reduce(std::string_view w) {
    std::string r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == inverse_letter(r[j - 1])) { ++i; --j; }
    return r.substr(i, j - i);
}

std::string conjugate_by_A(std::string_view w, int k) {
    const char in = k >= 0 ? 'A' : 'a';
    const char out = k >= 0 ? 'a' : 'A';
    const std::size_t m = static_cast<std::size_t>(std::abs(k));
    return std::string(m, in) + std::string(w) + std::string(m, out);
}

namespace {

bool is_b_letter(char c) { return c == 'B' || c == 'b'; }

// One pass of B-run collapsing on a cyclic word that contains an A-letter.
std::string collapse_b_runs(const std::string& w) {
    std::size_t start = 0;
    while (is_b_letter(w[start])) ++start;
    std::string rot = w.substr(start) + w.substr(0, start);
    std::string out;
    for (std::size_t i = 0; i < rot.size();) {
        if (!is_b_letter(rot[i])) { out.push_back(rot[i++]); continue; }
        int e = 0;
        while (i < rot.size() && is_b_letter(rot[i])) e += rot[i++] == 'B' ? 1 : -1;
        e = ((e % 3) + 3) % 3;
        if (e == 1) out.push_back('B');
        if (e == 2) out.push_back('b');
    }
    return out;
}

int letter_rank(char c) {
    switch (c) {
        case 'A': return 0;
        case 'a': return 1;
        case 'B': return 2;
        default: return 3;
    }
}

bool letter_less(const std::string& x, const std::string& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](char p, char q) { return letter_rank(p) < letter_rank(q); });
}

std::string min_rotation(const std::string& w) {
    std::string best = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::string r = w.substr(i) + w.substr(0, i);
        if (letter_less(r, best)) best = r;
    }
    return best;
}

std::size_t primitive_period(const std::string& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p) continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i < n; ++i) ok = w[i] == w[(i + p) % n];
        if (ok) return p;
    }
    return n;
}

std::string power_string(const std::string& root, std::size_t m) {
    if (m == 1) return root;
    if (root.size() == 1) return root + "^" + std::to_string(m);
    return "(" + root + ")^" + std::to_string(m);
}

}  // namespace

std::string relation_normal_form(std::string_view input) {
    if (!is_group_word(input)) throw Error(ErrorCode::InvalidWord, std::string(input));
    std::string w = cyclic_reduce(input);
    if (w.empty()) return "id";
    if (std::all_of(w.begin(), w.end(), [](char c) { return c == 'B'; })) return power_string("B", w.size());
    if (std::all_of(w.begin(), w.end(), [](char c) { return c == 'b'; })) return power_string("b", w.size());
    for (;;) {
        if (std::all_of(w.begin(), w.end(), is_b_letter)) {
            int e = 0;
            for (char c : w) e += c == 'B' ? 1 : -1;
            e = ((e % 3) + 3) % 3;
            w = e == 0 ? "" : (e == 1 ? "B" : "b");
            break;
        }
        std::string next = cyclic_reduce(collapse_b_runs(w));
        if (next == w) break;
        w = next;
        if (w.empty()) break;
    }
    if (w.empty()) return "id";
    const std::size_t p = primitive_period(w);
    return power_string(min_rotation(w.substr(0, p)), w.size() / p);
}

std::string relation_class(std::string_view nf) {
    // Parse "(root)^m", "X^m" or a bare root.
    std::string s(nf);
    if (s == "id") return s;
    std::string root = s, exponent = "1";
    if (auto caret = s.rfind('^'); caret != std::string::npos) {
        exponent = s.substr(caret + 1);
        root = s.substr(0, caret);
        if (root.front() == '(') root = root.substr(1, root.size() - 2);
    }
    const std::string a = min_rotation(root), b = min_rotation(inverse_word(root));
    return (letter_less(b, a) ? b : a) + "^" + exponent;
}

}  // namespace chyp
