#include "sbx/diagrams.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace sbx {

const char* word_str(Word w) {
    static const char* s[5] = {"", "L", "R", "LR", "RL"};
    return s[w];
}

Word word_rev(Word w) {
    if (w == WLR) return WRL;
    if (w == WRL) return WLR;
    return w;
}

std::vector<char> word_letters(Word w) {
    switch (w) {
        case W0: return {};
        case WL: return {'L'};
        case WR: return {'R'};
        case WLR: return {'L', 'R'};
        case WRL: return {'R', 'L'};
    }
    return {};
}

static Word word_of(const std::vector<char>& s) {
    if (s.empty()) return W0;
    if (s.size() == 1) return s[0] == 'L' ? WL : WR;
    if (s.size() == 2 && s[0] != s[1]) return s[0] == 'L' ? WLR : WRL;
    throw ArithmeticError("unreduced word");
}

std::string Mono::str() const {
    std::string s;
    for (int i = 0; i < 6; ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += param_name(i);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

static int letter_param(char c, bool kappa) {
    if (c == 'L') return kappa ? P_KL : P_DL;
    return kappa ? P_KR : P_DR;
}

Word reduce_line(const std::vector<char>& letters, Mono& m) {
    std::vector<char> st;
    for (char c : letters) {
        if (!st.empty() && st.back() == c) {
            ++m.e[letter_param(c, false)];
            continue;
        }
        st.push_back(c);
        if (st.size() == 3) {  // XYX -> X
            ++m.e[P_KLR];
            st.pop_back();
            st.pop_back();
        }
    }
    return word_of(st);
}

static void close_loop(const std::vector<char>& s, Mono& m) {
    if (s.empty()) ++m.e[P_D];
    else if (s.size() == 1) ++m.e[letter_param(s[0], true)];
    else {
        if (s.size() % 2) throw ArithmeticError("odd alternating loop");
        m.e[P_KLR] += static_cast<int>(s.size() / 2);
    }
}

void reduce_loop(const std::vector<char>& letters, Mono& m) {
    std::vector<char> s;
    for (char c : letters) {
        if (!s.empty() && s.back() == c) {
            ++m.e[letter_param(c, false)];
            continue;
        }
        s.push_back(c);
    }
    while (s.size() >= 2 && s.front() == s.back()) {
        ++m.e[letter_param(s.back(), false)];
        s.pop_back();
    }
    close_loop(s, m);
}

// Randomised rewrite order versions, used by the confluence check.
static Word reduce_line_random(std::vector<char> s, Mono& m, std::mt19937_64& rng) {
    for (;;) {
        std::vector<std::pair<int, int>> moves;  // (pos, kind) 0: merge, 1: XYX
        for (int i = 0; i + 1 < (int)s.size(); ++i) {
            if (s[i] == s[i + 1]) moves.push_back({i, 0});
            else if (i + 2 < (int)s.size() && s[i] == s[i + 2]) moves.push_back({i, 1});
        }
        if (moves.empty()) break;
        auto [i, kind] = moves[rng() % moves.size()];
        if (kind == 0) {
            ++m.e[letter_param(s[i], false)];
            s.erase(s.begin() + i);
        } else {
            ++m.e[P_KLR];
            s.erase(s.begin() + i + 1, s.begin() + i + 3);
        }
    }
    return word_of(s);
}

static void reduce_loop_random(std::vector<char> s, Mono& m, std::mt19937_64& rng) {
    for (;;) {
        int L = static_cast<int>(s.size());
        std::vector<int> moves;
        if (L >= 2)
            for (int i = 0; i < L; ++i)
                if (s[i] == s[(i + 1) % L]) moves.push_back(i);
        if (moves.empty()) break;
        int i = moves[rng() % moves.size()];
        ++m.e[letter_param(s[i], false)];
        s.erase(s.begin() + i);
    }
    close_loop(s, m);
}

// ------------------------------------------------------------------ Piece

Piece make_piece(int nt, int nb) {
    Piece p;
    p.nt = nt;
    p.nb = nb;
    p.partner.assign(nt + nb, -1);
    p.word.assign(nt + nb, W0);
    return p;
}

Piece identity_diagram(int n) {
    Piece p = make_piece(n, n);
    for (int i = 0; i < n; ++i) p.set(i, n + i, W0);
    return p;
}

int Piece::lines() const {
    int k = 0;
    for (int a = 0; a < nt; ++a)
        if (partner[a] >= nt) ++k;
    return k;
}

std::vector<std::pair<int, int>> Piece::line_list() const {
    std::vector<std::pair<int, int>> v;
    for (int a = 0; a < nt; ++a)
        if (partner[a] >= nt) v.push_back({a, partner[a]});
    return v;
}

std::string Piece::key() const {
    std::ostringstream os;
    bool first = true;
    for (int a = 0; a < size(); ++a) {
        int b = partner[a];
        if (b < a) continue;
        if (!first) os << ' ';
        first = false;
        os << a + 1 << '-' << b + 1;
        if (word[a] != W0) os << ':' << word_str(word[a]);
    }
    return os.str();
}

Piece Piece::parse(int nt, int nb, const std::string& s) {
    Piece p = make_piece(nt, nb);
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        auto dash = tok.find('-');
        auto colon = tok.find(':');
        if (dash == std::string::npos) throw ConfigError("bad diagram token: " + tok);
        int a = std::stoi(tok.substr(0, dash)) - 1;
        int b = std::stoi(tok.substr(dash + 1, colon == std::string::npos ? std::string::npos : colon - dash - 1)) - 1;
        Word w = W0;
        if (colon != std::string::npos) {
            std::string ws = tok.substr(colon + 1);
            std::vector<char> letters(ws.begin(), ws.end());
            w = word_of(letters);
        }
        if (a < 0 || b < 0 || a >= p.size() || b >= p.size() || a == b) throw ConfigError("bad node in " + tok);
        if (a > b) {
            std::swap(a, b);
            w = word_rev(w);
        }
        if (p.partner[a] != -1 || p.partner[b] != -1) throw ConfigError("node used twice: " + tok);
        p.set(a, b, w);
    }
    for (int x : p.partner)
        if (x < 0) throw ConfigError("unmatched node in diagram");
    return p;
}

Piece flip(const Piece& d) {
    if (d.nt != d.nb) throw ConfigError("flip needs a full diagram");
    int n = d.nt;
    auto sw = [n](int a) { return a < n ? a + n : a - n; };
    Piece r = make_piece(n, n);
    for (int a = 0; a < 2 * n; ++a) {
        int b = d.partner[a];
        if (b < a) continue;
        int a2 = sw(a), b2 = sw(b);
        Word w = d.word[a];
        // orientation is from the smaller index; lines flip direction
        if ((a2 < b2) != (a < b) || (a < n) != (b < n)) {
            if ((a < n) != (b < n)) w = word_rev(w);
        }
        if (a2 > b2) std::swap(a2, b2);
        r.set(a2, b2, w);
    }
    return r;
}

// ------------------------------------------------------------------ compose

namespace {
struct Reducer {
    std::mt19937_64* rng = nullptr;
    Word line(const std::vector<char>& s, Mono& m) const {
        return rng ? reduce_line_random(s, m, *rng) : reduce_line(s, m);
    }
    void loop(const std::vector<char>& s, Mono& m) const {
        if (rng) reduce_loop_random(s, m, *rng);
        else reduce_loop(s, m);
    }
};

void append_word(std::vector<char>& out, Word w, bool reversed) {
    auto l = word_letters(w);
    if (reversed) std::reverse(l.begin(), l.end());
    out.insert(out.end(), l.begin(), l.end());
}

Composite compose_impl(const Piece& A, const Piece& B, bool topo, const Reducer& red) {
    if (A.nb != B.nt) throw ConfigError("compose: size mismatch");
    const int mid = A.nb;
    Composite out;
    out.piece = make_piece(A.nt, B.nb);
    std::vector<char> seen(mid, 0);
    auto res_id = [&](bool sideA, int node) { return sideA ? node : A.nt + (node - B.nt); };

    // Walk from external node.  Returns end node id in result.
    auto walk = [&](bool sideA, int node, std::vector<char>& letters) -> int {
        for (;;) {
            const Piece& P = sideA ? A : B;
            int p = P.partner[node];
            append_word(letters, P.word[node], node > p);
            if (sideA) {
                if (p < A.nt) return res_id(true, p);
                int m = p - A.nt;
                seen[m] = 1;
                sideA = false;
                node = m;
            } else {
                if (p >= B.nt) return res_id(false, p);
                seen[p] = 1;
                sideA = true;
                node = A.nt + p;
            }
        }
    };

    std::vector<char> done(out.piece.size(), 0);
    for (int r = 0; r < out.piece.size(); ++r) {
        if (done[r]) continue;
        std::vector<char> letters;
        int e = r < A.nt ? walk(true, r, letters) : walk(false, B.nt + (r - A.nt), letters);
        done[r] = done[e] = 1;
        // r < e always, since we scan in increasing order
        Word w = red.line(letters, out.mono);
        out.piece.set(r, e, w);
    }
    for (int m = 0; m < mid; ++m) {
        if (seen[m]) continue;
        std::vector<char> letters;
        // loop through middle node m: start on B side going down
        bool sideA = false;
        int node = m;
        seen[m] = 1;
        for (;;) {
            const Piece& P = sideA ? A : B;
            int p = P.partner[node];
            append_word(letters, P.word[node], node > p);
            int nm = sideA ? p - A.nt : p;
            seen[nm] = 1;
            if (nm == m && sideA) break;
            sideA = !sideA;
            node = sideA ? A.nt + nm : nm;
        }
        red.loop(letters, out.mono);
    }
    if (topo) apply_topological(out.piece, out.mono);
    return out;
}
}  // namespace

Composite compose(const Piece& A, const Piece& B, bool topo) { return compose_impl(A, B, topo, Reducer{}); }

bool apply_topological(Piece& d, Mono& m) {
    if (d.nt != d.nb || d.lines() != 0) return false;
    const int n = d.nt;
    int ta = -1, ba = -1;
    for (int a = 0; a < n;) {
        int b = d.partner[a];
        if (d.word[a] == WLR) ta = a;
        a = b + 1;
    }
    for (int a = n; a < 2 * n;) {
        int b = d.partner[a];
        if (d.word[a] == WLR) ba = a;
        a = b + 1;
    }
    if (ta < 0 || ba < 0) return false;
    int tb = d.partner[ta], bb = d.partner[ba];
    d.set(ta, ba, WL);
    d.set(tb, bb, WR);
    ++m.e[P_KLR];
    return true;
}

std::vector<Piece> generators(int n) {
    std::vector<Piece> g;
    Piece e = identity_diagram(n);
    e.set(0, n, WL);
    g.push_back(e);
    for (int i = 1; i < n; ++i) {
        Piece d = identity_diagram(n);
        d.set(i - 1, i, W0);
        d.set(n + i - 1, n + i, W0);
        g.push_back(d);
    }
    Piece f = identity_diagram(n);
    f.set(n - 1, 2 * n - 1, WR);
    g.push_back(f);
    return g;
}

const Composite& Multiplier::product(const Piece& a, const Piece& b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(std::move(key), compose(a, b)).first->second;
}

std::vector<Piece> enumerate_basis(int n, int guard) {
    if (n < 1) throw ConfigError("n must be positive");
    if (n > guard) throw ConfigError("n exceeds size guard " + std::to_string(guard));
    auto gens = generators(n);
    std::set<Piece> seen;
    std::deque<Piece> q;
    Piece id = identity_diagram(n);
    seen.insert(id);
    q.push_back(id);
    while (!q.empty()) {
        Piece d = q.front();
        q.pop_front();
        for (auto& g : gens) {
            Composite c = compose(g, d);
            if (seen.insert(c.piece).second) q.push_back(c.piece);
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {
// Outer arcs of one edge (top: nodes [lo, hi) with arcs inside that range).
// Returns (left endpoint, word read left to right) for outer arcs, and
// whether every nested arc is undecorated.
bool edge_arcs(const Piece& d, int lo, int hi, std::vector<std::pair<int, Word>>& outer) {
    bool ok = true;
    for (int a = lo; a < hi;) {
        int b = d.partner[a];
        if (b < lo || b >= hi) {  // line
            ++a;
            continue;
        }
        if (b < a) throw ArithmeticError("edge walk out of order");
        outer.push_back({a, d.word[a]});
        for (int c = a + 1; c < b; ++c)
            if (d.word[c] != W0) ok = false;
        a = b + 1;
    }
    return ok;
}

bool half_ok(const Piece& d, int lo, int hi, const std::vector<int>& line_nodes) {
    std::vector<std::pair<int, Word>> outer;
    if (!edge_arcs(d, lo, hi, outer)) return false;
    if (line_nodes.empty()) {
        // L*R* with each arc in {0, L, R, LR}
        int phase = 0;  // 0: L allowed, 1: only R
        for (auto& [a, w] : outer) {
            if (w == WRL) return false;
            if ((w == WL || w == WLR) && phase == 1) return false;
            if (w == WR || w == WLR) phase = 1;
        }
        return true;
    }
    int first = line_nodes.front(), last = line_nodes.back();
    for (auto& [a, w] : outer) {
        if (a < first) {
            if (w != W0 && w != WL) return false;
        } else if (a > last) {
            if (w != W0 && w != WR) return false;
        } else if (w != W0) return false;
    }
    return true;
}
}  // namespace

bool is_reduced(const Piece& d) {
    int n = d.nt;
    auto L = d.line_list();
    std::vector<int> top, bot;
    for (auto& [a, b] : L) {
        top.push_back(a);
        bot.push_back(b);
    }
    if (!half_ok(d, 0, n, top) || !half_ok(d, n, 2 * n, bot)) return false;
    int k = static_cast<int>(L.size());
    if (k == 0) {
        bool tLR = false, bLR = false;
        for (int a = 0; a < n; ++a) tLR |= d.word[a] == WLR && d.partner[a] > a;
        for (int a = n; a < 2 * n; ++a) bLR |= d.word[a] == WLR && d.partner[a] > a;
        return !(tLR && bLR);
    }
    if (k >= 2) {
        for (int i = 0; i < k; ++i) {
            Word w = d.word[L[i].first];
            if (i == 0 && w != W0 && w != WL) return false;
            if (i == k - 1 && w != W0 && w != WR) return false;
            if (i > 0 && i < k - 1 && w != W0) return false;
        }
    }
    return true;
}

Piece d0_diagram(int n) {
    Piece p = make_piece(n, n);
    int i = 0;
    for (; i + 1 < n; i += 2) {
        p.set(i, i + 1, WL);
        p.set(n + i, n + i + 1, WL);
    }
    if (i < n) p.set(i, n + i, WL);
    return p;
}

bool in_d0_ideal(const Piece& d) {
    int k = d.lines();
    int n = d.nt;
    if (n % 2 == 0) {
        if (k == 0) return true;
        if (k == 2) {
            auto L = d.line_list();
            return d.word[L[0].first] == WL && d.word[L[1].first] == WR;
        }
        return false;
    }
    if (k != 1) return false;
    return d.word[d.line_list()[0].first] != W0;
}

Composite straighten_random(const std::vector<Piece>& stack, std::mt19937_64& rng) {
    if (stack.empty()) throw ConfigError("empty stack");
    std::vector<Composite> items;
    for (auto& p : stack) items.push_back({Mono{}, p});
    Reducer red{&rng};
    while (items.size() > 1) {
        size_t i = rng() % (items.size() - 1);
        Composite c = compose_impl(items[i].piece, items[i + 1].piece, true, red);
        c.mono *= items[i].mono;
        c.mono *= items[i + 1].mono;
        items[i] = std::move(c);
        items.erase(items.begin() + i + 1);
    }
    return items[0];
}

}  // namespace sbx
