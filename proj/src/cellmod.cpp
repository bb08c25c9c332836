#include "sbx/cellmod.hpp"

#include <deque>
#include <mutex>
#include <set>
#include <sstream>

namespace sbx {

std::string half_str(const Piece& h) { return h.key(); }

Piece label_generator(const Label& L) {
    int n = L.n;
    int k = L.lines();
    Piece p = make_piece(n, k);
    int arcs_end = n - k;
    for (int i = 0; i + 1 < arcs_end; i += 2) p.set(i, i + 1, WL);
    for (int j = 0; j < k; ++j) {
        Word w = W0;
        if (L.b) w = WL;
        else {
            if (j == 0 && L.e1 < 0) w = WL;
            if (j == k - 1 && L.e2 < 0) w = (w == WL) ? WLR : WR;
        }
        p.set(arcs_end + j, n + j, w);
    }
    return p;
}

Piece CellModule::generator() const { return label_generator(label); }

bool CellModule::pattern_ok(const Piece& h) const {
    int k = label.lines();
    if (h.nb != k || h.lines() != k) return false;
    auto L = h.line_list();
    for (int j = 0; j < k; ++j) {
        Word w = h.word[L[j].first];
        if (label.b) {
            if (w != WL && w != WRL) return false;
            continue;
        }
        Word want = W0;
        if (j == 0 && label.e1 < 0) want = WL;
        if (j == k - 1 && label.e2 < 0) want = (want == WL) ? WLR : WR;
        if (w != want) return false;
    }
    return true;
}

std::optional<Term> CellModule::act(const Piece& d, int j) const {
    Composite c = compose(d, basis[j], false);
    if (!pattern_ok(c.piece)) return std::nullopt;
    auto it = index.find(c.piece);
    if (it == index.end()) throw ArithmeticError("action left the basis of " + label.str() + ": " + c.piece.key());
    return Term{it->second, c.mono};
}

static Piece flip_half(const Piece& v) {
    int n = v.nt, k = v.nb;
    Piece r = make_piece(k, n);
    for (int a = 0; a < n + k; ++a) {
        int b = v.partner[a];
        if (b < a) continue;
        auto mp = [&](int x) { return x < n ? k + x : x - n; };
        int a2 = mp(a), b2 = mp(b);
        Word w = v.word[a];
        if (b >= n) w = word_rev(w);  // line: now read from the stub
        if (a2 > b2) std::swap(a2, b2);
        r.set(a2, b2, w);
    }
    return r;
}

std::optional<Mono> CellModule::inner(const Piece& u, const Piece& v) const {
    Composite c = compose(flip_half(v), u, false);
    const Piece& p = c.piece;
    int k = label.lines();
    for (int j = 0; j < k; ++j)
        if (p.partner[j] != k + j) return std::nullopt;
    for (int j = 0; j < k; ++j) {
        Word w = p.word[j];
        if (label.b) {
            if (w != WL) return std::nullopt;
            continue;
        }
        Word want = W0;
        if (j == 0 && label.e1 < 0) want = WL;
        if (j == k - 1 && label.e2 < 0) want = (want == WL) ? WLR : WR;
        if (w != want) return std::nullopt;
    }
    return c.mono;
}

std::optional<Mono> CellModule::inner(int i, int j) const { return inner(basis[i], basis[j]); }

CellModule build_module(const Label& L) {
    if (!L.valid()) throw ConfigError("invalid label " + L.str());
    CellModule M;
    M.label = L;
    auto gens = generators(L.n);
    Piece g = label_generator(L);
    Path s = start_path(L);
    M.paths = ordered_paths(L);
    for (auto& p : M.paths) {
        Piece u = g;
        Mono mono;
        for (auto& mv : tile_sequence(s, p)) {
            Composite c = compose(gens[mv.pos], u, false);
            if (!M.pattern_ok(c.piece))
                throw ArithmeticError("tile product vanished for " + p.str() + " in " + L.str());
            u = c.piece;
            mono *= c.mono;
        }
        if (M.index.count(u)) throw ArithmeticError("repeated half-diagram for " + p.str() + " in " + L.str());
        M.index[u] = static_cast<int>(M.basis.size());
        M.basis.push_back(u);
        M.wp_mono.push_back(mono);
    }
    if (M.dim() != cell_dim(L)) throw ArithmeticError("dimension mismatch for " + L.str());
    return M;
}

const CellModule& cached_module(const Label& L) {
    static std::mutex mu;
    static std::map<Label, std::unique_ptr<CellModule>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(L);
    if (it == cache.end()) it = cache.emplace(L, std::make_unique<CellModule>(build_module(L))).first;
    return *it->second;
}

std::vector<int> restriction_content(const Label& L, bool left) {
    if (L.b) throw ConfigError("restriction content needs a DN label");
    int e = left ? L.e1 : L.e2;
    std::vector<int> out;
    for (int t = L.n; t >= L.m + 1; t -= 2) out.push_back(e * t);
    return out;
}

}  // namespace sbx
