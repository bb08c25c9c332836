#include "sbx/paths.hpp"

#include <algorithm>
#include <sstream>

namespace sbx {

std::string Path::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
    os << ")";
    return os.str();
}

std::vector<Path> enumerate_paths(int n) {
    std::vector<Path> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        Path p;
        p.h.push_back(0);
        for (int i = 0; i < n; ++i) p.h.push_back(p.h.back() + ((mask >> (n - 1 - i)) & 1 ? 1 : -1));
        out.push_back(p);
    }
    return out;
}

Path fundamental(int n) {
    Path p;
    for (int i = 0; i <= n; ++i) p.h.push_back(i % 2 ? -1 : 0);
    return p;
}

bool valid_path(const Path& p) {
    if (p.h.empty() || p.h[0] != 0) return false;
    for (size_t i = 1; i < p.h.size(); ++i)
        if (std::abs(p.h[i] - p.h[i - 1]) != 1) return false;
    return true;
}

Path start_path(const Label& L) {
    if (L.b) return fundamental(L.n);
    Path p;
    int pre = L.n - L.m - 1;
    for (int i = 0; i <= pre; ++i) p.h.push_back(i % 2 ? -1 : 0);
    for (int i = 1; i <= L.m + 1; ++i) p.h.push_back(L.e1 * i);
    return p;
}

bool in_window(const Label& L, const Path& p) {
    if (p.n() != L.n) return false;
    if (L.b) return true;
    return L.e1 > 0 ? p.end() >= L.m + 1 : p.end() <= -L.m - 1;
}

// Tiles move the path away from the fundamental one: up where h_{i-1} >= 0,
// down where h_{i-1} < 0.
static int tile_dir(int hprev) { return hprev >= 0 ? 1 : -1; }

bool can_add_tile(const Path& p, int i) {
    int n = p.n();
    if (i < 1 || i > n) return false;
    int hp = p.h[i - 1], d = tile_dir(hp);
    if (i < n && p.h[i + 1] != hp) return false;
    return p.h[i] == hp - d;
}

Path add_tile(const Path& p, int i) {
    if (!can_add_tile(p, i)) throw ConfigError("cannot add tile at " + std::to_string(i) + " to " + p.str());
    Path r = p;
    r.h[i] += 2 * tile_dir(p.h[i - 1]);
    return r;
}

std::vector<TileMove> tile_sequence(const Path& from, const Path& to) {
    if (from.n() != to.n()) throw ConfigError("path length mismatch");
    int n = from.n();
    std::vector<TileMove> seq;
    Path c = from;
    while (!(c == to)) {
        bool moved = false;
        for (int i = 1; i <= n; ++i) {
            if (c.h[i] == to.h[i] || !can_add_tile(c, i)) continue;
            int d = tile_dir(c.h[i - 1]);
            // only move toward the target
            if ((to.h[i] - c.h[i]) * d <= 0) continue;
            TileMove mv;
            mv.pos = i;
            mv.h_prev = c.h[i - 1];
            mv.above = mv.h_prev >= 0;
            mv.half_ = (i == n);
            seq.push_back(mv);
            c = add_tile(c, i);
            moved = true;
            break;
        }
        if (!moved) throw ConfigError("path " + to.str() + " not reachable from " + from.str());
    }
    return seq;
}

std::vector<TileMove> tile_sequence(const Path& to) { return tile_sequence(fundamental(to.n()), to); }

std::vector<Path> ordered_paths(const Label& L) {
    Path s = start_path(L);
    std::vector<std::pair<std::vector<int>, Path>> keyed;
    for (auto& p : enumerate_paths(L.n)) {
        if (!in_window(L, p)) continue;
        auto seq = tile_sequence(s, p);
        std::vector<int> key{static_cast<int>(seq.size())};
        std::vector<int> pos;
        for (auto& mv : seq) pos.push_back(mv.pos);
        std::sort(pos.begin(), pos.end());
        key.insert(key.end(), pos.begin(), pos.end());
        keyed.push_back({key, p});
    }
    std::sort(keyed.begin(), keyed.end(), [](auto& a, auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
    std::vector<Path> out;
    for (auto& [k, p] : keyed) out.push_back(p);
    return out;
}

}  // namespace sbx
