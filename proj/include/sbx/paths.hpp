// Lattice paths, tile moves, and the path basis of the cell modules.
#pragma once

#include "sbx/params.hpp"

#include <string>
#include <vector>

namespace sbx {

struct Path {
    std::vector<int> h;  // h[0] = 0, |h[i+1]-h[i]| = 1
    int n() const { return static_cast<int>(h.size()) - 1; }
    int end() const { return h.back(); }
    std::string str() const;
    friend bool operator==(const Path& a, const Path& b) { return a.h == b.h; }
    friend bool operator<(const Path& a, const Path& b) { return a.h < b.h; }
};

std::vector<Path> enumerate_paths(int n);
Path fundamental(int n);
bool valid_path(const Path& p);

// Minimal path of the label's window: (0,-1,0,...,0) followed by a
// straight run to +-(m+1).  For W^n(b) the fundamental path.
Path start_path(const Label& L);
// Paths indexing the basis of the cell module.
bool in_window(const Label& L, const Path& p);

struct TileMove {
    int pos;     // 1..n; n is the half tile
    bool above;  // h_{pos-1} >= 0: the tile is added from above
    int h_prev;  // h_{pos-1} before the move
    bool half() const { return half_; }
    bool half_ = false;
};

// Is adding a tile at position i (moving away from the fundamental path)
// possible at p?
bool can_add_tile(const Path& p, int i);
Path add_tile(const Path& p, int i);
// Lowest-position-first sequence of tile additions from `from` to `to`.
// Throws if `to` is not reachable.
std::vector<TileMove> tile_sequence(const Path& from, const Path& to);
std::vector<TileMove> tile_sequence(const Path& to);  // from fundamental

// Paths of the label ordered by (number of tiles from start, positions).
std::vector<Path> ordered_paths(const Label& L);

}  // namespace sbx
