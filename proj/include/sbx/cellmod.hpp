// Cell modules: half-diagram bases, the action of diagrams, and the
// contravariant form.
#pragma once

#include "sbx/diagrams.hpp"
#include "sbx/paths.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sbx {

struct Term {
    int index;
    Mono mono;
};

class CellModule {
public:
    Label label;
    std::vector<Piece> basis;   // half-diagrams, nt = n, nb = propagating lines
    std::vector<Path> paths;    // path indexing each basis element
    std::vector<Mono> wp_mono;  // w_p = wp_mono[i] * basis[i]
    std::map<Piece, int> index;

    int dim() const { return static_cast<int>(basis.size()); }
    int n() const { return label.n; }
    // d acting on basis element j
    std::optional<Term> act(const Piece& d, int j) const;
    // <basis[i], basis[j]> as a monomial, or nullopt for zero
    std::optional<Mono> inner(int i, int j) const;
    std::optional<Mono> inner(const Piece& u, const Piece& v) const;
    bool pattern_ok(const Piece& h) const;
    Piece generator() const;

    template <class K>
    std::vector<std::vector<K>> action_matrix(const Piece& d, const DeltaTuple<K>& t) const {
        int N = dim();
        std::vector<std::vector<K>> M(N, std::vector<K>(N, K(0)));
        for (int j = 0; j < N; ++j) {
            auto r = act(d, j);
            if (r) M[r->index][j] = eval_mono(r->mono, t);
        }
        return M;
    }
    template <class K>
    std::vector<std::vector<K>> element_matrix(const Element<K>& a, const DeltaTuple<K>& t) const {
        int N = dim();
        std::vector<std::vector<K>> M(N, std::vector<K>(N, K(0)));
        for (auto& [d, c] : a.terms)
            for (int j = 0; j < N; ++j) {
                auto r = act(d, j);
                if (r) M[r->index][j] += c * eval_mono(r->mono, t);
            }
        return M;
    }
};

// Half-diagram text form, mirroring Piece::key with stubs numbered n+1..
std::string half_str(const Piece& h);

CellModule build_module(const Label& L);
const CellModule& cached_module(const Label& L);

// Generator half-diagram of the label (d_{+-(m+1)} or primed variants, E'_n).
Piece label_generator(const Label& L);

// Left or right restriction content: labels t of W_t(n), in order.
std::vector<int> restriction_content(const Label& L, bool left);

}  // namespace sbx
