// Decorated planar diagrams: the basis of b^x_n, straightening and
// multiplication.
#pragma once

#include "sbx/params.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace sbx {

// Decoration word on a strand, read in the strand's canonical orientation
// (from the endpoint with the smaller node index).
enum Word : uint8_t { W0 = 0, WL = 1, WR = 2, WLR = 3, WRL = 4 };
const char* word_str(Word w);
Word word_rev(Word w);
std::vector<char> word_letters(Word w);

// Scalar monomial d^a0 dL^a1 dR^a2 kL^a3 kR^a4 kLR^a5.
struct Mono {
    std::array<int, 6> e{};
    Mono& operator*=(const Mono& o) {
        for (int i = 0; i < 6; ++i) e[i] += o.e[i];
        return *this;
    }
    friend Mono operator*(Mono a, const Mono& b) { return a *= b; }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator<(const Mono& a, const Mono& b) { return a.e < b.e; }
    bool one() const {
        for (int x : e)
            if (x) return false;
        return true;
    }
    std::string str() const;
};

enum Param { P_D = 0, P_DL, P_DR, P_KL, P_KR, P_KLR };

template <class K>
K eval_mono(const Mono& m, const DeltaTuple<K>& t) {
    K r(1);
    for (int i = 0; i < 6; ++i)
        if (m.e[i]) r *= power(t.v[i], m.e[i]);
    return r;
}

// A planar piece: nt top nodes (0..nt-1, left to right) and nb bottom nodes
// (nt..nt+nb-1).  Full diagrams have nt = nb = n.  Half-diagrams have nt = n
// and nb = number of propagating lines (each bottom node is a line stub).
struct Piece {
    int nt = 0, nb = 0;
    std::vector<int> partner;
    std::vector<Word> word;  // same value stored at both ends

    int size() const { return nt + nb; }
    bool is_line(int a) const { return (a < nt) != (partner[a] < nt); }
    int lines() const;
    // through-lines sorted by top endpoint: (top node, bottom node)
    std::vector<std::pair<int, int>> line_list() const;
    void set(int a, int b, Word w) {
        partner[a] = b;
        partner[b] = a;
        word[a] = word[b] = w;
    }
    std::string key() const;  // 1-based "a-b:W" pairs
    static Piece parse(int nt, int nb, const std::string& s);
    friend bool operator==(const Piece& a, const Piece& b) {
        return a.nt == b.nt && a.nb == b.nb && a.partner == b.partner && a.word == b.word;
    }
    friend bool operator<(const Piece& a, const Piece& b) {
        if (a.nt != b.nt) return a.nt < b.nt;
        if (a.nb != b.nb) return a.nb < b.nb;
        if (a.partner != b.partner) return a.partner < b.partner;
        return a.word < b.word;
    }
};

Piece make_piece(int nt, int nb);
Piece identity_diagram(int n);
Piece flip(const Piece& d);  // vertical reflection of a full diagram

// Straightening of a single strand.  Loops never use the LRL rule.
Word reduce_line(const std::vector<char>& letters, Mono& m);
void reduce_loop(const std::vector<char>& letters, Mono& m);

struct Composite {
    Mono mono;
    Piece piece;
};

// A over B: A's bottom glued to B's top.  `topo` applies the topological
// relation (full diagrams only).
Composite compose(const Piece& A, const Piece& B, bool topo = true);
bool apply_topological(Piece& d, Mono& m);

// Generators e_0 = e, e_1..e_{n-1}, e_n = f.
std::vector<Piece> generators(int n);

// All reduced diagrams, sorted.  Guard on n.
std::vector<Piece> enumerate_basis(int n, int guard = 8);
// Structural check of the reduction rules.
bool is_reduced(const Piece& d);

// d_0 (= E'_n) and membership of a basis diagram in the ideal it generates.
Piece d0_diagram(int n);
bool in_d0_ideal(const Piece& d);

// Formal linear combinations.
template <class K>
struct Element {
    int n = 0;
    std::map<Piece, K> terms;

    static Element single(const Piece& d, K c = K(1)) {
        Element e;
        e.n = d.nt;
        e.terms.emplace(d, c);
        return e;
    }
    static Element identity(int n) { return single(identity_diagram(n)); }
    static Element scalar(int n, K c) { return single(identity_diagram(n), c); }
    void add(const Piece& d, const K& c) {
        if (is_zero(c)) return;
        auto it = terms.find(d);
        if (it == terms.end()) terms.emplace(d, c);
        else {
            it->second += c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }
    Element& operator+=(const Element& o) {
        if (!n) n = o.n;
        for (auto& [d, c] : o.terms) add(d, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        if (!n) n = o.n;
        for (auto& [d, c] : o.terms) add(d, -c);
        return *this;
    }
    Element scaled(const K& k) const {
        Element r;
        r.n = n;
        if (is_zero(k)) return r;
        for (auto& [d, c] : terms) r.terms.emplace(d, c * k);
        return r;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    bool zero() const { return terms.empty(); }
    friend bool operator==(const Element& a, const Element& b) { return a.terms == b.terms; }
};

// Product cache of basis diagrams keyed by the pair.
class Multiplier {
public:
    const Composite& product(const Piece& a, const Piece& b);
    size_t cache_size() const { return cache_.size(); }

private:
    std::map<std::pair<Piece, Piece>, Composite> cache_;
};

template <class K>
Element<K> multiply(const Element<K>& a, const Element<K>& b, const DeltaTuple<K>& t, Multiplier* mul = nullptr) {
    if (a.n != b.n && !a.zero() && !b.zero()) throw ConfigError("multiply: mismatched n");
    Element<K> r;
    r.n = a.n ? a.n : b.n;
    std::map<Mono, K> mcache;
    auto val = [&](const Mono& m) -> const K& {
        auto it = mcache.find(m);
        if (it == mcache.end()) it = mcache.emplace(m, eval_mono(m, t)).first;
        return it->second;
    };
    for (auto& [da, ca] : a.terms)
        for (auto& [db, cb] : b.terms) {
            if (mul) {
                const Composite& c = mul->product(da, db);
                r.add(c.piece, ca * cb * val(c.mono));
            } else {
                Composite c = compose(da, db);
                r.add(c.piece, ca * cb * val(c.mono));
            }
        }
    return r;
}

template <class K>
Element<K> quotient_bprime(const Element<K>& a) {
    Element<K> r;
    r.n = a.n;
    for (auto& [d, c] : a.terms)
        if (!in_d0_ideal(d)) r.terms.emplace(d, c);
    return r;
}

template <class K>
std::string element_str(const Element<K>& a) {
    if (a.zero()) return "0";
    std::string s;
    for (auto& [d, c] : a.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + to_str(c) + ")*{" + d.key() + "}";
    }
    return s;
}

// Stack of diagrams straightened under a random composition order and a
// random rewrite order on each strand.  Returns the reduced diagram and
// scalar monomial.
Composite straighten_random(const std::vector<Piece>& stack, std::mt19937_64& rng);

}  // namespace sbx
