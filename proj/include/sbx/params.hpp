// Parameter contexts: weights, specialisations of q, the six-tuple
// schemes, cell labels and their conversions.
#pragma once

#include "sbx/exact.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace sbx {

enum class Scheme { DN, GMP1, GMP2 };
Scheme parse_scheme(const std::string& s);
std::string scheme_name(Scheme s);

struct WeightParams {
    Rat w1 = 0, w2 = 0;
    std::optional<Rat> theta;
    RootSpec spec;
    Scheme scheme = Scheme::DN;

    // q = x^D, D = 2 * lcm of the weight denominators, so q^{1/2},
    // q^{w/2} and q^{theta/2} are all powers of x.
    int D() const;
    std::string str() const;
};

// key=value lines (w1, w2, theta, q-mode, ell, q0, scheme); '#' comments.
WeightParams parse_config(const std::string& text);

// Linear form c0 + c1 w1 + c2 w2 + c3 theta inside a quantum bracket.
struct BoxArg {
    Rat c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    BoxArg() = default;
    BoxArg(Rat a0, Rat a1 = 0, Rat a2 = 0, Rat a3 = 0) : c0(a0), c1(a1), c2(a2), c3(a3) {}
    BoxArg operator-() const { return {-c0, -c1, -c2, -c3}; }
    // flip so the leading weight coefficient is positive; returns -1 if flipped
    int normalize();
    Rat value(const WeightParams& p) const;
    bool needs_theta() const { return sgn(c3) != 0; }
    std::string str() const;
    auto tie() const { return std::tie(c1, c2, c3, c0); }
    friend bool operator<(const BoxArg& a, const BoxArg& b) { return a.tie() < b.tie(); }
    friend bool operator==(const BoxArg& a, const BoxArg& b) { return a.tie() == b.tie(); }
};

// Values of q^{1/2}, q^{w1/2}, q^{w2/2}, q^{theta/2} in a field K.
template <class K>
struct Scalars {
    K s, P1, P2, T;
    bool has_theta = false;
    int D = 0;  // 0 when the four values are independent
    mutable std::map<std::array<long, 4>, K> pow_cache;
    mutable std::map<BoxArg, K> box_cache;

    // q^{(a0 + a1 w1 + a2 w2 + a3 theta)/2}
    K qpow2(long a0, long a1, long a2, long a3) const {
        std::array<long, 4> key{a0, a1, a2, a3};
        auto it = pow_cache.find(key);
        if (it != pow_cache.end()) return it->second;
        if (a3 && !has_theta) throw ConfigError("theta required");
        K r = power(s, a0) * power(P1, a1) * power(P2, a2);
        if (a3) r *= power(T, a3);
        pow_cache.emplace(key, r);
        return r;
    }
    K q() const { return qpow2(2, 0, 0, 0); }
    K Q1() const { return qpow2(0, 2, 0, 0); }
    K Q2() const { return qpow2(0, 0, 2, 0); }
    K box(const BoxArg& a) const {
        auto it = box_cache.find(a);
        if (it != box_cache.end()) return it->second;
        Rat d0 = 2 * a.c0, d1 = 2 * a.c1, d2 = 2 * a.c2, d3 = 2 * a.c3;
        if (!is_integer(d0) || !is_integer(d1) || !is_integer(d2) || !is_integer(d3))
            throw ConfigError("box argument " + a.str() + " is not half-integral");
        long a0 = rat_to_long(d0), a1 = rat_to_long(d1), a2 = rat_to_long(d2), a3 = rat_to_long(d3);
        K num = qpow2(a0, a1, a2, a3) - qpow2(-a0, -a1, -a2, -a3);
        K den = qpow2(2, 0, 0, 0) - qpow2(-2, 0, 0, 0);
        K r = num / den;
        box_cache.emplace(a, r);
        return r;
    }
    K qint(long m) const { return box(BoxArg(m)); }
};

// Builders.  Symbolic: K = RatFn with x the variable.  Point: x = x0.
// Cyclo: x a primitive 2*ell*D-th root of unity.  Independent: the four
// base values are free (identity testing in q, Q1, Q2, theta).
Scalars<RatFn> symbolic_scalars(const WeightParams& p);
Scalars<Rat> point_scalars(const WeightParams& p, const Rat& x0);
Scalars<Cyc> cyclo_scalars(const WeightParams& p, int ell);
Scalars<Rat> independent_scalars(const Rat& s, const Rat& P1, const Rat& P2, const Rat& T);

// (delta, delta_L, delta_R, kappa_L, kappa_R, kappa_LR)
template <class K>
struct DeltaTuple {
    std::array<K, 6> v;
    const K& d() const { return v[0]; }
    const K& dL() const { return v[1]; }
    const K& dR() const { return v[2]; }
    const K& kL() const { return v[3]; }
    const K& kR() const { return v[4]; }
    const K& kLR() const { return v[5]; }
};
inline const char* param_name(int i) {
    static const char* names[6] = {"d", "dL", "dR", "kL", "kR", "kLR"};
    return names[i];
}

// b as a function of theta (even/odd n differ).
template <class K>
K b_of_theta(int n, const Scalars<K>& S) {
    if (n % 2 == 0)
        return S.box(BoxArg(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2))) *
               S.box(BoxArg(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(-1, 2)));
    return -(S.box(BoxArg(0, Rat(1, 2), Rat(-1, 2), Rat(1, 2))) *
             S.box(BoxArg(0, Rat(1, 2), Rat(-1, 2), Rat(-1, 2))));
}

template <class K>
void check_dn_boxes(const Scalars<K>& S) {
    const char* names[2] = {"[w1+1]", "[w2+1]"};
    BoxArg args[2] = {BoxArg(1, 1), BoxArg(1, 0, 1)};
    for (int i = 0; i < 2; ++i)
        if (is_zero(S.box(args[i]))) throw ConfigError(std::string("parameter box ") + names[i] + " vanishes");
}

// Table of schemes.  b(theta) is the GMP1 value of kappa_LR; DN carries
// b/([w1+1][w2+1]) so that rescaling "1" maps GMP1 onto DN.  This is the
// normalisation in which the b-cell Gram determinant has the product form.
// Without theta kappa_LR is `klr_default` (it only acts on the b-cell ideal).
template <class K>
DeltaTuple<K> scheme_convert(int n, const Scalars<K>& S, Scheme sc, std::optional<K> klr_default = {}) {
    K q2 = S.qint(2);
    K w1 = S.box(BoxArg(0, 1)), w1p = S.box(BoxArg(1, 1));
    K w2 = S.box(BoxArg(0, 0, 1)), w2p = S.box(BoxArg(1, 0, 1));
    K b = S.has_theta ? b_of_theta(n, S) : (klr_default ? *klr_default : K(1));
    DeltaTuple<K> t;
    switch (sc) {
        case Scheme::DN:
            check_dn_boxes(S);
            t.v = {q2, w1 / w1p, w2 / w2p, K(1), K(1), S.has_theta ? b / (w1p * w2p) : b};
            break;
        case Scheme::GMP1:
            t.v = {q2, w1, w2, w1p, w2p, S.has_theta ? b : b * w1p * w2p};
            break;
        case Scheme::GMP2:
            t.v = {-q2, -w1, -w2, w1p, w2p, S.has_theta ? b : b * w1p * w2p};
            break;
    }
    return t;
}

// Generator rescalings of the parameter table.
template <class K>
DeltaTuple<K> rescale1(const DeltaTuple<K>& t) {
    return {{t.d(), t.dL() / t.kL(), t.dR() / t.kR(), K(1), K(1), t.kLR() / (t.kL() * t.kR())}};
}
template <class K>
DeltaTuple<K> rescale2(const DeltaTuple<K>& t) {
    return {{-t.d(), -t.dL(), -t.dR(), t.kL(), t.kR(), t.kLR()}};
}

// ------------------------------------------------------------------ labels

// DN label W^{(n,m)}_{e1,e2}, or the b-module W^n(b).
struct Label {
    int n = 0;
    bool b = false;
    int m = 0, e1 = 1, e2 = 1;

    static Label dn(int n, int m, int e1, int e2) { return {n, false, m, e1, e2}; }
    static Label bmod(int n) { return {n, true, 0, 1, 1}; }
    bool valid() const;
    int lines() const { return b ? (n % 2) : m + 1; }  // blob-picture propagating lines
    std::string str() const;   // "W(5,2,-,-)" or "W5(b)"
    std::string short_str() const;  // "(2,-,-)" or "b"
    auto tie() const { return std::tie(n, b, m, e1, e2); }
    friend bool operator<(const Label& a, const Label& c) { return a.tie() < c.tie(); }
    friend bool operator==(const Label& a, const Label& c) { return a.tie() == c.tie(); }
    friend bool operator!=(const Label& a, const Label& c) { return !(a == c); }
};

Label parse_label(int n, const std::string& s);  // "b", "2,-,-", "(2,-,-)"
int parse_eps_pair(const std::string& s, int& e1, int& e2);  // "--", "-,+", "+-"

// Standard labelling S_n(l), l in {-n..n-1}.
int to_standard(const Label& L);
Label from_standard(int n, int l);

std::vector<Label> dn_labels(int n);   // valid DN labels, ordered
std::vector<Label> all_labels(int n);  // DN labels then W^n(b)

std::pair<Rat, Rat> weight_coords(const Label& L, const Rat& w1, const Rat& w2);

// Quantities with closed forms in terms of path counts.
long binom(long n, long k);
long count_paths(int n, int h);  // paths of length n ending at height h
long cell_dim(const Label& L);

}  // namespace sbx
