#include "sbx/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace sbx {

std::string master_name(MasterEq e) {
    switch (e) {
        case MasterEq::W1W2Neg: return "w1w2neg";
        case MasterEq::W1Neg: return "w1neg";
        case MasterEq::W2Neg: return "w2neg";
        case MasterEq::Trivial: return "trivial";
        case MasterEq::W1W2Pos: return "w1w2pos";
        case MasterEq::W1Pos: return "w1pos";
        case MasterEq::W2Pos: return "w2pos";
        case MasterEq::Impossible: return "impossible";
    }
    return "?";
}

Rat weight_x(const Label& L, const Rat& w1, const Rat& w2) { return Rat(-L.m) + L.e1 * w1 + L.e2 * w2; }

bool congruent(const Rat& a, const Rat& b, int ell) {
    Rat d = a - b;
    if (ell == 0) return sgn(d) == 0;
    Rat k = d / (2 * ell);
    return is_integer(k);
}

std::vector<MasterSolution> master_solutions(const Label& a, const Label& b, const Rat& w1, const Rat& w2, int ell) {
    std::vector<MasterSolution> out;
    Rat xa = weight_x(a, w1, w2), xb = weight_x(b, w1, w2);
    bool s1 = a.e1 == b.e1, s2 = a.e2 == b.e2;
    if (congruent(xa, xb, ell)) {
        MasterEq e = s1 ? (s2 ? MasterEq::Trivial : MasterEq::W2Neg) : (s2 ? MasterEq::W1Neg : MasterEq::W1W2Neg);
        out.push_back({e, a, b, xa - xb});
    }
    if (congruent(xa, -xb, ell)) {
        MasterEq e = s1 ? (s2 ? MasterEq::W1W2Pos : MasterEq::W1Pos) : (s2 ? MasterEq::W2Pos : MasterEq::Impossible);
        out.push_back({e, a, b, xa + xb});
    }
    return out;
}

namespace {
// k == 0 (mod ell), ell = 0 meaning equality
bool zero_mod(const Rat& k, int ell) {
    if (ell == 0) return sgn(k) == 0;
    return is_integer(k / ell);
}
}  // namespace

std::optional<std::string> hom_exists(const Label& s, const Label& d, const Rat& w1, const Rat& w2, int ell) {
    if (s.b || d.b || s.n != d.n || !s.valid() || !d.valid()) return std::nullopt;
    bool i1 = is_integer(w1), i2 = is_integer(w2);
    if (ell > 0 && !i1 && !i2 && s.e1 == d.e1 && s.e2 == d.e2 && d.m == s.m - 2 * ell) return "qhom";
    if (i1 && d.e1 == -s.e1 && d.e2 == s.e2 && 0 < d.m && d.m < s.m &&
        zero_mod(half(s.m - d.m) - s.e1 * w1, ell))
        return "w1hom";
    if (i2 && d.e1 == s.e1 && d.e2 == -s.e2 && 0 < d.m && d.m < s.m &&
        zero_mod(half(s.m - d.m) - s.e2 * w2, ell))
        return "w2hom";
    Rat c = s.e1 * w1 + s.e2 * w2;
    if (is_integer(c) && d.e1 == s.e1 && d.e2 == s.e2 && d.m < s.m && zero_mod(half(s.m + d.m) - c, ell))
        return "w1w2hom";
    return std::nullopt;
}

bool nohom_pair(const Label& a, const Label& b, const Rat& w1, const Rat& w2) {
    if (!is_integer(w1) || !is_integer(w2) || sgn(w1) <= 0 || sgn(w2) <= 0) return false;
    auto one = [&](const Label& x, const Label& y) {
        if (x.e1 != 1 || x.e2 != 1 || y.e1 != -1 || y.e2 != 1) return false;
        return Rat(x.m) < w1 + w2 && Rat(y.m) == 2 * w2 - x.m;
    };
    return one(a, b) || one(b, a);
}

std::string functor_name(Functor f) {
    switch (f) {
        case Functor::G: return "G";
        case Functor::Gp: return "G'";
        case Functor::F: return "F";
        case Functor::Fp: return "F'";
    }
    return "?";
}

Functor parse_functor(const std::string& s) {
    if (s == "G") return Functor::G;
    if (s == "G'" || s == "Gp") return Functor::Gp;
    if (s == "F") return Functor::F;
    if (s == "F'" || s == "Fp") return Functor::Fp;
    throw ConfigError("unknown functor: " + s);
}

std::optional<Label> functor_map(Functor f, const Label& L) {
    if (L.b || !L.valid()) throw ConfigError("functor_map needs a valid DN label");
    switch (f) {
        case Functor::G: return Label::dn(L.n + 1, L.m + L.e1, -L.e1, L.e2);
        case Functor::Gp: return Label::dn(L.n + 1, L.m + L.e2, L.e1, -L.e2);
        case Functor::F:
            if (L.m == L.n - 1 && L.e1 == 1) return std::nullopt;
            return Label::dn(L.n - 1, L.m + L.e1, -L.e1, L.e2);
        case Functor::Fp:
            if (L.m == L.n - 1 && L.e2 == 1) return std::nullopt;
            return Label::dn(L.n - 1, L.m + L.e2, L.e1, -L.e2);
    }
    return std::nullopt;
}

std::pair<Rat, Rat> functor_params(Functor f, const Rat& w1, const Rat& w2) {
    if (f == Functor::G || f == Functor::F) return {-w1 - 1, w2};
    return {w1, -w2 - 1};
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::Semisimple: return "semisimple";
        case Regime::RootNoneIntegral: return "qrootofunity";
        case Regime::W1Int: return "w1int";
        case Regime::W2Int: return "w2int";
        case Regime::W1PlusW2: return "w1+w2";
        case Regime::W1MinusW2: return "w1-w2";
        case Regime::BothSums: return "w1+w2andw1-w2";
        case Regime::BothIntGeneric: return "qnot1w1w2";
        case Regime::BothIntGenericLoc: return "qnot1w1w2loc";
        case Regime::BothIntRoot: return "qw1w2";
    }
    return "?";
}

namespace {
int ell_of(const WeightParams& p) { return p.spec.ell_or_zero(); }
long sgn_l(const Rat& r) { return sgn(r); }
}  // namespace

void check_supported(const WeightParams& p) {
    int ell = ell_of(p);
    const char* names[4] = {"[w1]", "[w1+1]", "[w2]", "[w2+1]"};
    Rat v[4] = {p.w1, p.w1 + 1, p.w2, p.w2 + 1};
    for (int i = 0; i < 4; ++i) {
        bool z = ell == 0 ? sgn(v[i]) == 0 : (is_integer(v[i]) && is_integer(v[i] / ell));
        if (z) throw ConfigError(std::string("unsupported regime: ") + names[i] + " vanishes");
    }
}

Regime regime_of(int n, const WeightParams& p) {
    bool i1 = is_integer(p.w1), i2 = is_integer(p.w2);
    bool ip = is_integer(p.w1 + p.w2), im = is_integer(p.w1 - p.w2);
    int ell = ell_of(p);
    if (i1 && i2) {
        if (ell > 0) return Regime::BothIntRoot;
        Rat bound = 2 * abs(p.w1) + 2 * abs(p.w2) + half(sgn_l(p.w1) + sgn_l(p.w2));
        return Rat(n) >= bound ? Regime::BothIntGeneric : Regime::BothIntGenericLoc;
    }
    if (i1) return Regime::W1Int;
    if (i2) return Regime::W2Int;
    if (ip && im) return Regime::BothSums;
    if (ip) return Regime::W1PlusW2;
    if (im) return Regime::W1MinusW2;
    return ell == 0 ? Regime::Semisimple : Regime::RootNoneIntegral;
}

std::vector<HomEdge> hom_graph(int n, const Rat& w1, const Rat& w2, int ell) {
    std::vector<HomEdge> out;
    auto L = dn_labels(n);
    for (auto& a : L)
        for (auto& b : L)
            if (a != b)
                if (auto r = hom_exists(a, b, w1, w2, ell)) out.push_back({a, b, *r});
    return out;
}

namespace {

// Blocks of b'_n for w1, w2 integral below the stable range: globalise to a
// large level with positive weights, localise the hom-rule edges of every
// level on the way back down, drop annihilated modules, take components.
BlockPartition localised_blocks(int n, const WeightParams& p, const std::string& rule) {
    int ell = ell_of(p);
    Rat w1 = p.w1, w2 = p.w2;
    int a = sgn(w1) < 0 ? 1 : 0, b = sgn(w2) < 0 ? 1 : 0;
    Rat W1 = a ? -w1 - 1 : w1, W2 = b ? -w2 - 1 : w2;
    // room for the |x| = |x'| rule at level N with positive weights
    long need = std::max<long>(n, 2 * (rat_to_long(W1) + rat_to_long(W2)) + 1) + 2 + 8 * ell;
    while (n + a + b < need) a += 2;
    // up[k]: functor taking level n+k to n+k+1; wts[k]: weights at level n+k
    std::vector<Functor> up;
    for (int i = 0; i < a; ++i) up.push_back(Functor::G);
    for (int i = 0; i < b; ++i) up.push_back(Functor::Gp);
    std::vector<std::pair<Rat, Rat>> wts{{w1, w2}};
    for (auto f : up) wts.push_back(functor_params(f, wts.back().first, wts.back().second));
    auto localise = [&](Label L, int k) -> std::optional<Label> {
        for (int i = k - 1; i >= 0; --i) {
            auto r = functor_map(up[i] == Functor::G ? Functor::F : Functor::Fp, L);
            if (!r) return std::nullopt;
            L = *r;
        }
        return L;
    };
    LabelUnion U(dn_labels(n));
    for (int k = 0; k <= (int)up.size(); ++k)
        for (auto& e : hom_graph(n + k, wts[k].first, wts[k].second, ell)) {
            auto s = localise(e.src, k), d = localise(e.dst, k);
            if (s && d) U.unite(*s, *d, rule + ": " + e.rule + " at level " + std::to_string(n + k));
        }
    return U.partition(n, p.str());
}

}  // namespace

BlockPartition classify(int n, const WeightParams& p) {
    check_supported(p);
    int ell = ell_of(p);
    Regime R = regime_of(n, p);
    if (R == Regime::BothIntGenericLoc || R == Regime::BothIntRoot) return localised_blocks(n, p, regime_name(R));
    const Rat &w1 = p.w1, &w2 = p.w2;
    auto labels = dn_labels(n);
    LabelUnion U(labels);
    std::string rule = regime_name(R);
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j) {
            const Label &A = labels[i], &B = labels[j];
            Rat xa = weight_x(A, w1, w2), xb = weight_x(B, w1, w2);
            bool absx = congruent(xa, xb, ell) || congruent(xa, -xb, ell);
            bool link = false;
            switch (R) {
                case Regime::Semisimple: break;
                case Regime::RootNoneIntegral:
                    link = A.e1 == B.e1 && A.e2 == B.e2 && congruent(Rat(A.m), Rat(B.m), ell);
                    break;
                case Regime::W1Int: link = A.e2 == B.e2 && absx; break;
                case Regime::W2Int: link = A.e1 == B.e1 && absx; break;
                // labels off the integral diagonal still see qhom at a root of unity
                case Regime::W1PlusW2:
                    link = absx && A.e1 == B.e1 && A.e2 == B.e2 && (A.e1 == A.e2 || ell > 0);
                    break;
                case Regime::W1MinusW2:
                    link = absx && A.e1 == B.e1 && A.e2 == B.e2 && (A.e1 == -A.e2 || ell > 0);
                    break;
                case Regime::BothSums:
                    link = absx && A.e1 == B.e1 && A.e2 == B.e2;
                    break;
                case Regime::BothIntGeneric: link = absx; break;
                case Regime::BothIntGenericLoc:
                case Regime::BothIntRoot: break;
            }
            if (link) U.unite(A, B, rule);
        }
    return U.partition(n, p.str());
}

std::vector<CriticalWitness> critical_witnesses(int n, const WeightParams& p) {
    std::vector<CriticalWitness> out;
    if (!p.theta) return out;
    int ell = ell_of(p);
    for (auto& L : dn_labels(n)) {
        Rat x = weight_x(L, p.w1, p.w2);
        if (congruent(*p.theta, x, ell)) out.push_back({L, 1});
        else if (congruent(*p.theta, -x, ell)) out.push_back({L, -1});
    }
    return out;
}

std::optional<CriticalWitness> critical_theta(int n, const WeightParams& p) {
    auto w = critical_witnesses(n, p);
    if (w.empty()) return std::nullopt;
    return *std::min_element(w.begin(), w.end(),
                             [](const CriticalWitness& a, const CriticalWitness& b) { return a.label < b.label; });
}

BlockPartition classify_bnx(int n, const WeightParams& p) {
    if (!p.theta) throw ConfigError("classify_bnx needs theta");
    BlockPartition P = classify(n, p);
    auto labels = all_labels(n);
    LabelUnion U(labels);
    for (auto& c : P.classes)
        for (size_t i = 1; i < c.size(); ++i) U.unite(c[0], c[i], "b'_n block");
    // provenance of the b'_n merges is kept from classify
    Label B = Label::bmod(n);
    for (auto& w : critical_witnesses(n, p)) U.unite(B, w.label, std::string("critical theta (") + (w.sign > 0 ? "+" : "-") + ")");
    BlockPartition Q = U.partition(n, p.str());
    std::vector<Provenance> prov = P.provenance;
    for (auto& pr : Q.provenance)
        if (pr.rule != "b'_n block") prov.push_back(pr);
    Q.provenance = prov;
    return Q;
}

std::string plot_weights(int n, const WeightParams& p, const BlockPartition& P) {
    auto labels = dn_labels(n);
    const double sc = 20.0;
    double R = 1.0;
    std::map<Label, std::pair<double, double>> pos;
    for (auto& L : labels) {
        auto [x, y] = weight_coords(L, p.w1, p.w2);
        double fx = x.get_d(), fy = y.get_d();
        pos[L] = {fx, fy};
        R = std::max(R, std::max(std::fabs(fx), std::fabs(fy)));
    }
    R += 2;
    double W = 2 * R * sc;
    auto X = [&](double x) { return (x + R) * sc; };
    auto Y = [&](double y) { return (R - y) * sc; };
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << W << "\" viewBox=\"0 0 " << W
       << " " << W << "\">\n";
    os << "<line x1=\"" << X(-R) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(R) << "\" y2=\"" << Y(0)
       << "\" stroke=\"#999\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(-R) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(R)
       << "\" stroke=\"#999\"/>\n";
    // arms: from the innermost dot of each sign pair outwards along (e1, e2)
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            std::vector<Label> arm;
            for (auto& L : labels)
                if (L.e1 == e1 && L.e2 == e2) arm.push_back(L);
            if (arm.empty()) continue;
            auto lo = std::min_element(arm.begin(), arm.end(), [](auto& a, auto& b) { return a.m < b.m; });
            auto [x0, y0] = pos[*lo];
            double len = R * 1.5;
            double x1 = std::clamp(x0 + e1 * len, -R + 0.5, R - 0.5), y1 = std::clamp(y0 + e2 * len, -R + 0.5, R - 0.5);
            os << "<line x1=\"" << X(x0) << "\" y1=\"" << Y(y0) << "\" x2=\"" << X(x1) << "\" y2=\"" << Y(y1)
               << "\" stroke=\"#000\"/>\n";
            os << "<text x=\"" << X(x1) << "\" y=\"" << Y(y1) << "\" font-size=\"10\">" << (e1 > 0 ? "+" : "-") << ","
               << (e2 > 0 ? "+" : "-") << "</text>\n";
        }
    for (auto& c : P.classes) {
        std::vector<Label> dn;
        for (auto& L : c)
            if (!L.b) dn.push_back(L);
        for (size_t i = 1; i < dn.size(); ++i) {
            auto [ax, ay] = pos[dn[i - 1]];
            auto [bx, by] = pos[dn[i]];
            os << "<line class=\"block\" x1=\"" << X(ax) << "\" y1=\"" << Y(ay) << "\" x2=\"" << X(bx) << "\" y2=\""
               << Y(by) << "\" stroke=\"#c00\" stroke-dasharray=\"4 2\"/>\n";
        }
    }
    for (auto& L : labels) {
        auto [x, y] = pos[L];
        os << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"3\"><title>" << L.str() << "</title></circle>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace sbx
