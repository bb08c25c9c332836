#include "sbx/params.hpp"

#include <algorithm>
#include <sstream>

namespace sbx {

Scheme parse_scheme(const std::string& s) {
    std::string u;
    for (char c : s) u += static_cast<char>(toupper(static_cast<unsigned char>(c)));
    if (u == "DN") return Scheme::DN;
    if (u == "GMP1") return Scheme::GMP1;
    if (u == "GMP2") return Scheme::GMP2;
    throw ConfigError("unknown scheme: " + s);
}

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::DN: return "DN";
        case Scheme::GMP1: return "GMP1";
        case Scheme::GMP2: return "GMP2";
    }
    return "?";
}

int WeightParams::D() const {
    Int l = lcm_int(w1.get_den(), w2.get_den());
    if (theta) l = lcm_int(l, theta->get_den());
    l *= 2;
    if (l > 100000) throw ConfigError("weight denominators too large");
    return static_cast<int>(l.get_si());
}

std::string WeightParams::str() const {
    std::ostringstream os;
    os << "w1=" << w1.get_str() << " w2=" << w2.get_str();
    if (theta) os << " theta=" << theta->get_str();
    os << " " << spec.str() << " scheme=" << scheme_name(scheme);
    return os.str();
}

WeightParams parse_config(const std::string& text) {
    WeightParams p;
    std::istringstream is(text);
    std::string line;
    std::string qmode;
    std::optional<int> ell;
    std::optional<Rat> q0;
    while (std::getline(is, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ConfigError("config line without '=': " + line);
            continue;
        }
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
        if (k == "w1") p.w1 = parse_rat(v);
        else if (k == "w2") p.w2 = parse_rat(v);
        else if (k == "theta") p.theta = parse_rat(v);
        else if (k == "q-mode" || k == "qmode") qmode = v;
        else if (k == "ell") ell = std::stoi(v);
        else if (k == "q0") q0 = parse_rat(v);
        else if (k == "scheme") p.scheme = parse_scheme(v);
        else throw ConfigError("unknown config key: " + k);
    }
    if (qmode.empty()) qmode = ell ? "root" : (q0 ? "point" : "generic");
    if (qmode == "generic") p.spec = RootSpec::generic();
    else if (qmode == "root") {
        if (!ell || *ell < 1) throw ConfigError("q-mode=root needs ell >= 1");
        p.spec = RootSpec::root(*ell);
    } else if (qmode == "point") {
        if (!q0) throw ConfigError("q-mode=point needs q0");
        p.spec = RootSpec::point(*q0);
    } else throw ConfigError("unknown q-mode: " + qmode);
    return p;
}

// ------------------------------------------------------------------ BoxArg

int BoxArg::normalize() {
    for (const Rat* c : {&c1, &c2, &c3, &c0}) {
        if (sgn(*c) > 0) return 1;
        if (sgn(*c) < 0) {
            *this = -*this;
            return -1;
        }
    }
    return 1;
}

Rat BoxArg::value(const WeightParams& p) const {
    Rat v = c0 + c1 * p.w1 + c2 * p.w2;
    if (sgn(c3)) {
        if (!p.theta) throw ConfigError("theta required for " + str());
        v += c3 * *p.theta;
    }
    return v;
}

std::string BoxArg::str() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Rat& c, const char* name) {
        if (sgn(c) == 0) return;
        Rat a = abs(c);
        if (first) { if (sgn(c) < 0) os << "-"; }
        else os << (sgn(c) < 0 ? "-" : "+");
        if (*name) {
            if (a != 1) os << a.get_str();
            os << name;
        } else os << a.get_str();
        first = false;
    };
    term(c1, "w1");
    term(c2, "w2");
    term(c3, "th");
    term(c0, "");
    if (first) os << "0";
    return "[" + os.str() + "]";
}

// ------------------------------------------------------------------ scalars

namespace {
long xexp(const Rat& w, int D) {
    Rat e = w * D / 2;
    return rat_to_long(e);
}
}  // namespace

Scalars<RatFn> symbolic_scalars(const WeightParams& p) {
    Scalars<RatFn> S;
    int D = p.D();
    S.D = D;
    S.s = RatFn::x_pow(D / 2);
    S.P1 = RatFn::x_pow(xexp(p.w1, D));
    S.P2 = RatFn::x_pow(xexp(p.w2, D));
    S.has_theta = p.theta.has_value();
    S.T = S.has_theta ? RatFn::x_pow(xexp(*p.theta, D)) : RatFn(1);
    return S;
}

Scalars<Rat> point_scalars(const WeightParams& p, const Rat& x0) {
    if (sgn(x0) == 0) throw ConfigError("x0 must be nonzero");
    Scalars<Rat> S;
    int D = p.D();
    S.D = D;
    S.s = power(x0, D / 2);
    S.P1 = power(x0, xexp(p.w1, D));
    S.P2 = power(x0, xexp(p.w2, D));
    S.has_theta = p.theta.has_value();
    S.T = S.has_theta ? power(x0, xexp(*p.theta, D)) : Rat(1);
    return S;
}

Scalars<Cyc> cyclo_scalars(const WeightParams& p, int ell) {
    if (ell < 1) throw ConfigError("ell must be positive");
    Scalars<Cyc> S;
    int D = p.D();
    S.D = D;
    auto ctx = cyclo_ctx(2 * ell * D);
    S.s = Cyc::zeta_pow(ctx, D / 2);
    S.P1 = Cyc::zeta_pow(ctx, xexp(p.w1, D));
    S.P2 = Cyc::zeta_pow(ctx, xexp(p.w2, D));
    S.has_theta = p.theta.has_value();
    S.T = S.has_theta ? Cyc::zeta_pow(ctx, xexp(*p.theta, D)) : Cyc(1);
    return S;
}

Scalars<Rat> independent_scalars(const Rat& s, const Rat& P1, const Rat& P2, const Rat& T) {
    Scalars<Rat> S;
    S.s = s;
    S.P1 = P1;
    S.P2 = P2;
    S.T = T;
    S.has_theta = true;
    return S;
}

// ------------------------------------------------------------------ labels

bool Label::valid() const {
    if (n < 1) return false;
    if (b) return true;
    if (e1 * e1 != 1 || e2 * e2 != 1) return false;
    if (m < 0 || m > n - 1) return false;
    if ((m - (n - 1)) % 2 != 0) return false;
    return 2 * m + e1 + e2 >= 2;
}

static const char* sg(int e) { return e > 0 ? "+" : "-"; }

std::string Label::str() const {
    if (b) return "W" + std::to_string(n) + "(b)";
    return "W(" + std::to_string(n) + "," + std::to_string(m) + "," + sg(e1) + "," + sg(e2) + ")";
}

std::string Label::short_str() const {
    if (b) return "b";
    return "(" + std::to_string(m) + "," + sg(e1) + "," + sg(e2) + ")";
}

int parse_eps_pair(const std::string& s, int& e1, int& e2) {
    std::vector<int> signs;
    for (char c : s) {
        if (c == '+') signs.push_back(1);
        else if (c == '-') signs.push_back(-1);
        else if (c == ',' || c == ' ') continue;
        else throw ConfigError("bad sign pair: " + s);
    }
    if (signs.size() != 2) throw ConfigError("bad sign pair: " + s);
    e1 = signs[0];
    e2 = signs[1];
    return 0;
}

Label parse_label(int n, const std::string& s0) {
    std::string s;
    for (char c : s0)
        if (c != '(' && c != ')' && c != ' ') s += c;
    if (s == "b") return Label::bmod(n);
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ConfigError("bad label: " + s0);
    int m = std::stoi(s.substr(0, comma));
    int e1, e2;
    parse_eps_pair(s.substr(comma + 1), e1, e2);
    Label L = Label::dn(n, m, e1, e2);
    if (!L.valid()) throw ConfigError("invalid label " + L.str());
    return L;
}

int to_standard(const Label& L) {
    if (!L.valid()) throw ConfigError("invalid label " + L.str());
    if (L.b) return 0;
    // W^{(n,m)}_{e1,e2} = S_n(-e1 (m + (e1+e2)/2))
    return -L.e1 * (L.m + (L.e1 + L.e2) / 2);
}

Label from_standard(int n, int l) {
    if (l < -n || l > n - 1) throw ConfigError("standard label out of range");
    if (l == 0) return Label::bmod(n);
    int s = l > 0 ? 1 : -1;
    int al = l > 0 ? l : -l;
    bool opposite = ((n - l) % 2) != 0;
    Label L = opposite ? Label::dn(n, al, -s, s) : Label::dn(n, std::abs(l + 1), -s, -s);
    if (!L.valid()) throw ConfigError("no DN label for S_" + std::to_string(n) + "(" + std::to_string(l) + ")");
    return L;
}

std::vector<Label> dn_labels(int n) {
    std::vector<Label> out;
    for (int m = n - 1; m >= 0; m -= 2)
        for (int e1 : {1, -1})
            for (int e2 : {1, -1}) {
                Label L = Label::dn(n, m, e1, e2);
                if (L.valid()) out.push_back(L);
            }
    return out;
}

std::vector<Label> all_labels(int n) {
    auto v = dn_labels(n);
    v.push_back(Label::bmod(n));
    return v;
}

std::pair<Rat, Rat> weight_coords(const Label& L, const Rat& w1, const Rat& w2) {
    Rat t = L.m - L.e1 * w1 - L.e2 * w2;
    return {L.e1 * t, L.e2 * t};
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r.get_si();
}

long count_paths(int n, int h) {
    if ((n + h) % 2 != 0 || h > n || h < -n) return 0;
    return binom(n, (n + h) / 2);
}

long cell_dim(const Label& L) {
    if (L.b) return 1L << L.n;
    long s = 0;
    for (int h = L.m + 1; h <= L.n; ++h) s += count_paths(L.n, L.e1 > 0 ? h : -h);
    return s;
}

}  // namespace sbx
