#include "sbx/exact.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace sbx {

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw ConfigError("empty rational");
    auto slash = t.find('/');
    auto ok = [](const std::string& u) {
        if (u.empty()) return false;
        size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
        if (i == u.size()) return false;
        for (; i < u.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(u[i]))) return false;
        return true;
    };
    auto strip = [](std::string u) { return (!u.empty() && u[0] == '+') ? u.substr(1) : u; };
    if (slash == std::string::npos) {
        if (!ok(t)) throw ConfigError("bad rational: " + s);
        return Rat(Int(strip(t)));
    }
    std::string a = t.substr(0, slash), b = t.substr(slash + 1);
    if (!ok(a) || !ok(b)) throw ConfigError("bad rational: " + s);
    Int den(strip(b));
    if (den == 0) throw ConfigError("zero denominator: " + s);
    Rat r(Int(strip(a)), den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

long rat_to_long(const Rat& r) {
    if (!is_integer(r)) throw ArithmeticError("expected integer, got " + r.get_str());
    return r.get_num().get_si();
}

Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// ---------------------------------------------------------------- Poly

Poly Poly::monomial(int deg, const Rat& k) {
    Poly p;
    if (sgn(k) == 0) return p;
    p.c.assign(deg + 1, Rat(0));
    p.c[deg] = k;
    return p;
}

Poly Poly::x_pow_minus_one(int deg) {
    Poly p = monomial(deg, 1);
    p.c[0] -= 1;
    p.trim();
    return p;
}

void Poly::trim() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

int Poly::low_order() const {
    for (size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i])) return static_cast<int>(i);
    return 0;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& a : r.c) a = -a;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Rat(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Rat(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& k) {
    if (sgn(k) == 0) { c.clear(); return *this; }
    for (auto& a : c) a *= k;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.zero() || b.zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    Rat t;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (sgn(a.c[i]) == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (sgn(b.c[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), a.c[i].get_mpq_t(), b.c[j].get_mpq_t());
            r.c[i + j] += t;
        }
    }
    r.trim();
    return r;
}

Poly Poly::shifted_down(int k) const {
    if (k < 0) return shifted_up(-k);
    if (k == 0) return *this;
    Poly r;
    if ((int)c.size() <= k) return r;
    r.c.assign(c.begin() + k, c.end());
    return r;
}

Poly Poly::shifted_up(int k) const {
    if (k <= 0) return shifted_down(-k);
    if (zero()) return *this;
    Poly r;
    r.c.assign(k, Rat(0));
    r.c.insert(r.c.end(), c.begin(), c.end());
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

Poly Poly::monic() const {
    if (zero()) return *this;
    Poly r = *this;
    Rat inv = 1 / lead();
    r *= inv;
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) == 0) continue;
        Rat a = c[i];
        if (!first) os << (sgn(a) > 0 ? " + " : " - ");
        else if (sgn(a) < 0) os << "-";
        if (!first || sgn(a) < 0) a = abs(a);
        first = false;
        if (i == 0) { os << a.get_str(); continue; }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.zero()) throw ArithmeticError("polynomial division by zero");
    q = Poly();
    r = a;
    if (r.deg() < b.deg()) return;
    q.c.assign(r.deg() - b.deg() + 1, Rat(0));
    Rat inv = 1 / b.lead();
    Rat t;
    while (!r.zero() && r.deg() >= b.deg()) {
        int s = r.deg() - b.deg();
        Rat k = r.lead() * inv;
        q.c[s] = k;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (sgn(b.c[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), k.get_mpq_t(), b.c[j].get_mpq_t());
            r.c[s + j] -= t;
        }
        r.trim();
    }
    q.trim();
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.zero()) throw ArithmeticError("inexact polynomial division");
    return q;
}

Poly operator%(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    return r;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly u = a.monic(), v = b.monic();
    while (!v.zero()) {
        Poly q, r;
        divmod(u, v, q, r);
        u = std::move(v);
        v = r.monic();
    }
    return u.monic();
}

Poly cyclotomic(int n) {
    static std::map<int, Poly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    Poly p = Poly::x_pow_minus_one(n);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = p / cyclotomic(d);
    std::lock_guard<std::mutex> lk(mu);
    cache[n] = p;
    return p;
}

// ---------------------------------------------------------------- RatFn

RatFn::RatFn(const Rat& k) : num_(k), den_(Rat(1)) {}

RatFn::RatFn(Poly num, Poly den, long e) : num_(std::move(num)), den_(std::move(den)), e_(e) {
    canon();
}

RatFn RatFn::x_pow(long e) {
    RatFn r(1);
    r.e_ = e;
    return r;
}

void RatFn::canon() {
    if (den_.zero()) throw ArithmeticError("rational function with zero denominator");
    if (num_.zero()) {
        den_ = Poly(Rat(1));
        e_ = 0;
        return;
    }
    int a = num_.low_order(), b = den_.low_order();
    if (a) num_ = num_.shifted_down(a);
    if (b) den_ = den_.shifted_down(b);
    e_ += a - b;
    if (den_.deg() > 0 && num_.deg() > 0) {
        Poly g = gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    Rat d0 = den_.c[0];
    if (d0 != 1) {
        Rat inv = 1 / d0;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn RatFn::inv() const {
    if (zero()) throw ArithmeticError("division by zero");
    RatFn r;
    r.num_ = den_;
    r.den_ = num_;
    r.e_ = -e_;
    Rat d0 = r.den_.c[0];
    Rat inv = 1 / d0;
    r.num_ *= inv;
    r.den_ *= inv;
    return r;
}

RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.zero() || b.zero()) return RatFn();
    RatFn r;
    r.e_ = a.e_ + b.e_;
    if (a.den_.deg() == 0 && b.den_.deg() == 0) {
        r.num_ = a.num_ * b.num_;
        r.den_ = Poly(Rat(1));
        return r;
    }
    Poly g1 = (a.num_.deg() > 0 && b.den_.deg() > 0) ? gcd(a.num_, b.den_) : Poly(Rat(1));
    Poly g2 = (b.num_.deg() > 0 && a.den_.deg() > 0) ? gcd(b.num_, a.den_) : Poly(Rat(1));
    Poly an = g1.deg() > 0 ? a.num_ / g1 : a.num_;
    Poly bd = g1.deg() > 0 ? b.den_ / g1 : b.den_;
    Poly bn = g2.deg() > 0 ? b.num_ / g2 : b.num_;
    Poly ad = g2.deg() > 0 ? a.den_ / g2 : a.den_;
    r.num_ = an * bn;
    r.den_ = ad * bd;
    Rat d0 = r.den_.c[0];
    if (d0 != 1) {
        Rat inv = 1 / d0;
        r.num_ *= inv;
        r.den_ *= inv;
    }
    return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    long e = std::min(a.e_, b.e_);
    Poly an = a.num_.shifted_up(static_cast<int>(a.e_ - e));
    Poly bn = b.num_.shifted_up(static_cast<int>(b.e_ - e));
    if (a.den_ == b.den_) return RatFn(an + bn, a.den_, e);
    Poly g = gcd(a.den_, b.den_);
    Poly ad = a.den_ / g, bd = b.den_ / g;
    return RatFn(an * bd + bn * ad, a.den_ * bd, e);
}

Rat RatFn::eval(const Rat& x) const {
    if (zero()) return 0;
    if (sgn(x) == 0 && e_ != 0) throw ArithmeticError("evaluation at x = 0");
    Rat d = den_.eval(x);
    if (sgn(d) == 0) throw ArithmeticError("evaluation at a pole");
    Rat v = num_.eval(x) / d;
    Rat xp = 1;
    Int xe;
    long k = e_ < 0 ? -e_ : e_;
    mpz_pow_ui(xe.get_mpz_t(), x.get_num().get_mpz_t(), k);
    Int xd;
    mpz_pow_ui(xd.get_mpz_t(), x.get_den().get_mpz_t(), k);
    xp = Rat(xe, xd);
    xp.canonicalize();
    return e_ >= 0 ? Rat(v * xp) : Rat(v / xp);
}

std::string RatFn::str() const {
    if (zero()) return "0";
    std::string n = num_.str();
    std::string s = (num_.c.size() > 1 ? "(" + n + ")" : n);
    if (e_ != 0) s += "*x^" + std::to_string(e_);
    if (den_.deg() > 0) s += "/(" + den_.str() + ")";
    return s;
}

// ---------------------------------------------------------------- Cyc

std::shared_ptr<const CycloCtx> cyclo_ctx(int N) {
    static std::map<int, std::shared_ptr<const CycloCtx>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<CycloCtx>();
    ctx->N = N;
    ctx->phi = cyclotomic(N);
    for (int k = 0; k < N; ++k) ctx->xpows.push_back(Poly::monomial(k) % ctx->phi);
    cache[N] = ctx;
    return ctx;
}

Cyc::Cyc(std::shared_ptr<const CycloCtx> ctx, Poly v) : ctx_(std::move(ctx)), v_(std::move(v)) {
    if (ctx_ && v_.deg() >= ctx_->phi.deg()) v_ = v_ % ctx_->phi;
}

Cyc Cyc::zeta_pow(std::shared_ptr<const CycloCtx> ctx, long k) {
    long N = ctx->N;
    k %= N;
    if (k < 0) k += N;
    Poly p = ctx->xpows[k];
    return Cyc(std::move(ctx), std::move(p));
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    r.v_ = -r.v_;
    return r;
}

static const std::shared_ptr<const CycloCtx>& pick(const Cyc& a, const Cyc& b) {
    if (a.ctx() && b.ctx() && a.ctx()->N != b.ctx()->N)
        throw ArithmeticError("mixing cyclotomic fields");
    return a.ctx() ? a.ctx() : b.ctx();
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    Cyc r(pick(a, b), a.v_ + b.v_);
    return r;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    return Cyc(pick(a, b), a.v_ * b.v_);
}

Cyc Cyc::inv() const {
    if (zero()) throw ArithmeticError("division by zero in cyclotomic field");
    if (v_.deg() == 0) return Cyc(ctx_, Poly(1 / v_.c[0]));
    if (!ctx_) throw ArithmeticError("cyclotomic element without context");
    // extended Euclid: s*v + t*phi = 1
    Poly r0 = ctx_->phi, r1 = v_;
    Poly s0, s1(Rat(1));
    while (!r1.zero()) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.deg() != 0) throw ArithmeticError("non-invertible cyclotomic element");
    Poly inv = s0 * Rat(1 / r0.c[0]);
    return Cyc(ctx_, inv);
}

RatFn reduce_mod_cyclotomic(const RatFn& r, int N) {
    auto ctx = cyclo_ctx(N);
    Cyc c = to_cyclo(r, ctx);
    return RatFn(c.value(), Poly(Rat(1)));
}

Cyc to_cyclo(const RatFn& r, const std::shared_ptr<const CycloCtx>& ctx) {
    if (r.zero()) return Cyc();
    Cyc n(ctx, r.num()), d(ctx, r.den());
    if (d.zero()) throw ArithmeticError("pole at the root of unity");
    return n / d * Cyc::zeta_pow(ctx, r.xexp());
}

std::string RootSpec::str() const {
    switch (mode) {
        case Generic: return "generic";
        case RationalPoint: return "x=" + x0.get_str();
        case RootOfUnity: return "ell=" + std::to_string(ell);
    }
    return "?";
}

// ---------------------------------------------------------------- boxes

RatFn qint(long m, int D, bool half) {
    if (half && D % 2) throw ConfigError("half-integer box needs even D");
    return qbox(Rat(m), D);
}

RatFn qbox(const Rat& t, int D) {
    Rat kd = t * D;
    if (!is_integer(kd)) throw ConfigError("box argument " + t.get_str() + " not representable with D=" + std::to_string(D));
    long k = rat_to_long(kd);
    if (k == 0) return RatFn();
    // (x^k - x^-k)/(x^D - x^-D) = x^{D-k} (x^{2k}-1)/(x^{2D}-1)
    long ak = k < 0 ? -k : k;
    Poly num = Poly::x_pow_minus_one(static_cast<int>(2 * ak));
    Poly den = Poly::x_pow_minus_one(2 * D);
    RatFn r(num, den, D - ak);
    return k < 0 ? -r : r;
}

RatFn box(const Rat& w, long a, int D) { return qbox(w + a, D); }

bool qint_vanishes(const Rat& t, const RootSpec& spec) {
    if (spec.mode == RootSpec::RootOfUnity) {
        Rat u = t / spec.ell;
        return is_integer(u);
    }
    if (spec.mode == RootSpec::RationalPoint) {
        // rational q is never a root of unity other than +-1
        Rat x = spec.x0;
        if (x == 1 || x == -1) return is_integer(t);  // degenerate
        return sgn(t) == 0;
    }
    return sgn(t) == 0;
}

Factored Factored::zero_value() {
    Factored f;
    f.c = 0;
    return f;
}

Factored Factored::box(const Rat& t, int D) {
    Rat kd = t * D;
    if (!is_integer(kd)) throw ConfigError("box argument " + t.get_str() + " not representable with D=" + std::to_string(D));
    long k = rat_to_long(kd);
    if (k == 0) return zero_value();
    Factored f;
    long ak = k < 0 ? -k : k;
    f.c = k < 0 ? -1 : 1;
    f.e = D - ak;
    for (long d = 1; d <= 2 * ak; ++d)
        if ((2 * ak) % d == 0) f.phi[static_cast<int>(d)] += 1;
    for (long d = 1; d <= 2 * D; ++d)
        if ((2 * D) % d == 0) f.phi[static_cast<int>(d)] -= 1;
    for (auto it = f.phi.begin(); it != f.phi.end();)
        it = it->second == 0 ? f.phi.erase(it) : std::next(it);
    return f;
}

Factored& Factored::operator*=(const Factored& o) {
    c *= o.c;
    if (sgn(c) == 0) { *this = zero_value(); return *this; }
    e += o.e;
    for (auto& [d, k] : o.phi) {
        long& v = phi[d];
        v += k;
        if (v == 0) phi.erase(d);
    }
    return *this;
}

Factored& Factored::operator/=(const Factored& o) {
    if (o.zero()) throw ArithmeticError("division by zero (factored)");
    return *this *= o.pow(-1);
}

Factored Factored::pow(long k) const {
    if (zero()) {
        if (k <= 0) throw ArithmeticError("zero to non-positive power");
        return *this;
    }
    Factored f;
    if (k >= 0) {
        mpz_pow_ui(f.c.get_num_mpz_t(), c.get_num_mpz_t(), k);
        mpz_pow_ui(f.c.get_den_mpz_t(), c.get_den_mpz_t(), k);
    } else {
        mpz_pow_ui(f.c.get_num_mpz_t(), c.get_den_mpz_t(), -k);
        mpz_pow_ui(f.c.get_den_mpz_t(), c.get_num_mpz_t(), -k);
    }
    f.c.canonicalize();
    f.e = e * k;
    if (k != 0)
        for (auto& [d, v] : phi) f.phi[d] = v * k;
    return f;
}

RatFn Factored::expand() const {
    if (zero()) return RatFn();
    Poly num(Rat(1)), den(Rat(1));
    for (auto& [d, k] : phi) {
        Poly p = cyclotomic(d);
        for (long i = 0; i < (k < 0 ? -k : k); ++i) (k > 0 ? num : den) = (k > 0 ? num : den) * p;
    }
    return RatFn(num * c, den, e);
}

bool Factored::vanishes_at_root(int N) const {
    if (zero()) return true;
    auto it = phi.find(N);
    return it != phi.end() && it->second > 0;
}

std::string Factored::str() const {
    if (zero()) return "0";
    std::ostringstream os;
    os << c.get_str();
    if (e) os << "*x^" << e;
    for (auto& [d, k] : phi) os << "*Phi" << d << "^" << k;
    return os.str();
}

Rat eval_qint_at(long m, const Rat& q) {
    if (m == 0) return 0;
    long am = m < 0 ? -m : m;
    Rat s = 0;
    Rat qi = 1 / q;
    for (long j = 0; j < am; ++j) {
        // q^{-am+1+2j}
        long ex = -am + 1 + 2 * j;
        Rat t = 1;
        Rat b = ex < 0 ? qi : q;
        for (long i = 0; i < (ex < 0 ? -ex : ex); ++i) t *= b;
        s += t;
    }
    return m < 0 ? -s : s;
}

}  // namespace sbx
