// Exact scalars: polynomials over Q, rational functions in x (q = x^D),
// cyclotomic number fields, and quantum integers.
#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbx {

using Rat = mpq_class;
using Int = mpz_class;

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);
inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }
long rat_to_long(const Rat& r);  // requires integral value
// a/b in canonical form (mpq_class(a, b) does not reduce)
inline Rat frac(long a, long b) {
    Rat r(a, b);
    r.canonicalize();
    return r;
}
inline Rat half(long a) { return frac(a, 2); }
Int lcm_int(const Int& a, const Int& b);

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
class Poly {
public:
    std::vector<Rat> c;

    Poly() = default;
    explicit Poly(const Rat& k) { if (sgn(k)) c.push_back(k); }
    explicit Poly(std::vector<Rat> v) : c(std::move(v)) { trim(); }
    static Poly monomial(int deg, const Rat& k = 1);
    static Poly x_pow_minus_one(int deg);  // x^deg - 1

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    const Rat& lead() const { return c.back(); }
    Rat coef(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : Rat(0); }
    void trim();
    int low_order() const;  // smallest exponent with nonzero coefficient

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& k);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& k) { return a *= k; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly shifted_down(int k) const;  // divide by x^k (exact)
    Poly shifted_up(int k) const;
    Rat eval(const Rat& x) const;
    Poly monic() const;
    std::string str(const std::string& var = "x") const;
};

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly operator/(const Poly& a, const Poly& b);  // exact quotient, throws otherwise
Poly operator%(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic
Poly cyclotomic(int n);                   // Phi_n(x)

// Rational function x^e * num / den with num(0), den(0) nonzero,
// gcd(num, den) = 1 and den(0) = 1.
class RatFn {
public:
    RatFn() : den_(Rat(1)) {}
    RatFn(long k) : RatFn(Rat(k)) {}
    RatFn(const Rat& k);
    RatFn(Poly num, Poly den, long e = 0);
    static RatFn x_pow(long e);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    long xexp() const { return e_; }
    bool zero() const { return num_.zero(); }
    bool is_const() const { return e_ == 0 && num_.deg() <= 0 && den_.deg() == 0; }

    RatFn operator-() const;
    RatFn inv() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inv(); }
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }
    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.e_ == b.e_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    Rat eval(const Rat& x) const;
    RatFn reduced() const { return RatFn(num_, den_, e_); }
    std::string str() const;

private:
    Poly num_, den_;
    long e_ = 0;
    void canon();
};

inline bool is_zero(const RatFn& r) { return r.zero(); }

// Q(zeta_N): polynomials in x reduced modulo Phi_N(x).
struct CycloCtx {
    int N;
    Poly phi;
    std::vector<Poly> xpows;  // x^k mod phi for 0 <= k < N
};
std::shared_ptr<const CycloCtx> cyclo_ctx(int N);

class Cyc {
public:
    Cyc() = default;
    Cyc(long k) : Cyc(Rat(k)) {}
    Cyc(const Rat& k) : v_(k) {}
    Cyc(std::shared_ptr<const CycloCtx> ctx, Poly v);
    static Cyc zeta_pow(std::shared_ptr<const CycloCtx> ctx, long k);

    bool zero() const { return v_.zero(); }
    const Poly& value() const { return v_; }
    const std::shared_ptr<const CycloCtx>& ctx() const { return ctx_; }

    Cyc operator-() const;
    Cyc inv() const;
    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    Cyc& operator/=(const Cyc& o) { return *this = *this / o; }
    friend bool operator==(const Cyc& a, const Cyc& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }
    std::string str() const { return v_.str("z"); }

private:
    std::shared_ptr<const CycloCtx> ctx_;
    Poly v_;
};

inline bool is_zero(const Cyc& c) { return c.zero(); }
RatFn reduce_mod_cyclotomic(const RatFn& r, int N);  // numerator/denominator mod Phi_N
Cyc to_cyclo(const RatFn& r, const std::shared_ptr<const CycloCtx>& ctx);

inline std::string to_str(const Rat& r) { return rat_str(r); }
inline std::string to_str(const RatFn& r) { return r.str(); }
inline std::string to_str(const Cyc& c) { return c.str(); }

template <class K>
K power(K b, long e) {
    if (e < 0) { b = K(1) / b; e = -e; }
    K r(1);
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

// Where q lives.  Generic: symbolic; RationalPoint: x specialised to x0;
// RootOfUnity: q a primitive 2*ell-th root of unity.
struct RootSpec {
    enum Mode { Generic, RationalPoint, RootOfUnity } mode = Generic;
    Rat x0 = 0;
    int ell = 0;
    static RootSpec generic() { return {}; }
    static RootSpec point(const Rat& x) { RootSpec s; s.mode = RationalPoint; s.x0 = x; return s; }
    static RootSpec root(int l) { RootSpec s; s.mode = RootOfUnity; s.ell = l; return s; }
    int ell_or_zero() const { return mode == RootOfUnity ? ell : 0; }
    std::string str() const;
};

// [m] as a Laurent polynomial in q (D = 1) or in x with q = x^D.
RatFn qint(long m, int D = 1, bool half = false);
// [t] for rational t with D*t integral.
RatFn qbox(const Rat& t, int D);
// [w + a] for rational w.
RatFn box(const Rat& w, long a, int D);
bool qint_vanishes(const Rat& t, const RootSpec& spec);

// Multiplicative form  c * x^e * prod Phi_d(x)^k.  Quantum integers factor
// uniquely this way, so equality is structural.
class Factored {
public:
    Rat c = 1;
    long e = 0;
    std::map<int, long> phi;  // d -> exponent, no zero exponents

    static Factored zero_value();
    static Factored box(const Rat& t, int D);  // [t]
    bool zero() const { return sgn(c) == 0; }
    Factored& operator*=(const Factored& o);
    Factored& operator/=(const Factored& o);
    Factored pow(long k) const;
    friend Factored operator*(Factored a, const Factored& b) { return a *= b; }
    friend Factored operator/(Factored a, const Factored& b) { return a /= b; }
    friend bool operator==(const Factored& a, const Factored& b) {
        return a.c == b.c && a.e == b.e && a.phi == b.phi;
    }
    RatFn expand() const;
    bool vanishes_at_root(int N) const;  // x a primitive N-th root of unity
    std::string str() const;
};

// Exact polynomial in x^{-1}, x evaluated at rationals: helper for tests.
Rat eval_qint_at(long m, const Rat& q);

}  // namespace sbx
