#include "sbx/oracle.hpp"

namespace sbx {

namespace {

std::vector<Label> oracle_labels(int n, const WeightParams& p, const OracleOptions& opt) {
    auto L = dn_labels(n);
    if (p.theta && opt.include_b) L.push_back(Label::bmod(n));
    return L;
}

template <class K>
DeltaTuple<K> oracle_tuple(int n, const Scalars<K>& S) {
    BoxArg w1(0, 1), w2(0, 0, 1);
    if (is_zero(S.box(w1)) || is_zero(S.box(w2)))
        throw ConfigError("unsupported regime: [w1] or [w2] vanishes");
    return scheme_convert(n, S, Scheme::DN);
}

template <class F>
auto at_spec(const WeightParams& p, const Rat& x0, F&& f) {
    if (p.spec.mode == RootSpec::RootOfUnity) {
        auto S = cyclo_scalars(p, p.spec.ell);
        return f(S);
    }
    auto S = point_scalars(p, p.spec.mode == RootSpec::RationalPoint ? p.spec.x0 : x0);
    return f(S);
}

}  // namespace

BlockPartition linkage_blocks(int n, const WeightParams& p, const OracleOptions& opt) {
    if (n > opt.guard) throw ConfigError("oracle: n exceeds guard " + std::to_string(opt.guard));
    auto labels = oracle_labels(n, p, opt);
    auto run = [&](const Rat& x0) {
        return at_spec(p, x0, [&](auto& S) { return linkage_blocks_at(n, labels, oracle_tuple(n, S), p.str()); });
    };
    BlockPartition P = run(opt.x0a);
    if (p.spec.mode == RootSpec::Generic) {
        BlockPartition P2 = run(opt.x0b);
        if (!(P == P2)) throw ArithmeticError("oracle: partitions differ between the two base points");
    }
    return P;
}

int hom_dim(const Label& a, const Label& b, const WeightParams& p, const OracleOptions& opt) {
    if (a.n != b.n) throw ConfigError("hom_dim: labels of different n");
    if (a.n > opt.guard + 1) throw ConfigError("oracle: n exceeds guard");
    return at_spec(p, opt.x0a, [&](auto& S) {
        auto t = oracle_tuple(a.n, S);
        return hom_space(module_rep(a, t), module_rep(b, t)).dim;
    });
}

bool gram_rank_semisimple(int n, const WeightParams& p, const OracleOptions& opt) {
    if (n > opt.guard + 1) throw ConfigError("oracle: n exceeds guard");
    auto labels = oracle_labels(n, p, opt);
    return at_spec(p, opt.x0a, [&](auto& S) {
        auto t = oracle_tuple(n, S);
        for (auto& L : labels)
            if (!gram_rank_full(L, t)) return false;
        return true;
    });
}

}  // namespace sbx
