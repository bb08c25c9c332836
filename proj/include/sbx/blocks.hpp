// Block classification of b'_n and b^x_n from the master equations, the
// homomorphism rules and globalisation/localisation.
#pragma once

#include "sbx/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sbx {

enum class MasterEq { W1W2Neg, W1Neg, W2Neg, Trivial, W1W2Pos, W1Pos, W2Pos, Impossible };
std::string master_name(MasterEq e);

struct MasterSolution {
    MasterEq eq;
    Label a, b;
    Rat residue;  // value of the congruence's left side minus right side
};

// x(L) = -m + e1 w1 + e2 w2
Rat weight_x(const Label& L, const Rat& w1, const Rat& w2);
// a == b mod 2 ell (ell = 0: equality); rationals
bool congruent(const Rat& a, const Rat& b, int ell);

std::vector<MasterSolution> master_solutions(const Label& a, const Label& b, const Rat& w1, const Rat& w2, int ell);

// Existence of a nonzero homomorphism source -> target by one of the four
// hom rules.  Returns the rule id or nullopt.
std::optional<std::string> hom_exists(const Label& src, const Label& dst, const Rat& w1, const Rat& w2, int ell);
// Pairs where no homomorphism exists in either direction (q generic, w
// positive integers, m < w1 + w2).
bool nohom_pair(const Label& a, const Label& b, const Rat& w1, const Rat& w2);

enum class Functor { G, Gp, F, Fp };
std::string functor_name(Functor f);
Functor parse_functor(const std::string& s);
// nullopt when F or F' annihilates the module
std::optional<Label> functor_map(Functor f, const Label& L);
// Weight change under G (w1 -> -w1-1) or G' (w2 -> -w2-1); F and F' invert them.
std::pair<Rat, Rat> functor_params(Functor f, const Rat& w1, const Rat& w2);

enum class Regime {
    Semisimple,
    RootNoneIntegral,
    W1Int,
    W2Int,
    W1PlusW2,
    W1MinusW2,
    BothSums,
    BothIntGeneric,
    BothIntGenericLoc,
    BothIntRoot
};
std::string regime_name(Regime r);
Regime regime_of(int n, const WeightParams& p);

// Throws ConfigError for the excluded loci ([w1], [w2], [w1+1], [w2+1] = 0).
void check_supported(const WeightParams& p);

BlockPartition classify(int n, const WeightParams& p);

struct CriticalWitness {
    Label label;
    int sign;  // theta == sign * x(label) mod 2 ell
};
// All DN labels of b_n witnessing criticality of theta.
std::vector<CriticalWitness> critical_witnesses(int n, const WeightParams& p);
// Smallest witness (by m) when theta is critical.
std::optional<CriticalWitness> critical_theta(int n, const WeightParams& p);

BlockPartition classify_bnx(int n, const WeightParams& p);

// Edges of the hom-rule graph at level n (used for the decomposition
// graphs and the localisation procedure).
struct HomEdge {
    Label src, dst;
    std::string rule;
};
std::vector<HomEdge> hom_graph(int n, const Rat& w1, const Rat& w2, int ell);

std::string plot_weights(int n, const WeightParams& p, const BlockPartition& P);

}  // namespace sbx
