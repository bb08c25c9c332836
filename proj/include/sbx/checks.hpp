// Verification suites shared by the acceptance runner and `sbx verify`.
#pragma once

#include "sbx/params.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sbx {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
    double seconds = 0;
};

// Collects failures; `fail` keeps the first few messages.
struct CheckLog {
    bool ok = true;
    int failures = 0;
    std::vector<std::string> notes;
    void fail(const std::string& msg);
    void expect(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
    std::string summary() const;
};

CheckResult run_check(const std::string& name, const std::function<void(CheckLog&)>& body);

// Named regime points for the oracle comparison.
struct RegimePoint {
    std::string name;
    WeightParams p;
    int nmax = 6;
};
std::vector<RegimePoint> oracle_points();
std::vector<WeightParams> generic_points();

void check_gram_golden(CheckLog& log);
void check_path_golden(CheckLog& log);
void check_closed_form(CheckLog& log, int nmax);
void check_central(CheckLog& log, int nmax, int points);
void check_reference_blocks(CheckLog& log);
// one line per point is appended to `lines`
void check_oracle_points(CheckLog& log, const std::vector<RegimePoint>& pts, std::vector<std::string>& lines,
                         double max_seconds);
void check_semisimple(CheckLog& log, int nmax);

void check_confluence(CheckLog& log, int stacks, int orders);
void check_associativity(CheckLog& log, int triples, int nmax);
void check_contravariance(CheckLog& log, int nmax);
void check_unitriangular(CheckLog& log, int nmax);
void check_functors(CheckLog& log, int nmax);
void check_alpha_refinement(CheckLog& log, int nmax);
void check_hom_oracle(CheckLog& log, int nmax);

}  // namespace sbx
