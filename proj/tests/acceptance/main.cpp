// Acceptance runner: one PASS/FAIL line per criterion.  Exit status 1 if any fails.
#include "sbx/checks.hpp"

#include <cstdio>
#include <cstring>

using namespace sbx;

namespace {

int failed = 0;

void report(const std::string& id, const CheckResult& r, double limit = 0) {
    bool ok = r.ok && (limit <= 0 || r.seconds < limit);
    if (!ok) ++failed;
    std::printf("%s  %-4s %-62s %8.2fs", ok ? "PASS" : "FAIL", id.c_str(), r.name.c_str(), r.seconds);
    if (limit > 0) std::printf(" (limit %.0fs)", limit);
    if (!r.detail.empty()) std::printf("  [%s]", r.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    // --skip-oracle drops criterion 6 (the slow one)
    bool skip_oracle = argc > 1 && std::strcmp(argv[1], "--skip-oracle") == 0;

    report("1", run_check("W(5,2,-,-) Gram matrix and determinant", check_gram_golden), 1.0);
    report("2", run_check("W(5,2,-,-) path eigenvalues and their product", check_path_golden));
    report("3", run_check("closed form = direct det up to +-dL^a dR^b, n<=7",
                          [](CheckLog& l) { check_closed_form(l, 7); }),
           600);
    report("4", run_check("Z_n central, alpha I on cell modules, n<=4, 3 points",
                          [](CheckLog& l) { check_central(l, 4, 3); }));
    report("5", run_check("classify reproduces the reference partitions", check_reference_blocks));
    if (!skip_oracle) {
        std::vector<std::string> lines;
        auto r = run_check("classify / classify_bnx = linkage_blocks, n<=6",
                           [&](CheckLog& l) { check_oracle_points(l, oracle_points(), lines, 1800); });
        for (auto& s : lines) std::printf("      %s\n", s.c_str());
        report("6", r);
    }
    report("7", run_check("5 generic points: dets nonzero, oracle all singletons",
                          [](CheckLog& l) { check_semisimple(l, 6); }));
    report("8a", run_check("confluence: 200 stacks x 10 orders", [](CheckLog& l) { check_confluence(l, 200, 10); }));
    report("8b", run_check("associativity: 200 triples per n, n<=4",
                           [](CheckLog& l) { check_associativity(l, 200, 4); }));
    report("8c", run_check("contravariance of the form, n<=5", [](CheckLog& l) { check_contravariance(l, 5); }));
    report("8d", run_check("unitriangular change to the path basis, n<=6",
                           [](CheckLog& l) { check_unitriangular(l, 6); }));
    report("8e", run_check("F G = id and F' G' = id, n<=8", [](CheckLog& l) { check_functors(l, 8); }));
    report("8f", run_check("blocks refine equal alpha, n<=8", [](CheckLog& l) { check_alpha_refinement(l, 8); }));
    report("8g", run_check("hom rules give oracle dim>=1, nohom pairs give 0, n<=5",
                           [](CheckLog& l) { check_hom_oracle(l, 5); }));
    std::printf("%s: %d failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
