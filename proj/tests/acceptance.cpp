// Acceptance gate: one line per criterion, every comparison exact.
// Exit status 0 iff all criteria pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "parkpoly/checks.hpp"

using parkpoly::CheckResult;
using parkpoly::run_check;

namespace {

struct Criterion {
    int id;
    const char* title;
    std::vector<const char*> checks;
};

const std::vector<Criterion> criteria = {
    {1, "published normalized volume sequence (n = 1..9)", {"volume/published-sequence"}},
    {2,
     "five-way formula equivalence (n = 2..8) and permanent census (n = 2..5)",
     {"volume/five-way-equality", "volume/permanent-census"}},
    {3,
     "Ehrhart oracle equals closed form (n <= 4, a <= 3, b <= 2)",
     {"volume/ehrhart-oracle-grid"}},
    {4,
     "partial permutahedron closed forms equal the recursion (n <= 6, p <= n+3)",
     {"volume/bcc-conjecture"}},
    {5, "WZ telescoping identity and certificate (n = 2..20)", {"volume/wz-identity"}},
    {6,
     "counting formulas vs brute force (vertices, parking functions, f-vectors, Euler)",
     {"faces/vertex-count", "faces/parking-count", "faces/f-vector-oracle",
      "faces/euler-relation"}},
    {7, "facet census: n embedded PF copies, one permutahedron (n = 3, 4)",
     {"faces/facet-census"}},
    {8,
     "weakly increasing polytopes: dilate counts, Catalan points, n^(n-2) volume",
     {"weakly/wipf-ehrhart", "weakly/catalan-points", "weakly/wipf-volume"}},
    {9,
     "series spine: functional equation, volume EGF coefficients, c_k EGF",
     {"series/functional-equation", "series/fab-coefficients", "series/ck-egf"}},
    {10,
     "rational polytopes: vertex formulas vs dedupe oracle, b^(a-1) path count",
     {"rational/vertex-count-oracle", "rational/path-count"}},
};

}  // namespace

int main() {
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        bool pass = true;
        std::string detail;
        for (const char* name : c.checks) {
            const CheckResult r = run_check(name);
            if (!r.pass) {
                pass = false;
                detail += std::string(detail.empty() ? "" : "; ") + r.name + ": " + r.details;
            }
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2d [%s] %s (%.2fs)\n", c.id, pass ? "PASS" : "FAIL", c.title,
                    secs);
        if (!pass) {
            std::printf("              %s\n", detail.c_str());
            ++failures;
        }
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
