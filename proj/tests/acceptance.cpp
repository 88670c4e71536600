// Acceptance gate: one criterion per line, exact verdicts, wall-clock caps
// where stated. Exit code 0 only when every criterion passes.

#include <cstdio>

#include "plie/suites.hpp"

using namespace plie;

namespace {

struct Criterion {
    const char* id;
    const char* suite;
    const char* summary;
    double time_cap_s;  // 0 = no cap
};

const Criterion kCriteria[] = {
    {"criterion-1", "examples",
     "named examples reproduce their stated facts (derived algebras not [p]-ideals, "
     "psi strictly above phi, restrictability verdicts, p-normality verdicts, (n,q) values)",
     30.0},
    {"criterion-2", "lemmas",
     "exhaustive lemma suite over every restricted algebra of dim <= 3 over GF(2) and "
     "dim <= 2 over GF(3), all p-operations",
     600.0},
    {"criterion-3", "projectors",
     "projectors exist, recursion matches the brute-force covering definition, primitive "
     "complement description, conjugacy, operation-independence",
     600.0},
    {"criterion-4", "formations",
     "closure checks for the residually defined formations, the supersoluble class and the "
     "eigenvalue classes; abelian-residual characterization",
     0.0},
    {"criterion-5", "cohomology",
     "vanishing on primitive quotients, complement and conjugacy witnesses, first-cohomology "
     "vanishing in covering situations",
     0.0},
    {"criterion-6", "modules",
     "tensor/hom hypercentrality, the central-eccentric decomposition, irreducible modules "
     "over subnormal members",
     0.0},
    {"criterion-7", "intravariance",
     "normalizers of covering subalgebras of [p]-ideals supplement the ideal",
     0.0},
    {"criterion-8", "envelopes",
     "envelope certificates on the soluble sample, the minimal envelope of Q, primitivity "
     "transfer, enveloped-class closure",
     600.0},
    {"criterion-9", "explus",
     "the tensor-product split extension is primitive and avoids both locally defined "
     "formations at p = 3",
     0.0},
};

}  // namespace

int main() {
    suites::Options opt;
    bool all_pass = true;
    for (const Criterion& c : kCriteria) {
        suites::SuiteResult r = suites::run_suite(c.suite, opt);
        bool time_ok = c.time_cap_s == 0.0 || r.seconds <= c.time_cap_s;
        bool pass = r.pass() && time_ok;
        all_pass = all_pass && pass;
        std::printf("%s %s (%s): %u instances, %u checks, %zu failures, %.1f s%s\n",
                    pass ? "PASS" : "FAIL", c.id, c.suite, r.instances, r.checks,
                    r.failures.size(), r.seconds,
                    time_ok ? "" : " [over the time cap]");
        if (!pass) {
            std::printf("      %s\n", c.summary);
            size_t shown = 0;
            for (const auto& f : r.failures) {
                if (++shown > 10) break;
                std::printf("      [%s] %s %s\n", f.instance.c_str(), f.law.c_str(),
                            f.detail.c_str());
            }
        }
    }
    return all_pass ? 0 : 1;
}
