// Scratch exploration: compare computed expansions against reference tables
// under several candidate wirings. Not part of the shipped test suite.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "bellsim/detector.hpp"
#include "bellsim/oracle.hpp"
#include "bellsim/teleport.hpp"

using namespace bellsim;

namespace {

struct Table {
    std::string name;
    // rows a=0..4: [a][0] = f(a,0) (a=0 unused), [a][1] = f(a,1)
    double v[5][2];
};

void print_delta(const std::string& name, const BivariatePoly& metric,
                 const Table* ref) {
    std::printf("== %s ==\n", name.c_str());
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 1; ++b) {
            if (a == 0 && b == 0) continue;
            // metric = 1 - sum f^{ab} => f^{ab} = -coeff
            const double got = -metric.coeff(a, b).real();
            if (ref) {
                const double want = ref->v[a][b];
                const double diff = got - want;
                std::printf("  (%d,%d): got % .12g  want % .12g  %s\n", a, b, got, want,
                            std::abs(diff) <= 1e-9 ? "OK" : "MISMATCH");
            } else {
                std::printf("  (%d,%d): got % .12g\n", a, b, got);
            }
        }
    }
}

const Table kConfidence1{"conf1", {{0, 1}, {3, -4}, {-3, 5}, {1, -2}, {0, 0}}};
const Table kConfidence2{"conf2",
                         {{0, 7.0 / 3},
                          {28.0 / 9, -304.0 / 27},
                          {-1075.0 / 324, 15803.0 / 972},
                          {1883.0 / 1458, -23147.0 / 2916},
                          {-2029.0 / 26244, -19991.0 / 39366}}};

const Table kSc1{"sc1",
                 {{0, 1.0 / 8},
                  {9.0 / 16, 1.0 / 8},
                  {-27.0 / 64, 7.0 / 128},
                  {81.0 / 256, 41.0 / 256},
                  {-243.0 / 1024, 85.0 / 2048}}};
const Table kSc2{"sc2",
                 {{0, 7.0 / 17},
                  {483.0 / 1156, -4826.0 / 4913},
                  {1431.0 / 4624, 48021.0 / 78608},
                  {-235683.0 / 314432, 1276203.0 / 2672672},
                  {1443321.0 / 2515456, -36559049.0 / 21381376}}};
const Table kGb1{"gb1",
                 {{0, 32},
                  {1.0 / 8, 24},
                  {-1.0 / 256, 197.0 / 8},
                  {0, 1575.0 / 64},
                  {0, 1575.0 / 64}}};
const Table kGb2{"gb2",
                 {{0, 56},
                  {7.0 / 64, 175.0 / 4},
                  {-49.0 / 12286, 17143.0 / 384},
                  {343.0 / 7077888, 19736731.0 / 442368},
                  {0, 842106125.0 / 18874368}}};
const Table kMsv1{"msv1",
                  {{0, 0},
                   {1.0 / 8, 0},
                   {-1.0 / 256, -1.0 / 8},
                   {0, -7.0 / 64},
                   {0, -225.0 / 2048}}};
const Table kMsv2{"msv2",
                  {{0, 0},
                   {35.0 / 192, 0},
                   {-391.0 / 36864, -1351.0 / 4608},
                   {-77.0 / 786432, -107425.0 / 442368},
                   {8473.0 / 226492416, -4611707.0 / 18874368}}};

}  // namespace

int main() {
    const ExpansionOrder order{};

    // --- confidence (sanity anchor) ---
    print_delta("confidence N=1", confidence_expansion(make_builtin_bell_spec(1), order),
                &kConfidence1);
    print_delta("confidence N=2", confidence_expansion(make_builtin_bell_spec(2), order),
                &kConfidence2);

    // --- scissors (K=1 anchor) ---
    const Complex alpha(std::sqrt(3.0), 0.0);
    print_delta("scissors N=1", fidelity_expansion(make_scissors(1, alpha), order), &kSc1);
    print_delta("scissors N=2", fidelity_expansion(make_scissors(2, alpha), order), &kSc2);
    print_delta("reversal N=1 (= scissors?)",
                fidelity_expansion(make_reversal(1, alpha), order), &kSc1);

    // --- GB prep faithful ---
    print_delta("gb N=1 faithful lam=lam'=1/4",
                fidelity_expansion(make_generalized_bell_prep(1, 0.25, 0.25), order), &kGb1);
    print_delta("gb N=2 faithful",
                fidelity_expansion(make_generalized_bell_prep(2, 0.25, 0.25), order), &kGb2);

    // GB variants
    print_delta("gb N=1 vacuum-input (lam=0)",
                fidelity_expansion(make_generalized_bell_prep(1, 0.0, 0.25), order), &kGb1);
    print_delta("gb N=2 vacuum-input (lam=0)",
                fidelity_expansion(make_generalized_bell_prep(2, 0.0, 0.25), order), &kGb2);
    print_delta("gb N=1 swapped roles",
                fidelity_expansion(make_generalized_bell_prep(1, 0.25, 0.25), order), &kGb1);

    // --- MSV prep faithful and swapped ---
    print_delta("msv N=1 faithful", fidelity_expansion(make_msv_prep(1, 0.25), order),
                &kMsv1);
    print_delta("msv N=2 faithful", fidelity_expansion(make_msv_prep(2, 0.25), order),
                &kMsv2);
    print_delta("msv N=1 swapped", fidelity_expansion(make_msv_prep_swapped(1, 0.25), order),
                &kMsv1);
    print_delta("msv N=2 swapped", fidelity_expansion(make_msv_prep_swapped(2, 0.25), order),
                &kMsv2);

    // lambda-independence probe for GB
    for (double lam : {0.125, 0.25, 0.5}) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "gb N=1 lam=%g lam'=1/4", lam);
        print_delta(buf, fidelity_expansion(make_generalized_bell_prep(1, lam, 0.25), order),
                    nullptr);
    }

    // success probabilities at the ideal point
    const DetectorNoise ideal(1.0, 0.0);
    std::printf("p(1) = %.15g\n", ideal_success_probability(make_builtin_bell_spec(1)));
    std::printf("p(2) = %.15g\n", ideal_success_probability(make_builtin_bell_spec(2)));
    std::printf("P_GB(1) = %.6g\n",
                success_probability(make_generalized_bell_prep(1, 0.25, 0.25), ideal));
    std::printf("P_GB(2) = %.6g\n",
                success_probability(make_generalized_bell_prep(2, 0.25, 0.25), ideal));
    return 0;
}
