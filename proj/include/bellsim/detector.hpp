// Imperfect zero-one photon detector POM, the Bell-state-detector POM in
// sector-block form (K matrices), ideal success probability and the
// confidence expansion.
//
// Probability bookkeeping: every detector click pattern carries a global
// factor exp(-M nu) which is kept implicit and symbolic.  It cancels
// exactly in the confidence and fidelity ratios; absolute probabilities
// multiply it back numerically (SectorProbability::eval).

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bellsim/fock.hpp"
#include "bellsim/interferometer.hpp"
#include "bellsim/poly.hpp"

namespace bellsim {

struct DetectorNoise {
    double eta = 1.0;  // quantum efficiency in [0,1]
    double nu = 0.0;   // mean dark count, >= 0

    DetectorNoise() = default;
    DetectorNoise(double eta_in, double nu_in);
    double deta() const { return 1.0 - eta; }
};

// Polynomial part of <n|Pi(count)|n> for count in {0,1}; the factor
// exp(-nu) is implicit.
//   count 0:  deta^n
//   count 1:  deta^{n-1} [n (1-deta) + nu deta]   (n >= 1),  nu at n = 0.
BivariatePoly pd_pom_diagonal(int count, int photons, ExpansionOrder order);

// Numeric diagonal weights <n|Pi(count)|n> for n = 0..photon_cap at a fixed
// noise point, exponential prefactor included exactly.
std::vector<double> pd_pom_general(int count, double eta, double nu, int photon_cap);

// One click pattern probability with the exp(-M nu) prefactor implicit.
struct SectorProbability {
    BivariatePoly poly;
    int mode_count = 0;

    double eval(const DetectorNoise& noise) const;
};

// Probability that |n> produces the count pattern (1,..,1,0,..,0) with
// number_sum ones: product of the per-detector diagonals, truncated.
SectorProbability click_pattern_probability(const NumberDistribution& dist,
                                            int number_sum, ExpansionOrder order);

// Numeric version (exact at a noise point, prefactor included).
double click_pattern_probability_numeric(const NumberDistribution& dist,
                                         int number_sum, const DetectorNoise& noise);

// A Bell state detector: target amplitudes plus network geometry.
// Construction verifies the selectivity condition: within the target
// sector, B[n_cnt] must be proportional to conj(d) (tolerance 1e-10),
// i.e. the count pattern fires only through the target component.
class BellSpec {
public:
    BellSpec(BellAmplitudes target, Interferometer itf);

    const BellAmplitudes& target() const { return target_; }
    const Interferometer& interferometer() const { return itf_; }
    int number_sum() const { return target_.number_sum; }
    int modes() const { return itf_.modes; }

    NumberDistribution count_pattern() const;  // n_cnt
    const BCoefficients& b_for_sector(int sector) const;  // cached

    double selectivity_residual() const { return selectivity_residual_; }

private:
    BellAmplitudes target_;
    Interferometer itf_;
    double selectivity_residual_ = 0.0;
    mutable std::vector<BCoefficients> b_cache_;

    void check_selectivity();
};

// Builtin detectors measure the number-phase Bell state with number_sum 1
// or 2.  Nonzero phase index is realized by pre-rotating input mode 2 by
// omega^{-m}; the stored network then targets the phase-shifted state.
BellSpec make_builtin_bell_spec(int number_sum, int phase_index = 0);

// Matrix elements K_{k'k}(N) of the detector POM in sector N.
struct KMatrix {
    int sector = 0;
    int mode_count = 0;
    ExpansionOrder order;
    std::vector<BivariatePoly> entries;  // (N+1)^2 row-major

    const BivariatePoly& at(int kp, int k) const;
    Eigen::MatrixXcd eval(const DetectorNoise& noise) const;  // prefactor included
};

// Sector range covering every coefficient inside `order` exactly:
// max(0, N_t - max_nu) <= N <= N_t + max_deta.  A sector-N state needs
// N - N_t photon discounts or N_t - N dark counts, so sectors outside the
// range only produce discarded monomials.
int sector_range_min(int number_sum, ExpansionOrder order);
int sector_range_max(int number_sum, ExpansionOrder order);

std::vector<KMatrix> build_k_matrices(const BellSpec& bell, ExpansionOrder order);

// |B[n_cnt] . d|^2: success probability of the ideal measurement.
double ideal_success_probability(const BellSpec& bell);

// Confidence as a truncated series: C = 1 - sum q^{(a,b)} deta^a nu^b.
// Numerator restricted to the target sector, denominator summed over the
// sector range; the exp(-M nu) prefactors cancel in the ratio.
BivariatePoly confidence_expansion(const BellSpec& bell, ExpansionOrder order);

}  // namespace bellsim
