// Independent brute-force verification path: dense operator construction
// at fixed numeric noise, bypassing the polynomial machinery, for
// cross-validation of the detector POM, confidence and fidelity.

#pragma once

#include <Eigen/Dense>

#include "bellsim/detector.hpp"
#include "bellsim/teleport.hpp"

namespace bellsim {

struct DenseOperator {
    int n_max = 0;          // highest number-sum sector included
    Eigen::MatrixXcd mat;   // two-mode sector basis, see two_mode_index
};

inline int oracle_default_sector_cap(int number_sum) { return number_sum + 6; }

// Bell-detector POM assembled numerically, exponential prefactors exact.
DenseOperator dense_gamma(const BellSpec& bell, const DetectorNoise& noise, int n_max);

// Tr[Gamma |d><d|] / Tr[Gamma] over the truncated space.
double dense_confidence(const BellSpec& bell, const DetectorNoise& noise, int n_max);

// Direct numeric evaluation of the three fidelity traces, no series.
double dense_fidelity(const ManipulationSpec& spec, const DetectorNoise& noise, int n_max);

}  // namespace bellsim
