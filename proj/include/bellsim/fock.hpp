// Fock-space bookkeeping: photon-number distributions over modes, sector
// enumeration, two-mode number-phase Bell bases and the number-sum /
// phase-difference operators used for definitional self-tests.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bellsim/poly.hpp"

namespace bellsim {

using NumberDistribution = std::vector<int>;

int total_photons(const NumberDistribution& dist);

// All weak compositions of `photons` into `modes` parts, each exactly once,
// in descending lexicographic order: (N,0,...,0) first, (0,...,0,N) last.
// The order is part of the contract; coefficient tables indexed by
// distribution rely on it.
std::vector<NumberDistribution> enumerate_sector(int modes, int photons);

// Binomial C(n, k) as double; exact for the small arguments used here.
double binomial(int n, int k);
double factorial(int n);

// Amplitudes d_k of a two-mode number-sum Bell state
// sum_k d_k |N-k>|k>, with d_k proportional to r^k omega^{-mk},
// omega = exp(i 2 pi / (N+1)), normalized to unit length.
struct BellAmplitudes {
    int number_sum = 0;   // N
    int phase_index = 0;  // m
    double scale = 1.0;   // r
    Eigen::VectorXcd d;   // length N+1, unit norm
};

BellAmplitudes bell_amplitudes(int number_sum, int phase_index, double scale = 1.0);

// Pegg-Barnett phase state amplitudes over |0>..|N>:  omega^{mn}/sqrt(N+1).
Eigen::VectorXcd phase_state(int number_cap, int phase_index);

// Two-mode sector basis |(N,k)> = |N-k>|k>, flattened with N ascending and
// k ascending inside each sector.
int two_mode_dim(int n_max);
int two_mode_index(int number_sum, int k);

// Number-sum operator N1 + N2 on the truncated two-mode space.
Eigen::MatrixXcd build_number_sum_operator(int n_max);

// Phase-difference operator, block diagonal in number-sum; within sector N
// its eigenvectors are the number-phase Bell states with eigenvalues
// 2 pi m / (N+1).
Eigen::MatrixXcd build_phase_difference_operator(int n_max);

}  // namespace bellsim
