// Teleportation-based number-state manipulation: per-outcome output
// amplitudes, the transform T = E R_N B, fidelity expansion in
// (deta, nu) and numeric success probability.
//
// Mode wiring (frozen): the Bell detector consumes the resource's measured
// mode on port 1 and the input's designated mode on port 2, so the
// B-coefficient index k equals the input's measured occupation.  The
// resource's kept mode, relabeled as output index n1 = s(N-k), is the
// first output axis; the input's spectator mode (two-mode inputs only) is
// the second.

#pragma once

#include <Eigen/Dense>
#include <variant>

#include "bellsim/detector.hpp"
#include "bellsim/sources.hpp"

namespace bellsim {

enum class ManipulationKind {
    scissors,
    reversal,
    generalized_bell_prep,
    msv_prep,
    custom,
};

struct ManipulationSpec {
    ManipulationKind kind = ManipulationKind::custom;
    // Single-mode inputs enter the detector whole; a two-mode input
    // (EprMatrix form) feeds its measured mode in and keeps the spectator.
    std::variant<SingleModeState, EprMatrix> input;
    EprMatrix resource;
    BellSpec bell;

    int spectator_levels() const;  // columns of the output amplitude grid
    int kept_levels() const;       // rows of the output amplitude grid
    // Input amplitude matrix c_in(k, j), rows = measured occupation.
    Eigen::MatrixXcd input_matrix(int measured_cap) const;
};

// Factories for the catalog manipulations.  level_cap bounds the stored
// levels of unbounded sources; coefficients inside the default expansion
// order are insensitive to levels beyond number_sum + max_deta, the extra
// two are guard levels (verified by tests).
int default_level_cap(int number_sum, ExpansionOrder order = {});

ManipulationSpec make_scissors(int number_sum, Complex alpha, int level_cap = -1);
ManipulationSpec make_reversal(int number_sum, Complex alpha, int level_cap = -1);
ManipulationSpec make_generalized_bell_prep(int number_sum, double lambda,
                                            double lambda_prime, int level_cap = -1);
ManipulationSpec make_msv_prep(int number_sum, double lambda, int level_cap = -1);
// Input and resource exchanged relative to msv_prep (squeezed vacuum in,
// generalized Bell resource).
ManipulationSpec make_msv_prep_swapped(int number_sum, double lambda, int level_cap = -1);

// T[n] = E R_N B[n]: rows = kept-mode occupation, columns = input measured
// occupation k = 0..N with N the outcome's photon total.
Eigen::MatrixXcd transform_matrix(const ManipulationSpec& spec,
                                  const NumberDistribution& dist);

// Output amplitude grid c_out[dist]: (kept occupation) x (spectator).
Eigen::MatrixXcd outcome_amplitudes(const ManipulationSpec& spec,
                                    const NumberDistribution& dist);

// Normalized amplitudes of the outcome at the designated count pattern.
// Throws std::domain_error when that amplitude vanishes.
Eigen::MatrixXcd ideal_output(const ManipulationSpec& spec);

// F = 1 - sum f^{(a,b)} deta^a nu^b, from the three trace sums with the
// exp(-M nu) prefactor cancelled in the ratio.
BivariatePoly fidelity_expansion(const ManipulationSpec& spec, ExpansionOrder order);

// exp(-M nu) sum_n P_PD[n] |c_out[n]|^2 evaluated numerically over sectors
// 0..sector_cap (default: number_sum + max_deta of the default order; the
// omitted tail scales as deta^{cap+1-N} times the input's high-level
// content).
double success_probability(const ManipulationSpec& spec, const DetectorNoise& noise,
                           int sector_cap = -1);

}  // namespace bellsim
