// Optical sources: coherent states, two-mode squeezed vacuum, generalized
// number-phase Bell states and truncated maximally squeezed vacuum, all in
// the permutation-structured amplitude-matrix form
//   |EPR> = sum_l E_l |l>_measured |s(l)>_kept.

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "bellsim/fock.hpp"

namespace bellsim {

struct SingleModeState {
    Eigen::VectorXcd amps;  // c_0 .. c_nmax

    int level_cap() const { return static_cast<int>(amps.size()) - 1; }
};

// c_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!), built iteratively so large
// caps stay stable.
SingleModeState coherent_state(Complex alpha, int level_cap);

// Two-mode state with one nonzero amplitude per measured level l.
// s is injective; weights are stored with the exact closed-form
// normalization, so the truncated norms fall short of one only by the
// documented geometric tail.
struct EprMatrix {
    std::vector<int> perm;      // s(l) for l = 0..level_cap
    Eigen::VectorXcd weights;   // E_l

    int level_cap() const { return static_cast<int>(weights.size()) - 1; }
    int kept_level(int l) const { return perm[l]; }
    int max_kept_level() const;
    // Inverse permutation: measured level with s(l) = kept, if any.
    std::optional<int> level_for_kept(int kept) const;
    double norm_sq() const { return weights.squaredNorm(); }
};

// s(l) = l, E_l = sqrt(1-lambda^2) lambda^l.  Throws for lambda outside [0,1).
EprMatrix squeezed_vacuum(double lambda, int level_cap);

// s(l) = N - l, E_l proportional to r^l omega^{-ml}, unit-normalized
// (anti-diagonal layout; levels above N vanish).
EprMatrix generalized_bell_resource(int number_sum, int phase_index, double scale);

// s(l) = l, E_l = 1/sqrt(N+1) for l <= N.
EprMatrix truncated_msv(int number_sum);

}  // namespace bellsim
