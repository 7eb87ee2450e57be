// The M-port linear-optical network of the Bell state detector: unitary
// validation, output Fock amplitudes B_k[n] for each photon-number sector,
// and a triangular decomposition into two-mode elementary operations.
//
// Mode convention (frozen): the network acts as a_i = U_ij b_j on
// annihilation operators (Heisenberg picture), so creation operators
// transform with the conjugate, a_i^dag = sum_j conj(U_ij) b_j^dag.
// Signal ports are modes 1 and 2 (indices 0 and 1 here); ancillas enter
// in vacuum.  Sign or conjugation drift in this convention silently flips
// the phases of the B coefficients, so it is asserted by tests rather
// than left to documentation alone.

#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "bellsim/fock.hpp"

namespace bellsim {

struct Interferometer {
    int modes = 0;           // M
    Eigen::MatrixXcd unitary;  // M x M

    Interferometer() = default;
    Interferometer(int modes, Eigen::MatrixXcd u);  // validates unitarity to 1e-10
};

// The catalog detectors: the 50:50 beam splitter (number_sum 1, M = 2) and
// the three-factor M = 3 network for number_sum 2.  Other values throw.
Interferometer builtin_detector(int number_sum);

// JSON schema: {"M": int, "U_re": [[...]], "U_im": [[...]]}.
Interferometer load_interferometer_json(const std::string& text);
Interferometer load_interferometer_file(const std::string& path);

// Output amplitudes for one photon-number sector:
//   U |(N,k)> |vac> = sum_{n : total(n) = N} B_k[n] |n>.
// Rows follow enumerate_sector(M, N) order.
struct BCoefficients {
    int sector = 0;                           // N
    std::vector<NumberDistribution> dists;    // enumeration order
    Eigen::MatrixXcd b;                       // dists.size() x (N+1)

    const Eigen::MatrixXcd& matrix() const { return b; }
    // Row index of a distribution; throws if absent.
    int row_of(const NumberDistribution& dist) const;
    Eigen::VectorXcd amplitudes_for(const NumberDistribution& dist) const;
};

// Production path: multinomial expansion of the two row polynomials.
BCoefficients compute_b_coefficients(const Interferometer& itf, int sector);

// Oracle path: explicit sum over all M^N index tuples.  Kept independent of
// the production path; the two must agree (dual-route check).
BCoefficients compute_b_coefficients_tuple_sum(const Interferometer& itf, int sector);

// One SU(2) factor acting on the pair (mode_a, mode_b):
//   [ cos(theta) e^{i phase_a}        sin(theta) e^{i phase_b}  ]
//   [ -sin(theta) e^{-i phase_b}      cos(theta) e^{-i phase_a} ]
struct ElementaryOp {
    int mode_a = 0;
    int mode_b = 0;
    double theta = 0.0;
    double phase_a = 0.0;
    double phase_b = 0.0;

    Eigen::Matrix2cd block() const;
};

struct ReckDecomposition {
    int modes = 0;
    std::vector<ElementaryOp> rotations;   // applied left to right
    std::vector<double> output_phases;     // trailing diagonal

    Eigen::MatrixXcd reconstruct() const;
};

// Triangular nulling scheme; throws std::invalid_argument on a non-unitary
// input.  Identity propagates to an empty rotation list with zero phases.
ReckDecomposition decompose_reck(const Interferometer& itf);

}  // namespace bellsim
