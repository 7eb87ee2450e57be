#include "bellsim/oracle.hpp"

#include <cmath>

namespace bellsim {

DenseOperator dense_gamma(const BellSpec& bell, const DetectorNoise& noise, int n_max) {
    const int dim = two_mode_dim(n_max);
    DenseOperator op;
    op.n_max = n_max;
    op.mat = Eigen::MatrixXcd::Zero(dim, dim);
    for (int sector = 0; sector <= n_max; ++sector) {
        const BCoefficients& bc = bell.b_for_sector(sector);
        for (size_t row = 0; row < bc.dists.size(); ++row) {
            const double p = click_pattern_probability_numeric(bc.dists[row],
                                                               bell.number_sum(), noise);
            if (p == 0.0) continue;
            for (int kp = 0; kp <= sector; ++kp) {
                for (int k = 0; k <= sector; ++k) {
                    op.mat(two_mode_index(sector, kp), two_mode_index(sector, k)) +=
                        p * std::conj(bc.b(row, kp)) * bc.b(row, k);
                }
            }
        }
    }
    return op;
}

double dense_confidence(const BellSpec& bell, const DetectorNoise& noise, int n_max) {
    const DenseOperator gamma = dense_gamma(bell, noise, n_max);
    const int nt = bell.number_sum();
    Eigen::VectorXcd d_embedded = Eigen::VectorXcd::Zero(gamma.mat.rows());
    for (int k = 0; k <= nt; ++k) d_embedded(two_mode_index(nt, k)) = bell.target().d(k);
    const double numerator = (d_embedded.adjoint() * gamma.mat * d_embedded)(0).real();
    return numerator / gamma.mat.trace().real();
}

double dense_fidelity(const ManipulationSpec& spec, const DetectorNoise& noise, int n_max) {
    const int nt = spec.bell.number_sum();
    const Eigen::MatrixXcd psi = outcome_amplitudes(spec, spec.bell.count_pattern());
    const double target_norm_sq = psi.squaredNorm();

    double overlap_sum = 0.0;
    double trace_sum = 0.0;
    for (int sector = 0; sector <= n_max; ++sector) {
        const BCoefficients& bc = spec.bell.b_for_sector(sector);
        const Eigen::MatrixXcd c_in = spec.input_matrix(sector);
        for (const auto& dist : bc.dists) {
            const Eigen::MatrixXcd c_out = transform_matrix(spec, dist) * c_in;
            const double norm_sq = c_out.squaredNorm();
            if (norm_sq == 0.0) continue;
            const double p = click_pattern_probability_numeric(dist, nt, noise);
            trace_sum += p * norm_sq;
            overlap_sum += p * std::norm((c_out.conjugate().cwiseProduct(psi)).sum());
        }
    }
    return overlap_sum / (trace_sum * target_norm_sq);
}

}  // namespace bellsim
