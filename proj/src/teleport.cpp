#include "bellsim/teleport.hpp"

#include <cmath>
#include <stdexcept>

namespace bellsim {

namespace {

Complex frobenius_dot(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a.conjugate().cwiseProduct(b)).sum();
}

}  // namespace

int ManipulationSpec::spectator_levels() const {
    if (std::holds_alternative<SingleModeState>(input)) return 1;
    return std::get<EprMatrix>(input).level_cap() + 1;
}

int ManipulationSpec::kept_levels() const { return resource.max_kept_level() + 1; }

Eigen::MatrixXcd ManipulationSpec::input_matrix(int measured_cap) const {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(measured_cap + 1, spectator_levels());
    if (std::holds_alternative<SingleModeState>(input)) {
        const auto& st = std::get<SingleModeState>(input);
        for (int k = 0; k <= std::min(measured_cap, st.level_cap()); ++k) {
            c(k, 0) = st.amps(k);
        }
    } else {
        // c_in(k, j) = E_j at k = s(j): measured mode carries the permuted
        // index, spectator carries the stored level.
        const auto& st = std::get<EprMatrix>(input);
        for (int j = 0; j <= st.level_cap(); ++j) {
            const int k = st.kept_level(j);
            if (k <= measured_cap) c(k, j) = st.weights(j);
        }
    }
    return c;
}

int default_level_cap(int number_sum, ExpansionOrder order) {
    return number_sum + order.max_deta + 2;  // two guard levels
}

ManipulationSpec make_scissors(int number_sum, Complex alpha, int level_cap) {
    if (level_cap < 0) level_cap = default_level_cap(number_sum);
    return ManipulationSpec{
        ManipulationKind::scissors,
        coherent_state(alpha, level_cap),
        generalized_bell_resource(number_sum, 0, 1.0),
        make_builtin_bell_spec(number_sum),
    };
}

ManipulationSpec make_reversal(int number_sum, Complex alpha, int level_cap) {
    if (level_cap < 0) level_cap = default_level_cap(number_sum);
    return ManipulationSpec{
        ManipulationKind::reversal,
        coherent_state(alpha, level_cap),
        truncated_msv(number_sum),
        make_builtin_bell_spec(number_sum),
    };
}

ManipulationSpec make_generalized_bell_prep(int number_sum, double lambda,
                                            double lambda_prime, int level_cap) {
    if (level_cap < 0) level_cap = default_level_cap(number_sum);
    return ManipulationSpec{
        ManipulationKind::generalized_bell_prep,
        squeezed_vacuum(lambda, level_cap),
        squeezed_vacuum(lambda_prime, level_cap),
        make_builtin_bell_spec(number_sum),
    };
}

ManipulationSpec make_msv_prep(int number_sum, double lambda, int level_cap) {
    if (level_cap < 0) level_cap = default_level_cap(number_sum);
    if (lambda <= 0.0) throw std::invalid_argument("msv preparation needs lambda > 0");
    return ManipulationSpec{
        ManipulationKind::msv_prep,
        generalized_bell_resource(number_sum, 0, 1.0 / lambda),
        squeezed_vacuum(lambda, level_cap),
        make_builtin_bell_spec(number_sum),
    };
}

ManipulationSpec make_msv_prep_swapped(int number_sum, double lambda, int level_cap) {
    if (level_cap < 0) level_cap = default_level_cap(number_sum);
    if (lambda <= 0.0) throw std::invalid_argument("msv preparation needs lambda > 0");
    return ManipulationSpec{
        ManipulationKind::custom,
        squeezed_vacuum(lambda, level_cap),
        generalized_bell_resource(number_sum, 0, 1.0 / lambda),
        make_builtin_bell_spec(number_sum),
    };
}

Eigen::MatrixXcd transform_matrix(const ManipulationSpec& spec,
                                  const NumberDistribution& dist) {
    const int sector = total_photons(dist);
    const BCoefficients& bc = spec.bell.b_for_sector(sector);
    const Eigen::VectorXcd b = bc.amplitudes_for(dist);

    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(spec.kept_levels(), sector + 1);
    for (int k = 0; k <= sector; ++k) {
        const int l = sector - k;  // resource measured level
        if (l > spec.resource.level_cap()) continue;
        const Complex e = spec.resource.weights(l);
        if (e == Complex{}) continue;
        t(spec.resource.kept_level(l), k) = e * b(k);
    }
    return t;
}

Eigen::MatrixXcd outcome_amplitudes(const ManipulationSpec& spec,
                                    const NumberDistribution& dist) {
    const int sector = total_photons(dist);
    return transform_matrix(spec, dist) * spec.input_matrix(sector);
}

Eigen::MatrixXcd ideal_output(const ManipulationSpec& spec) {
    const Eigen::MatrixXcd psi = outcome_amplitudes(spec, spec.bell.count_pattern());
    const double norm = psi.norm();
    if (norm < 1e-14) {
        throw std::domain_error("degenerate manipulation: ideal outcome has zero amplitude");
    }
    return psi / norm;
}

BivariatePoly fidelity_expansion(const ManipulationSpec& spec, ExpansionOrder order) {
    const int nt = spec.bell.number_sum();
    const Eigen::MatrixXcd psi = outcome_amplitudes(spec, spec.bell.count_pattern());
    const double target_norm_sq = psi.squaredNorm();
    if (target_norm_sq < 1e-28) {
        throw std::domain_error("degenerate manipulation: ideal outcome has zero amplitude");
    }

    BivariatePoly overlap_sum(order);  // Tr[rho_out |psi><psi|] / e^{-M nu}
    BivariatePoly trace_sum(order);    // Tr[rho_out] / e^{-M nu}
    for (int sector = sector_range_min(nt, order); sector <= sector_range_max(nt, order);
         ++sector) {
        const BCoefficients& bc = spec.bell.b_for_sector(sector);
        const Eigen::MatrixXcd c_in = spec.input_matrix(sector);
        for (const auto& dist : bc.dists) {
            const Eigen::MatrixXcd c_out = transform_matrix(spec, dist) * c_in;
            const double norm_sq = c_out.squaredNorm();
            if (norm_sq == 0.0) continue;
            const SectorProbability sp = click_pattern_probability(dist, nt, order);
            trace_sum += sp.poly * Complex(norm_sq, 0.0);
            overlap_sum += sp.poly * Complex(std::norm(frobenius_dot(c_out, psi)), 0.0);
        }
    }
    return poly_div(overlap_sum, trace_sum * Complex(target_norm_sq, 0.0));
}

double success_probability(const ManipulationSpec& spec, const DetectorNoise& noise,
                           int sector_cap) {
    const int nt = spec.bell.number_sum();
    if (sector_cap < 0) sector_cap = sector_range_max(nt, ExpansionOrder{});
    double total = 0.0;
    for (int sector = 0; sector <= sector_cap; ++sector) {
        const BCoefficients& bc = spec.bell.b_for_sector(sector);
        const Eigen::MatrixXcd c_in = spec.input_matrix(sector);
        for (const auto& dist : bc.dists) {
            const Eigen::MatrixXcd c_out = transform_matrix(spec, dist) * c_in;
            const double norm_sq = c_out.squaredNorm();
            if (norm_sq == 0.0) continue;
            total += click_pattern_probability_numeric(dist, nt, noise) * norm_sq;
        }
    }
    return total;
}

}  // namespace bellsim
