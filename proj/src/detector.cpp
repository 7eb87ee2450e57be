#include "bellsim/detector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bellsim {

DetectorNoise::DetectorNoise(double eta_in, double nu_in) : eta(eta_in), nu(nu_in) {
    if (eta < 0.0 || eta > 1.0) throw std::invalid_argument("quantum efficiency outside [0,1]");
    if (nu < 0.0) throw std::invalid_argument("negative dark count");
}

BivariatePoly pd_pom_diagonal(int count, int photons, ExpansionOrder order) {
    if (photons < 0) throw std::invalid_argument("negative photon number");
    BivariatePoly p(order);
    if (count == 0) {
        p.add_coeff(photons, 0, 1.0);
        return p;
    }
    if (count == 1) {
        if (photons == 0) {
            p.add_coeff(0, 1, 1.0);  // dark count only
            return p;
        }
        // deta^{n-1} [n (1 - deta) + nu deta]
        p.add_coeff(photons - 1, 0, static_cast<double>(photons));
        p.add_coeff(photons, 0, -static_cast<double>(photons));
        p.add_coeff(photons, 1, 1.0);
        return p;
    }
    throw std::invalid_argument("diagonal POM only defined for counts 0 and 1");
}

std::vector<double> pd_pom_general(int count, double eta, double nu, int photon_cap) {
    if (count < 0) throw std::invalid_argument("negative count");
    if (photon_cap < count) throw std::invalid_argument("photon cap below count");
    std::vector<double> diag(photon_cap + 1, 0.0);
    const double deta = 1.0 - eta;
    for (int n = 0; n <= photon_cap; ++n) {
        double acc = 0.0;
        for (int m = 0; m <= std::min(count, n); ++m) {
            acc += std::exp(-nu) * std::pow(nu, count - m) / factorial(count - m) *
                   binomial(n, m) * std::pow(eta, m) * std::pow(deta, n - m);
        }
        diag[n] = acc;
    }
    return diag;
}

double SectorProbability::eval(const DetectorNoise& noise) const {
    return std::exp(-mode_count * noise.nu) *
           poly.eval(noise.deta(), noise.nu).real();
}

SectorProbability click_pattern_probability(const NumberDistribution& dist,
                                            int number_sum, ExpansionOrder order) {
    const int m = static_cast<int>(dist.size());
    if (m < number_sum) throw std::invalid_argument("fewer modes than expected counts");
    SectorProbability sp{BivariatePoly::constant(order, 1.0), m};
    for (int i = 0; i < m; ++i) {
        sp.poly = poly_mul(sp.poly, pd_pom_diagonal(i < number_sum ? 1 : 0, dist[i], order));
    }
    return sp;
}

double click_pattern_probability_numeric(const NumberDistribution& dist,
                                         int number_sum, const DetectorNoise& noise) {
    const int m = static_cast<int>(dist.size());
    if (m < number_sum) throw std::invalid_argument("fewer modes than expected counts");
    const double deta = noise.deta();
    double p = 1.0;
    for (int i = 0; i < m; ++i) {
        const int n = dist[i];
        if (i < number_sum) {
            // e^-nu deta^{n-1} [n (1-deta) + nu deta]
            const double core = (n == 0)
                ? noise.nu
                : std::pow(deta, n - 1) * (n * (1.0 - deta) + noise.nu * deta);
            p *= std::exp(-noise.nu) * core;
        } else {
            p *= std::exp(-noise.nu) * std::pow(deta, n);
        }
    }
    return p;
}

BellSpec::BellSpec(BellAmplitudes target, Interferometer itf)
    : target_(std::move(target)), itf_(std::move(itf)) {
    if (itf_.modes < target_.number_sum) {
        throw std::invalid_argument("detector has fewer modes than expected photon counts");
    }
    if (std::abs(target_.d.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("target amplitudes must be unit norm");
    }
    check_selectivity();
}

NumberDistribution BellSpec::count_pattern() const {
    NumberDistribution n(itf_.modes, 0);
    for (int i = 0; i < target_.number_sum; ++i) n[i] = 1;
    return n;
}

const BCoefficients& BellSpec::b_for_sector(int sector) const {
    if (sector >= static_cast<int>(b_cache_.size())) {
        for (int s = static_cast<int>(b_cache_.size()); s <= sector; ++s) {
            b_cache_.push_back(compute_b_coefficients(itf_, s));
        }
    }
    return b_cache_[sector];
}

void BellSpec::check_selectivity() {
    // B[n_cnt] must be proportional to conj(d): the count pattern fires on
    // the target component only.
    const BCoefficients bc = compute_b_coefficients(itf_, target_.number_sum);
    const Eigen::VectorXcd b_cnt = bc.amplitudes_for(count_pattern());
    const Complex g = target_.d.dot(b_cnt.conjugate());  // d^dag conj(b) -> scale
    const Eigen::VectorXcd residual = b_cnt - std::conj(g) * target_.d.conjugate();
    selectivity_residual_ = residual.cwiseAbs().maxCoeff();
    if (selectivity_residual_ > 1e-10) {
        throw std::invalid_argument(
            "selectivity violated: count-pattern amplitudes are not proportional "
            "to the target conjugate");
    }
}

BellSpec make_builtin_bell_spec(int number_sum, int phase_index) {
    Interferometer itf = builtin_detector(number_sum);
    BellAmplitudes target = bell_amplitudes(number_sum, phase_index);
    if (phase_index != 0) {
        // Phase shift a_2 -> omega^m a_2 ahead of the network turns the
        // phase-m target into the stored m = 0 detector; equivalently the
        // second row of U picks up omega^{-m}.
        const double arg = -2.0 * std::numbers::pi * phase_index / (number_sum + 1);
        Eigen::MatrixXcd u = itf.unitary;
        u.row(1) *= std::polar(1.0, arg);
        itf = Interferometer(itf.modes, u);
    }
    return BellSpec(std::move(target), std::move(itf));
}

const BivariatePoly& KMatrix::at(int kp, int k) const {
    return entries[static_cast<size_t>(kp) * (sector + 1) + k];
}

Eigen::MatrixXcd KMatrix::eval(const DetectorNoise& noise) const {
    Eigen::MatrixXcd out(sector + 1, sector + 1);
    const double pref = std::exp(-mode_count * noise.nu);
    for (int kp = 0; kp <= sector; ++kp) {
        for (int k = 0; k <= sector; ++k) {
            out(kp, k) = pref * at(kp, k).eval(noise.deta(), noise.nu);
        }
    }
    return out;
}

int sector_range_min(int number_sum, ExpansionOrder order) {
    return std::max(0, number_sum - order.max_nu);
}

int sector_range_max(int number_sum, ExpansionOrder order) {
    return number_sum + order.max_deta;
}

std::vector<KMatrix> build_k_matrices(const BellSpec& bell, ExpansionOrder order) {
    std::vector<KMatrix> out;
    const int nt = bell.number_sum();
    for (int sector = sector_range_min(nt, order); sector <= sector_range_max(nt, order);
         ++sector) {
        KMatrix km;
        km.sector = sector;
        km.mode_count = bell.modes();
        km.order = order;
        km.entries.assign(static_cast<size_t>(sector + 1) * (sector + 1),
                          BivariatePoly(order));
        const BCoefficients& bc = bell.b_for_sector(sector);
        for (size_t row = 0; row < bc.dists.size(); ++row) {
            const SectorProbability sp =
                click_pattern_probability(bc.dists[row], nt, order);
            for (int kp = 0; kp <= sector; ++kp) {
                for (int k = 0; k <= sector; ++k) {
                    const Complex w = std::conj(bc.b(row, kp)) * bc.b(row, k);
                    if (w == Complex{}) continue;
                    km.entries[static_cast<size_t>(kp) * (sector + 1) + k] +=
                        sp.poly * w;
                }
            }
        }
        out.push_back(std::move(km));
    }
    return out;
}

double ideal_success_probability(const BellSpec& bell) {
    const BCoefficients& bc = bell.b_for_sector(bell.number_sum());
    const Eigen::VectorXcd b_cnt = bc.amplitudes_for(bell.count_pattern());
    // |B[n_cnt] . d|^2 with u.v = sum conj(u_k) v_k
    const Complex overlap = b_cnt.dot(bell.target().d);
    return std::norm(overlap);
}

BivariatePoly confidence_expansion(const BellSpec& bell, ExpansionOrder order) {
    const int nt = bell.number_sum();
    BivariatePoly numerator(order);
    BivariatePoly denominator(order);

    for (int sector = sector_range_min(nt, order); sector <= sector_range_max(nt, order);
         ++sector) {
        const BCoefficients& bc = bell.b_for_sector(sector);
        for (size_t row = 0; row < bc.dists.size(); ++row) {
            const SectorProbability sp =
                click_pattern_probability(bc.dists[row], nt, order);
            // Tr[Gamma]: sum_k |B_k[n]|^2 over every sector in range.
            double weight = 0.0;
            for (int k = 0; k <= sector; ++k) weight += std::norm(bc.b(row, k));
            denominator += sp.poly * Complex(weight, 0.0);
            // <d|Gamma|d>: only the target sector holds the target state.
            if (sector == nt) {
                Complex amp{};
                for (int k = 0; k <= sector; ++k) amp += bc.b(row, k) * bell.target().d(k);
                numerator += sp.poly * Complex(std::norm(amp), 0.0);
            }
        }
    }
    return poly_div(numerator, denominator);
}

}  // namespace bellsim
