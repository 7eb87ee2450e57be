#include "bellsim/fock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bellsim {

int total_photons(const NumberDistribution& dist) {
    int total = 0;
    for (int n : dist) total += n;
    return total;
}

namespace {

void enumerate_rec(int modes, int photons, NumberDistribution& current,
                   std::vector<NumberDistribution>& out) {
    if (modes == 1) {
        current.push_back(photons);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int n = photons; n >= 0; --n) {
        current.push_back(n);
        enumerate_rec(modes - 1, photons - n, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<NumberDistribution> enumerate_sector(int modes, int photons) {
    if (modes < 1) throw std::invalid_argument("sector enumeration needs at least one mode");
    if (photons < 0) throw std::invalid_argument("negative photon number");
    std::vector<NumberDistribution> out;
    NumberDistribution current;
    current.reserve(modes);
    enumerate_rec(modes, photons, current, out);
    return out;
}

double factorial(int n) {
    if (n < 0) throw std::invalid_argument("negative factorial");
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double num = 1.0;
    for (int i = 0; i < k; ++i) num = num * (n - i) / (i + 1);
    return num;
}

BellAmplitudes bell_amplitudes(int number_sum, int phase_index, double scale) {
    if (number_sum < 0) throw std::invalid_argument("negative number-sum");
    if (phase_index < 0 || phase_index > number_sum) {
        throw std::invalid_argument("phase index out of range 0..N");
    }
    if (scale <= 0.0) throw std::invalid_argument("scale parameter must be positive");

    BellAmplitudes bell;
    bell.number_sum = number_sum;
    bell.phase_index = phase_index;
    bell.scale = scale;
    bell.d.resize(number_sum + 1);

    const double omega_arg = 2.0 * std::numbers::pi / (number_sum + 1);
    double norm_sq = 0.0;
    for (int k = 0; k <= number_sum; ++k) {
        const double mag = std::pow(scale, k);
        const double phase = -omega_arg * phase_index * k;
        bell.d(k) = std::polar(mag, phase);
        norm_sq += mag * mag;
    }
    bell.d /= std::sqrt(norm_sq);
    return bell;
}

Eigen::VectorXcd phase_state(int number_cap, int phase_index) {
    if (number_cap < 0) throw std::invalid_argument("negative number cap");
    if (phase_index < 0 || phase_index > number_cap) {
        throw std::invalid_argument("phase index out of range 0..N");
    }
    const double omega_arg = 2.0 * std::numbers::pi / (number_cap + 1);
    Eigen::VectorXcd v(number_cap + 1);
    for (int n = 0; n <= number_cap; ++n) {
        v(n) = std::polar(1.0 / std::sqrt(number_cap + 1.0), omega_arg * phase_index * n);
    }
    return v;
}

int two_mode_dim(int n_max) { return (n_max + 1) * (n_max + 2) / 2; }

int two_mode_index(int number_sum, int k) {
    return number_sum * (number_sum + 1) / 2 + k;
}

Eigen::MatrixXcd build_number_sum_operator(int n_max) {
    const int dim = two_mode_dim(n_max);
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    for (int N = 0; N <= n_max; ++N) {
        for (int k = 0; k <= N; ++k) {
            const int idx = two_mode_index(N, k);
            op(idx, idx) = static_cast<double>(N);
        }
    }
    return op;
}

Eigen::MatrixXcd build_phase_difference_operator(int n_max) {
    if (n_max < 0) throw std::invalid_argument("negative number cap");
    const int dim = two_mode_dim(n_max);
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    for (int N = 0; N <= n_max; ++N) {
        for (int m = 0; m <= N; ++m) {
            const BellAmplitudes bell = bell_amplitudes(N, m);
            const double eigenvalue = 2.0 * std::numbers::pi * m / (N + 1);
            for (int kp = 0; kp <= N; ++kp) {
                for (int k = 0; k <= N; ++k) {
                    op(two_mode_index(N, kp), two_mode_index(N, k)) +=
                        eigenvalue * bell.d(kp) * std::conj(bell.d(k));
                }
            }
        }
    }
    return op;
}

}  // namespace bellsim
