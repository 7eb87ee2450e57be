#include "bellsim/sources.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bellsim {

SingleModeState coherent_state(Complex alpha, int level_cap) {
    if (level_cap < 0) throw std::invalid_argument("negative level cap");
    SingleModeState st;
    st.amps.resize(level_cap + 1);
    st.amps(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n <= level_cap; ++n) {
        st.amps(n) = st.amps(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    }
    return st;
}

int EprMatrix::max_kept_level() const {
    int m = 0;
    for (int s : perm) m = std::max(m, s);
    return m;
}

std::optional<int> EprMatrix::level_for_kept(int kept) const {
    for (size_t l = 0; l < perm.size(); ++l) {
        if (perm[l] == kept) return static_cast<int>(l);
    }
    return std::nullopt;
}

EprMatrix squeezed_vacuum(double lambda, int level_cap) {
    if (lambda < 0.0 || lambda >= 1.0) {
        throw std::invalid_argument("squeezing parameter must lie in [0,1)");
    }
    if (level_cap < 0) throw std::invalid_argument("negative level cap");
    EprMatrix epr;
    epr.perm.resize(level_cap + 1);
    epr.weights.resize(level_cap + 1);
    const double norm = std::sqrt(1.0 - lambda * lambda);
    double w = norm;
    for (int l = 0; l <= level_cap; ++l) {
        epr.perm[l] = l;
        epr.weights(l) = w;
        w *= lambda;
    }
    return epr;
}

EprMatrix generalized_bell_resource(int number_sum, int phase_index, double scale) {
    const BellAmplitudes bell = bell_amplitudes(number_sum, phase_index, scale);
    EprMatrix epr;
    epr.perm.resize(number_sum + 1);
    epr.weights.resize(number_sum + 1);
    for (int l = 0; l <= number_sum; ++l) {
        epr.perm[l] = number_sum - l;
        epr.weights(l) = bell.d(l);
    }
    return epr;
}

EprMatrix truncated_msv(int number_sum) {
    if (number_sum < 0) throw std::invalid_argument("negative number-sum");
    EprMatrix epr;
    epr.perm.resize(number_sum + 1);
    epr.weights.resize(number_sum + 1);
    const double w = 1.0 / std::sqrt(number_sum + 1.0);
    for (int l = 0; l <= number_sum; ++l) {
        epr.perm[l] = l;
        epr.weights(l) = w;
    }
    return epr;
}

}  // namespace bellsim
