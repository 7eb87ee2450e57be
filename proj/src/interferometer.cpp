#include "bellsim/interferometer.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bellsim {

namespace {

constexpr double kUnitaryTol = 1e-10;

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
    if (u.rows() != u.cols()) return false;
    const Eigen::MatrixXcd gram = u.adjoint() * u;
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return (gram - eye).cwiseAbs().maxCoeff() <= tol;
}

double sqrt_dist_factorial(const NumberDistribution& dist) {
    double f = 1.0;
    for (int n : dist) f *= factorial(n);
    return std::sqrt(f);
}

}  // namespace

Interferometer::Interferometer(int modes_in, Eigen::MatrixXcd u)
    : modes(modes_in), unitary(std::move(u)) {
    if (modes < 2) throw std::invalid_argument("interferometer needs at least two modes");
    if (unitary.rows() != modes || unitary.cols() != modes) {
        throw std::invalid_argument("interferometer matrix size mismatch");
    }
    if (!is_unitary(unitary, kUnitaryTol)) {
        throw std::invalid_argument("interferometer matrix is not unitary");
    }
}

Interferometer builtin_detector(int number_sum) {
    const double s2 = std::sqrt(2.0);
    if (number_sum == 1) {
        Eigen::MatrixXcd u(2, 2);
        u << 1.0 / s2, -1.0 / s2,
             1.0 / s2,  1.0 / s2;
        return Interferometer(2, u);
    }
    if (number_sum == 2) {
        const double s3 = std::sqrt(3.0);
        const double s5 = std::sqrt(5.0);
        const double s6 = std::sqrt(6.0);
        const Complex i1(0.0, 1.0);

        Eigen::MatrixXcd a(3, 3);
        a << 1.0 / s2, 0.0, -1.0 / s2,
             0.0,      1.0,  0.0,
             1.0 / s2, 0.0,  1.0 / s2;

        Eigen::MatrixXcd b(3, 3);
        b << 1.0, 0.0,                  0.0,
             0.0, 2.0 / s6,             -1.0 / s3,
             0.0, (1.0 + i1) / s6,      (1.0 + i1) / s3;

        Eigen::MatrixXcd c(3, 3);
        c << 1.0, 0.0,                          0.0,
             0.0, s3 * (3.0 + i1) / (4.0 * s5), -(3.0 + i1) / 4.0,
             0.0, s5 / (2.0 * s2),              s3 / (2.0 * s2);

        return Interferometer(3, a * b * c);
    }
    throw std::invalid_argument("no builtin detector for number-sum " +
                                std::to_string(number_sum));
}

Interferometer load_interferometer_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const int m = j.at("M").get<int>();
    const auto re = j.at("U_re").get<std::vector<std::vector<double>>>();
    const auto im = j.at("U_im").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(re.size()) != m || static_cast<int>(im.size()) != m) {
        throw std::invalid_argument("interferometer JSON: row count does not match M");
    }
    Eigen::MatrixXcd u(m, m);
    for (int r = 0; r < m; ++r) {
        if (static_cast<int>(re[r].size()) != m || static_cast<int>(im[r].size()) != m) {
            throw std::invalid_argument("interferometer JSON: column count does not match M");
        }
        for (int c = 0; c < m; ++c) u(r, c) = Complex(re[r][c], im[r][c]);
    }
    return Interferometer(m, u);
}

Interferometer load_interferometer_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open interferometer file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_interferometer_json(ss.str());
}

int BCoefficients::row_of(const NumberDistribution& dist) const {
    for (size_t i = 0; i < dists.size(); ++i) {
        if (dists[i] == dist) return static_cast<int>(i);
    }
    throw std::invalid_argument("distribution not in sector");
}

Eigen::VectorXcd BCoefficients::amplitudes_for(const NumberDistribution& dist) const {
    return b.row(row_of(dist)).transpose();
}

BCoefficients compute_b_coefficients(const Interferometer& itf, int sector) {
    if (sector < 0) throw std::invalid_argument("negative sector");
    const int m = itf.modes;
    const int n_photons = sector;

    BCoefficients out;
    out.sector = sector;
    out.dists = enumerate_sector(m, n_photons);
    out.b = Eigen::MatrixXcd::Zero(static_cast<int>(out.dists.size()), sector + 1);

    // Row polynomials P1 = sum_j conj(U_1j) x_j and P2 = sum_j conj(U_2j) x_j;
    // B_k[n] is the coefficient of prod_j x_j^{n_j} in P1^{N-k} P2^k times
    // sqrt(n!) / sqrt((N-k)! k!).
    for (int k = 0; k <= sector; ++k) {
        const int p1 = sector - k;
        const int p2 = k;
        const auto parts1 = enumerate_sector(m, p1);
        const auto parts2 = enumerate_sector(m, p2);
        const double denom = std::sqrt(factorial(p1) * factorial(p2));

        for (const auto& m1 : parts1) {
            Complex w1 = factorial(p1);
            for (int j = 0; j < m; ++j) {
                for (int t = 0; t < m1[j]; ++t) w1 *= std::conj(itf.unitary(0, j));
                w1 /= factorial(m1[j]);
            }
            if (w1 == Complex{}) continue;
            for (const auto& m2 : parts2) {
                Complex w2 = factorial(p2);
                for (int j = 0; j < m; ++j) {
                    for (int t = 0; t < m2[j]; ++t) w2 *= std::conj(itf.unitary(1, j));
                    w2 /= factorial(m2[j]);
                }
                if (w2 == Complex{}) continue;
                NumberDistribution n(m);
                for (int j = 0; j < m; ++j) n[j] = m1[j] + m2[j];
                const int row = out.row_of(n);
                out.b(row, k) += w1 * w2 * sqrt_dist_factorial(n) / denom;
            }
        }
    }
    return out;
}

BCoefficients compute_b_coefficients_tuple_sum(const Interferometer& itf, int sector) {
    if (sector < 0) throw std::invalid_argument("negative sector");
    const int m = itf.modes;

    BCoefficients out;
    out.sector = sector;
    out.dists = enumerate_sector(m, sector);
    out.b = Eigen::MatrixXcd::Zero(static_cast<int>(out.dists.size()), sector + 1);

    if (sector == 0) {
        out.b(0, 0) = 1.0;
        return out;
    }

    std::vector<int> tuple(sector, 0);  // odometer over {0..m-1}^N
    for (;;) {
        NumberDistribution n(m, 0);
        for (int j : tuple) ++n[j];
        const int row = out.row_of(n);
        for (int k = 0; k <= sector; ++k) {
            Complex w(1.0, 0.0);
            for (int l = 0; l < sector; ++l) {
                const int src = (l < sector - k) ? 0 : 1;
                w *= std::conj(itf.unitary(src, tuple[l]));
            }
            out.b(row, k) += w;
        }
        int pos = sector - 1;
        while (pos >= 0 && tuple[pos] == m - 1) tuple[pos--] = 0;
        if (pos < 0) break;
        ++tuple[pos];
    }

    for (int r = 0; r < out.b.rows(); ++r) {
        const double num = sqrt_dist_factorial(out.dists[r]);
        for (int k = 0; k <= sector; ++k) {
            out.b(r, k) *= num / std::sqrt(factorial(sector - k) * factorial(k));
        }
    }
    return out;
}

Eigen::Matrix2cd ElementaryOp::block() const {
    Eigen::Matrix2cd g;
    const Complex alpha = std::polar(std::cos(theta), phase_a);
    const Complex beta = std::polar(std::sin(theta), phase_b);
    g << alpha, beta,
         -std::conj(beta), std::conj(alpha);
    return g;
}

Eigen::MatrixXcd ReckDecomposition::reconstruct() const {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(modes, modes);
    for (const auto& op : rotations) {
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(modes, modes);
        const Eigen::Matrix2cd blk = op.block();
        g(op.mode_a, op.mode_a) = blk(0, 0);
        g(op.mode_a, op.mode_b) = blk(0, 1);
        g(op.mode_b, op.mode_a) = blk(1, 0);
        g(op.mode_b, op.mode_b) = blk(1, 1);
        u = u * g;
    }
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(modes, modes);
    for (int i = 0; i < modes; ++i) d(i, i) = std::polar(1.0, output_phases[i]);
    return u * d;
}

ReckDecomposition decompose_reck(const Interferometer& itf) {
    constexpr double kNullTol = 1e-13;
    const int m = itf.modes;
    Eigen::MatrixXcd work = itf.unitary;

    ReckDecomposition dec;
    dec.modes = m;

    // Null below-diagonal entries column by column with SU(2) Givens factors
    // applied from the left; the leftover diagonal is pure phase.
    for (int col = 0; col < m - 1; ++col) {
        for (int row = m - 1; row > col; --row) {
            const Complex a = work(row - 1, col);
            const Complex b = work(row, col);
            if (std::abs(b) <= kNullTol) {
                work(row, col) = 0.0;
                continue;
            }
            const double r = std::sqrt(std::norm(a) + std::norm(b));
            Eigen::Matrix2cd g;
            g << std::conj(a) / r, std::conj(b) / r,
                 -b / r,           a / r;
            work({row - 1, row}, Eigen::all) = g * work({row - 1, row}, Eigen::all);
            work(row, col) = 0.0;

            // Reconstruction factor is the inverse, also SU(2).
            const Eigen::Matrix2cd ginv = g.adjoint();
            ElementaryOp op;
            op.mode_a = row - 1;
            op.mode_b = row;
            op.theta = std::atan2(std::abs(ginv(0, 1)), std::abs(ginv(0, 0)));
            op.phase_a = std::abs(ginv(0, 0)) > kNullTol ? std::arg(ginv(0, 0)) : 0.0;
            op.phase_b = std::abs(ginv(0, 1)) > kNullTol ? std::arg(ginv(0, 1)) : 0.0;
            dec.rotations.push_back(op);
        }
    }

    dec.output_phases.resize(m);
    for (int i = 0; i < m; ++i) {
        const Complex d = work(i, i);
        dec.output_phases[i] = (std::abs(d - Complex(1.0, 0.0)) <= 1e-12) ? 0.0 : std::arg(d);
    }
    return dec;
}

}  // namespace bellsim
