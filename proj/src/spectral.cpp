#include "eos/spectral.hpp"

#include <cmath>

#include "eos/errors.hpp"

namespace eos {

bool is_tridiagonal(const Eigen::MatrixXd& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (std::abs(i - j) > 1 && m(i, j) != 0.0) {
                return false;
            }
        }
    }
    return true;
}

Eigen::MatrixXd symmetrize_tridiagonal(const Eigen::MatrixXd& m) {
    const Eigen::Index n = m.rows();
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        b(i, i) = m(i, i);
    }
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        const double up = m(i, i + 1);
        const double low = m(i + 1, i);
        if (up == 0.0 || low == 0.0) {
            continue;
        }
        const double mag = std::sqrt(std::abs(up * low));
        b(i, i + 1) = std::copysign(mag, up);
        b(i + 1, i) = std::copysign(mag, low);
    }
    return b;
}

Eigen::MatrixXd balance(const Eigen::MatrixXd& m) {
    Eigen::MatrixXd a = m;
    const Eigen::Index n = a.rows();
    const double radix = 2.0;
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j != i) {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            }
            if (c == 0.0 || r == 0.0) {
                continue;
            }
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix * radix;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
    return a;
}

static double radius_of(const Eigen::MatrixXd& m) {
    if (m.size() == 0) {
        return 0.0;
    }
    if (!m.allFinite()) {
        throw EigenSolverError("matrix has non-finite entries");
    }
    if (m == m.transpose()) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) {
            throw EigenSolverError("symmetric eigenvalue solve failed");
        }
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    if (es.info() != Eigen::Success) {
        throw EigenSolverError("eigenvalue solve did not converge");
    }
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_radius(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) {
        throw EigenSolverError("spectral radius of a non-square matrix");
    }
    if (!m.allFinite()) {
        throw EigenSolverError("matrix has non-finite entries");
    }
    if (is_tridiagonal(m)) {
        return radius_of(symmetrize_tridiagonal(m));
    }
    return radius_of(balance(m));
}

double spectral_radius_direct(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) {
        throw EigenSolverError("spectral radius of a non-square matrix");
    }
    return radius_of(m);
}

}  // namespace eos
