#pragma once

#include "eos/grid.hpp"

namespace eos {

/// Value and derivatives up to second order of a function of (x, t).
struct Jet {
    double f = 0.0;
    double x = 0.0;
    double t = 0.0;
    double xx = 0.0;
    double xt = 0.0;
    double tt = 0.0;
};

/// (2A/pi) atan(b^2 t^2) exp(-alpha (x - x_o + beta (t - t_s))^2)
struct ArctanGaussian {
    double amplitude = 0.0;
    double b = 1.0;
    double alpha = 1.0;
    double beta = 0.0;
    double x_o = 0.0;
    double t_s = 0.0;

    Jet eval(double x, double t) const;
};

/// A exp(-(x - x_c)^2 / dx^2 - (t - t_c)^2 / dt^2)
struct Gaussian2D {
    double amplitude = 0.0;
    double x_c = 0.0;
    double t_c = 0.0;
    double delta_x = 1.0;
    double delta_t = 1.0;

    Jet eval(double x, double t) const;
};

struct MMSSolution1 {
    ArctanGaussian phi;
    Gaussian2D j;
    Gaussian2D rho;

    static MMSSolution1 figure_family();
    static MMSSolution1 zero();
};

struct MMSSolution2 {
    ArctanGaussian phi;
    ArctanGaussian psi;
    Gaussian2D j;
    Gaussian2D rho;

    static MMSSolution2 figure_family();
    static MMSSolution2 zero();
};

/// Artificial sources of the extended model 1
///   phi_t = c1 phi_x + j + g1,  rho_t = -j_x + g2,  j_t = f + g3
/// together with the derivatives entering the second-order step.
struct SourceTerms1 {
    double g1 = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;
    double g1_x = 0.0;
    double g1_t = 0.0;
    double g2_t = 0.0;
    double g3_x = 0.0;
};

/// Artificial sources of the extended model 2
///   phi_t = mu1 psi_x + j + g1,  psi_t = nu1 phi_x + g2,
///   rho_t = -j_x + g3,           j_t = f + g4.
struct SourceTerms2 {
    double g1 = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;
    double g4 = 0.0;
    double g1_x = 0.0;
    double g1_t = 0.0;
    double g2_x = 0.0;
    double g2_t = 0.0;
    double g3_t = 0.0;
    double g4_x = 0.0;
};

class ResidualSources1 {
public:
    ResidualSources1(const MMSSolution1& exact, const Material1& mat) : exact_(exact), mat_(mat) {}
    SourceTerms1 operator()(double x, double t) const;
    const MMSSolution1& exact() const { return exact_; }

private:
    MMSSolution1 exact_;
    Material1 mat_;
};

class ResidualSources2 {
public:
    ResidualSources2(const MMSSolution2& exact, const Material2& mat) : exact_(exact), mat_(mat) {}
    SourceTerms2 operator()(double x, double t) const;
    const MMSSolution2& exact() const { return exact_; }

private:
    MMSSolution2 exact_;
    Material2 mat_;
};

inline ResidualSources1 residual_sources_m1(const MMSSolution1& exact, const Material1& mat) {
    return {exact, mat};
}
inline ResidualSources2 residual_sources_m2(const MMSSolution2& exact, const Material2& mat) {
    return {exact, mat};
}

}  // namespace eos
