#include "eos/mms_solution.hpp"

#include <cmath>
#include <numbers>

namespace eos {

Jet ArctanGaussian::eval(double x, double t) const {
    const double k = 2.0 * amplitude / std::numbers::pi;
    const double b2 = b * b;
    const double s = b2 * t * t;
    const double a = std::atan(s);
    const double da = 2.0 * b2 * t / (1.0 + s * s);
    const double dda = 2.0 * b2 * (1.0 - 3.0 * s * s) / ((1.0 + s * s) * (1.0 + s * s));

    const double u = x - x_o + beta * (t - t_s);
    const double e = std::exp(-alpha * u * u);
    const double eu = -2.0 * alpha * u * e;
    const double euu = (4.0 * alpha * alpha * u * u - 2.0 * alpha) * e;

    Jet r;
    r.f = k * a * e;
    r.x = k * a * eu;
    r.xx = k * a * euu;
    r.t = k * (da * e + a * beta * eu);
    r.xt = k * (da * eu + a * beta * euu);
    r.tt = k * (dda * e + 2.0 * da * beta * eu + a * beta * beta * euu);
    return r;
}

Jet Gaussian2D::eval(double x, double t) const {
    const double sx = delta_x * delta_x;
    const double st = delta_t * delta_t;
    const double dx = x - x_c;
    const double dt = t - t_c;
    const double g = amplitude * std::exp(-dx * dx / sx - dt * dt / st);
    const double p = -2.0 * dx / sx;
    const double q = -2.0 * dt / st;
    Jet r;
    r.f = g;
    r.x = p * g;
    r.t = q * g;
    r.xt = p * q * g;
    r.xx = (p * p - 2.0 / sx) * g;
    r.tt = (q * q - 2.0 / st) * g;
    return r;
}

MMSSolution1 MMSSolution1::figure_family() {
    MMSSolution1 s;
    s.phi = {1.0, 1.0, 4.0, 4.0, 6.0, 1.0};
    s.j = {1.0, 1.1, 1.2, 0.3, 0.32};
    s.rho = {1.0, 1.3, 1.3, 1.0, 0.33};
    return s;
}

MMSSolution1 MMSSolution1::zero() { return {}; }

MMSSolution2 MMSSolution2::figure_family() {
    MMSSolution2 s;
    s.phi = {1.0, 1.0, 4.0, 4.0, 6.0, 1.0};
    s.psi = {1.0, 1.0, 4.0, 4.0, 6.0, 1.0};
    s.j = {1.0, 1.1, 1.2, 0.3, 0.32};
    s.rho = {1.0, 1.3, 1.3, 1.0, 0.33};
    return s;
}

MMSSolution2 MMSSolution2::zero() { return {}; }

SourceTerms1 ResidualSources1::operator()(double x, double t) const {
    const Jet p = exact_.phi.eval(x, t);
    const Jet j = exact_.j.eval(x, t);
    const Jet r = exact_.rho.eval(x, t);
    const double c = mat_.c1;
    const double resp = mat_.alpha - mat_.beta * r.f;

    SourceTerms1 g;
    g.g1 = p.t - c * p.x - j.f;
    g.g2 = r.t + j.x;
    g.g3 = j.t - resp * p.f + mat_.gamma * j.f;
    g.g1_x = p.xt - c * p.xx - j.x;
    g.g1_t = p.tt - c * p.xt - j.t;
    g.g2_t = r.tt + j.xt;
    g.g3_x = j.xt + mat_.beta * r.x * p.f - resp * p.x + mat_.gamma * j.x;
    return g;
}

SourceTerms2 ResidualSources2::operator()(double x, double t) const {
    const Jet p = exact_.phi.eval(x, t);
    const Jet q = exact_.psi.eval(x, t);
    const Jet j = exact_.j.eval(x, t);
    const Jet r = exact_.rho.eval(x, t);
    const double mu = mat_.mu1;
    const double nu = mat_.nu1;
    const double resp = mat_.alpha - mat_.beta * r.f;

    SourceTerms2 g;
    g.g1 = p.t - mu * q.x - j.f;
    g.g2 = q.t - nu * p.x;
    g.g3 = r.t + j.x;
    g.g4 = j.t - resp * p.f + mat_.gamma * j.f;
    g.g1_x = p.xt - mu * q.xx - j.x;
    g.g1_t = p.tt - mu * q.xt - j.t;
    g.g2_x = q.xt - nu * p.xx;
    g.g2_t = q.tt - nu * p.xt;
    g.g3_t = r.tt + j.xt;
    g.g4_x = j.xt + mat_.beta * r.x * p.f - resp * p.x + mat_.gamma * j.x;
    return g;
}

}  // namespace eos
