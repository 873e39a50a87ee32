#include "eos/incident.hpp"

#include <algorithm>

namespace eos {

double characteristic_integral(const SourceSpec& source, double a1, double c0, double t0, double t,
                               const QuadratureOptions& opt) {
    if (source.is_zero() || t <= t0) {
        return 0.0;
    }
    const double lo = std::max(a1, source.x_lo);
    const double hi = std::min(source.x_hi, a1 + c0 * (t - t0));
    if (!(hi > lo)) {
        return 0.0;
    }
    return integrate_midpoint([&](double x) { return source(x, t - (x - a1) / c0); }, lo, hi, opt);
}

double phi_a1_model1(const SourceSpec& source, const Material1& mat, double a1, double t0, double t,
                     const QuadratureOptions& opt) {
    return characteristic_integral(source, a1, mat.c0, t0, t, opt) / mat.c0;
}

FieldPair incident_pair(const SourceSpec& source, const Material2& mat, double a1, double t0, double t,
                        const QuadratureOptions& opt) {
    const double c0 = mat.c0();
    const double integral = characteristic_integral(source, a1, c0, t0, t, opt);
    return {integral / (2.0 * c0), mat.nu0 * integral / (2.0 * c0 * c0)};
}

}  // namespace eos
