#pragma once

#include <string>
#include <variant>
#include <vector>

namespace eos {

/// j_s(x, t) = A exp(-alpha1 (x - x_o)^2 - beta1 (t - t_s)^2)
struct GaussianSource {
    double amplitude = 0.0;
    double x_center = 0.0;
    double alpha1 = 1.0;
    double t_center = 0.0;
    double beta1 = 1.0;

    double operator()(double x, double t) const;
};

/// Source sampled on a rectangular (x, t) grid, bilinear in between and zero
/// outside the sampled rectangle.
class TabulatedSource {
public:
    TabulatedSource(std::vector<double> xs, std::vector<double> ts, std::vector<double> values);

    /// Reads a CSV with header `x,t,value`; rows may come in any order but
    /// must cover every (x, t) pair of the grid exactly once.  Lines starting
    /// with '#' are ignored.  Throws std::runtime_error on malformed input.
    static TabulatedSource load_csv(const std::string& path);

    double operator()(double x, double t) const;
    double x_min() const { return xs_.front(); }
    double x_max() const { return xs_.back(); }
    const std::string& origin() const { return origin_; }

private:
    std::vector<double> xs_;
    std::vector<double> ts_;
    std::vector<double> values_;  // row-major in x: values_[ix * nt + it]
    std::string origin_;
};

/// External source driving the scattering problem.  `x_lo`/`x_hi` bound its
/// spatial support; quadratures never look outside it.
struct SourceSpec {
    std::variant<std::monostate, GaussianSource, TabulatedSource> shape;
    double x_lo = 0.0;
    double x_hi = 0.0;

    bool is_zero() const;
    double operator()(double x, double t) const;

    static SourceSpec none();
    /// Default support x_o +- 6 / sqrt(alpha1).
    static SourceSpec gaussian(const GaussianSource& g);
    static SourceSpec gaussian(const GaussianSource& g, double x_lo, double x_hi);
    static SourceSpec tabulated(TabulatedSource table);
};

}  // namespace eos
