#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace eos {

/// Uniformly sampled time history of a fixed-width record (a scalar trace,
/// a boundary pair, or a nodal array).
///
/// Samples are taken at t0, t0 + dt, ...  Queries at t <= t0 return zero:
/// the fields vanish before the initial time.  Between samples the history
/// is reconstructed by 3-point Lagrange interpolation on {t^{m-1}, t^m,
/// t^{m+1}} with t^m <= t <= t^{m+1}; the first interval uses {t^0, t^1, t^2}.
/// With only two samples stored the reconstruction is linear.
///
/// A non-zero capacity turns the buffer into a ring that keeps the most
/// recent `capacity` samples.
class DelayBuffer {
public:
    DelayBuffer(double t0, double dt, std::size_t width, std::size_t capacity = 0);

    double t0() const { return t0_; }
    double dt() const { return dt_; }
    std::size_t width() const { return width_; }

    /// Total number of samples ever appended.
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    double latest_time() const;

    /// Throws std::invalid_argument when value.size() != width().
    void append(std::span<const double> value);
    void append(double value);

    /// One component of the interpolated record.  Throws std::out_of_range
    /// for queries past the latest sample or before the retained window.
    double query(double t, std::size_t component = 0) const;

    /// Whole interpolated record.
    void query(double t, std::span<double> out) const;

    /// Stored sample k (absolute index).
    std::span<const double> sample(std::size_t k) const;

private:
    struct Stencil {
        std::size_t first = 0;
        std::size_t count = 0;
        double w[3] = {0.0, 0.0, 0.0};
    };

    Stencil stencil(double t) const;
    const double* row(std::size_t k) const;

    double t0_;
    double dt_;
    std::size_t width_;
    std::size_t capacity_;
    std::size_t count_ = 0;
    std::vector<double> data_;
};

/// Ring capacity sufficient for delays up to `max_delay`.
std::size_t history_capacity(double max_delay, double dt);

}  // namespace eos
