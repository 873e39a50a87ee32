#include "eos/delay_buffer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eos {

DelayBuffer::DelayBuffer(double t0, double dt, std::size_t width, std::size_t capacity)
    : t0_(t0), dt_(dt), width_(width), capacity_(capacity) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("DelayBuffer: dt must be positive");
    }
    if (width == 0) {
        throw std::invalid_argument("DelayBuffer: width must be positive");
    }
    if (capacity_ != 0 && capacity_ < 3) {
        capacity_ = 3;
    }
    if (capacity_ != 0) {
        data_.resize(capacity_ * width_);
    }
}

double DelayBuffer::latest_time() const {
    if (count_ == 0) {
        throw std::out_of_range("DelayBuffer: empty");
    }
    return t0_ + static_cast<double>(count_ - 1) * dt_;
}

void DelayBuffer::append(std::span<const double> value) {
    if (value.size() != width_) {
        throw std::invalid_argument("DelayBuffer: sample width " + std::to_string(value.size()) +
                                    " does not match buffer width " + std::to_string(width_));
    }
    if (capacity_ == 0) {
        data_.insert(data_.end(), value.begin(), value.end());
    } else {
        const std::size_t slot = count_ % capacity_;
        std::copy(value.begin(), value.end(), data_.begin() + static_cast<std::ptrdiff_t>(slot * width_));
    }
    ++count_;
}

void DelayBuffer::append(double value) { append(std::span<const double>(&value, 1)); }

const double* DelayBuffer::row(std::size_t k) const {
    if (k >= count_) {
        throw std::out_of_range("DelayBuffer: sample index beyond history");
    }
    if (capacity_ == 0) {
        return data_.data() + k * width_;
    }
    if (count_ - k > capacity_) {
        throw std::out_of_range("DelayBuffer: sample " + std::to_string(k) + " already discarded");
    }
    return data_.data() + (k % capacity_) * width_;
}

std::span<const double> DelayBuffer::sample(std::size_t k) const { return {row(k), width_}; }

DelayBuffer::Stencil DelayBuffer::stencil(double t) const {
    Stencil s;
    if (t <= t0_) {
        return s;  // zero prehistory
    }
    if (count_ == 0) {
        throw std::out_of_range("DelayBuffer: query on empty history");
    }
    const double last = static_cast<double>(count_ - 1);
    const double k = (t - t0_) / dt_;
    // Rounding in t = t_{n+1} - delay may overshoot the newest sample by a few ulps.
    if (k > last + 1e-9) {
        throw std::out_of_range("DelayBuffer: query at t=" + std::to_string(t) +
                                " is beyond the latest sample");
    }
    if (count_ == 1) {
        s.count = 1;
        s.w[0] = 1.0;
        return s;
    }
    if (count_ == 2) {
        const double u = std::min(k, 1.0);
        s.count = 2;
        s.w[0] = 1.0 - u;
        s.w[1] = u;
        return s;
    }

    auto m = static_cast<std::size_t>(std::floor(k));
    m = std::min<std::size_t>(m, count_ - 2);
    const std::size_t first = (m == 0) ? 0 : m - 1;
    // Lagrange weights on nodes first, first+1, first+2 at local coordinate u.
    const double u = std::min(k, last) - static_cast<double>(first);
    s.first = first;
    s.count = 3;
    s.w[0] = 0.5 * (u - 1.0) * (u - 2.0);
    s.w[1] = -u * (u - 2.0);
    s.w[2] = 0.5 * u * (u - 1.0);
    return s;
}

double DelayBuffer::query(double t, std::size_t component) const {
    if (component >= width_) {
        throw std::out_of_range("DelayBuffer: component out of range");
    }
    const Stencil s = stencil(t);
    double v = 0.0;
    for (std::size_t q = 0; q < s.count; ++q) {
        v += s.w[q] * row(s.first + q)[component];
    }
    return v;
}

void DelayBuffer::query(double t, std::span<double> out) const {
    if (out.size() != width_) {
        throw std::invalid_argument("DelayBuffer: output width mismatch");
    }
    std::fill(out.begin(), out.end(), 0.0);
    const Stencil s = stencil(t);
    for (std::size_t q = 0; q < s.count; ++q) {
        const double* r = row(s.first + q);
        for (std::size_t c = 0; c < width_; ++c) {
            out[c] += s.w[q] * r[c];
        }
    }
}

std::size_t history_capacity(double max_delay, double dt) {
    return static_cast<std::size_t>(std::ceil(max_delay / dt)) + 4;
}

}  // namespace eos
