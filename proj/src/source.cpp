#include "eos/source.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eos {

double GaussianSource::operator()(double x, double t) const {
    const double dx = x - x_center;
    const double dt = t - t_center;
    return amplitude * std::exp(-alpha1 * dx * dx - beta1 * dt * dt);
}

TabulatedSource::TabulatedSource(std::vector<double> xs, std::vector<double> ts, std::vector<double> values)
    : xs_(std::move(xs)), ts_(std::move(ts)), values_(std::move(values)) {
    if (xs_.size() < 2 || ts_.size() < 2) {
        throw std::invalid_argument("tabulated source: need at least 2 x and 2 t samples");
    }
    if (values_.size() != xs_.size() * ts_.size()) {
        throw std::invalid_argument("tabulated source: value count does not match grid");
    }
    if (!std::is_sorted(xs_.begin(), xs_.end()) || !std::is_sorted(ts_.begin(), ts_.end()) ||
        std::adjacent_find(xs_.begin(), xs_.end()) != xs_.end() ||
        std::adjacent_find(ts_.begin(), ts_.end()) != ts_.end()) {
        throw std::invalid_argument("tabulated source: axes must be strictly increasing");
    }
}

TabulatedSource TabulatedSource::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("tabulated source: cannot open " + path);
    }
    std::string line;
    bool header_seen = false;
    std::map<std::pair<double, double>, double> cells;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            if (line != "x,t,value") {
                throw std::runtime_error("tabulated source: expected header 'x,t,value' in " + path);
            }
            header_seen = true;
            continue;
        }
        std::stringstream ss(line);
        std::string a, b, c;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c)) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 3 columns");
        }
        double x = 0, t = 0, v = 0;
        try {
            x = std::stod(a);
            t = std::stod(b);
            v = std::stod(c);
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed number");
        }
        if (!cells.emplace(std::make_pair(x, t), v).second) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": duplicate (x, t) pair");
        }
    }
    if (!header_seen) {
        throw std::runtime_error("tabulated source: missing header in " + path);
    }
    std::vector<double> xs, ts;
    for (const auto& [key, v] : cells) {
        xs.push_back(key.first);
        ts.push_back(key.second);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    if (cells.size() != xs.size() * ts.size()) {
        throw std::runtime_error("tabulated source: samples in " + path + " do not form a rectangular grid");
    }
    std::vector<double> values;
    values.reserve(cells.size());
    for (double x : xs) {
        for (double t : ts) {
            values.push_back(cells.at({x, t}));
        }
    }
    TabulatedSource table(std::move(xs), std::move(ts), std::move(values));
    table.origin_ = path;
    return table;
}

double TabulatedSource::operator()(double x, double t) const {
    if (x < xs_.front() || x > xs_.back() || t < ts_.front() || t > ts_.back()) {
        return 0.0;
    }
    auto bracket = [](const std::vector<double>& axis, double v) {
        auto it = std::upper_bound(axis.begin(), axis.end(), v);
        std::size_t hi = static_cast<std::size_t>(it - axis.begin());
        hi = std::clamp<std::size_t>(hi, 1, axis.size() - 1);
        return hi - 1;
    };
    const std::size_t ix = bracket(xs_, x);
    const std::size_t it = bracket(ts_, t);
    const double u = (x - xs_[ix]) / (xs_[ix + 1] - xs_[ix]);
    const double w = (t - ts_[it]) / (ts_[it + 1] - ts_[it]);
    const std::size_t nt = ts_.size();
    const double f00 = values_[ix * nt + it];
    const double f01 = values_[ix * nt + it + 1];
    const double f10 = values_[(ix + 1) * nt + it];
    const double f11 = values_[(ix + 1) * nt + it + 1];
    return (1 - u) * ((1 - w) * f00 + w * f01) + u * ((1 - w) * f10 + w * f11);
}

bool SourceSpec::is_zero() const {
    if (std::holds_alternative<std::monostate>(shape)) {
        return true;
    }
    if (const auto* g = std::get_if<GaussianSource>(&shape)) {
        return g->amplitude == 0.0;
    }
    return false;
}

double SourceSpec::operator()(double x, double t) const {
    if (x < x_lo || x > x_hi) {
        return 0.0;
    }
    return std::visit(
        [&](const auto& s) -> double {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, std::monostate>) {
                return 0.0;
            } else {
                return s(x, t);
            }
        },
        shape);
}

SourceSpec SourceSpec::none() { return {}; }

SourceSpec SourceSpec::gaussian(const GaussianSource& g) {
    if (!(g.alpha1 > 0.0) || !(g.beta1 >= 0.0)) {
        throw std::invalid_argument("gaussian source: alpha1 must be positive and beta1 non-negative");
    }
    const double half = 6.0 / std::sqrt(g.alpha1);
    return gaussian(g, g.x_center - half, g.x_center + half);
}

SourceSpec SourceSpec::gaussian(const GaussianSource& g, double x_lo, double x_hi) {
    if (!(x_lo < x_hi)) {
        throw std::invalid_argument("gaussian source: empty support");
    }
    SourceSpec s;
    s.shape = g;
    s.x_lo = x_lo;
    s.x_hi = x_hi;
    return s;
}

SourceSpec SourceSpec::tabulated(TabulatedSource table) {
    SourceSpec s;
    s.x_lo = table.x_min();
    s.x_hi = table.x_max();
    s.shape = std::move(table);
    return s;
}

}  // namespace eos
