#pragma once

#include <vector>

namespace eos {

/// Model-1 fields at one time level.
struct State1 {
    std::vector<double> phi;
    std::vector<double> rho;
    std::vector<double> j;
    double phi_a0 = 0.0;
    double phi_a1 = 0.0;
    long n = 0;
    double t = 0.0;

    State1() = default;
    explicit State1(int size) : phi(size, 0.0), rho(size, 0.0), j(size, 0.0) {}
    int size() const { return static_cast<int>(phi.size()); }
};

/// Model-2 fields at one time level.
struct State2 {
    std::vector<double> phi;
    std::vector<double> psi;
    std::vector<double> rho;
    std::vector<double> j;
    double phi_a0 = 0.0;
    double psi_a0 = 0.0;
    double phi_a1 = 0.0;
    double psi_a1 = 0.0;
    long n = 0;
    double t = 0.0;

    State2() = default;
    explicit State2(int size) : phi(size, 0.0), psi(size, 0.0), rho(size, 0.0), j(size, 0.0) {}
    int size() const { return static_cast<int>(phi.size()); }
};

}  // namespace eos
