#ifndef GRAPHCOMP_CIRCLE_MAP_HPP
#define GRAPHCOMP_CIRCLE_MAP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace graphcomp {

struct CircleMapParams {
    double omega = 0.0;  // externally applied frequency
    double K = 0.0;      // nonlinearity strength
    double theta0 = 0.0;
    int n_transient = 1000;
    int n_iter = 100000;
};

/// One step of the circle-map lift: theta + omega - (K/2pi) sin(2pi theta).
/// Unreduced; rotation numbers need the revolution count.
double circle_map_step(double theta, double omega, double K);

/// Average displacement per iterate after discarding the transient.
double rotation_number(const CircleMapParams& p);

struct LockReport {
    double rho = 0.0;
    bool locked = false;
    std::optional<int> p;
    std::optional<int> q;
    double epsilon = 1e-3;
};

/// Mode locking: the rotation number resists +-epsilon perturbations of
/// omega. When locked, reports the lowest-denominator rational p/q within
/// tol of rho (Stern-Brocot search, q <= q_max).
LockReport detect_lock(double omega, double K, double epsilon = 1e-3, double tol = 1e-4,
                       int q_max = 32, const CircleMapParams& base = {});

struct StaircasePoint {
    double omega;
    double K;
    double rho;
    bool locked;
    std::optional<int> p;
    std::optional<int> q;
};

std::vector<StaircasePoint> staircase_sweep(double K, double omega_min, double omega_max,
                                            int n_points, int n_iter = 100000,
                                            int n_transient = 1000);

/// CSV with header omega,K,rho,locked,p,q; 12 significant digits.
std::string staircase_csv(const std::vector<StaircasePoint>& points);

}  // namespace graphcomp

#endif
