#include "graphcomp/circle_map.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace graphcomp {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double circle_map_step(double theta, double omega, double K) {
    return theta + omega - (K / kTwoPi) * std::sin(kTwoPi * theta);
}

double rotation_number(const CircleMapParams& p) {
    if (p.n_iter < 1) throw std::invalid_argument("rotation_number: n_iter must be >= 1");
    double theta = p.theta0;
    for (int i = 0; i < p.n_transient; ++i) theta = circle_map_step(theta, p.omega, p.K);
    double start = theta;
    for (int i = 0; i < p.n_iter; ++i) theta = circle_map_step(theta, p.omega, p.K);
    if (!std::isfinite(theta)) throw std::runtime_error("rotation_number: diverged");
    return (theta - start) / p.n_iter;
}

namespace {

/// Lowest-denominator p/q within tol of rho, via Stern-Brocot descent over
/// the fractional part.
std::optional<std::pair<int, int>> nearest_rational(double rho, double tol, int q_max) {
    double whole = std::floor(rho);
    double frac = rho - whole;
    // Search candidates by increasing denominator; the Stern-Brocot interval
    // narrows around frac, so the first hit has the lowest denominator.
    long lo_p = 0, lo_q = 1, hi_p = 1, hi_q = 1;
    if (std::abs(frac) <= tol) return {{static_cast<int>(whole), 1}};
    if (std::abs(frac - 1.0) <= tol) return {{static_cast<int>(whole) + 1, 1}};
    while (lo_q + hi_q <= q_max) {
        long mp = lo_p + hi_p, mq = lo_q + hi_q;
        double mid = static_cast<double>(mp) / mq;
        if (std::abs(frac - mid) <= tol)
            return {{static_cast<int>(whole * mq + mp), static_cast<int>(mq)}};
        if (frac < mid) {
            hi_p = mp;
            hi_q = mq;
        } else {
            lo_p = mp;
            lo_q = mq;
        }
    }
    return std::nullopt;
}

}  // namespace

LockReport detect_lock(double omega, double K, double epsilon, double tol, int q_max,
                       const CircleMapParams& base) {
    if (epsilon <= 0 || tol <= 0)
        throw std::invalid_argument("detect_lock: epsilon and tol must be positive");
    CircleMapParams p = base;
    p.K = K;
    p.omega = omega;
    LockReport report;
    report.epsilon = epsilon;
    report.rho = rotation_number(p);
    CircleMapParams lo = p, hi = p;
    lo.omega = omega - epsilon;
    hi.omega = omega + epsilon;
    report.locked = std::abs(rotation_number(hi) - rotation_number(lo)) < tol;
    if (report.locked) {
        if (auto pq = nearest_rational(report.rho, tol, q_max)) {
            report.p = pq->first;
            report.q = pq->second;
        } else {
            report.locked = false;  // plateau with no small rational: treat as unlocked
        }
    }
    return report;
}

std::vector<StaircasePoint> staircase_sweep(double K, double omega_min, double omega_max,
                                            int n_points, int n_iter, int n_transient) {
    if (!(omega_min < omega_max)) throw std::invalid_argument("staircase_sweep: bad range");
    if (n_points < 2) throw std::invalid_argument("staircase_sweep: need >= 2 points");
    CircleMapParams base;
    base.n_iter = n_iter;
    base.n_transient = n_transient;
    std::vector<StaircasePoint> out;
    out.reserve(n_points);
    for (int i = 0; i < n_points; ++i) {
        double omega = omega_min + (omega_max - omega_min) * i / (n_points - 1);
        LockReport lock = detect_lock(omega, K, 1e-3, 1e-4, 32, base);
        out.push_back({omega, K, lock.rho, lock.locked, lock.p, lock.q});
    }
    return out;
}

std::string staircase_csv(const std::vector<StaircasePoint>& points) {
    std::ostringstream os;
    os.precision(12);
    os << "omega,K,rho,locked,p,q\n";
    for (const StaircasePoint& pt : points) {
        os << pt.omega << ',' << pt.K << ',' << pt.rho << ',' << (pt.locked ? 1 : 0) << ',';
        if (pt.p) os << *pt.p;
        os << ',';
        if (pt.q) os << *pt.q;
        os << '\n';
    }
    return os.str();
}

}  // namespace graphcomp
