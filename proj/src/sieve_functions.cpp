#include "btlab/sieve_functions.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace btlab {

namespace {

const double kTwoEGamma = 2.0 * std::exp(kEulerGamma);

// Closed forms on the first intervals: F = 2e^g / s on (0, 3] (since
// f(s-1) = 0 keeps sF constant through s = 3), f = 0 on (0, 2].
double F_closed(double s) { return kTwoEGamma / s; }

// Cubic Hermite on [y0, y1] with unit-interval parameter t and endpoint
// derivatives scaled by the interval width.
double hermite(double y0, double y1, double d0, double d1, double t, double h) {
    double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * d0
         + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * h * d1;
}

}  // namespace

SieveTable::SieveTable(double s_max, double step) : s_max_(s_max) {
    if (!(s_max >= 2.0)) throw std::invalid_argument("SieveTable: s_max must be >= 2");
    if (!(step > 0.0) || step > 0.01)
        throw std::invalid_argument("SieveTable: step must be in (0, 0.01]");

    n_ = (long)std::ceil(1.0 / step - 1e-9);
    step_ = 1.0 / (double)n_;
    size_t npts = (size_t)std::ceil((s_max - 2.0) * n_ - 1e-9) + 1;

    // March u = sF and v = sf. The right-hand sides u' = f(s-1), v' = F(s-1)
    // depend only on the table one unit back, so each classical fourth-order
    // step is plain quadrature; the half-step delayed values come from cubic
    // Hermite interpolation, all within one smooth piece because integers are
    // grid points.
    std::vector<double> u(npts), v(npts), du(npts), dv(npts);
    F_.assign(npts, 0.0);
    f_.assign(npts, 0.0);

    auto delayed_F = [&](size_t j) {  // F(s_j - 1), s_j - 1 <= 2 -> closed form
        double s = 2.0 + (double)j / n_ - 1.0;
        return s <= 2.0 ? F_closed(s) : u[j - n_] / s;
    };
    auto delayed_f = [&](size_t j) {
        double s = 2.0 + (double)j / n_ - 1.0;
        return s <= 2.0 ? 0.0 : v[j - n_] / s;
    };
    // Delayed value at the midpoint between grid points j and j+1.
    auto delayed_F_mid = [&](size_t j) {
        double s = 2.0 + (double)j / n_ - 1.0 + 0.5 * step_;
        if (s <= 2.0) return F_closed(s);
        double um = hermite(u[j - n_], u[j - n_ + 1], du[j - n_], du[j - n_ + 1], 0.5, step_);
        return um / s;
    };
    auto delayed_f_mid = [&](size_t j) {
        double s = 2.0 + (double)j / n_ - 1.0 + 0.5 * step_;
        if (s <= 2.0) return 0.0;
        double vm = hermite(v[j - n_], v[j - n_ + 1], dv[j - n_], dv[j - n_ + 1], 0.5, step_);
        return vm / s;
    };

    u[0] = kTwoEGamma;
    v[0] = 0.0;
    du[0] = delayed_f(0);
    dv[0] = delayed_F(0);
    F_[0] = u[0] / 2.0;
    f_[0] = 0.0;

    for (size_t i = 0; i + 1 < npts; ++i) {
        double k1u = delayed_f(i);
        double k1v = delayed_F(i);
        double kmu = delayed_f_mid(i);
        double kmv = delayed_F_mid(i);
        double k4u = delayed_f(i + 1);
        double k4v = delayed_F(i + 1);
        // RHS has no dependence on (u, v): the RK4 update collapses to
        // Simpson's rule over the step.
        u[i + 1] = u[i] + step_ / 6.0 * (k1u + 4.0 * kmu + k4u);
        v[i + 1] = v[i] + step_ / 6.0 * (k1v + 4.0 * kmv + k4v);
        du[i + 1] = k4u;
        dv[i + 1] = k4v;
        double s = 2.0 + (double)(i + 1) / n_;
        F_[i + 1] = u[i + 1] / s;
        f_[i + 1] = v[i + 1] / s;
    }
}

double SieveTable::F_of(double s) const {
    if (!(s > 0.0) || s > s_max_ + 1e-12)
        throw std::domain_error("F_of: s outside (0, s_max]");
    if (s <= 2.0) return F_closed(s);
    double x = (s - 2.0) * n_;
    size_t i = (size_t)x;
    if (i + 1 >= F_.size()) return F_.back();
    double t = x - i;
    return F_[i] * (1.0 - t) + F_[i + 1] * t;
}

double SieveTable::f_of(double s) const {
    if (!(s > 0.0) || s > s_max_ + 1e-12)
        throw std::domain_error("f_of: s outside (0, s_max]");
    if (s <= 2.0) return 0.0;
    double x = (s - 2.0) * n_;
    size_t i = (size_t)x;
    if (i + 1 >= f_.size()) return f_.back();
    double t = x - i;
    return f_[i] * (1.0 - t) + f_[i + 1] * t;
}

void SieveTable::write_csv(std::ostream& os) const {
    os << "s,F,f\n";
    char buf[128];
    for (size_t i = 0; i < F_.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", grid_s(i), F_[i], f_[i]);
        os << buf;
    }
}

}  // namespace btlab
