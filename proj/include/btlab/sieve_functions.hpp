#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

// Upper/lower linear-sieve density functions F and f, the continuous
// solutions of
//     s F(s) = 2 e^gamma,  s f(s) = 0             (0 < s <= 2)
//     (s F(s))' = f(s-1),  (s f(s))' = F(s-1)     (s > 2)
// tabulated on a uniform grid over [2, s_max].

namespace btlab {

inline constexpr double kEulerGamma = 0.5772156649015329;

class SieveTable {
public:
    // step is snapped to 1/n so that the integer breakpoints of the delay
    // system fall on grid points. Requires s_max >= 2 and 0 < step <= 0.01.
    SieveTable(double s_max, double step);

    double s_max() const { return s_max_; }
    double step() const { return step_; }
    size_t size() const { return F_.size(); }
    double grid_s(size_t i) const { return 2.0 + (double)i / n_; }
    const std::vector<double>& F_values() const { return F_; }
    const std::vector<double>& f_values() const { return f_; }

    // Closed form for s <= 2; linear interpolation on the grid above.
    // Requires 0 < s <= s_max.
    double F_of(double s) const;
    double f_of(double s) const;

    // Emits "s,F,f" rows with 12 significant digits.
    void write_csv(std::ostream& os) const;

private:
    double s_max_;
    double step_;
    long n_;                    // grid points per unit length
    std::vector<double> F_, f_;
};

inline SieveTable solve_sieve_system(double s_max, double step) {
    return SieveTable(s_max, step);
}

}  // namespace btlab
