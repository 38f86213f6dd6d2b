#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace btlab {

// Smooth weight on ]N,2N]^2 with an exact-enough integral for main-term
// computation.
class Weight2D {
public:
    virtual ~Weight2D() = default;
    virtual double operator()(double y, double z) const = 0;
    virtual double integral() const = 0;   // over the whole plane
};

// w(y) w(z) with w a C-infinity bump supported on (N, 2N); scaled so the
// peak is about 1. All derivatives vanish at the endpoints, so the lattice
// sum converges to the integral faster than any power of 1/N.
class ProductBump : public Weight2D {
public:
    explicit ProductBump(double n);
    double operator()(double y, double z) const override;
    double integral() const override;
    double bump(double t) const;

private:
    double n_;
    double line_integral_;
};

// The four-fold congruence count
//   R = sum over m1, m2 in ]M,2M], n1, n2 with m1 n1 == m2 n2 (mod q),
//       all four coprime to q, of alpha_{m1} beta_{m2} F(n1, n2)
// against its main term (phi(q)/q^2) (sum alpha beta over coprime pairs)
// (integral of F). alpha and beta are indexed m = M+1..2M.
struct CongruenceCount {
    uint64_t q, M, N;
    double r_exact;
    double main_term;
    double error;                       // r_exact - main_term
    double rel_error() const { return std::abs(error) / std::abs(main_term); }
};

// Bucket join over residues of m*n mod q: identical sum to the quadruple
// loop, O((MN)^2 / q + MN) instead of O((MN)^2). Requires M*N > q.
CongruenceCount congruence_count(uint64_t q, uint64_t M, uint64_t N,
                                 const std::vector<double>& alpha,
                                 const std::vector<double>& beta,
                                 const Weight2D& F);

}  // namespace btlab
