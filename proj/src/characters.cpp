#include "btlab/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "btlab/modarith.hpp"

namespace btlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline uint64_t umod(int64_t v, uint64_t q) {
    int64_t r = v % (int64_t)q;
    return (uint64_t)(r < 0 ? r + (int64_t)q : r);
}
}  // namespace

CharacterGroup::CharacterGroup(uint64_t q) : q_(q) {
    if (q < 1) throw std::invalid_argument("CharacterGroup: q must be >= 1");
    if (q > (1u << 22))
        throw std::invalid_argument("CharacterGroup: q too large for table construction");
    phi_ = 1;
    lcm_ord_ = 1;
    for (auto [p, e] : factorize(q)) {
        Component c;
        c.p = p;
        c.pe = 1;
        for (int i = 0; i < e; ++i) c.pe *= p;
        if (p == 2 && e >= 3) {
            // (Z/2^k)^* = <-1> x <5>
            c.ord1 = 2;
            c.ord2 = c.pe / 4;
            c.log1.assign(c.pe, 0);
            c.log2.assign(c.pe, 0);
            uint64_t v = 1;
            for (uint64_t j = 0; j < c.ord2; ++j) {
                c.log1[v] = 0; c.log2[v] = (uint32_t)j;
                c.log1[c.pe - v] = 1; c.log2[c.pe - v] = (uint32_t)j;
                v = v * 5 % c.pe;
            }
        } else {
            c.ord1 = euler_phi(c.pe);   // cyclic: odd p^e, 2, 4
            c.ord2 = 1;
            c.log1.assign(c.pe, 0);
            if (c.ord1 > 1) {
                uint64_t g = primitive_root(c.pe);
                uint64_t v = 1;
                for (uint64_t j = 0; j < c.ord1; ++j) {
                    c.log1[v] = (uint32_t)j;
                    v = mulmod(v, g, c.pe);
                }
            }
        }
        phi_ *= c.ord1 * c.ord2;
        lcm_ord_ = std::lcm(lcm_ord_, c.ord1);
        lcm_ord_ = std::lcm(lcm_ord_, c.ord2);
        comps_.push_back(std::move(c));
    }
}

bool CharacterGroup::is_coprime(int64_t n) const {
    return gcd_u64(umod(n, q_), q_) == 1;
}

cplx CharacterGroup::chi(uint64_t index, int64_t n) const {
    if (index >= phi_) throw std::out_of_range("chi: character index out of range");
    uint64_t r = umod(n, q_);
    if (gcd_u64(r, q_) != 1) return cplx(0.0);
    // phase accumulated as an exact fraction t / lcm_ord_
    uint64_t t = 0;
    uint64_t idx = index;
    for (const auto& c : comps_) {
        uint64_t a1 = idx % c.ord1; idx /= c.ord1;
        uint64_t a2 = idx % c.ord2; idx /= c.ord2;
        uint64_t rr = r % c.pe;
        t = (t + a1 * c.log1[rr] % c.ord1 * (lcm_ord_ / c.ord1)) % lcm_ord_;
        if (c.ord2 > 1)
            t = (t + a2 * c.log2[rr] % c.ord2 * (lcm_ord_ / c.ord2)) % lcm_ord_;
    }
    double ang = kTwoPi * (double)t / (double)lcm_ord_;
    return cplx(std::cos(ang), std::sin(ang));
}

uint64_t CharacterGroup::character_order(uint64_t index) const {
    if (index >= phi_) throw std::out_of_range("character_order: index out of range");
    uint64_t ord = 1;
    uint64_t idx = index;
    for (const auto& c : comps_) {
        uint64_t a1 = idx % c.ord1; idx /= c.ord1;
        uint64_t a2 = idx % c.ord2; idx /= c.ord2;
        if (a1) ord = std::lcm(ord, c.ord1 / gcd_u64(a1, c.ord1));
        if (a2) ord = std::lcm(ord, c.ord2 / gcd_u64(a2, c.ord2));
    }
    return ord;
}

std::optional<uint64_t> CharacterGroup::quadratic_character() const {
    for (uint64_t i = 1; i < phi_; ++i)
        if (character_order(i) == 2) return i;
    return std::nullopt;
}

cplx CharacterGroup::incomplete_sum(uint64_t index, int64_t first, uint64_t length) const {
    if (is_principal(index))
        throw std::invalid_argument("incomplete_sum: principal character rejected");
    cplx s(0.0);
    for (uint64_t i = 0; i < length; ++i) s += chi(index, first + (int64_t)i);
    return s;
}

CharSumDiagnostics incomplete_char_sum(const CharacterGroup& g, uint64_t index,
                                       int64_t first, uint64_t length) {
    CharSumDiagnostics out;
    out.sum = g.incomplete_sum(index, first, length);
    double q = (double)g.modulus();
    double N = (double)length;
    double a = std::abs(out.sum);
    for (int r = 1; r <= 3; ++r) {
        double denom = std::pow(N, 1.0 - 1.0 / r)
                     * std::pow(q, (r + 1.0) / (4.0 * r * r));
        out.burgess_ratio[r - 1] = a / denom;
    }
    return out;
}

LargeSieveResult large_sieve_check(uint64_t q, int64_t first,
                                   const std::vector<cplx>& alpha) {
    CharacterGroup g(q);
    size_t N = alpha.size();
    LargeSieveResult out{};
    for (uint64_t idx = 0; idx < g.size(); ++idx) {
        cplx inner(0.0);
        for (size_t i = 0; i < N; ++i)
            inner += alpha[i] * g.chi(idx, first + (int64_t)i);
        out.lhs += std::norm(inner);
    }
    // lhs = phi(q) * sum over units r of |sum_{n == r (q)} alpha_n|^2
    std::vector<cplx> residue_sums(q, cplx(0.0));
    for (size_t i = 0; i < N; ++i) {
        uint64_t r = umod(first + (int64_t)i, q);
        residue_sums[r] += alpha[i];
    }
    double ident = 0.0;
    for (uint64_t r = 0; r < q; ++r)
        if (gcd_u64(r == 0 ? q : r, q) == 1) ident += std::norm(residue_sums[r]);
    out.lhs_identity = (double)g.phi() * ident;
    double norm2 = 0.0;
    for (const auto& a : alpha) norm2 += std::norm(a);
    out.rhs = ((double)N + (double)q) * norm2;
    out.pass = out.lhs <= out.rhs;
    return out;
}

}  // namespace btlab
