#include "btlab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace btlab {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto bad = [&] { throw std::invalid_argument("Rational::parse: '" + s + "'"); };
    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) bad();
        if (v.get_den() == 0) bad();
        v.canonicalize();
        return Rational(v);
    }
    size_t dot = s.find('.');
    if (dot == std::string::npos) {
        mpz_class n;
        if (n.set_str(s, 10) != 0) bad();
        return Rational(mpq_class(n));
    }
    // Decimal: sign, integer part, fractional part; parsed exactly in base 10.
    std::string ipart = s.substr(0, dot);
    std::string fpart = s.substr(dot + 1);
    bool neg = false;
    if (!ipart.empty() && (ipart[0] == '+' || ipart[0] == '-')) {
        neg = ipart[0] == '-';
        ipart = ipart.substr(1);
    }
    if (ipart.empty() && fpart.empty()) bad();
    for (char c : ipart + fpart)
        if (c < '0' || c > '9') bad();
    mpz_class num(ipart.empty() ? std::string("0") : ipart);
    mpz_class den(1);
    for (char c : fpart) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    if (neg) num = -num;
    mpq_class v(num, den);
    v.canonicalize();
    return Rational(v);
}

Rational Rational::pow(unsigned k) const {
    mpq_class r(1);
    mpq_class b = v_;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return Rational(r);
}

namespace {
mpz_class pow10_z(unsigned digits) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, digits);
    return t;
}
}  // namespace

Rational Rational::round_decimal(unsigned digits) const {
    mpz_class scale = pow10_z(digits);
    mpq_class scaled = v_ * mpq_class(scale);
    // round half away from zero: work on |.|, restore the sign
    mpz_class num = ::abs(scaled.get_num()), den = scaled.get_den();
    mpz_class rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), mpz_class(2 * num + den).get_mpz_t(),
               mpz_class(2 * den).get_mpz_t());
    if (sgn(v_) < 0) rounded = -rounded;
    mpq_class out(rounded, scale);
    out.canonicalize();
    return Rational(out);
}

Rational Rational::trunc_decimal(unsigned digits) const {
    mpz_class scale = pow10_z(digits);
    mpq_class scaled = v_ * mpq_class(scale);
    mpz_class t;
    mpz_tdiv_q(t.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    mpq_class out(t, scale);
    out.canonicalize();
    return Rational(out);
}

std::string Rational::decimal_str(unsigned digits) const {
    Rational r = round_decimal(digits);
    mpz_class scale = pow10_z(digits);
    mpz_class scaled = r.v_.get_num() * (scale / r.v_.get_den());
    bool neg = scaled < 0;
    mpz_class a = ::abs(scaled);
    mpz_class ip = a / scale, fp = a % scale;
    std::string frac = fp.get_str();
    frac.insert(0, digits - frac.size(), '0');
    std::string out = ip.get_str();
    if (digits > 0) out += "." + frac;
    return neg ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace btlab
