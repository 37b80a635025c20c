#include "mui/rational.hpp"

#include <stdexcept>

namespace mui {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const std::string& num, const std::string& den) {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) throw std::invalid_argument("bad numerator '" + num + "'");
    if (d.set_str(den, 10) != 0) throw std::invalid_argument("bad denominator '" + den + "'");
    if (d == 0) throw std::invalid_argument("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational floor(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

Rational frac(const Rational& q) {
    Rational r = q - floor(q);
    return r;
}

Rational abs(const Rational& q) {
    Rational r = q;
    if (r < 0) r = -r;
    return r;
}

}  // namespace mui
