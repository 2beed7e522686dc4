#include "hurwitz/numeric.hpp"

namespace hurwitz {

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer ipow(const Integer& base, unsigned exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational rpow(const Rational& base, long exponent)
{
    if (exponent >= 0) {
        return make_rational(ipow(base.get_num(), static_cast<unsigned>(exponent)),
                             ipow(base.get_den(), static_cast<unsigned>(exponent)));
    }
    if (base == 0)
        throw DomainError("zero raised to a negative power");
    auto e = static_cast<unsigned>(-exponent);
    return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw ParseError("not a rational number: '" + text + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace hurwitz
