#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace simperm {

// Expression templates off: values are stored in containers and passed
// around freely, and `auto` must never capture an unevaluated expression.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

// Throws std::invalid_argument unless text is an optionally signed decimal integer.
BigInt parse_decimal(std::string_view text);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// r += a * b without temporaries; the hot loop of every series product.
inline void add_product(BigInt& r, const BigInt& a, const BigInt& b)
{
    mpz_addmul(r.backend().data(), a.backend().data(), b.backend().data());
}

} // namespace simperm
