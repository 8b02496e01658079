#include <cctype>
#include <stdexcept>
#include <string>

#include <simperm/bigint.hpp>

namespace simperm {

BigInt parse_decimal(std::string_view text)
{
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        i = 1;
    }
    if (i == text.size()) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
        }
    }
    return BigInt(std::string(text));
}

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.backend().data(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k)
{
    BigInt r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

} // namespace simperm
