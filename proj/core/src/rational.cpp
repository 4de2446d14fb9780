#include "gci/rational.hpp"

#include <cctype>

#include "gci/error.hpp"

namespace gci {

Rational rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::Parameter, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw Error(ErrorKind::Parse, "not a rational: \"" + text + "\"");
    Int n(num), d(den);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator: \"" + text + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational pow(const Rational& base, unsigned long exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    // num/den coprime implies num^k/den^k coprime; already canonical.
    return out;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Int& value) { return value.get_str(); }

}  // namespace gci
