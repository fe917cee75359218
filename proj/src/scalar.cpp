#include "bialg/scalar.hpp"

#include <cctype>

namespace bialg {

namespace {

bool digits_ok(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    // no leading zeros, so every value has one spelling
    return s.size() == 1 || s[0] != '0';
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && body[0] == '-') {
        neg = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!digits_ok(num) || (slash != std::string_view::npos && !digits_ok(den)))
        throw ParseError("malformed rational \"" + std::string(text) + "\"");

    mpz_class p(std::string(num), 10);
    mpz_class q = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    if (slash != std::string_view::npos && q == 1)
        throw ParseError("integer written with denominator 1 \"" + std::string(text) + "\"");
    if (neg && p == 0) throw ParseError("negative zero \"" + std::string(text) + "\"");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw ParseError("unreduced rational \"" + std::string(text) + "\"");

    Scalar x(neg ? mpz_class(-p) : p, q);
    return x;
}

std::string format_scalar(const Scalar& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace bialg
