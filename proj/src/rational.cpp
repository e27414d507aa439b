#include "lvder/rational.hpp"

#include <algorithm>
#include <cctype>

namespace lvder {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void reject(std::string_view token, std::string_view why) {
    throw ParseError("invalid rational '" + std::string(token) + "': " + std::string(why));
}

}  // namespace

Rational parse_rational(std::string_view token) {
    std::string_view body = token;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);

    if (!all_digits(num)) reject(token, "expected digits in numerator");
    if (slash != std::string_view::npos) {
        if (!all_digits(den)) reject(token, "expected digits in denominator");
        if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) reject(token, "zero denominator");
    }

    mpz_class n(std::string(num), 10);
    mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (negative) n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace lvder
