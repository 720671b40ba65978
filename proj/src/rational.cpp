#include "nabla/rational.hpp"

#include "nabla/errors.hpp"

#include <algorithm>
#include <cctype>

namespace nabla {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole, bool allow_sign) {
    std::string_view body = digits;
    bool negative = false;
    if (allow_sign && !body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c)) != 0;
        }))
        throw FormatError("malformed rational \"" + std::string(whole) + "\"");
    BigInt value{std::string(body)};
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text, true));
    auto num = parse_integer(text.substr(0, slash), text, true);
    auto den = parse_integer(text.substr(slash + 1), text, false);
    if (den == 0) throw FormatError("zero denominator in \"" + std::string(text) + "\"");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace nabla
