#include "ivbounds/rational.hpp"

#include <cctype>

#include "ivbounds/errors.hpp"

namespace ivbounds {

namespace {

[[noreturn]] void malformed(std::string_view text, const char* why) {
    throw ValidationError(ValidationKind::MalformedNumber,
                          "malformed number '" + std::string(text) + "': " + why);
}

bool all_digits(std::string_view s) {
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view digits) {
    return Integer(std::string(digits));
}

Integer power_of_ten(std::size_t exponent) {
    Integer result = 1;
    for (std::size_t i = 0; i < exponent; ++i) result *= 10;
    return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) malformed(text, "empty");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) malformed(text, "sign without digits");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) {
            malformed(text, "expected digits on both sides of '/'");
        }
        Integer d = parse_integer(den);
        if (d == 0) malformed(text, "zero denominator");
        value = Rational(parse_integer(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac)) {
            malformed(text, "expected a finite decimal");
        }
        Integer w = whole.empty() ? Integer(0) : parse_integer(whole);
        Integer f = frac.empty() ? Integer(0) : parse_integer(frac);
        Integer scale = power_of_ten(frac.size());
        value = Rational(w * scale + f, scale);
    } else {
        if (!all_digits(s)) malformed(text, "expected an integer, fraction or decimal");
        value = Rational(parse_integer(s));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
    return value.str();
}

std::string to_decimal(const Rational& value, int digits) {
    Integer scale = power_of_ten(static_cast<std::size_t>(digits));
    Integer num = boost::multiprecision::numerator(value);
    Integer den = boost::multiprecision::denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;
    // round half up on the magnitude
    Integer scaled = (num * scale * 2 + den) / (den * 2);
    Integer whole = scaled / scale;
    Integer frac = scaled % scale;
    std::string frac_digits = frac.str();
    if (static_cast<int>(frac_digits.size()) < digits) {
        frac_digits.insert(0, static_cast<std::size_t>(digits) - frac_digits.size(), '0');
    }
    std::string out = (negative && scaled != 0) ? "-" : "";
    out += whole.str();
    if (digits > 0) out += "." + frac_digits;
    return out;
}

}  // namespace ivbounds
