#include "ppdelp/rational.hpp"

#include "ppdelp/error.hpp"

#include <algorithm>
#include <cctype>

namespace ppdelp {

namespace {

bool allDigits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parseRational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!allDigits(num) || !allDigits(den))
            throw ValidationError("malformed rational '" + std::string(text) + "'");
        mpz_class d(std::string(den), 10);
        if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
        result = Rational(mpz_class(std::string(num), 10), d);
    } else {
        auto dot = text.find('.');
        auto whole = text.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
        if (!allDigits(whole) || (dot != std::string_view::npos && !allDigits(frac)))
            throw ValidationError("malformed number '" + std::string(text) + "'");
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class digits(std::string(whole) + std::string(frac), 10);
        result = Rational(digits, scale);
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

std::string toFractionString(const Rational& input) {
    Rational value = input;
    value.canonicalize();
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string toDecimalString(const Rational& value, int places) {
    mpz_class scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    Rational scaled = abs(value) * scale;
    // round half up on the magnitude
    mpz_class rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string digits = rounded.get_str();
    if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = sgn(value) < 0 && rounded != 0 ? "-" : "";
    out += digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    return out;
}

std::string toExactString(const Rational& input) {
    Rational value = input;
    value.canonicalize();
    mpz_class den = value.get_den();
    int twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
    if (den != 1) return toFractionString(value);
    if (value.get_den() == 1) return value.get_num().get_str();
    return toDecimalString(value, std::max(twos, fives));
}

} // namespace ppdelp
