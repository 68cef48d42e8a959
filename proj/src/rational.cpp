#include "slopelab/rational.hpp"

#include <cctype>

#include "slopelab/errors.hpp"

namespace slopelab {

Rational rat(long numerator, long denominator) {
    if (denominator == 0) {
        throw ValidationError("rational with zero denominator");
    }
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string num = text;
    std::string den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!looks_like_integer(num) || !looks_like_integer(den)) {
        throw ValidationError("malformed rational \"" + text + "\": expected p or p/q");
    }
    // GMP does not take an explicit leading plus
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0) {
        throw ValidationError("malformed rational \"" + text + "\": zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

bool is_integral(const Rational& value) {
    return value.get_den() == 1;
}

}  // namespace slopelab
