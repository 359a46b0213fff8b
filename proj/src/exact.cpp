#include "qv/exact.hpp"

#include "qv/errors.hpp"

namespace qv {

ExactInt pow_int(const ExactInt& base, long exp) {
    ExactInt r = 1, b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

ExactRat pow_rat(long q, long e) {
    if (e >= 0) return ExactRat(pow_int(ExactInt(q), e));
    return ExactRat(ExactInt(1), pow_int(ExactInt(q), -e));
}

std::string to_string(const ExactRat& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

ExactRat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return ExactRat(ExactInt(s));
        return ExactRat(ExactInt(s.substr(0, slash)), ExactInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("invalid rational literal: " + s);
    }
}

} // namespace qv
