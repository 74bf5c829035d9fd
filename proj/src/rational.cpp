#include "toricpack/rational.hpp"

#include "toricpack/error.hpp"

namespace toricpack {

std::string to_string(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

std::string to_string(const Int& n) { return n.str(); }

Rational parse_rational(const std::string& text) {
    const auto bad = [&]() -> Error {
        return Error("ParseError", "not a rational: \"" + text + "\"");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

Int rational_floor(const Rational& r) {
    Int q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

Int rational_ceil(const Rational& r) { return -rational_floor(-r); }

Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

Rational rational_pow(const Rational& r, unsigned k) {
    Rational acc(1);
    for (unsigned i = 0; i < k; ++i) acc *= r;
    return acc;
}

Int factorial(unsigned n) {
    Int acc(1);
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

} // namespace toricpack
