#include "filippov/rational.hpp"

#include "filippov/error.hpp"

#include <cctype>

namespace filippov {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::RepeatedIndex: return "RepeatedIndex";
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::LinearlyDependent: return "LinearlyDependent";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::UnverifiedAlgebra: return "UnverifiedAlgebra";
    case ErrorKind::InternalSpanError: return "InternalSpanError";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::RecheckFailed: return "RecheckFailed";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    }
    return "Unknown";
}

Rational::Rational(long num, long den) {
    if (den == 0)
        throw Error(ErrorKind::DivisionByZero, "zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return std::string(s);
}

} // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' || den.front() == '+')
        throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    mpz_class n(strip_plus(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error(ErrorKind::DivisionByZero, "division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer())
        return numerator_string();
    return numerator_string() + "/" + denominator_string();
}

} // namespace filippov
