#include "sbc/core_params.hpp"

#include <charconv>

namespace sbc {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

namespace {

// Parses an unsigned decimal run starting at pos; advances pos.
std::int64_t parse_digits(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw ParseError("expected digits in '" + std::string(text) + "'");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc{}) throw ParseError("integer out of range in '" + std::string(text) + "'");
    return value;
}

// `[-]digits[/digits]`, the sign only when allow_sign.
Rational parse_rational_at(std::string_view text, std::size_t& pos, bool allow_sign) {
    bool negative = false;
    if (allow_sign && pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    std::int64_t num = parse_digits(text, pos);
    std::int64_t den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_digits(text, pos);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational{negative ? -num : num, den};
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    Rational r = parse_rational_at(text, pos, true);
    if (pos != text.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'");
    return r;
}

std::string_view to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

Sign parse_sign(std::string_view text) {
    if (text == "+" || text == "+1") return Sign::plus;
    if (text == "-" || text == "-1") return Sign::minus;
    throw ParseError("sign must be '+' or '-', got '" + std::string(text) + "'");
}

const GaussianRational& ScalarParam::exact() const {
    if (!value_) throw UnsupportedScalarError("generic scalar where an exact value is required");
    return *value_;
}

Rational ScalarParam::real() const {
    const auto& v = exact();
    if (v.im != 0) throw UnsupportedScalarError("non-real scalar " + to_string(*this) + " where a real value is required");
    return v.re;
}

std::optional<std::int64_t> ScalarParam::as_integer() const {
    if (!value_ || value_->im != 0 || value_->re.denominator() != 1) return std::nullopt;
    return value_->re.numerator();
}

bool scalar_is_integer(const ScalarParam& s) { return s.as_integer().has_value(); }

bool scalar_equals_integer(const ScalarParam& s, std::int64_t k) {
    auto v = s.as_integer();
    return v && *v == k;
}

std::string to_string(const ScalarParam& s) {
    if (s.is_generic()) return "generic";
    const auto& v = s.exact();
    if (v.im == 0) return to_string(v.re);
    const Rational mag = v.im < 0 ? -v.im : v.im;
    return to_string(v.re) + (v.im < 0 ? "-" : "+") + to_string(mag) + "*i";
}

ScalarParam parse_scalar(std::string_view text) {
    if (text == "generic") return ScalarParam::generic();
    std::size_t pos = 0;
    const Rational re = parse_rational_at(text, pos, true);
    if (pos == text.size()) return ScalarParam{re};
    const char op = text[pos];
    if (op != '+' && op != '-') throw ParseError("malformed scalar '" + std::string(text) + "'");
    ++pos;
    Rational im = parse_rational_at(text, pos, false);
    if (text.substr(pos) != "*i") throw ParseError("imaginary part must end in '*i' in '" + std::string(text) + "'");
    if (op == '-') im = -im;
    return ScalarParam{re, im};
}

GroupDescriptor GroupDescriptor::so(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) {
        throw DomainError("SO(p,q) requires p, q >= 0 and p + q >= 1 (got SO(" + std::to_string(p) + "," +
                          std::to_string(q) + "))");
    }
    return GroupDescriptor{p, q};
}

std::string to_string(const GroupDescriptor& g) {
    if (g.q == 0) return "SO(" + std::to_string(g.p) + ")";
    return "SO(" + std::to_string(g.p) + "," + std::to_string(g.q) + ")";
}

}  // namespace sbc
