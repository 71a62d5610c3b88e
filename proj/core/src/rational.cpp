#include "bpmc/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace bpmc {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den)) return std::nullopt;
        Integer d{std::string(den)};
        if (d == 0) return std::nullopt;
        value = Rational(Integer{std::string(num)}, d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) return std::nullopt;
        if (!whole.empty() && !is_digits(whole)) return std::nullopt;
        if (!frac.empty() && !is_digits(frac)) return std::nullopt;
        Integer scaled{0};
        for (char c : whole) scaled = scaled * 10 + (c - '0');
        Integer den{1};
        for (char c : frac) {
            scaled = scaled * 10 + (c - '0');
            den *= 10;
        }
        value = Rational(scaled, den);
    } else {
        if (!is_digits(text)) return std::nullopt;
        value = Rational(Integer{std::string(text)});
    }
    if (negative) value = -value;
    return value;
}

std::string to_ratio_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_decimal_string(const Rational& q, unsigned digits) {
    Integer num = numerator(q);
    Integer den = denominator(q);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    Integer whole = num / den;
    Integer rem = num % den;
    std::string out = sign + whole.str();
    if (digits == 0) return out;
    out += '.';
    for (unsigned i = 0; i < digits; ++i) {
        rem *= 10;
        Integer digit = rem / den;
        rem %= den;
        out += static_cast<char>('0' + digit.convert_to<int>());
    }
    return out;
}

Rational round_down_dyadic(const Rational& q, unsigned bits) {
    Integer scale = Integer{1} << bits;
    Integer scaled_num = numerator(q) * scale;
    Integer den = denominator(q);
    Integer k = scaled_num / den;
    if (scaled_num < 0 && k * den != scaled_num) k -= 1;  // floor for negatives
    return Rational(k, scale);
}

Rational round_up_dyadic(const Rational& q, unsigned bits) {
    return -round_down_dyadic(-q, bits);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational rational_from_double(double d) {
    if (!std::isfinite(d)) throw std::invalid_argument("rational_from_double: non-finite");
    return Rational(d);
}

namespace {

Integer floor_of(const Rational& q) {
    Integer k = numerator(q) / denominator(q);
    if (numerator(q) < 0 && k * denominator(q) != numerator(q)) k -= 1;
    return k;
}

// Both endpoints strictly positive, lo <= hi.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
    Integer fl = floor_of(lo);
    if (lo == Rational(fl)) return lo;  // integral lower endpoint wins
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    // Both endpoints inside (fl, fl+1): recurse on reciprocal tails.
    Rational tail = simplest_positive(Rational(1) / (hi - Rational(fl)),
                                      Rational(1) / (lo - Rational(fl)));
    return Rational(fl) + Rational(1) / tail;
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_between: empty interval");
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return -simplest_rational_between(-hi, -lo);
    return simplest_positive(lo, hi);
}

}  // namespace bpmc
