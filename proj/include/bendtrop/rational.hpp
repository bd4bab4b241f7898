#ifndef BENDTROP_RATIONAL_HPP
#define BENDTROP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace bendtrop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Cross-multiplied comparison. The library operator< runs a continued
// fraction loop that is far slower than two products on arbitrary precision
// integers; denominators are always positive.
inline int rat_cmp(const Rat& a, const Rat& b) {
    const Int l = numerator(a) * denominator(b);
    const Int r = numerator(b) * denominator(a);
    return l < r ? -1 : (r < l ? 1 : 0);
}

// The library == also routes through that loop (its backend compare() is two
// operator< calls); values are normalized, so compare parts directly.
inline bool rat_eq(const Rat& a, const Rat& b) {
    return numerator(a) == numerator(b) && denominator(a) == denominator(b);
}

inline bool rat_is_zero(const Rat& a) { return numerator(a) == 0; }

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
inline std::optional<Rat> rat_parse(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.empty()) return std::nullopt;
    auto is_int = [&trim](std::string_view v) {
        v = trim(v);
        if (v.empty()) return false;
        std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i)
            if (v[i] < '0' || v[i] > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(s)) return std::nullopt;
            return Rat(Int(std::string(trim(s))));
        }
        const auto num = s.substr(0, slash);
        const auto den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Int d{std::string(trim(den))};
        if (d == 0) return std::nullopt;
        return Rat(Int(std::string(trim(num))), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline Rat rat_from_string(std::string_view s) {
    auto r = rat_parse(s);
    if (!r) throw std::invalid_argument("malformed rational literal: '" + std::string(s) + "'");
    return *r;
}

}  // namespace bendtrop

#endif
