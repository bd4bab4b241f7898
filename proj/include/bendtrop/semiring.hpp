#ifndef BENDTROP_SEMIRING_HPP
#define BENDTROP_SEMIRING_HPP

#include "bendtrop/rational.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace bendtrop {

// Which idempotent semiring a computation runs over. All values mixed in one
// expression must share the tag.
enum class SemiringTag { Trop, Bool, Rank2 };

inline const char* tag_name(SemiringTag t) {
    switch (t) {
        case SemiringTag::Trop: return "trop";
        case SemiringTag::Bool: return "bool";
        case SemiringTag::Rank2: return "rank2";
    }
    return "?";
}

// A value of one of the supported idempotent semirings:
//   Trop  = (Q u {-inf}, max, +), additive unit -inf, multiplicative unit 0
//   Bool  = {-inf, 0} with the same operations
//   Rank2 = (Q^2 lex u {-inf}, lex-max, componentwise +)
// The additive unit is a distinguished "bottom" variant, never a sentinel number.
class Value {
  public:
    static Value bottom(SemiringTag t) { return Value(t); }
    static Value one(SemiringTag t) {
        Value v(t);
        v.bottom_ = false;
        return v;
    }
    static Value trop(Rat r) {
        Value v(SemiringTag::Trop);
        v.bottom_ = false;
        v.first_ = std::move(r);
        return v;
    }
    static Value rank2(Rat a, Rat b) {
        Value v(SemiringTag::Rank2);
        v.bottom_ = false;
        v.first_ = std::move(a);
        v.second_ = std::move(b);
        return v;
    }

    SemiringTag tag() const { return tag_; }
    bool is_bottom() const { return bottom_; }
    bool is_one() const;
    const Rat& finite() const {
        require_finite();
        return first_;
    }
    const Rat& first() const {
        require_finite();
        return first_;
    }
    const Rat& second() const {
        require_finite();
        return second_;
    }

    friend Value add(const Value& a, const Value& b);
    friend Value mul(const Value& a, const Value& b);
    // Canonical partial order: a <= b iff a + b == b. Total on these semirings.
    friend bool leq(const Value& a, const Value& b);
    friend bool operator==(const Value& a, const Value& b);
    // Total order used for canonical term sorting; bottom sorts first.
    friend std::strong_ordering cmp(const Value& a, const Value& b);

    // Tropical division b^{-1}*a; both finite (used to match scalars in the
    // congruence search).
    friend std::optional<Value> divide(const Value& a, const Value& b);

    // Multiply by a natural-number exponent (repeated semiring mul).
    Value pow(const Int& n) const;

    std::string to_string() const;
    static std::optional<Value> parse(std::string_view s, SemiringTag t);

  private:
    explicit Value(SemiringTag t) : tag_(t) {}
    void require_finite() const {
        if (bottom_) throw std::invalid_argument("bottom has no finite part");
    }

    SemiringTag tag_;
    bool bottom_ = true;
    Rat first_;   // Trop value, or first lex component
    Rat second_;  // second lex component (Rank2 only)
};

inline void require_same_tag(const Value& a, const Value& b) {
    if (a.tag() != b.tag())
        throw std::invalid_argument(std::string("semiring tag mismatch: ") + tag_name(a.tag()) +
                                    " vs " + tag_name(b.tag()));
}

inline bool Value::is_one() const {
    if (bottom_) return false;
    return rat_is_zero(first_) && rat_is_zero(second_);
}

inline bool operator==(const Value& a, const Value& b) {
    if (a.tag_ != b.tag_) return false;
    if (a.bottom_ || b.bottom_) return a.bottom_ == b.bottom_;
    return rat_eq(a.first_, b.first_) && rat_eq(a.second_, b.second_);
}

inline std::strong_ordering cmp(const Value& a, const Value& b) {
    require_same_tag(a, b);
    if (a.bottom_ && b.bottom_) return std::strong_ordering::equal;
    if (a.bottom_) return std::strong_ordering::less;
    if (b.bottom_) return std::strong_ordering::greater;
    if (int c = rat_cmp(a.first_, b.first_))
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = rat_cmp(a.second_, b.second_))
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline Value add(const Value& a, const Value& b) {
    require_same_tag(a, b);
    return cmp(a, b) < 0 ? b : a;
}

inline Value mul(const Value& a, const Value& b) {
    require_same_tag(a, b);
    if (a.bottom_ || b.bottom_) return Value::bottom(a.tag_);
    Value r(a.tag_);
    r.bottom_ = false;
    r.first_ = a.first_ + b.first_;
    r.second_ = a.second_ + b.second_;
    return r;
}

inline bool leq(const Value& a, const Value& b) { return add(a, b) == b; }

inline std::optional<Value> divide(const Value& a, const Value& b) {
    require_same_tag(a, b);
    if (a.bottom_ || b.bottom_) return std::nullopt;
    Value r(a.tag_);
    r.bottom_ = false;
    r.first_ = a.first_ - b.first_;
    r.second_ = a.second_ - b.second_;
    return r;
}

inline Value Value::pow(const Int& n) const {
    if (bottom_) return n == 0 ? Value::one(tag_) : *this;
    Value r(tag_);
    r.bottom_ = false;
    r.first_ = first_ * Rat(n);
    r.second_ = second_ * Rat(n);
    return r;
}

inline std::string Value::to_string() const {
    if (bottom_) return "-inf";
    switch (tag_) {
        case SemiringTag::Bool: return "0";
        case SemiringTag::Trop: return rat_to_string(first_);
        case SemiringTag::Rank2: return "[" + rat_to_string(first_) + ", " + rat_to_string(second_) + "]";
    }
    return "?";
}

inline std::optional<Value> Value::parse(std::string_view s, SemiringTag t) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s == "-inf") return Value::bottom(t);
    switch (t) {
        case SemiringTag::Bool:
            if (s == "0") return Value::one(t);
            return std::nullopt;
        case SemiringTag::Trop: {
            auto r = rat_parse(s);
            if (!r) return std::nullopt;
            return Value::trop(*r);
        }
        case SemiringTag::Rank2: {
            if (s.size() < 2 || s.front() != '[' || s.back() != ']') return std::nullopt;
            auto body = s.substr(1, s.size() - 2);
            auto comma = body.find(',');
            if (comma == std::string_view::npos) return std::nullopt;
            auto a = rat_parse(body.substr(0, comma));
            auto b = rat_parse(body.substr(comma + 1));
            if (!a || !b) return std::nullopt;
            return Value::rank2(*a, *b);
        }
    }
    return std::nullopt;
}

}  // namespace bendtrop

#endif
