#include "bendtrop/trop_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bendtrop {

TropPoly TropPoly::term(std::shared_ptr<const Monoid> monoid, Elt m, Value c) {
    TropPoly f(std::move(monoid), c.tag());
    f.add_term(m, c);
    return f;
}

void TropPoly::require_compatible(const TropPoly& other) const {
    if (monoid_.get() != other.monoid_.get())
        throw std::invalid_argument("tropical polynomials over different monoids");
    if (tag_ != other.tag_)
        throw std::invalid_argument("tropical polynomials over different semirings");
}

void TropPoly::add_term(const Elt& m, const Value& c) {
    if (c.tag() != tag_) throw std::invalid_argument("coefficient from the wrong semiring");
    if (c.is_bottom() || monoid_->is_zero(m)) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [this](const Term& t, const Elt& e) { return monoid_->less(t.first, e); });
    if (it != terms_.end() && it->first == m) {
        it->second = add(it->second, c);
    } else {
        terms_.insert(it, {m, c});
    }
}

Value TropPoly::coeff(const Elt& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [this](const Term& t, const Elt& e) { return monoid_->less(t.first, e); });
    if (it != terms_.end() && it->first == m) return it->second;
    return Value::bottom(tag_);
}

TropPoly TropPoly::without(const Elt& m) const {
    TropPoly r(monoid_, tag_);
    for (const auto& [e, c] : terms_)
        if (!(e == m)) r.terms_.push_back({e, c});
    return r;
}

TropPoly add(const TropPoly& a, const TropPoly& b) {
    a.require_compatible(b);
    TropPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

TropPoly TropPoly::scaled(const Value& s) const {
    TropPoly r(monoid_, tag_);
    if (s.is_bottom()) return r;
    for (const auto& [e, c] : terms_) r.terms_.push_back({e, mul(c, s)});
    return r;
}

TropPoly TropPoly::mul_monomial(const Elt& u) const {
    TropPoly r(monoid_, tag_);
    for (const auto& [e, c] : terms_) r.add_term(monoid_->mul(e, u), c);
    return r;
}

bool operator==(const TropPoly& a, const TropPoly& b) {
    return a.monoid_.get() == b.monoid_.get() && a.tag_ == b.tag_ && a.terms_ == b.terms_;
}

bool TropPoly::dominated_by(const TropPoly& g) const {
    require_compatible(g);
    for (const auto& [e, c] : terms_)
        if (!leq(c, g.coeff(e))) return false;
    return true;
}

Int TropPoly::max_degree() const {
    Int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, monoid_->degree(e));
    return d;
}

std::string TropPoly::to_string() const {
    if (terms_.empty()) return "-inf";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string cs = c.to_string();
        if (!cs.empty() && cs[0] == '-') cs = "(" + cs + ")";
        if (monoid_->kind() == Monoid::Kind::Free && monoid_->is_one(e)) {
            s += cs;
        } else if (c.is_one()) {
            s += monoid_->to_string(e);
        } else {
            s += cs + "*" + monoid_->to_string(e);
        }
    }
    return s;
}

std::string TropPoly::key() const {
    std::string s(tag_name(tag_));
    s += '|';
    for (const auto& [e, c] : terms_) {
        monoid_->append_key(e, s);
        s += ':';
        s += c.to_string();
        s += ';';
    }
    return s;
}

namespace {

std::string_view trim(std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
}

[[noreturn]] void parse_fail(std::string_view term, const std::string& why) {
    throw std::invalid_argument("tropical polynomial parse error in term '" + std::string(term) +
                                "': " + why);
}

Elt parse_free_monomial(const Monoid& m, std::string_view text) {
    text = trim(text);
    if (text == "1") return m.one();
    FreeElt e{false, std::vector<Int>(m.var_count(), Int(0))};
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto star = text.find('*', pos);
        std::string_view factor =
            trim(text.substr(pos, star == std::string_view::npos ? star : star - pos));
        pos = star == std::string_view::npos ? text.size() : star + 1;
        auto caret = factor.find('^');
        std::string name(trim(factor.substr(0, caret)));
        Int power = 1;
        if (caret != std::string_view::npos) {
            std::string ps(trim(factor.substr(caret + 1)));
            if (ps.empty() || ps.find_first_not_of("0123456789") != std::string::npos)
                parse_fail(text, "bad exponent '" + ps + "'");
            power = Int(ps);
        }
        bool found = false;
        for (int i = 0; i < m.var_count(); ++i)
            if (m.vars()[i] == name) {
                e.exp[i] += power;
                found = true;
                break;
            }
        if (!found) parse_fail(text, "unknown variable '" + name + "'");
    }
    return e;
}

Elt parse_named_monomial(const Monoid& m, std::string_view text) {
    text = trim(text);
    if (m.kind() == Monoid::Kind::Rationals) {
        if (text.size() >= 4 && text.substr(0, 3) == "x_{" && text.back() == '}')
            return m.rational_element(rat_from_string(text.substr(3, text.size() - 4)));
        parse_fail(text, "expected a monomial of the form x_{q}");
    }
    const auto& names = m.element_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == text) return m.table_element(static_cast<int>(i));
    parse_fail(text, "unknown monoid element");
}

}  // namespace

TropPoly TropPoly::parse(std::shared_ptr<const Monoid> monoid, SemiringTag tag,
                         std::string_view text) {
    TropPoly f(monoid, tag);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto sep = text.find(" + ", pos);
        std::string_view term =
            trim(text.substr(pos, sep == std::string_view::npos ? sep : sep - pos));
        pos = sep == std::string_view::npos ? text.size() + 1 : sep + 3;
        if (term.empty()) {
            if (f.is_zero() && pos > text.size()) break;
            parse_fail(text, "empty term");
        }
        if (term == "-inf") continue;  // the zero polynomial / absorbing term
        Value c = Value::one(tag);
        std::string_view monoPart = term;
        if (term.front() == '(') {
            auto close = term.find(')');
            if (close == std::string_view::npos) parse_fail(term, "unbalanced parenthesis");
            auto v = Value::parse(term.substr(1, close - 1), tag);
            if (!v) parse_fail(term, "bad coefficient");
            c = *v;
            monoPart = trim(term.substr(close + 1));
            if (!monoPart.empty()) {
                if (monoPart.front() != '*') parse_fail(term, "expected '*' after coefficient");
                monoPart = trim(monoPart.substr(1));
                if (monoPart.empty()) parse_fail(term, "missing monomial after '*'");
            }
        } else {
            // a leading factor that parses as a semiring value is the coefficient
            auto star = term.find('*');
            std::string_view head = term.substr(0, star);
            bool wholeIsName = monoid->kind() != Monoid::Kind::Free &&
                               [&] {
                                   try {
                                       parse_named_monomial(*monoid, term);
                                       return true;
                                   } catch (const std::invalid_argument&) {
                                       return false;
                                   }
                               }();
            if (!wholeIsName) {
                if (auto v = Value::parse(star == std::string_view::npos ? term : head, tag)) {
                    c = *v;
                    monoPart = star == std::string_view::npos ? std::string_view{}
                                                              : trim(term.substr(star + 1));
                }
            }
        }
        Elt m = monoPart.empty() ? monoid->one()
                                 : (monoid->kind() == Monoid::Kind::Free
                                        ? parse_free_monomial(*monoid, monoPart)
                                        : parse_named_monomial(*monoid, monoPart));
        f.add_term(m, c);
    }
    return f;
}

std::vector<RelationPair> bend(const TropPoly& f) {
    std::vector<RelationPair> out;
    for (const auto& [e, c] : f.terms()) out.push_back({f, f.without(e)});
    return out;
}

// ------------------------------------------------------------------ TPoint

Value TPoint::apply(const Elt& e) const {
    switch (monoid->kind()) {
        case Monoid::Kind::Free: {
            const auto& fe = std::get<FreeElt>(e);
            if (fe.zero) return Value::bottom(tag);
            Value acc = Value::one(tag);
            for (std::size_t i = 0; i < fe.exp.size(); ++i) {
                if (fe.exp[i] == 0) continue;
                acc = mul(acc, values.at(i).pow(fe.exp[i]));
            }
            return acc;
        }
        case Monoid::Kind::Table: return values.at(std::get<TableElt>(e).idx);
        case Monoid::Kind::Rationals:
            throw std::invalid_argument("points over the rational monoid need a valuation object");
    }
    throw std::logic_error("unreachable");
}

bool TPoint::is_hom(std::string* why) const {
    if (monoid->kind() != Monoid::Kind::Table) return true;
    const int n = monoid->table_size();
    if (static_cast<int>(values.size()) != n) {
        if (why) *why = "wrong number of values";
        return false;
    }
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!apply(monoid->zero()).is_bottom()) return fail("zero not sent to bottom");
    if (!apply(monoid->one()).is_one()) return fail("one not sent to the unit");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Elt ea = monoid->table_element(a), eb = monoid->table_element(b);
            if (!(apply(monoid->mul(ea, eb)) == mul(apply(ea), apply(eb))))
                return fail("not multiplicative on " + monoid->to_string(ea) + ", " +
                            monoid->to_string(eb));
        }
    return true;
}

std::string TPoint::to_string() const {
    std::string s = "{";
    const auto& labels =
        monoid->kind() == Monoid::Kind::Free ? monoid->vars() : monoid->element_names();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ", ";
        s += labels.at(i) + " = " + values[i].to_string();
    }
    return s + "}";
}

Value eval(const TropPoly& f, const TPoint& p) {
    if (f.monoid_ptr().get() != p.monoid.get() || f.tag() != p.tag)
        throw std::invalid_argument("evaluation point over a different monoid or semiring");
    Value acc = Value::bottom(f.tag());
    for (const auto& [e, c] : f.terms()) acc = add(acc, mul(c, p.apply(e)));
    return acc;
}

bool eval_relation(const TropPoly& f, const TropPoly& g, const TPoint& p) {
    return eval(f, p) == eval(g, p);
}

bool twice_max(const TropPoly& f, const TPoint& p) {
    Value best = Value::bottom(f.tag());
    int count = 0;
    for (const auto& [e, c] : f.terms()) {
        Value v = mul(c, p.apply(e));
        if (v.is_bottom()) continue;
        auto order = best.is_bottom() ? std::strong_ordering::greater : cmp(v, best);
        if (order > 0) {
            best = v;
            count = 1;
        } else if (order == 0) {
            ++count;
        }
    }
    return count == 0 || count >= 2;
}

}  // namespace bendtrop
