#include "bendtrop/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bendtrop {

MPoly MPoly::constant(std::vector<std::string> vars, Rat c) {
    MPoly p(std::move(vars));
    p.add_term(Exp(p.vars_.size(), Int(0)), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, int i) {
    MPoly p(std::move(vars));
    if (i < 0 || i >= static_cast<int>(p.vars_.size())) throw std::invalid_argument("variable index");
    Exp e(p.vars_.size(), Int(0));
    e[i] = 1;
    p.add_term(e, Rat(1));
    return p;
}

void MPoly::add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int MPoly::total_degree() const {
    Int d = 0;
    for (const auto& [e, c] : terms_) {
        Int t = 0;
        for (const auto& x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void MPoly::require_same(const MPoly& other) const {
    if (vars_ != other.vars_) throw std::invalid_argument("polynomials over different variable lists");
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    a.require_same(b);
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.require_same(b);
    MPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MPoly::Exp e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("eval: wrong point dimension");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (Int k = 0; k < e[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // highest-degree terms first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + e[i].str();
        }
        if (mono.empty()) {
            s += rat_to_string(a);
        } else {
            if (a != 1) s += rat_to_string(a) + "*";
            s += mono;
        }
    }
    return s;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + why);
    }

    Int parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail("expected a number");
        return Int(std::string(text.substr(start, pos - start)));
    }

    Rat parse_number() {
        Int num = parse_uint();
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            Int den = parse_uint();
            if (den == 0) fail("zero denominator");
            return Rat(num, den);
        }
        return Rat(num);
    }

    int parse_var() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a variable name");
        std::string name(text.substr(start, pos - start));
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        fail("unknown variable '" + name + "'");
    }

    // term := [number] {'*'? varpow}*  |  varpow {'*' varpow}*
    MPoly parse_term() {
        MPoly acc = MPoly::constant(vars, Rat(1));
        bool saw_factor = false;
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            acc = MPoly::constant(vars, parse_number());
            saw_factor = true;
        }
        while (!eof()) {
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            } else if (pos < text.size() &&
                       (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                // implicit product, fall through
            } else {
                break;
            }
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                acc = acc * MPoly::constant(vars, parse_number());
                saw_factor = true;
                continue;
            }
            int v = parse_var();
            Int power = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                power = parse_uint();
            }
            MPoly::Exp e(vars.size(), Int(0));
            e[v] = power;
            MPoly mono(vars);
            mono.add_term(e, Rat(1));
            acc = acc * mono;
            saw_factor = true;
        }
        if (!saw_factor) fail("empty term");
        return acc;
    }

    MPoly parse_sum() {
        MPoly result(vars);
        bool first = true;
        while (!eof()) {
            int sign = 1;
            skip_ws();
            if (text[pos] == '+' || text[pos] == '-') {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            MPoly t = parse_term();
            result = (sign > 0) ? result + t : result - t;
            first = false;
        }
        if (first) fail("empty polynomial");
        return result;
    }
};

}  // namespace

MPoly MPoly::parse(std::vector<std::string> vars, std::string_view text) {
    Parser p{text, 0, vars};
    return p.parse_sum();
}

}  // namespace bendtrop
