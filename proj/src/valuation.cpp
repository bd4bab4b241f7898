#include "bendtrop/valuation.hpp"

#include "bendtrop/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bendtrop {

// ----------------------------------------------------------------- UPoly

UPoly upoly_trim(UPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

UPoly upoly_add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return upoly_trim(std::move(r));
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return upoly_trim(std::move(r));
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return upoly_trim(std::move(r));
}

int upoly_ord(const UPoly& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

std::pair<UPoly, UPoly> upoly_divmod(UPoly num, const UPoly& den) {
    if (den.empty()) throw std::invalid_argument("polynomial division by zero");
    UPoly q(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rat f = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = f;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        num = upoly_trim(std::move(num));
        if (num.size() < den.size()) break;
    }
    return {upoly_trim(std::move(q)), std::move(num)};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    a = upoly_trim(std::move(a));
    b = upoly_trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = upoly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

std::string upoly_to_string(const UPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string s;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        if (p[i] == 0) continue;
        Rat a = p[i];
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (i == 0 || a != 1) s += rat_to_string(a);
        if (i >= 1) {
            if (a != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

UPoly upoly_parse(std::string_view text, const std::string& var) {
    MPoly p = MPoly::parse({var}, text);
    UPoly r;
    for (const auto& [e, c] : p.terms()) {
        const auto deg = static_cast<std::size_t>(e[0]);
        if (r.size() <= deg) r.resize(deg + 1, Rat(0));
        r[deg] = c;
    }
    return upoly_trim(std::move(r));
}

// ----------------------------------------------------------------- RatFunc

RatFunc RatFunc::make(UPoly num, UPoly den) {
    num = upoly_trim(std::move(num));
    den = upoly_trim(std::move(den));
    if (den.empty()) throw std::invalid_argument("rational function with zero denominator");
    if (num.empty()) return RatFunc{};
    UPoly g = upoly_gcd(num, den);
    if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
        num = upoly_divmod(num, g).first;
        den = upoly_divmod(den, g).first;
    }
    Rat lead = den.back();
    for (auto& c : den) c /= lead;
    for (auto& c : num) c /= lead;
    return RatFunc{std::move(num), std::move(den)};
}

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
    return RatFunc::make(upoly_add(upoly_mul(a.num, b.den), upoly_mul(b.num, a.den)),
                         upoly_mul(a.den, b.den));
}

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
    return RatFunc::make(upoly_mul(a.num, b.num), upoly_mul(a.den, b.den));
}

RatFunc rf_neg(const RatFunc& a) {
    RatFunc r = a;
    for (auto& c : r.num) c = -c;
    return r;
}

// ------------------------------------------------------------- RingElement

namespace {

[[noreturn]] void domain_mismatch() {
    throw std::invalid_argument("ring elements from different coefficient rings");
}

RatFunc promote(const Rat& r) {
    if (r == 0) return RatFunc{};
    return RatFunc{{r}, {Rat(1)}};
}

}  // namespace

RingElement relem_add(const RingElement& a, const RingElement& b) {
    if (const auto* ra = std::get_if<Rat>(&a)) {
        if (const auto* rb = std::get_if<Rat>(&b)) return *ra + *rb;
        if (const auto* fb = std::get_if<RatFunc>(&b)) return rf_add(promote(*ra), *fb);
        domain_mismatch();
    }
    if (const auto* fa = std::get_if<RatFunc>(&a)) {
        if (const auto* rb = std::get_if<Rat>(&b)) return rf_add(*fa, promote(*rb));
        if (const auto* fb = std::get_if<RatFunc>(&b)) return rf_add(*fa, *fb);
        domain_mismatch();
    }
    const auto& ea = std::get<FiniteElt>(a);
    const auto* eb = std::get_if<FiniteElt>(&b);
    if (!eb || eb->ring.get() != ea.ring.get()) domain_mismatch();
    return FiniteElt{ea.ring, ea.ring->add(ea.idx, eb->idx)};
}

RingElement relem_mul(const RingElement& a, const RingElement& b) {
    if (const auto* ra = std::get_if<Rat>(&a)) {
        if (const auto* rb = std::get_if<Rat>(&b)) return *ra * *rb;
        if (const auto* fb = std::get_if<RatFunc>(&b)) return rf_mul(promote(*ra), *fb);
        domain_mismatch();
    }
    if (const auto* fa = std::get_if<RatFunc>(&a)) {
        if (const auto* rb = std::get_if<Rat>(&b)) return rf_mul(*fa, promote(*rb));
        if (const auto* fb = std::get_if<RatFunc>(&b)) return rf_mul(*fa, *fb);
        domain_mismatch();
    }
    const auto& ea = std::get<FiniteElt>(a);
    const auto* eb = std::get_if<FiniteElt>(&b);
    if (!eb || eb->ring.get() != ea.ring.get()) domain_mismatch();
    return FiniteElt{ea.ring, ea.ring->mul(ea.idx, eb->idx)};
}

RingElement relem_neg(const RingElement& a) {
    if (const auto* r = std::get_if<Rat>(&a)) return -*r;
    if (const auto* f = std::get_if<RatFunc>(&a)) return rf_neg(*f);
    const auto& e = std::get<FiniteElt>(a);
    return FiniteElt{e.ring, e.ring->neg(e.idx)};
}

bool relem_is_zero(const RingElement& a) {
    if (const auto* r = std::get_if<Rat>(&a)) return *r == 0;
    if (const auto* f = std::get_if<RatFunc>(&a)) return f->is_zero();
    const auto& e = std::get<FiniteElt>(a);
    return e.idx == e.ring->zero();
}

std::string relem_to_string(const RingElement& a) {
    if (const auto* r = std::get_if<Rat>(&a)) return rat_to_string(*r);
    if (const auto* f = std::get_if<RatFunc>(&a)) {
        if (f->is_zero()) return "0";
        std::string s = "(" + upoly_to_string(f->num) + ")";
        if (f->den.size() != 1 || f->den[0] != 1) s += "/(" + upoly_to_string(f->den) + ")";
        return s;
    }
    const auto& e = std::get<FiniteElt>(a);
    return e.ring->name(e.idx);
}

Int padic_order(const Rat& r, const Int& p) {
    if (r == 0) throw std::invalid_argument("padic_order of zero");
    auto count = [&p](Int n) {
        Int k = 0;
        if (n < 0) n = -n;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        return k;
    };
    return count(numerator(r)) - count(denominator(r));
}

// --------------------------------------------------------------- Valuation

Valuation Valuation::trivial() { return Valuation(); }

Valuation Valuation::p_adic(Int p) {
    if (p < 2) throw std::invalid_argument("p-adic valuation needs p >= 2");
    Valuation v;
    v.kind_ = Kind::PAdic;
    v.p_ = std::move(p);
    return v;
}

Valuation Valuation::t_adic() {
    Valuation v;
    v.kind_ = Kind::TAdic;
    return v;
}

Valuation Valuation::lex_composite(Valuation outer, Valuation inner) {
    if (outer.kind_ != Kind::TAdic)
        throw std::invalid_argument("lex composite: outer valuation must be t-adic");
    if (inner.kind_ != Kind::PAdic && inner.kind_ != Kind::Trivial)
        throw std::invalid_argument("lex composite: inner valuation must act on Q");
    Valuation v;
    v.kind_ = Kind::Lex;
    v.outer_ = std::make_shared<Valuation>(std::move(outer));
    v.inner_ = std::make_shared<Valuation>(std::move(inner));
    return v;
}

Value Valuation::apply(const RingElement& a) const {
    if (relem_is_zero(a)) return Value::bottom(target());
    switch (kind_) {
        case Kind::Trivial: return Value::one(SemiringTag::Trop);
        case Kind::PAdic: {
            const auto* r = std::get_if<Rat>(&a);
            if (!r) throw std::invalid_argument("p-adic valuation applies to rationals");
            return Value::trop(-Rat(padic_order(*r, p_)));
        }
        case Kind::TAdic: {
            if (const auto* r = std::get_if<Rat>(&a)) {
                (void)r;
                return Value::one(SemiringTag::Trop);  // nonzero constants have order 0
            }
            const auto& f = std::get<RatFunc>(a);
            return Value::trop(Rat(-(upoly_ord(f.num) - upoly_ord(f.den))));
        }
        case Kind::Lex: {
            UPoly num, den;
            if (const auto* r = std::get_if<Rat>(&a)) {
                num = {*r};
                den = {Rat(1)};
            } else {
                const auto& f = std::get<RatFunc>(a);
                num = f.num;
                den = f.den;
            }
            const int on = upoly_ord(num), od = upoly_ord(den);
            const Rat lead = num[on] / den[od];
            Value innerVal = inner_->apply(RingElement{lead});
            return Value::rank2(Rat(-(on - od)), innerVal.finite());
        }
    }
    throw std::logic_error("unreachable");
}

std::string Valuation::describe() const {
    switch (kind_) {
        case Kind::Trivial: return "trivial";
        case Kind::PAdic: return p_.str() + "-adic";
        case Kind::TAdic: return "t-adic";
        case Kind::Lex: return "lex(" + outer_->describe() + ", " + inner_->describe() + ")";
    }
    return "?";
}

// ------------------------------------------------------------ check_axioms

namespace {

struct AxiomContext {
    AxiomReport report;

    void expect(bool cond, const std::string& axiom, const std::string& witness) {
        if (!cond) {
            report.ok = false;
            report.violations.push_back({axiom, witness});
        }
    }
};

void check_pair(AxiomContext& ctx, const std::function<Value(const RingElement&)>& nu,
                const RingElement& a, const RingElement& b) {
    const Value va = nu(a), vb = nu(b);
    const Value vab = nu(relem_mul(a, b));
    ctx.expect(vab == mul(va, vb), "multiplicativity",
               "a=" + relem_to_string(a) + " b=" + relem_to_string(b));
    ctx.expect(nu(relem_neg(a)) == va, "nu(-a)=nu(a)", "a=" + relem_to_string(a));
    const Value vsum = nu(relem_add(a, b));
    const Value rhs = add(va, vb);
    ctx.expect(add(vsum, rhs) == rhs, "subadditivity",
               "a=" + relem_to_string(a) + " b=" + relem_to_string(b));
    ++ctx.report.pairs_checked;
}

}  // namespace

AxiomReport check_axioms(const Valuation& nu, const RingElement& zero, const RingElement& one,
                         const std::vector<std::pair<RingElement, RingElement>>& sample) {
    AxiomContext ctx;
    auto f = [&nu](const RingElement& x) { return nu.apply(x); };
    ctx.expect(nu.apply(zero).is_bottom(), "nu(0)=0_S", "0");
    ctx.expect(nu.apply(one).is_one(), "nu(1)=1_S", "1");
    for (const auto& [a, b] : sample) check_pair(ctx, f, a, b);
    return ctx.report;
}

AxiomReport check_axioms(const ValuationTable& table) {
    AxiomContext ctx;
    const auto& ring = *table.ring;
    if (static_cast<int>(table.values.size()) != ring.size())
        throw std::invalid_argument("valuation table: one value per ring element required");
    auto f = [&table](const RingElement& x) { return table.values[std::get<FiniteElt>(x).idx]; };
    ctx.expect(table.values[ring.zero()].is_bottom(), "nu(0)=0_S", ring.name(ring.zero()));
    ctx.expect(table.values[ring.one()].is_one(), "nu(1)=1_S", ring.name(ring.one()));
    for (int a = 0; a < ring.size(); ++a)
        for (int b = 0; b < ring.size(); ++b)
            check_pair(ctx, f, FiniteElt{table.ring, a}, FiniteElt{table.ring, b});
    return ctx.report;
}

}  // namespace bendtrop
