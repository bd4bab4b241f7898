#include "bendtrop/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace bendtrop {

std::shared_ptr<AffineAlgebra> AffineAlgebra::rationals() {
    return quotient({}, {});
}

std::shared_ptr<AffineAlgebra> AffineAlgebra::quotient(std::vector<std::string> vars,
                                                       std::vector<MPoly> relations) {
    auto a = std::make_shared<AffineAlgebra>();
    a->vars_ = std::move(vars);
    a->relations_ = std::move(relations);
    for (const auto& g : a->relations_) {
        if (g.vars() != a->vars_)
            throw std::invalid_argument("relation over a different variable list");
        // pick the pure-power term of the highest-indexed variable as the
        // rewrite head: x_i^d -> x_i^d - g / coeff
        int bestVar = -1;
        Int bestPow = 0;
        Rat bestCoeff;
        for (const auto& [e, c] : g.terms()) {
            int nz = -1;
            bool pure = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (nz >= 0) pure = false;
                nz = static_cast<int>(i);
            }
            if (!pure || nz < 0) continue;
            if (nz > bestVar || (nz == bestVar && e[nz] > bestPow)) {
                bestVar = nz;
                bestPow = e[nz];
                bestCoeff = c;
            }
        }
        if (bestVar < 0)
            throw std::invalid_argument("relation '" + g.to_string() +
                                        "' has no pure-power head term");
        for (const auto& r : a->rules_)
            if (r.var == bestVar)
                throw std::invalid_argument("two relations rewrite the same variable");
        MPoly::Exp head(a->vars_.size(), Int(0));
        head[bestVar] = bestPow;
        MPoly repl = g.scaled(Rat(-1) / bestCoeff);
        repl.add_term(head, Rat(1));  // repl = x^d - g/c
        // the replacement must not contain the head variable at power >= d
        for (const auto& [e, c] : repl.terms())
            if (e[bestVar] >= bestPow)
                throw std::invalid_argument("relation '" + g.to_string() +
                                            "' does not eliminate its head power");
        a->rules_.push_back({bestVar, bestPow, std::move(repl)});
    }
    return a;
}

std::shared_ptr<AffineAlgebra> AffineAlgebra::finite(std::shared_ptr<const FiniteRing> ring) {
    auto a = std::make_shared<AffineAlgebra>();
    a->ring_ = std::move(ring);
    return a;
}

MPoly AffineAlgebra::normal_form(MPoly f) const {
    if (is_finite()) throw std::invalid_argument("normal_form applies to quotient algebras");
    if (f.vars() != vars_) throw std::invalid_argument("element over a different variable list");
    for (long guard = 0; guard < 100000; ++guard) {
        bool reduced = false;
        for (const auto& rule : rules_) {
            for (const auto& [e, c] : f.terms()) {
                if (e[rule.var] < rule.power) continue;
                MPoly::Exp rest = e;
                rest[rule.var] -= rule.power;
                MPoly cof(vars_);
                cof.add_term(rest, c);
                MPoly head(vars_);
                head.add_term(e, c);
                f = f - head + cof * rule.replacement;
                reduced = true;
                break;
            }
            if (reduced) break;
        }
        if (!reduced) return f;
    }
    throw std::invalid_argument("normal form reduction did not terminate");
}

bool AffineAlgebra::is_zero(const MPoly& f) const {
    return normal_form(f).is_zero();
}

MPoly AffineAlgebra::parse_element(std::string_view text) const {
    return normal_form(MPoly::parse(vars_, text));
}

bool AffineAlgebra::integral() const {
    if (is_finite()) return !ring_->has_zero_divisors();
    return true;  // quotient fixtures are constructed from irreducible relations
}

void Embedding::validate() const {
    if (!monoid || monoid->kind() != Monoid::Kind::Free)
        throw std::invalid_argument("embedding needs a free monoid of monomials");
    if (static_cast<int>(images.size()) != monoid->var_count())
        throw std::invalid_argument("one image per monoid generator required");
    for (const auto& g : kernel)
        if (!algebra->is_zero(substitute(g)))
            throw std::invalid_argument("kernel generator '" + g.to_string() +
                                        "' does not vanish in the algebra");
}

MPoly Embedding::substitute(const MPoly& f) const {
    MPoly acc(algebra->vars());
    for (const auto& [e, c] : f.terms()) {
        MPoly t = MPoly::constant(algebra->vars(), c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (Int k = 0; k < e[i]; ++k) t = t * images[i];
        acc = acc + t;
    }
    return algebra->normal_form(acc);
}

}  // namespace bendtrop
