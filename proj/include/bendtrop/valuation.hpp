#ifndef BENDTROP_VALUATION_HPP
#define BENDTROP_VALUATION_HPP

#include "bendtrop/f1algebra.hpp"
#include "bendtrop/rational.hpp"
#include "bendtrop/semiring.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace bendtrop {

// Univariate polynomials over Q, coefficient list low to high degree.
using UPoly = std::vector<Rat>;

UPoly upoly_trim(UPoly p);
UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
int upoly_ord(const UPoly& p);
UPoly upoly_gcd(UPoly a, UPoly b);
std::pair<UPoly, UPoly> upoly_divmod(UPoly num, const UPoly& den);
std::string upoly_to_string(const UPoly& p, const std::string& var = "t");
UPoly upoly_parse(std::string_view text, const std::string& var = "t");

// Element of Q(t) as a reduced fraction of polynomials; the denominator is
// kept monic so the representation is canonical.
struct RatFunc {
    UPoly num{};
    UPoly den{Rat(1)};

    static RatFunc make(UPoly num, UPoly den);
    bool is_zero() const { return num.empty(); }
    friend bool operator==(const RatFunc&, const RatFunc&) = default;
};

RatFunc rf_add(const RatFunc& a, const RatFunc& b);
RatFunc rf_mul(const RatFunc& a, const RatFunc& b);
RatFunc rf_neg(const RatFunc& a);

struct FiniteElt {
    std::shared_ptr<const FiniteRing> ring;
    int idx = 0;
    friend bool operator==(const FiniteElt& a, const FiniteElt& b) {
        return a.ring.get() == b.ring.get() && a.idx == b.idx;
    }
};

// Element of one of the supported exact coefficient rings.
using RingElement = std::variant<Rat, RatFunc, FiniteElt>;

RingElement relem_add(const RingElement& a, const RingElement& b);
RingElement relem_mul(const RingElement& a, const RingElement& b);
RingElement relem_neg(const RingElement& a);
bool relem_is_zero(const RingElement& a);
std::string relem_to_string(const RingElement& a);

// p-adic valuation v_p on Q (number of factors p, negative for denominators).
Int padic_order(const Rat& r, const Int& p);

// A generalized valuation nu : R -> S into an idempotent semiring.
//
// Sign convention: the target is max-plus, so the p-adic valuation is
// nu(a) = -v_p(a) -- elements that are "more divisible by p" sit lower.
// (Min-plus conventions flip this sign; everything here is max-plus.)
class Valuation {
  public:
    enum class Kind { Trivial, PAdic, TAdic, Lex };

    static Valuation trivial();
    static Valuation p_adic(Int p);
    static Valuation t_adic();
    // Rank-2 lexicographic composite: the outer valuation gives the first
    // component, the inner valuation (applied to the leading coefficient at
    // the outer uniformizer) the second. Outer must be t-adic; inner acts
    // on Q.
    static Valuation lex_composite(Valuation outer, Valuation inner);

    Kind kind() const { return kind_; }
    const Int& prime() const { return p_; }
    SemiringTag target() const { return kind_ == Kind::Lex ? SemiringTag::Rank2 : SemiringTag::Trop; }
    const Valuation& outer() const { return *outer_; }
    const Valuation& inner() const { return *inner_; }

    Value apply(const RingElement& a) const;
    std::string describe() const;

  private:
    Kind kind_ = Kind::Trivial;
    Int p_ = 0;
    std::shared_ptr<Valuation> outer_, inner_;
};

// Candidate valuation on a finite ring, given pointwise.
struct ValuationTable {
    std::shared_ptr<const FiniteRing> ring;
    std::vector<Value> values;  // one per ring element
};

struct AxiomViolation {
    std::string axiom;
    std::string witness;
};

struct AxiomReport {
    bool ok = true;
    long pairs_checked = 0;
    std::vector<AxiomViolation> violations;
};

// Checks nu(0)=0_S, nu(1)=1_S, nu(ab)=nu(a)nu(b), nu(-a)=nu(a), and the
// subadditivity identity nu(a+b) + nu(a) + nu(b) = nu(a) + nu(b) over the
// sampled pairs. Violations are reported, not thrown.
AxiomReport check_axioms(const Valuation& nu, const RingElement& zero, const RingElement& one,
                         const std::vector<std::pair<RingElement, RingElement>>& sample);

// Exhaustive variant for a pointwise table on a finite ring.
AxiomReport check_axioms(const ValuationTable& table);

}  // namespace bendtrop

#endif
