#ifndef BENDTROP_TROP_POLY_HPP
#define BENDTROP_TROP_POLY_HPP

#include "bendtrop/f1algebra.hpp"
#include "bendtrop/semiring.hpp"

#include <memory>
#include <string>
#include <vector>

namespace bendtrop {

// A tropical polynomial: finitely supported map monomial -> semiring value,
// kept canonical (terms sorted by the monoid's order, coefficients on equal
// monomials merged by semiring add, no bottom coefficients, and the monoid's
// absorbing zero never appears as a monomial).
class TropPoly {
  public:
    using Term = std::pair<Elt, Value>;

    TropPoly(std::shared_ptr<const Monoid> monoid, SemiringTag tag)
        : monoid_(std::move(monoid)), tag_(tag) {}

    static TropPoly term(std::shared_ptr<const Monoid> monoid, Elt m, Value c);

    const std::shared_ptr<const Monoid>& monoid_ptr() const { return monoid_; }
    const Monoid& monoid() const { return *monoid_; }
    SemiringTag tag() const { return tag_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int support_size() const { return static_cast<int>(terms_.size()); }

    // Semiring-add c onto the monomial m (canonicalizing).
    void add_term(const Elt& m, const Value& c);
    // Coefficient of m; bottom when m is not in the support.
    Value coeff(const Elt& m) const;
    // Copy with the term at monomial m deleted.
    TropPoly without(const Elt& m) const;

    friend TropPoly add(const TropPoly& a, const TropPoly& b);
    TropPoly scaled(const Value& s) const;
    TropPoly mul_monomial(const Elt& u) const;
    friend bool operator==(const TropPoly& a, const TropPoly& b);

    // True when every coefficient of *this is <= the matching coefficient
    // of g (missing terms count as bottom).
    bool dominated_by(const TropPoly& g) const;

    Int max_degree() const;

    std::string to_string() const;
    std::string key() const;  // compact canonical form for hashing
    // Inverse of to_string; terms are separated by " + ".
    static TropPoly parse(std::shared_ptr<const Monoid> monoid, SemiringTag tag,
                          std::string_view text);

  private:
    void require_compatible(const TropPoly& other) const;
    std::shared_ptr<const Monoid> monoid_;
    SemiringTag tag_;
    std::vector<Term> terms_;
};

struct RelationPair {
    TropPoly lhs, rhs;
};

struct Congruence {
    std::vector<RelationPair> generators;
    std::string name;
};

// One relation per support monomial b of f: f ~ (f with b deleted).
std::vector<RelationPair> bend(const TropPoly& f);

// A point of the tropicalization: a monoid-with-zero homomorphism from the
// monoid into the multiplicative monoid of the semiring, given on generators
// (free monoid) or elementwise (table monoid).
struct TPoint {
    std::shared_ptr<const Monoid> monoid;
    SemiringTag tag = SemiringTag::Trop;
    std::vector<Value> values;

    Value apply(const Elt& e) const;
    // For table monoids: verify the assignment really is a homomorphism
    // sending zero to bottom and one to the semiring unit.
    bool is_hom(std::string* why = nullptr) const;
    std::string to_string() const;
};

Value eval(const TropPoly& f, const TPoint& p);
bool eval_relation(const TropPoly& f, const TropPoly& g, const TPoint& p);

// Max over the support attained at least twice, or bottom.
bool twice_max(const TropPoly& f, const TPoint& p);

}  // namespace bendtrop

#endif
