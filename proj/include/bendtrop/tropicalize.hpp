#ifndef BENDTROP_TROPICALIZE_HPP
#define BENDTROP_TROPICALIZE_HPP

#include "bendtrop/affine.hpp"
#include "bendtrop/congruence.hpp"
#include "bendtrop/trop_poly.hpp"
#include "bendtrop/valuation.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bendtrop {

// Bend-relation presentation of a tropicalization, with the truncation
// degree that produced the underlying basis.
struct TropPresentation {
    std::shared_ptr<const Monoid> monoid;
    SemiringTag tag = SemiringTag::Trop;
    Congruence congruence;
    std::vector<TropPoly> basis;  // the tropicalized polynomials whose bends generate it
    Int truncation_degree = 0;
};

// Coefficient-wise valuation of a polynomial, term by term.
TropPoly trop_of_poly(const MPoly& f, const Valuation& nu,
                      const std::shared_ptr<const Monoid>& monoid);

// Minimal-support elements (circuits) of the degree <= d slice of the ideal
// generated by the embedding's kernel, valuated coefficient-wise.
// Slices with more than `column_cap` monomials raise ResourceError.
std::vector<TropPoly> trop_ideal_truncated(const Embedding& E, int d, int column_cap = 18);

TropPresentation trop_presentation(const Embedding& E, int d);

// Twice-max test against every basis element.
bool settheoretic_member(const TPoint& point, const std::vector<TropPoly>& basis);

// A polynomial over the coefficient ring whose monomials are indexed by ring
// elements (the ambient of the universal embedding). Monomials live in M(A):
// a table monoid for finite A, the rational monoid for A = Q.
struct KernelPoly {
    std::shared_ptr<const Monoid> monoid;
    std::vector<std::pair<Elt, RingElement>> terms;  // coefficient sums taken in the ring

    void add_term(const Elt& m, const RingElement& c);
    std::string to_string() const;
};

TropPoly trop_of_kernel(const KernelPoly& f, const Valuation& nu);

// Generators of ker(ev): lambda*x_a - x_{lambda a} over nonzero a and
// non-unit scalars, and x_a + x_b + x_c for nonzero triples with a+b+c = 0.
std::vector<KernelPoly> universal_kernel_generators(const std::shared_ptr<const FiniteRing>& A);
std::vector<KernelPoly> universal_kernel_generators(const std::vector<Rat>& sample,
                                                    const std::vector<Rat>& scalars);

TropPresentation universal_trop(const std::shared_ptr<const FiniteRing>& A, const Valuation& nu);
TropPresentation universal_trop(const std::vector<Rat>& sample, const std::vector<Rat>& scalars,
                                const Valuation& nu);

// ---------------------------------------------------------------- moduli

struct ValPointReport {
    bool ok = true;
    bool multiplicative = true;
    long pairs_checked = 0;
    // whenever the subadditivity equality held, the two other equalities of
    // the bend triple held as well
    bool redundancy_ok = true;
    std::vector<std::string> violations;
};

// Exhaustive check that alpha (a point of M(A)) is a valuation on the finite
// ring A compatible with nu on the prime subring.
ValPointReport is_valuation_point(const TPoint& alpha, const std::shared_ptr<const FiniteRing>& A,
                                  const Valuation& nu);

// A valuation point of an affine algebra over Q: a multiplicative,
// subadditive map from the algebra to the semiring.
class ValuationPoint {
  public:
    // w(f) = nu(f(coords)); coords must satisfy the defining relations.
    static ValuationPoint from_evaluation(std::shared_ptr<AffineAlgebra> A,
                                          std::vector<Rat> coords, Valuation nu);
    // For A = Q[x]/(x^2 - c): w(a0 + a1 x) = max(nu(a0), nu(a1) + nu(c)/2),
    // the unique extension of nu to the quadratic field when nu(c) is odd.
    static ValuationPoint quadratic_extension(std::shared_ptr<AffineAlgebra> A, Valuation nu);
    static ValuationPoint trivial(std::shared_ptr<AffineAlgebra> A);

    Value apply(const MPoly& element) const;
    SemiringTag target() const { return tag_; }
    const std::shared_ptr<AffineAlgebra>& algebra() const { return algebra_; }

  private:
    std::shared_ptr<AffineAlgebra> algebra_;
    SemiringTag tag_ = SemiringTag::Trop;
    std::function<Value(const MPoly&)> fn_;
};

// Sampled counterpart of is_valuation_point for algebras over Q.
ValPointReport is_valuation_point(const ValuationPoint& w, const Valuation& nu,
                                  const std::vector<std::pair<MPoly, MPoly>>& pairs,
                                  const std::vector<Rat>& scalars);

// Restriction of a valuation point along the embedding's monomial images.
TPoint pi_map(const ValuationPoint& w, const Embedding& E);

// ----------------------------------------------------------- point solving

struct PointSet {
    std::vector<TPoint> points;
    bool complete = true;  // false when a coordinate was unconstrained and no grid was given
};

// All points satisfying the presentation's congruence generators. Free
// monoids: candidates per coordinate come from pairwise term equalities of
// the basis (plus bottom and the optional grid). Table monoids: values of
// torsion elements are forced, the rest scans the grid.
PointSet solve_points(const TropPresentation& P, const std::vector<Rat>& grid = {});

// --------------------------------------------------------------- functors

struct InducedMap {
    MonoidHom psi;
    // source generator pairs pushed through psi, with a derivability verdict
    // in the target congruence
    struct Pushed {
        RelationPair pair;
        SearchResult verdict;
    };
    std::vector<Pushed> pushed;

    // precomposition with psi: a point of the target presentation restricts
    // to a point of the source presentation
    TPoint pull_point(const TPoint& target_point) const;
};

// psi must commute with the generator images into A (checked).
InducedMap induced_map(const MonoidHom& psi, const Embedding& src, const Embedding& tgt,
                       const TropPresentation& src_pres, const TropPresentation& tgt_pres,
                       const SearchBudget& budget);

TropPoly map_poly(const MonoidHom& psi, const TropPoly& f);

struct DiagramArrow {
    int src = 0, tgt = 0;
    MonoidHom psi;  // monoid of node src -> monoid of node tgt
};

struct Family {
    std::vector<TPoint> points;  // one per diagram node
};

struct LimitResult {
    std::vector<Family> families;
    std::vector<PointSet> node_points;
    bool complete = true;
};

LimitResult limit_points(const std::vector<Embedding>& nodes,
                         const std::vector<DiagramArrow>& arrows, int d,
                         const std::vector<Rat>& grid = {});

}  // namespace bendtrop

#endif
