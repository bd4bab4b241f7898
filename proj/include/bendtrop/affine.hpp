#ifndef BENDTROP_AFFINE_HPP
#define BENDTROP_AFFINE_HPP

#include "bendtrop/f1algebra.hpp"
#include "bendtrop/mpoly.hpp"
#include "bendtrop/valuation.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bendtrop {

// A finitely presented affine algebra: either a finite ring given by tables,
// or a quotient Q[x_1..x_n]/(g_1..g_m). For the quotient case each relation
// must expose a pure power of some variable so that substitution gives a
// terminating normal form; one relation per variable at most.
class AffineAlgebra {
  public:
    static std::shared_ptr<AffineAlgebra> rationals();
    static std::shared_ptr<AffineAlgebra> quotient(std::vector<std::string> vars,
                                                   std::vector<MPoly> relations);
    static std::shared_ptr<AffineAlgebra> finite(std::shared_ptr<const FiniteRing> ring);

    bool is_finite() const { return ring_ != nullptr; }
    const std::shared_ptr<const FiniteRing>& ring() const { return ring_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<MPoly>& relations() const { return relations_; }

    // Fully reduced representative of an element (quotient case).
    MPoly normal_form(MPoly f) const;
    bool is_zero(const MPoly& f) const;
    MPoly parse_element(std::string_view text) const;

    // No zero divisors (checked for finite rings; quotient fixtures are
    // constructed integral and assert it).
    bool integral() const;

  private:
    struct Rule {
        int var;
        Int power;
        MPoly replacement;
    };
    std::shared_ptr<const FiniteRing> ring_;
    std::vector<std::string> vars_;
    std::vector<MPoly> relations_;
    std::vector<Rule> rules_;
};

// An embedding of Spec A into the monoid-algebra ambient space of B: the
// generator-image map B -> M(A) together with generators of the kernel of
// the induced surjection onto A.
struct Embedding {
    std::shared_ptr<AffineAlgebra> algebra;
    Valuation nu;
    std::shared_ptr<const Monoid> monoid;  // free, one variable per image
    std::vector<MPoly> images;             // per monoid generator, element of A
    std::vector<MPoly> kernel;             // polynomials in the monoid variables over Q

    // Verifies that every kernel generator maps to zero in A.
    void validate() const;
    // Substitutes the generator images into a polynomial in the monoid
    // variables and reduces in A.
    MPoly substitute(const MPoly& f) const;
};

}  // namespace bendtrop

#endif
