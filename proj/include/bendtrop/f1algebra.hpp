#ifndef BENDTROP_F1ALGEBRA_HPP
#define BENDTROP_F1ALGEBRA_HPP

#include "bendtrop/rational.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace bendtrop {

// Element of a monoid-with-zero. Three carriers:
//   FreeElt  - exponent vector in N^n, or the absorbing zero
//   TableElt - index into a TableMonoid's element list
//   RatElt   - a rational, living in the multiplicative monoid of Q (0 = zero)
struct FreeElt {
    bool zero = false;
    std::vector<Int> exp;
    friend bool operator==(const FreeElt&, const FreeElt&) = default;
};
struct TableElt {
    int idx = 0;
    friend bool operator==(const TableElt&, const TableElt&) = default;
};
struct RatElt {
    Rat value;
    friend bool operator==(const RatElt& a, const RatElt& b) { return rat_eq(a.value, b.value); }
};
using Elt = std::variant<FreeElt, TableElt, RatElt>;

// A finite commutative ring given by tables; the source of TableMonoids and
// of table-based valuation fixtures.
class FiniteRing {
  public:
    FiniteRing(std::vector<std::string> names, std::vector<std::vector<int>> add,
               std::vector<std::vector<int>> mul, int zero, int one);

    static FiniteRing integers_mod(int n);
    // F_p[t]/(modulus); modulus given by its coefficient list (low to high
    // degree, leading coefficient nonzero mod p). Irreducibility is not
    // required, so quotients with nilpotents are expressible.
    static FiniteRing poly_quotient(int p, const std::vector<int>& modulus,
                                    const std::string& var = "t");

    int size() const { return static_cast<int>(names_.size()); }
    int zero() const { return zero_; }
    int one() const { return one_; }
    int add(int a, int b) const { return add_[a][b]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int neg(int a) const { return neg_[a]; }
    const std::string& name(int a) const { return names_[a]; }
    int index_of(const std::string& name) const;
    bool has_zero_divisors() const;
    // a + a + ... (n times), from the prime-subring embedding Z -> A.
    int from_int(long n) const;

  private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> add_, mul_;
    std::vector<int> neg_;
    int zero_, one_;
};

class TableMonoid;
class FreeMonoid;

// A monoid-with-zero: free on named generators, finite with an explicit
// multiplication table, or the multiplicative monoid of Q.
class Monoid {
  public:
    enum class Kind { Free, Table, Rationals };

    static std::shared_ptr<const Monoid> free(std::vector<std::string> vars);
    static std::shared_ptr<const Monoid> table(std::vector<std::string> names,
                                               std::vector<std::vector<int>> mul, int zero,
                                               int one);
    static std::shared_ptr<const Monoid> rationals();

    Kind kind() const { return kind_; }
    int var_count() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    int table_size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& element_names() const { return names_; }

    Elt one() const;
    Elt zero() const;
    Elt generator(int i) const;  // Free only
    Elt table_element(int i) const;
    Elt rational_element(Rat q) const;

    bool is_zero(const Elt& e) const;
    bool is_one(const Elt& e) const;
    Elt mul(const Elt& a, const Elt& b) const;
    // Exact division a / b when it exists in the monoid (componentwise for
    // free monoids, rational division for Q; table monoids only via scan).
    std::optional<Elt> divide(const Elt& a, const Elt& b) const;

    // Canonical total order: graded lex on exponents / element index /
    // numeric order. Drives canonical polynomial form.
    bool less(const Elt& a, const Elt& b) const;
    Int degree(const Elt& e) const;  // total degree; 0 for table/rational elements

    std::string to_string(const Elt& e) const;
    // Compact unambiguous form for hashing.
    void append_key(const Elt& e, std::string& out) const;

    void check_element(const Elt& e) const;

  private:
    Monoid() = default;
    Kind kind_ = Kind::Free;
    std::vector<std::string> vars_;                // free
    std::vector<std::string> names_;               // table
    std::vector<std::vector<int>> mul_;            // table
    int zero_ = 0, one_ = 0;                       // table
};

// The scalar restriction M(A): forget addition, keep the multiplication
// table. Shares the element list of A.
std::shared_ptr<const Monoid> multiplicative_monoid(const FiniteRing& ring);

// Integrality test for a finite monoid-with-zero: no zero divisors and the
// nonzero part is cancellative (finite cancellative monoid => group, so the
// group-completion clause holds automatically).
bool is_integral(const Monoid& m);

// Monoid homomorphism (sends 0 to 0, 1 to 1). For a free source the images
// of the generators determine it; for a table source the full assignment is
// given and the homomorphism property is checked on construction.
class MonoidHom {
  public:
    MonoidHom(std::shared_ptr<const Monoid> source, std::shared_ptr<const Monoid> target,
              std::vector<Elt> images);

    const Monoid& source() const { return *source_; }
    const Monoid& target() const { return *target_; }
    const std::shared_ptr<const Monoid>& source_ptr() const { return source_; }
    const std::shared_ptr<const Monoid>& target_ptr() const { return target_; }
    const std::vector<Elt>& images() const { return images_; }

    Elt apply(const Elt& e) const;

  private:
    std::shared_ptr<const Monoid> source_, target_;
    std::vector<Elt> images_;  // per generator (free) or per element (table)
};

}  // namespace bendtrop

#endif
