#ifndef BENDTROP_MPOLY_HPP
#define BENDTROP_MPOLY_HPP

#include "bendtrop/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace bendtrop {

// Sparse multivariate polynomial over Q with a fixed, named variable list.
// Terms are kept in a map keyed by exponent vector, so the representation is
// canonical (no zero coefficients stored).
class MPoly {
  public:
    using Exp = std::vector<Int>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, Rat c);
    static MPoly variable(std::vector<std::string> vars, int i);
    // Parses sums of terms: "u^2 - 2", "3/2*x*y^2 + x - 1". No parentheses.
    static MPoly parse(std::vector<std::string> vars, std::string_view text);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exp, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int total_degree() const;

    void add_term(const Exp& e, const Rat& c);

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly scaled(const Rat& c) const;
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

    Rat eval(const std::vector<Rat>& point) const;
    std::string to_string() const;

  private:
    void require_same(const MPoly& other) const;
    std::vector<std::string> vars_;
    std::map<Exp, Rat> terms_;
};

}  // namespace bendtrop

#endif
