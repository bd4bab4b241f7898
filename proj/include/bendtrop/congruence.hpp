#ifndef BENDTROP_CONGRUENCE_HPP
#define BENDTROP_CONGRUENCE_HPP

#include "bendtrop/trop_poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bendtrop {

// Raised when a bounded computation exceeds a configured resource cap
// (distinct from usage errors; the CLI maps it to its own exit code).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchBudget {
    Int max_multiplier_degree = 3;  // monomial multipliers on generators
    int max_context = 8;            // tight-set size up to which kept subsets are enumerated
    int max_chain = 32;             // derivation length cap
    long max_frontier = 20000;      // node expansion cap
};

// One rewrite: f -> f' where f = s*u*g_l + h and f' = s*u*g_r + h for the
// cited generator (sides swapped when reversed). The context h is stored so
// a derivation replays without searching.
struct DerivationStep {
    int generator = 0;
    bool reversed = false;
    Value scalar;
    Elt monomial;
    TropPoly context;
};

struct Derivation {
    std::vector<DerivationStep> steps;
};

enum class SearchStatus { Proven, Unknown };

struct SearchResult {
    SearchStatus status = SearchStatus::Unknown;
    Derivation derivation;  // meaningful when Proven
    long expanded = 0;
};

// Bounded bidirectional search for q in the congruence generated by C.
// Unknown means the budget ran out, never disproof.
SearchResult contains(const Congruence& C, const RelationPair& q, const SearchBudget& budget);

// Replays a derivation step by step; returns false (with a reason) when any
// step is not a legal generator instance or the endpoints do not match.
bool verify_derivation(const Congruence& C, const RelationPair& q, const Derivation& d,
                       std::string* why = nullptr);

// Applies one step to f; throws std::invalid_argument when illegal.
TropPoly apply_step(const Congruence& C, const TropPoly& f, const DerivationStep& step);

struct Partition {
    std::vector<int> class_of;               // per universe index
    std::vector<std::vector<int>> classes;   // sorted, smallest member first
};

// Exhaustive closure of the generator instances inside an explicit finite
// universe of polynomials; the brute-force oracle for the search engine.
Partition oracle_closure(const Congruence& C, const std::vector<TropPoly>& universe,
                         std::size_t cap = 4096);

}  // namespace bendtrop

#endif
