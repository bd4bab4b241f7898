#include "bendtrop/tropicalize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bendtrop {

TropPoly trop_of_poly(const MPoly& f, const Valuation& nu,
                      const std::shared_ptr<const Monoid>& monoid) {
    if (monoid->kind() != Monoid::Kind::Free ||
        monoid->var_count() != static_cast<int>(f.vars().size()))
        throw std::invalid_argument("trop_of_poly needs a free monoid matching the variables");
    TropPoly out(monoid, nu.target());
    for (const auto& [e, c] : f.terms()) out.add_term(FreeElt{false, e}, nu.apply(RingElement{c}));
    return out;
}

// ------------------------------------------------- truncated tropical ideal

namespace {

void enumerate_exponents(int nvars, int degree_left, std::vector<Int>& cur,
                         std::vector<std::vector<Int>>& out) {
    if (static_cast<int>(cur.size()) == nvars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= degree_left; ++e) {
        cur.push_back(Int(e));
        enumerate_exponents(nvars, degree_left - e, cur, out);
        cur.pop_back();
    }
}

// Reduced row echelon form over Q; returns the rank.
int rref(std::vector<std::vector<Rat>>& m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rat inv = Rat(1) / m[rank][col];
        for (auto& x : m[rank]) x *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int c2 = 0; c2 < cols; ++c2) m[r][c2] -= f * m[rank][c2];
        }
        ++rank;
    }
    m.resize(rank, std::vector<Rat>());
    return rank;
}

// Is there a nonzero row-space vector supported inside S? If so return one.
std::optional<std::vector<Rat>> vector_supported_on(const std::vector<std::vector<Rat>>& basis,
                                                    unsigned mask, int cols) {
    const int r = static_cast<int>(basis.size());
    // constraints: sum_i c_i * basis[i][j] = 0 for every column j outside S
    std::vector<std::vector<Rat>> sys;
    for (int j = 0; j < cols; ++j) {
        if (mask >> j & 1) continue;
        std::vector<Rat> row(r);
        bool nonzero = false;
        for (int i = 0; i < r; ++i) {
            row[i] = basis[i][j];
            nonzero = nonzero || row[i] != 0;
        }
        if (nonzero) sys.push_back(std::move(row));
    }
    int rank = rref(sys);
    if (rank >= r) return std::nullopt;
    // pick a nullspace vector: set one free coordinate to 1
    std::vector<int> pivotCol(rank, -1);
    std::vector<bool> isPivot(r, false);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < r; ++j)
            if (sys[i][j] != 0) {
                pivotCol[i] = j;
                isPivot[j] = true;
                break;
            }
    int freeCol = -1;
    for (int j = 0; j < r; ++j)
        if (!isPivot[j]) {
            freeCol = j;
            break;
        }
    std::vector<Rat> c(r, Rat(0));
    c[freeCol] = 1;
    for (int i = rank - 1; i >= 0; --i) {
        Rat acc = 0;
        for (int j = pivotCol[i] + 1; j < r; ++j) acc += sys[i][j] * c[j];
        c[pivotCol[i]] = -acc / sys[i][pivotCol[i]];
    }
    std::vector<Rat> v(cols, Rat(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) v[j] += c[i] * basis[i][j];
    bool any = false;
    for (const auto& x : v) any = any || x != 0;
    if (!any) return std::nullopt;
    return v;
}

}  // namespace

std::vector<TropPoly> trop_ideal_truncated(const Embedding& E, int d, int column_cap) {
    const auto& monoid = E.monoid;
    const int n = monoid->var_count();
    const std::vector<std::string>& vars = monoid->vars();

    std::vector<std::vector<Int>> exps;
    std::vector<Int> cur;
    enumerate_exponents(n, d, cur, exps);
    std::sort(exps.begin(), exps.end(), [&](const std::vector<Int>& a, const std::vector<Int>& b) {
        return monoid->less(FreeElt{false, a}, FreeElt{false, b});
    });
    const int cols = static_cast<int>(exps.size());
    if (cols > column_cap)
        throw ResourceError("degree slice has " + std::to_string(cols) +
                            " monomials, above the cap of " + std::to_string(column_cap));
    std::map<std::vector<Int>, int> colOf;
    for (int j = 0; j < cols; ++j) colOf[exps[j]] = j;

    std::vector<std::vector<Rat>> rows;
    for (const auto& g : E.kernel) {
        if (g.is_zero()) continue;
        const Int dg = g.total_degree();
        if (dg > d) continue;
        const int room = d - static_cast<int>(dg);
        std::vector<std::vector<Int>> mult;
        std::vector<Int> c2;
        enumerate_exponents(n, room, c2, mult);
        for (const auto& m : mult) {
            MPoly mono(vars);
            mono.add_term(m, Rat(1));
            MPoly prod = mono * g;
            std::vector<Rat> row(cols, Rat(0));
            for (const auto& [e, c] : prod.terms()) row[colOf.at(e)] = c;
            rows.push_back(std::move(row));
        }
    }
    const int rank = rref(rows);
    std::vector<TropPoly> out;
    if (rank == 0) return out;

    // circuits: smallest supports first, pruning supersets of found supports
    std::vector<unsigned> found;
    std::set<std::string> seen;
    for (int size = 1; size <= cols; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            unsigned mask = 0;
            for (int i : idx) mask |= 1u << i;
            bool pruned = false;
            for (unsigned f : found) pruned = pruned || (mask & f) == f;
            if (!pruned) {
                if (auto v = vector_supported_on(rows, mask, cols)) {
                    found.push_back(mask);
                    // normalize: coefficient 1 on the highest monomial
                    Rat lead;
                    for (auto it = v->rbegin(); it != v->rend(); ++it)
                        if (*it != 0) {
                            lead = *it;
                            break;
                        }
                    TropPoly t(monoid, E.nu.target());
                    for (int j = 0; j < cols; ++j)
                        if ((*v)[j] != 0)
                            t.add_term(FreeElt{false, exps[j]},
                                       E.nu.apply(RingElement{(*v)[j] / lead}));
                    if (seen.insert(t.key()).second) out.push_back(std::move(t));
                }
            }
            // next combination
            int i = size - 1;
            while (i >= 0 && idx[i] == cols - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

TropPresentation trop_presentation(const Embedding& E, int d) {
    TropPresentation P;
    P.monoid = E.monoid;
    P.tag = E.nu.target();
    P.basis = trop_ideal_truncated(E, d);
    P.truncation_degree = d;
    for (const auto& t : P.basis)
        for (auto& b : bend(t)) P.congruence.generators.push_back(std::move(b));
    return P;
}

bool settheoretic_member(const TPoint& point, const std::vector<TropPoly>& basis) {
    for (const auto& f : basis)
        if (!twice_max(f, point)) return false;
    return true;
}

// ------------------------------------------------------ universal embedding

void KernelPoly::add_term(const Elt& m, const RingElement& c) {
    if (monoid->is_zero(m)) return;  // x_0 = 0
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (it->first == m) {
            it->second = relem_add(it->second, c);
            if (relem_is_zero(it->second)) terms.erase(it);
            return;
        }
    }
    if (!relem_is_zero(c)) terms.push_back({m, c});
}

std::string KernelPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms) {
        if (!s.empty()) s += " + ";
        s += relem_to_string(c) + "*" + monoid->to_string(m);
    }
    return s;
}

TropPoly trop_of_kernel(const KernelPoly& f, const Valuation& nu) {
    TropPoly out(f.monoid, nu.target());
    for (const auto& [m, c] : f.terms) out.add_term(m, nu.apply(c));
    return out;
}

namespace {

std::string kernel_key(const KernelPoly& f) {
    std::vector<std::string> parts;
    for (const auto& [m, c] : f.terms) {
        std::string s;
        f.monoid->append_key(m, s);
        parts.push_back(s + "=" + relem_to_string(c));
    }
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& p : parts) key += p + ";";
    return key;
}

}  // namespace

std::vector<KernelPoly> universal_kernel_generators(const std::shared_ptr<const FiniteRing>& A) {
    auto monoid = multiplicative_monoid(*A);
    std::vector<KernelPoly> out;
    std::set<std::string> seen;
    auto push = [&](KernelPoly f) {
        if (f.terms.empty()) return;
        if (seen.insert(kernel_key(f)).second) out.push_back(std::move(f));
    };

    // the prime subring, the image of Z in A
    std::vector<int> prime;
    {
        std::set<int> got;
        int x = A->one();
        while (got.insert(x).second) {
            prime.push_back(x);
            x = A->add(x, A->one());
        }
    }

    const int n = A->size();
    for (int lam : prime) {
        if (lam == A->zero() || lam == A->one()) continue;
        for (int a = 0; a < n; ++a) {
            if (a == A->zero()) continue;
            KernelPoly f{monoid, {}};
            f.add_term(TableElt{a}, FiniteElt{A, lam});
            f.add_term(TableElt{A->mul(lam, a)}, FiniteElt{A, A->neg(A->one())});
            push(std::move(f));
        }
    }
    for (int a = 0; a < n; ++a) {
        if (a == A->zero()) continue;
        for (int b = a; b < n; ++b) {
            if (b == A->zero()) continue;
            const int c = A->neg(A->add(a, b));
            if (c == A->zero() || c < b) continue;  // keep one ordering per triple
            KernelPoly f{monoid, {}};
            f.add_term(TableElt{a}, FiniteElt{A, A->one()});
            f.add_term(TableElt{b}, FiniteElt{A, A->one()});
            f.add_term(TableElt{c}, FiniteElt{A, A->one()});
            push(std::move(f));
        }
    }
    return out;
}

std::vector<KernelPoly> universal_kernel_generators(const std::vector<Rat>& sample,
                                                    const std::vector<Rat>& scalars) {
    auto monoid = Monoid::rationals();
    std::vector<KernelPoly> out;
    std::set<std::string> seen;
    auto push = [&](KernelPoly f) {
        if (f.terms.empty()) return;
        if (seen.insert(kernel_key(f)).second) out.push_back(std::move(f));
    };

    for (const auto& lam : scalars) {
        if (lam == 0 || lam == 1) continue;
        for (const auto& a : sample) {
            if (a == 0) continue;
            KernelPoly f{monoid, {}};
            f.add_term(RatElt{a}, RingElement{lam});
            f.add_term(RatElt{lam * a}, RingElement{Rat(-1)});
            push(std::move(f));
        }
    }
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (sample[i] == 0) continue;
        for (std::size_t j = i; j < sample.size(); ++j) {
            if (sample[j] == 0) continue;
            const Rat c = -sample[i] - sample[j];
            if (c == 0) continue;
            KernelPoly f{monoid, {}};
            f.add_term(RatElt{sample[i]}, RingElement{Rat(1)});
            f.add_term(RatElt{sample[j]}, RingElement{Rat(1)});
            f.add_term(RatElt{c}, RingElement{Rat(1)});
            push(std::move(f));
        }
    }
    return out;
}

namespace {

TropPresentation presentation_from_kernel(std::vector<KernelPoly> gens,
                                          std::shared_ptr<const Monoid> monoid,
                                          const Valuation& nu) {
    TropPresentation P;
    P.monoid = std::move(monoid);
    P.tag = nu.target();
    for (const auto& g : gens) {
        TropPoly t = trop_of_kernel(g, nu);
        if (t.is_zero()) continue;
        P.basis.push_back(t);
        for (auto& b : bend(t)) P.congruence.generators.push_back(std::move(b));
    }
    return P;
}

}  // namespace

TropPresentation universal_trop(const std::shared_ptr<const FiniteRing>& A, const Valuation& nu) {
    auto gens = universal_kernel_generators(A);
    auto monoid = gens.empty() ? multiplicative_monoid(*A) : gens.front().monoid;
    return presentation_from_kernel(std::move(gens), std::move(monoid), nu);
}

TropPresentation universal_trop(const std::vector<Rat>& sample, const std::vector<Rat>& scalars,
                                const Valuation& nu) {
    auto gens = universal_kernel_generators(sample, scalars);
    auto monoid = gens.empty() ? Monoid::rationals() : gens.front().monoid;
    return presentation_from_kernel(std::move(gens), std::move(monoid), nu);
}

// ------------------------------------------------------------------ moduli

namespace {

struct TripleCheck {
    ValPointReport* r;
    void operator()(const Value& va, const Value& vb, const Value& vsum,
                    const std::string& witness) const {
        const Value all = add(add(va, vb), vsum);
        const bool e1 = all == add(va, vb);
        const bool e2 = all == add(va, vsum);
        const bool e3 = all == add(vb, vsum);
        if (!e1) {
            r->ok = false;
            r->violations.push_back("subadditivity fails at " + witness);
        } else if (!e2 || !e3) {
            r->redundancy_ok = false;
            r->ok = false;
            r->violations.push_back("redundant equality fails at " + witness);
        }
        ++r->pairs_checked;
    }
};

}  // namespace

ValPointReport is_valuation_point(const TPoint& alpha, const std::shared_ptr<const FiniteRing>& A,
                                  const Valuation& nu) {
    ValPointReport r;
    std::string why;
    if (!alpha.is_hom(&why)) {
        r.ok = r.multiplicative = false;
        r.violations.push_back("not multiplicative: " + why);
        return r;
    }
    TripleCheck triple{&r};

    std::vector<int> prime;
    {
        std::set<int> got;
        int x = A->zero();
        while (got.insert(x).second) {
            prime.push_back(x);
            x = A->add(x, A->one());
        }
    }
    const int n = A->size();
    for (int lam : prime) {
        Value nl = nu.apply(RingElement{FiniteElt{A, lam}});
        for (int a = 0; a < n; ++a) {
            Value lhs = alpha.apply(TableElt{A->mul(lam, a)});
            Value rhs = mul(nl, alpha.apply(TableElt{a}));
            if (!(lhs == rhs)) {
                r.ok = false;
                r.violations.push_back("scalar compatibility fails at lambda=" + A->name(lam) +
                                       ", a=" + A->name(a));
            }
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            triple(alpha.apply(TableElt{a}), alpha.apply(TableElt{b}),
                   alpha.apply(TableElt{A->add(a, b)}), A->name(a) + ", " + A->name(b));
    return r;
}

ValuationPoint ValuationPoint::from_evaluation(std::shared_ptr<AffineAlgebra> A,
                                               std::vector<Rat> coords, Valuation nu) {
    for (const auto& g : A->relations())
        if (g.eval(coords) != 0)
            throw std::invalid_argument("evaluation point does not satisfy '" + g.to_string() +
                                        "'");
    ValuationPoint w;
    w.algebra_ = A;
    w.tag_ = nu.target();
    w.fn_ = [coords = std::move(coords), nu = std::move(nu)](const MPoly& f) {
        return nu.apply(RingElement{f.eval(coords)});
    };
    return w;
}

ValuationPoint ValuationPoint::quadratic_extension(std::shared_ptr<AffineAlgebra> A,
                                                   Valuation nu) {
    if (A->vars().size() != 1 || A->relations().size() != 1)
        throw std::invalid_argument("quadratic extension needs one variable and one relation");
    const MPoly& g = A->relations()[0];
    Rat c2, c0;
    for (const auto& [e, k] : g.terms()) {
        if (e[0] == 2) c2 = k;
        else if (e[0] == 0) c0 = k;
        else throw std::invalid_argument("relation is not of the form x^2 - c");
    }
    if (c2 == 0) throw std::invalid_argument("relation is not quadratic");
    const Rat c = -c0 / c2;
    Value vc = nu.apply(RingElement{c});
    if (nu.target() != SemiringTag::Trop)
        throw std::invalid_argument("quadratic extension implemented for rank-1 targets");
    const Value half = Value::trop(vc.finite() / 2);

    ValuationPoint w;
    w.algebra_ = A;
    w.tag_ = nu.target();
    w.fn_ = [A, nu = std::move(nu), half](const MPoly& f) {
        MPoly nf = A->normal_form(f);
        Value acc = Value::bottom(SemiringTag::Trop);
        for (const auto& [e, k] : nf.terms()) {
            Value t = nu.apply(RingElement{k});
            if (e[0] == 1) t = mul(t, half);
            acc = add(acc, t);
        }
        return acc;
    };
    return w;
}

ValuationPoint ValuationPoint::trivial(std::shared_ptr<AffineAlgebra> A) {
    ValuationPoint w;
    w.algebra_ = A;
    w.tag_ = SemiringTag::Trop;
    w.fn_ = [A](const MPoly& f) {
        return A->is_zero(f) ? Value::bottom(SemiringTag::Trop) : Value::one(SemiringTag::Trop);
    };
    return w;
}

Value ValuationPoint::apply(const MPoly& element) const { return fn_(element); }

ValPointReport is_valuation_point(const ValuationPoint& w, const Valuation& nu,
                                  const std::vector<std::pair<MPoly, MPoly>>& pairs,
                                  const std::vector<Rat>& scalars) {
    ValPointReport r;
    const auto& A = *w.algebra();
    const MPoly zero(A.vars());
    const MPoly one = MPoly::constant(A.vars(), Rat(1));
    if (!w.apply(zero).is_bottom() || !w.apply(one).is_one()) {
        r.ok = r.multiplicative = false;
        r.violations.push_back("units not preserved");
        return r;
    }
    TripleCheck triple{&r};
    for (const auto& [a, b] : pairs) {
        if (!(w.apply(a * b) == mul(w.apply(a), w.apply(b)))) {
            r.ok = r.multiplicative = false;
            r.violations.push_back("not multiplicative at " + a.to_string() + ", " +
                                   b.to_string());
        }
        if (!(w.apply(-a) == w.apply(a))) {
            r.ok = false;
            r.violations.push_back("w(-a) != w(a) at " + a.to_string());
        }
        for (const auto& lam : scalars) {
            Value lhs = w.apply(a.scaled(lam));
            Value rhs = mul(nu.apply(RingElement{lam}), w.apply(a));
            if (!(lhs == rhs)) {
                r.ok = false;
                r.violations.push_back("scalar compatibility fails at lambda=" +
                                       rat_to_string(lam) + ", a=" + a.to_string());
            }
        }
        triple(w.apply(a), w.apply(b), w.apply(a + b), a.to_string() + ", " + b.to_string());
    }
    return r;
}

TPoint pi_map(const ValuationPoint& w, const Embedding& E) {
    TPoint p{E.monoid, w.target(), {}};
    for (const auto& img : E.images) p.values.push_back(w.apply(img));
    return p;
}

// ----------------------------------------------------------- point solving

namespace {

bool satisfies(const TPoint& p, const TropPresentation& P) {
    for (const auto& g : P.congruence.generators)
        if (!eval_relation(g.lhs, g.rhs, p)) return false;
    return true;
}

void solve_free(const TropPresentation& P, const std::vector<Rat>& grid, std::size_t varIdx,
                TPoint& partial, PointSet& out, std::set<std::string>& dedup) {
    const int n = P.monoid->var_count();
    if (static_cast<int>(varIdx) == n) {
        if (satisfies(partial, P) && dedup.insert(partial.to_string()).second)
            out.points.push_back(partial);
        return;
    }
    // candidate values: solve pairwise term equalities of basis polynomials
    // that are linear in this variable with later variables absent
    std::set<Rat> cands(grid.begin(), grid.end());
    bool pinned = !grid.empty();
    for (const auto& f : P.basis) {
        const auto& terms = f.terms();
        for (std::size_t i = 0; i < terms.size(); ++i)
            for (std::size_t j = i + 1; j < terms.size(); ++j) {
                const auto& e1 = std::get<FreeElt>(terms[i].first).exp;
                const auto& e2 = std::get<FreeElt>(terms[j].first).exp;
                Rat diff = terms[i].second.first() - terms[j].second.first();
                Rat dv;
                bool usable = true;
                for (int v = 0; v < n; ++v) {
                    const Rat dexp = Rat(e1[v]) - Rat(e2[v]);
                    if (dexp == 0) continue;
                    if (v < static_cast<int>(varIdx)) {
                        if (partial.values[v].is_bottom()) {
                            usable = false;
                            break;
                        }
                        diff += dexp * partial.values[v].first();
                    } else if (v == static_cast<int>(varIdx)) {
                        dv = dexp;
                    } else {
                        usable = false;
                        break;
                    }
                }
                if (usable && dv != 0) {
                    cands.insert(-diff / dv);
                    pinned = true;
                }
            }
    }
    if (!pinned) out.complete = false;
    std::vector<Value> options{Value::bottom(P.tag)};
    for (const auto& c : cands) options.push_back(Value::trop(c));
    for (const auto& v : options) {
        partial.values.push_back(v);
        solve_free(P, grid, varIdx + 1, partial, out, dedup);
        partial.values.pop_back();
    }
}

void solve_table(const TropPresentation& P, const std::vector<Rat>& grid, PointSet& out) {
    const auto& M = *P.monoid;
    const int n = M.table_size();
    // forced values: zero -> bottom; elements with a power equal to one must
    // map to the multiplicative unit (k*v = 0 has only v = 0 over Q);
    // nilpotents must map to bottom
    std::vector<std::optional<Value>> forced(n);
    std::vector<int> openIdx;
    for (int i = 0; i < n; ++i) {
        Elt e = M.table_element(i);
        if (M.is_zero(e)) {
            forced[i] = Value::bottom(P.tag);
            continue;
        }
        if (M.is_one(e)) {
            forced[i] = Value::one(P.tag);
            continue;
        }
        Elt x = e;
        for (int k = 2; k <= n + 1; ++k) {
            x = M.mul(x, e);
            if (M.is_one(x)) {
                forced[i] = Value::one(P.tag);
                break;
            }
            if (M.is_zero(x)) {
                forced[i] = Value::bottom(P.tag);
                break;
            }
        }
        if (!forced[i]) openIdx.push_back(i);
    }
    if (!openIdx.empty() && grid.empty()) out.complete = false;
    std::vector<Value> options{Value::bottom(P.tag), Value::one(P.tag)};
    for (const auto& g : grid)
        if (P.tag == SemiringTag::Trop) options.push_back(Value::trop(g));

    std::vector<Value> values(n, Value::bottom(P.tag));
    for (int i = 0; i < n; ++i)
        if (forced[i]) values[i] = *forced[i];
    std::set<std::string> dedup;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == openIdx.size()) {
            TPoint p{P.monoid, P.tag, values};
            if (p.is_hom() && satisfies(p, P) && dedup.insert(p.to_string()).second)
                out.points.push_back(p);
            return;
        }
        for (const auto& v : options) {
            values[openIdx[k]] = v;
            rec(k + 1);
        }
    };
    rec(0);
}

}  // namespace

PointSet solve_points(const TropPresentation& P, const std::vector<Rat>& grid) {
    PointSet out;
    if (P.monoid->kind() == Monoid::Kind::Free) {
        TPoint partial{P.monoid, P.tag, {}};
        std::set<std::string> dedup;
        solve_free(P, grid, 0, partial, out, dedup);
    } else if (P.monoid->kind() == Monoid::Kind::Table) {
        solve_table(P, grid, out);
    } else {
        throw std::invalid_argument("point solving over the rational monoid is not supported");
    }
    return out;
}

// --------------------------------------------------------------- functors

TropPoly map_poly(const MonoidHom& psi, const TropPoly& f) {
    TropPoly out(psi.target_ptr(), f.tag());
    for (const auto& [m, c] : f.terms()) out.add_term(psi.apply(m), c);
    return out;
}

TPoint InducedMap::pull_point(const TPoint& target_point) const {
    TPoint p{psi.source_ptr(), target_point.tag, {}};
    for (int i = 0; i < psi.source().var_count(); ++i)
        p.values.push_back(target_point.apply(psi.apply(psi.source().generator(i))));
    return p;
}

InducedMap induced_map(const MonoidHom& psi, const Embedding& src, const Embedding& tgt,
                       const TropPresentation& src_pres, const TropPresentation& tgt_pres,
                       const SearchBudget& budget) {
    if (src.algebra.get() != tgt.algebra.get())
        throw std::invalid_argument("embeddings over different algebras");
    if (psi.source_ptr().get() != src.monoid.get() || psi.target_ptr().get() != tgt.monoid.get())
        throw std::invalid_argument("monoid map does not match the embeddings");
    // psi must commute with the generator images into A
    for (int i = 0; i < psi.source().var_count(); ++i) {
        Elt img = psi.apply(psi.source().generator(i));
        const auto& fe = std::get<FreeElt>(img);
        MPoly mono(tgt.monoid->vars());
        if (!fe.zero) mono.add_term(fe.exp, Rat(1));
        MPoly viaTgt = tgt.substitute(mono);
        if (!src.algebra->is_zero(viaTgt - src.images[i]))
            throw std::invalid_argument("monoid map does not commute with generator images");
    }
    InducedMap out{psi, {}};
    for (const auto& g : src_pres.congruence.generators) {
        RelationPair pushed{map_poly(psi, g.lhs), map_poly(psi, g.rhs)};
        SearchResult verdict = contains(tgt_pres.congruence, pushed, budget);
        out.pushed.push_back({std::move(pushed), std::move(verdict)});
    }
    return out;
}

LimitResult limit_points(const std::vector<Embedding>& nodes,
                         const std::vector<DiagramArrow>& arrows, int d,
                         const std::vector<Rat>& grid) {
    LimitResult out;
    std::vector<TropPresentation> pres;
    for (const auto& E : nodes) pres.push_back(trop_presentation(E, d));
    long combinations = 1;
    for (const auto& P : pres) {
        out.node_points.push_back(solve_points(P, grid));
        out.complete = out.complete && out.node_points.back().complete;
        combinations *= std::max<long>(1, static_cast<long>(out.node_points.back().points.size()));
        if (combinations > 100000) throw ResourceError("too many candidate families");
    }
    std::vector<std::size_t> pick(nodes.size(), 0);
    auto compatible = [&]() {
        for (const auto& a : arrows) {
            if (out.node_points[a.src].points.empty() || out.node_points[a.tgt].points.empty())
                return false;
            const TPoint& ps = out.node_points[a.src].points[pick[a.src]];
            const TPoint& pt = out.node_points[a.tgt].points[pick[a.tgt]];
            for (int i = 0; i < a.psi.source().var_count(); ++i) {
                Value pulled = pt.apply(a.psi.apply(a.psi.source().generator(i)));
                if (!(pulled == ps.values[i])) return false;
            }
        }
        return true;
    };
    // cartesian scan over node point sets
    while (true) {
        bool any_empty = false;
        for (const auto& np : out.node_points) any_empty = any_empty || np.points.empty();
        if (any_empty) break;
        if (compatible()) {
            Family f;
            for (std::size_t i = 0; i < nodes.size(); ++i)
                f.points.push_back(out.node_points[i].points[pick[i]]);
            out.families.push_back(std::move(f));
        }
        std::size_t i = 0;
        while (i < pick.size()) {
            if (++pick[i] < out.node_points[i].points.size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
    return out;
}

}  // namespace bendtrop
