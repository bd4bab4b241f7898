// End-to-end acceptance checks. Each check prints one PASS/FAIL line with
// its runtime; the process exits nonzero if any fail.
#include "bendtrop/tropicalize.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <vector>

using namespace bendtrop;

namespace {

int failures = 0;

void criterion(const std::string& name, double limit_seconds, const std::function<bool()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > limit_seconds) {
        ok = false;
        err = "over the " + std::to_string(limit_seconds) + "s limit";
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << dt << " s)";
    if (!err.empty()) std::cout << "  [" << err << "]";
    std::cout << "\n";
}

Embedding quad_embedding() {
    Embedding E;
    E.algebra = AffineAlgebra::quotient({"x"}, {MPoly::parse({"x"}, "x^2 - 2")});
    E.nu = Valuation::p_adic(2);
    E.monoid = Monoid::free({"U"});
    E.images = {MPoly::parse({"x"}, "x")};
    E.kernel = {MPoly::parse({"U"}, "U^2 - 2")};
    E.validate();
    return E;
}

// Generators sufficient to derive the bend pair of nu(sum lambda_i x_{a_i})
// that deletes index k: scalar-conversion bends for each coefficient, bends
// for the prefix sums of the remaining terms, and the three-term relations
// that splice consecutive prefixes together.
Congruence lean_generators(const std::vector<Rat>& a, const std::vector<Rat>& lam, int k,
                           const Valuation& nu, const std::shared_ptr<const Monoid>& M) {
    const int n = static_cast<int>(a.size());
    std::vector<int> order{k};
    for (int i = 0; i < n; ++i)
        if (i != k) order.push_back(i);
    std::vector<Rat> b(n);
    for (int i = 0; i < n; ++i) b[i] = lam[order[i]] * a[order[i]];
    std::vector<Rat> tau;  // prefix sums of b[1..n-2]
    Rat acc = 0;
    for (int l = 1; l <= n - 2; ++l) {
        acc += b[l];
        tau.push_back(acc);
    }
    Congruence C;
    auto add_scalar = [&](const Rat& lambda, const Rat& x) {
        if (lambda == 0 || lambda == 1 || x == 0) return;
        TropPoly t(M, nu.target());
        t.add_term(RatElt{x}, nu.apply(RingElement{lambda}));
        t.add_term(RatElt{lambda * x}, Value::one(nu.target()));
        for (auto& p : bend(t)) C.generators.push_back(std::move(p));
    };
    auto add_triple = [&](const Rat& x, const Rat& y) {
        Rat z = -x - y;
        if (x == 0 || y == 0 || z == 0) return;
        TropPoly t(M, nu.target());
        t.add_term(RatElt{x}, Value::one(nu.target()));
        t.add_term(RatElt{y}, Value::one(nu.target()));
        t.add_term(RatElt{z}, Value::one(nu.target()));
        for (auto& p : bend(t)) C.generators.push_back(std::move(p));
    };
    for (int i = 0; i < n; ++i) add_scalar(lam[i], a[i]);
    for (const auto& t : tau) add_scalar(Rat(-1), t);
    add_scalar(Rat(-1), b[0]);
    if (n >= 3) add_triple(b[0], tau.back());
    for (int l = 0; l + 1 < static_cast<int>(tau.size()); ++l) add_triple(tau[l], b[l + 2]);
    return C;
}

}  // namespace

int main() {
    std::cout.precision(3);
    std::cout << std::fixed;

    criterion("quadratic fixture has the single point U = -1/2", 1.0, [] {
        PointSet pts = solve_points(trop_presentation(quad_embedding(), 2));
        return pts.complete && pts.points.size() == 1 &&
               pts.points[0].values[0] == Value::trop(Rat(-1, 2));
    });

    criterion("three-embedding diagram limits to one compatible family", 5.0, [] {
        Embedding E1 = quad_embedding();
        Embedding E2 = E1;
        E2.monoid = Monoid::free({"U", "V"});
        E2.images.push_back(MPoly::parse({"x"}, "x + 1"));
        E2.kernel = {MPoly::parse({"U", "V"}, "U^2 - 2"),
                     MPoly::parse({"U", "V"}, "V - U - 1")};
        E2.validate();
        Embedding E3 = E1;
        E3.monoid = Monoid::free({"U", "W"});
        E3.images.push_back(MPoly::parse({"x"}, "2*x"));
        E3.kernel = {MPoly::parse({"U", "W"}, "U^2 - 2"),
                     MPoly::parse({"U", "W"}, "W - 2*U")};
        E3.validate();

        std::vector<Embedding> nodes{E1, E2, E3};
        std::vector<DiagramArrow> arrows;
        arrows.push_back({0, 1, MonoidHom(E1.monoid, E2.monoid, {E2.monoid->generator(0)})});
        arrows.push_back({0, 2, MonoidHom(E1.monoid, E3.monoid, {E3.monoid->generator(0)})});
        LimitResult lim = limit_points(nodes, arrows, 2);
        if (!lim.complete || lim.families.size() != 1) return false;
        const auto& fam = lim.families[0].points;

        // the family must be pi of the unique valuation extending the 2-adic
        ValuationPoint w = ValuationPoint::quadratic_extension(E1.algebra, E1.nu);
        for (int i = 0; i < 3; ++i) {
            TPoint expect = pi_map(w, nodes[i]);
            if (!(expect.values == fam[i].values)) return false;
        }
        if (!(fam[1].values[1] == Value::trop(Rat(0)))) return false;
        if (!(fam[2].values[1] == Value::trop(Rat(-3, 2)))) return false;

        // transition maps agree pointwise
        for (const auto& ar : arrows)
            for (int i = 0; i < nodes[ar.src].monoid->var_count(); ++i) {
                Value pulled = fam[ar.tgt].apply(ar.psi.apply(nodes[ar.src].monoid->generator(i)));
                if (!(pulled == fam[ar.src].values[i])) return false;
            }
        return true;
    });

    criterion("valuations on F_4 over trivially-valued F_2: only the trivial one", 1.0, [] {
        auto A = std::make_shared<FiniteRing>(FiniteRing::poly_quotient(2, {1, 1, 1}));
        Valuation nu = Valuation::trivial();

        // route 1: solve the bend constraints of the universal presentation
        TropPresentation P = universal_trop(A, nu);
        PointSet pts = solve_points(P);
        if (!pts.complete || pts.points.size() != 1) return false;
        const TPoint& alpha = pts.points[0];
        for (int i = 0; i < A->size(); ++i) {
            Value expect = i == A->zero() ? Value::bottom(SemiringTag::Trop)
                                          : Value::one(SemiringTag::Trop);
            if (!(alpha.values[i] == expect)) return false;
        }
        if (!is_valuation_point(alpha, A, nu).ok) return false;

        // route 2: multiplicativity alone. w^3 = 1 forces 3*alpha(w) = 0, so
        // any finite grid assignment other than 0 breaks the hom property.
        const int w = A->index_of("t"), w2 = A->index_of("t+1");
        const Rat grid[] = {Rat(-2), Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1), Rat(2)};
        std::vector<Value> candidates{Value::bottom(SemiringTag::Trop)};
        for (const auto& g : grid) candidates.push_back(Value::trop(g));
        int homs = 0;
        for (const auto& vw : candidates)
            for (const auto& vw2 : candidates) {
                TPoint cand{P.monoid, SemiringTag::Trop, {}};
                cand.values.assign(A->size(), Value::one(SemiringTag::Trop));
                cand.values[A->zero()] = Value::bottom(SemiringTag::Trop);
                cand.values[w] = vw;
                cand.values[w2] = vw2;
                if (cand.is_hom() && is_valuation_point(cand, A, nu).ok) ++homs;
            }
        return homs == 1;
    });

    criterion("bend pairs of random dependent sums derive from the generators", 60.0, [] {
        std::mt19937 rng(42);
        auto randrat = [&] {
            return Rat(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 4));
        };
        auto M = Monoid::rationals();
        for (int inst = 0; inst < 200; ++inst) {
            Valuation nu = (inst % 2) ? Valuation::trivial() : Valuation::p_adic(2);
            const int n = 2 + inst % 4;
            std::vector<Rat> a(n), lam(n);
            while (true) {
                bool ok = true;
                std::set<Rat> seen;
                Rat s = 0;
                for (int i = 0; i < n - 1; ++i) {
                    a[i] = randrat();
                    lam[i] = randrat();
                    ok = ok && a[i] != 0 && lam[i] != 0 && seen.insert(a[i]).second;
                    s += lam[i] * a[i];
                }
                if (!ok) continue;
                a[n - 1] = randrat();
                if (a[n - 1] == 0 || !seen.insert(a[n - 1]).second) continue;
                lam[n - 1] = -s / a[n - 1];
                if (lam[n - 1] == 0) continue;
                std::set<Rat> bs;
                bool distinct = true;
                for (int i = 0; i < n; ++i) distinct = distinct && bs.insert(lam[i] * a[i]).second;
                if (!distinct) continue;
                break;
            }
            TropPoly f(M, nu.target());
            for (int i = 0; i < n; ++i) f.add_term(RatElt{a[i]}, nu.apply(RingElement{lam[i]}));
            auto pairs = bend(f);
            for (const auto& q : pairs) {
                Rat deleted;
                for (const auto& [m, c] : q.lhs.terms())
                    if (q.rhs.coeff(m).is_bottom()) deleted = std::get<RatElt>(m).value;
                int ki = 0;
                for (int i = 0; i < n; ++i)
                    if (a[i] == deleted) ki = i;
                Congruence C = lean_generators(a, lam, ki, nu, M);
                auto res = contains(C, q, SearchBudget{});
                if (res.status != SearchStatus::Proven) return false;
                std::string why;
                if (!verify_derivation(C, q, res.derivation, &why)) return false;
            }
        }
        return true;
    });

    criterion("second and third triple equalities follow from the first", 10.0, [] {
        std::mt19937 rng(7);
        auto randrat = [&] {
            return Rat(static_cast<int>(rng() % 401) - 200, 1 + static_cast<int>(rng() % 40));
        };
        auto randfunc = [&]() -> RatFunc {
            auto poly = [&] {
                UPoly p(1 + rng() % 4);
                for (auto& c : p) c = Rat(static_cast<int>(rng() % 11) - 5);
                return upoly_trim(std::move(p));
            };
            UPoly den = poly();
            while (den.empty()) den = poly();
            return RatFunc::make(poly(), den);
        };
        const Valuation vals[] = {Valuation::p_adic(2), Valuation::p_adic(3), Valuation::t_adic(),
                                  Valuation::lex_composite(Valuation::t_adic(),
                                                           Valuation::p_adic(2))};
        for (const auto& nu : vals) {
            const bool rf = nu.kind() == Valuation::Kind::TAdic || nu.kind() == Valuation::Kind::Lex;
            for (int i = 0; i < 1000; ++i) {
                RingElement a = rf ? RingElement(randfunc()) : RingElement(randrat());
                RingElement b = rf ? RingElement(randfunc()) : RingElement(randrat());
                Value va = nu.apply(a), vb = nu.apply(b), vs = nu.apply(relem_add(a, b));
                Value all = add(add(va, vb), vs);
                if (!(all == add(va, vb))) return false;       // first equality: always
                if (!(all == add(va, vs))) return false;       // second follows
                if (!(all == add(vb, vs))) return false;       // third follows
            }
        }
        return true;
    });

    criterion("projected valuation points land in their tropicalizations", 30.0, [] {
        int samples = 0;

        Embedding L;
        L.algebra = AffineAlgebra::quotient({"x", "y"}, {MPoly::parse({"x", "y"}, "x + y + 1")});
        L.monoid = Monoid::free({"X", "Y"});
        L.images = {MPoly::parse({"x", "y"}, "x"), MPoly::parse({"x", "y"}, "y")};
        L.kernel = {MPoly::parse({"X", "Y"}, "X + Y + 1")};
        const Rat xs[] = {Rat(1), Rat(-2), Rat(3, 2), Rat(4), Rat(-1, 3),
                          Rat(8), Rat(-6), Rat(5, 4), Rat(9), Rat(2, 7)};
        for (const auto& p : {Valuation::p_adic(2), Valuation::p_adic(3), Valuation::p_adic(5),
                              Valuation::trivial()}) {
            L.nu = p;
            L.validate();
            auto basis = trop_ideal_truncated(L, 2);
            for (const auto& x : xs) {
                ValuationPoint w = ValuationPoint::from_evaluation(L.algebra, {x, -x - 1}, L.nu);
                if (!settheoretic_member(pi_map(w, L), basis)) return false;
                ++samples;
            }
        }

        Embedding C;
        C.algebra =
            AffineAlgebra::quotient({"x", "y"}, {MPoly::parse({"x", "y"}, "y^2 - x^3 - 1")});
        C.monoid = Monoid::free({"X", "Y"});
        C.images = {MPoly::parse({"x", "y"}, "x"), MPoly::parse({"x", "y"}, "y")};
        C.kernel = {MPoly::parse({"X", "Y"}, "Y^2 - X^3 - 1")};
        const std::pair<Rat, Rat> pts[] = {{Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)},
                                           {Rat(2), Rat(3)},  {Rat(2), Rat(-3)}};
        for (const auto& p : {Valuation::p_adic(2), Valuation::p_adic(3)}) {
            C.nu = p;
            C.validate();
            auto basis = trop_ideal_truncated(C, 4);
            for (const auto& [x, y] : pts) {
                ValuationPoint w = ValuationPoint::from_evaluation(C.algebra, {x, y}, C.nu);
                if (!settheoretic_member(pi_map(w, C), basis)) return false;
                ++samples;
            }
        }
        return samples == 50;
    });

    criterion("twice-max locus of X + Y + 0 matches the classical line", 1.0, [] {
        auto M = Monoid::free({"X", "Y"});
        TropPoly line = TropPoly::parse(M, SemiringTag::Trop, "0 + Y + X");
        std::vector<TropPoly> basis{line};
        for (int i = 0; i <= 40; ++i)
            for (int j = 0; j <= 40; ++j) {
                Rat x = Rat(-2) + Rat(i, 10), y = Rat(-2) + Rat(j, 10);
                TPoint p{M, SemiringTag::Trop, {Value::trop(x), Value::trop(y)}};
                // independent predicate: max of {x, y, 0} hit at least twice
                Rat m = x > y ? x : y;
                if (m < 0) m = 0;
                int hits = (x == m) + (y == m) + (0 == m);
                if (settheoretic_member(p, basis) != (hits >= 2)) return false;
            }
        return true;
    });

    criterion("bounded search agrees with the brute-force closure", 120.0, [] {
        std::mt19937 rng(1234);
        auto M = Monoid::free({"x", "y"});
        std::vector<Elt> monomials;
        for (Int i = 0; i < 2; ++i)
            for (Int j = 0; j < 2; ++j) monomials.push_back(FreeElt{false, {i, j}});
        std::vector<TropPoly> universe;
        for (unsigned mask = 0; mask < 16; ++mask) {
            TropPoly f(M, SemiringTag::Bool);
            for (int i = 0; i < 4; ++i)
                if (mask >> i & 1) f.add_term(monomials[i], Value::one(SemiringTag::Bool));
            universe.push_back(std::move(f));
        }
        auto random_poly = [&] {
            TropPoly f(M, SemiringTag::Bool);
            for (const auto& m : monomials)
                if (rng() % 2) f.add_term(m, Value::one(SemiringTag::Bool));
            return f;
        };
        // budget sweep: a short chain first, the default budget as fallback
        SearchBudget shallow;
        shallow.max_chain = 4;
        for (int trial = 0; trial < 20; ++trial) {
            Congruence C;
            for (auto& p : bend(random_poly())) C.generators.push_back(std::move(p));
            if (trial % 2)
                for (auto& p : bend(random_poly())) C.generators.push_back(std::move(p));
            auto part = oracle_closure(C, universe);
            for (std::size_t i = 0; i < universe.size(); ++i)
                for (std::size_t j = i + 1; j < universe.size(); ++j) {
                    RelationPair q{universe[i], universe[j]};
                    auto res = contains(C, q, shallow);
                    if (res.status != SearchStatus::Proven) res = contains(C, q, SearchBudget{});
                    const bool same = part.class_of[i] == part.class_of[j];
                    if (res.status == SearchStatus::Proven && !same) return false;
                    if (same && res.status != SearchStatus::Proven) return false;
                }
        }
        return true;
    });

    criterion("monoid integrality matches ring zero-divisor-freeness", 1.0, [] {
        const std::pair<FiniteRing, bool> fixtures[] = {
            {FiniteRing::integers_mod(2), true},
            {FiniteRing::integers_mod(3), true},
            {FiniteRing::poly_quotient(2, {1, 1, 1}), true},
            {FiniteRing::poly_quotient(3, {1, 0, 1}), true},
            {FiniteRing::integers_mod(4), false},
            {FiniteRing::integers_mod(6), false},
            {FiniteRing::poly_quotient(2, {0, 0, 1}), false},
        };
        for (const auto& [ring, integral] : fixtures) {
            if (is_integral(*multiplicative_monoid(ring)) != integral) return false;
            if (integral == ring.has_zero_divisors()) return false;
        }
        return true;
    });

    criterion("valuation axioms hold for every implemented kind", 5.0, [] {
        std::mt19937 rng(5);
        auto randrat = [&] {
            return Rat(static_cast<int>(rng() % 2001) - 1000, 1 + static_cast<int>(rng() % 100));
        };
        auto randfunc = [&]() -> RatFunc {
            auto poly = [&] {
                UPoly p(1 + rng() % 4);
                for (auto& c : p) c = Rat(static_cast<int>(rng() % 11) - 5);
                return upoly_trim(std::move(p));
            };
            UPoly den = poly();
            while (den.empty()) den = poly();
            return RatFunc::make(poly(), den);
        };
        std::vector<std::pair<RingElement, RingElement>> qpairs, fpairs;
        for (int i = 0; i < 1000; ++i) qpairs.emplace_back(randrat(), randrat());
        for (int i = 0; i < 400; ++i) fpairs.emplace_back(randfunc(), randfunc());
        const RingElement fzero = RatFunc{}, fone = RatFunc::make({Rat(1)}, {Rat(1)});

        for (const auto& nu : {Valuation::trivial(), Valuation::p_adic(2), Valuation::p_adic(3)})
            if (!check_axioms(nu, Rat(0), Rat(1), qpairs).ok) return false;
        if (!check_axioms(Valuation::t_adic(), fzero, fone, fpairs).ok) return false;
        if (!check_axioms(Valuation::lex_composite(Valuation::t_adic(), Valuation::p_adic(2)),
                          fzero, fone, fpairs)
                 .ok)
            return false;
        return true;
    });

    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
