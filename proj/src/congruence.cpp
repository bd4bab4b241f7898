#include "bendtrop/congruence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace bendtrop {

namespace {

std::string mono_key(const Monoid& m, const Elt& e) {
    std::string s;
    m.append_key(e, s);
    return s;
}

void check_pair_shape(const Congruence& C, const RelationPair& q) {
    auto check = [&](const TropPoly& f) {
        if (f.monoid_ptr().get() != q.lhs.monoid_ptr().get() || f.tag() != q.lhs.tag())
            throw std::invalid_argument("congruence and query over different monoids or semirings");
    };
    check(q.rhs);
    for (const auto& g : C.generators) {
        check(g.lhs);
        check(g.rhs);
    }
}

struct Successor {
    TropPoly poly;
    DerivationStep step;
};

// All one-step rewrites of p. A step picks a generator side s*u*l inside p
// (tight coordinates may be consumed or kept) and replaces it with s*u*r.
// New monomials introduced by the replacement must lie in `allowed` (the
// monomials of the generators and the query endpoints) or in p itself; this
// keeps the search space finite for free and rational-indexed monoids.
// `allowed_elts` carries the same monomials as elements, used to aim
// insertion steps of generators whose cited side is the zero polynomial.
std::vector<Successor> successors(const Congruence& C, const TropPoly& p,
                                  const SearchBudget& budget,
                                  const std::set<std::string>* allowed,
                                  const std::vector<Elt>* allowed_elts) {
    const auto& monoid = p.monoid();
    const auto mono_ok = [&](const Elt& e) {
        if (!allowed) return true;
        if (allowed->count(mono_key(monoid, e))) return true;
        return !p.coeff(e).is_bottom();
    };

    std::vector<Successor> out;
    std::set<std::string> seen;

    for (int gi = 0; gi < static_cast<int>(C.generators.size()); ++gi) {
        for (int orient = 0; orient < 2; ++orient) {
            const bool rev = orient == 1;
            const TropPoly& l = rev ? C.generators[gi].rhs : C.generators[gi].lhs;
            const TropPoly& r = rev ? C.generators[gi].lhs : C.generators[gi].rhs;

            if (l.is_zero()) {
                // insertion step: p decomposes as bottom + p, so the successor
                // is p with s*u*r layered on top. Aim the leading monomial of
                // r at each monomial of p or of the allowed set.
                if (r.is_zero()) continue;
                std::vector<Elt> umuls;
                if (monoid.kind() == Monoid::Kind::Table) {
                    for (int i = 0; i < monoid.table_size(); ++i) {
                        Elt u = monoid.table_element(i);
                        if (!monoid.is_zero(u)) umuls.push_back(u);
                    }
                } else {
                    const Elt& r0 = r.terms().front().first;
                    std::set<std::string> useen;
                    auto aim = [&](const Elt& m) {
                        auto u = monoid.divide(m, r0);
                        if (!u || monoid.is_zero(*u)) return;
                        if (monoid.degree(*u) > budget.max_multiplier_degree) return;
                        if (useen.insert(mono_key(monoid, *u)).second)
                            umuls.push_back(std::move(*u));
                    };
                    for (const auto& [qm, qc] : p.terms()) aim(qm);
                    if (allowed_elts)
                        for (const auto& m : *allowed_elts) aim(m);
                }
                for (const auto& u : umuls) {
                    TropPoly ru = r.mul_monomial(u);
                    if (ru.is_zero()) continue;
                    bool ok = true;
                    for (const auto& [m, c] : ru.terms()) ok = ok && mono_ok(m);
                    if (!ok) continue;
                    // scalars: the unit, plus quotients that align an inserted
                    // term with a coefficient already present in p
                    std::vector<Value> svals{Value::one(p.tag())};
                    std::set<std::string> sseen{svals[0].to_string()};
                    for (const auto& [m, c] : ru.terms()) {
                        Value pc = p.coeff(m);
                        if (pc.is_bottom()) continue;
                        if (auto sq = divide(pc, c))
                            if (sseen.insert(sq->to_string()).second) svals.push_back(*sq);
                    }
                    for (const auto& s : svals) {
                        TropPoly next = add(ru.scaled(s), p);
                        if (next == p) continue;
                        if (seen.insert(next.key()).second)
                            out.push_back({std::move(next), DerivationStep{gi, rev, s, u, p}});
                    }
                }
                continue;
            }

            // multiplier candidates; a feasible step maps the first support
            // monomial of l into p, so u = q / b_0 over q in supp(p) covers
            // every case (and the quotients are automatically distinct)
            std::vector<Elt> multipliers;
            if (monoid.kind() == Monoid::Kind::Table) {
                for (int i = 0; i < monoid.table_size(); ++i) {
                    Elt u = monoid.table_element(i);
                    if (!monoid.is_zero(u)) multipliers.push_back(u);
                }
            } else {
                const Elt& b0 = l.terms().front().first;
                for (const auto& [qm, qc] : p.terms()) {
                    auto u = monoid.divide(qm, b0);
                    if (!u || monoid.is_zero(*u)) continue;
                    if (monoid.degree(*u) > budget.max_multiplier_degree) continue;
                    multipliers.push_back(std::move(*u));
                }
            }

            for (const auto& u : multipliers) {
                // every monomial of s*u*l must already appear in p; the only
                // scalar that keeps s*u*l below p while still touching it is
                // the minimum of the coordinatewise quotients. Tables can
                // merge or kill terms under u, so they materialize l*u; the
                // other monoids fold the quotients in one pass.
                bool feasible = true;
                std::optional<Value> smin;
                std::vector<std::pair<Elt, Value>> quot;  // monomial of l*u, p/l quotient
                if (monoid.kind() == Monoid::Kind::Table) {
                    TropPoly lu = l.mul_monomial(u);
                    if (lu.is_zero()) continue;
                    for (const auto& [m, c] : lu.terms()) {
                        Value pc = p.coeff(m);
                        if (pc.is_bottom()) {
                            feasible = false;
                            break;
                        }
                        auto sq = divide(pc, c);
                        if (!sq) continue;
                        if (!smin || cmp(*sq, *smin) < 0) smin = *sq;
                        quot.emplace_back(m, std::move(*sq));
                    }
                } else {
                    quot.reserve(l.terms().size());
                    for (const auto& [m, c] : l.terms()) {
                        Elt mu = monoid.mul(m, u);
                        Value pc = p.coeff(mu);
                        if (pc.is_bottom()) {
                            feasible = false;
                            break;
                        }
                        auto sq = divide(pc, c);
                        if (!sq) continue;
                        if (!smin || cmp(*sq, *smin) < 0) smin = *sq;
                        quot.emplace_back(std::move(mu), std::move(*sq));
                    }
                }
                if (!feasible || !smin) continue;

                {
                    const Value& s = *smin;
                    TropPoly base_r = r.scaled(s).mul_monomial(u);
                    bool in_universe = true;
                    for (const auto& [m, c] : base_r.terms()) in_universe = in_universe && mono_ok(m);
                    if (!in_universe) continue;

                    // s*u*l touches p exactly where the quotient is minimal
                    std::vector<Elt> tight;
                    for (const auto& [m, sq] : quot)
                        if (cmp(sq, s) == 0) tight.push_back(m);
                    if (tight.empty()) continue;

                    const std::size_t nt = tight.size();
                    std::vector<std::vector<bool>> keeps;
                    if (static_cast<int>(nt) <= budget.max_context && nt < 63) {
                        for (unsigned long mask = 0; mask < (1ul << nt); ++mask) {
                            std::vector<bool> keep(nt);
                            for (std::size_t i = 0; i < nt; ++i) keep[i] = mask >> i & 1;
                            keeps.push_back(std::move(keep));
                        }
                    } else {
                        // too many tight coordinates: only drop-all and keep-all
                        keeps.push_back(std::vector<bool>(nt, false));
                        keeps.push_back(std::vector<bool>(nt, true));
                    }
                    for (const auto& keep : keeps) {
                        TropPoly h(p.monoid_ptr(), p.tag());
                        for (const auto& [m, c] : p.terms()) {
                            bool dropped = false;
                            for (std::size_t i = 0; i < nt; ++i)
                                if (!keep[i] && m == tight[i]) {
                                    dropped = true;
                                    break;
                                }
                            if (!dropped) h.add_term(m, c);
                        }
                        TropPoly next = add(base_r, h);
                        if (seen.insert(next.key()).second)
                            out.push_back({std::move(next),
                                           DerivationStep{gi, rev, s, u, std::move(h)}});
                    }
                }
            }
        }
    }
    return out;
}

struct NodeInfo {
    TropPoly poly;
    std::string parent;  // empty for the root
    DerivationStep step;
    int depth = 0;
};

long heuristic(const TropPoly& a, const TropPoly& b) {
    long d = 0;
    for (const auto& [m, c] : a.terms())
        if (!(b.coeff(m) == c)) ++d;
    for (const auto& [m, c] : b.terms())
        if (a.coeff(m).is_bottom()) ++d;
    return d;
}

}  // namespace

TropPoly apply_step(const Congruence& C, const TropPoly& f, const DerivationStep& step) {
    if (step.generator < 0 || step.generator >= static_cast<int>(C.generators.size()))
        throw std::invalid_argument("derivation step cites a missing generator");
    const auto& g = C.generators[step.generator];
    const TropPoly& l = step.reversed ? g.rhs : g.lhs;
    const TropPoly& r = step.reversed ? g.lhs : g.rhs;
    TropPoly base_l = l.scaled(step.scalar).mul_monomial(step.monomial);
    if (!(add(base_l, step.context) == f))
        throw std::invalid_argument("derivation step does not decompose the current polynomial");
    return add(r.scaled(step.scalar).mul_monomial(step.monomial), step.context);
}

bool verify_derivation(const Congruence& C, const RelationPair& q, const Derivation& d,
                       std::string* why) {
    TropPoly f = q.lhs;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        try {
            f = apply_step(C, f, d.steps[i]);
        } catch (const std::invalid_argument& e) {
            if (why) *why = "step " + std::to_string(i) + ": " + e.what();
            return false;
        }
    }
    if (!(f == q.rhs)) {
        if (why) *why = "derivation ends at " + f.to_string() + ", not at the right-hand side";
        return false;
    }
    return true;
}

SearchResult contains(const Congruence& C, const RelationPair& q, const SearchBudget& budget) {
    check_pair_shape(C, q);
    SearchResult result;
    if (q.lhs == q.rhs) {
        result.status = SearchStatus::Proven;
        return result;
    }

    const auto& monoid = q.lhs.monoid();
    std::set<std::string> allowed;
    std::vector<Elt> allowed_elts;
    const bool restrict = monoid.kind() != Monoid::Kind::Table;
    if (restrict) {
        auto absorb = [&](const TropPoly& f) {
            for (const auto& [m, c] : f.terms())
                if (allowed.insert(mono_key(monoid, m)).second) allowed_elts.push_back(m);
        };
        for (const auto& g : C.generators) {
            absorb(g.lhs);
            absorb(g.rhs);
        }
        absorb(q.lhs);
        absorb(q.rhs);
    }
    const std::set<std::string>* allowedPtr = restrict ? &allowed : nullptr;
    const std::vector<Elt>* allowedElts = restrict ? &allowed_elts : nullptr;

    // Bidirectional best-first search; side 0 grows from lhs, side 1 from rhs.
    // Priority = depth + 2 * coefficient-mismatch count against the far end,
    // ties broken by canonical key so runs are deterministic.
    using Entry = std::tuple<long, int, std::string>;
    std::map<std::string, NodeInfo> visited[2];
    std::set<Entry> open[2];
    const TropPoly* target[2] = {&q.rhs, &q.lhs};

    const std::string lk = q.lhs.key(), rk = q.rhs.key();
    visited[0].emplace(lk, NodeInfo{q.lhs, "", DerivationStep{0, false, Value::one(q.lhs.tag()),
                                                              monoid.one(), q.lhs},
                                    0});
    visited[1].emplace(rk, NodeInfo{q.rhs, "", DerivationStep{0, false, Value::one(q.lhs.tag()),
                                                              monoid.one(), q.rhs},
                                    0});
    open[0].insert({2 * heuristic(q.lhs, q.rhs), 0, lk});
    open[1].insert({2 * heuristic(q.rhs, q.lhs), 0, rk});

    std::string meet;
    auto build = [&](const std::string& meetKey) {
        Derivation d;
        // forward half: lhs ... meet
        std::vector<DerivationStep> fwd;
        for (std::string k = meetKey; !visited[0].at(k).parent.empty();
             k = visited[0].at(k).parent)
            fwd.push_back(visited[0].at(k).step);
        std::reverse(fwd.begin(), fwd.end());
        d.steps = std::move(fwd);
        // backward half: meet ... rhs, replaying side-1 steps in reverse orientation
        for (std::string k = meetKey; !visited[1].at(k).parent.empty();
             k = visited[1].at(k).parent) {
            DerivationStep s = visited[1].at(k).step;
            s.reversed = !s.reversed;
            d.steps.push_back(std::move(s));
        }
        return d;
    };

    while (!open[0].empty() || !open[1].empty()) {
        int side;
        if (open[0].empty()) side = 1;
        else if (open[1].empty()) side = 0;
        else side = open[0].size() <= open[1].size() ? 0 : 1;

        auto it = open[side].begin();
        const std::string cur = std::get<2>(*it);
        open[side].erase(it);
        const NodeInfo node = visited[side].at(cur);
        if (node.depth >= budget.max_chain) continue;
        if (++result.expanded > budget.max_frontier) return result;  // Unknown

        for (auto& suc : successors(C, node.poly, budget, allowedPtr, allowedElts)) {
            const std::string k = suc.poly.key();
            if (visited[side].count(k)) continue;
            NodeInfo info{suc.poly, cur, suc.step, node.depth + 1};
            visited[side].emplace(k, std::move(info));
            auto other = visited[1 - side].find(k);
            if (other != visited[1 - side].end() &&
                node.depth + 1 + other->second.depth <= budget.max_chain) {
                result.status = SearchStatus::Proven;
                result.derivation = build(k);
                return result;
            }
            open[side].insert(
                {node.depth + 1 + 2 * heuristic(suc.poly, *target[side]), node.depth + 1, k});
        }
    }
    return result;  // frontier exhausted without meeting: Unknown
}

Partition oracle_closure(const Congruence& C, const std::vector<TropPoly>& universe,
                         std::size_t cap) {
    if (universe.size() > cap)
        throw ResourceError("oracle universe of size " + std::to_string(universe.size()) +
                            " exceeds the cap of " + std::to_string(cap));
    Partition part;
    part.class_of.assign(universe.size(), 0);
    if (universe.empty()) return part;
    const auto& monoid = universe[0].monoid();

    std::map<std::string, int> index;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (universe[i].monoid_ptr().get() != universe[0].monoid_ptr().get() ||
            universe[i].tag() != universe[0].tag())
            throw std::invalid_argument("oracle universe mixes monoids or semirings");
        index.emplace(universe[i].key(), static_cast<int>(i));
    }

    std::vector<int> parent(universe.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    // multipliers: every table element, or every monomial seen in the universe
    std::vector<Elt> multipliers;
    if (monoid.kind() == Monoid::Kind::Table) {
        for (int i = 0; i < monoid.table_size(); ++i)
            if (!monoid.is_zero(monoid.table_element(i)))
                multipliers.push_back(monoid.table_element(i));
    } else {
        std::set<std::string> seen;
        multipliers.push_back(monoid.one());
        seen.insert(mono_key(monoid, monoid.one()));
        for (const auto& f : universe)
            for (const auto& [m, c] : f.terms())
                if (seen.insert(mono_key(monoid, m)).second) multipliers.push_back(m);
    }

    // scalars: the unit, plus quotients of observed coefficients (collapses
    // to just the unit over Bool)
    std::vector<Value> scalars{Value::one(universe[0].tag())};
    if (universe[0].tag() != SemiringTag::Bool) {
        std::set<std::string> cs, ss;
        std::vector<Value> coeffs;
        auto absorb = [&](const TropPoly& f) {
            for (const auto& [m, c] : f.terms())
                if (cs.insert(c.to_string()).second) coeffs.push_back(c);
        };
        for (const auto& f : universe) absorb(f);
        for (const auto& g : C.generators) {
            absorb(g.lhs);
            absorb(g.rhs);
        }
        ss.insert(scalars[0].to_string());
        for (const auto& a : coeffs)
            for (const auto& b : coeffs)
                if (auto qv = divide(a, b))
                    if (ss.insert(qv->to_string()).second) scalars.push_back(*qv);
    }

    // contexts: the empty polynomial plus every universe member
    std::vector<TropPoly> contexts{TropPoly(universe[0].monoid_ptr(), universe[0].tag())};
    contexts.insert(contexts.end(), universe.begin(), universe.end());

    for (const auto& g : C.generators)
        for (const auto& u : multipliers)
            for (const auto& s : scalars) {
                TropPoly L = g.lhs.scaled(s).mul_monomial(u);
                TropPoly R = g.rhs.scaled(s).mul_monomial(u);
                for (const auto& h : contexts) {
                    auto a = index.find(add(L, h).key());
                    auto b = index.find(add(R, h).key());
                    if (a != index.end() && b != index.end()) unite(a->second, b->second);
                }
            }

    std::map<int, std::vector<int>> byRoot;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        int r = find(static_cast<int>(i));
        part.class_of[i] = r;
        byRoot[r].push_back(static_cast<int>(i));
    }
    for (auto& [root, members] : byRoot) {
        for (int m : members) part.class_of[m] = static_cast<int>(part.classes.size());
        part.classes.push_back(std::move(members));
    }
    return part;
}

}  // namespace bendtrop
