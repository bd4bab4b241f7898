#include "bendtrop/jobs.hpp"

#include "bendtrop/tropicalize.hpp"

#include "json.hpp"

#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

namespace bendtrop {

namespace {

using nlohmann::json;

// ------------------------------------------------------------ fixture parsing

Valuation parse_valuation(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "trivial") return Valuation::trivial();
    if (kind == "p-adic") return Valuation::p_adic(Int(j.at("p").get<long>()));
    if (kind == "t-adic") return Valuation::t_adic();
    if (kind == "lex")
        return Valuation::lex_composite(parse_valuation(j.at("outer")),
                                        parse_valuation(j.at("inner")));
    throw std::invalid_argument("unknown valuation kind '" + kind + "'");
}

std::shared_ptr<const Monoid> parse_monoid(const json& j) {
    if (j.contains("vars")) return Monoid::free(j.at("vars").get<std::vector<std::string>>());
    const auto names = j.at("elements").get<std::vector<std::string>>();
    auto idx = [&](const std::string& n) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<int>(i);
        throw std::invalid_argument("monoid element '" + n + "' is not in the element list");
    };
    std::vector<std::vector<int>> mul;
    for (const auto& row : j.at("table")) {
        std::vector<int> r;
        for (const auto& cell : row) r.push_back(idx(cell.get<std::string>()));
        mul.push_back(std::move(r));
    }
    return Monoid::table(names, std::move(mul), idx(j.at("zero").get<std::string>()),
                         idx(j.at("one").get<std::string>()));
}

std::shared_ptr<const FiniteRing> parse_finite_ring(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zmod")
        return std::make_shared<FiniteRing>(FiniteRing::integers_mod(j.at("n").get<int>()));
    if (kind == "poly_quotient") {
        const auto mod = j.at("modulus").get<std::vector<int>>();
        const std::string var = j.value("var", "t");
        return std::make_shared<FiniteRing>(
            FiniteRing::poly_quotient(j.at("p").get<int>(), mod, var));
    }
    throw std::invalid_argument("unknown finite ring kind '" + kind + "'");
}

std::shared_ptr<AffineAlgebra> parse_algebra(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return AffineAlgebra::rationals();
    if (kind == "quotient") {
        const auto vars = j.at("vars").get<std::vector<std::string>>();
        std::vector<MPoly> rels;
        for (const auto& r : j.at("relations"))
            rels.push_back(MPoly::parse(vars, r.get<std::string>()));
        return AffineAlgebra::quotient(vars, std::move(rels));
    }
    if (kind == "zmod" || kind == "poly_quotient")
        return AffineAlgebra::finite(parse_finite_ring(j));
    throw std::invalid_argument("unknown ring kind '" + kind + "'");
}

Embedding parse_embedding(const json& j) {
    Embedding E;
    E.algebra = parse_algebra(j.at("ring"));
    E.nu = parse_valuation(j.at("valuation"));
    E.monoid = parse_monoid(j.at("monoid"));
    if (E.monoid->kind() != Monoid::Kind::Free)
        throw std::invalid_argument("embedding monoid must be free");
    const auto& images = j.at("images");
    for (const auto& v : E.monoid->vars()) {
        if (!images.contains(v))
            throw std::invalid_argument("missing image for monoid generator '" + v + "'");
        E.images.push_back(E.algebra->parse_element(images.at(v).get<std::string>()));
    }
    for (const auto& g : j.at("kernel"))
        E.kernel.push_back(MPoly::parse(E.monoid->vars(), g.get<std::string>()));
    E.validate();
    return E;
}

SemiringTag parse_tag(const std::string& s) {
    if (s == "trop") return SemiringTag::Trop;
    if (s == "bool") return SemiringTag::Bool;
    if (s == "rank2") return SemiringTag::Rank2;
    throw std::invalid_argument("unknown semiring tag '" + s + "'");
}

Value parse_value(const std::string& s, SemiringTag tag) {
    auto v = Value::parse(s, tag);
    if (!v) throw std::invalid_argument("malformed semiring value '" + s + "'");
    return *v;
}

TPoint parse_point(const json& j, const std::shared_ptr<const Monoid>& monoid, SemiringTag tag) {
    TPoint p{monoid, tag, {}};
    const auto& labels =
        monoid->kind() == Monoid::Kind::Free ? monoid->vars() : monoid->element_names();
    for (const auto& name : labels) {
        if (!j.contains(name))
            throw std::invalid_argument("point is missing a value for '" + name + "'");
        p.values.push_back(parse_value(j.at(name).get<std::string>(), tag));
    }
    return p;
}

// Sample elements for the axiom checker: a plain string is a rational (or a
// polynomial in t for the t-adic kinds), a two-element array is num/den.
RingElement parse_domain_element(const json& j, const Valuation& nu) {
    const bool ratfunc = nu.kind() == Valuation::Kind::TAdic || nu.kind() == Valuation::Kind::Lex;
    auto one_side = [&](const std::string& s) {
        return ratfunc ? RingElement(RatFunc::make(upoly_parse(s), {Rat(1)}))
                       : RingElement(rat_from_string(s));
    };
    if (j.is_string()) return one_side(j.get<std::string>());
    if (j.is_array() && j.size() == 2) {
        if (!ratfunc) throw std::invalid_argument("num/den pairs need a t-adic or lex valuation");
        return RatFunc::make(upoly_parse(j.at(0).get<std::string>()),
                             upoly_parse(j.at(1).get<std::string>()));
    }
    throw std::invalid_argument("sample elements are strings or [num, den] arrays");
}

// ---------------------------------------------------------- report rendering

json budget_json(const SearchBudget& b) {
    return json{{"max_multiplier_degree", b.max_multiplier_degree.str()},
                {"max_context", b.max_context},
                {"max_chain", b.max_chain},
                {"max_frontier", b.max_frontier}};
}

json point_json(const TPoint& p) {
    json out = json::object();
    const auto& labels =
        p.monoid->kind() == Monoid::Kind::Free ? p.monoid->vars() : p.monoid->element_names();
    for (std::size_t i = 0; i < labels.size(); ++i) out[labels[i]] = p.values[i].to_string();
    return out;
}

json generators_json(const Congruence& C) {
    json out = json::array();
    for (const auto& g : C.generators)
        out.push_back(json{{"lhs", g.lhs.to_string()}, {"rhs", g.rhs.to_string()}});
    return out;
}

json derivation_json(const Congruence& C, const Derivation& d) {
    json steps = json::array();
    for (const auto& s : d.steps) {
        const auto& g = C.generators[s.generator];
        steps.push_back(json{{"generator", s.generator},
                             {"reversed", s.reversed},
                             {"scalar", s.scalar.to_string()},
                             {"monomial", g.lhs.monoid().to_string(s.monomial)},
                             {"context", s.context.to_string()}});
    }
    return steps;
}

json presentation_json(const TropPresentation& P) {
    json basis = json::array();
    for (const auto& f : P.basis) basis.push_back(f.to_string());
    return json{{"basis", basis},
                {"generators", generators_json(P.congruence)},
                {"truncation_degree", P.truncation_degree.str()}};
}

// --------------------------------------------------------------- job handlers

int handle(const std::string& command, const json& job, const SearchBudget& budget, json& report) {
    if (command == "trop") {
        Embedding E = parse_embedding(job.at("embedding"));
        const int d = job.at("degree").get<int>();
        report.update(presentation_json(trop_presentation(E, d)));
        return kExitOk;
    }

    if (command == "member") {
        Embedding E = parse_embedding(job.at("embedding"));
        const int d = job.at("degree").get<int>();
        TropPresentation P = trop_presentation(E, d);
        TPoint pt = parse_point(job.at("point"), P.monoid, P.tag);
        report["member"] = settheoretic_member(pt, P.basis);
        report["point"] = point_json(pt);
        report["truncation_degree"] = P.truncation_degree.str();
        return kExitOk;
    }

    if (command == "univ") {
        Valuation nu = parse_valuation(job.at("valuation"));
        TropPresentation P;
        if (job.contains("ring")) {
            auto ring = parse_finite_ring(job.at("ring"));
            P = universal_trop(ring, nu);
            PointSet pts = solve_points(P);
            json points = json::array();
            for (const auto& p : pts.points) {
                auto rep = is_valuation_point(p, ring, nu);
                points.push_back(json{{"values", point_json(p)}, {"is_valuation", rep.ok}});
            }
            report["points"] = points;
            report["complete"] = pts.complete;
        } else {
            std::vector<Rat> sample, scalars;
            for (const auto& s : job.at("sample")) sample.push_back(rat_from_string(s.get<std::string>()));
            for (const auto& s : job.at("scalars")) scalars.push_back(rat_from_string(s.get<std::string>()));
            P = universal_trop(sample, scalars, nu);
        }
        report.update(presentation_json(P));
        return kExitOk;
    }

    if (command == "valcheck") {
        auto ring = parse_finite_ring(job.at("ring"));
        Valuation nu = parse_valuation(job.at("valuation"));
        auto monoid = multiplicative_monoid(*ring);
        TPoint alpha = parse_point(job.at("alpha"), monoid, nu.target());
        auto rep = is_valuation_point(alpha, ring, nu);
        report["ok"] = rep.ok;
        report["multiplicative"] = rep.multiplicative;
        report["pairs_checked"] = rep.pairs_checked;
        report["redundancy_ok"] = rep.redundancy_ok;
        report["violations"] = rep.violations;
        return kExitOk;
    }

    if (command == "pi") {
        Embedding E = parse_embedding(job.at("embedding"));
        const int d = job.at("degree").get<int>();
        const std::string kind = job.at("point_kind").get<std::string>();
        ValuationPoint w = [&] {
            if (kind == "evaluation") {
                std::vector<Rat> coords;
                for (const auto& c : job.at("coords"))
                    coords.push_back(rat_from_string(c.get<std::string>()));
                return ValuationPoint::from_evaluation(E.algebra, std::move(coords), E.nu);
            }
            if (kind == "quadratic") return ValuationPoint::quadratic_extension(E.algebra, E.nu);
            if (kind == "trivial") return ValuationPoint::trivial(E.algebra);
            throw std::invalid_argument("unknown point_kind '" + kind + "'");
        }();
        TropPresentation P = trop_presentation(E, d);
        TPoint pt = pi_map(w, E);
        report["point"] = point_json(pt);
        report["member"] = settheoretic_member(pt, P.basis);
        report["truncation_degree"] = P.truncation_degree.str();
        return kExitOk;
    }

    if (command == "limit") {
        std::vector<Embedding> nodes;
        for (const auto& e : job.at("nodes")) nodes.push_back(parse_embedding(e));
        std::vector<DiagramArrow> arrows;
        for (const auto& a : job.at("arrows")) {
            const int src = a.at("src").get<int>(), tgt = a.at("tgt").get<int>();
            if (src < 0 || tgt < 0 || src >= static_cast<int>(nodes.size()) ||
                tgt >= static_cast<int>(nodes.size()))
                throw std::invalid_argument("arrow endpoint out of range");
            std::vector<Elt> images;
            for (const auto& v : nodes[src].monoid->vars()) {
                // each source generator maps to a monomial in the target vars
                MPoly m = MPoly::parse(nodes[tgt].monoid->vars(),
                                       a.at("images").at(v).get<std::string>());
                if (m.terms().size() != 1 || !(m.terms().begin()->second == Rat(1)))
                    throw std::invalid_argument("arrow image must be a single monic monomial");
                images.push_back(FreeElt{false, m.terms().begin()->first});
            }
            arrows.push_back({src, tgt, MonoidHom(nodes[src].monoid, nodes[tgt].monoid, images)});
        }
        std::vector<Rat> grid;
        if (job.contains("grid"))
            for (const auto& g : job.at("grid")) grid.push_back(rat_from_string(g.get<std::string>()));
        const int d = job.at("degree").get<int>();
        LimitResult lim = limit_points(nodes, arrows, d, grid);
        json families = json::array();
        for (const auto& fam : lim.families) {
            json pts = json::array();
            for (const auto& p : fam.points) pts.push_back(point_json(p));
            families.push_back(pts);
        }
        json counts = json::array();
        for (const auto& ps : lim.node_points) counts.push_back(ps.points.size());
        report["families"] = families;
        report["node_point_counts"] = counts;
        report["complete"] = lim.complete;
        return kExitOk;
    }

    if (command == "derive") {
        auto monoid = parse_monoid(job.at("monoid"));
        const SemiringTag tag = parse_tag(job.value("semiring", "trop"));
        Congruence C;
        if (job.contains("bends_of"))
            for (const auto& f : job.at("bends_of")) {
                auto pairs = bend(TropPoly::parse(monoid, tag, f.get<std::string>()));
                C.generators.insert(C.generators.end(), pairs.begin(), pairs.end());
            }
        if (job.contains("generators"))
            for (const auto& g : job.at("generators"))
                C.generators.push_back({TropPoly::parse(monoid, tag, g.at(0).get<std::string>()),
                                        TropPoly::parse(monoid, tag, g.at(1).get<std::string>())});
        RelationPair q{TropPoly::parse(monoid, tag, job.at("query").at(0).get<std::string>()),
                       TropPoly::parse(monoid, tag, job.at("query").at(1).get<std::string>())};
        SearchResult res = contains(C, q, budget);
        report["expanded"] = res.expanded;
        if (res.status == SearchStatus::Proven) {
            report["status"] = "proven";
            report["steps"] = derivation_json(C, res.derivation);
            return kExitOk;
        }
        report["status"] = "unknown";
        return kExitUnknown;
    }

    if (command == "axioms") {
        Valuation nu = parse_valuation(job.at("valuation"));
        const bool ratfunc =
            nu.kind() == Valuation::Kind::TAdic || nu.kind() == Valuation::Kind::Lex;
        std::vector<std::pair<RingElement, RingElement>> sample;
        for (const auto& p : job.at("pairs"))
            sample.emplace_back(parse_domain_element(p.at(0), nu),
                                parse_domain_element(p.at(1), nu));
        const RingElement zero = ratfunc ? RingElement(RatFunc{}) : RingElement(Rat(0));
        const RingElement one =
            ratfunc ? RingElement(RatFunc::make({Rat(1)}, {Rat(1)})) : RingElement(Rat(1));
        AxiomReport rep = check_axioms(nu, zero, one, sample);
        report["ok"] = rep.ok;
        report["pairs_checked"] = rep.pairs_checked;
        json viols = json::array();
        for (const auto& v : rep.violations)
            viols.push_back(json{{"axiom", v.axiom}, {"witness", v.witness}});
        report["violations"] = viols;
        report["valuation"] = nu.describe();
        return kExitOk;
    }

    throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace

JobOutcome run_job(const std::string& command, const std::string& job_text,
                   const SearchBudget& budget, int threads) {
    json report;
    report["command"] = command;
    report["budget"] = budget_json(budget);
    report["threads"] = threads < 1 ? 1 : threads;
    int code = kExitOk;
    try {
        const json job = json::parse(job_text);
        code = handle(command, job, budget, report);
    } catch (const json::exception& e) {
        report["error"] = e.what();  // includes byte/line position for parse errors
        code = kExitUsage;
    } catch (const ResourceError& e) {
        report["error"] = e.what();
        code = kExitUnknown;
    } catch (const std::invalid_argument& e) {
        report["error"] = e.what();
        code = kExitUsage;
    }
    return {code, report.dump(2) + "\n"};
}

}  // namespace bendtrop
