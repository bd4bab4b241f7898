#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bendtrop/congruence.hpp"

#include <random>

using namespace bendtrop;

namespace {

std::mt19937 rng(99);

const auto MX = Monoid::free({"X"});
const auto MXY = Monoid::free({"X", "Y"});

TropPoly tp(const std::shared_ptr<const Monoid>& m, const char* text,
            SemiringTag tag = SemiringTag::Trop) {
    return TropPoly::parse(m, tag, text);
}

TropPoly random_bool_poly(const std::vector<Elt>& monomials) {
    TropPoly f(MXY, SemiringTag::Bool);
    for (const auto& m : monomials)
        if (rng() % 2) f.add_term(m, Value::one(SemiringTag::Bool));
    return f;
}

std::vector<Elt> small_monomials() {
    std::vector<Elt> out;
    for (Int i = 0; i < 2; ++i)
        for (Int j = 0; j < 2; ++j) out.push_back(FreeElt{false, {i, j}});
    return out;
}

}  // namespace

TEST_CASE("canonical form") {
    TropPoly f(MXY, SemiringTag::Trop);
    Elt x = MXY->generator(0);
    f.add_term(x, Value::trop(Rat(1)));
    f.add_term(x, Value::trop(Rat(3)));  // merged by max
    f.add_term(MXY->generator(1), Value::bottom(SemiringTag::Trop));  // dropped
    f.add_term(MXY->zero(), Value::trop(Rat(5)));                     // absorbing monomial dropped
    CHECK(f.support_size() == 1);
    CHECK(f.coeff(x) == Value::trop(Rat(3)));
    CHECK(f.to_string() == "3*X");
}

TEST_CASE("parse and print roundtrip") {
    const char* texts[] = {"(-1) + 2*X^2*Y", "X^2 + X*Y + Y^2", "-inf", "0", "(-1/2)*X + Y"};
    for (const char* t : texts) {
        TropPoly f = tp(MXY, t);
        CHECK(TropPoly::parse(MXY, SemiringTag::Trop, f.to_string()) == f);
    }
    CHECK(tp(MXY, "-inf").is_zero());
    CHECK(tp(MXY, "(-1) + 2*X^2*Y").to_string() == "(-1) + 2*X^2*Y");
}

TEST_CASE("bend pairs, one per support monomial") {
    TropPoly f = tp(MXY, "X^2 + X*Y + Y^2");
    auto pairs = bend(f);
    REQUIRE(pairs.size() == 3);
    for (const auto& p : pairs) {
        CHECK(p.lhs == f);
        CHECK(p.rhs.support_size() == 2);
    }
    CHECK(pairs[0].rhs == tp(MXY, "X*Y + X^2"));  // lowest monomial Y^2 deleted first

    auto qpairs = bend(tp(MX, "X^2 + (-1)"));
    REQUIRE(qpairs.size() == 2);
    CHECK(qpairs[0].rhs == tp(MX, "X^2"));
    CHECK(qpairs[1].rhs == tp(MX, "(-1)"));

    CHECK(bend(TropPoly(MXY, SemiringTag::Trop)).empty());
}

TEST_CASE("evaluation") {
    TPoint origin{MXY, SemiringTag::Trop, {Value::trop(Rat(0)), Value::trop(Rat(0))}};
    CHECK(eval(tp(MXY, "X + Y + 0"), origin) == Value::trop(Rat(0)));

    TPoint half{MX, SemiringTag::Trop, {Value::trop(Rat(-1, 2))}};
    CHECK(eval(tp(MX, "X^2 + (-1)"), half) == Value::trop(Rat(-1)));

    TPoint bot{MXY, SemiringTag::Trop,
               {Value::bottom(SemiringTag::Trop), Value::bottom(SemiringTag::Trop)}};
    CHECK(eval(tp(MXY, "X + Y + 0"), bot) == Value::trop(Rat(0)));
    CHECK(eval(tp(MXY, "X + Y"), bot).is_bottom());
}

TEST_CASE("twice max criterion") {
    TPoint p{MXY, SemiringTag::Trop, {Value::trop(Rat(0)), Value::trop(Rat(0))}};
    CHECK(twice_max(tp(MXY, "X + Y + 0"), p));
    TPoint q{MXY, SemiringTag::Trop, {Value::trop(Rat(1)), Value::trop(Rat(0))}};
    CHECK_FALSE(twice_max(tp(MXY, "X + Y + 0"), q));
    TPoint b{MXY, SemiringTag::Trop,
             {Value::bottom(SemiringTag::Trop), Value::bottom(SemiringTag::Trop)}};
    CHECK(twice_max(tp(MXY, "X + Y"), b));  // max is bottom
}

TEST_CASE("reflexivity is proven with an empty chain") {
    Congruence C;
    TropPoly f = tp(MXY, "X + Y");
    auto res = contains(C, {f, f}, SearchBudget{});
    CHECK(res.status == SearchStatus::Proven);
    CHECK(res.derivation.steps.empty());
}

TEST_CASE("two bend steps join X^2 to (-1)") {
    TropPoly f = tp(MX, "X^2 + (-1)");
    Congruence C{bend(f), "bend"};
    auto res = contains(C, {tp(MX, "X^2"), tp(MX, "(-1)")}, SearchBudget{});
    REQUIRE(res.status == SearchStatus::Proven);
    CHECK(res.derivation.steps.size() == 2);
    std::string why;
    CHECK(verify_derivation(C, {tp(MX, "X^2"), tp(MX, "(-1)")}, res.derivation, &why));
}

TEST_CASE("proven results replay and budget exhaustion is honest") {
    TropPoly f = tp(MX, "X^2 + (-1)");
    Congruence C{bend(f), ""};
    RelationPair q{tp(MX, "X^2"), tp(MX, "(-1)")};

    SearchBudget tiny;
    tiny.max_frontier = 0;
    CHECK(contains(C, q, tiny).status == SearchStatus::Unknown);

    // multiplier steps: X^3 ~ (-1)*X via the generator scaled by the monomial X
    auto res = contains(C, {tp(MX, "X^3"), tp(MX, "(-1)*X")}, SearchBudget{});
    REQUIRE(res.status == SearchStatus::Proven);
    std::string why;
    CHECK(verify_derivation(C, {tp(MX, "X^3"), tp(MX, "(-1)*X")}, res.derivation, &why));
}

TEST_CASE("underivable pairs stay unknown") {
    Congruence C;  // empty
    auto res = contains(C, {tp(MXY, "X"), tp(MXY, "Y")}, SearchBudget{});
    CHECK(res.status == SearchStatus::Unknown);
}

TEST_CASE("tampered derivations are rejected") {
    TropPoly f = tp(MX, "X^2 + (-1)");
    Congruence C{bend(f), ""};
    RelationPair q{tp(MX, "X^2"), tp(MX, "(-1)")};
    auto res = contains(C, q, SearchBudget{});
    REQUIRE(res.status == SearchStatus::Proven);

    Derivation bad = res.derivation;
    bad.steps.pop_back();
    std::string why;
    CHECK_FALSE(verify_derivation(C, q, bad, &why));
    CHECK_FALSE(why.empty());

    Derivation wrong = res.derivation;
    wrong.steps[0].scalar = Value::trop(Rat(7));
    CHECK_FALSE(verify_derivation(C, q, wrong, &why));
}

TEST_CASE("oracle closure on bend(x + y) over Bool") {
    auto monomials = small_monomials();
    std::vector<TropPoly> universe;
    for (unsigned mask = 0; mask < 16; ++mask) {
        TropPoly f(MXY, SemiringTag::Bool);
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) f.add_term(monomials[i], Value::one(SemiringTag::Bool));
        universe.push_back(std::move(f));
    }
    TropPoly xy(MXY, SemiringTag::Bool);
    xy.add_term(MXY->generator(0), Value::one(SemiringTag::Bool));
    xy.add_term(MXY->generator(1), Value::one(SemiringTag::Bool));
    Congruence C{bend(xy), ""};
    auto part = oracle_closure(C, universe);

    auto index_of = [&](const TropPoly& f) {
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (universe[i] == f) return static_cast<int>(i);
        return -1;
    };
    TropPoly x(MXY, SemiringTag::Bool), y(MXY, SemiringTag::Bool);
    x.add_term(MXY->generator(0), Value::one(SemiringTag::Bool));
    y.add_term(MXY->generator(1), Value::one(SemiringTag::Bool));
    CHECK(part.class_of[index_of(x)] == part.class_of[index_of(y)]);
    CHECK(part.class_of[index_of(x)] == part.class_of[index_of(xy)]);

    // empty and reflexive congruences refine nothing
    CHECK(oracle_closure(Congruence{}, universe).classes.size() == universe.size());
    Congruence refl{{{xy, xy}}, ""};
    CHECK(oracle_closure(refl, universe).classes.size() == universe.size());

    CHECK_THROWS_AS(oracle_closure(C, universe, 3), ResourceError);
}

TEST_CASE("search agrees with the oracle on random Bool congruences") {
    auto monomials = small_monomials();
    std::vector<TropPoly> universe;
    for (unsigned mask = 0; mask < 16; ++mask) {
        TropPoly f(MXY, SemiringTag::Bool);
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) f.add_term(monomials[i], Value::one(SemiringTag::Bool));
        universe.push_back(std::move(f));
    }
    for (int trial = 0; trial < 5; ++trial) {
        Congruence C;
        for (auto& p : bend(random_bool_poly(monomials))) C.generators.push_back(std::move(p));
        auto part = oracle_closure(C, universe);
        for (std::size_t i = 0; i < universe.size(); ++i)
            for (std::size_t j = i + 1; j < universe.size(); ++j) {
                auto res = contains(C, {universe[i], universe[j]}, SearchBudget{});
                if (res.status == SearchStatus::Proven)
                    CHECK(part.class_of[i] == part.class_of[j]);
            }
    }
}

TEST_CASE("bend pairs evaluate equal exactly on the twice-max locus") {
    auto monomials = small_monomials();
    const Value vals[] = {Value::bottom(SemiringTag::Trop), Value::trop(Rat(-1)),
                          Value::trop(Rat(0)), Value::trop(Rat(1))};
    for (int trial = 0; trial < 40; ++trial) {
        TropPoly f(MXY, SemiringTag::Trop);
        for (const auto& m : monomials)
            if (rng() % 2) f.add_term(m, vals[rng() % 4]);
        auto pairs = bend(f);
        for (const auto& vx : vals)
            for (const auto& vy : vals) {
                TPoint p{MXY, SemiringTag::Trop, {vx, vy}};
                bool all_equal = true;
                for (const auto& pr : pairs)
                    all_equal = all_equal && eval_relation(pr.lhs, pr.rhs, p);
                CHECK(all_equal == twice_max(f, p));
            }
    }
}

TEST_CASE("derivable pairs evaluate equal wherever the generators do") {
    auto monomials = small_monomials();
    for (int trial = 0; trial < 20; ++trial) {
        Congruence C;
        for (auto& p : bend(random_bool_poly(monomials))) C.generators.push_back(std::move(p));
        for (auto& p : bend(random_bool_poly(monomials))) C.generators.push_back(std::move(p));
        TropPoly f = random_bool_poly(monomials), g = random_bool_poly(monomials);
        auto res = contains(C, {f, g}, SearchBudget{});
        if (res.status != SearchStatus::Proven) continue;
        const Value bv[] = {Value::bottom(SemiringTag::Bool), Value::one(SemiringTag::Bool)};
        for (const auto& vx : bv)
            for (const auto& vy : bv) {
                TPoint p{MXY, SemiringTag::Bool, {vx, vy}};
                bool gens_equal = true;
                for (const auto& gen : C.generators)
                    gens_equal = gens_equal && eval_relation(gen.lhs, gen.rhs, p);
                if (gens_equal) CHECK(eval_relation(f, g, p));
            }
    }
}

TEST_CASE("mismatched shapes are rejected") {
    Congruence C{bend(tp(MX, "X + 0")), ""};
    CHECK_THROWS_AS(contains(C, {tp(MXY, "X"), tp(MXY, "Y")}, SearchBudget{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        contains(C, {tp(MX, "X", SemiringTag::Bool), tp(MX, "0", SemiringTag::Bool)},
                 SearchBudget{}),
        std::invalid_argument);
}
