#include <doctest.h>

#include "generators.hpp"
#include "support.hpp"

#include <metaopt/consequence.hpp>
#include <metaopt/reify.hpp>
#include <metaopt/semantics.hpp>

using namespace metaopt;
using testing::fixture_program;
using testing::read_fixture;

namespace {

bool has_fact(const Reification& r, const std::string& text) {
    const auto f = parse_facts(text + ".").at(0);
    return std::find(r.begin(), r.end(), f) != r.end();
}

Reification facts(const char* text) { return parse_facts(text); }

} // namespace

TEST_CASE("terms") {
    const auto t = Term::fn("wlist", {Term::integer(0), Term::integer(-2), Term::fn("pos", {Term::symbol("a")})});
    CHECK(to_string(t) == "wlist(0,-2,pos(a))");
    CHECK(parse_facts("wlist(0, -2, pos(a)). % c\n") == Reification{t});
    CHECK(t.is("wlist", 3));
    CHECK(Term::symbol("false").is("false", 0));
    CHECK_THROWS_AS((void)parse_facts("a(b"), ParseError);
    CHECK_THROWS_AS((void)parse_facts("3."), ParseError);
    CHECK_THROWS_AS((void)parse_facts("a(B)."), ParseError);
    CHECK(render_facts({t, Term::symbol("x")}) == "wlist(0,-2,pos(a)).\nx.\n");
}

TEST_CASE("reification of the running example matches the golden facts") {
    const auto r = reify(fixture_program("pi1.lp"));
    CHECK(render_facts(r) == read_fixture("pi1.reified"));
}

TEST_CASE("documented fact shapes") {
    const auto r = reify(fixture_program("pi0.lp"));
    CHECK(r.front() == parse_facts("rule(pos(sum(1,0,2)),pos(conjunction(0))).").front());
    for (const char* f : {"wlist(0,0,pos(atom(p)),1)", "wlist(0,1,pos(atom(t)),1)", "set(0,pos(sum(1,1,2)))",
                          "wlist(1,0,pos(atom(r)),1)", "wlist(1,1,pos(atom(s)),1)", "wlist(1,2,neg(atom(t)),1)",
                          "set(1,pos(sum(1,0,2)))"}) {
        INFO(f);
        CHECK(has_fact(r, f));
    }
    std::size_t scc_facts = 0;
    std::set<Weight> scc_labels;
    for (const auto& f : r) {
        if (f.is("scc", 2)) {
            ++scc_facts;
            scc_labels.insert(f.args[0].value);
        }
    }
    CHECK(scc_facts == 7);
    CHECK(scc_labels == std::set<Weight>{0});
    CHECK(reify(Program{}).empty());
}

TEST_CASE("label sharing and determinism") {
    const auto p = parse_program("a :- 2 {b, c}. d :- 2 {b, c}. e :- 1 {b, c}. :- 2 {b, c}, e.");
    const auto r = reify(p);
    std::set<Weight> lists;
    std::set<Weight> bodies;
    for (const auto& f : r) {
        if (f.is("wlist", 4)) {
            lists.insert(f.args[0].value);
        }
        if (f.is("rule", 2)) {
            bodies.insert(f.args[1].args[0].args[0].value);
        }
    }
    CHECK(lists == std::set<Weight>{0});
    CHECK(bodies == std::set<Weight>{0, 1, 2});
    CHECK(has_fact(r, "rule(pos(false),pos(conjunction(2)))"));
    CHECK(render_facts(reify(p)) == render_facts(r));
    CHECK_THROWS_AS((void)reify(parse_program("a | b.")), ContractViolation);
}

TEST_CASE("scc facts exist exactly for non-tight programs") {
    auto has_scc = [](const char* text) {
        const auto r = reify(parse_program(text));
        return std::any_of(r.begin(), r.end(), [](const Term& f) { return f.is("scc", 2); });
    };
    CHECK(has_scc("a :- b. b :- a."));
    CHECK(has_scc("a :- 1 {a}."));
    CHECK_FALSE(has_scc("a :- b. b :- not a."));
    CHECK_FALSE(has_scc("a."));
}

TEST_CASE("round trip on the fixture corpus") {
    for (const char* name : {"pi0.lp", "pi1.lp", "repair.lp"}) {
        INFO(name);
        const auto p = fixture_program(name);
        const auto r = reify(p);
        CHECK(parse_reified(r) == normalize(p));
        CHECK(parse_reified(parse_facts(render_facts(r))) == normalize(p));
        CHECK(enumerate_answer_sets(parse_reified(r)) == enumerate_answer_sets(p));
    }
}

TEST_CASE("normalization") {
    const auto n = normalize(parse_program("{a} :- c, b, c. #minimize[a@2, b, c@2]."));
    CHECK(n == parse_program("0 #sum[a=1] 1 :- b, c. #minimize[a@2, c@2, b@1]."));
    CHECK(normalize(n) == n);
}

TEST_CASE("malformed reifications are rejected") {
    CHECK_THROWS_AS((void)parse_reified(facts("rule(pos(sum(0,0,1)),pos(conjunction(0))). "
                                               "wlist(0,0,pos(atom(a)),1). wlist(0,2,pos(atom(b)),1).")),
                    ReifyError);
    CHECK_THROWS_AS((void)parse_reified(facts("rule(pos(sum(0,0,1)),pos(conjunction(0))). "
                                               "wlist(0,0,pos(atom(a)),1). wlist(0,0,pos(atom(b)),1).")),
                    ReifyError);
    CHECK_THROWS_AS((void)parse_reified(facts("rule(pos(atom(a)),pos(conjunction(0))). wlist(4,0,pos(atom(a)),1).")),
                    ReifyError);
    CHECK_THROWS_AS((void)parse_reified(facts("rule(pos(atom(a)),pos(conjunction(0))). set(1,pos(atom(b))).")),
                    ReifyError);
    CHECK_THROWS_AS((void)parse_reified(facts("rule(pos(atom(a)),pos(conjunction(0))). scc(0,atom(a)).")),
                    ReifyError);
    CHECK_THROWS_AS((void)parse_reified(facts("rule(pos(atom(a)),pos(conjunction(0))). set(0,pos(atom(a))).")),
                    ReifyError);
    CHECK_THROWS_AS((void)parse_reified(facts("rule(atom(a),pos(conjunction(0))).")), ReifyError);
    CHECK_THROWS_AS((void)parse_reified(facts("fact(1).")), ReifyError);
    CHECK_THROWS_AS((void)parse_reified(facts("rule(pos(atom(A1)),pos(conjunction(0))).")), ParseError);
    CHECK_NOTHROW((void)parse_reified(facts("rule(pos(atom(a)),pos(conjunction(0))). set(0,pos(atom(a))). "
                                            "scc(0,atom(a)). scc(0,conjunction(0)).")));
    CHECK_NOTHROW((void)parse_reified(facts("rule(pos(atom(a)),pos(conjunction(0))). set(0,pos(atom(a))). "
                                            "scc(3,atom(a)). scc(3,conjunction(0)).")));
}

TEST_CASE("property: reify round trip on random programs") {
    testing::ProgramGenerator gen(17);
    testing::ProgramShape shape;
    shape.minimize = true;
    shape.levels = 3;
    shape.weights = 2;
    for (int round = 0; round < 300; ++round) {
        const auto p = gen.program(shape);
        INFO(render_program(p));
        const auto r = reify(p);
        CHECK(parse_reified(r) == normalize(p));
        CHECK(parse_facts(render_facts(r)) == r);
        const auto has_scc = std::any_of(r.begin(), r.end(), [](const Term& f) { return f.is("scc", 2); });
        CHECK(has_scc == (sccs(p).nontrivial_count() > 0));
    }
}
