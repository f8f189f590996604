#include "doctest.h"

#include "equijac/engine.hpp"

using namespace equijac;

namespace {

Engine& engine() {
    static Engine e;
    return e;
}

FactorPtr factor_of(const std::string& text) {
    Relation r = parse_relation(text + " = 0");
    return r.terms[0].factors[0];
}

}  // namespace

TEST_CASE("anchored evaluations") {
    Engine& e = engine();
    CurveElement c = e.value_of(factor_of("[P5 @ P5]_1"));
    CHECK(c.is_constant());
    CHECK(c.constant_value() == make_rat(1, 144));

    CHECK(e.value_of(factor_of("[P5 @ P4]_2")).is_zero());
    CHECK(e.value_of(factor_of("[P5 @ P3]_5")).is_zero());
    CHECK(e.value_of(factor_of("[P4 @ P3]_2")).is_zero());
    CHECK(e.value_of(factor_of("[P5 @ P5]_7")).is_zero());

    // The top power of P3 is the cube of its highest weight.
    CurveElement hw = e.registry().at("P3").hw();
    CHECK(e.value_of(factor_of("P3^3_7")) == hw * hw * hw);
}

TEST_CASE("verbatim verification of the low-grade records") {
    Engine& e = engine();
    for (const char* id : {"4.2-1", "4.2-2", "4.2-3", "4.2-4", "4.3-1", "4.4-1", "4.5-1",
                           "4.7-1", "4.13-1"}) {
        RecordResult res = e.verify_record(e.record(id), false);
        CAPTURE(id);
        CHECK((res.status == Status::ExactZero || res.status == Status::ConstantMatch));
        CHECK(res.orbit_count == res.dim);
    }
}

TEST_CASE("formal scalar relations substitute to zero") {
    Engine& e = engine();
    e.verify_record(e.record("4.3-1"), true);
    const auto& scalars = e.scalar_relations("4.3-1");
    CHECK(scalars.size() == 5);
    for (const auto& s : scalars) {
        CHECK(!s.is_zero());
        CHECK(substitute(s, e.registry()).is_zero());
    }
}

TEST_CASE("audit recovers printed coefficients") {
    Engine& e = engine();
    AuditResult audit = e.audit_record(e.record("4.3-1"));
    REQUIRE(audit.nullspace_dim() == 1);
    CHECK(audit.matches_printed);
    CHECK(audit.repaired == audit.printed);

    AuditResult hole = e.audit_record(e.record("4.2-2"));
    CHECK(hole.nullspace_dim() == 1);

    AuditResult constant = e.audit_record(e.record("4.2-1"));
    REQUIRE(constant.nullspace_dim() == 1);
    CHECK(constant.term_texts.back() == "1");
    CHECK(constant.matches_printed);
}

TEST_CASE("audit rejects inconsistent weights") {
    Engine& e = engine();
    std::vector<std::vector<FactorPtr>> terms{{factor_of("P5")}, {factor_of("P4")}};
    CHECK_THROWS_AS(e.nullspace_of_terms(terms), std::invalid_argument);
}

