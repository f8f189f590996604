#include "doctest.h"

#include "equijac/catalog.hpp"

using namespace equijac;

namespace {

const AtomRegistry& registry() {
    static const AtomRegistry reg = build_registry();
    return reg;
}

bool has_note(const AtomRegistry& reg, const std::string& subject) {
    for (const auto& n : reg.notes())
        if (n.subject == subject) return true;
    return false;
}

}  // namespace

TEST_CASE("coordinate modules match the printed lists") {
    const auto& reg = registry();
    const IrrModule& P5 = reg.at("P5");
    Poly x1 = Poly::variable(Var::X1), x2 = Poly::variable(Var::X2);
    CHECK(P5.basis[1] == CurveElement((x1 + x2).scaled(make_rat(2)), {}, {}, {}, 2));
    CHECK(P5.basis[2] ==
          CurveElement(x1 * x1 + (x1 * x2).scaled(make_rat(4)) + x2 * x2, {}, {}, {}, 2));
    CHECK(P5.basis[4] == CurveElement(x1 * x1 * x2 * x2, {}, {}, {}, 2));

    const IrrModule& P4 = reg.at("P4");
    // 3 (x2 y1 - x1 y2) / Delta^3
    CHECK(P4.basis[1] ==
          CurveElement({}, x2.scaled(make_rat(3)), x1.scaled(make_rat(-3)), {}, 3));
    // (x2^3 y1 - x1^3 y2) / Delta^3
    CHECK(P4.basis[3] == CurveElement({}, x2 * x2 * x2, -(x1 * x1 * x1), {}, 3));

    const IrrModule& P3 = reg.at("P3");
    CurveElement I = invariant_I();
    CurveElement dinv(Poly::constant(1), {}, {}, {}, 1);
    CHECK(P3.basis[0] == I * dinv);
    CHECK(P3.basis[1] == I * CurveElement(x1 + x2, {}, {}, {}, 1));
    CHECK(P3.basis[2] == I * CurveElement(x1 * x2, {}, {}, {}, 1));

    const IrrModule& P1 = reg.at("P1");
    CHECK(P1.basis[0] == I * I);
    CHECK(sl2_h(P1.basis[0]).is_zero());
}

TEST_CASE("every registered module passes the action laws") {
    const auto& reg = registry();
    CHECK(reg.atoms().size() == 18);
    for (const auto& [name, mod] : reg.atoms()) {
        CHECK_NOTHROW(check_module_laws(mod));
    }
}

TEST_CASE("quadratic covariants are verbatim") {
    const auto& reg = registry();
    Poly g4 = Poly::variable(Var::G4), g5 = Poly::variable(Var::G5), g6 = Poly::variable(Var::G6);
    CHECK(reg.at("G2_9").hw() == CurveElement::from_poly(g6 * g4 - g5 * g5));
    // No print-mismatch notes for the quadratics.
    for (const char* name : {"G2_13", "G2_9", "G2_5", "G2_1"}) CHECK(!has_note(reg, name));
}

TEST_CASE("cubic covariants") {
    const auto& reg = registry();
    Poly g3 = Poly::variable(Var::G3), g4 = Poly::variable(Var::G4), g5 = Poly::variable(Var::G5),
         g6 = Poly::variable(Var::G6);
    CHECK(reg.at("G3_13").hw() ==
          CurveElement::from_poly((g6 * g6 * g3 - (g6 * g5 * g4).scaled(make_rat(3)) +
                                   (g5 * g5 * g5).scaled(make_rat(2)))
                                      .scaled(make_rat(3, 22))));
    CHECK(has_note(reg, "G3_13"));
    CHECK(has_note(reg, "G3_11"));
    // The 7-dimensional pair stays independent after canonicalization.
    CHECK(reg.at("G3_7A").hw() != reg.at("G3_7B").hw());
    // Orientation notes present for the lowest-weight prints, no mismatch beyond.
    for (const char* name : {"G3_9", "G3_7A", "G3_7B", "G3_3"}) {
        CHECK(has_note(reg, name));
        for (const auto& n : reg.notes())
            if (n.subject == name) CHECK(n.note.find("does not end") == std::string::npos);
    }
}

TEST_CASE("coordinate pole classes") {
    const auto& reg = registry();
    CHECK(reg.pole_class("P5") == std::pair<int, int>(2, 2));
    CHECK(reg.pole_class("P4") == std::pair<int, int>(3, 2));
    CHECK(reg.pole_class("P3") == std::pair<int, int>(4, 2));
    CHECK(reg.pole_class("P2") == std::pair<int, int>(5, 2));
    CHECK(reg.pole_class("P1") == std::pair<int, int>(6, 2));
    CHECK(has_note(reg, "I"));
    for (const auto& name : g_covariant_names())
        CHECK(reg.pole_class(name) == std::pair<int, int>(0, 0));
}

