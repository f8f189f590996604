#pragma once
// The named atoms of the engine: the five coordinate modules P5..P1, the
// seven-dimensional curve-coefficient module G, and the quadratic and cubic
// covariants G2_*, G3_*. Every registered module passes the action-law suite.

#include <map>

#include "equijac/poles.hpp"
#include "equijac/sl2.hpp"

namespace equijac {

struct CatalogNote {
    std::string subject;
    std::string note;
};

class AtomRegistry {
public:
    const IrrModule& at(const std::string& name) const;
    bool has(const std::string& name) const { return atoms_.find(name) != atoms_.end(); }
    void add(IrrModule m);

    const std::map<std::string, IrrModule>& atoms() const { return atoms_; }
    std::vector<CatalogNote>& notes() { return notes_; }
    const std::vector<CatalogNote>& notes() const { return notes_; }

    // Computed (div, diag) pole orders of each atom's highest-weight element.
    std::pair<int, int> pole_class(const std::string& name) const;

private:
    std::map<std::string, IrrModule> atoms_;
    mutable std::map<std::string, std::pair<int, int>> pole_cache_;
    std::vector<CatalogNote> notes_;
};

// Coordinate atom names in module order: P5, P4, P3, P2, P1.
const std::vector<std::string>& coordinate_names();
// g-covariant atom names: G, G2_13..G2_1, G3_19..G3_3.
const std::vector<std::string>& g_covariant_names();

// Builds and law-checks the whole catalog. Non-fatal print discrepancies are
// collected in the registry notes.
AtomRegistry build_registry();

}  // namespace equijac
