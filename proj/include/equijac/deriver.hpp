#pragma once
// Rediscovers the relation space from scratch: enumerates candidate covariant
// terms per dimension, filters by computed pole order, solves the exact
// nullspace incrementally along the pole-grade chain, and counts new scalar
// relations per grade. Also checks the symmetric-product decomposition table.

#include "equijac/engine.hpp"

namespace equijac {

struct Candidate {
    std::vector<FactorPtr> term;  // product expression (usually one factor)
    std::string text;
    std::pair<int, int> pole{0, 0};  // zero elements report (0,0)
    bool zero = false;
    int grade_index = 0;  // first position in grade_chain() admitting the pole
};

struct CandidateCatalog {
    int dim = 0;
    int max_div = 0;
    int max_diag = 0;
    std::vector<Candidate> terms;
};

// All candidate terms of h-weight n-1 with pole orders within the bounds:
// [Pa (.) Pb]_n, P(n), the constant for n = 1, g-covariant atoms of dimension
// n, and [Gx (.) q]_n for q a coordinate atom or pairwise projection.
CandidateCatalog build_candidates(Engine& eng, int n, int max_div, int max_diag = 4);

struct DerivedRelation {
    int dim = 0;
    std::pair<int, int> grade{0, 0};        // grade at which the relation is born
    std::vector<Rational> coefficients;     // over the catalog's term list
    std::vector<std::size_t> support;       // indices of non-zero coefficients
    std::string text;                       // rendered relation
};

// Basis of all relations among the candidates admissible at the grade.
std::vector<DerivedRelation> derive_relations(Engine& eng, int n, std::pair<int, int> grade);

struct DerivationReport {
    // New scalar relations per grade, in grade_chain() order.
    std::vector<std::pair<std::pair<int, int>, int>> grade_counts;
    int total_scalars = 0;
    std::vector<DerivedRelation> relations;  // highest-weight relations, all dims
    std::map<Var, Rational> curve;           // specialization used for span counting
    // Shipped-catalog cross check: record id -> audit nullspace dimension and
    // proportionality to the shipped coefficients.
    struct CatalogMatch {
        std::string id;
        int nullspace_dim = 0;
        bool proportional = false;
    };
    std::vector<CatalogMatch> catalog_matches;
};

DerivationReport derive_all(Engine& eng, unsigned long seed = 1);

struct TableComponent {
    int dim = 0;
    int printed_div = 0, printed_diag = 0;
    bool expected_absent = false;   // hole in the printed table
    bool computed_zero = false;
    std::pair<int, int> computed{0, 0};
    bool pole_match = false;
    bool top_is_product = false;    // p = 0 component equals the product of hws
};

struct TableCell {
    int a = 0, b = 0;  // P(a) (.) P(b)
    std::vector<TableComponent> components;
};

struct TableReport {
    std::vector<TableCell> cells;
    std::vector<std::string> mismatches;
};

TableReport verify_table(Engine& eng);

}  // namespace equijac
