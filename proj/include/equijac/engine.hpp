#pragma once
// Exact evaluation of covariant expressions against the atom registry,
// verbatim verification of the identity catalog, audit-mode coefficient
// recovery, orbit expansion to scalar relations, and the rank test over the
// sixteen coordinate symbols.

#include <random>

#include "equijac/expr.hpp"
#include "equijac/formal.hpp"
#include "equijac/linalg.hpp"

namespace equijac {

enum class Status { ExactZero, ConstantMatch, AuditRepaired, Failed };
const char* status_name(Status s);

struct Discrepancy {
    enum class Scope { Catalog, Record };
    Scope scope;
    std::string subject;
    std::string note;
};

struct AuditResult {
    std::vector<std::string> term_texts;
    std::vector<Rational> printed;  // coefficients as printed (rhs folded in)
    std::vector<std::vector<Rational>> nullspace;
    std::vector<Rational> repaired;  // scaled to the printed head coefficient
    bool matches_printed = false;

    int nullspace_dim() const { return static_cast<int>(nullspace.size()); }
};

struct RecordResult {
    std::string id;
    std::optional<std::pair<int, int>> grade;
    std::optional<std::pair<int, int>> computed_grade;
    int dim = 0;
    Status status = Status::Failed;
    int orbit_count = 0;
    std::optional<AuditResult> audit;
    std::string residual_digest;

    bool passed(bool allow_repairs) const {
        return status == Status::ExactZero || status == Status::ConstantMatch ||
               (allow_repairs && status == Status::AuditRepaired);
    }
};

struct VerificationReport {
    std::vector<RecordResult> records;
    std::vector<Discrepancy> discrepancies;
    // Scalar-relation counts per grade over the section-4 records.
    std::vector<std::pair<std::pair<int, int>, int>> grade_counts;
    std::map<int, int> dim_profile;
    int total_scalars = 0;

    bool pass(bool allow_repairs) const;
};

struct RankResult {
    int rank = 0;
    int grade64_rank = 0;          // rank of the (6,4) sub-block
    std::vector<int> profile;      // record multiplicity of dimensions 1..7
    std::map<Var, Rational> curve; // the specialization used
    int resamples = 0;
    std::vector<unsigned long> seeds_used;
};

// The fourteen pole grades in derivation order.
const std::vector<std::pair<int, int>>& grade_chain();

const std::string& shipped_catalog_text();

std::map<Var, Rational> parse_curve_file(const std::string& content);
std::map<Var, Rational> random_curve(std::mt19937_64& rng);

class Engine {
public:
    Engine();
    explicit Engine(const std::string& catalog_text);

    const AtomRegistry& registry() const { return registry_; }
    const std::vector<IdentityRecord>& records() const { return records_; }
    const IdentityRecord& record(const std::string& id) const;

    // Ring-side value and orbit module of a factor; cached by printed form.
    const CurveElement& value_of(const FactorPtr& f);
    const IrrModule& module_of(const FactorPtr& f);
    CurveElement eval_relation_lhs(const Relation& r);

    // Formal-side twins (coordinate symbols stay symbolic).
    const FormalQuad& formal_value_of(const FactorPtr& f);
    const BasicModule<FormalQuad>& formal_module_of(const FactorPtr& f);

    // The relation as sum_j c_j T_j = rhs over flattened product terms.
    struct LinearForm {
        std::vector<std::vector<FactorPtr>> terms;  // each a product of factors
        std::vector<std::string> term_texts;
        std::vector<Rational> coefficients;
        Rational rhs;
    };
    LinearForm linear_form(const Relation& r) const;

    CurveElement term_value(const std::vector<FactorPtr>& product);
    FormalQuad formal_term_value(const std::vector<FactorPtr>& product);

    // Exact nullspace over a term list; pre: equal h-weights.
    std::vector<std::vector<Rational>> nullspace_of_terms(
        const std::vector<std::vector<FactorPtr>>& terms);

    AuditResult audit_record(const IdentityRecord& rec);
    RecordResult verify_record(const IdentityRecord& rec, bool orbit_check);

    VerificationReport verify(std::optional<std::pair<int, int>> grade_filter = std::nullopt,
                              bool orbit_check = false);
    // The section-5 records plus the "P1 = -4 [P3 (.) P3]_1" precursor.
    VerificationReport verify_kummer();

    // Scalar relations of one verified section-4 record as formal forms.
    const std::vector<FormalQuad>& scalar_relations(const std::string& id);

    RankResult rank_check(unsigned long seed, int trials = 1,
                          std::optional<std::map<Var, Rational>> curve = std::nullopt);

    std::pair<int, int> factor_poles(const FactorPtr& f);

private:
    void load(const std::string& catalog_text);
    CurveElement bterm_value(const BTerm& bt, int dim);
    FormalQuad formal_bterm_value(const BTerm& bt, int dim);

    AtomRegistry registry_;
    std::vector<IdentityRecord> records_;
    std::map<std::string, CurveElement> value_cache_;
    std::map<std::string, IrrModule> module_cache_;
    std::map<std::string, FormalQuad> formal_value_cache_;
    std::map<std::string, BasicModule<FormalQuad>> formal_module_cache_;
    std::map<std::string, std::vector<FormalQuad>> scalar_cache_;
    std::map<std::string, RecordResult> result_cache_;
};

}  // namespace equijac
