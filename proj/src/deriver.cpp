#include "equijac/deriver.hpp"

#include "equijac/poles.hpp"

#include <algorithm>
#include <sstream>

namespace equijac {

namespace {

FactorPtr make_atom(const std::string& name) {
    Factor f;
    f.kind = Factor::Kind::Atom;
    f.atom = name;
    return std::make_shared<const Factor>(std::move(f));
}

FactorPtr make_proj(const FactorPtr& a, const FactorPtr& b, int dim) {
    Bracket br;
    br.dim = dim;
    BTerm bt;
    bt.operands = {a, b};
    br.terms.push_back(std::move(bt));
    Factor f;
    f.kind = Factor::Kind::Bracket;
    f.bracket = std::make_shared<const Bracket>(std::move(br));
    return std::make_shared<const Factor>(std::move(f));
}

bool legal_projection(int da, int db, int n) {
    int lo = std::abs(da - db) + 1, hi = da + db - 1;
    return n >= lo && n <= hi && (hi - n) % 2 == 0;
}

int grade_index_for(std::pair<int, int> pole) {
    const auto& chain = grade_chain();
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (pole.first <= chain[i].first && pole.second <= chain[i].second)
            return static_cast<int>(i);
    return static_cast<int>(chain.size());
}

// Coordinate projections [Pa (.) Pb]_k usable as inner operands or as
// top-level candidates; holes are kept, their value is exactly zero.
std::vector<FactorPtr> coordinate_projections(int k) {
    std::vector<FactorPtr> out;
    for (int a = 5; a >= 1; --a)
        for (int b = a; b >= 1; --b) {
            if (!legal_projection(a, b, k)) continue;
            int p = (a + b - 1 - k) / 2;
            if (a == b && p % 2) continue;  // antisymmetric, identically zero
            out.push_back(make_proj(make_atom("P" + std::to_string(a)),
                                    make_atom("P" + std::to_string(b)), k));
        }
    return out;
}

}  // namespace

CandidateCatalog build_candidates(Engine& eng, int n, int max_div, int max_diag) {
    CandidateCatalog cat;
    cat.dim = n;
    cat.max_div = max_div;
    cat.max_diag = max_diag;

    std::vector<std::vector<FactorPtr>> raw;
    // The constant 1 (dimension 1 only).
    if (n == 1) raw.push_back({});
    // Linear coordinate terms.
    if (n >= 1 && n <= 5) raw.push_back({make_atom("P" + std::to_string(n))});
    // Quadratic coordinate projections, holes included.
    for (const auto& f : coordinate_projections(n)) raw.push_back({f});
    // Pure g-covariant atoms of matching dimension.
    for (const auto& gname : g_covariant_names())
        if (atom_dim(gname) == n) raw.push_back({make_atom(gname)});
    // Dressed terms [Gx (.) q]_n with q linear or quadratic in the coordinates.
    std::vector<FactorPtr> qs;
    for (int m = 1; m <= 5; ++m) qs.push_back(make_atom("P" + std::to_string(m)));
    for (int k = 1; k <= 9; ++k)
        for (const auto& f : coordinate_projections(k)) qs.push_back(f);
    for (const auto& gname : g_covariant_names()) {
        int dg = atom_dim(gname);
        for (const auto& q : qs) {
            int dq = q->dim();
            if (!legal_projection(dg, dq, n)) continue;
            // Skip dressings of holes; the bare holes are already candidates.
            if (eng.value_of(q).is_zero()) continue;
            FactorPtr t = dg >= dq ? make_proj(make_atom(gname), q, n)
                                   : make_proj(q, make_atom(gname), n);
            raw.push_back({t});
        }
    }

    for (const auto& term : raw) {
        Candidate c;
        c.term = term;
        if (term.empty()) {
            c.text = "1";
            c.pole = {0, 0};
        } else {
            c.text = print_factor(*term[0]);
            CurveElement v = eng.value_of(term[0]);
            if (v.is_zero()) {
                c.zero = true;
                c.pole = {0, 0};
            } else {
                c.pole = pole_orders(v);
            }
        }
        if (c.pole.first > max_div || c.pole.second > max_diag) continue;
        c.grade_index = grade_index_for(c.pole);
        cat.terms.push_back(std::move(c));
    }
    std::stable_sort(cat.terms.begin(), cat.terms.end(),
                     [](const Candidate& x, const Candidate& y) {
                         return x.grade_index < y.grade_index;
                     });
    return cat;
}

namespace {

// Sparse exact column vector of a curve element over (component, monomial)
// rows, at a fixed Delta power.
using RowKey = std::pair<int, Mono>;

std::map<RowKey, Rational, std::less<RowKey>> column_of(const CurveElement& v, int K) {
    std::map<RowKey, Rational> col;
    Poly scale = Poly::constant(1);
    Poly delta = delta_poly();
    for (int i = v.delta_pow(); i < K; ++i) scale = scale * delta;
    const Poly* comps[4] = {&v.a(), &v.b(), &v.c(), &v.d()};
    for (int ci = 0; ci < 4; ++ci) {
        Poly scaled = *comps[ci] * scale;
        for (const auto& [m, c] : scaled.terms()) col[{ci, m}] = c;
    }
    return col;
}

struct IncrementalKernel {
    // Reduced columns with their expression in terms of processed candidates.
    struct BasisCol {
        std::map<RowKey, Rational> col;
        std::vector<Rational> combo;
        RowKey pivot;
    };
    std::vector<BasisCol> basis;
    std::size_t processed = 0;

    // Returns the kernel combination when the new column is dependent.
    std::optional<std::vector<Rational>> add(std::map<RowKey, Rational> col) {
        std::vector<Rational> combo(processed + 1, Rational(0));
        combo[processed] = 1;
        ++processed;
        for (const auto& b : basis) {
            auto it = col.find(b.pivot);
            if (it == col.end() || it->second == 0) continue;
            Rational factor = it->second;
            for (const auto& [k, v] : b.col) {
                auto [cit, ins] = col.emplace(k, Rational(0));
                cit->second -= factor * v;
                if (cit->second == 0) col.erase(cit);
            }
            for (std::size_t j = 0; j < b.combo.size(); ++j) combo[j] -= factor * b.combo[j];
        }
        if (col.empty()) {
            combo.resize(processed);
            return combo;
        }
        BasisCol bc;
        bc.pivot = col.begin()->first;
        Rational inv = Rational(1) / col.at(bc.pivot);
        for (auto& [k, v] : col) v *= inv;
        bc.col = std::move(col);
        combo.resize(processed);
        for (auto& c : combo) c *= inv;
        bc.combo = std::move(combo);
        basis.push_back(std::move(bc));
        return std::nullopt;
    }
};

std::string render_relation(const CandidateCatalog& cat, const std::vector<Rational>& combo) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < combo.size(); ++j) {
        if (combo[j] == 0) continue;
        Rational c = combo[j];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = c < 0 ? Rational(-c) : c;
        if (a != 1 || cat.terms[j].text == "1") os << rat_to_string(a) << (cat.terms[j].text == "1" ? "" : " * ");
        if (cat.terms[j].text != "1") os << cat.terms[j].text;
    }
    os << " = 0";
    return os.str();
}

std::vector<DerivedRelation> kernel_relations(Engine& eng, const CandidateCatalog& cat,
                                              int max_grade_index) {
    IncrementalKernel ker;
    std::vector<DerivedRelation> out;
    std::vector<std::size_t> used;
    int K = 0;
    for (const auto& c : cat.terms)
        if (!c.zero && !c.term.empty()) K = std::max(K, eng.value_of(c.term[0]).delta_pow());
    for (std::size_t j = 0; j < cat.terms.size(); ++j) {
        const Candidate& c = cat.terms[j];
        if (c.grade_index > max_grade_index) break;
        CurveElement v = c.term.empty() ? CurveElement::one() : eng.value_of(c.term[0]);
        auto dep = ker.add(column_of(v, K));
        used.push_back(j);
        if (!dep) continue;
        DerivedRelation rel;
        rel.dim = cat.dim;
        rel.grade = grade_chain()[c.grade_index];
        rel.coefficients.assign(cat.terms.size(), Rational(0));
        for (std::size_t i = 0; i < dep->size(); ++i) {
            if ((*dep)[i] == 0) continue;
            rel.coefficients[used[i]] = (*dep)[i];
            rel.support.push_back(used[i]);
        }
        rel.text = render_relation(cat, rel.coefficients);
        out.push_back(std::move(rel));
    }
    return out;
}

}  // namespace

std::vector<DerivedRelation> derive_relations(Engine& eng, int n, std::pair<int, int> grade) {
    CandidateCatalog cat = build_candidates(eng, n, grade.first, grade.second);
    int gi = grade_index_for(grade);
    auto rels = kernel_relations(eng, cat, gi);
    // Re-verify each basis vector exactly in the ring.
    for (const auto& rel : rels) {
        CurveElement sum;
        for (std::size_t j : rel.support) {
            CurveElement v = cat.terms[j].term.empty() ? CurveElement::one()
                                                       : eng.value_of(cat.terms[j].term[0]);
            sum = sum + v.scaled(rel.coefficients[j]);
        }
        if (!sum.is_zero())
            throw std::logic_error("derived relation fails ring re-verification: " + rel.text);
    }
    return rels;
}

DerivationReport derive_all(Engine& eng, unsigned long seed) {
    DerivationReport report;
    std::mt19937_64 rng(seed);
    report.curve = random_curve(rng);

    const auto& chain = grade_chain();
    std::map<std::pair<int, int>, int> counts;
    for (const auto& g : chain) counts[g] = 0;

    // Scalar span over the 136 symbol pairs at the specialized curve,
    // maintained as a running reduced basis.
    std::vector<std::vector<Rational>> reduced;  // each with a unit pivot
    std::vector<int> pivots;
    auto span_add = [&](std::vector<Rational> row) -> bool {
        for (std::size_t b = 0; b < reduced.size(); ++b) {
            const Rational& x = row[pivots[b]];
            if (x == 0) continue;
            Rational factor = x;
            for (int j = 0; j < kNumPairs; ++j) row[j] -= factor * reduced[b][j];
        }
        int pivot = -1;
        for (int j = 0; j < kNumPairs; ++j)
            if (row[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0) return false;
        Rational inv = Rational(1) / row[pivot];
        for (int j = 0; j < kNumPairs; ++j) row[j] *= inv;
        reduced.push_back(std::move(row));
        pivots.push_back(pivot);
        return true;
    };

    // Derive per dimension, then attribute scalar span growth per grade.
    struct Born {
        int grade_index;
        int dim;
        std::vector<FormalQuad> scalars;
        DerivedRelation rel;
    };
    std::vector<Born> born;
    for (int n = 1; n <= 7; ++n) {
        CandidateCatalog cat = build_candidates(eng, n, 10, 4);
        auto rels = kernel_relations(eng, cat, static_cast<int>(chain.size()) - 1);
        for (auto& rel : rels) {
            Born b;
            b.grade_index = grade_index_for(rel.grade);
            b.dim = n;
            FormalQuad r0;
            for (std::size_t j : rel.support) {
                FormalQuad f = cat.terms[j].term.empty()
                                   ? FormalQuad::unit()
                                   : eng.formal_value_of(cat.terms[j].term[0]);
                r0 = r0 + f.scaled(rel.coefficients[j]);
            }
            b.scalars.push_back(r0);
            for (int i = 0; i + 1 < n; ++i)
                b.scalars.push_back(sl2_apply(Gen::F, b.scalars.back()).scaled(make_rat(1, i + 1)));
            b.rel = std::move(rel);
            born.push_back(std::move(b));
        }
    }
    std::stable_sort(born.begin(), born.end(),
                     [](const Born& x, const Born& y) { return x.grade_index < y.grade_index; });

    for (auto& b : born) {
        int added = 0;
        for (const auto& s : b.scalars)
            if (span_add(specialize(s, report.curve))) ++added;
        counts[chain[b.grade_index]] += added;
        report.relations.push_back(b.rel);
    }
    report.total_scalars = static_cast<int>(reduced.size());
    for (const auto& g : chain) report.grade_counts.push_back({g, counts[g]});

    // Shipped-record cross check: the relation space restricted to each shipped
    // record's terms is one-dimensional and proportional to it.
    for (const auto& rec : eng.records()) {
        if (rec.id.rfind("4.", 0) != 0) continue;
        AuditResult audit = eng.audit_record(rec);
        DerivationReport::CatalogMatch m;
        m.id = rec.id;
        m.nullspace_dim = audit.nullspace_dim();
        if (audit.nullspace_dim() == 1 && !audit.repaired.empty()) {
            RecordResult res = eng.verify_record(rec, false);
            m.proportional = res.status == Status::AuditRepaired ? true : audit.matches_printed;
        }
        report.catalog_matches.push_back(m);
    }
    return report;
}

TableReport verify_table(Engine& eng) {
    struct PrintedCell {
        int a, b;
        std::vector<std::array<int, 3>> comps;  // dim, div, diag
    };
    static const std::vector<PrintedCell> printed{
        {5, 5, {{9, 4, 4}, {5, 2, 2}, {1, 0, 0}}},
        {5, 4, {{8, 5, 4}, {6, 3, 4}, {4, 3, 2}}},
        {4, 4, {{7, 6, 4}, {3, 4, 4}}},
        {5, 3, {{7, 6, 4}, {3, 4, 2}}},
        {4, 3, {{6, 7, 4}, {4, 5, 4}}},
        {3, 3, {{5, 8, 4}, {1, 6, 2}}},
        {5, 2, {{6, 7, 4}, {4, 5, 4}}},
        {4, 2, {{5, 8, 4}, {3, 6, 4}}},
        {3, 2, {{4, 9, 4}, {2, 7, 4}}},
        {2, 2, {{3, 10, 4}}},
        {5, 1, {{5, 8, 4}}},
        {4, 1, {{4, 9, 4}}},
        {3, 1, {{3, 10, 4}}},
        {2, 1, {{2, 11, 4}}},
        {1, 1, {{1, 12, 4}}},
    };

    TableReport report;
    for (const auto& cell : printed) {
        TableCell tc;
        tc.a = cell.a;
        tc.b = cell.b;
        FactorPtr A = make_atom("P" + std::to_string(cell.a));
        FactorPtr B = make_atom("P" + std::to_string(cell.b));
        for (int p = 0; p <= cell.b - 1; ++p) {
            if (cell.a == cell.b && p % 2) continue;  // antisymmetric part
            int dim = cell.a + cell.b - 1 - 2 * p;
            TableComponent comp;
            comp.dim = dim;
            const std::array<int, 3>* pc = nullptr;
            for (const auto& entry : cell.comps)
                if (entry[0] == dim) pc = &entry;
            comp.expected_absent = (pc == nullptr);
            if (pc) {
                comp.printed_div = (*pc)[1];
                comp.printed_diag = (*pc)[2];
            }
            CurveElement v = eng.value_of(make_proj(A, B, dim));
            comp.computed_zero = v.is_zero();
            std::ostringstream name;
            name << "[P" << cell.a << " (.) P" << cell.b << "]_" << dim;
            if (comp.expected_absent != comp.computed_zero) {
                report.mismatches.push_back(name.str() +
                                            (comp.computed_zero ? ": printed component vanishes"
                                                                : ": printed hole is non-zero"));
            }
            if (!comp.computed_zero) {
                comp.computed = pole_orders(v);
                if (pc) {
                    comp.pole_match = comp.computed ==
                                      std::pair<int, int>(comp.printed_div, comp.printed_diag);
                    if (!comp.pole_match) {
                        std::ostringstream os;
                        os << name.str() << ": computed poles (" << comp.computed.first << ","
                           << comp.computed.second << ") vs printed (" << comp.printed_div << ","
                           << comp.printed_diag << ")";
                        report.mismatches.push_back(os.str());
                    }
                }
                if (p == 0) {
                    const auto& ma = eng.registry().at("P" + std::to_string(cell.a));
                    const auto& mb = eng.registry().at("P" + std::to_string(cell.b));
                    comp.top_is_product = (v == ma.hw() * mb.hw());
                    if (!comp.top_is_product)
                        report.mismatches.push_back(name.str() + ": top is not the product of hws");
                }
            }
            tc.components.push_back(comp);
        }
        report.cells.push_back(std::move(tc));
    }
    return report;
}

}  // namespace equijac

