#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curves.hpp"
#include "dieudonne.hpp"
#include "zeta.hpp"

namespace g4::census {

constexpr int kSchemaVersion = 1;

/** Number of models the F2 enumeration visits for a kind (65536 for each quadric). */
size_t domain_size(curves::ModelKind kind);
/** index-th model in canonical-encoding order. */
curves::CurveModel model_at(curves::ModelKind kind, size_t index);
std::vector<curves::CurveModel> enumerate_f2(curves::ModelKind kind);

/** Point counts N_1..N_4 of an F2 quadric model from precomputed monomial bit-planes. */
std::array<uint64_t, 4> fast_counts_f2(const curves::QuadricCubicCurve& c);

struct CensusRecord {
    std::string id;
    curves::ModelKind kind = curves::ModelKind::NsQuadric;
    bool smooth = false;
    // remaining fields are set only for smooth models
    std::array<uint64_t, 4> counts{};
    std::optional<zeta::WeilPolynomial> weil;
    std::vector<zeta::Rational> slopes;
    zeta::StratumLabel stratum{zeta::Stratum::OrdinaryOrOther, 0};
    std::optional<int> a_number;
    std::optional<int> cartier_two_rank;
    std::optional<bool> type43;
    std::optional<eo::EoResult> eo;
};

/** Full pipeline for one model; throws ConsistencyError naming the curve on internal disagreement. */
CensusRecord classify(const curves::CurveModel& c);

struct CensusOptions {
    unsigned workers = 1;
    size_t begin = 0;         // index range inside each kind's enumeration
    size_t end = SIZE_MAX;
};

/** Records sorted by id; identical for any worker count. */
std::vector<CensusRecord> run_census(const std::vector<curves::ModelKind>& kinds, const CensusOptions& opt = {});

std::string to_json_line(const CensusRecord& r);
CensusRecord from_json_line(const std::string& line);
void write_jsonl(std::ostream& out, const std::vector<CensusRecord>& records);
std::vector<CensusRecord> read_jsonl(std::istream& in);
void write_csv_summary(std::ostream& out, const std::vector<CensusRecord>& records);

struct IsoClass {
    std::string representative;  // least encoding in the F2-orbit
    std::vector<std::string> members;
    uint64_t aut = 0;
    uint64_t jacobian_aut = 0;
};

struct IsogenyClassReport {
    zeta::WeilPolynomial weil;
    std::vector<std::string> members;  // smooth record ids
    std::vector<IsoClass> iso_classes;  // filled with stack counts
    std::optional<zeta::Rational> stack_count;
    std::optional<zeta::Rational> published_constant;
};

/** One report per distinct Weil polynomial among smooth records, ordered by polynomial; no automorphism work. */
std::vector<IsogenyClassReport> group_isogeny_classes(const std::vector<CensusRecord>& records);

/** The two supersingular classes with a published abelian-side count. */
zeta::WeilPolynomial class_h();
zeta::WeilPolynomial class_h_prime();
std::optional<zeta::Rational> published_abelian_count(const zeta::WeilPolynomial& w);

class Census {
public:
    explicit Census(std::vector<CensusRecord> records);

    const std::vector<CensusRecord>& records() const { return records_; }
    const CensusRecord* find(const std::string& id) const;

    /** Groups the class and computes its stack count (automorphisms only for its members); cached. */
    const IsogenyClassReport& stack_count(const zeta::WeilPolynomial& w);
    const IsogenyClassReport* grouped(const zeta::WeilPolynomial& w) const;

private:
    std::vector<CensusRecord> records_;
    std::map<std::string, size_t> index_;
    std::map<std::string, IsogenyClassReport> classes_;  // keyed by IntPoly::to_string
};

struct PropositionCheck {
    std::string name;
    bool passed = true;
    std::vector<std::string> failing_ids;
    std::string detail;
};

struct VerifyReport {
    std::vector<PropositionCheck> checks;
    size_t supersingular_classes = 0;
    bool all_passed() const;
};

constexpr size_t kSupersingularClassBound = 65;

VerifyReport verify_propositions(const std::vector<CensusRecord>& records);

/** Needs class h grouped first (StateError otherwise). */
std::string discrepancy_report(const Census& census, const zeta::WeilPolynomial& w = class_h());

}  // namespace g4::census
