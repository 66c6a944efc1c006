#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "census.hpp"
#include "errors.hpp"
#include "support.hpp"

using namespace g4;
using namespace g4::census;
using curves::ModelKind;

namespace {

const std::vector<CensusRecord>& full_census() {
    static const std::vector<CensusRecord> records = [] {
        CensusOptions opt;
        opt.workers = std::max(1u, std::thread::hardware_concurrency());
        return run_census({ModelKind::Hyperelliptic, ModelKind::NsQuadric, ModelKind::ConeQuadric}, opt);
    }();
    return records;
}

const CensusRecord& record(const std::string& id) {
    const auto& all = full_census();
    auto it = std::lower_bound(all.begin(), all.end(), id, [](const CensusRecord& r, const std::string& s) { return r.id < s; });
    REQUIRE(it != all.end());
    REQUIRE(it->id == id);
    return *it;
}

std::string jsonl(const std::vector<CensusRecord>& rs) {
    std::ostringstream out;
    write_jsonl(out, rs);
    return out.str();
}

}  // namespace

TEST_CASE("enumeration domains") {
    CHECK(domain_size(ModelKind::NsQuadric) == 65536);
    CHECK(domain_size(ModelKind::ConeQuadric) == 65536);
    CHECK(domain_size(ModelKind::Hyperelliptic) == 113152);

    // hyperelliptic domain: h != 0, deg h <= 5, deg f <= 10, max(2 deg h, deg f) in {9, 10}
    size_t brute = 0;
    for (uint32_t h = 1; h < 64; ++h)
        for (uint32_t f = 0; f < 2048; ++f) {
            const int dh = 31 - __builtin_clz(h), df = f ? 31 - __builtin_clz(f) : -1;
            const int d = std::max(2 * dh, df);
            brute += d == 9 || d == 10;
        }
    CHECK(brute == 113152);

    for (auto kind : {ModelKind::NsQuadric, ModelKind::ConeQuadric, ModelKind::Hyperelliptic}) {
        std::set<std::string> seen;
        std::string prev;
        const size_t n = domain_size(kind);
        for (size_t i = 0; i < n; i += 37) {
            const auto s = curves::encode(model_at(kind, i));
            CHECK(s > prev);
            prev = s;
            seen.insert(s);
        }
        CHECK(curves::kind_of(model_at(kind, n - 1)) == kind);
    }
    const auto ns = enumerate_f2(ModelKind::NsQuadric);
    CHECK(ns.size() == 65536);
    CHECK(std::any_of(ns.begin(), ns.end(), [](const curves::CurveModel& c) { return curves::encode(c) == "ns;c=0x1d0c"; }));
}

TEST_CASE("bit-plane counts agree with the fibration and with P^3 enumeration") {
    support::Gen gen(61);
    for (auto kind : {curves::QuadricKind::NonSingular, curves::QuadricKind::Cone}) {
        for (int i = 0; i < 3000; ++i) {
            const auto c = curves::QuadricCubicCurve::from_mask(kind, uint16_t(gen.bits(16)));
            const auto fast = fast_counts_f2(c);
            REQUIRE(std::vector<uint64_t>(fast.begin(), fast.end()) == curves::count_points_upto(c, 4));
            if (i < 100) {
                const auto quad = oracle::quadric_form(kind == curves::QuadricKind::Cone);
                for (unsigned n = 1; n <= 4; ++n)
                    CHECK(fast[n - 1] == oracle::count_quadric_curve(support::std_field(n), quad, support::form_over(c, n)));
            }
        }
    }
}

TEST_CASE("labelled curves in the census") {
    const auto& ss = record("ns;c=0x1d0c");
    CHECK(ss.smooth);
    CHECK(ss.counts == std::array<uint64_t, 4>{7, 9, 13, 9});
    CHECK(ss.stratum.stratum == zeta::Stratum::S4);
    CHECK(ss.a_number == 1);
    CHECK(ss.cartier_two_rank == 0);
    CHECK(ss.type43 == false);
    REQUIRE(ss.eo);
    CHECK(ss.eo->label() == "[4]");

    const auto& n13 = record("ns;c=0x038c");
    CHECK(n13.counts == std::array<uint64_t, 4>{5, 9, 11, 17});
    CHECK(n13.stratum.stratum == zeta::Stratum::N13);

    const auto& n14 = record("cone;c=0x420c");
    CHECK(n14.counts == std::array<uint64_t, 4>{5, 9, 11, 25});
    CHECK(n14.stratum.stratum == zeta::Stratum::N14);
    REQUIRE(n14.eo);
    CHECK(n14.eo->label() == "[4,1]");
    CHECK_FALSE(n14.type43.has_value());

    const auto& hyp = record("hyp;h=0x01;f=0x220");
    CHECK(hyp.counts == std::array<uint64_t, 4>{5, 5, 5, 9});
    CHECK(*hyp.weil == class_h());
    REQUIRE(hyp.eo);
    CHECK(hyp.eo->label() == "[4,2]");
}

TEST_CASE("census totals and per-record consistency") {
    const auto& all = full_census();
    CHECK(all.size() == 65536 + 65536 + 113152);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const CensusRecord& a, const CensusRecord& b) { return a.id < b.id; }));
    std::map<ModelKind, size_t> smooth;
    for (const auto& r : all) {
        if (!r.smooth) {
            CHECK_FALSE(r.weil.has_value());
            continue;
        }
        ++smooth[r.kind];
        REQUIRE(r.weil);
        const auto predicted = zeta::predicted_counts(*r.weil, 4);
        for (int i = 0; i < 4; ++i) REQUIRE(predicted[i] == Int(r.counts[i]));
        const bool has_operator = r.kind != ModelKind::ConeQuadric;
        REQUIRE(r.cartier_two_rank.has_value() == has_operator);
        if (has_operator) REQUIRE(*r.cartier_two_rank == r.stratum.p_rank);
        REQUIRE(r.type43.has_value() == (has_operator && r.stratum.p_rank == 0));
        REQUIRE(r.eo.has_value() == (r.stratum.p_rank == 0));
        if (!r.a_number) {
            REQUIRE_FALSE(has_operator);
            continue;
        }
        REQUIRE(*r.a_number + r.stratum.p_rank <= 4);
        if (r.stratum.p_rank < 4) REQUIRE(*r.a_number >= 1);
    }
    CHECK(smooth[ModelKind::NsQuadric] == 16020);
    CHECK(smooth[ModelKind::ConeQuadric] == 12288);
    CHECK(smooth[ModelKind::Hyperelliptic] == 49152);
}

TEST_CASE("the published checks hold on the full census") {
    const auto rep = verify_propositions(full_census());
    REQUIRE(rep.checks.size() == 4);
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
    CHECK(rep.all_passed());
    CHECK(rep.supersingular_classes == 15);
}

TEST_CASE("a planted [4,3] record fails the first check") {
    auto records = run_census({ModelKind::NsQuadric}, {1, 0x1d0c, 0x1d0d});
    REQUIRE(records.size() == 1);
    records[0].type43 = true;
    const auto rep = verify_propositions(records);
    CHECK_FALSE(rep.checks[0].passed);
    CHECK(rep.checks[0].failing_ids == std::vector<std::string>{"ns;c=0x1d0c"});
    CHECK_FALSE(rep.all_passed());

    records[0].type43 = false;
    records[0].a_number = 3;
    const auto rep3 = verify_propositions(records);
    CHECK(rep3.checks[0].passed);
    CHECK_FALSE(rep3.checks[2].passed);
}

TEST_CASE("a hyperelliptic-only census passes") {
    std::vector<CensusRecord> hyp;
    for (const auto& r : full_census())
        if (r.kind == ModelKind::Hyperelliptic) hyp.push_back(r);
    const auto rep = verify_propositions(hyp);
    CHECK(rep.all_passed());
    CHECK(rep.checks[0].detail.rfind("0 ", 0) == 0);
}

TEST_CASE("worker count does not change the output") {
    const std::vector<ModelKind> kinds = {ModelKind::NsQuadric, ModelKind::ConeQuadric, ModelKind::Hyperelliptic};
    const auto one = jsonl(run_census(kinds, {1, 4000, 6000}));
    const auto four = jsonl(run_census(kinds, {4, 4000, 6000}));
    const auto seven = jsonl(run_census(kinds, {7, 4000, 6000}));
    CHECK(one == four);
    CHECK(one == seven);
    CHECK(std::count(one.begin(), one.end(), '\n') == 6000);
}

TEST_CASE("records survive JSON lines and the CSV summary") {
    const auto records = run_census({ModelKind::NsQuadric, ModelKind::Hyperelliptic}, {2, 0, 3000});
    for (const auto& r : records) {
        const auto line = to_json_line(r);
        CHECK(line.find('\n') == std::string::npos);
        CHECK(to_json_line(from_json_line(line)) == line);
    }
    std::istringstream in(jsonl(records));
    const auto back = read_jsonl(in);
    CHECK(jsonl(back) == jsonl(records));

    std::ostringstream csv;
    write_csv_summary(csv, records);
    const auto text = csv.str();
    CHECK(std::count(text.begin(), text.end(), '\n') >= 2);

    CHECK_THROWS(from_json_line("{not json"));
    CHECK_THROWS(from_json_line("{\"schema\": 99}"));
}

TEST_CASE("stack counts of the two supersingular classes") {
    Census census(full_census());
    CHECK_THROWS_AS(discrepancy_report(census), StateError);
    CHECK(census.grouped(class_h()) == nullptr);

    for (const auto& w : {class_h(), class_h_prime()}) {
        const auto& rep = census.stack_count(w);
        REQUIRE(rep.stack_count);
        CHECK(*rep.stack_count == zeta::Rational(1, 4));
        REQUIRE(rep.iso_classes.size() == 1);
        CHECK(rep.iso_classes[0].aut == 4);
        CHECK(rep.iso_classes[0].jacobian_aut == 4);
        for (const auto& iso : rep.iso_classes) CHECK(iso.aut * iso.members.size() == 384);
        CHECK(rep.published_constant == zeta::Rational(7, 4));
    }
    CHECK(census.stack_count(class_h()).iso_classes[0].representative == "hyp;h=0x01;f=0x220");
    CHECK(census.stack_count(class_h_prime()).iso_classes[0].representative == "hyp;h=0x01;f=0x221");

    const auto text = discrepancy_report(census);
    CHECK(text.find("class: t^8 + 2t^7 + 2t^6 - 4t^4 + 8t^2 + 16t + 16") != std::string::npos);
    CHECK(text.find("Jacobian-side stack count: 1/4") != std::string::npos);
    CHECK(text.find("1/4 ≠ 7/4") != std::string::npos);
}

TEST_CASE("an isogeny class with no curves has stack count zero") {
    Census census(full_census());
    const zeta::WeilPolynomial e4(IntPoly({16, 0, 32, 0, 24, 0, 8, 0, 1}), 2);
    const auto& rep = census.stack_count(e4);
    CHECK(rep.members.empty());
    REQUIRE(rep.stack_count);
    CHECK(*rep.stack_count == zeta::Rational(0));
    CHECK_THROWS_AS(discrepancy_report(census, e4), DomainError);
}

TEST_CASE("duplicate record ids are rejected") {
    auto records = run_census({ModelKind::NsQuadric}, {1, 0, 2});
    records.push_back(records[0]);
    CHECK_THROWS_AS(Census{records}, ConsistencyError);
}
