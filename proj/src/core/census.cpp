#include "census.hpp"

#include <algorithm>
#include <exception>
#include <istream>
#include <ostream>
#include <set>
#include <thread>

#include <json.hpp>

#include "cartier.hpp"
#include "errors.hpp"

namespace g4::census {

using curves::CurveModel;
using curves::ModelKind;
using curves::QuadricKind;
using gf::FieldSpec;
using json = nlohmann::json;

namespace {

const std::vector<std::pair<uint16_t, uint16_t>>& hyp_domain() {
    static const std::vector<std::pair<uint16_t, uint16_t>> d = [] {
        std::vector<std::pair<uint16_t, uint16_t>> out;
        auto deg = [](uint32_t m) { return m ? 31 - __builtin_clz(m) : -1; };
        for (uint16_t h = 1; h < 64; ++h)
            for (uint16_t f = 0; f < 2048; ++f) {
                const int top = std::max(2 * deg(h), deg(f));
                if (top == 9 || top == 10) out.emplace_back(h, f);
            }
        return out;
    }();
    return d;
}

QuadricKind quadric_of(ModelKind k) {
    return k == ModelKind::NsQuadric ? QuadricKind::NonSingular : QuadricKind::Cone;
}

}  // namespace

size_t domain_size(ModelKind kind) {
    return kind == ModelKind::Hyperelliptic ? hyp_domain().size() : size_t{1} << 16;
}

CurveModel model_at(ModelKind kind, size_t index) {
    if (index >= domain_size(kind)) throw std::out_of_range("model index out of range");
    if (kind == ModelKind::Hyperelliptic) {
        const auto [h, f] = hyp_domain()[index];
        return curves::HyperellipticCurve::from_masks(h, f);
    }
    return curves::QuadricCubicCurve::from_mask(quadric_of(kind), static_cast<uint16_t>(index));
}

std::vector<CurveModel> enumerate_f2(ModelKind kind) {
    std::vector<CurveModel> out;
    const size_t n = domain_size(kind);
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(model_at(kind, i));
    return out;
}

// ---------------------------------------------------------------- F2 bit-plane counter

namespace {

// For every point of the quadric over F_{2^n}, bit-plane b holds bit b of each reduced monomial's value.
// With F2 coefficients q(P) = XOR of the selected monomial values, so P is on the curve iff every plane
// meets the coefficient mask in an even number of bits.
struct PlaneTable {
    std::array<std::vector<std::array<uint16_t, 4>>, 4> planes;

    explicit PlaneTable(QuadricKind kind) {
        const auto& mons = curves::cubic_monomials();
        const auto& red = curves::reduced_monomials(kind);
        for (unsigned n = 1; n <= 4; ++n) {
            const FieldSpec& F = FieldSpec::standard(n);
            const uint32_t N = F.size();
            for (int lead = 0; lead < 4; ++lead) {
                uint64_t combos = 1;
                for (int i = lead + 1; i < 4; ++i) combos *= N;
                for (uint64_t idx = 0; idx < combos; ++idx) {
                    std::array<uint32_t, 4> p{};
                    p[lead] = 1;
                    uint64_t r = idx;
                    for (int j = lead + 1; j < 4; ++j) p[j] = static_cast<uint32_t>(r % N), r /= N;
                    const uint32_t qv = F.mul(p[0], p[1]) ^ (kind == QuadricKind::NonSingular ? F.mul(p[2], p[3]) : F.sqr(p[3]));
                    if (qv) continue;
                    std::array<uint16_t, 4> pl{};
                    for (int i = 0; i < 16; ++i) {
                        const auto& e = mons[red[i]];
                        uint32_t v = 1;
                        for (int j = 0; j < 4; ++j)
                            for (int k = 0; k < e[j]; ++k) v = F.mul(v, p[j]);
                        for (unsigned b = 0; b < n; ++b)
                            if (v >> b & 1u) pl[b] |= uint16_t(1u << i);
                    }
                    planes[n - 1].push_back(pl);
                }
            }
        }
    }
};

const PlaneTable& plane_table(QuadricKind kind) {
    static const PlaneTable ns(QuadricKind::NonSingular), cone(QuadricKind::Cone);
    return kind == QuadricKind::NonSingular ? ns : cone;
}

}  // namespace

std::array<uint64_t, 4> fast_counts_f2(const curves::QuadricCubicCurve& c) {
    const uint16_t mask = c.mask();
    const auto& t = plane_table(c.kind());
    std::array<uint64_t, 4> out{};
    for (unsigned n = 1; n <= 4; ++n) {
        uint64_t cnt = 0;
        for (const auto& pl : t.planes[n - 1]) {
            unsigned odd = 0;
            for (unsigned b = 0; b < n; ++b) odd |= __builtin_parity(pl[b] & mask);
            cnt += !odd;
        }
        out[n - 1] = cnt;
    }
    return out;
}

// ---------------------------------------------------------------- classification

CensusRecord classify(const CurveModel& c) {
    CensusRecord r;
    r.id = curves::encode(c);
    r.kind = curves::kind_of(c);
    r.smooth = curves::is_smooth(c, false).smooth;
    if (!r.smooth) return r;

    const FieldSpec& base = curves::base_field(c);
    const auto* quad = std::get_if<curves::QuadricCubicCurve>(&c);
    if (quad && base.degree() == 1) {
        r.counts = fast_counts_f2(*quad);
    } else {
        const auto v = curves::count_points_upto(c, 4);
        std::copy(v.begin(), v.end(), r.counts.begin());
    }
    const std::vector<Int> counts(r.counts.begin(), r.counts.end());
    try {
        r.weil = zeta::weil_from_counts(counts, base.size());
    } catch (const DomainError& e) {
        throw ConsistencyError(r.id + ": smooth model with counts outside the Weil range (" + e.what() + ")");
    }
    if (zeta::predicted_counts(*r.weil, 4) != counts) throw ConsistencyError(r.id + ": count round trip failed");
    const auto np = zeta::newton_polygon(*r.weil);
    r.slopes = np.slopes;
    r.stratum = zeta::classify_stratum(np);

    std::optional<cartier::SemilinearOperator> op;
    if (const auto* h = std::get_if<curves::HyperellipticCurve>(&c)) {
        op = cartier::cartier_hyperelliptic(h->h(), h->f());
    } else if (quad->kind() == QuadricKind::NonSingular) {
        op = cartier::cartier_from_hasse_witt(cartier::hasse_witt_ns(curves::affine_model_ns(*quad)));
    }
    if (op) {
        r.a_number = cartier::a_number(*op);
        r.cartier_two_rank = cartier::two_rank(*op);
        if (*r.cartier_two_rank != r.stratum.p_rank)
            throw ConsistencyError(r.id + ": 2-rank " + std::to_string(*r.cartier_two_rank) + " from the Cartier operator but " +
                                   std::to_string(r.stratum.p_rank) + " zero slopes");
        if (r.stratum.p_rank == 0) r.type43 = cartier::is_type43_candidate(*op);
    } else if (r.stratum.p_rank == 0) {
        r.a_number = 2;  // cone curves of 2-rank zero
    }
    if (r.stratum.p_rank == 0) r.eo = eo::eo_classify_curve(r.stratum, *r.a_number, r.type43);
    return r;
}

std::vector<CensusRecord> run_census(const std::vector<ModelKind>& kinds, const CensusOptions& opt) {
    struct Job {
        ModelKind kind;
        size_t begin, end;
    };
    std::vector<Job> jobs;
    const unsigned workers = std::max(1u, opt.workers);
    for (ModelKind k : kinds) {
        const size_t lo = std::min(opt.begin, domain_size(k)), hi = std::min(opt.end, domain_size(k));
        if (lo >= hi) continue;
        const size_t chunk = (hi - lo + workers - 1) / workers;
        for (size_t s = lo; s < hi; s += chunk) jobs.push_back({k, s, std::min(hi, s + chunk)});
    }
    // warm the shared immutable tables before threads start
    for (ModelKind k : kinds)
        if (k != ModelKind::Hyperelliptic) plane_table(quadric_of(k));

    std::vector<std::vector<CensusRecord>> parts(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    auto work = [&](size_t j) {
        try {
            for (size_t i = jobs[j].begin; i < jobs[j].end; ++i) parts[j].push_back(classify(model_at(jobs[j].kind, i)));
        } catch (...) {
            errors[j] = std::current_exception();
        }
    };
    for (size_t start = 0; start < jobs.size(); start += workers) {
        std::vector<std::thread> pool;
        const size_t stop = std::min(jobs.size(), start + workers);
        if (workers == 1) {
            for (size_t j = start; j < stop; ++j) work(j);
        } else {
            for (size_t j = start; j < stop; ++j) pool.emplace_back(work, j);
            for (auto& t : pool) t.join();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<CensusRecord> all;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end(), [](const CensusRecord& a, const CensusRecord& b) { return a.id < b.id; });
    return all;
}

// ---------------------------------------------------------------- persistence

namespace {

zeta::Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return zeta::Rational(std::stoll(s));
    return zeta::Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace

std::string to_json_line(const CensusRecord& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["id"] = r.id;
    j["kind"] = curves::to_string(r.kind);
    j["smooth"] = r.smooth;
    if (r.smooth) {
        json counts = json::array();
        for (auto n : r.counts) counts.push_back(std::to_string(n));
        j["counts"] = counts;
        j["q"] = int_to_string(r.weil->q());
        j["weil"] = r.weil->poly().to_string();
        json slopes = json::array();
        for (const auto& s : r.slopes) slopes.push_back(zeta::to_string(s));
        j["slopes"] = slopes;
        j["stratum"] = zeta::to_string(r.stratum.stratum);
        j["p_rank"] = r.stratum.p_rank;
        j["a_number"] = r.a_number ? json(*r.a_number) : json(nullptr);
        j["two_rank"] = r.cartier_two_rank ? json(*r.cartier_two_rank) : json(nullptr);
        j["type43"] = r.type43 ? json(*r.type43) : json(nullptr);
        if (r.eo) {
            json cands = json::array();
            for (const auto& c : r.eo->candidates) cands.push_back(eo::to_string(c));
            j["eo"] = cands;
            j["smooth_impossible"] = r.eo->smooth_impossible;
        } else {
            j["eo"] = nullptr;
        }
    }
    return j.dump();
}

CensusRecord from_json_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad census record: ") + e.what());
    }
    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion)
            throw ParseError("unsupported schema_version " + j.at("schema_version").dump());
        CensusRecord r;
        r.id = j.at("id").get<std::string>();
        r.kind = curves::model_kind_from_string(j.at("kind").get<std::string>());
        r.smooth = j.at("smooth").get<bool>();
        if (!r.smooth) return r;
        const auto& counts = j.at("counts");
        if (counts.size() != 4) throw ParseError("record " + r.id + " needs four counts");
        for (size_t i = 0; i < 4; ++i) r.counts[i] = std::stoull(counts[i].get<std::string>());
        r.weil = zeta::WeilPolynomial(IntPoly::parse(j.at("weil").get<std::string>()), parse_int(j.at("q").get<std::string>()));
        for (const auto& s : j.at("slopes")) r.slopes.push_back(parse_rational(s.get<std::string>()));
        r.stratum.stratum = zeta::stratum_from_string(j.at("stratum").get<std::string>());
        r.stratum.p_rank = j.at("p_rank").get<int>();
        if (!j.at("a_number").is_null()) r.a_number = j["a_number"].get<int>();
        if (!j.at("two_rank").is_null()) r.cartier_two_rank = j["two_rank"].get<int>();
        if (!j.at("type43").is_null()) r.type43 = j["type43"].get<bool>();
        if (!j.at("eo").is_null()) {
            eo::EoResult e;
            for (const auto& c : j["eo"]) e.candidates.push_back(eo::parse_young(c.get<std::string>()));
            e.smooth_impossible = j.at("smooth_impossible").get<bool>();
            e.a_number = r.a_number.value_or(0);
            e.p_rank = r.stratum.p_rank;
            r.eo = e;
        }
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad census record: ") + e.what());
    }
}

void write_jsonl(std::ostream& out, const std::vector<CensusRecord>& records) {
    for (const auto& r : records) out << to_json_line(r) << '\n';
}

std::vector<CensusRecord> read_jsonl(std::istream& in) {
    std::vector<CensusRecord> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(from_json_line(line));
    return out;
}

void write_csv_summary(std::ostream& out, const std::vector<CensusRecord>& records) {
    struct Row {
        size_t models = 0, smooth = 0, prank0 = 0, s4 = 0, n13 = 0, n14 = 0, v0 = 0;
        std::map<std::string, size_t> eo;
    };
    std::map<std::string, Row> rows;
    for (const auto& r : records) {
        Row& row = rows[curves::to_string(r.kind)];
        ++row.models;
        if (!r.smooth) continue;
        ++row.smooth;
        if (r.stratum.p_rank == 0) ++row.prank0;
        switch (r.stratum.stratum) {
            case zeta::Stratum::S4: ++row.s4; break;
            case zeta::Stratum::N13: ++row.n13; break;
            case zeta::Stratum::N14: ++row.n14; break;
            case zeta::Stratum::V0Only: ++row.v0; break;
            default: break;
        }
        if (r.eo) ++row.eo[r.eo->label()];
    }
    out << "kind,models,smooth,p_rank_0,S4,N13,N14,V0-only,eo_types\n";
    for (const auto& [kind, row] : rows) {
        std::string eo;
        for (const auto& [label, n] : row.eo) eo += (eo.empty() ? "" : " ") + label + "=" + std::to_string(n);
        out << kind << ',' << row.models << ',' << row.smooth << ',' << row.prank0 << ',' << row.s4 << ',' << row.n13 << ','
            << row.n14 << ',' << row.v0 << ",\"" << eo << "\"\n";
    }
}

// ---------------------------------------------------------------- isogeny classes

std::vector<IsogenyClassReport> group_isogeny_classes(const std::vector<CensusRecord>& records) {
    std::map<std::string, IsogenyClassReport> by_poly;
    for (const auto& r : records) {
        if (!r.smooth) continue;
        const std::string key = int_to_string(r.weil->q()) + ":" + r.weil->poly().to_string();
        auto it = by_poly.find(key);
        if (it == by_poly.end()) it = by_poly.emplace(key, IsogenyClassReport{*r.weil, {}, {}, std::nullopt, published_abelian_count(*r.weil)}).first;
        it->second.members.push_back(r.id);
    }
    std::vector<IsogenyClassReport> out;
    for (auto& [k, v] : by_poly) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(), [](const IsogenyClassReport& a, const IsogenyClassReport& b) {
        return a.weil.poly() < b.weil.poly();
    });
    return out;
}

zeta::WeilPolynomial class_h() { return zeta::WeilPolynomial(IntPoly({16, 16, 8, 0, -4, 0, 2, 2, 1}), 2); }
zeta::WeilPolynomial class_h_prime() { return zeta::WeilPolynomial(IntPoly({16, -16, 8, 0, -4, 0, 2, -2, 1}), 2); }

std::optional<zeta::Rational> published_abelian_count(const zeta::WeilPolynomial& w) {
    if (w == class_h() || w == class_h_prime()) return zeta::Rational(7, 4);
    return std::nullopt;
}

Census::Census(std::vector<CensusRecord> records) : records_(std::move(records)) {
    for (size_t i = 0; i < records_.size(); ++i)
        if (!index_.emplace(records_[i].id, i).second) throw ConsistencyError("duplicate record id " + records_[i].id);
}

const CensusRecord* Census::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &records_[it->second];
}

const IsogenyClassReport& Census::stack_count(const zeta::WeilPolynomial& w) {
    const std::string key = int_to_string(w.q()) + ":" + w.poly().to_string();
    if (auto it = classes_.find(key); it != classes_.end()) return it->second;

    IsogenyClassReport rep{w, {}, {}, std::nullopt, published_abelian_count(w)};
    for (const auto& r : records_)
        if (r.smooth && *r.weil == w) rep.members.push_back(r.id);

    std::set<std::string> assigned;
    zeta::Rational total(0);
    for (const auto& id : rep.members) {
        if (assigned.count(id)) continue;
        const CurveModel c = curves::parse_curve(id);
        const auto orbit = curves::f2_orbit(c);
        IsoClass iso;
        iso.representative = orbit.front();
        for (const auto& m : rep.members)
            if (std::binary_search(orbit.begin(), orbit.end(), m)) {
                iso.members.push_back(m);
                assigned.insert(m);
            }
        iso.aut = curves::aut_order_f2(c);
        iso.jacobian_aut = curves::jacobian_aut_order(c, iso.aut);
        if (orbit.size() * iso.aut != curves::f2_group_order(curves::kind_of(c)))
            throw ConsistencyError(id + ": orbit size times automorphism count differs from the group order");
        total += zeta::Rational(1, static_cast<long long>(iso.jacobian_aut));
        rep.iso_classes.push_back(std::move(iso));
    }
    rep.stack_count = total;
    return classes_.emplace(key, std::move(rep)).first->second;
}

const IsogenyClassReport* Census::grouped(const zeta::WeilPolynomial& w) const {
    auto it = classes_.find(int_to_string(w.q()) + ":" + w.poly().to_string());
    return it == classes_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------- checks

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropositionCheck& c) { return c.passed; });
}

VerifyReport verify_propositions(const std::vector<CensusRecord>& records) {
    PropositionCheck c1{"no smooth curve on the non-singular quadric meets the [4,3] criterion", true, {}, ""};
    PropositionCheck c2{"every smooth 2-rank-0 hyperelliptic curve has type [4,2]", true, {}, ""};
    PropositionCheck c3{"no smooth curve has a-number >= 3", true, {}, ""};
    PropositionCheck c4{"supersingular Weil polynomials within the published class total", true, {}, ""};
    const eo::YoungType t42{{4, 2}};
    std::set<std::string> ss;
    size_t n1 = 0, n2 = 0, n3 = 0;
    for (const auto& r : records) {
        if (!r.smooth) continue;
        ++n3;
        if (r.kind == ModelKind::NsQuadric && r.type43) {
            ++n1;
            if (*r.type43) c1.failing_ids.push_back(r.id);
        }
        if (r.kind == ModelKind::Hyperelliptic && r.stratum.p_rank == 0) {
            ++n2;
            if (!r.eo || r.eo->candidates != std::vector<eo::YoungType>{t42}) c2.failing_ids.push_back(r.id);
        }
        if (r.a_number && *r.a_number >= 3) c3.failing_ids.push_back(r.id);
        if (r.stratum.stratum == zeta::Stratum::S4) ss.insert(r.weil->poly().to_string());
    }
    c1.passed = c1.failing_ids.empty();
    c1.detail = std::to_string(n1) + " smooth 2-rank-0 records tested";
    c2.passed = c2.failing_ids.empty();
    c2.detail = std::to_string(n2) + " smooth 2-rank-0 hyperelliptic records tested";
    c3.passed = c3.failing_ids.empty();
    c3.detail = std::to_string(n3) + " smooth records tested";
    c4.passed = ss.size() <= kSupersingularClassBound;
    c4.detail = "observed " + std::to_string(ss.size()) + " <= " + std::to_string(kSupersingularClassBound);
    if (!c4.passed) c4.detail = "observed " + std::to_string(ss.size()) + " > " + std::to_string(kSupersingularClassBound);

    VerifyReport rep;
    rep.checks = {c1, c2, c3, c4};
    rep.supersingular_classes = ss.size();
    return rep;
}

std::string discrepancy_report(const Census& census, const zeta::WeilPolynomial& w) {
    const IsogenyClassReport* rep = census.grouped(w);
    if (!rep || !rep->stack_count) throw StateError("class h not yet grouped");
    if (!rep->published_constant) throw DomainError("no published abelian-side count for this class");
    const std::string ours = zeta::to_string(*rep->stack_count), theirs = zeta::to_string(*rep->published_constant);
    std::string out = "class: " + w.poly().pretty() + "\n";
    out += "curves up to F2-isomorphism: " + std::to_string(rep->iso_classes.size()) + "\n";
    out += "Jacobian-side stack count: " + ours + "\n";
    out += "abelian-side count (published constant): " + theirs + "\n";
    if (*rep->stack_count != *rep->published_constant)
        out += ours + " ≠ " + theirs + ": supersingular locus not contained in Torelli locus (evidence)\n";
    else
        out += ours + " = " + theirs + ": no discrepancy\n";
    return out;
}

}  // namespace g4::census
