#include "genus4/genus4.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cartier.hpp"
#include "census.hpp"
#include "curves.hpp"
#include "dieudonne.hpp"
#include "errors.hpp"
#include "zeta.hpp"

struct g4_curve {
    g4::curves::CurveModel model;
};

struct g4_census {
    g4::census::Census census;
};

namespace {

using json = nlohmann::json;

thread_local std::string last_error;

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class Fn>
g4_status guarded(Fn&& fn) {
    try {
        fn();
        return G4_OK;
    } catch (const g4::ParseError& e) {
        last_error = e.what();
        return G4_ERR_PARSE;
    } catch (const g4::DomainError& e) {
        last_error = e.what();
        return G4_ERR_DOMAIN;
    } catch (const g4::ConsistencyError& e) {
        last_error = e.what();
        return G4_ERR_CONSISTENCY;
    } catch (const g4::StateError& e) {
        last_error = e.what();
        return G4_ERR_STATE;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return G4_ERR_INVALID_ARGUMENT;
    } catch (const std::out_of_range& e) {
        last_error = e.what();
        return G4_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        last_error = e.what();
        return G4_ERR_DOMAIN;
    } catch (const std::ios_base::failure& e) {
        last_error = e.what();
        return G4_ERR_IO;
    } catch (const std::exception& e) {
        last_error = e.what();
        return G4_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return G4_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (!p) throw std::invalid_argument(std::string(what) + " must not be null");
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        part.erase(0, part.find_first_not_of(" \t"));
        part.erase(part.find_last_not_of(" \t") + 1);
        out.push_back(part);
    }
    return out;
}

json weil_json(const g4::zeta::WeilPolynomial& w) {
    const auto np = g4::zeta::newton_polygon(w);
    const auto st = g4::zeta::classify_stratum(np);
    json slopes = json::array();
    for (const auto& s : np.slopes) slopes.push_back(g4::zeta::to_string(s));
    return {{"q", g4::int_to_string(w.q())},
            {"weil", w.poly().to_string()},
            {"weil_pretty", w.poly().pretty()},
            {"l_polynomial", w.l_polynomial().to_string()},
            {"slopes", slopes},
            {"stratum", g4::zeta::to_string(st.stratum)},
            {"p_rank", st.p_rank},
            {"supersingular", g4::zeta::is_supersingular(w)}};
}

json matrix_json(const g4::gf::FieldSpec& f, const g4::cartier::Matrix4& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (uint32_t v : r) row.push_back(g4::gf::to_string(g4::gf::FieldElement(f, v)));
        rows.push_back(row);
    }
    return rows;
}

json fv_json(const g4::eo::Bt1Module& m, bool use_F) {
    json rows = json::array();
    const auto& maps = use_F ? m.F : m.V;
    for (int j = 0; j < m.dim(); ++j) {
        std::string img;
        for (int b = 0; b < m.dim(); ++b)
            if (maps[j] >> b & 1u) img += (img.empty() ? "" : "+") + m.labels[b];
        rows.push_back(m.labels[j] + " -> " + (img.empty() ? "0" : img));
    }
    return rows;
}

g4::zeta::WeilPolynomial weil_arg(const char* weil, const char* q) {
    if (!weil) return g4::census::class_h();
    return g4::zeta::WeilPolynomial(g4::IntPoly::parse(weil), q ? g4::parse_int(q) : 2);
}

}  // namespace

extern "C" {

const char* g4_version(void) { return "1.0.0"; }

const char* g4_last_error(void) { return last_error.c_str(); }

const char* g4_status_name(g4_status s) {
    switch (s) {
        case G4_OK: return "ok";
        case G4_ERR_PARSE: return "parse error";
        case G4_ERR_DOMAIN: return "domain error";
        case G4_ERR_CONSISTENCY: return "consistency error";
        case G4_ERR_STATE: return "state error";
        case G4_ERR_INVALID_ARGUMENT: return "invalid argument";
        case G4_ERR_IO: return "i/o error";
        case G4_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void g4_string_free(char* s) { std::free(s); }

g4_status g4_curve_parse(const char* text, g4_curve** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new g4_curve{g4::curves::parse_curve(text)};
    });
}

void g4_curve_free(g4_curve* c) { delete c; }

g4_status g4_curve_encode(const g4_curve* c, char** out) {
    return guarded([&] {
        require(c, "curve");
        require(out, "out");
        *out = dup(g4::curves::encode(c->model));
    });
}

g4_status g4_curve_is_smooth(const g4_curve* c, int* smooth, char** witness) {
    return guarded([&] {
        require(c, "curve");
        require(smooth, "smooth");
        const auto r = g4::curves::is_smooth(c->model, witness != nullptr);
        *smooth = r.smooth ? 1 : 0;
        if (witness) *witness = r.witness ? dup(r.witness->to_string()) : nullptr;
    });
}

g4_status g4_curve_count_points(const g4_curve* c, unsigned n, uint64_t* out) {
    return guarded([&] {
        require(c, "curve");
        require(out, "out");
        *out = g4::curves::count_points(c->model, n);
    });
}

g4_status g4_curve_classify_json(const g4_curve* c, char** out) {
    return guarded([&] {
        require(c, "curve");
        require(out, "out");
        const auto rec = g4::census::classify(c->model);
        json j = json::parse(g4::census::to_json_line(rec));
        if (rec.eo) j["eo_label"] = rec.eo->label();
        if (!rec.smooth) {
            const auto s = g4::curves::is_smooth(c->model, true);
            j["witness"] = s.witness ? json(s.witness->to_string()) : json(nullptr);
        }
        *out = dup(j.dump());
    });
}

g4_status g4_curve_hasse_witt_json(const g4_curve* c, char** out) {
    return guarded([&] {
        require(c, "curve");
        require(out, "out");
        using namespace g4::curves;
        std::optional<g4::cartier::SemilinearOperator> op;
        if (const auto* h = std::get_if<HyperellipticCurve>(&c->model)) {
            op = g4::cartier::cartier_hyperelliptic(h->h(), h->f());
        } else {
            const auto& q = std::get<QuadricCubicCurve>(c->model);
            if (q.kind() == QuadricKind::Cone)
                throw g4::DomainError("no Hasse-Witt formula for cone models; use classify (a = 2 at 2-rank 0)");
            op = g4::cartier::cartier_from_hasse_witt(g4::cartier::hasse_witt_ns(affine_model_ns(q)));
        }
        const auto hw = g4::cartier::hasse_witt_from_cartier(*op);
        const int tr = g4::cartier::two_rank(*op);
        json j{{"curve", encode(c->model)},
               {"field", op->field().tag()},
               {"hasse_witt", matrix_json(op->field(), hw.m)},
               {"cartier", matrix_json(op->field(), op->matrix())},
               {"rank", g4::cartier::matrix_rank(op->field(), op->matrix())},
               {"a_number", g4::cartier::a_number(*op)},
               {"two_rank", tr},
               {"type43", tr == 0 ? json(g4::cartier::is_type43_candidate(*op)) : json(nullptr)}};
        *out = dup(j.dump());
    });
}

g4_status g4_curve_aut_order(const g4_curve* c, uint64_t* aut, uint64_t* jacobian_aut) {
    return guarded([&] {
        require(c, "curve");
        require(aut, "aut");
        *aut = g4::curves::aut_order_f2(c->model);
        if (jacobian_aut) *jacobian_aut = g4::curves::jacobian_aut_order(c->model, *aut);
    });
}

g4_status g4_zeta_json(const char* counts, const char* q, char** out) {
    return guarded([&] {
        require(counts, "counts");
        require(q, "q");
        require(out, "out");
        std::vector<g4::Int> n;
        for (const auto& s : split_csv(counts)) n.push_back(g4::parse_int(s));
        const auto w = g4::zeta::weil_from_counts(n, g4::parse_int(q));
        *out = dup(weil_json(w).dump());
    });
}

g4_status g4_dieudonne_json(const char* mu_text, unsigned g, char** out) {
    return guarded([&] {
        require(mu_text, "mu");
        require(out, "out");
        using namespace g4::eo;
        const YoungType mu = parse_young(mu_text);
        const int gg = g ? static_cast<int>(g) : (mu.mu.empty() ? 0 : mu.mu.front());
        if (gg < 1 || !is_valid(mu, gg)) throw g4::DomainError("not a Young type for g = " + std::to_string(gg));
        const FinalType nu = young_to_final(mu, gg);
        const Bt1Module m = standard_module(nu);
        json filt = json::array();
        for (const auto& e : canonical_filtration(m))
            filt.push_back({{"space", describe(m, e.space)}, {"dim", e.dim}, {"v_dim", e.v_dim}});
        const FinalType back = final_type_of_module(m);
        json j{{"g", gg},
               {"mu", to_string(mu)},
               {"nu", to_string(nu)},
               {"basis", m.labels},
               {"F", fv_json(m, true)},
               {"V", fv_json(m, false)},
               {"filtration", filt},
               {"recovered_nu", to_string(back)},
               {"recovered_mu", to_string(final_to_young(back))},
               {"codimension", codimension(mu)}};
        *out = dup(j.dump());
    });
}

g4_status g4_census_run(const char* kinds, unsigned workers, g4_census** out) {
    return guarded([&] {
        require(kinds, "kinds");
        require(out, "out");
        std::vector<g4::curves::ModelKind> ks;
        for (const auto& k : split_csv(kinds)) ks.push_back(g4::curves::model_kind_from_string(k));
        if (ks.empty()) throw std::invalid_argument("no model kinds given");
        g4::census::CensusOptions opt;
        opt.workers = workers ? workers : 1;
        *out = new g4_census{g4::census::Census(g4::census::run_census(ks, opt))};
    });
}

g4_status g4_census_load(const char* path, g4_census** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        std::ifstream in(path);
        if (!in) throw std::ios_base::failure(std::string("cannot open ") + path);
        *out = new g4_census{g4::census::Census(g4::census::read_jsonl(in))};
    });
}

g4_status g4_census_save(const g4_census* c, const char* path, const char* csv_path) {
    return guarded([&] {
        require(c, "census");
        require(path, "path");
        std::ofstream o(path);
        if (!o) throw std::ios_base::failure(std::string("cannot write ") + path);
        g4::census::write_jsonl(o, c->census.records());
        if (csv_path) {
            std::ofstream s(csv_path);
            if (!s) throw std::ios_base::failure(std::string("cannot write ") + csv_path);
            g4::census::write_csv_summary(s, c->census.records());
        }
    });
}

size_t g4_census_size(const g4_census* c) { return c ? c->census.records().size() : 0; }

void g4_census_free(g4_census* c) { delete c; }

g4_status g4_census_stack_count_json(g4_census* c, const char* weil, const char* q, char** out) {
    return guarded([&] {
        require(c, "census");
        require(out, "out");
        const auto& rep = c->census.stack_count(weil_arg(weil, q));
        json classes = json::array();
        for (const auto& iso : rep.iso_classes)
            classes.push_back({{"representative", iso.representative},
                               {"members", iso.members},
                               {"aut", std::to_string(iso.aut)},
                               {"jacobian_aut", std::to_string(iso.jacobian_aut)}});
        json j = weil_json(rep.weil);
        j["members"] = rep.members;
        j["iso_classes"] = classes;
        j["stack_count"] = g4::zeta::to_string(*rep.stack_count);
        j["published_abelian_count"] = rep.published_constant ? json(g4::zeta::to_string(*rep.published_constant)) : json(nullptr);
        *out = dup(j.dump());
    });
}

g4_status g4_census_verify_json(const g4_census* c, int* all_passed, char** out) {
    return guarded([&] {
        require(c, "census");
        require(all_passed, "all_passed");
        const auto rep = g4::census::verify_propositions(c->census.records());
        *all_passed = rep.all_passed() ? 1 : 0;
        if (out) {
            json checks = json::array();
            for (const auto& ch : rep.checks)
                checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}, {"failing_ids", ch.failing_ids}});
            json j{{"all_passed", rep.all_passed()},
                   {"records", c->census.records().size()},
                   {"supersingular_classes", rep.supersingular_classes},
                   {"checks", checks}};
            *out = dup(j.dump());
        }
    });
}

g4_status g4_census_discrepancy(const g4_census* c, const char* weil, char** out) {
    return guarded([&] {
        require(c, "census");
        require(out, "out");
        *out = dup(g4::census::discrepancy_report(c->census, weil_arg(weil, "2")));
    });
}

}  // extern "C"
