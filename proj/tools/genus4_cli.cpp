// genus4: command-line front end over the C interface.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "genus4/genus4.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

int fail(g4_status s) {
    std::cerr << "genus4: " << g4_status_name(s) << ": " << g4_last_error() << "\n";
    switch (s) {
        case G4_ERR_PARSE:
        case G4_ERR_DOMAIN:
        case G4_ERR_INVALID_ARGUMENT:
        case G4_ERR_IO:
        case G4_ERR_STATE:
            return kExitUsage;
        default:
            return kExitAssertion;
    }
}

int print_owned(char* s) {
    std::cout << s << "\n";
    g4_string_free(s);
    return kExitOk;
}

struct CurveHandle {
    g4_curve* c = nullptr;
    ~CurveHandle() { g4_curve_free(c); }
};

struct CensusHandle {
    g4_census* c = nullptr;
    ~CensusHandle() { g4_census_free(c); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"genus-4 curves in characteristic 2: zeta data, Cartier operator, Ekedahl-Oort types, F2 census"};
    app.require_subcommand(1);
    app.set_version_flag("--version", g4_version());

    std::vector<std::string> kinds;
    std::string out_path, csv_path, curve_text, counts, q = "2", mu, weil, records;
    unsigned workers = 1, g = 0;

    auto* census = app.add_subcommand("census", "enumerate F2 models and write JSON-lines records");
    census->add_option("--kind", kinds, "ns, cone or hyp (repeatable; default all three)")
        ->check(CLI::IsMember({"ns", "cone", "hyp"}));
    census->add_option("--out", out_path, "records file (JSON lines)")->required();
    census->add_option("--csv", csv_path, "optional CSV summary");
    census->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 256u));

    auto* classify = app.add_subcommand("classify", "full invariant record of one curve");
    classify->add_option("--curve", curve_text, "curve encoding, e.g. ns;c=0x1d0c")->required();

    auto* zeta = app.add_subcommand("zeta", "Weil polynomial and Newton data from N_1..N_4");
    zeta->add_option("--counts", counts, "N_1,N_2,N_3,N_4")->required();
    zeta->add_option("--q", q, "base field size");

    auto* hw = app.add_subcommand("hasse-witt", "Hasse-Witt and Cartier matrices of one curve");
    hw->add_option("--curve", curve_text, "curve encoding")->required();

    auto* dd = app.add_subcommand("dieudonne", "standard Dieudonne module of a Young type");
    dd->add_option("--mu", mu, "Young type, e.g. 4,3,1")->required();
    dd->add_option("--g", g, "dimension (default mu_1)");

    auto* sc = app.add_subcommand("stack-count", "sum of 1/|Aut(J)| over an isogeny class");
    sc->add_option("--weil", weil, "coefficients, constant term first (default: class h)");
    sc->add_option("--q", q, "base field size");
    sc->add_option("--records", records, "records file")->required();

    auto* verify = app.add_subcommand("verify", "check the proposition assertions over a census");
    verify->add_option("--records", records, "records file")->required();

    auto* disc = app.add_subcommand("discrepancy", "Jacobian-side count beside the published abelian-side count");
    disc->add_option("--records", records, "records file")->required();
    disc->add_option("--weil", weil, "class coefficients (default: class h)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    g4_status s = G4_OK;
    char* text = nullptr;

    if (*census) {
        std::string joined;
        if (kinds.empty()) kinds = {"ns", "cone", "hyp"};
        for (const auto& k : kinds) joined += (joined.empty() ? "" : ",") + k;
        CensusHandle h;
        if ((s = g4_census_run(joined.c_str(), workers, &h.c)) != G4_OK) return fail(s);
        if ((s = g4_census_save(h.c, out_path.c_str(), csv_path.empty() ? nullptr : csv_path.c_str())) != G4_OK) return fail(s);
        std::cerr << "wrote " << g4_census_size(h.c) << " records to " << out_path << "\n";
        return kExitOk;
    }
    if (*classify || *hw) {
        CurveHandle h;
        if ((s = g4_curve_parse(curve_text.c_str(), &h.c)) != G4_OK) return fail(s);
        s = *classify ? g4_curve_classify_json(h.c, &text) : g4_curve_hasse_witt_json(h.c, &text);
        return s == G4_OK ? print_owned(text) : fail(s);
    }
    if (*zeta) {
        s = g4_zeta_json(counts.c_str(), q.c_str(), &text);
        return s == G4_OK ? print_owned(text) : fail(s);
    }
    if (*dd) {
        s = g4_dieudonne_json(mu.c_str(), g, &text);
        return s == G4_OK ? print_owned(text) : fail(s);
    }

    CensusHandle h;
    if ((s = g4_census_load(records.c_str(), &h.c)) != G4_OK) return fail(s);
    const char* w = weil.empty() ? nullptr : weil.c_str();
    if (*sc) {
        s = g4_census_stack_count_json(h.c, w, q.c_str(), &text);
        return s == G4_OK ? print_owned(text) : fail(s);
    }
    if (*verify) {
        int ok = 0;
        if ((s = g4_census_verify_json(h.c, &ok, &text)) != G4_OK) return fail(s);
        print_owned(text);
        return ok ? kExitOk : kExitAssertion;
    }
    // discrepancy: group the class first, then compare
    if ((s = g4_census_stack_count_json(h.c, w, "2", &text)) != G4_OK) return fail(s);
    g4_string_free(text);
    if ((s = g4_census_discrepancy(h.c, w, &text)) != G4_OK) return fail(s);
    std::cout << text;
    g4_string_free(text);
    return kExitOk;
}
