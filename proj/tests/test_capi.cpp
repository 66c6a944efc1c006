// Exercises the shared library through its C header only, plus the command-line tool.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "genus4/genus4.h"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Takes ownership of a returned string.
std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    g4_string_free(s);
    return out;
}

struct Curve {
    g4_curve* c = nullptr;
    explicit Curve(const char* text) { REQUIRE(g4_curve_parse(text, &c) == G4_OK); }
    ~Curve() { g4_curve_free(c); }
};

json curve_json(g4_status (*fn)(const g4_curve*, char**), const char* text) {
    Curve c(text);
    char* out = nullptr;
    REQUIRE(fn(c.c, &out) == G4_OK);
    return json::parse(take(out));
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("genus4_capi_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    const auto out_file = scratch_dir() / "cli_stdout.txt";
    const std::string cmd = std::string("'") + G4_CLI_PATH + "' " + args + " > '" + out_file.string() + "' 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("status names and version") {
    CHECK(std::string(g4_version()) == "1.0.0");
    CHECK(std::string(g4_status_name(G4_OK)) == "ok");
    CHECK(std::string(g4_status_name(G4_ERR_PARSE)) == "parse error");
    CHECK(std::string(g4_status_name(G4_ERR_STATE)) == "state error");
    CHECK(G4_ERR_INTERNAL == 7);
}

TEST_CASE("curve handles") {
    g4_curve* c = nullptr;
    REQUIRE(g4_curve_parse("ns;c=0x1d0c", &c) == G4_OK);
    char* enc = nullptr;
    REQUIRE(g4_curve_encode(c, &enc) == G4_OK);
    CHECK(take(enc) == "ns;c=0x1d0c");

    int smooth = -1;
    char* witness = nullptr;
    REQUIRE(g4_curve_is_smooth(c, &smooth, &witness) == G4_OK);
    CHECK(smooth == 1);
    CHECK(witness == nullptr);

    uint64_t n = 0;
    const uint64_t expected[] = {7, 9, 13, 9};
    for (unsigned i = 1; i <= 4; ++i) {
        REQUIRE(g4_curve_count_points(c, i, &n) == G4_OK);
        CHECK(n == expected[i - 1]);
    }
    CHECK(g4_curve_count_points(c, 0, &n) == G4_ERR_INVALID_ARGUMENT);
    CHECK(g4_curve_count_points(c, 40, &n) == G4_ERR_DOMAIN);
    g4_curve_free(c);

    REQUIRE(g4_curve_parse("ns;c=0x0003", &c) == G4_OK);
    REQUIRE(g4_curve_is_smooth(c, &smooth, &witness) == G4_OK);
    CHECK(smooth == 0);
    if (witness) CHECK(take(witness).rfind("P3(", 0) == 0);
    g4_curve_free(c);
    g4_curve_free(nullptr);
}

TEST_CASE("errors carry a status and a message") {
    g4_curve* c = nullptr;
    CHECK(g4_curve_parse("ns;c=zz", &c) == G4_ERR_PARSE);
    CHECK(c == nullptr);
    CHECK(std::string(g4_last_error()).find("zz") != std::string::npos);
    CHECK(g4_curve_parse("hyp;h=0x00;f=0x220", &c) == G4_ERR_DOMAIN);
    CHECK(g4_curve_parse(nullptr, &c) == G4_ERR_INVALID_ARGUMENT);

    char* out = nullptr;
    CHECK(g4_zeta_json("100,9,13,9", "2", &out) == G4_ERR_DOMAIN);
    CHECK(std::string(g4_last_error()).find("not a genus-4 curve count sequence") != std::string::npos);
    CHECK(g4_zeta_json("1,2,3", "2", &out) == G4_ERR_INVALID_ARGUMENT);
    CHECK(g4_dieudonne_json("2,3", 0, &out) == G4_ERR_DOMAIN);
    CHECK(out == nullptr);

    Curve cone("cone;c=0x420c");
    CHECK(g4_curve_hasse_witt_json(cone.c, &out) == G4_ERR_DOMAIN);
    uint64_t aut = 0;
    CHECK(g4_curve_aut_order(cone.c, nullptr, nullptr) == G4_ERR_INVALID_ARGUMENT);
    REQUIRE(g4_curve_aut_order(cone.c, &aut, nullptr) == G4_OK);
    CHECK(aut >= 1);

    g4_census* census = nullptr;
    CHECK(g4_census_load("/nonexistent/records.jsonl", &census) == G4_ERR_IO);
    CHECK(g4_census_run("quartic", 1, &census) == G4_ERR_PARSE);
    CHECK(g4_census_size(nullptr) == 0);
}

TEST_CASE("JSON views of curves and invariants") {
    const auto rec = curve_json(g4_curve_classify_json, "ns;c=0x1d0c");
    CHECK(rec["stratum"] == "S4");
    CHECK(rec["a_number"] == 1);
    CHECK(rec["eo_label"] == "[4]");
    CHECK(rec["weil"] == "16,32,40,40,32,20,10,4,1");

    const auto hw = curve_json(g4_curve_hasse_witt_json, "hyp;h=0x01;f=0x220");
    CHECK(hw["rank"] == 2);
    CHECK(hw["cartier"][1][0] == "F2:0x1");
    CHECK(hw["cartier"][3][1] == "F2:0x1");
    CHECK(hw["type43"] == false);

    char* out = nullptr;
    REQUIRE(g4_zeta_json("5,9,11,25", "2", &out) == G4_OK);
    const auto z = json::parse(take(out));
    CHECK(z["stratum"] == "N14");
    CHECK(z["weil"] == "16,16,16,12,10,6,4,2,1");
    CHECK(z["slopes"][0] == "1/4");

    REQUIRE(g4_dieudonne_json("[4,3,1]", 0, &out) == G4_OK);
    const auto d = json::parse(take(out));
    CHECK(d["g"] == 4);
    CHECK(d["recovered_mu"] == d["mu"]);
    CHECK(d["basis"].size() == 8);

    Curve hyp("hyp;h=0x01;f=0x221");
    uint64_t aut = 0, jac = 0;
    REQUIRE(g4_curve_aut_order(hyp.c, &aut, &jac) == G4_OK);
    CHECK(aut == 4);
    CHECK(jac == 4);
}

TEST_CASE("census through the C interface and the command line") {
    g4_census* census = nullptr;
    REQUIRE(g4_census_run("hyp", 4, &census) == G4_OK);
    CHECK(g4_census_size(census) == 113152);

    char* out = nullptr;
    CHECK(g4_census_discrepancy(census, nullptr, &out) == G4_ERR_STATE);
    REQUIRE(g4_census_stack_count_json(census, nullptr, "2", &out) == G4_OK);
    const auto sc = json::parse(take(out));
    CHECK(sc["stack_count"] == "1/4");
    CHECK(sc["published_abelian_count"] == "7/4");
    CHECK(sc["iso_classes"].size() == 1);
    CHECK(sc["iso_classes"][0]["representative"] == "hyp;h=0x01;f=0x220");
    REQUIRE(g4_census_discrepancy(census, nullptr, &out) == G4_OK);
    CHECK(take(out).find("1/4 ≠ 7/4") != std::string::npos);

    int ok = 0;
    REQUIRE(g4_census_verify_json(census, &ok, &out) == G4_OK);
    CHECK(ok == 1);
    CHECK(json::parse(take(out))["checks"].size() == 4);

    const auto records = scratch_dir() / "hyp.jsonl";
    const auto csv = scratch_dir() / "hyp.csv";
    REQUIRE(g4_census_save(census, records.c_str(), csv.c_str()) == G4_OK);
    g4_census_free(census);

    g4_census* loaded = nullptr;
    REQUIRE(g4_census_load(records.c_str(), &loaded) == G4_OK);
    CHECK(g4_census_size(loaded) == 113152);
    const auto resaved = scratch_dir() / "hyp2.jsonl";
    REQUIRE(g4_census_save(loaded, resaved.c_str(), nullptr) == G4_OK);
    CHECK(read_file(records) == read_file(resaved));
    g4_census_free(loaded);

    auto r = cli("verify --records '" + records.string() + "'");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["all_passed"] == true);

    r = cli("stack-count --records '" + records.string() + "' --weil 16,-16,8,0,-4,0,2,-2,1");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["stack_count"] == "1/4");

    r = cli("discrepancy --records '" + records.string() + "'");
    CHECK(r.code == 0);
    CHECK(r.out.find("Jacobian-side stack count: 1/4") != std::string::npos);
}

TEST_CASE("command line exit codes") {
    auto r = cli("classify --curve 'ns;c=0x1d0c'");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["stratum"] == "S4");
    CHECK(cli("zeta --counts 7,9,13,9").code == 0);
    CHECK(cli("dieudonne --mu 4,2").code == 0);
    CHECK(cli("hasse-witt --curve 'ns;c=0x038c'").code == 0);

    CHECK(cli("").code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("classify").code == 2);
    CHECK(cli("classify --curve 'ns;c=zz'").code == 2);
    CHECK(cli("zeta --counts 100,9,13,9").code == 2);
    CHECK(cli("verify --records /nonexistent.jsonl").code == 2);
    CHECK(cli("census --kind quartic --out /dev/null").code == 2);

    // a planted [4,3] flag on a curve of the non-singular quadric must fail verification
    const auto good = scratch_dir() / "ns.jsonl";
    REQUIRE(cli("census --kind ns --workers 4 --out '" + good.string() + "'").code == 0);
    std::istringstream in(read_file(good));
    std::ostringstream planted;
    std::string line;
    bool changed = false;
    while (std::getline(in, line)) {
        if (line.find("\"ns;c=0x1d0c\"") != std::string::npos) {
            const auto pos = line.find("\"type43\":false");
            REQUIRE(pos != std::string::npos);
            line.replace(pos, 14, "\"type43\":true");
            changed = true;
        }
        planted << line << "\n";
    }
    REQUIRE(changed);
    const auto bad = scratch_dir() / "ns_planted.jsonl";
    std::ofstream(bad) << planted.str();
    CHECK(cli("verify --records '" + good.string() + "'").code == 0);
    r = cli("verify --records '" + bad.string() + "'");
    CHECK(r.code == 1);
    const auto rep = json::parse(r.out);
    CHECK(rep["checks"][0]["passed"] == false);
    CHECK(rep["checks"][0]["failing_ids"][0] == "ns;c=0x1d0c");

    fs::remove_all(scratch_dir());
}
