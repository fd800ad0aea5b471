#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "hopfforge/catalog.hpp"
#include "hopfforge/json_io.hpp"
#include "hopfforge/ratfunc.hpp"
#include "hopfforge/transport.hpp"
#include "hopfforge/verify.hpp"

using namespace hopfforge;

// The binary under test is spawned through the shell; stdout and stderr are
// captured into scratch files so both streams can be asserted on.

namespace {

namespace fs = std::filesystem;

const fs::path& scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::current_path() / "cli_scratch";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string scratch(const std::string& name) { return (scratch_dir() / name).string(); }

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    std::string out_path = scratch("run_" + std::to_string(counter) + ".out");
    std::string err_path = scratch("run_" + std::to_string(counter) + ".err");
    ++counter;
    std::string cmd = env + (env.empty() ? "" : " ") + HOPFFORGE_CLI_PATH + " " + args + " > " +
                      out_path + " 2> " + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_text_file(out_path);
    r.err = read_text_file(err_path);
    return r;
}

nlohmann::json report_of(const RunResult& r) { return nlohmann::json::parse(r.out); }

std::string fixture(const std::string& name) {
    return std::string(HOPFFORGE_FIXTURE_DIR) + "/" + name;
}

// diagonal matrix file with the given rank-r leading block, written in the
// interchange matrix format
std::string write_projector(const std::string& name, std::size_t n, std::size_t r, unsigned m) {
    CycMatrix p(n, n, CycScalar::zero(m));
    for (std::size_t i = 0; i < r; ++i) p.at(i, i) = CycScalar::one(m);
    std::string path = scratch(name);
    write_text_file(path, pretty(matrix_to_json(p, m)));
    return path;
}

std::string write_identity(const std::string& name, std::size_t n, unsigned m) {
    return write_projector(name, n, n, m);
}

} // namespace

TEST_CASE("every catalog entry round-trips through get and verify") {
    for (const auto& e : catalog_entries()) {
        INFO("entry ", e.id);
        std::string path = scratch(e.id + ".json");
        RunResult got = run_cli("catalog get " + e.id + " -o " + path);
        CHECK(got.code == 0);
        RunResult ver = run_cli("verify " + path);
        CHECK(ver.code == 0);
        CHECK(report_of(ver)["result"]["pass"] == true);
    }
}

TEST_CASE("verify separates axiom failures from file problems") {
    RunResult ok = run_cli("verify " + fixture("T_4.json"));
    CHECK(ok.code == 0);
    auto rep = report_of(ok);
    CHECK(rep["exit"] == 0);
    CHECK(rep["result"]["antipode_present"] == true);
    CHECK(rep["result"]["families"]["4a"]["pass"] == true);
    CHECK(rep["inputs"][0]["digest"].get<std::string>().size() == 16);

    // tamper with one structure constant: a mathematical verdict, exit 1
    auto doc = nlohmann::json::parse(read_text_file(fixture("KZ_4.json")));
    doc["mul"][1][3] = "7";
    std::string bad = scratch("kz4_bad.json");
    write_text_file(bad, doc.dump());
    RunResult fail = run_cli("verify " + bad);
    CHECK(fail.code == 1);
    auto frep = report_of(fail);
    CHECK(frep["result"]["pass"] == false);
    CHECK(frep["result"]["failures"].size() > 0);
    CHECK(frep["result"]["failures"][0]["index"].is_array());

    // truncated JSON: a tool error, exit 2, still valid JSON on stdout
    std::string trunc = scratch("trunc.json");
    write_text_file(trunc, "{\"dim\": 2, \"conduc");
    RunResult parse = run_cli("verify " + trunc);
    CHECK(parse.code == 2);
    CHECK(report_of(parse)["exit"] == 2);

    RunResult missing = run_cli("verify " + scratch("does_not_exist.json"));
    CHECK(missing.code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("degenerate " + fixture("T_4.json")).code == 2);     // missing --phi
    CHECK(run_cli("graded " + fixture("T_4.json")).code == 2);         // missing --degrees
    CHECK(run_cli("catalog get NO_SUCH_ENTRY").code == 2);
    CHECK(run_cli("degenerate " + fixture("T_4.json") + " --phi " + fixture("T_4.json") +
                  " --mode sideways")
              .code == 2);
    RunResult help = run_cli("--help");
    CHECK(help.code == 0);
}

TEST_CASE("summary prose goes to stderr and never to stdout") {
    RunResult quiet = run_cli("verify " + fixture("KS_3.json"));
    RunResult loud = run_cli("--summary verify " + fixture("KS_3.json"));
    CHECK(quiet.code == 0);
    CHECK(loud.code == 0);
    CHECK(quiet.err.empty());
    CHECK_FALSE(loud.err.empty());
    // same JSON apart from the echoed argument vector
    auto a = report_of(quiet), b = report_of(loud);
    CHECK(a["result"] == b["result"]);
    CHECK(a["exit"] == b["exit"]);
}

TEST_CASE("dual writes a verifying structure with the starred name") {
    std::string out = scratch("ks3_star.json");
    RunResult du = run_cli("dual " + fixture("KS_3.json") + " " + out);
    CHECK(du.code == 0);
    RunResult ver = run_cli("verify " + out);
    CHECK(ver.code == 0);
    auto doc = nlohmann::json::parse(read_text_file(out));
    CHECK(doc["meta"]["name"] == "KS_3^*");
    // and the written structure equals the catalog's own dual entry
    CHECK(hopf_from_json(doc).same_constants(catalog_get("KS_3_star")));
}

TEST_CASE("fingerprint reports the invariants and is byte-stable") {
    RunResult a = run_cli("fingerprint " + fixture("T_9.json"));
    RunResult b = run_cli("fingerprint " + fixture("T_9.json"));
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto fp = report_of(a)["result"];
    CHECK(fp["dim"] == 9);
    CHECK(fp["commutative"] == false);
    CHECK(fp["grouplike_count"] == 3);
    CHECK(fp["note"].get<std::string>().find("prove nothing") != std::string::npos);

    RunResult rb = run_cli("fingerprint " + fixture("T_4.json") + " --random-basis 4");
    CHECK(rb.code == 0);
    auto j = report_of(rb)["result"]["random_basis"];
    CHECK(j["trials"] == 4);
    CHECK(j["invariant"] == true);

    // the seed flag is read from the environment and echoed in the report
    RunResult seeded = run_cli("fingerprint " + fixture("T_4.json") + " --random-basis 2",
                               "HOPFFORGE_SEED=99");
    CHECK(seeded.code == 0);
    CHECK(report_of(seeded)["result"]["random_basis"]["seed"] == 99);
}

TEST_CASE("degenerate triages verdicts by exit code") {
    std::string proj = write_projector("t4_proj.json", 4, 2, 2);
    RunResult ok = run_cli("degenerate " + fixture("T_4.json") + " --phi " + proj +
                           " --mode both");
    CHECK(ok.code == 0);
    auto rep = report_of(ok)["result"];
    CHECK(rep["mode"] == "both");
    CHECK(rep["mul_condition_holds"] == true);
    CHECK(rep["comul_condition_holds"] == true);
    CHECK(rep["oracle_agreement"] == true);
    CHECK(rep.contains("limit"));
    CHECK(rep["limit"]["dim"] == 4);

    std::string zero = write_projector("t4_zero.json", 4, 0, 2);
    for (const char* mode : {"closed", "symbolic", "both"}) {
        INFO("mode ", mode);
        RunResult no = run_cli("degenerate " + fixture("T_4.json") + " --phi " + zero +
                               " --mode " + mode);
        CHECK(no.code == 1);
        auto nrep = report_of(no)["result"];
        CHECK(nrep["comul_condition_holds"] == false);
        CHECK(nrep["comul_violation"]["index"] == nlohmann::json({1, 1, 1}));
        CHECK_FALSE(nrep.contains("limit"));
    }

    // wrong shape and wrong conductor are tool errors, not verdicts
    std::string small = write_projector("proj2.json", 2, 1, 2);
    CHECK(run_cli("degenerate " + fixture("T_4.json") + " --phi " + small).code == 2);
    std::string wrong_m = write_projector("proj_c1.json", 4, 2, 1);
    CHECK(run_cli("degenerate " + fixture("T_4.json") + " --phi " + wrong_m).code == 2);
}

TEST_CASE("degenerate reports are identical across repeat runs") {
    std::string proj = write_projector("a1_proj.json", 12, 6, 1);
    RunResult a = run_cli("degenerate " + fixture("A_1.json") + " --phi " + proj);
    RunResult b = run_cli("degenerate " + fixture("A_1.json") + " --phi " + proj);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("graded command accepts filtrations and rejects the rest") {
    RunResult fixed = run_cli("graded " + fixture("T_4.json") + " --degrees 0,0,1,1");
    CHECK(fixed.code == 0);
    auto rep = report_of(fixed)["result"];
    CHECK(rep["degrees"] == nlohmann::json({0, 0, 1, 1}));
    CHECK(rep.contains("limit"));

    RunResult viol = run_cli("graded " + fixture("KZ_4.json") + " --degrees 0,1,0,0");
    CHECK(viol.code == 1);
    CHECK(report_of(viol)["result"]["comul_condition_holds"] == false);

    CHECK(run_cli("graded " + fixture("KZ_4.json") + " --degrees 0,1").code == 2);
    CHECK(run_cli("graded " + fixture("KZ_4.json") + " --degrees 1,0,0,0").code == 2);
}

TEST_CASE("family-limit evaluates, rejects poles, and rejects non-families") {
    std::string fam = scratch("x2dim8_family.json");
    write_text_file(fam, pretty(family_to_json(x2_generic(4))));
    RunResult lim = run_cli("family-limit " + fam);
    CHECK(lim.code == 0);
    auto rep = report_of(lim)["result"];
    CHECK(rep["verdict"] == "limit exists at t = 0");
    HopfData L = hopf_from_json(rep["limit"]);
    CHECK(L.same_constants(x2_point(4, Rational(0))));

    // alpha = 1/t satisfies every identity over Q(t) but blows up at 0
    std::string pole = scratch("x2dim8_pole.json");
    RatFunc alpha = RatFunc::one(1) / RatFunc::t(1);
    write_text_file(pole, pretty(family_to_json(x2_structure<RatFunc>(4, alpha))));
    RunResult p = run_cli("family-limit " + pole);
    CHECK(p.code == 1);
    CHECK(report_of(p)["result"]["pole_entry"] == "mul[5,5,1]");

    // tampering an entry breaks the identities over Q(t): rejected outright
    auto doc = nlohmann::json::parse(read_text_file(fam));
    doc["mul"][0][3] = "1 + t";
    std::string broken = scratch("x2dim8_broken.json");
    write_text_file(broken, doc.dump());
    RunResult rej = run_cli("family-limit " + broken);
    CHECK(rej.code == 1);
    CHECK(report_of(rej)["result"]["verdict"].get<std::string>().find("family rejected") == 0);
}

TEST_CASE("isocheck validates a supplied map and nothing more") {
    std::string id2 = write_identity("id2c2.json", 4, 2);
    RunResult self = run_cli("isocheck " + id2 + " " + fixture("T_4.json") + " " +
                             fixture("T_4.json"));
    CHECK(self.code == 0);
    CHECK(report_of(self)["result"]["isomorphic"] == true);

    // a genuine non-identity witness: the double dual against the original
    HopfData H = catalog_get("KZ_4");
    auto d1 = dual(H);
    auto d2 = dual(d1.data);
    std::string dd = scratch("kz4_dd.json");
    write_text_file(dd, pretty(hopf_to_json(d2.data)));
    std::string orig = scratch("kz4_orig.json");
    write_text_file(orig, pretty(hopf_to_json(H)));
    std::string map = scratch("kz4_ddmap.json");
    write_text_file(map, pretty(matrix_to_json(double_dual_map(d1.g, d2.g), 1)));
    RunResult dd_run = run_cli("isocheck " + map + " " + dd + " " + orig);
    CHECK(dd_run.code == 0);

    // same dimension, wrong map: a negative verdict
    std::string id1 = write_identity("id4c1.json", 4, 1);
    std::string v4 = scratch("kv4.json");
    run_cli("catalog get KZ_2xZ_2 -o " + v4);
    RunResult wrong = run_cli("isocheck " + id1 + " " + orig + " " + v4);
    CHECK(wrong.code == 1);
    CHECK(report_of(wrong)["result"]["isomorphic"] == false);

    // dimension mismatch is also a verdict, conductor mismatch a tool error
    std::string z2 = scratch("kz2.json");
    run_cli("catalog get KZ_2 -o " + z2);
    CHECK(run_cli("isocheck " + id1 + " " + orig + " " + z2).code == 1);
    CHECK(run_cli("isocheck " + id1 + " " + fixture("T_4.json") + " " + fixture("T_4.json"))
              .code == 2);
}

TEST_CASE("orbit-dim reports the biderivation complement") {
    RunResult gp = run_cli("orbit-dim " + fixture("KZ_4.json"));
    CHECK(gp.code == 0);
    auto rep = report_of(gp)["result"];
    CHECK(rep["orbit_dimension"] == 16);
    CHECK(rep["biderivation_dim"] == 0);

    RunResult tf = run_cli("orbit-dim " + fixture("T_4.json"));
    CHECK(tf.code == 0);
    CHECK(report_of(tf)["result"]["orbit_dimension"] == 15);
}
