// Command-line front end.  Every subcommand prints one JSON report on
// standard output and exits 0 on a positive verdict, 1 on a negative
// mathematical verdict (axiom failure, pole, condition failure, failed
// isomorphism), and 2 on usage, IO, or parse errors.  --summary adds a
// one-line prose summary on standard error; it never touches stdout, so
// reports stay byte-stable.

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopfforge/catalog.hpp"
#include "hopfforge/degeneration.hpp"
#include "hopfforge/invariants.hpp"
#include "hopfforge/json_io.hpp"
#include "hopfforge/random_maps.hpp"
#include "hopfforge/scalar_io.hpp"
#include "hopfforge/transport.hpp"
#include "hopfforge/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace hopfforge;

constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;

std::string hex64(std::uint64_t h) {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << h;
    return ss.str();
}

// Objects one key per line; arrays compact when every element is a scalar,
// one element per line otherwise.  Deterministic, so reports diff cleanly.
void render(const ordered_json& j, std::string& out, std::size_t indent) {
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        const std::string pad(indent + 2, ' ');
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + ordered_json(key).dump() + ": ";
            render(value, out, indent + 2);
        }
        out += "\n" + std::string(indent, ' ') + "}";
    } else if (j.is_array()) {
        bool flat = true;
        for (const auto& v : j)
            if (v.is_structured()) {
                flat = false;
                break;
            }
        if (flat) {
            out += j.dump();
            return;
        }
        const std::string pad(indent + 2, ' ');
        out += "[\n";
        bool first = true;
        for (const auto& v : j) {
            if (!first) out += ",\n";
            first = false;
            out += pad;
            render(v, out, indent + 2);
        }
        out += "\n" + std::string(indent, ' ') + "]";
    } else {
        out += j.dump();
    }
}

std::string render(const ordered_json& j) {
    std::string out;
    render(j, out, 0);
    out += "\n";
    return out;
}

struct LoadedFile {
    std::string path;
    std::string digest;
    nlohmann::json doc;
};

LoadedFile load_json_file(const std::string& path) {
    LoadedFile f;
    f.path = path;
    std::string text = read_text_file(path);
    f.digest = hex64(fnv1a64(text));
    f.doc = nlohmann::json::parse(text);
    return f;
}

struct Cli {
    std::vector<std::string> echo;
    bool summary = false;
};

int emit(const Cli& cli, const std::vector<LoadedFile>& inputs, ordered_json result,
         int code, const std::string& prose) {
    ordered_json rep;
    rep["command"] = cli.echo;
    ordered_json ins = ordered_json::array();
    for (const auto& f : inputs) {
        ordered_json one;
        one["path"] = f.path;
        one["digest"] = f.digest;
        ins.push_back(std::move(one));
    }
    rep["inputs"] = std::move(ins);
    rep["result"] = std::move(result);
    rep["exit"] = code;
    std::cout << render(rep);
    if (cli.summary && !prose.empty()) std::cerr << prose << "\n";
    return code;
}

void emit_error(const std::vector<std::string>& echo, const std::string& message) {
    ordered_json rep;
    rep["command"] = echo;
    rep["error"] = message;
    rep["exit"] = 2;
    std::cout << render(rep);
    std::cerr << "error: " << message << "\n";
}

ordered_json verification_to_json(const VerificationReport& rep) {
    ordered_json j;
    j["pass"] = rep.pass;
    ordered_json fams = ordered_json::object();
    for (const auto& [name, fr] : rep.families) {
        ordered_json one;
        one["pass"] = fr.pass;
        one["violations"] = fr.violations;
        fams[name] = std::move(one);
    }
    j["families"] = std::move(fams);
    ordered_json fails = ordered_json::array();
    for (const auto& f : rep.failures) {
        ordered_json one;
        one["family"] = f.family;
        one["index"] = f.index;
        one["residual"] = f.residual;
        fails.push_back(std::move(one));
    }
    j["failures"] = std::move(fails);
    return j;
}

ordered_json fingerprint_to_json(const Fingerprint& fp) {
    ordered_json j;
    j["dim"] = fp.dim;
    j["commutative"] = fp.commutative;
    j["cocommutative"] = fp.cocommutative;
    j["grouplike_count"] = fp.grouplike_count;
    j["dual_grouplike_count"] = fp.dual_grouplike_count;
    j["block_count"] = fp.block_count;
    j["dual_block_count"] = fp.dual_block_count;
    if (fp.antipode_order)
        j["antipode_order"] = *fp.antipode_order;
    else
        j["antipode_order"] = "exceeds bound";
    j["trace_S"] = to_string(fp.trace_S);
    j["rank_mu_delta"] = fp.rank_mu_delta;
    j["trace_mu_delta"] = to_string(fp.trace_mu_delta);
    j["biderivation_dim"] = fp.biderivation_dim;
    return j;
}

ordered_json violation_to_json(const ConditionViolation& v) {
    ordered_json j;
    j["where"] = v.where;
    j["index"] = v.index;
    return j;
}

ordered_json degeneration_to_json(const DegenerationReport& rep) {
    ordered_json j;
    j["verdict"] = rep.verdict;
    j["mul_condition_holds"] = rep.mul_condition_holds;
    j["comul_condition_holds"] = rep.comul_condition_holds;
    if (rep.mul_violation) j["mul_violation"] = violation_to_json(*rep.mul_violation);
    if (rep.comul_violation) j["comul_violation"] = violation_to_json(*rep.comul_violation);
    j["unit_found"] = rep.unit_found;
    j["counit_found"] = rep.counit_found;
    j["antipode_found"] = rep.antipode_found;
    if (rep.oracle_agreement) j["oracle_agreement"] = *rep.oracle_agreement;
    if (rep.limit) j["limit"] = hopf_to_json(*rep.limit);
    return j;
}

void require_same_conductor(unsigned a, unsigned b, const std::string& what) {
    if (a != b)
        throw std::invalid_argument("conductor mismatch: " + what + " (" + std::to_string(a) +
                                    " vs " + std::to_string(b) + ")");
}

int run_verify(const Cli& cli, const std::string& path) {
    LoadedFile f = load_json_file(path);
    HopfData H = hopf_from_json(f.doc);
    VerificationReport rep = verify_hopf(H);
    ordered_json result = verification_to_json(rep);
    result["antipode_present"] = H.S.has_value();
    std::string prose;
    if (rep.pass) {
        prose = "pass: every axiom family holds (dim " + std::to_string(H.n) +
                (H.S ? ", antipode checked)" : ", no antipode stored)");
    } else {
        std::size_t total = 0;
        std::string bad;
        for (const auto& [name, fr] : rep.families)
            if (!fr.pass) {
                total += fr.violations;
                if (!bad.empty()) bad += ", ";
                bad += name;
            }
        prose = "fail: " + std::to_string(total) + " violation(s) in families " + bad;
    }
    return emit(cli, {f}, std::move(result), rep.pass ? 0 : 1, prose);
}

int run_dual(const Cli& cli, const std::string& path, const std::string& out_path) {
    LoadedFile f = load_json_file(path);
    HopfData H = hopf_from_json(f.doc);
    Normalized<CycScalar> d = dual(H);
    ordered_json doc = hopf_to_json(d.data);
    write_text_file(out_path, pretty(doc));
    ordered_json result;
    result["written"] = out_path;
    result["dual"] = std::move(doc);
    return emit(cli, {f}, std::move(result), 0,
                "dual of " + (H.meta.name.empty() ? std::string("input") : H.meta.name) +
                    " written to " + out_path);
}

int run_fingerprint(const Cli& cli, const std::string& path, std::size_t trials) {
    LoadedFile f = load_json_file(path);
    HopfData H = hopf_from_json(f.doc);
    bool recovered = false;
    if (!H.S) {
        auto S = compute_antipode(H);
        if (!S) {
            ordered_json result;
            result["error"] = "no antipode exists for this bialgebra";
            return emit(cli, {f}, std::move(result), 1,
                        "fail: the convolution equations have no solution, so there is no "
                        "antipode");
        }
        H.S = std::move(*S);
        recovered = true;
    }
    Fingerprint fp = fingerprint(H);
    ordered_json result = fingerprint_to_json(fp);
    if (recovered) result["antipode_recovered"] = true;
    result["note"] =
        "unequal fingerprints rule isomorphism out; equal fingerprints prove nothing";
    int code = 0;
    std::string prose = "fingerprint computed (dim " + std::to_string(fp.dim) + ")";
    if (trials > 0) {
        std::uint64_t seed = seed_from_env(kDefaultSeed);
        std::mt19937_64 rng(seed);
        const unsigned m = H.one.conductor();
        bool invariant = true;
        std::size_t failed_at = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            CycMatrix g = random_unital_map(rng, H.n, m);
            if (fingerprint(transport(g, H)) != fp) {
                invariant = false;
                failed_at = t + 1;
                break;
            }
        }
        ordered_json rb;
        rb["trials"] = trials;
        rb["seed"] = seed;
        rb["invariant"] = invariant;
        if (!invariant) rb["first_failure"] = failed_at;
        result["random_basis"] = std::move(rb);
        if (invariant) {
            prose += "; invariant under " + std::to_string(trials) + " random basis changes";
        } else {
            prose += "; CHANGED under random basis change " + std::to_string(failed_at);
            code = 1;
        }
    }
    return emit(cli, {f}, std::move(result), code, prose);
}

int run_degenerate(const Cli& cli, const std::string& path, const std::string& phi_path,
                   const std::string& mode) {
    LoadedFile f = load_json_file(path);
    LoadedFile fphi = load_json_file(phi_path);
    HopfData H = hopf_from_json(f.doc);
    CycMatrix phi = matrix_from_json(fphi.doc);
    if (phi.rows() != H.n)
        throw std::invalid_argument("the map is " + std::to_string(phi.rows()) + "x" +
                                    std::to_string(phi.cols()) + " but the algebra has dim " +
                                    std::to_string(H.n));
    require_same_conductor(phi.at(0, 0).conductor(), H.one.conductor(), "map vs algebra");

    DegenerationReport rep;
    if (mode == "closed")
        rep = degenerate_closed_form(H, phi);
    else if (mode == "symbolic")
        rep = degenerate_symbolic(H, phi);
    else
        rep = degenerate_both(H, phi);

    ordered_json result;
    result["mode"] = mode;
    ordered_json body = degeneration_to_json(rep);
    for (auto& [k, v] : body.items()) result[k] = std::move(v);
    return emit(cli, {f, fphi}, std::move(result), rep.limit ? 0 : 1, rep.verdict);
}

int run_graded(const Cli& cli, const std::string& path, const std::vector<std::size_t>& degrees) {
    LoadedFile f = load_json_file(path);
    HopfData H = hopf_from_json(f.doc);
    DegenerationReport rep = graded_degeneration(H, GradingVector{degrees});
    ordered_json result;
    result["degrees"] = degrees;
    ordered_json body = degeneration_to_json(rep);
    for (auto& [k, v] : body.items()) result[k] = std::move(v);
    return emit(cli, {f}, std::move(result), rep.limit ? 0 : 1, rep.verdict);
}

int run_family_limit(const Cli& cli, const std::string& path) {
    LoadedFile f = load_json_file(path);
    FamilyData F = family_from_json(f.doc);
    FamilyLimit lim;
    try {
        lim = family_limit(F);
    } catch (const std::invalid_argument& e) {
        ordered_json result;
        result["verdict"] = std::string("family rejected: ") + e.what();
        return emit(cli, {f}, std::move(result), 1, result["verdict"].get<std::string>());
    }
    ordered_json result;
    if (lim.limit) {
        result["verdict"] = "limit exists at t = 0";
        result["limit"] = hopf_to_json(*lim.limit);
        return emit(cli, {f}, std::move(result), 0, "limit exists at t = 0");
    }
    result["verdict"] = "no limit: pole at t = 0";
    result["pole_entry"] = lim.pole_entry;
    return emit(cli, {f}, std::move(result), 1, "no limit: pole at t = 0 in " + lim.pole_entry);
}

int run_catalog_list(const Cli& cli) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : catalog_entries()) {
        ordered_json one;
        one["id"] = e.id;
        one["display"] = e.display;
        one["dim"] = e.dim;
        one["kind"] = e.kind;
        one["rigidity"] = e.rigidity;
        entries.push_back(std::move(one));
    }
    ordered_json result;
    result["count"] = catalog_entries().size();
    result["entries"] = std::move(entries);
    return emit(cli, {}, std::move(result), 0,
                std::to_string(catalog_entries().size()) + " catalog entries");
}

int run_catalog_get(const Cli& cli, const std::string& id, const std::string& out_path) {
    const CatalogEntry* e = catalog_find(id);
    if (!e) throw std::runtime_error("unknown catalog id '" + id + "' (try: catalog list)");
    HopfData H = e->build();
    ordered_json doc = hopf_to_json(H);
    ordered_json result;
    result["id"] = e->id;
    result["display"] = e->display;
    result["dim"] = e->dim;
    result["kind"] = e->kind;
    result["rigidity"] = e->rigidity;
    std::string prose = e->id + " (dim " + std::to_string(e->dim) + ")";
    if (!out_path.empty()) {
        write_text_file(out_path, pretty(doc));
        result["written"] = out_path;
        prose += " written to " + out_path;
    }
    result["document"] = std::move(doc);
    return emit(cli, {}, std::move(result), 0, prose);
}

int run_orbit_dim(const Cli& cli, const std::string& path) {
    LoadedFile f = load_json_file(path);
    HopfData H = hopf_from_json(f.doc);
    std::size_t bider = biderivation_dim(H);
    ordered_json result;
    result["dim"] = H.n;
    result["biderivation_dim"] = bider;
    result["orbit_dimension"] = H.n * H.n - bider;
    return emit(cli, {f}, std::move(result), 0,
                "orbit dimension " + std::to_string(H.n * H.n - bider) + " of " +
                    std::to_string(H.n * H.n));
}

int run_isocheck(const Cli& cli, const std::string& map_path, const std::string& path1,
                 const std::string& path2) {
    LoadedFile fm = load_json_file(map_path);
    LoadedFile f1 = load_json_file(path1);
    LoadedFile f2 = load_json_file(path2);
    CycMatrix g = matrix_from_json(fm.doc);
    HopfData H1 = hopf_from_json(f1.doc);
    HopfData H2 = hopf_from_json(f2.doc);
    ordered_json result;
    if (H1.n != H2.n) {
        result["isomorphic"] = false;
        result["reason"] = "dimension mismatch";
        return emit(cli, {fm, f1, f2}, std::move(result), 1,
                    "not isomorphic: the dimensions differ");
    }
    require_same_conductor(H1.one.conductor(), H2.one.conductor(), "first vs second algebra");
    require_same_conductor(g.at(0, 0).conductor(), H1.one.conductor(), "map vs algebras");
    if (g.rows() != H1.n || g.cols() != H1.n)
        throw std::invalid_argument("the map is " + std::to_string(g.rows()) + "x" +
                                    std::to_string(g.cols()) + " but the algebras have dim " +
                                    std::to_string(H1.n));
    bool iso = check_isomorphism(g, H1, H2);
    result["isomorphic"] = iso;
    if (!iso) result["reason"] = "transported structure constants differ";
    return emit(cli, {fm, f1, f2}, std::move(result), iso ? 0 : 1,
                iso ? "isomorphic: the map carries the first structure onto the second"
                    : "not isomorphic under this map");
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    Cli cli;
    cli.echo.assign(argv + 1, argv + argc);

    CLI::App app{"exact structure-constant toolkit for finite-dimensional Hopf algebras"};
    app.require_subcommand(1);
    app.add_flag("--summary", cli.summary, "print a one-line prose summary on standard error");

    int code = 0;

    std::string verify_file;
    auto* sc_verify = app.add_subcommand("verify", "check the bialgebra and antipode axioms");
    sc_verify->fallthrough();
    sc_verify->add_option("file", verify_file, "structure file (JSON)")->required();
    sc_verify->callback([&] { code = run_verify(cli, verify_file); });

    std::string dual_file, dual_out;
    auto* sc_dual = app.add_subcommand("dual", "write the dual structure to a file");
    sc_dual->fallthrough();
    sc_dual->add_option("file", dual_file, "structure file (JSON)")->required();
    sc_dual->add_option("out", dual_out, "output path for the dual")->required();
    sc_dual->callback([&] { code = run_dual(cli, dual_file, dual_out); });

    std::string fp_file;
    std::size_t fp_trials = 0;
    auto* sc_fp = app.add_subcommand("fingerprint", "basis-independent invariants as JSON");
    sc_fp->fallthrough();
    sc_fp->add_option("file", fp_file, "structure file (JSON)")->required();
    sc_fp->add_option("--random-basis", fp_trials,
                      "re-check the fingerprint under N seeded random basis changes");
    sc_fp->callback([&] { code = run_fingerprint(cli, fp_file, fp_trials); });

    std::string dg_file, dg_phi, dg_mode = "both";
    auto* sc_dg = app.add_subcommand("degenerate", "degeneration along f_t = phi + t*id");
    sc_dg->fallthrough();
    sc_dg->add_option("file", dg_file, "structure file (JSON)")->required();
    sc_dg->add_option("--phi", dg_phi, "matrix file for the endomorphism phi")->required();
    sc_dg->add_option("--mode", dg_mode, "closed, symbolic, or both (cross-checked)")
        ->check(CLI::IsMember({"closed", "symbolic", "both"}));
    sc_dg->callback([&] { code = run_degenerate(cli, dg_file, dg_phi, dg_mode); });

    std::string gr_file;
    std::vector<std::size_t> gr_degrees;
    auto* sc_gr = app.add_subcommand("graded", "associated graded structure for a degree vector");
    sc_gr->fallthrough();
    sc_gr->add_option("file", gr_file, "structure file (JSON)")->required();
    sc_gr->add_option("--degrees", gr_degrees, "comma-separated degrees d1,...,dn")
        ->required()
        ->delimiter(',');
    sc_gr->callback([&] { code = run_graded(cli, gr_file, gr_degrees); });

    std::string fl_file;
    auto* sc_fl = app.add_subcommand("family-limit", "evaluate a t-family at t = 0");
    sc_fl->fallthrough();
    sc_fl->add_option("family", fl_file, "family file with rational-function entries")->required();
    sc_fl->callback([&] { code = run_family_limit(cli, fl_file); });

    auto* sc_cat = app.add_subcommand("catalog", "stock algebras by id");
    sc_cat->fallthrough();
    sc_cat->require_subcommand(1);
    auto* sc_cat_list = sc_cat->add_subcommand("list", "list all catalog entries");
    sc_cat_list->fallthrough();
    sc_cat_list->callback([&] { code = run_catalog_list(cli); });
    std::string cat_id, cat_out;
    auto* sc_cat_get = sc_cat->add_subcommand("get", "emit one catalog entry");
    sc_cat_get->fallthrough();
    sc_cat_get->add_option("id", cat_id, "catalog id (see: catalog list)")->required();
    sc_cat_get->add_option("-o,--output", cat_out, "also write the structure file here");
    sc_cat_get->callback([&] { code = run_catalog_get(cli, cat_id, cat_out); });

    std::string od_file;
    auto* sc_od = app.add_subcommand("orbit-dim", "dimension of the basis-change orbit");
    sc_od->fallthrough();
    sc_od->add_option("file", od_file, "structure file (JSON)")->required();
    sc_od->callback([&] { code = run_orbit_dim(cli, od_file); });

    std::string ic_map, ic_file1, ic_file2;
    auto* sc_ic = app.add_subcommand("isocheck", "verify a supplied isomorphism");
    sc_ic->fallthrough();
    sc_ic->add_option("map", ic_map, "matrix file for the candidate isomorphism")->required();
    sc_ic->add_option("file1", ic_file1, "source structure file")->required();
    sc_ic->add_option("file2", ic_file2, "target structure file")->required();
    sc_ic->callback([&] { code = run_isocheck(cli, ic_map, ic_file1, ic_file2); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        emit_error(cli.echo, std::string("usage: ") + e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        emit_error(cli.echo, std::string("json: ") + e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        emit_error(cli.echo, e.what());
        return 2;
    } catch (const std::runtime_error& e) {
        emit_error(cli.echo, e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error(cli.echo, std::string("internal error: ") + e.what());
        return 2;
    }
    return code;
}
