// flagforge: exact flags, right ideals, idempotent tuples, hermitian
// symmetry, and cocharacter limit subgroups over finite-component bases.
// Every command is a thin wrapper over the library; documents are JSON.

#include <CLI11.hpp>

#include "flagforge/config.hpp"
#include "flagforge/suites.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace flagforge;

namespace {

Json read_doc(const std::string& file) {
    if (file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return loads(ss.str(), "stdin");
    }
    return load_file(file);
}

void emit(const Json& j, const std::string& out) {
    if (out.empty())
        std::cout << dumps(j);
    else
        save_file(out, j);
}

int component_index(const DoubleCover& cover, const std::string& name,
                    const std::string& where) {
    for (int i = 0; i < cover.base.count(); ++i)
        if (cover.base.components[static_cast<size_t>(i)] == name) return i;
    throw SchemaError(where + ": unknown component \"" + name + "\"");
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// pair of (hermitian space, component index) from a document that carries
// "cover", "d", optional "gram", and "component"
std::pair<HermitianSpace, int> herm_context(const Json& doc) {
    HermitianSpace hs = hermitian_from_json(doc);
    std::string name = doc.contains("component") && doc["component"].is_string()
                           ? doc["component"].get<std::string>()
                           : (hs.cover.base.count() == 1 ? hs.cover.base.components[0]
                                                         : std::string());
    if (name.empty()) throw SchemaError("$.component: required for multi-component covers");
    int ix = component_index(hs.cover, name, "$.component");
    return {std::move(hs), ix};
}

int lsub_ambient(const Json& doc, const HermitianSpace& hs) {
    if (doc.contains("ambient") && doc["ambient"].is_number_integer())
        return doc["ambient"].get<int>();
    return hs.d;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lowered flags, ideal attachments, hermitian symmetry, and "
                 "limit subgroups over finite-component bases"};
    app.require_subcommand(1);
    int rc = 0;

    // ---------------------------------------------------------------- flag
    CLI::App* flag = app.add_subcommand("flag", "lowered flags over a base");
    flag->require_subcommand(1);
    std::string in_file, out_file, keep_csv;

    CLI::App* flag_type = flag->add_subcommand("type", "type tuple of a lowered flag");
    flag_type->add_option("--in", in_file, "flag document")->required();
    flag_type->add_option("--out", out_file, "output file (default stdout)");
    flag_type->callback(
        [&] { emit(type_to_json(type_of_flag(flag_from_json(read_doc(in_file)))), out_file); });

    CLI::App* flag_glue = flag->add_subcommand(
        "glue", "validate per-component chains and emit the canonical glued flag");
    flag_glue->add_option("--in", in_file, "flag document")->required();
    flag_glue->add_option("--out", out_file, "output file (default stdout)");
    flag_glue->callback([&] { emit(flag_to_json(flag_from_json(read_doc(in_file))), out_file); });

    CLI::App* flag_raise = flag->add_subcommand("raise", "staircase slide to the raised form");
    flag_raise->add_option("--in", in_file, "flag document")->required();
    flag_raise->add_option("--out", out_file, "output file (default stdout)");
    flag_raise->callback([&] {
        emit(raised_flag_to_json(raise_flag(flag_from_json(read_doc(in_file)))), out_file);
    });

    CLI::App* flag_restrict = flag->add_subcommand("restrict", "keep a subset of components");
    flag_restrict->add_option("--in", in_file, "flag document")->required();
    flag_restrict->add_option("--keep", keep_csv, "comma-separated component names")->required();
    flag_restrict->add_option("--out", out_file, "output file (default stdout)");
    flag_restrict->callback([&] {
        Restriction r;
        std::stringstream ss(keep_csv);
        std::string item;
        while (std::getline(ss, item, ',')) r.kept.push_back(trim(item));
        emit(flag_to_json(restrict_flag(flag_from_json(read_doc(in_file)), r)), out_file);
    });

    // --------------------------------------------------------------- ideal
    CLI::App* ideal = app.add_subcommand("ideal", "right ideals of the rank-d matrix algebra");
    ideal->require_subcommand(1);

    CLI::App* ideal_from = ideal->add_subcommand(
        "from-sub", "right ideal of maps with image inside a submodule");
    ideal_from->add_option("--in", in_file, "subspace document")->required();
    ideal_from->add_option("--out", out_file, "output file (default stdout)");
    ideal_from->callback([&] {
        emit(ideal_to_json(ideal_from_submodule(subspace_from_json(read_doc(in_file)))),
             out_file);
    });

    CLI::App* ideal_ann = ideal->add_subcommand("ann", "left annihilator of a right ideal");
    ideal_ann->add_option("--in", in_file, "right ideal document")->required();
    ideal_ann->add_option("--out", out_file, "output file (default stdout)");
    ideal_ann->callback([&] {
        emit(left_ideal_to_json(left_annihilator(ideal_from_json(read_doc(in_file)))),
             out_file);
    });

    // --------------------------------------------------------------- idemp
    CLI::App* idemp = app.add_subcommand("idemp", "orthogonal idempotent tuples");
    idemp->require_subcommand(1);

    CLI::App* idemp_validate = idemp->add_subcommand(
        "validate", "check the tuple axioms and report the verdict");
    idemp_validate->add_option("--in", in_file, "idempotent tuple document")->required();
    idemp_validate->add_option("--out", out_file, "output file (default stdout)");
    idemp_validate->callback([&] {
        Json verdict = Json::object();
        try {
            idemp_from_json(read_doc(in_file));
            verdict["valid"] = true;
        } catch (const SchemaError&) {
            throw; // malformed documents are errors, not verdicts
        } catch (const Error& e) {
            verdict["valid"] = false;
            verdict["why"] = e.what();
            rc = 1;
        }
        emit(verdict, out_file);
    });

    CLI::App* idemp_to = idemp->add_subcommand(
        "to-flag", "the lowered ideal flag of partial sums");
    idemp_to->add_option("--in", in_file, "idempotent tuple document")->required();
    idemp_to->add_option("--out", out_file, "output file (default stdout)");
    idemp_to->callback([&] {
        emit(flag_to_json(idemp_to_flag(idemp_from_json(read_doc(in_file)))), out_file);
    });

    CLI::App* idemp_raise = idemp->add_subcommand("raise", "staircase slide to the raised form");
    idemp_raise->add_option("--in", in_file, "idempotent tuple document")->required();
    idemp_raise->add_option("--out", out_file, "output file (default stdout)");
    idemp_raise->callback([&] {
        emit(raised_idemp_to_json(rho_idemp(idemp_from_json(read_doc(in_file)))), out_file);
    });

    // ---------------------------------------------------------------- herm
    CLI::App* herm = app.add_subcommand("herm", "hermitian spaces over a degree-2 cover");
    herm->require_subcommand(1);
    bool ideal_flagged = false;

    CLI::App* herm_perp = herm->add_subcommand("perp", "perpendicular of an L-submodule");
    herm_perp->add_option("--in", in_file, "document with cover, d, gram, component, sub")
        ->required();
    herm_perp->add_option("--out", out_file, "output file (default stdout)");
    herm_perp->callback([&] {
        Json doc = read_doc(in_file);
        auto [hs, comp_ix] = herm_context(doc);
        if (!doc.contains("sub")) throw SchemaError("$.sub: missing L-submodule");
        LSub v = lsub_from_json(hs.cover, comp_ix, lsub_ambient(doc, hs), doc["sub"], "$.sub");
        emit(lsub_to_json(perp(hs, comp_ix, v)), out_file);
    });

    CLI::App* herm_gap = herm->add_subcommand("gap", "L-gap of a nested pair of L-submodules");
    herm_gap->add_option("--in", in_file, "document with cover, d, component, sub, sub2")
        ->required();
    herm_gap->add_option("--out", out_file, "output file (default stdout)");
    herm_gap->callback([&] {
        Json doc = read_doc(in_file);
        auto [hs, comp_ix] = herm_context(doc);
        if (!doc.contains("sub") || !doc.contains("sub2"))
            throw SchemaError("$.sub / $.sub2: both L-submodules are required");
        int ambient = lsub_ambient(doc, hs);
        LSub v = lsub_from_json(hs.cover, comp_ix, ambient, doc["sub"], "$.sub");
        LSub w = lsub_from_json(hs.cover, comp_ix, ambient, doc["sub2"], "$.sub2");
        Json j = Json::object();
        j["gap"] = gap_L(hs.cover, comp_ix, v, w);
        j["subrank"] = subrank_L(hs.cover, comp_ix, w);
        emit(j, out_file);
    });

    CLI::App* herm_pih = herm->add_subcommand(
        "pih", "apply the hermitian flag involution (reverse and perp)");
    herm_pih->add_option("--in", in_file, "symmetric flag document")->required();
    herm_pih->add_option("--out", out_file, "output file (default stdout)");
    herm_pih->callback([&] {
        auto [hs, f] = lflag_from_json(read_doc(in_file));
        emit(lflag_to_json(hs, pi_h(hs, f)), out_file);
    });

    CLI::App* herm_type = herm->add_subcommand("type", "outer type section of an L-flag");
    herm_type->add_option("--in", in_file, "L-flag document")->required();
    herm_type->add_flag("--ideal", ideal_flagged, "members are ideals (ranks divide by d)");
    herm_type->add_option("--out", out_file, "output file (default stdout)");
    herm_type->callback([&] {
        auto [hs, f] = lflag_from_json(read_doc(in_file));
        emit(outer_type_to_json(outer_type(hs, f, ideal_flagged)), out_file);
    });

    CLI::App* herm_op = herm->add_subcommand(
        "op", "opposite-algebra involution of an ideal L-flag");
    herm_op->add_option("--in", in_file, "ideal L-flag document")->required();
    herm_op->add_option("--out", out_file, "output file (default stdout)");
    herm_op->callback([&] {
        auto [hs, f] = lflag_from_json(read_doc(in_file));
        emit(lflag_to_json(hs, opposite_iso(hs, f)), out_file);
    });

    CLI::App* herm_sb = herm->add_subcommand(
        "sb-fiber", "membership in the distinguished line-type fiber");
    herm_sb->add_option("--in", in_file, "ideal L-flag document")->required();
    herm_sb->add_option("--out", out_file, "output file (default stdout)");
    herm_sb->callback([&] {
        auto [hs, f] = lflag_from_json(read_doc(in_file));
        Json j = Json::object();
        j["member"] = sb_fiber_member(hs, f);
        j["sheet0_one"] = sb_fiber_sheet0_one(hs, f);
        emit(j, out_file);
    });

    // --------------------------------------------------------------- group
    CLI::App* group = app.add_subcommand("group", "stabilizers, limits, and patterns");
    group->require_subcommand(1);
    std::string idemps_file, g_file, flag_file, partition_csv, field_name = "f2";

    CLI::App* group_limit = group->add_subcommand(
        "limit", "conjugation limit membership for the tuple's cocharacter");
    group_limit->add_option("--idemps", idemps_file, "idempotent tuple document")->required();
    group_limit->add_option("--g", g_file, "group element document")->required();
    group_limit->add_option("--out", out_file, "output file (default stdout)");
    group_limit->callback([&] {
        IdempTuple t = idemp_from_json(read_doc(idemps_file));
        Cocharacter lam = cochar_from_idemps(t);
        std::vector<Matrix> g = element_from_json(t.base, read_doc(g_file));
        Json j = Json::object();
        bool member = in_limit_parabolic(lam, g);
        j["member"] = member;
        if (member) {
            Json lims = Json::array();
            for (const Matrix& m : limit_of(lam, g)) lims.push_back(rows_to_json(m));
            j["limit"] = std::move(lims);
        }
        emit(j, out_file);
    });

    CLI::App* group_levi = group->add_subcommand(
        "levi", "centralizer membership for the tuple's cocharacter");
    group_levi->add_option("--idemps", idemps_file, "idempotent tuple document")->required();
    group_levi->add_option("--g", g_file, "group element document")->required();
    group_levi->add_option("--out", out_file, "output file (default stdout)");
    group_levi->callback([&] {
        IdempTuple t = idemp_from_json(read_doc(idemps_file));
        std::vector<Matrix> g = element_from_json(t.base, read_doc(g_file));
        Json j = Json::object();
        j["member"] = in_levi(cochar_from_idemps(t), g);
        emit(j, out_file);
    });

    CLI::App* group_stab = group->add_subcommand("stab", "does the element fix the flag");
    group_stab->add_option("--flag", flag_file, "module flag document")->required();
    group_stab->add_option("--g", g_file, "group element document")->required();
    group_stab->add_option("--out", out_file, "output file (default stdout)");
    group_stab->callback([&] {
        GlobalLoweredFlag f = flag_from_json(read_doc(flag_file));
        std::vector<Matrix> g = element_from_json(f.base, read_doc(g_file));
        Json j = Json::object();
        j["stabilizes"] = stabilizes_sub_flag(g, f);
        emit(j, out_file);
    });

    CLI::App* group_standard = group->add_subcommand(
        "standard", "coordinate parabolic of a block partition");
    group_standard->add_option("--partition", partition_csv, "block sizes, e.g. 2,2")->required();
    group_standard->add_option("--field", field_name, "base field: f2, f3, or q");
    group_standard->add_option("--out", out_file, "output file (default stdout)");
    group_standard->callback([&] {
        std::vector<int> sizes;
        std::stringstream ss(partition_csv);
        std::string item;
        while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(trim(item)));
        int d = 0;
        for (int s : sizes) d += s;
        FieldDesc f = field_name == "f2"  ? field_Fp(2)
                      : field_name == "f3" ? field_Fp(3)
                      : field_name == "q"  ? field_Q()
                                           : throw SchemaError("unknown field \"" + field_name +
                                                               "\" (expected f2, f3, or q)");
        StandardParabolic sp = standard_parabolic(f, make_partition(d, sizes));
        Json j = Json::object();
        j["field"] = field_to_json(f);
        j["d"] = d;
        j["sizes"] = sp.blocks.sizes;
        Json chain = Json::array();
        for (const Subspace& v : sp.flag.chain) chain.push_back(rows_to_json(v.basis));
        j["chain"] = std::move(chain);
        Json pattern = Json::array();
        for (const auto& row : sp.pattern) {
            Json r = Json::array();
            for (bool b : row) r.push_back(b ? 1 : 0);
            pattern.push_back(std::move(r));
        }
        j["pattern"] = std::move(pattern);
        Json type = Json::object();
        type["n"] = sp.type.n;
        type["entries"] = sp.type.entries;
        j["type"] = std::move(type);
        emit(j, out_file);
    });

    CLI::App* group_type = group->add_subcommand(
        "type", "type of the parabolic attached to a module flag");
    group_type->add_option("--in", in_file, "module flag document")->required();
    group_type->add_option("--out", out_file, "output file (default stdout)");
    group_type->callback([&] {
        ParabolicHandle h{flag_from_json(read_doc(in_file))};
        emit(type_to_json(type_of_parabolic(h)), out_file);
    });

    // -------------------------------------------------------------- verify
    CLI::App* verify = app.add_subcommand("verify", "run property verification suites");
    std::string suite = "all", v_field, json_out, config_path = "flagforge.toml";
    int v_d = 0, v_trials = 0;
    long long v_seed = -1, v_max_enum = 0;
    verify->add_option("--suite", suite, "suite name or \"all\"");
    verify->add_option("--field", v_field, "base field: f2, f3, or q");
    verify->add_option("--d", v_d, "module rank (1..4)");
    verify->add_option("--seed", v_seed, "seed for sampled suites");
    verify->add_option("--trials", v_trials, "sample count for sampled suites");
    verify->add_option("--max-enum", v_max_enum, "enumeration budget override");
    verify->add_option("--json", json_out, "write the machine-readable report here");
    verify->add_option("--config", config_path, "config file (default ./flagforge.toml)");
    verify->callback([&] {
        Config cfg = load_config(config_path, verify->count("--config") > 0);
        SuiteParams p;
        if (!cfg.field.empty()) p.field = cfg.field;
        if (cfg.d > 0) p.d = cfg.d;
        if (cfg.has_seed) p.seed = cfg.seed;
        if (!v_field.empty()) p.field = v_field;
        if (v_d > 0) p.d = v_d;
        if (v_seed >= 0) p.seed = static_cast<unsigned long long>(v_seed);
        if (v_trials > 0) p.trials = v_trials;
        if (v_max_enum > 0) p.max_enum = v_max_enum;
        std::vector<std::string> names =
            suite == "all" ? suite_names() : std::vector<std::string>{suite};
        Json reports = Json::array();
        int failed = 0;
        for (const std::string& name : names) {
            try {
                VerifyReport r = run_suite(name, p);
                if (!r.passed()) ++failed;
                std::cout << r.suite << ": " << (r.passed() ? "PASS" : "FAIL")
                          << " cases=" << r.cases << " failures=" << r.failures_total
                          << " millis=" << r.millis << " seed=" << p.seed << "\n";
                for (const SuiteFailure& f : r.failures)
                    std::cout << "  " << f.what << ": expected " << f.expected << ", got "
                              << f.actual << "\n";
                reports.push_back(report_to_json(r));
            } catch (const Error& e) {
                ++failed;
                std::cout << name << ": ERROR " << e.what() << "\n";
                Json err = Json::object();
                err["suite"] = name;
                err["error"] = e.what();
                reports.push_back(std::move(err));
            }
        }
        if (!json_out.empty()) save_file(json_out, reports);
        rc = failed > 125 ? 125 : failed;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
