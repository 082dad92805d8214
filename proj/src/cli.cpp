#include "qcluster/cli.hpp"

#include "qcluster/charcalc.hpp"
#include "qcluster/coulomb.hpp"
#include "qcluster/pairs.hpp"
#include "qcluster/serialize.hpp"

#include <CLI11.hpp>

#include <functional>

namespace qcluster {

namespace {

constexpr int kPositivityDepth = 6;
constexpr int kInventoryDepth = 3;
constexpr int kCharacterWindow = 20;

CheckRecord record(std::string name, bool ok, std::string details = "") {
    return {std::move(name), {}, ok ? "pass" : "fail", std::move(details), "", "", {}};
}

// Runs one step; any exception becomes a single fail record.
Report guarded(const std::string& suite, const std::function<Report()>& step) {
    try {
        return step();
    } catch (const std::exception& e) {
        return {suite, {record("error", false, e.what())}};
    }
}

std::string matrix_text(const std::vector<std::vector<long>>& m) {
    std::string s;
    for (const auto& row : m) {
        s += "[";
        for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
        s += "]";
    }
    return s;
}

Report seed_report(const QuantumSeed& seed, int expected_d, const ExchangeMatrix* quiver) {
    Report rep{"seed", {}};
    auto c = check_compatibility(seed);
    rep.records.push_back(record("compatibility", c.ok && c.d == expected_d,
                                 "d=" + std::to_string(c.d) + " product " + matrix_text(c.product)));
    if (quiver) rep.records.push_back(record("quiver_transcription", *quiver == seed.exchange));
    auto completed = complete_lambda(seed.exchange, expected_d);
    rep.records.push_back(record("lambda_completion", completed && *completed == seed.lambda));
    return rep;
}

Report normalization_report(const Gl2Model& model) {
    Report rep{"registry", {}};
    for (const auto& [label, n] : model.registry.normalizations) {
        CheckRecord r = record("class_normalization", true, label.to_string());
        r.normalization_used.push_back("frozen^" + std::to_string(n.frozen_exponent) + " v^" +
                                       std::to_string(n.v_power) + " fixed by " + n.designated);
        rep.records.push_back(r);
    }
    for (const auto& l : model.unresolved) {
        CheckRecord r = record("class_normalization", true, l.to_string() + ": no relation in range fixes it");
        r.status = "skip";
        rep.records.push_back(r);
    }
    return rep;
}

void run_gl2(std::vector<Report>& out, int window, int depth, int threads) {
    out.push_back(guarded("seed", [] {
        ExchangeMatrix quiver = build_quiver_gln(2);
        return seed_report(initial_seed_gl2(), -2, &quiver);
    }));
    out.push_back(guarded("loop_shift", [] {
        QuantumSeed seed = initial_seed_gl2();
        int s2 = fit_loop_shift(seed, initial_commutation_relations(seed));
        return Report{"loop_shift", {record("unique_loop_shift", true, "2s=" + std::to_string(s2))}};
    }));

    std::optional<Gl2Model> model;
    out.push_back(guarded("registry", [&] {
        model = build_gl2_model(depth, window, threads);
        return normalization_report(*model);
    }));
    auto with_model = [&](const std::string& suite, const std::function<Report(const Gl2Model&)>& step) {
        if (!model) return Report{suite, {record("error", false, "registry unavailable")}};
        return guarded(suite, [&] { return step(*model); });
    };
    for (Suite s : {Suite::MutN, Suite::Old, Suite::Commute, Suite::Glue})
        out.push_back(with_model(suite_name(s), [&](const Gl2Model& m) {
            return verify_relations(m.registry, s, -window, window);
        }));
    out.push_back(with_model("twist", [](const Gl2Model& m) { return verify_twist_duality(m); }));
    out.push_back(with_model("commutation_closure", [&](const Gl2Model& m) {
        return verify_commutation_closure(m.registry, -window, window);
    }));
    out.push_back(with_model("common_clusters", [](const Gl2Model& m) { return verify_common_clusters(m); }));
    out.push_back(with_model("positivity", [&](const Gl2Model& m) {
        return verify_positivity(m, kPositivityDepth, threads);
    }));
    out.push_back(with_model("inventory", [&](const Gl2Model& m) {
        return verify_inventory(m, std::min(depth, kInventoryDepth));
    }));
}

void run_gl1(std::vector<Report>& out, int threads) {
    std::optional<Gl1Model> model;
    out.push_back(guarded("gl1_seed", [&] {
        QuantumSeed gl2 = initial_seed_gl2();
        int s2 = fit_loop_shift(gl2, initial_commutation_relations(gl2));
        model = build_gl1_model(s2);
        Report rep = seed_report(model->root, check_compatibility(model->root).d, nullptr);
        rep.suite = "gl1_seed";
        rep.records.push_back(record("lambda_search", true, "Lambda_12=" + std::to_string(model->lambda12)));
        ExchangeGraph g = explore(model->root, 4, threads);
        rep.records.push_back(record("exchange_graph", g.nodes.size() == 2 && g.closed,
                                     std::to_string(g.nodes.size()) + " seeds"));
        return rep;
    }));
    if (model) {
        out.push_back(guarded("mut_n", [&] { return verify_relations(model->registry, Suite::MutN, 0, 0); }));
        out.push_back(guarded("abelian", [&] { return verify_abelian(*model); }));
    }
    out.push_back(guarded("characters", [] { return verify_abelian_sequences(kCharacterWindow); }));
}

Json run_document(const std::vector<std::string>& command, const std::vector<Report>& reports) {
    Json rs = Json::array();
    int pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) {
        rs.push_back(report_to_json(r));
        pass += r.count("pass");
        fail += r.count("fail");
        skip += r.count("skip");
    }
    return {{"command", command},
            {"reports", rs},
            {"summary", {{"pass", pass}, {"fail", fail}, {"skip", skip}}},
            {"exit_status", fail ? kExitFailure : kExitPass}};
}

QuantumSeed load_seed(const std::string& path) { return seed_from_json(read_json_file(path)); }

QuantumSeed canonical(const QuantumSeed& s) { return permute_mutable(s, canonical_order(s)); }

// Usage and input errors, reported with exit status 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace

std::vector<Report> run_verify(const std::string& target, int ell_window, int depth, int threads) {
    if (target != "gl1" && target != "gl2" && target != "all") throw UsageError("unknown target " + target);
    if (ell_window < 0 || depth < 1 || threads < 1) throw UsageError("window, depth and threads out of range");
    std::vector<Report> out;
    if (target != "gl1") run_gl2(out, ell_window, depth, threads);
    if (target != "gl2") run_gl1(out, threads);
    return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum cluster mutation engine and verifier"};
    app.require_subcommand(1);
    std::vector<std::string> command(argv + 1, argv + argc);

    std::string target, seed_path, out_path, char_case = "abelian";
    int window = 3, depth = 5, threads = 1, n = 0, lo = 0, hi = 0;
    std::vector<int> at;
    bool pairs_json = false;

    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("target", target, "gl1, gl2 or all")->required()->check(CLI::IsMember({"gl1", "gl2", "all"}));
    verify->add_option("--ell-window", window, "Registry window [-K, K]");
    verify->add_option("--depth", depth, "Exploration depth");
    verify->add_option("--threads", threads, "Worker threads");

    auto* mut = app.add_subcommand("mutate", "Mutate a seed along a sequence");
    mut->add_option("--seed", seed_path)->required();
    mut->add_option("--at", at, "1-based indices")->required()->delimiter(',');
    mut->add_option("--out", out_path);

    auto* expl = app.add_subcommand("explore", "Breadth-first exchange graph");
    expl->add_option("--seed", seed_path)->required();
    expl->add_option("--depth", depth)->required();
    expl->add_option("--out", out_path);
    expl->add_option("--threads", threads);

    auto* tw = app.add_subcommand("twist", "Source-mutation twist of an acyclic seed");
    tw->add_option("--seed", seed_path)->required();

    auto* chr = app.add_subcommand("char", "Character factorization checks");
    chr->add_option("--case", char_case)->check(CLI::IsMember({"abelian"}));
    chr->add_option("--window", window)->required();

    auto* prs = app.add_subcommand("pairs", "Dominant pairs in a box");
    prs->add_option("--n", n)->required();
    prs->add_option("--lo", lo)->required();
    prs->add_option("--hi", hi)->required();
    prs->add_flag("--json", pairs_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            Json doc = run_document(command, run_verify(target, window, depth, threads));
            out << doc.dump(2) << "\n";
            return doc["exit_status"].get<int>();
        }
        if (mut->parsed()) {
            const QuantumSeed start = load_seed(seed_path);
            QuantumSeed s = start;
            for (int k : at) {
                if (k < 1 || k > s.mutable_count())
                    throw UsageError("index " + std::to_string(k) + " is not a mutable vertex");
                out << "mu_" << k << ": " << exchange_binomial(s, k - 1).to_string() << "\n";
                s = mutate(s, k - 1);
            }
            const bool same = seed_to_json(s) == seed_to_json(start);
            const bool same_up_to_order = canonical_form(canonical(s)) == canonical_form(canonical(start));
            out << "identical to input: " << (same ? "yes" : "no") << "\n";
            out << "equal to input up to vertex order: " << (same_up_to_order ? "yes" : "no") << "\n";
            if (out_path.empty())
                out << seed_to_json(s).dump(2) << "\n";
            else
                write_json_file(out_path, seed_to_json(s));
            return kExitPass;
        }
        if (expl->parsed()) {
            if (depth < 0 || threads < 1) throw UsageError("depth and threads out of range");
            ExchangeGraph g = explore(load_seed(seed_path), depth, threads);
            std::map<int, int> per_depth;
            for (const auto& [key, d] : g.depth) ++per_depth[d];
            Json counts = Json::array();
            for (const auto& [d, c] : per_depth) counts.push_back(c);
            Json doc = {{"command", command},
                        {"nodes", g.nodes.size()},
                        {"edges", g.edges.size()},
                        {"closed", g.closed},
                        {"nodes_per_depth", counts},
                        {"cluster_variables", variable_inventory(g).size()}};
            out << doc.dump(2) << "\n";
            if (!out_path.empty()) write_json_file(out_path, graph_to_json(g));
            return kExitPass;
        }
        if (tw->parsed()) {
            TwistResult r = twist(load_seed(seed_path));
            Json seq = Json::array();
            for (int k : r.sequence) seq.push_back(k + 1);
            out << Json{{"command", command}, {"sequence", seq}, {"seed", seed_to_json(r.seed)}}.dump(2) << "\n";
            return kExitPass;
        }
        if (chr->parsed()) {
            Json doc = run_document(command, {verify_abelian_sequences(window)});
            out << doc.dump(2) << "\n";
            return doc["exit_status"].get<int>();
        }
        if (prs->parsed()) {
            auto rows = enumerate_box(n, lo, hi);
            if (pairs_json) {
                Json arr = Json::array();
                for (const auto& p : rows) arr.push_back(pair_to_json(p));
                out << Json{{"command", command}, {"count", rows.size()}, {"pairs", arr}}.dump(2) << "\n";
            } else {
                auto tuple = [](const std::vector<int>& v) {
                    std::string s = "(";
                    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
                    return s + ")";
                };
                for (const auto& p : rows) out << "lambda=" << tuple(p.lambda) << " mu=" << tuple(p.mu) << "\n";
            }
            return kExitPass;
        }
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SeedError& e) {
        err << "invalid seed: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace qcluster
