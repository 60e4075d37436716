#include "cli.hpp"

#include <twinwidth/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace twinwidth::cli {

namespace {

    struct UsageError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    struct RepInput {
        std::string intervals;
        std::string chords;
        std::string kind;
    };

    struct Options {
        bool json = false;
        std::size_t iso_cap = 12;

        RepInput rep;
        std::string graph;
        std::string matrix;
        std::string seq;
        std::string script;
        std::string formula;
        std::string expr;
        std::string pi;
        std::size_t k = 0;
        std::size_t claim = 0;
        std::size_t cap = 10;
        std::size_t node_budget = 5'000'000;
        std::size_t fo_budget = 10'000'000;
        bool natural = false;

        std::size_t r = 1;
        std::optional<std::size_t> exponent;
        std::size_t u_exponent = 4;
        std::size_t z_cap = 0;
        std::size_t p = 1;
        std::size_t extra = 0;
        std::uint64_t seed = 0;
        bool seed_given = false;

        std::string construction;
        std::string mode = "sampled";
        std::size_t samples = 10'000;
        std::size_t script_budget = std::size_t{1} << 22;
        std::size_t kept = 10;
    };

    std::ifstream open(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw Error("cannot open " + path);
        return in;
    }

    std::string slurp(const std::string& path)
    {
        auto in = open(path);
        std::ostringstream text;
        text << in.rdbuf();
        return text.str();
    }

    // drops `#` comment lines
    std::string strip_comments(const std::string& text)
    {
        std::istringstream in(text);
        std::string line, out;
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] != '#')
                out += line + '\n';
        }
        return out;
    }

    Graph load_graph(const std::string& path)
    {
        auto in = open(path);
        return read_graph(in);
    }

    IntervalLikeRep load_rep(const RepInput& in, std::optional<RepKind> forced = std::nullopt)
    {
        if (in.intervals.empty() == in.chords.empty())
            throw UsageError("give exactly one of --intervals and --chords");
        std::optional<RepKind> kind;
        if (!in.kind.empty())
            kind = parse_kind(in.kind);
        if (forced && kind && *kind != *forced)
            throw UsageError("this command needs --kind " + to_string(*forced));
        if (forced)
            kind = forced;
        if (!in.intervals.empty()) {
            auto file = open(in.intervals);
            return rep_from_intervals(read_intervals(file), kind.value_or(RepKind::Interval));
        }
        auto file = open(in.chords);
        IntervalLikeRep rep = rep_from_chords(read_chords(file));
        return kind ? rep.with_kind(*kind) : rep;
    }

    void add_rep_options(CLI::App* app, RepInput& in)
    {
        app->add_option("--intervals", in.intervals, "interval file (.ivl)")->check(CLI::ExistingFile);
        app->add_option("--chords", in.chords, "chord diagram file (.chd)")->check(CLI::ExistingFile);
        app->add_option("--kind", in.kind, "interval or overlap")->check(CLI::IsMember({"interval", "overlap"}));
    }

    void write_rep(std::ostream& out, const IntervalLikeRep& rep)
    {
        out << "rep " << to_string(rep.kind()) << ' ' << rep.ends().size() << ' ' << rep.pairs().size() << '\n';
        out << "ends";
        for (const auto& e : rep.ends())
            out << ' ' << e;
        out << '\n';
        for (const auto& p : rep.pairs())
            out << "pair " << p.label << ' ' << rep.ends()[p.s1] << ' ' << rep.ends()[p.s2] << '\n';
    }

    void write_list(std::ostream& out, std::string_view tag, const std::vector<std::string>& items)
    {
        out << tag;
        for (const auto& s : items)
            out << ' ' << s;
        out << '\n';
    }

    template <typename T>
    void write_numbers(std::ostream& out, std::string_view tag, const std::vector<T>& items)
    {
        out << tag;
        for (const auto& x : items)
            out << ' ' << x;
        out << '\n';
    }

    IsomorphismOptions iso(const Options& o) { return {o.iso_cap}; }

    int emit(std::ostream& out, const Json& j)
    {
        out << j.dump() << '\n';
        return 0;
    }

    int cmd_decode(const Options& o, std::ostream& out)
    {
        Graph g = decode(load_rep(o.rep));
        if (o.json)
            return emit(out, to_json(g));
        write_graph(out, g);
        return 0;
    }

    int cmd_ilmatrix(const Options& o, std::ostream& out)
    {
        IlMatrix m = build_ilmatrix(load_rep(o.rep));
        if (o.json)
            return emit(out, to_json(m.matrix));
        write_matrix(out, m.matrix);
        return 0;
    }

    int cmd_condense(const Options& o, std::ostream& out)
    {
        IntervalLikeRep rep = load_rep(o.rep);
        IntervalLikeRep c = condense(rep, {iso(o), o.natural});
        if (o.json) {
            Json j = to_json(c);
            j["ends_before"] = rep.ends().size();
            return emit(out, j);
        }
        write_rep(out, c);
        return 0;
    }

    int cmd_mixed_minor(const Options& o, std::ostream& out)
    {
        auto in = open(o.matrix);
        TriMatrix m = read_matrix(in);
        auto w = find_mixed_minor(m, o.k);
        if (o.json)
            return emit(out, mixed_minor_json(m, o.k, w));
        if (!w) {
            out << "no " << o.k << "-mixed minor\n";
            return 0;
        }
        out << o.k << "-mixed minor\n";
        write_numbers(out, "row_starts", w->division.row_starts);
        write_numbers(out, "col_starts", w->division.col_starts);
        for (const auto& z : w->zones)
            out << "zone " << z.row_a << ' ' << z.row_b << ' ' << z.col_a << ' ' << z.col_b << '\n';
        return 0;
    }

    int print_solve(const Options& o, std::ostream& out, const SolveResult& result)
    {
        if (o.json)
            return emit(out, to_json(result));
        out << "twin-width " << result.value << (result.optimal ? " optimal" : " upper bound") << '\n';
        write_sequence(out, result.sequence);
        return 0;
    }

    int cmd_tww_exact(const Options& o, std::ostream& out)
    {
        return print_solve(o, out, twinwidth_exact(load_graph(o.graph), {o.cap, o.node_budget}));
    }

    int cmd_tww_greedy(const Options& o, std::ostream& out)
    {
        return print_solve(o, out, twinwidth_greedy(load_graph(o.graph)));
    }

    int cmd_tww_verify(const Options& o, std::ostream& out)
    {
        Graph g = load_graph(o.graph);
        auto in = open(o.seq);
        bool ok = verify_sequence(g, read_sequence(in), o.claim);
        emit(out, Json{{"verified", ok}});
        return ok ? 0 : 1;
    }

    int verdict_exit(const Json& j) { return j.value("verification", "fail") == "pass" ? 0 : 1; }

    int cmd_extract_perm(const Options& o, std::ostream& out)
    {
        IlMatrix m = build_ilmatrix(load_rep(o.rep));
        auto w = extract_perm_submatrix(m, Permutation::parse(o.pi));
        Json j = witness_json(m, w);
        if (o.json) {
            emit(out, j);
        } else {
            out << "permutation " << w.pi.to_string() << '\n';
            write_list(out, "rows", w.row_keys);
            write_list(out, "cols", w.col_keys);
            out << "verification " << j["verification"].get<std::string>() << '\n';
        }
        return verdict_exit(j);
    }

    int cmd_extract_circle(const Options& o, std::ostream& out)
    {
        IntervalLikeRep rep = load_rep(o.rep, RepKind::Overlap);
        Graph g = decode(rep);
        auto w = circle_permutation_witness(g, rep, Permutation::parse(o.pi));
        Json j = witness_json(g, w);
        if (o.json) {
            emit(out, j);
        } else {
            out << "permutation " << w.submatrix.pi.complement().to_string() << '\n';
            write_list(out, "vertices", w.vertices);
            out << "verification " << j["verification"].get<std::string>() << '\n';
        }
        return verdict_exit(j);
    }

    int cmd_extract_exposure(const Options& o, std::ostream& out)
    {
        IntervalLikeRep rep = condense(load_rep(o.rep, RepKind::Interval), {iso(o), o.natural});
        Graph g = decode(rep);
        auto w = interval_exposure_witness(g, rep, Permutation::parse(o.pi));
        Json j = witness_json(w);
        if (o.json) {
            emit(out, j);
        } else {
            out << "permutation " << w.pi.to_string() << '\n';
            write_list(out, "w", w.w);
            write_list(out, "w1", w.mates1);
            write_list(out, "w2", w.mates2);
            out << "verification " << j["verification"].get<std::string>() << '\n';
        }
        return verdict_exit(j);
    }

    int cmd_generate_permgraph(const Options& o, std::ostream& out)
    {
        Graph g = permutation_graph(Permutation::parse(o.pi));
        if (o.json)
            return emit(out, to_json(g));
        write_graph(out, g);
        return 0;
    }

    int cmd_generate_exposer(const Options& o, std::ostream& out)
    {
        Exposer e = generate_exposer(Permutation::parse(o.pi));
        if (o.json) {
            Json j = {{"type", "exposer"},
                      {"permutation", to_json(e.witness.pi)},
                      {"intervals", to_json(e.model)["intervals"]},
                      {"w", e.w},
                      {"w1", e.w1},
                      {"w2", e.w2}};
            return emit(out, j);
        }
        write_intervals(out, e.model);
        return 0;
    }

    HPlusOptions hplus_options(const Options& o)
    {
        HPlusOptions h;
        h.exponent = o.exponent;
        h.u_exponent = o.u_exponent;
        if (o.z_cap) {
            h.circle_cap = o.z_cap;
            h.interval_cap = o.z_cap;
        }
        return h;
    }

    int cmd_generate_hplus_circle(const Options& o, std::ostream& out)
    {
        HPlusCircle h = build_hplus_circle(Permutation::parse(o.pi), o.r, hplus_options(o));
        if (o.json)
            return emit(out, to_json(h.graph));
        write_graph(out, h.graph, "hplus");
        return 0;
    }

    int cmd_generate_hplus_interval(const Options& o, std::ostream& out)
    {
        HPlusInterval h = build_hplus_interval(Permutation::parse(o.pi), o.r, hplus_options(o));
        IntervalModel m = h.model();
        if (o.json)
            return emit(out, to_json(m));
        write_intervals(out, m);
        return 0;
    }

    int cmd_generate_planted(const Options& o, std::ostream& out)
    {
        IntervalModel m = planted_grid_model(planted_grid_size(o.p), o.extra, o.seed);
        if (o.json)
            return emit(out, to_json(m));
        write_intervals(out, m);
        return 0;
    }

    int cmd_perturb(const Options& o, std::ostream& out)
    {
        Graph g = load_graph(o.graph);
        auto in = open(o.script);
        Graph h = apply_perturbation(g, read_script(in));
        if (o.json)
            return emit(out, to_json(h));
        write_graph(out, h, "perturbed");
        return 0;
    }

    int cmd_robustness(const Options& o, std::ostream& out)
    {
        RobustnessOptions ro;
        ro.mode = o.mode == "exhaustive" ? RobustnessMode::Exhaustive : RobustnessMode::Sampled;
        if (ro.mode == RobustnessMode::Sampled && !o.seed_given)
            throw UsageError("--seed is required in sampled mode");
        ro.samples = o.samples;
        ro.seed = o.seed;
        ro.script_budget = o.script_budget;
        ro.kept_failures = o.kept;
        const Permutation pi = Permutation::parse(o.pi);
        RobustnessReport report = o.construction == "circle"
                                      ? verify_robustness(build_hplus_circle(pi, o.r, hplus_options(o)), ro)
                                      : verify_robustness(build_hplus_interval(pi, o.r, hplus_options(o)), ro);
        if (o.json) {
            emit(out, to_json(report));
        } else {
            out << report.construction << " pi=" << report.pi.to_string() << " r=" << report.r
                << " |Z|=" << report.z_size << " vertices=" << report.vertices << '\n';
            out << to_string(report.mode) << " scripts=" << report.scripts_tested
                << " failures=" << report.failure_count << '\n';
            for (const auto& f : report.failures)
                out << "failure " << f.script_number << ": " << f.reason << '\n';
        }
        return report.failure_count == 0 ? 0 : 1;
    }

    int cmd_fo_check(const Options& o, std::ostream& out)
    {
        if (o.formula.empty() == o.expr.empty())
            throw UsageError("give exactly one of --formula and --expr");
        FormulaPtr f = parse_formula(o.formula.empty() ? o.expr : strip_comments(slurp(o.formula)));
        EvalOptions eo{o.fo_budget};
        if (!o.graph.empty()) {
            if (!o.rep.intervals.empty() || !o.rep.chords.empty())
                throw UsageError("give either --graph or a representation");
            bool value = evaluate(structure_of_graph(load_graph(o.graph)), f, {}, eo);
            if (o.json)
                return emit(out, Json{{"type", "fo-check"}, {"value", value}});
            out << (value ? "true" : "false") << '\n';
            return 0;
        }
        PipelineResult result = modelcheck_pipeline(load_rep(o.rep), f, eo);
        if (o.json)
            return emit(out, to_json(result));
        out << (result.value ? "true" : "false") << '\n';
        return 0;
    }

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Twin-width tools for interval and circle graphs", "twinwidth"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "machine-readable JSON output");
    app.add_option("--iso-cap", o.iso_cap, "isomorphism test vertex cap")->capture_default_str();

    std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers;
    auto leaf = [&](CLI::App* parent, const char* name, const char* about, auto handler) {
        CLI::App* sub = parent->add_subcommand(name, about);
        sub->fallthrough();
        handlers[sub] = handler;
        return sub;
    };
    auto group = [&](const char* name, const char* about) {
        CLI::App* sub = app.add_subcommand(name, about);
        sub->require_subcommand(1);
        sub->fallthrough();
        return sub;
    };
    auto need = [](CLI::Option* opt) { return opt->required(); };

    auto* decode_cmd = leaf(&app, "decode", "graph of a representation", cmd_decode);
    add_rep_options(decode_cmd, o.rep);

    auto* ilmatrix_cmd = leaf(&app, "ilmatrix", "il-representation matrix", cmd_ilmatrix);
    add_rep_options(ilmatrix_cmd, o.rep);

    auto* condense_cmd = leaf(&app, "condense", "condense a representation", cmd_condense);
    add_rep_options(condense_cmd, o.rep);
    condense_cmd->add_flag("--natural-above-cap", o.natural, "above the isomorphism cap, compare labelled graphs");

    auto* mm_cmd = leaf(&app, "mixed-minor", "search for a k-mixed minor", cmd_mixed_minor);
    need(mm_cmd->add_option("--matrix", o.matrix, "matrix file (.mat)")->check(CLI::ExistingFile));
    need(mm_cmd->add_option("--k", o.k, "minor size")->check(CLI::PositiveNumber));

    auto* tww = group("tww", "twin-width of a graph");
    auto* exact_cmd = leaf(tww, "exact", "exact value (desk scale)", cmd_tww_exact);
    need(exact_cmd->add_option("--graph", o.graph, "graph file (.g)")->check(CLI::ExistingFile));
    exact_cmd->add_option("--cap", o.cap, "vertex cap")->capture_default_str();
    exact_cmd->add_option("--budget", o.node_budget, "search node budget")->capture_default_str();
    auto* greedy_cmd = leaf(tww, "greedy", "greedy upper bound", cmd_tww_greedy);
    need(greedy_cmd->add_option("--graph", o.graph, "graph file (.g)")->check(CLI::ExistingFile));
    auto* verify_cmd = leaf(tww, "verify", "check a contraction sequence", cmd_tww_verify);
    need(verify_cmd->add_option("--graph", o.graph, "graph file (.g)")->check(CLI::ExistingFile));
    need(verify_cmd->add_option("--seq", o.seq, "sequence file (.seq)")->check(CLI::ExistingFile));
    need(verify_cmd->add_option("--claim", o.claim, "claimed width"));

    auto* extract = group("extract", "obstruction certificates");
    auto* perm_cmd = leaf(extract, "perm-submatrix", "permutation submatrix of the il-matrix", cmd_extract_perm);
    auto* circle_cmd = leaf(extract, "circle-witness", "induced permutation graph in a circle graph", cmd_extract_circle);
    auto* exposure_cmd = leaf(extract, "exposure", "exposure witness in an interval graph", cmd_extract_exposure);
    for (auto* sub : {perm_cmd, circle_cmd, exposure_cmd}) {
        add_rep_options(sub, o.rep);
        need(sub->add_option("--pi", o.pi, "permutation in one-line notation"));
    }
    exposure_cmd->add_flag("--natural-above-cap", o.natural, "above the isomorphism cap, compare labelled graphs");

    auto* generate = group("generate", "generators");
    auto* permgraph_cmd = leaf(generate, "permgraph", "permutation graph", cmd_generate_permgraph);
    auto* exposer_cmd = leaf(generate, "exposer", "interval exposer of a permutation", cmd_generate_exposer);
    auto* hc_cmd = leaf(generate, "hplus-circle", "robust circle construction", cmd_generate_hplus_circle);
    auto* hi_cmd = leaf(generate, "hplus-interval", "robust interval construction", cmd_generate_hplus_interval);
    auto* planted_cmd = leaf(generate, "planted", "interval grid with a planted mixed minor", cmd_generate_planted);
    for (auto* sub : {permgraph_cmd, exposer_cmd, hc_cmd, hi_cmd})
        need(sub->add_option("--pi", o.pi, "permutation in one-line notation"));

    auto* robust_cmd = leaf(&app, "robustness", "check a construction against perturbations", cmd_robustness);
    need(robust_cmd->add_option("--construction", o.construction, "circle or interval")
             ->check(CLI::IsMember({"circle", "interval"})));
    need(robust_cmd->add_option("--pi", o.pi, "permutation in one-line notation"));
    robust_cmd->add_option("--mode", o.mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}))
        ->capture_default_str();
    robust_cmd->add_option("--samples", o.samples, "scripts in sampled mode")->capture_default_str();
    robust_cmd->add_option("--script-budget", o.script_budget, "script cap in exhaustive mode")->capture_default_str();
    robust_cmd->add_option("--kept-failures", o.kept, "failures listed in the report")->capture_default_str();

    for (auto* sub : {hc_cmd, hi_cmd, robust_cmd}) {
        sub->add_option("--r", o.r, "number of perturbation sets")->capture_default_str();
        sub->add_option("--exponent", o.exponent, "exponent s of Z (default 2^r)");
        sub->add_option("--z-cap", o.z_cap, "cap on |Z|");
    }
    for (auto* sub : {hi_cmd, robust_cmd})
        sub->add_option("--u-exponent", o.u_exponent, "exponent of U in the interval construction")->capture_default_str();
    for (auto* sub : {planted_cmd, robust_cmd})
        sub->add_option("--seed", o.seed, "random seed");
    need(planted_cmd->add_option("--p", o.p, "permutation size the grid must host"));
    planted_cmd->add_option("--extra", o.extra, "random extra intervals")->capture_default_str();

    auto* perturb_cmd = leaf(&app, "perturb", "apply a perturbation script", cmd_perturb);
    need(perturb_cmd->add_option("--graph", o.graph, "graph file (.g)")->check(CLI::ExistingFile));
    need(perturb_cmd->add_option("--script", o.script, "script file")->check(CLI::ExistingFile));

    auto* fo_cmd = leaf(&app, "fo-check", "evaluate a first-order sentence", cmd_fo_check);
    fo_cmd->add_option("--formula", o.formula, "formula file (.fo)")->check(CLI::ExistingFile);
    fo_cmd->add_option("--expr", o.expr, "formula text");
    fo_cmd->add_option("--graph", o.graph, "graph file (.g)")->check(CLI::ExistingFile);
    add_rep_options(fo_cmd, o.rep);
    fo_cmd->add_option("--budget", o.fo_budget, "quantifier instantiation budget")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    o.seed_given = robust_cmd->count("--seed") > 0;

    int (*handler)(const Options&, std::ostream&) = nullptr;
    for (const auto& [sub, h] : handlers)
        if (sub->parsed())
            handler = h;
    if (!handler) {
        err << "no command given\n" << app.help();
        return 2;
    }

    try {
        return handler(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << " (raise the cap flag to go further)\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace twinwidth::cli
