// rsup: synthesis and solvability toolkit for reconfigurable discrete-event
// systems. Subcommands: sync, supcon, allevents, rs-build, rsup, solve, dot.
//
// Exit codes: 0 success (solve: solvable), 1 solve: unsolvable,
// 2 input/parse error, 3 precondition violation.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsup/dot.hpp"
#include "rsup/errors.hpp"
#include "rsup/io.hpp"
#include "rsup/manifest.hpp"
#include "rsup/ops.hpp"
#include "rsup/report.hpp"

namespace fs = std::filesystem;
using namespace rsup;

namespace {

Word parse_witness(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(tok, &pos);
            if (pos != tok.size())
                throw std::invalid_argument(tok);
            w.push_back(static_cast<EventId>(v));
        } catch (const std::exception&) {
            throw ParseError("witness string: '" + tok + "' is not an event id");
        }
    }
    return w;
}

int cmd_sync(const std::vector<std::string>& files, const std::string& out_file) {
    std::vector<Generator> parts;
    for (const std::string& f : files)
        parts.push_back(read_generator(f));
    DerivedGenerator product = sync(std::span<const Generator>(parts));
    write_generator(product.generator, out_file);
    write_state_map(product.map, out_file + ".map.json");
    std::cout << "wrote " << out_file << " (" << product.generator.state_count() << " states, "
              << product.generator.transition_count() << " transitions)\n";
    return 0;
}

int cmd_supcon(const std::string& plant_file, const std::string& spec_file,
               const std::string& out_file, bool json_out) {
    Generator plant = read_generator(plant_file);
    Generator spec = read_generator(spec_file);
    SupconResult result = supcon(plant, spec);
    write_generator(result.supervisor, out_file);
    write_state_map(result.plant_map, out_file + ".plant-map.json");
    write_state_map(result.spec_map, out_file + ".spec-map.json");
    {
        nlohmann::json sidecar;
        sidecar["disabled"] = result.disabled;
        write_text_file(out_file + ".disabled.json", sidecar.dump(2) + "\n");
    }
    SynthesisSummary summary = summarize(plant, spec, result);
    std::cout << (json_out ? summary_json(summary) : summary_text(summary));
    return 0;
}

int cmd_allevents(const std::string& file, const std::string& out_file) {
    Generator g = read_generator(file);
    write_generator(allevents(g), out_file);
    return 0;
}

int cmd_rs_build(const std::string& manifest_file, const std::string& out_file) {
    Manifest m = read_manifest(manifest_file);
    std::vector<Generator> pool;
    for (const Manifest::Component& c : m.components)
        pool.push_back(read_generator(c.file));
    RsOptions opts;
    opts.one_way = m.options.one_way;
    opts.marked_configs = m.options.marked_configurations;
    ReconfigSpec rs = build_rs(pool, m.configurations, m.switch_events, m.initial_configuration,
                               opts);
    write_generator(rs.automaton, out_file);
    std::cout << "wrote " << out_file << " (" << rs.automaton.state_count()
              << " configurations)\n";
    return 0;
}

int cmd_rsup(const std::string& manifest_file, const std::string& outdir, bool json_out) {
    Manifest m = read_manifest(manifest_file);
    Pipeline p = run_pipeline(m);
    fs::create_directories(outdir);
    write_generator(p.rs.automaton, fs::path(outdir) / "rs.gen");
    write_generator(p.gmode.generator, fs::path(outdir) / "gmode.gen");
    write_state_map(p.gmode.map, fs::path(outdir) / "gmode.map.json");
    write_generator(p.rsup.supervisor, fs::path(outdir) / "rsup.gen");
    write_state_map(p.rsup.plant_map, fs::path(outdir) / "rsup.plant-map.json");
    write_state_map(p.rsup.spec_map, fs::path(outdir) / "rsup.spec-map.json");
    {
        nlohmann::json sidecar;
        sidecar["disabled"] = p.rsup.disabled;
        write_text_file(fs::path(outdir) / "rsup.disabled.json", sidecar.dump(2) + "\n");
    }
    SynthesisSummary summary = summarize(p.gmode.generator, p.behavioral_spec, p.rsup);
    std::string text = json_out ? summary_json(summary) : summary_text(summary);
    write_text_file(fs::path(outdir) / (json_out ? "summary.json" : "summary.txt"), text);
    std::cout << text;
    return 0;
}

int cmd_solve(const std::string& manifest_file, const std::string& witness, bool witness_given,
              std::int64_t from_state, EventId event, const std::string& mode_name,
              const std::string& report_file, bool json_out) {
    Manifest m = read_manifest(manifest_file);
    Pipeline p = run_pipeline(m);
    const Generator& sup = p.rsup.supervisor;
    if (sup.is_empty())
        throw InputError("the synthesized supervisor is empty; nothing to solve");

    bool declared = std::any_of(m.switch_events.begin(), m.switch_events.end(),
                                [&](const SwitchEvent& s) { return s.event.id == event; });
    if (!declared)
        throw InputError("event " + std::to_string(event) +
                         " is not a switch event of the manifest");

    PcaMode mode = p.pca_mode;
    if (mode_name == "all-simple")
        mode = PcaMode::all_simple;
    else if (mode_name == "paper-literal")
        mode = PcaMode::paper_literal;
    else if (!mode_name.empty())
        throw ParseError("unknown mode '" + mode_name + "'");

    SolveReportInput report;
    report.event = event;
    if (!witness_given && from_state >= 0) {
        if (from_state >= sup.state_count())
            throw ParseError("state " + std::to_string(from_state) +
                             " out of range for the supervisor");
        report.source = static_cast<StateId>(from_state);
    } else {
        report.witness = parse_witness(witness);
        report.witness_given = true;
        auto q = replay(sup, report.witness);
        if (!q)
            throw ParseError("witness string does not replay in the supervisor");
        report.source = *q;
    }

    if (!sup.alphabet().contains(event)) {
        // Declared switch that synthesis dropped (e.g. one-way RS): nowhere enabled.
        report.result.solvable = false;
        report.result.reason = "event nowhere enabled";
    } else {
        report.result = solve_event(sup, report.source, event, p.preemption, mode);
    }
    std::string text = json_out ? solve_report_json(report) : solve_report_text(report);
    if (!report_file.empty())
        write_text_file(report_file, text);
    std::cout << text;
    return report.result.solvable ? 0 : 1;
}

int cmd_dot(const std::string& file, const std::string& out_file) {
    Generator g = read_generator(file);
    std::string dot = to_dot(g);
    if (out_file.empty())
        std::cout << dot;
    else
        write_text_file(out_file, dot);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reconfiguration supervisor toolkit for untimed discrete-event systems"};
    app.require_subcommand(1);
    app.fallthrough(); // parent flags like --json may follow the subcommand
    bool json_out = false;
    app.add_flag("--json", json_out, "structured JSON output instead of human text");

    auto* sync_cmd = app.add_subcommand("sync", "synchronous product of generator files");
    std::vector<std::string> sync_files;
    std::string sync_out;
    sync_cmd->add_option("files", sync_files, "generator files")->required()->expected(-1);
    sync_cmd->add_option("-o,--out", sync_out, "output file")->required();

    auto* supcon_cmd = app.add_subcommand("supcon", "supremal controllable sublanguage");
    std::string plant_file, spec_file, supcon_out;
    supcon_cmd->add_option("--plant", plant_file, "plant generator")->required();
    supcon_cmd->add_option("--spec", spec_file, "specification generator")->required();
    supcon_cmd->add_option("-o,--out", supcon_out, "supervisor output file")->required();

    auto* all_cmd = app.add_subcommand("allevents", "one-state selflooped generator");
    std::string all_in, all_out;
    all_cmd->add_option("file", all_in, "generator file")->required();
    all_cmd->add_option("-o,--out", all_out, "output file")->required();

    auto* rs_cmd = app.add_subcommand("rs-build", "build the reconfiguration specification");
    std::string rs_manifest, rs_out;
    rs_cmd->add_option("--manifest", rs_manifest, "project manifest")->required();
    rs_cmd->add_option("-o,--out", rs_out, "RS output file")->required();

    auto* rsup_cmd = app.add_subcommand("rsup", "run the full synthesis pipeline");
    std::string rsup_manifest, rsup_outdir;
    rsup_cmd->add_option("--manifest", rsup_manifest, "project manifest")->required();
    rsup_cmd->add_option("--outdir", rsup_outdir, "output directory")->required();

    auto* solve_cmd = app.add_subcommand("solve", "decide reconfiguration solvability");
    std::string solve_manifest, solve_witness, solve_mode, solve_report;
    std::int64_t solve_state = -1;
    EventId solve_ev = 0;
    solve_cmd->add_option("--manifest", solve_manifest, "project manifest")->required();
    solve_cmd->add_option("--from", solve_witness,
                          "witness event string locating the current state");
    solve_cmd->add_option("--from-state", solve_state, "current state index");
    solve_cmd->add_option("--event", solve_ev, "reconfiguration event id")->required();
    solve_cmd->add_option("--mode", solve_mode, "all-simple (default) or paper-literal");
    solve_cmd->add_option("--report", solve_report, "also write the report to this file");

    auto* dot_cmd = app.add_subcommand("dot", "export a generator to Graphviz");
    std::string dot_in, dot_out;
    dot_cmd->add_option("file", dot_in, "generator file")->required();
    dot_cmd->add_option("-o,--out", dot_out, "output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sync_cmd)
            return cmd_sync(sync_files, sync_out);
        if (*supcon_cmd)
            return cmd_supcon(plant_file, spec_file, supcon_out, json_out);
        if (*all_cmd)
            return cmd_allevents(all_in, all_out);
        if (*rs_cmd)
            return cmd_rs_build(rs_manifest, rs_out);
        if (*rsup_cmd)
            return cmd_rsup(rsup_manifest, rsup_outdir, json_out);
        if (*solve_cmd) {
            bool witness_given = solve_cmd->count("--from") > 0;
            if (!witness_given && solve_state < 0)
                throw ParseError("solve needs --from or --from-state");
            return cmd_solve(solve_manifest, solve_witness, witness_given, solve_state,
                             solve_ev, solve_mode, solve_report, json_out);
        }
        if (*dot_cmd)
            return cmd_dot(dot_in, dot_out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
