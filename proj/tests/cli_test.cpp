#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "rsup/io.hpp"
#include "support.hpp"

using namespace rsup;
using namespace rsup::test;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(RSUP_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe))
        r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "rsup_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string sf_dir() {
    return fixture_dir() + "/small_factory";
}

} // namespace

TEST_CASE("cli sync: product of the two machines matches the library") {
    fs::path out = temp_dir() / "m1m2.gen";
    RunResult r = run_cli("sync " + sf_dir() + "/m1.gen " + sf_dir() + "/m2.gen -o " +
                          out.string());
    CHECK(r.exit_code == 0);
    Generator from_cli = read_generator(out);
    SmallFactory sf = small_factory();
    Generator expect = sync({&sf.m1, &sf.m2}).generator;
    CHECK(from_cli.same_structure(expect));
    CHECK(fs::exists(out.string() + ".map.json"));
}

TEST_CASE("cli sync: single file canonicalizes itself") {
    fs::path out = temp_dir() / "m1_canon.gen";
    RunResult r = run_cli("sync " + sf_dir() + "/m1.gen -o " + out.string());
    CHECK(r.exit_code == 0);
    SmallFactory sf = small_factory();
    CHECK(read_generator(out).same_structure(canonical_renumber(sf.m1).generator));
}

TEST_CASE("cli sync: conflicting controllability exits 3") {
    fs::path dir = temp_dir();
    fs::path a = dir / "confl_a.gen";
    fs::path b = dir / "confl_b.gen";
    write_generator(make_gen("a", {ev(5, true)}, 1, 0, {0}, {{0, 5, 0}}), a);
    write_generator(make_gen("b", {ev(5, false)}, 1, 0, {0}, {{0, 5, 0}}), b);
    RunResult r = run_cli("sync " + a.string() + " " + b.string() + " -o " +
                          (dir / "confl.gen").string());
    CHECK(r.exit_code == 3);
}

TEST_CASE("cli sync: parse failure exits 2") {
    fs::path bad = temp_dir() / "bad.gen";
    write_text_file(bad, "{ not json");
    RunResult r = run_cli("sync " + bad.string() + " -o " + (temp_dir() / "x.gen").string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli supcon: empty result exits 0 with a warning") {
    fs::path dir = temp_dir();
    fs::path plant = dir / "plant.gen";
    fs::path spec = dir / "spec.gen";
    write_generator(make_gen("p", {ev(2, false)}, 2, 0, {1}, {{0, 2, 1}}), plant);
    write_generator(make_gen("e", {ev(2, false)}, 1, 0, {}, {}), spec);
    RunResult r = run_cli("supcon --plant " + plant.string() + " --spec " + spec.string() +
                          " -o " + (dir / "sup.gen").string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("warning") != std::string::npos);
    CHECK(read_generator(dir / "sup.gen").is_empty());
}

TEST_CASE("cli supcon: spec alphabet outside the plant exits 3") {
    fs::path dir = temp_dir();
    fs::path plant = dir / "plant2.gen";
    fs::path spec = dir / "spec2.gen";
    write_generator(make_gen("p", {ev(1, true)}, 1, 0, {0}, {{0, 1, 0}}), plant);
    write_generator(make_gen("e", {ev(9, true)}, 1, 0, {0}, {{0, 9, 0}}), spec);
    RunResult r = run_cli("supcon --plant " + plant.string() + " --spec " + spec.string() +
                          " -o " + (dir / "sup2.gen").string());
    CHECK(r.exit_code == 3);
}

TEST_CASE("cli rsup: small factory summary reports a controllable supervisor") {
    fs::path outdir = temp_dir() / "sf_out";
    RunResult r = run_cli("rsup --manifest " + sf_dir() + "/manifest.json --outdir " +
                          outdir.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("controllable: yes") != std::string::npos);
    SmallFactory sf = small_factory();
    Generator rsup_cli = read_generator(outdir / "rsup.gen");
    CHECK(rsup_cli.same_structure(sf.build().supervisor));
    CHECK(rsup_cli.state_count() == 78);
    CHECK(fs::exists(outdir / "gmode.gen"));
    CHECK(fs::exists(outdir / "summary.txt"));
}

TEST_CASE("cli rsup: a switchless manifest reproduces the classical supcon pipeline") {
    fs::path dir = temp_dir() / "single_mode";
    fs::create_directories(dir);
    // Manifest with the factory components, one configuration, no switch
    // events, ungated protection specs.
    write_text_file(dir / "manifest.json", R"({
      "components": [
        {"name": "M1", "file": ")" + sf_dir() + R"(/m1.gen"},
        {"name": "M2", "file": ")" + sf_dir() + R"(/m2.gen"},
        {"name": "BUF1", "file": ")" + sf_dir() + R"(/buf1.gen"},
        {"name": "BUF2", "file": ")" + sf_dir() + R"(/buf2.gen"}
      ],
      "plant": ["M1", "M2"],
      "configurations": [{"name": "C1", "components": ["M1", "M2", "BUF1", "BUF2"]}],
      "initial_configuration": "C1",
      "behavioral_specs": [")" + sf_dir() + R"(/buf1.gen", ")" + sf_dir() + R"(/buf2.gen"]
    })");
    fs::path outdir = dir / "out";
    CHECK(run_cli("rsup --manifest " + (dir / "manifest.json").string() + " --outdir " +
                  outdir.string())
              .exit_code == 0);

    // The same synthesis assembled by hand from the other subcommands.
    fs::path all = dir / "all.gen";
    fs::path padded = dir / "padded.gen";
    fs::path sup = dir / "sup.gen";
    CHECK(run_cli("allevents " + (outdir / "gmode.gen").string() + " -o " + all.string())
              .exit_code == 0);
    CHECK(run_cli("sync " + all.string() + " " + sf_dir() + "/buf1.gen " + sf_dir() +
                  "/buf2.gen -o " + padded.string())
              .exit_code == 0);
    CHECK(run_cli("supcon --plant " + (outdir / "gmode.gen").string() + " --spec " +
                  padded.string() + " -o " + sup.string())
              .exit_code == 0);
    CHECK(read_generator(sup).same_structure(read_generator(outdir / "rsup.gen")));
}

TEST_CASE("cli rsup: deterministic outputs") {
    fs::path out1 = temp_dir() / "det1";
    fs::path out2 = temp_dir() / "det2";
    CHECK(run_cli("rsup --manifest " + sf_dir() + "/manifest.json --outdir " + out1.string())
              .exit_code == 0);
    CHECK(run_cli("rsup --manifest " + sf_dir() + "/manifest.json --outdir " + out2.string())
              .exit_code == 0);
    CHECK(read_text_file(out1 / "rsup.gen") == read_text_file(out2 / "rsup.gen"));
    CHECK(read_text_file(out1 / "summary.txt") == read_text_file(out2 / "summary.txt"));
}

TEST_CASE("cli supcon: GMode with the padded spec yields the 78-state supervisor file") {
    fs::path dir = temp_dir() / "supcon_gmode";
    fs::create_directories(dir);
    fs::path outdir = dir / "pipeline";
    REQUIRE(run_cli("rsup --manifest " + sf_dir() + "/manifest.json --outdir " +
                    outdir.string())
                .exit_code == 0);
    fs::path all = dir / "all.gen";
    fs::path padded = dir / "padded.gen";
    fs::path sup = dir / "sup.gen";
    REQUIRE(run_cli("allevents " + (outdir / "gmode.gen").string() + " -o " + all.string())
                .exit_code == 0);
    REQUIRE(run_cli("sync " + all.string() + " " + sf_dir() + "/buf1_prot.gen " + sf_dir() +
                    "/buf2_prot.gen -o " + padded.string())
                .exit_code == 0);
    RunResult r = run_cli("supcon --plant " + (outdir / "gmode.gen").string() + " --spec " +
                          padded.string() + " -o " + sup.string());
    CHECK(r.exit_code == 0);
    Generator supervisor = read_generator(sup);
    CHECK(supervisor.state_count() == 78);
    CHECK(supervisor.same_structure(read_generator(outdir / "rsup.gen")));
    CHECK(fs::exists(sup.string() + ".disabled.json"));
}

TEST_CASE("cli rsup: --json summary is machine readable") {
    fs::path outdir = temp_dir() / "sf_json";
    RunResult r = run_cli("rsup --json --manifest " + sf_dir() + "/manifest.json --outdir " +
                          outdir.string());
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc["supervisor"]["states"] == 78);
    CHECK(doc["supervisor"]["controllable"] == true);
    CHECK(doc["supervisor"]["empty"] == false);
    CHECK(fs::exists(outdir / "summary.json"));
}

TEST_CASE("cli rsup: manifest errors exit 2") {
    fs::path bad = temp_dir() / "bad_manifest.json";
    write_text_file(bad, R"({"components": []})");
    RunResult r = run_cli("rsup --manifest " + bad.string() + " --outdir " +
                          (temp_dir() / "nowhere").string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli rs-build: writes the RS automaton") {
    fs::path out = temp_dir() / "rs.gen";
    RunResult r = run_cli("rs-build --manifest " + sf_dir() + "/manifest.json -o " +
                          out.string());
    CHECK(r.exit_code == 0);
    SmallFactory sf = small_factory();
    CHECK(read_generator(out) == sf.rs().automaton);
}

TEST_CASE("cli allevents") {
    fs::path out = temp_dir() / "m1_all.gen";
    RunResult r = run_cli("allevents " + sf_dir() + "/m1.gen -o " + out.string());
    CHECK(r.exit_code == 0);
    Generator g = read_generator(out);
    CHECK(g.state_count() == 1);
    CHECK(g.transition_count() == 5);
}

TEST_CASE("cli solve: the reference scenario exits 0 and lists the shortest path first") {
    RunResult r = run_cli("solve --manifest " + sf_dir() +
                          "/manifest.json --from \"11 30 31 22 11 30 11 30 11 30\" --event 91");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verdict: SOLVABLE") != std::string::npos);
    CHECK(r.output.find("path 1 (length 6") != std::string::npos);
    CHECK(r.output.find("23 31 20 31 20 31") != std::string::npos);
}

TEST_CASE("cli solve: paper-literal mode output is a subset of the default") {
    RunResult all = run_cli("solve --json --manifest " + sf_dir() +
                            "/manifest.json --from \"11 30 31 22\" --event 91");
    RunResult lit = run_cli("solve --json --manifest " + sf_dir() +
                            "/manifest.json --from \"11 30 31 22\" --event 91 "
                            "--mode paper-literal");
    CHECK(all.exit_code == 0);
    CHECK(lit.exit_code == 0);

    auto paths_of = [](const std::string& text) {
        nlohmann::json doc = nlohmann::json::parse(text);
        std::set<std::string> out;
        for (const auto& target : doc["targets"])
            for (const auto& p : target["paths"])
                out.insert(target["state"].dump() + ":" + p["events"].dump());
        return out;
    };
    std::set<std::string> a = paths_of(all.output);
    std::set<std::string> l = paths_of(lit.output);
    CHECK(std::includes(a.begin(), a.end(), l.begin(), l.end()));
    CHECK_FALSE(l.empty());
}

TEST_CASE("cli solve: dropped reverse switch under the one-way RS exits 1") {
    // 93 is declared in the manifest but the one-way RS drops it, so it is
    // enabled nowhere.
    RunResult r = run_cli("solve --manifest " + sf_dir() +
                          "/manifest_one_way.json --from \"\" --event 93");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("UNSOLVABLE") != std::string::npos);
    CHECK(r.output.find("event nowhere enabled") != std::string::npos);
}

TEST_CASE("cli solve: a non-switch event exits 3") {
    RunResult r = run_cli("solve --manifest " + sf_dir() +
                          "/manifest.json --from \"\" --event 11");
    CHECK(r.exit_code == 3);
}

TEST_CASE("cli solve: --report writes the same text to a file") {
    fs::path report = temp_dir() / "solve_report.txt";
    RunResult r = run_cli("solve --manifest " + sf_dir() +
                          "/manifest.json --from \"11 30 31\" --event 91 --report " +
                          report.string());
    CHECK(r.exit_code == 0);
    CHECK(read_text_file(report) == r.output);
}

TEST_CASE("cli solve: invalid witness exits 2") {
    RunResult r = run_cli("solve --manifest " + sf_dir() +
                          "/manifest.json --from \"99 98\" --event 91");
    CHECK(r.exit_code == 2);
    RunResult r2 = run_cli("solve --manifest " + sf_dir() +
                           "/manifest.json --from \"11 oops\" --event 91");
    CHECK(r2.exit_code == 2);
}

TEST_CASE("cli dot: golden byte equality and determinism") {
    fs::path out = temp_dir() / "rs.dot";
    RunResult r = run_cli("dot " + sf_dir() + "/buf2.gen -o " + out.string());
    CHECK(r.exit_code == 0);
    const std::string golden = "digraph \"BUF2\" {\n"
                               "  rankdir=LR;\n"
                               "  __init [shape=point, label=\"\"];\n"
                               "  q0 [shape=doublecircle, label=\"0\"];\n"
                               "  q1 [shape=circle, label=\"1\"];\n"
                               "  __init -> q0;\n"
                               "  q0 -> q1 [label=\"m1_fill_buf2\"];\n"
                               "  q1 -> q0 [label=\"m2_take_buf2\"];\n"
                               "}\n";
    CHECK(read_text_file(out) == golden);
    RunResult again = run_cli("dot " + sf_dir() + "/buf2.gen");
    CHECK(again.exit_code == 0);
    CHECK(again.output == golden);
}

TEST_CASE("cli dot: parse failure exits 2") {
    fs::path bad = temp_dir() / "bad2.gen";
    write_text_file(bad, "[]");
    RunResult r = run_cli("dot " + bad.string());
    CHECK(r.exit_code == 2);
}
