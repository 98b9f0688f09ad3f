// Runs the dualham binary (path baked in at build time) and checks exit codes
// and outputs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "dualham/io.hpp"

namespace fs = std::filesystem;
using namespace dualham;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string("\"") + DUALHAM_BIN + "\" " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("dualham_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen") {
    TempDir tmp;
    auto q3 = run("gen seed-ladder 1");
    CHECK(q3.code == 0);
    auto doc = io::instance_from_json(io::parse_json(q3.out));
    CHECK(doc.graph.vertex_count() == 8);
    CHECK(doc.provenance[0]["drawing"] == "ladder");

    CHECK(io::graph_from_text(run("gen hypercube 4").out).vertex_count() == 16);
    CHECK(io::graph_from_text(run("gen counterexample").out).vertex_count() == 8);
    CHECK(io::graph_from_text(run("gen grid 2 3 --edge-list").out).vertex_count() == 12);
    CHECK(run("gen seed-grid 4 5").code == 0);
    CHECK(run("gen nosuch 3").code == 64);
    CHECK(run("gen hypercube x").code == 64);
    CHECK(run("gen hypercube 40").code == 1);
    CHECK(run("gen seed-grid 1 1").code == 1);
}

TEST_CASE("verify") {
    TempDir tmp;
    auto path = tmp / "q3.json";
    REQUIRE(run("gen seed-ladder 1 -o " + path).code == 0);
    auto ok = run("verify " + path);
    CHECK(ok.code == 0);
    CHECK(ok.out.find("result: PASS") != std::string::npos);

    auto doc = io::instance_from_json(io::parse_json(io::read_file(path)));
    auto colors = doc.coloring.colors();
    colors[6] = opposite(colors[6]);
    auto flipped = doc;
    flipped.coloring = TwoColoring(colors);
    io::write_file(tmp / "flipped.json", io::canonical(io::instance_to_json(flipped)));
    auto bad = run("verify " + (tmp / "flipped.json"));
    CHECK(bad.code == 1);
    CHECK(bad.out.find("hamiltonian coloring: no") != std::string::npos);

    auto overlap = doc;
    overlap.quartet.j_red = overlap.quartet.i_red;
    io::write_file(tmp / "overlap.json", io::canonical(io::instance_to_json(overlap)));
    auto ov = run("verify " + (tmp / "overlap.json"));
    CHECK(ov.code == 1);
    CHECK(ov.out.find("quartet structure: no") != std::string::npos);

    io::write_file(tmp / "garbage.json", "{\"schema\":");
    CHECK(run("verify " + (tmp / "garbage.json")).code == 3);
    CHECK(run("verify " + (tmp / "missing.json")).code == 3);
}

TEST_CASE("lift") {
    TempDir tmp;
    REQUIRE(run("gen seed-ladder 1 -o " + (tmp / "q3.json")).code == 0);
    REQUIRE(run("gen path-tree 1 -o " + (tmp / "p1.json")).code == 0);
    REQUIRE(run("gen path-tree 4 -o " + (tmp / "p4.json")).code == 0);

    auto q4 = run("lift " + (tmp / "q3.json") + " " + (tmp / "p1.json"));
    CHECK(q4.code == 0);
    auto doc = io::instance_from_json(io::parse_json(q4.out));
    CHECK(doc.graph.vertex_count() == 16);
    CHECK(doc.provenance.size() == 2);
    CHECK(doc.fibers == io::FiberLayout{8, 2});

    auto p4 = run("lift " + (tmp / "q3.json") + " " + (tmp / "p4.json") + " --r 0 --l 4 -o " + (tmp / "q3p4.json"));
    CHECK(p4.code == 0);
    CHECK(run("verify " + (tmp / "q3p4.json")).code == 0);
    CHECK(io::instance_from_json(io::parse_json(io::read_file(tmp / "q3p4.json"))).graph.vertex_count() == 40);

    CHECK(run("lift " + (tmp / "q3.json") + " " + (tmp / "p4.json") + " --r 0 --l 0").code == 64);
    CHECK(run("lift " + (tmp / "q3.json") + " " + (tmp / "p4.json") + " --r 0 --l 2").code == 1);
    CHECK(run("lift " + (tmp / "q3.json") + " " + (tmp / "p4.json") + " --seed-order max-min").code == 0);
    CHECK(run("lift " + (tmp / "q3.json") + " " + (tmp / "p4.json") + " --seed-order sideways").code == 64);
}

TEST_CASE("solve and census") {
    TempDir tmp;
    REQUIRE(run("gen hypercube 3 -o " + (tmp / "q3.json")).code == 0);
    auto s = run("solve " + (tmp / "q3.json") + " --quartet");
    CHECK(s.code == 0);
    CHECK(io::parse_json(s.out)["status"] == "found");

    REQUIRE(run("gen hypercube 5 -o " + (tmp / "q5.json")).code == 0);
    CHECK(run("solve " + (tmp / "q5.json")).code == 64);

    REQUIRE(run("gen grid 3 3 -o " + (tmp / "g33.json")).code == 0);
    auto aborted = run("solve " + (tmp / "g33.json") + " --quartet --budget-nodes 5");
    CHECK(aborted.code == 2);
    CHECK(io::parse_json(aborted.out)["status"] == "aborted-budget");

    auto c = run("census complete:4,complete:5,cycle:5 -o " + (tmp / "census.json"));
    CHECK(c.code == 0);
    auto rows = io::parse_json(io::read_file(tmp / "census.json"))["rows"];
    CHECK(rows.size() == 3);
    CHECK(rows[1]["dual_hamiltonian"]["status"] == "none-exhaustive");
    CHECK(run("census bogus:1").code == 64);
}

TEST_CASE("cap override through the environment") {
    TempDir tmp;
    REQUIRE(run("gen hypercube 5 -o " + (tmp / "q5.json")).code == 0);
    std::string cmd = "DUALHAM_SOLVER_CAP=40 \"" + std::string(DUALHAM_BIN) + "\" solve " + (tmp / "q5.json") +
                      " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("export-dot and help") {
    TempDir tmp;
    REQUIRE(run("gen seed-ladder 1 -o " + (tmp / "q3.json")).code == 0);
    auto dot = run("export-dot " + (tmp / "q3.json"));
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("graph instance {", 0) == 0);
    auto help = run("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("dualham.instance/1") != std::string::npos);
    CHECK(run("").code == 64);
}
