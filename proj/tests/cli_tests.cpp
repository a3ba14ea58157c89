// Black-box tests for the `quandle` CLI. Every check runs the real binary
// (path in $QUANDLE_CLI, set by ctest) as a subprocess and inspects exit
// code and merged stdout/stderr; nothing here calls the library.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out; // stdout and stderr, merged
};

const char* cli_path() {
    const char* p = std::getenv("QUANDLE_CLI");
    REQUIRE_MESSAGE(p != nullptr, "QUANDLE_CLI must point at the quandle binary");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = std::string("\"") + cli_path() + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(status != -1);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

/// Scratch directory for table files, removed when the binary exits.
struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("quandle-cli-tests-" + std::to_string(getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
};

std::string write_file(const std::string& name, const std::string& content) {
    static Scratch scratch;
    fs::path p = scratch.dir / name;
    std::ofstream f(p, std::ios::binary);
    f << content;
    f.close();
    return "\"" + p.string() + "\"";
}

const std::string kTetrahedron = "4\n0 2 3 1\n3 1 0 2\n1 3 2 0\n2 0 1 3\n";
const std::string kNotIdempotent = "2\n1 0\n0 1\n"; // s_0 moves its own point

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("verify: valid table") {
    std::string f = write_file("tet.txt", kTetrahedron);
    RunResult r = run("verify " + f);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("quandle: yes") != std::string::npos);

    RunResult j = run("--json verify " + f);
    CHECK(j.exit_code == 0);
    CHECK(j.out == "{\"n\":4,\"q1_ok\":true,\"q2_ok\":true,\"q3_ok\":true,\"quandle\":true}\n");
}

TEST_CASE("verify: axiom violation exits 1 with witnesses") {
    std::string f = write_file("bad.txt", kNotIdempotent);
    RunResult r = run("verify " + f);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("quandle: no") != std::string::npos);

    RunResult j = run("--json verify " + f);
    CHECK(j.exit_code == 1);
    CHECK(j.out.find("\"q1_ok\":false") != std::string::npos);
    CHECK(j.out.find("\"quandle\":false") != std::string::npos);
    CHECK(j.out.find("\"q1_witness\":0") != std::string::npos);
}

TEST_CASE("verify: malformed input exits 2") {
    std::string f = write_file("short.txt", "3\n0 1\n");
    RunResult r = run("verify " + f);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("error:") != std::string::npos);

    RunResult missing = run("verify /no/such/file");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("analyze: structural report") {
    std::string tet = write_file("tet.txt", kTetrahedron);
    RunResult r = run("analyze " + tet);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("connected: true") != std::string::npos);
    CHECK(r.out.find("two_point_homogeneous: true") != std::string::npos);
    CHECK(r.out.find("cyclic_type: true") != std::string::npos);

    std::string d4 = write_file("dih4.txt", "4\n0 3 2 1\n2 1 0 3\n0 3 2 1\n2 1 0 3\n");
    RunResult r4 = run("analyze " + d4);
    CHECK(r4.exit_code == 0);
    CHECK(r4.out.find("connected: false") != std::string::npos);

    std::string one = write_file("one.txt", "1\n0\n");
    RunResult r1 = run("analyze " + one);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("cyclic_type: not defined (n < 3)") != std::string::npos);

    RunResult j1 = run("--json analyze " + one);
    CHECK(j1.exit_code == 0);
    CHECK(j1.out ==
          "{\"n\":1,\"connected\":true,\"two_point_homogeneous\":true,\"cyclic_type\":null,"
          "\"inner_order\":1,\"orbits\":[[0]],\"cycle_structures\":[[1]],\"self_dual\":true}\n");
}

TEST_CASE("analyze: rejects non-quandles with exit 1") {
    std::string f = write_file("bad.txt", kNotIdempotent);
    RunResult r = run("analyze " + f);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("quandle: no") != std::string::npos);
}

TEST_CASE("analyze: accepts comments and JSON input") {
    std::string commented = write_file("commented.txt", "# regular tetrahedron\n" + kTetrahedron);
    CHECK(run("analyze " + commented).exit_code == 0);

    std::string json_in = write_file("one.json", "{\"n\": 1, \"table\": [[0]]}\n");
    RunResult r = run("analyze " + json_in);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("cyclic_type: not defined (n < 3)") != std::string::npos);
}

TEST_CASE("alexander: table generation") {
    RunResult r = run("alexander 5 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "5\n0 2 4 1 3\n4 1 3 0 2\n3 0 2 4 1\n2 4 1 3 0\n1 3 0 2 4\n");

    // Multiplier 1 gives the trivial quandle.
    std::string trivial7 = "7\n";
    for (int i = 0; i < 7; ++i) trivial7 += "0 1 2 3 4 5 6\n";
    CHECK(run("alexander 7 1").out == trivial7);

    // Multiplier must be a unit.
    RunResult bad = run("alexander 6 2");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("error:") != std::string::npos);
}

TEST_CASE("alexander: --out writes the file and keeps stdout quiet") {
    static Scratch out_scratch;
    fs::path p = out_scratch.dir / "alex43.txt";
    RunResult r = run("alexander 4 3 --out \"" + p.string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream f(p);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(content == "4\n0 3 2 1\n2 1 0 3\n0 3 2 1\n2 1 0 3\n");
}

TEST_CASE("classify: prime order report") {
    RunResult r = run("classify 11");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "p: 11\ncount 4: 2↔6, 7↔8\nroots: 2 6 7 8\n");

    RunResult j = run("--json classify 11");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"roots\":[2,6,7,8]") != std::string::npos);
    CHECK(j.out.find("\"dual_pairs\":[[2,6],[7,8]]") != std::string::npos);

    RunResult bad = run("classify 9");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("error:") != std::string::npos);
}

TEST_CASE("table: classification rows") {
    RunResult r = run("table 37");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 11);
    CHECK(r.out.find("23  10  5↔14, 7↔10, 11↔21, 15↔20, 17↔19\n") !=
          std::string::npos);

    RunResult j = run("--json table 37");
    CHECK(j.exit_code == 0);
    auto arr = nlohmann::json::parse(j.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 11);
    CHECK(arr[7]["p"] == 23);
    CHECK(arr[7]["count"] == 10);
    CHECK(arr[10]["p"] == 37);
}

TEST_CASE("table: --strict compares against the bundled fixture") {
    CHECK(run("--strict table 37").exit_code == 0);

    RunResult r = run("--strict table 7"); // truncated output cannot match
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("strict") != std::string::npos);
}

TEST_CASE("census: counts and class listing by order") {
    RunResult r = run("census 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n: 3\nlabeled: 5\nclasses: 3\nconnected: 1\ntwo_point_homogeneous: 1\ncyclic_type: 1\n"
          "3\n0 1 2\n0 1 2\n0 1 2\n"
          "---\n"
          "3\n0 1 2\n0 1 2\n1 0 2\n"
          "---\n"
          "3\n0 2 1\n2 1 0\n1 0 2\n");

    RunResult j = run("--json census 4");
    CHECK(j.exit_code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["labeled"] == 36);
    CHECK(doc["classes"] == 7);
    CHECK(doc["class_reps"].size() == 7);

    RunResult conn = run("census 5 --connected");
    CHECK(conn.exit_code == 0);
    const std::string summary =
        "n: 5\nlabeled: 404\nclasses: 3\nconnected: 3\ntwo_point_homogeneous: 2\ncyclic_type: 2\n5\n";
    CHECK(conn.out.substr(0, summary.size()) == summary);
    std::size_t separators = 0;
    for (std::size_t pos = conn.out.find("---\n"); pos != std::string::npos;
         pos = conn.out.find("---\n", pos + 1))
        ++separators;
    CHECK(separators == 2); // three classes listed

    CHECK(run("census 7").exit_code == 2);
    CHECK(run("census 0").exit_code == 2);
}

TEST_CASE("census: --check-conjecture") {
    RunResult r = run("census 4 --check-conjecture");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n: 4\nclasses: 7\ntwo_point_homogeneous_classes: 1\nno counterexample\n");

    RunResult j = run("--json census 6 --check-conjecture");
    CHECK(j.exit_code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["holds"] == true);
    CHECK(doc["counterexamples"].empty());
}

TEST_CASE("iso: witnesses and rejections") {
    static Scratch iso_scratch;
    fs::path a = iso_scratch.dir / "a.txt";
    fs::path b = iso_scratch.dir / "b.txt";
    REQUIRE(run("alexander 5 2 --out \"" + a.string() + "\"").exit_code == 0);
    REQUIRE(run("alexander 5 3 --out \"" + b.string() + "\"").exit_code == 0);
    std::string qa = "\"" + a.string() + "\"";
    std::string qb = "\"" + b.string() + "\"";

    RunResult self = run("iso " + qa + " " + qa);
    CHECK(self.exit_code == 0);
    CHECK(self.out == "isomorphic: [0,1,2,3,4]\n");

    // Same size, same inner group order, still not isomorphic.
    RunResult no = run("iso " + qa + " " + qb);
    CHECK(no.exit_code == 1);
    CHECK(no.out == "not isomorphic\n");

    // A relabeling (swap points 0 and 1) of the first table.
    std::string relabeled =
        write_file("a_relabeled.txt", "5\n0 4 3 1 2\n2 1 4 0 3\n1 3 2 4 0\n4 2 0 3 1\n3 0 1 2 4\n");
    RunResult yes = run("iso " + qa + " " + relabeled);
    CHECK(yes.exit_code == 0);
    CHECK(yes.out.substr(0, 13) == "isomorphic: [");

    // Multiplier n-1 gives exactly the dihedral table.
    fs::path m = iso_scratch.dir / "alex_5_4.txt";
    REQUIRE(run("alexander 5 4 --out \"" + m.string() + "\"").exit_code == 0);
    std::string dihedral5 = write_file("dih5.txt", "5\n0 4 3 2 1\n2 1 0 4 3\n4 3 2 1 0\n1 0 4 3 2\n3 2 1 0 4\n");
    RunResult dih = run("iso \"" + m.string() + "\" " + dihedral5);
    CHECK(dih.exit_code == 0);
    CHECK(dih.out == "isomorphic: [0,1,2,3,4]\n");

    RunResult j = run("--json iso " + qa + " " + qb);
    CHECK(j.exit_code == 1);
    CHECK(j.out == "{\"isomorphic\":false}\n");

    CHECK(run("iso " + qa + " /no/such/file").exit_code == 2);
}

TEST_CASE("flags: --json works before and after the subcommand") {
    RunResult before = run("--json census 3");
    RunResult after = run("census 3 --json");
    CHECK(before.exit_code == 0);
    CHECK(after.exit_code == 0);
    CHECK(before.out == after.out);
}

TEST_CASE("usage errors and help") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("--help").out.find("census") != std::string::npos);
    CHECK(run("").exit_code == 2);          // a subcommand is required
    CHECK(run("frobnicate").exit_code == 2); // unknown subcommand
    CHECK(run("alexander 5").exit_code == 2); // missing argument
}

TEST_CASE("determinism: repeated runs are byte-identical") {
    std::string tet = write_file("tet.txt", kTetrahedron);
    for (const std::string& args :
         {"analyze " + tet, std::string("census 5"), std::string("--json table 37"),
          std::string("classify 23")}) {
        RunResult first = run(args);
        RunResult second = run(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
    }
}
