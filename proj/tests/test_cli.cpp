#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <string>

#include "cli_driver.hpp"
#include "doctest.h"

namespace {

const std::string kCli = PRODCOL_CLI_PATH;

struct Scratch {
    std::filesystem::path dir;

    Scratch() {
        dir = std::filesystem::current_path() / "cli_scratch";
        std::filesystem::create_directories(dir);
    }

    std::string file(const std::string& name) const { return (dir / name).string(); }

    CmdResult run(const std::string& args) const {
        return run_cmd(kCli + " " + args, file("stderr.txt"));
    }
};

const std::string kGrid3 = "0 1\n1 2\n\n0 1\n1 2\n";
const std::string kGrid3Colouring =
    "0,0\t0\n1,0\t1\n2,0\t2\n0,1\t2\n1,1\t3\n2,1\t4\n0,2\t4\n1,2\t0\n2,2\t1\n";

}  // namespace

TEST_CASE("colour writes the expected grid colouring") {
    Scratch s;
    spit(s.file("grid3.txt"), kGrid3);
    CmdResult r = s.run("colour " + s.file("grid3.txt") + " -o " +
                        s.file("grid3.col") + " --machine");
    CHECK(r.code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["command"] == "colour");
    CHECK(kv["d"] == "2");
    CHECK(kv["dims"] == "3,3");
    CHECK(kv["delta"] == "2,2");
    CHECK(kv["vertices"] == "9");
    CHECK(kv["lower"] == "5");
    CHECK(kv["upper"] == "5");
    CHECK(kv["prior_upper"] == "5");
    CHECK(kv["wrapped"] == "1");
    CHECK(kv["colours_used"] == "5");
    CHECK(slurp(s.file("grid3.col")) == kGrid3Colouring);
}

TEST_CASE("colour output is byte-stable across runs") {
    Scratch s;
    spit(s.file("grid3.txt"), kGrid3);
    std::string cmd =
        "colour " + s.file("grid3.txt") + " -o " + s.file("stable.col");
    CmdResult a = s.run(cmd);
    std::string first = slurp(s.file("stable.col"));
    CmdResult b = s.run(cmd);
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
    CHECK(first == slurp(s.file("stable.col")));
}

TEST_CASE("verify passes a wrapped colouring and skips the span check") {
    Scratch s;
    spit(s.file("grid3.txt"), kGrid3);
    spit(s.file("grid3.col"), kGrid3Colouring);
    CmdResult r = s.run("verify " + s.file("grid3.txt") + " " +
                        s.file("grid3.col") + " --machine");
    CHECK(r.code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["proper_on_square"] == "pass");
    CHECK(kv["spans_in_windows"] == "skipped:wrapped_colouring");
    CHECK(kv["clique"] == "pass");
    CHECK(kv["clique_size"] == "5");
    CHECK(kv["warning"] == "0");
}

TEST_CASE("verify flags a distance-two clash") {
    Scratch s;
    spit(s.file("grid3.txt"), kGrid3);
    // Vertex (1,1) copies the colour of (0,0); they are two steps apart.
    spit(s.file("bad.col"),
         "0,0\t0\n1,0\t1\n2,0\t2\n0,1\t2\n1,1\t0\n2,1\t4\n0,2\t4\n1,2\t0\n2,2\t1\n");
    CmdResult r = s.run("verify " + s.file("grid3.txt") + " " +
                        s.file("bad.col") + " --machine");
    CHECK(r.code == 1);
    auto kv = parse_kv(r.out);
    CHECK(kv["proper_on_square"] == "fail");
    CHECK(kv["proper_violation"] == "0,4");
}

TEST_CASE("unwrapped colourings get the span check") {
    Scratch s;
    spit(s.file("grid3.txt"), kGrid3);
    CmdResult c = s.run("colour " + s.file("grid3.txt") + " -o " +
                        s.file("raw.col") + " --no-wrap --machine");
    CHECK(c.code == 0);
    auto ckv = parse_kv(c.out);
    CHECK(ckv["wrapped"] == "0");
    CHECK(ckv["colours_used"] == "7");

    CmdResult r = s.run("verify " + s.file("grid3.txt") + " " +
                        s.file("raw.col") + " --machine");
    CHECK(r.code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["proper_on_square"] == "pass");
    CHECK(kv["spans_in_windows"] == "pass");
}

TEST_CASE("forcing the span check on a wrapped colouring reports the fold") {
    Scratch s;
    spit(s.file("grid3.txt"), kGrid3);
    spit(s.file("grid3.col"), kGrid3Colouring);
    CmdResult r = s.run("verify " + s.file("grid3.txt") + " " +
                        s.file("grid3.col") + " --unwrapped --machine");
    CHECK(r.code == 1);
    auto kv = parse_kv(r.out);
    CHECK(kv["spans_in_windows"] == "fail");
    CHECK(kv["span_violation"] == "6,7,dim=1,span=4,window=[1,1]");
}

TEST_CASE("verify skips explicit checks above the vertex cap") {
    Scratch s;
    spit(s.file("grid3.txt"), kGrid3);
    spit(s.file("grid3.col"), kGrid3Colouring);
    CmdResult r = s.run("verify " + s.file("grid3.txt") + " " +
                        s.file("grid3.col") + " --cap-vertices 5 --machine");
    CHECK(r.code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["proper_on_square"] == "skipped:too_large");
    CHECK(kv["clique"] == "skipped:too_large");
    CHECK(kv["warning"] == "1");
}

TEST_CASE("verify rejects incomplete or malformed colourings") {
    Scratch s;
    spit(s.file("grid3.txt"), kGrid3);
    spit(s.file("short.col"), "0,0\t0\n1,0\t1\n");
    CmdResult r = s.run("verify " + s.file("grid3.txt") + " " +
                        s.file("short.col"));
    CHECK(r.code == 2);
    CHECK(r.err.find("MissingColour") != std::string::npos);

    spit(s.file("dup.col"), kGrid3Colouring + "0,0\t3\n");
    r = s.run("verify " + s.file("grid3.txt") + " " + s.file("dup.col"));
    CHECK(r.code == 2);
    CHECK(r.err.find("ParseError") != std::string::npos);

    spit(s.file("oob.col"), "9,9\t0\n");
    r = s.run("verify " + s.file("grid3.txt") + " " + s.file("oob.col"));
    CHECK(r.code == 2);

    spit(s.file("notab.col"), "0,0 0\n");
    r = s.run("verify " + s.file("grid3.txt") + " " + s.file("notab.col"));
    CHECK(r.code == 2);
    CHECK(r.err.find("ParseError") != std::string::npos);
}

TEST_CASE("bad instances exit with code 2 and a named error") {
    Scratch s;
    spit(s.file("selfloop.txt"), "0 0\n1 2\n");
    CmdResult r = s.run("bounds " + s.file("selfloop.txt"));
    CHECK(r.code == 2);
    CHECK(r.err.find("SelfLoop") != std::string::npos);

    spit(s.file("cycle.txt"), "0 1\n1 2\n0 2\n");
    r = s.run("bounds " + s.file("cycle.txt"));
    CHECK(r.code == 2);
    CHECK(r.err.find("CycleDetected") != std::string::npos);

    r = s.run("bounds " + s.file("does_not_exist.txt"));
    CHECK(r.code == 2);
}

TEST_CASE("bounds reports the closed forms") {
    Scratch s;
    spit(s.file("twostars.txt"), "0 1\n0 2\n0 3\n\n0 1\n0 2\n0 3\n");
    CmdResult r = s.run("bounds " + s.file("twostars.txt") + " --machine");
    CHECK(r.code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["delta"] == "3,3");
    CHECK(kv["lower"] == "7");
    CHECK(kv["upper"] == "9");
    CHECK(kv["prior_upper"] == "9");
    CHECK(kv.count("chi_exact") == 0);

    r = s.run("bounds " + s.file("twostars.txt") + " --exact --machine");
    CHECK(r.code == 0);
    kv = parse_kv(r.out);
    CHECK(kv["chi_exact"] == "7");
}

TEST_CASE("bounds omits the prior bound when a tree is a single edge") {
    Scratch s;
    spit(s.file("edge.txt"), "0 1\n");
    CmdResult r = s.run("bounds " + s.file("edge.txt") + " --exact --machine");
    CHECK(r.code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["lower"] == "2");
    CHECK(kv["upper"] == "3");
    CHECK(kv.count("prior_upper") == 0);
    CHECK(kv["chi_exact"] == "2");
}

TEST_CASE("bounds --exact respects the search cap") {
    Scratch s;
    spit(s.file("grid5.txt"), "0 1\n1 2\n2 3\n3 4\n\n0 1\n1 2\n2 3\n3 4\n");
    CmdResult r = s.run("bounds " + s.file("grid5.txt") +
                        " --exact --cap-exact 5");
    CHECK(r.code == 2);
    CHECK(r.err.find("TooLarge") != std::string::npos);
}

TEST_CASE("generate writes canonical families") {
    Scratch s;
    CmdResult r = s.run("generate --kind star -n 5 -o " + s.file("star.txt") +
                        " --machine");
    CHECK(r.code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["vertices"] == "5");
    CHECK(kv["delta"] == "4");
    CHECK(slurp(s.file("star.txt")) == "0 1\n0 2\n0 3\n0 4\n");

    r = s.run("generate --kind caterpillar --spine 3 --legs 2 -o " +
              s.file("cat.txt") + " --machine");
    CHECK(r.code == 0);
    kv = parse_kv(r.out);
    CHECK(kv["vertices"] == "9");
    CHECK(kv["delta"] == "4");

    r = s.run("generate --kind random -n 8 --seed 7 -o " + s.file("r1.txt"));
    CHECK(r.code == 0);
    r = s.run("generate --kind random -n 8 --seed 7 -o " + s.file("r2.txt"));
    CHECK(r.code == 0);
    CHECK(slurp(s.file("r1.txt")) == slurp(s.file("r2.txt")));
}

TEST_CASE("generate rejections") {
    Scratch s;
    CmdResult r = s.run("generate --kind random -n 6 -o " + s.file("x.txt"));
    CHECK(r.code == 2);
    CHECK(r.err.find("InvalidParams") != std::string::npos);

    r = s.run("generate --kind path -n 1 -o " + s.file("x.txt"));
    CHECK(r.code == 2);

    r = s.run("generate --kind blob -n 4 -o " + s.file("x.txt"));
    CHECK(r.code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    Scratch s;
    CmdResult r = s.run("");
    CHECK(r.code == 2);
    r = s.run("paint things");
    CHECK(r.code == 2);
    r = s.run("--help");
    CHECK(r.code == 0);
    CHECK(r.out.find("colour") != std::string::npos);
}

TEST_CASE("human output carries the same facts") {
    Scratch s;
    spit(s.file("grid3.txt"), kGrid3);
    CmdResult r = s.run("bounds " + s.file("grid3.txt"));
    CHECK(r.code == 0);
    CHECK(r.out.find("lower") != std::string::npos);
    CHECK(r.out.find("5") != std::string::npos);
    CHECK(r.out.find("=") == std::string::npos);
}
