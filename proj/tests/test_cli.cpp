#include "doctest.h"

#include "trico/builtins.hpp"
#include "trico/coverfile.hpp"
#include "trico/f3.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace trico;

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run(const std::string& args) {
    std::string cmd = std::string(TRICO_BINARY_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("h0 and basis commands") {
    CmdResult h = run("h0 2 4");
    CHECK(h.status == 0);
    CHECK(h.out == "7\n");

    CmdResult b = run("basis 1 3");
    CHECK(b.status == 0);
    CHECK(b.out == "1\nt\nt^2\nt^3\nu\n");
}

TEST_CASE("verify classifies a file and honours --expect") {
    write_file("cli_m3.cover", builtin_case("M3").text);

    CmdResult ok = run("verify cli_m3.cover");
    CHECK(ok.status == 0);
    CHECK(contains(ok.out, "label: M3"));
    CHECK(contains(ok.out, "K^2: 7"));

    CmdResult expected = run("verify cli_m3.cover --expect M3");
    CHECK(expected.status == 0);

    CmdResult mismatch = run("verify cli_m3.cover --expect M1");
    CHECK(mismatch.status == 1);
}

TEST_CASE("json reports are byte identical across runs") {
    write_file("cli_m3.cover", builtin_case("M3").text);
    CmdResult first = run("verify cli_m3.cover --json");
    CmdResult second = run("verify cli_m3.cover --json");
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
    CHECK(contains(first.out, "\"label\": \"M3\""));
    CHECK(contains(first.out, "\"schema\": 1"));
    CHECK(contains(first.out, "\"K2\": 7"));
}

TEST_CASE("parse and resource failures use distinct exit codes") {
    write_file("cli_bad.cover", "form = nope\npreset = Mi\n");
    CHECK(run("verify cli_bad.cover").status == 2);
    CHECK(run("verify cli_no_such_file.cover").status == 2);

    write_file("cli_m3.cover", builtin_case("M3").text);
    CHECK(run("verify cli_m3.cover --spair-budget 1").status == 3);

    CHECK(run("repro not_a_case").status == 2);
}

TEST_CASE("V1 chart input goes through the involution") {
    CoverSpec m3 = normalize_to_v0(parse_cover_file(builtin_case("M3").text));
    std::string d1 = to_string(transition(Section{{3, 8}, Chart::V0, m3.sections.at("d")}).poly);
    std::string c1 = to_string(transition(Section{{4, 12}, Chart::V0, m3.sections.at("c")}).poly);
    std::string text = "form = cubic_3dc\npreset = Mi\nchart = V1\nd = \"" + d1 +
                       "\"\nc = \"" + c1 + "\"\n";
    write_file("cli_m3_v1.cover", text);

    CmdResult flipped = run("verify cli_m3_v1.cover --expect M3");
    CHECK(flipped.status == 0);

    // same sections, chart forced from the command line instead
    std::string bare = "form = cubic_3dc\npreset = Mi\nd = \"" + d1 + "\"\nc = \"" + c1 +
                       "\"\n";
    write_file("cli_m3_v1_bare.cover", bare);
    CmdResult forced = run("verify cli_m3_v1_bare.cover --chart V1 --expect M3");
    CHECK(forced.status == 0);
    // read as V0 data the same text is not even a valid section set
    CHECK(run("verify cli_m3_v1_bare.cover").status == 2);
}

TEST_CASE("repro runs the stored examples") {
    CmdResult m1 = run("repro M1");
    CHECK(m1.status == 0);
    CHECK(contains(m1.out, "label: M1"));
    CHECK(contains(m1.out, "input: builtin:M1"));

    CmdResult json = run("repro M1 --json");
    CHECK(json.status == 0);
    CHECK(contains(json.out, "\"label\": \"M1\""));
}

}  // TEST_SUITE
