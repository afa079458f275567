// End-to-end tests that drive the installed CLI binary through a shell and
// check exit codes plus parsed stdout. HARNACK_CLI_PATH is injected by CMake.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "harnack/inequality.hpp"
#include "harnack/json_io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HARNACK_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string write_fixture(const std::string& name, const json& j) {
    const std::string path =
        (std::filesystem::temp_directory_path() / ("cli_fixture_" + name + ".json")).string();
    std::ofstream f(path);
    f << j.dump();
    return path;
}

std::string psd_fixture() {
    static const std::string path = write_fixture(
        "psd", json{{"n", 2}, {"entries", {{0.3, 0.0}, {0.0, 0.6}}}});
    return path;
}

} // namespace

TEST_CASE("repro exits 0 and reports matching rounded digits") {
    const RunResult r = run_cli("repro");
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("lower_match").get<bool>());
    CHECK(j.at("mid_match").get<bool>());
    CHECK(j.at("lower_exceeds_mid").get<bool>());
    CHECK(j.at("lower_rounded").get<double>() == doctest::Approx(0.6281));
    CHECK(j.at("mid_rounded").get<double>() == doctest::Approx(0.6250));
}

TEST_CASE("verify psd against the identity reports the equality case") {
    const RunResult r = run_cli("verify " + psd_fixture() + " --theorem psd --unitary identity");
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("holds_lower").get<bool>());
    CHECK(j.at("holds_upper").get<bool>());
    const auto flags = j.at("equality_flags").get<std::vector<std::string>>();
    bool pos = false, ident = false;
    for (const std::string& f : flags) {
        if (f == "SpecPosMatch") pos = true;
        if (f == "UIsIdentity") ident = true;
    }
    CHECK(pos);
    CHECK(ident);
    CHECK(j.at("mid").get<double>() == doctest::Approx(j.at("upper").get<double>()).epsilon(1e-10));
}

TEST_CASE("verify multi with explicit weights holds") {
    const std::string z1 = write_fixture(
        "z1", json{{"n", 2}, {"entries", {{0.34, -0.15}, {-0.15, 0.07}}}});
    const std::string z2 = write_fixture(
        "z2", json{{"n", 2}, {"entries", {{0.02, -0.01}, {-0.01, 0.01}}}});
    const RunResult r = run_cli("verify " + z1 + " " + z2 +
                                " --theorem multi --unitary haar:5 --weights 0.5,0.5");
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("holds_lower").get<bool>());
    CHECK(j.at("holds_upper").get<bool>());
}

TEST_CASE("bounds prints singular values and products") {
    const RunResult r = run_cli("bounds " + psd_fixture());
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    const auto sv = j.at("singular_values").get<std::vector<double>>();
    REQUIRE(sv.size() == 2);
    CHECK(sv[0] == doctest::Approx(0.6));
    CHECK(sv[1] == doctest::Approx(0.3));
    const double lower = j.at("lower").get<double>();
    const double upper = j.at("upper").get<double>();
    CHECK(lower == doctest::Approx((0.4 / 1.6) * (0.7 / 1.3)));
    CHECK(upper == doctest::Approx((1.6 / 0.4) * (1.3 / 0.7)));
}

TEST_CASE("conjecture violation exits 1, bad input exits 2") {
    // polar-shifted published matrices refute the conjecture's lower bound
    const harnack::ComplexMatrix u = harnack::counterexample_u();
    const std::string s1 = write_fixture(
        "shift1", harnack::matrix_to_json(u * harnack::counterexample_z1()));
    const std::string s2 = write_fixture(
        "shift2", harnack::matrix_to_json(u * harnack::counterexample_z2()));
    const RunResult viol = run_cli("verify " + s1 + " " + s2 + " --theorem conjecture");
    CHECK(viol.status == 1);
    const json j = json::parse(viol.out);
    CHECK_FALSE(j.at("holds_lower").get<bool>());

    CHECK(run_cli("verify no_such_file.json --theorem psd").status == 2);
    CHECK(run_cli("verify " + psd_fixture() + " --theorem nope").status == 2);

    // non-contraction rejected for a strict-contraction theorem
    const std::string big = write_fixture(
        "big", json{{"n", 2}, {"entries", {{2.0, 0.0}, {0.0, 0.5}}}});
    CHECK(run_cli("verify " + big + " --theorem tung --unitary identity").status == 2);
}

TEST_CASE("search stdout is byte-identical across thread counts") {
    const std::string base = "search --inequality psd --n 3 --trials 50 --seed 9 --eig-hi 0.9";
    const RunResult one = run_cli(base + " --threads 1");
    const RunResult four = run_cli(base + " --threads 4");
    CHECK(one.status == 0);
    CHECK(one.out == four.out);
    const json j = json::parse(one.out);
    CHECK(j.at("trials_run").get<std::size_t>() == 50);
    CHECK(j.at("violations").empty());
}

TEST_CASE("search exit code reflects findings") {
    const RunResult r = run_cli(
        "search --inequality conjecture-lower --kind polar-shifted --n 2 --m 2 "
        "--trials 10000 --seed 7 --eig-hi 0.9");
    CHECK(r.status == 1);
    const json j = json::parse(r.out);
    CHECK(j.at("violations").size() >= 1);
}
