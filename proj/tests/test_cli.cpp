#include <array>
#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

#include "doctest.h"

#include "json.hpp"

namespace {

struct Run
{
    int code;
    std::string out;
};

Run run(std::string const & args)
{
    std::string cmd = std::string(GENUS3_CLI) + " " + args + " 2>/dev/null";
    FILE * pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return { WIFEXITED(status) ? WEXITSTATUS(status) : -1, out };
}

std::string data(std::string const & name)
{
    return std::string(GENUS3_DATA_DIR) + "/curves/" + name;
}

using nlohmann::json;

} // namespace

TEST_CASE("analyze")
{
    auto r = run("analyze 7");
    CHECK(r.code == 0);
    CHECK(r.out.find("upper = 20\n") != std::string::npos);
    auto j = run("analyze 7 --json");
    CHECK(json::parse(j.out)["upper"] == 20);
    auto bad = run("analyze 12");
    CHECK(bad.code == 2);
    CHECK(run("analyze 1").code == 2);
    CHECK(run("analyze 50..2").code == 2);
    CHECK(run("analyze seven").code == 2);
}

TEST_CASE("analyze range")
{
    auto r = run("analyze 2..50 --json");
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    std::vector<int> qs;
    for (auto const & x : j)
        qs.push_back(x["q"]);
    CHECK(qs == std::vector<int>{ 2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49 });
    auto p = run("analyze 2..400 --json --jobs 7 --recheck");
    auto s = run("analyze 2..400 --json --jobs 1 --recheck");
    CHECK(p.code == 0);
    CHECK(p.out == s.out);
    auto t1 = run("analyze 2..100");
    auto t4 = run("analyze 2..100 --jobs 4");
    CHECK(t1.out == t4.out);
}

TEST_CASE("text and JSON carry the same data")
{
    auto j = json::parse(run("analyze 27 --json").out);
    auto t = run("analyze 27").out;
    CHECK(t.find("upper = " + std::to_string(int(j["upper"])) + "\n") != std::string::npos);
    CHECK(t.find("guarantee.type = " + std::string(j["guarantee"]["type"]) + "\n") != std::string::npos);
    std::size_t lines = std::count(t.begin(), t.end(), '\n');
    std::size_t scalars = 0;
    auto count = [&](auto && self, json const & x) -> void {
        if ((x.is_object() || x.is_array()) && !x.empty())
            for (auto const & y : x)
                self(self, y);
        else
            ++scalars;
    };
    count(count, j);
    CHECK(lines == scalars);
}

TEST_CASE("count")
{
    auto r = run("count " + data("artin_schreier_f3.json") + " --json");
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["counts"][0] == 10);
    CHECK(j["type"] == json::array({ 3, 3, 0 }));
    CHECK(j["zeta_text"] == "t^3 - 6*t^2 + 9*t");
    auto k = json::parse(run("count " + data("klein_form_f4.json") + " --json").out);
    CHECK(k["counts"][0] == 14);
    auto b = json::parse(run("count --reference bielliptic_f27 --r 1 --json").out);
    CHECK(b["counts"][0] == 56);
    CHECK(run("count /nonexistent.json").code == 2);
    CHECK(run("count").code == 2);
    CHECK(run("count --reference nothing").code == 2);
}

TEST_CASE("count on a malformed file")
{
    std::string path = (std::filesystem::temp_directory_path() / "genus3_malformed_curve.json").string();
    FILE * f = std::fopen(path.c_str(), "w");
    REQUIRE(f);
    std::fputs("{\"kind\": \"plane_quartic\", \"field\": {\"p\": 2}, ", f);
    std::fclose(f);
    CHECK(run("count " + path).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("hermitian")
{
    auto a = json::parse(run("hermitian enumerate --d -11 --rank 2 --disc 2 --json").out);
    REQUIRE(a["classes"].size() == 1);
    CHECK(a["classes"][0]["diagonal"] == json::array({ 1, 2 }));
    auto b = json::parse(run("hermitian enumerate --d -4 --rank 2 --disc 2 --json").out);
    CHECK(b["classes"].size() == 2);
    int ind = 0;
    for (auto const & c : b["classes"])
        ind += c["indecomposability"]["indecomposable"].get<bool>();
    CHECK(ind == 1);
    auto c = json::parse(run("hermitian search --d -3 --rank 3 --disc 1 --json").out);
    CHECK(c["forms"].empty());
    auto d = json::parse(run("hermitian search --d -7 --rank 3 --disc 1 --bound 8 --limit 2 --json").out);
    CHECK(d["count"] == 2);
    CHECK(run("hermitian enumerate --d -5 --rank 2 --disc 2").code == 2);
    CHECK(run("hermitian enumerate --d -15 --rank 2 --disc 2").code == 2);
    CHECK(run("hermitian frobnicate --d -3").code == 2);
}

TEST_CASE("dioph")
{
    auto a = json::parse(run("dioph --family 5e-x2x3 --emax 1600 --json").out);
    CHECK(a["solutions"].empty());
    CHECK(a["exhaustive"] == true);
    auto b = json::parse(run("dioph --family pow-eq-x2x1 --p 7 --emax 10 --json").out);
    CHECK(b["solutions"] == json::parse(R"([{"e": 1, "x": 2}, {"e": 3, "x": 18}])"));
    auto c = json::parse(run("dioph --family mod-obstruction --p 11 --c 3 --modulus 5 --json").out);
    CHECK(c["obstruction"] == true);
    auto d = json::parse(run("dioph --family x2-plus-c --c 2 --p 3 --emax 10 --json").out);
    CHECK(d["solutions"].size() == 2);
    CHECK(run("dioph --family pow-eq-x2x1 --p 7 --emax 0").code == 2);
    CHECK(run("dioph --family nonsense --emax 3").code == 2);
}

TEST_CASE("zeta")
{
    auto a = json::parse(run("zeta --q 2 --type 2,2,0 --json").out);
    CHECK(a["verdict"]["admissible"] == false);
    CHECK(a["verdict"]["violation"] == "N_3 = 1 < N_1 = 7");
    auto b = json::parse(run("zeta --q 7 --type 4,4,4 --json").out);
    CHECK(b["verdict"]["admissible"] == true);
    auto c = json::parse(run("zeta --q 2 --counts 7,7,10 --json").out);
    CHECK(c["text"] == "t^3 - 4*t^2 + 3*t + 1");
    auto d = json::parse(run("zeta --q 2 --coeffs 4,2,-4,1 --json").out);
    CHECK(d["verdict"]["violation"] == "N_2 = 5 < N_1 = 7");
    CHECK(run("zeta --q 6 --type 0,0,0").code == 2);
    CHECK(run("zeta --q 2 --type 3,0,0").code == 2);
    CHECK(run("zeta --q 2").code == 2);
}

TEST_CASE("glue and unglue")
{
    auto g = json::parse(run("glue 17 --json").out);
    CHECK(g["verdict"] == "FEASIBLE");
    auto u = json::parse(run("unglue 7 --json").out);
    CHECK(u["verdict"] == "NO_DEFECT_2");
    CHECK(run("glue 2").code == 2);
    CHECK(run("unglue 17").code == 2);
}

TEST_CASE("help exits cleanly")
{
    CHECK(run("--help").code == 0);
    CHECK(run("").code == 2);
}
