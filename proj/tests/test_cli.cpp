#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef HURWITZ_CLI_PATH
#error "HURWITZ_CLI_PATH must point at the hurwitz executable"
#endif

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string("\"") + HURWITZ_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("chi")
    {
        Run r = run("chi --lambda 2,1 --mu 2,1");
        CHECK(r.status == 0);
        CHECK(parse(r)["chi"] == "0");
        CHECK(parse(r)["lambda"] == "2,1");
    }

    TEST_CASE("central character routes agree")
    {
        Run trees = run("f --lambda 7 --r 3 --method trees");
        CHECK(trees.status == 0);
        CHECK(parse(trees)["f"] == "70");  // 7!/(3 * 4!), the number of 3-cycles in S(7)
        for (const char* lambda : {"7", "4,2,1", "3,3,1", "2,2,1,1,1"}) {
            for (int r = 2; r <= 4; ++r) {
                std::string base = std::string("f --lambda ") + lambda + " --r " + std::to_string(r);
                auto a = parse(run(base + " --method mn"))["f"];
                CHECK(parse(run(base + " --method trees"))["f"] == a);
                CHECK(parse(run(base + " --method frobenius"))["f"] == a);
            }
        }
    }

    TEST_CASE("hurwitz numbers and the oracle")
    {
        Run r = run("hurwitz --d 2 --h 1 --connected");
        CHECK(r.status == 0);
        CHECK(parse(r)["value"] == "3/2");
        Run fam = run("hurwitz --d 3 --nu 2,1 --k 4 --connected");
        Run oracle = run("hurwitz --d 3 --nu 2,1 --k 4 --connected --oracle");
        CHECK(parse(fam)["value"] == parse(oracle)["value"]);
        CHECK(parse(fam)["g"] == 0);
    }

    TEST_CASE("sweep exit codes and byte stability")
    {
        Run a = run("--no-runtime verify lemma-rm2 --d 7");
        Run b = run("--no-runtime --jobs 1 verify lemma-rm2 --d 7");
        CHECK(a.status == 0);
        CHECK(parse(a)["pass"] == true);
        CHECK(a.out == b.out);
        CHECK(parse(a).count("runtime") == 0);
        CHECK(parse(run("verify lemma-rm2 --d 7")).count("runtime") == 1);
    }

    TEST_CASE("statement verification exit codes")
    {
        Run t1 = run("verify T1 --d 7 --r 2");
        CHECK(t1.status == 0);
        CHECK(parse(t1)["theorem"] == "T1");
        CHECK(parse(t1)["counterexample"].is_null());
        Run t5 = run("verify T5 --d 7");
        CHECK(t5.status == 1);
        CHECK(parse(t5)["counterexample"]["clause"] == 5);
    }

    TEST_CASE("usage and computation errors")
    {
        CHECK(run("chi --lambda 2,1 --mu 2,1 --bogus").status == 2);
        CHECK(run("chi --lambda 2,x --mu 2,1").status == 2);
        CHECK(run("frobnicate").status == 2);
        CHECK(run("verify T1 --d 7 --r 6").status == 3);
        CHECK(run("chi --lambda 2,1 --mu 2,2").status == 3);
    }

    TEST_CASE("csv output")
    {
        Run r = run("--format csv chi --lambda 3,1 --mu 2,2");
        CHECK(r.status == 0);
        CHECK(r.out == "lambda,mu,chi\n\"3,1\",\"2,2\",-1\n");
    }
}
