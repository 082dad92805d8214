#include "qcluster/cli.hpp"
#include "qcluster/serialize.hpp"

#include <doctest.h>

#include <sstream>

using namespace qcluster;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "qcluster");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QCLUSTER_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("verify gl2 on a small window") {
    Run r = run({"verify", "gl2", "--ell-window", "2", "--depth", "4"});
    INFO(r.out);
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["pass"].get<int>() > 50);
}

TEST_CASE("verify with a tiny registry skips instead of failing") {
    Run r = run({"verify", "gl2", "--ell-window", "0"});
    Json j = Json::parse(r.out);
    CHECK(r.code == 0);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["skip"].get<int>() > 0);
}

TEST_CASE("verify gl1") {
    Run r = run({"verify", "gl1"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    bool saw_abelian = false;
    for (const auto& rep : j["reports"])
        if (rep["suite"] == "abelian") {
            saw_abelian = true;
            CHECK(rep["summary"]["fail"] == 0);
        }
    CHECK(saw_abelian);
}

TEST_CASE("verify output is independent of threads") {
    Run a = run({"verify", "gl2", "--ell-window", "1", "--depth", "4", "--threads", "1"});
    Run b = run({"verify", "gl2", "--ell-window", "1", "--depth", "4", "--threads", "3"});
    Json ja = Json::parse(a.out), jb = Json::parse(b.out);
    ja.erase("command");
    jb.erase("command");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("mutate") {
    Run pent = run({"mutate", "--seed", data("a2.seed"), "--at", "1,2,1,2,1"});
    CHECK(pent.code == 0);
    CHECK(pent.out.find("up to vertex order: yes") != std::string::npos);
    CHECK(pent.out.find("mu_1: ") != std::string::npos);

    Run twice = run({"mutate", "--seed", data("gl2.seed"), "--at", "3,3"});
    CHECK(twice.code == 0);
    CHECK(twice.out.find("identical to input: yes") != std::string::npos);

    CHECK(run({"mutate", "--seed", data("gl2.seed"), "--at", "9"}).code == 2);
    CHECK(run({"mutate", "--seed", data("gl2.seed"), "--at", "4"}).code == 2);
    CHECK(run({"mutate", "--seed", data("missing.seed"), "--at", "1"}).code == 2);
    CHECK(run({"mutate", "--seed", data("gl2.seed")}).code == 2);
}

TEST_CASE("explore, twist, char, pairs") {
    Run e = run({"explore", "--seed", data("a2.seed"), "--depth", "6"});
    CHECK(e.code == 0);
    CHECK(Json::parse(e.out)["nodes"] == 5);

    Run t = run({"twist", "--seed", data("acyclic3.seed")});
    CHECK(t.code == 0);
    CHECK(Json::parse(t.out)["sequence"].size() == 3);

    Run c = run({"char", "--case", "abelian", "--window", "8"});
    CHECK(c.code == 0);
    CHECK(run({"char", "--case", "other", "--window", "8"}).code == 2);

    Run p = run({"pairs", "--n", "2", "--lo", "0", "--hi", "1"});
    CHECK(p.code == 0);
    CHECK(std::count(p.out.begin(), p.out.end(), '\n') == 10);

    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}
