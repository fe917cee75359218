#include "bialg/cli.hpp"
#include "bialg/reproduce.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace bialg;
namespace fs = std::filesystem;

namespace {

const std::string kCorpus = BIALG_CORPUS_DIR;

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "bialg");
    std::ostringstream out, err;
    int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string in(const std::string& name) { return kCorpus + "/" + name; }

}  // namespace

TEST_CASE("check: pass, fail, and the first violation", "[cli]") {
    Result ok = run({"check", in("ex-D-alg-iii.json")});
    CHECK(ok.code == cli::kPass);
    CHECK_THAT(ok.out, Catch::Matchers::ContainsSubstring("PASS"));

    Result bad = run({"--format", "json", "check", in("lie-broken-jacobi.json")});
    CHECK(bad.code == cli::kFail);
    auto j = nlohmann::json::parse(bad.out);
    CHECK(j["status"] == "fail");
    bool seen = false;
    for (const auto& c : j["checks"])
        if (c["check_id"] == "lie-jacobi") {
            seen = true;
            CHECK(c["residual_norm_is_zero"] == false);
            CHECK(c["first_violation"]["indices"] == nlohmann::json::array({0, 1, 2, 2}));
            CHECK(c["first_violation"]["value"] == "1");
        }
    CHECK(seen);

    CHECK(run({"check", in("qperm-B.json")}).code == cli::kPass);
    CHECK(run({"check", in("D-bialgebra-e1e1.json")}).code == cli::kPass);
}

TEST_CASE("usage and input errors exit 2", "[cli]") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"check"}).code == cli::kUsage);
    CHECK(run({"check", in("does-not-exist.json")}).code == cli::kUsage);
    CHECK(run({"--format", "xml", "check", in("ex-D-alg-iii.json")}).code == cli::kUsage);
    CHECK(run({"reproduce", "ex-9.99"}).code == cli::kUsage);
    // kind mismatch: DYBE needs a dendriform algebra
    Result k = run({"ybe", "--eq", "dybe", "--algebra", in("prelie-A.json"), "--r", in("r-e1e1.json")});
    CHECK(k.code == cli::kUsage);
    CHECK_THAT(k.err, Catch::Matchers::ContainsSubstring("dendriform"));
    // window too small for depth-2 identities
    Result w = run({"affine", "--dendriform", in("ex-D-alg-iii.json"), "--window", "1", "--check", "assoc"});
    CHECK(w.code == cli::kUsage);
    CHECK_THAT(w.err, Catch::Matchers::ContainsSubstring("insufficient window"));
}

TEST_CASE("malformed input files exit 2 with the field path", "[cli]") {
    fs::path p = fs::temp_directory_path() / "bialg-test-bad.json";
    {
        std::ofstream f(p);
        f << R"({"format":1,"kind":"lie","dim":2,"products":{"mul":[{"left":0,"right":7,"result":[]}]}})";
    }
    Result r = run({"check", p.string()});
    CHECK(r.code == cli::kUsage);
    CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("products.mul[0].right"));
    fs::remove(p);
}

TEST_CASE("a constructor given an input that fails its axioms exits 1", "[cli]") {
    fs::path p = fs::temp_directory_path() / "bialg-test-unverified.json";
    {
        // e1≺e1 = e1 on top of the dendriform example breaks dend-1
        auto j = nlohmann::ordered_json::parse(std::ifstream(in("ex-D-alg-iii.json")));
        j["products"]["prec"].push_back({{"left", 0}, {"right", 0}, {"result", {{{"index", 0}, {"coeff", "1"}}}}});
        std::ofstream(p) << j.dump();
    }
    Result r = run({"induce", "--construction", "prelie", "--dendriform", p.string()});
    CHECK(r.code == cli::kFail);
    CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("dend-1"));
    CHECK(run({"check", p.string()}).code == cli::kFail);
    fs::remove(p);
}

TEST_CASE("help and version exit 0", "[cli]") {
    CHECK(run({"--help"}).code == cli::kPass);
    Result v = run({"--version"});
    CHECK(v.code == cli::kPass);
    CHECK_THAT(v.out, Catch::Matchers::ContainsSubstring("1.0.0"));
}

TEST_CASE("ybe and invariance", "[cli]") {
    CHECK(run({"ybe", "--eq", "dybe", "--algebra", in("ex-D-alg-iii.json"), "--r", in("r-e1e1.json")}).code == cli::kPass);
    CHECK(run({"ybe", "--eq", "dybe", "--algebra", in("ex-D-alg-iii.json"), "--r", in("r-beta1-gamma1.json")}).code ==
          cli::kPass);
    CHECK(run({"ybe", "--eq", "plybe", "--algebra", in("prelie-A.json"), "--r", in("r-e1e1.json")}).code == cli::kPass);
    Result bad = run({"ybe", "--eq", "dybe", "--algebra", in("ex-D-alg-iii.json"), "--r", in("r-e1e2.json")});
    CHECK(bad.code == cli::kFail);
    CHECK(run({"invariance", "--kind", "prelie", "--algebra", in("prelie-A.json"), "--r", in("r-e1e1.json")}).code ==
          cli::kFail);
}

TEST_CASE("induce writes the structure as an artifact", "[cli]") {
    fs::path out = fs::temp_directory_path() / "bialg-test-lie.json";
    Result r = run({"--format", "json", "induce", "--construction", "tensor-lie", "--algebra", in("prelie-A.json"),
                    "--perm", in("perm-B.json"), "--out", out.string()});
    REQUIRE(r.code == cli::kPass);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("artifacts"));
    REQUIRE(fs::exists(out));
    Result c = run({"check", out.string()});
    CHECK(c.code == cli::kPass);
    fs::remove(out);
}

TEST_CASE("affine checks on the worked examples", "[cli]") {
    CHECK(run({"affine", "--dendriform", in("ex-D-alg-iii.json"), "--window", "2", "--check", "assoc"}).code ==
          cli::kPass);
    CHECK(run({"affine", "--dendriform", in("D-bialgebra-e1e1.json"), "--window", "2", "--check", "coalg"}).code ==
          cli::kPass);
    CHECK(run({"affine", "--dendriform", in("D-bialgebra-e1e1.json"), "--window", "2", "--check", "asi"}).code ==
          cli::kPass);
}

TEST_CASE("JSON reports are byte-identical across runs", "[cli]") {
    std::vector<std::string> args{"--format", "json", "reproduce", "ex-2.13"};
    Result a = run(args), b = run(args);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["provenance"]["tool"] == "bialg");
    CHECK(j["provenance"]["inputs"].size() > 0);
    for (const auto& i : j["provenance"]["inputs"]) CHECK(i["sha256"].get<std::string>().size() == 64);
}

TEST_CASE("every example id reproduces without error", "[cli]") {
    for (const auto& id : repro::example_ids()) {
        INFO(id);
        Result r = run({"--format", "json", "reproduce", id});
        CHECK((r.code == cli::kPass || r.code == cli::kFail));
        CHECK(r.err.empty());
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["status"] == (r.code == cli::kPass ? "pass" : "fail"));
    }
}

TEST_CASE("the installed binary maps outcomes to exit codes", "[cli]") {
    auto code = [](const std::string& args) {
        int st = std::system((std::string(BIALG_TOOL) + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    };
    CHECK(code("check " + in("ex-D-alg-iii.json")) == 0);
    CHECK(code("check " + in("lie-broken-jacobi.json")) == 1);
    CHECK(code("check") == 2);
}
