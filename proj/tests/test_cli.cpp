#include <doctest.h>

#include <array>
#include <cstdio>
#include <random>
#include <cstdlib>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

const char* cli_path() { return std::getenv("UNICRIT_CLI"); }

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult result{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), n);
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

json run_json(const std::string& args) {
    const RunResult r = run_cli(args);
    REQUIRE(r.status == 0);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("cli golden outputs" * doctest::skip(cli_path() == nullptr)) {
    SUBCASE("cfrac") {
        CHECK(run_json("cfrac --field p=2,k=1 --num \"z^2+1\" --den z") ==
              json::parse(R"json({"quotients":[{"coeffs":[[0],[1]]},{"coeffs":[[0],[1]]}],
                              "text":["z","z"]})json"));
    }
    SUBCASE("reconstruct") {
        CHECK(run_json("reconstruct --field p=2,k=1 --f 0 --f z") ==
              json::parse(R"json({"num":{"coeffs":[[1]]},"den":{"coeffs":[[0],[1]]},
                              "degree":1,"text":"(1)/(z)"})json"));
    }
    SUBCASE("signature") {
        CHECK(run_json("signature --field p=2,k=1 \"(z^2+1)/z\"") ==
              json::parse(R"json({"kappa":[1,1],"degree":2})json"));
    }
    SUBCASE("wronskian") {
        CHECK(run_json("wronskian --field p=2,k=1 \"(z^2+1)/z\"") ==
              json::parse(R"json({"wronskian":{"coeffs":[[1],[0],[1]]},"text":"z^2 + 1"})json"));
    }
    SUBCASE("is-unicritical") {
        CHECK(run_json("is-unicritical --field p=2,k=1 \"z^2+z\"") ==
              json::parse(R"json({"separable":true,"finite_critical":[],
                              "infinity_critical":true,"unicritical_at":"infinity",
                              "degree":2})json"));
        CHECK(run_json("is-unicritical --field p=2,k=1 \"(z^2+1)/z\"")["unicritical_at"] ==
              json::parse("[1]"));
    }
    SUBCASE("detect-form and build round trip") {
        const json built = run_json("build --field p=2,k=1 --q w --a 1");
        CHECK(built["text"] == "z^2 + z");
        const json detected = run_json("detect-form --field p=2,k=1 \"z^2+z\"");
        CHECK(detected ==
              json::parse(R"json({"found":true,"form":{"q":[{"coeffs":[[0],[1]]}],"a":[1]}})json"));
    }
    SUBCASE("signatures") {
        CHECK(run_json("signatures --field p=2,k=1 --degree 2") ==
              json::parse(R"json({"d":2,"p":2,"signatures":[[2],[0,2]]})json"));
    }
    SUBCASE("enumerate") {
        const json out = run_json("enumerate --field p=2,k=1 --degree 2 --kappa 2");
        CHECK(out["count"] == 2);
        CHECK(out["maps"][0]["text"] == "z^2 + z");
    }
    SUBCASE("count") {
        const json out = run_json("count --field p=2,k=1 --degree 2");
        CHECK(out["count"] == 6);
        CHECK(out["count_poly"] == json::parse("[0,1,-1,-1,1]"));
        const json table = run_json("count --field p=2,k=1 --degree 2 --q-values 2,4");
        CHECK(table["table"] ==
              json::parse(R"json([{"q":2,"count":6},{"q":4,"count":180}])json"));
    }
    SUBCASE("brute-count") {
        CHECK(run_json("brute-count --field p=2,k=1 --degree 2")["count"] == 6);
    }
    SUBCASE("census") {
        CHECK(run_json("census --field p=2,k=1 --degree 2") ==
              json::parse(R"json({"q":2,"strata":[{"kappa":[2],"count":2},
                              {"kappa":[0,2],"count":4}],
                              "total":6,"brute_total":6,"agree":true})json"));
    }
    SUBCASE("dim") {
        CHECK(run_json("dim --field p=2,k=1 --degree 2") ==
              json::parse(R"json({"d":2,"p":2,"dim_U_infinity":4,"dim_U":5,
                              "count_degree":4,"match":true})json"));
    }
    SUBCASE("classes-dim") {
        const json out = run_json("classes-dim --field p=2,k=1 --degree 4 --ram-index 2");
        CHECK(out["dim_classes"] == 3);
        CHECK(out["match"] == true);
    }
    SUBCASE("normal-form") {
        // 1/(z^2+z+1) is already in Y form over F_2
        const json out = run_json("normal-form --field p=2,k=1 \"(1)/(z^2+z+1)\"");
        CHECK(out["text"] == "(1)/(z^2 + z + 1)");
    }
    SUBCASE("quadric-p") {
        CHECK(run_json("quadric-p --field p=2,k=1 \"z^2+z\"")["member"] == true);
        CHECK(run_json("quadric-p --field p=2,k=1 \"z^2\"")["member"] == false);
    }
    SUBCASE("ld-decompose") {
        const json out = run_json("ld-decompose --field p=2,k=1 \"z^2+z\"");
        CHECK(out["f1"] == json::parse(R"json({"coeffs":[[0],[1]]})json"));
        CHECK(out["f2"] == json::parse(R"json({"coeffs":[[1]]})json"));
        CHECK(out["unit"] == json::parse("[1]"));
    }
    SUBCASE("reduce") {
        const json out = run_json(
            "reduce --field p=2,k=1 "
            "'{\"num\":{\"coeffs\":[\"t^1*(1)\",\"0\",\"1\"]},\"den\":{\"coeffs\":[\"0\",\"1\"]}}'");
        CHECK(out ==
              json::parse(R"json({"degree":2,"reduced":{"num":{"coeffs":[[0],[1]]},
                              "den":{"coeffs":[[1]]}},"reduced_degree":1,"text":"z"})json"));
    }
    SUBCASE("good-reduction") {
        const json out = run_json(
            "good-reduction --field p=2,k=1 "
            "'{\"num\":{\"coeffs\":[\"1\",\"0\",\"1\"]},\"den\":{\"coeffs\":[\"1\",\"t^1*(1)\"]}}'");
        CHECK(out == json::parse(R"json({"good_reduction":true,"degree":2,"reduced_degree":2})json"));
    }
    SUBCASE("verify-congruence") {
        const json out = run_json(
            "verify-congruence --field p=2,k=1 "
            "'{\"num\":{\"coeffs\":[\"1\",\"0\",\"1\"]},\"den\":{\"coeffs\":[\"1\",\"t^1*(1)\"]}}'");
        CHECK(out["applies"] == true);
        CHECK(out["case"] == "inseparable");
        CHECK(out["congruence_ok"] == true);
    }
    SUBCASE("extension fields through JSON") {
        const json out =
            run_json("census --field p=2,k=2,mod=1,1,1 --degree 2");
        CHECK(out["total"] == 180);
        CHECK(out["agree"] == true);
    }
}

TEST_CASE("cli exit codes" * doctest::skip(cli_path() == nullptr)) {
    CHECK(run_cli("is-unicritical --field p=2,k=1 \"z^2+z\"").status == 0);
    CHECK(run_cli("is-unicritical --field p=2,k=1 \"z^^\"").status == 1);     // parse
    CHECK(run_cli("is-unicritical --field p=4,k=1 \"z\"").status == 1);       // bad field
    CHECK(run_cli("nonsense-subcommand").status == 1);
    CHECK(run_cli("quadric-p --field p=2,k=1 \"z^3\"").status == 2);          // domain
    CHECK(run_cli("enumerate --field p=2,k=1 --degree 4 --kappa 0,2,2 --limit 3").status ==
          2); // limit
    CHECK(run_cli("reduce --field p=2,k=1 '{\"num\":1}'").status == 1);       // bad JSON shape
}

TEST_CASE("cli build|detect scripted round trips" * doctest::skip(cli_path() == nullptr)) {
    // a few fixed parameter sets, piped through both directions
    const std::array<std::string, 3> builds{
        "build --field p=2,k=1 --q 1 --q w --q w --a 1",
        "build --field p=3,k=1 --q w --a 2",
        "build --field p=2,k=1 --q 0 --q \"w+1\" --a 1",
    };
    for (const auto& b : builds) {
        const json built = run_json(b);
        json map{{"num", built["num"]}, {"den", built["den"]}};
        std::string field = b.find("p=3") != std::string::npos ? "p=3,k=1" : "p=2,k=1";
        const json detected =
            run_json("detect-form --field " + field + " '" + map.dump() + "'");
        CHECK(detected["found"] == true);
    }

    // seeded random parameter sets through the JSON form input
    std::mt19937_64 rng(20250810);
    auto residue = [&](long long v) {
        json r = json::array();
        r.push_back(v);
        return r;
    };
    for (int trial = 0; trial < 10; ++trial) {
        const long long p = trial % 2 ? 3 : 2;
        const long long deg = 1 + static_cast<long long>(rng() % 2);
        json q = json::array();
        json head = json::array(); // constant q_0, possibly zero
        if (rng() % 2) head.push_back(residue(1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(p - 1))));
        q.push_back(json{{"coeffs", head}});
        for (long long i = 0; i < deg; ++i) {
            json coeffs = json::array();
            coeffs.push_back(residue(static_cast<long long>(rng() % p)));
            coeffs.push_back(residue(1 + static_cast<long long>(rng() % (p - 1))));
            q.push_back(json{{"coeffs", coeffs}});
        }
        const json form{{"q", q}, {"a", residue(1 + static_cast<long long>(rng() % (p - 1)))}};
        const std::string field = "p=" + std::to_string(p) + ",k=1";
        const json built = run_json("build --field " + field + " '" + form.dump() + "'");
        json map{{"num", built["num"]}, {"den", built["den"]}};
        const json detected =
            run_json("detect-form --field " + field + " '" + map.dump() + "'");
        CHECK(detected["found"] == true);
        CHECK(detected["form"] == form);
    }
}
