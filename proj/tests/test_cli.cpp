#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "gpi/cli.hpp"
#include "gpi/error.hpp"
#include "support.hpp"

using namespace gpi;
using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Result gpi_run(std::vector<std::string> args) {
  args.insert(args.begin(), "gpi");
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(GPI_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify") {
    const auto r = gpi_run({"classify", "--n", "14", "--p", "3"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.doc() == json::parse(R"({"case":"I","l":0,"k":14})"));
    CHECK(nlohmann::ordered_json::parse(r.out).dump() == R"({"case":"I","l":0,"k":14})");
    const auto two = gpi_run({"classify", "--n", "6", "--p", "5"});
    CHECK(two.doc() == json::parse(R"({"case":"II","l":0,"m":1,"k":6})"));
    const auto bad = gpi_run({"classify", "--n", "7", "--p", "5"});
    CHECK(bad.code == cli::kExitInput);
    CHECK(bad.doc().contains("error"));
    CHECK(bad.err.find("gpi: error:") == 0);
  }

  TEST_CASE("check-gpi") {
    const auto r = gpi_run({"check-gpi", "--algebra", data("m2f3.json"), "--expr", "X*Y-Y*X"});
    CHECK(r.code == cli::kExitViolated);
    const auto j = r.doc();
    CHECK_FALSE(j["holds"].get<bool>());
    CHECK(j["witness"] == json::parse("[[1,0,0,0],[0,1,0,0]]"));
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["seed"].is_null());

    const auto ok = gpi_run({"check-gpi", "--algebra", data("gf9.json"), "--expr", "X*Y - Y*X"});
    CHECK(ok.code == cli::kExitOk);
    CHECK(ok.doc()["checked"] == 81);

    const auto s = gpi_run({"check-gpi", "--algebra", data("m2f3.json"), "--expr", "X*Y-Y*X", "--sampled", "--seed",
                            "9", "--trials", "50"});
    CHECK(s.code == cli::kExitViolated);
    CHECK(s.doc()["mode"] == "sampled");
    CHECK(s.doc()["seed"] == 9);
  }

  TEST_CASE("identical invocations give identical bytes") {
    const std::vector<std::string> args = {"check-gpi", "--algebra", data("m2f5.json"), "--expr", "X*Y*X - X*X*Y",
                                           "--sampled", "--seed", "123"};
    const auto a = gpi_run(args), b = gpi_run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }

  TEST_CASE("solve-fi") {
    const auto r = gpi_run({"solve-fi", "--algebra", data("gf5.json"), "--template", "power", "--n", "6", "--contains",
                            "id,id"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.doc()["contains"] == true);
    CHECK(r.doc()["dimension"] == 1);

    const auto f = gpi_run({"solve-fi", "--algebra", data("gf9.json"), "--template", "power", "--n", "12",
                            "--contains", "id,frob"});
    CHECK(f.code == cli::kExitOk);

    const auto no = gpi_run({"solve-fi", "--algebra", data("gf9.json"), "--template", "power", "--n", "12",
                             "--contains", "id,zero"});
    CHECK(no.code == cli::kExitViolated);
    CHECK(no.doc()["contains"] == false);

    const auto m = gpi_run({"solve-fi", "--algebra", data("m2f3.json"), "--template", "power", "--n", "3"});
    CHECK(m.doc()["dimension"] == 0);
    CHECK(m.doc()["rows"] == 48 * 4);
    CHECK(m.doc()["cols"] == 32);
  }

  TEST_CASE("solve-fi with a template file") {
    const auto path = std::filesystem::temp_directory_path() / "gpi_cli_template.json";
    {
      std::ofstream t(path);
      t << R"({"unknowns": 2, "domain": "units",
               "terms": [{"L": "1", "slot": 0, "arg": "x", "R": "1"},
                         {"L": "x^2", "slot": 1, "arg": "xinv", "R": "1"}],
               "rhs": "0"})";
    }
    const auto r = gpi_run({"solve-fi", "--algebra", data("m2f3.json"), "--template", path.string(), "--contains",
                            "rmul:e12,rmul:2*e12"});
    CHECK(r.code == cli::kExitOk);
    std::filesystem::remove(path);
  }

  TEST_CASE("check-fi") {
    CHECK(gpi_run({"check-fi", "--algebra", data("gf5.json"), "--template", "power", "--n", "6", "--maps", "id,id"})
              .code == cli::kExitOk);
    const auto bad =
        gpi_run({"check-fi", "--algebra", data("gf5.json"), "--template", "power", "--n", "6", "--maps", "id,0"});
    CHECK(bad.code == cli::kExitViolated);
    CHECK(bad.doc()["witness"] == json::parse("[[1]]"));
    CHECK(gpi_run({"check-fi", "--algebra", data("gf9.json"), "--template", "gx", "--G", "X", "--H", "X^4", "--maps",
                   "frob"})
              .code == cli::kExitOk);
    const auto w =
        gpi_run({"check-fi", "--algebra", data("gf9.json"), "--template", "w", "--w", "X^3", "--maps", "frob,frob"});
    CHECK(w.code == cli::kExitOk);
    CHECK(w.doc()["hypothesis"]["holds"] == true);
    CHECK(w.doc()["conclusion"]["holds"] == true);
  }

  TEST_CASE("polynomial commands") {
    const auto e = gpi_run({"eval", "--algebra", data("gf9.json"), "--expr", "X^2", "--at", "t"});
    CHECK(e.code == cli::kExitOk);
    CHECK(e.doc()["value"] == "2");
    CHECK(e.doc()["coords"] == json::parse("[2,0]"));

    const auto l = gpi_run({"linearize", "--algebra", data("m2f3.json"), "--expr", "e11*X*e12*X", "--t", "2"});
    CHECK(l.code == cli::kExitOk);
    CHECK(l.doc()["degree"] == 2);

    const auto h = gpi_run({"homog", "--algebra", data("m2f3.json"), "--expr", "e11*X*e12*X + X + e21", "--degree", "0"});
    CHECK(h.doc()["text"] == "e21");

    const auto z = gpi_run({"is-zero-formal", "--algebra", data("m2f3.json"), "--expr", "e11*X - X*e11"});
    CHECK(z.doc()["zero"] == false);
    const auto a = gpi_run({"is-zero-formal", "--algebra", data("m2f3.json"), "--expr", "e11*X*e22 + e12*X"});
    CHECK(a.doc()["additive"] == true);

    const auto bad = gpi_run({"eval", "--algebra", data("gf9.json"), "--expr", "X^", "--at", "t"});
    CHECK(bad.code == cli::kExitInput);
    CHECK(bad.doc()["error"].get<std::string>().find("1:") != std::string::npos);
  }

  TEST_CASE("number theory commands") {
    CHECK(gpi_run({"binom", "--k", "14", "--t", "2", "--p", "3"}).doc()["value"] == 1);
    const auto l3 = gpi_run({"lemma3", "--k", "7", "--p", "3"});
    CHECK(l3.doc()["m"] == 1);
    CHECK(l3.doc()["residue"] == 2);
    CHECK(gpi_run({"lemma3", "--k", "2", "--p", "3"}).code == cli::kExitInput);
    const auto pp = gpi_run({"poly-p", "--n", "14", "--p", "3"});
    CHECK(pp.doc()["zero"] == false);
    CHECK(gpi_run({"poly-p", "--n", "6", "--p", "5"}).doc()["zero"] == true);
    const auto q = gpi_run({"poly-q", "--algebra", data("m2f3.json"), "--p", "3", "--l", "1", "--m", "1", "--at",
                            "e11;e12"});
    CHECK(q.doc()["value"] == "2*e12");
    CHECK(q.doc()["degree"] == 9);
    const auto nr = gpi_run({"p-nonroot", "--n", "14", "--p", "3", "--q", "9"});
    CHECK(nr.doc()["found"] == false);
    const auto sf = gpi_run({"scaling-filter", "--p", "5", "--n", "3"});
    CHECK(sf.doc()["result"] == "forces_zero");
    CHECK(sf.doc()["k"] == 2);
  }

  TEST_CASE("algebra commands") {
    const auto a = gpi_run({"algebra", "--kind", "field", "--p", "3", "--k", "2"});
    CHECK(a.code == cli::kExitOk);
    CHECK(a.doc()["dim"] == 2);
    CHECK(a.doc()["units"] == 8);
    const auto red = gpi_run({"algebra", "--kind", "field", "--p", "3", "--k", "2", "--modulus", "2,0,1"});
    CHECK(red.code == cli::kExitInput);
    const auto u = gpi_run({"units-generate", "--algebra", data("f2xf2.json")});
    CHECK(u.doc()["generates"] == false);
    CHECK(u.doc()["rank"] == 1);
    const auto hua = gpi_run({"check-hua", "--algebra", data("gf3.json")});
    CHECK(hua.code == cli::kExitOk);
    CHECK(hua.doc()["admissible"] == 2);
    const auto d = gpi_run({"decompose", "--algebra", data("m2f3.json"), "--map", "transpose"});
    CHECK(d.code == cli::kExitOk);
    CHECK(d.doc()["success"] == true);
    const auto fail = gpi_run({"decompose", "--algebra", data("f2xf2.json"), "--map", "[[0,1],[1,0]]"});
    CHECK(fail.code == cli::kExitViolated);
  }

  TEST_CASE("input errors") {
    CHECK(gpi_run({}).code == cli::kExitInput);
    CHECK(gpi_run({"frobnicate"}).code == cli::kExitInput);
    CHECK(gpi_run({"check-gpi", "--algebra", data("nope.json"), "--expr", "X"}).code == cli::kExitInput);
    CHECK(gpi_run({"check-gpi", "--algebra", data("m2f3.json"), "--expr", "e13*X"}).code == cli::kExitInput);
    const auto budget = gpi_run({"check-gpi", "--algebra", data("m2f5.json"), "--expr", "X*Y*Z", "--budget", "1000"});
    CHECK(budget.code == cli::kExitInput);
    CHECK(budget.doc()["error"].get<std::string>().find("budget") != std::string::npos);
    const auto no_h = gpi_run({"solve-fi", "--algebra", data("gf9.json"), "--template", "gx", "--G", "X"});
    CHECK(no_h.code == cli::kExitOk);
  }

  TEST_CASE("map specs") {
    const auto M = matrix_algebra(2, 3);
    const auto maps = cli::parse_maps("id, zero, lmul:e12, rmul:(e11+e21), [[1,0,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,1]]", *M);
    REQUIRE(maps.size() == 5);
    CHECK(maps[0] == AdditiveMap::identity(*M));
    CHECK(maps[1] == AdditiveMap::zero(*M));
    CHECK(maps[2] == AdditiveMap::left_mul(test::el(*M, "e12")));
    CHECK(maps[4] == cli::parse_maps("transpose", *M)[0]);
    CHECK_THROWS_AS(cli::parse_maps("frob", *M), InputError);
    CHECK_THROWS_AS(cli::parse_maps("spin", *M), InputError);
  }
}
