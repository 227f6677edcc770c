#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "rgc/hrepair.hpp"
#include "rgc/serialize.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(RGC_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const RunResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("bounds subcommand emits exact rationals") {
  RunResult r = run("bounds --n 6 --k 3 --d 5 --alpha 16 --beta 4 --bound repair-matrix");
  REQUIRE(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["results"][0]["value"] == "296/7");
  CHECK(j["results"][0]["applicable"] == true);
  CHECK(j["tool"] == "rgc");

  r = run("bounds --n 4 --k 3 --d 3 --alpha 3 --beta 1 --bound tian433");
  REQUIRE(r.exit_code == 0);
  CHECK(parse(r)["results"][0]["value"] == "6");

  r = run("bounds --n 5 --k 4 --d 4 --alpha 6 --beta 3 --bound linear");
  REQUIRE(r.exit_code == 0);
  CHECK(parse(r)["results"][0]["value"] == "20");

  // Rational flag values round-trip through the parser.
  r = run("bounds --n 5 --k 4 --d 4 --alpha 5/2 --beta 2 --bound linear");
  REQUIRE(r.exit_code == 0);
  CHECK(parse(r)["results"][0]["value"] == "19/2");
}

TEST_CASE("argument and applicability errors use the exit-code contract") {
  CHECK(run("bounds --n 6 --k 3 --d 5 --alpha 16 --beta 4 --bound bogus").exit_code == 2);
  CHECK(run("bounds --n 6 --k 9 --d 5 --alpha 16 --beta 4").exit_code == 2);
  CHECK(run("bounds --n 6 --k 3 --d 5 --alpha 1 --beta 4 --bound cutset").exit_code == 2);
  CHECK(run("bounds --n 6 --k 3 --d 5 --alpha 16 --beta 4 --bound tian433").exit_code == 3);
  CHECK(run("curve --n 6 --k 3 --d 5 --bound linear").exit_code == 3);
  RunResult bad = run("bounds --n 6 --k 3 --d 5 --alpha x --beta 4");
  CHECK(bad.exit_code == 2);
  CHECK(parse(bad).contains("error"));
}

TEST_CASE("curve subcommand") {
  RunResult r = run("curve --n 6 --k 3 --d 5 --bound repair-matrix --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("beta_bar,alpha_bar,beta_bar_frac,alpha_bar_frac\n") == 0);
  CHECK(r.out.find("1/12,5/12") != std::string::npos);
  CHECK(r.out.find("2/19,13/38") != std::string::npos);
  CHECK(r.out.find("1/9,1/3") != std::string::npos);

  RunResult j = run("curve --n 6 --k 5 --d 5 --bound linear");
  REQUIRE(j.exit_code == 0);
  auto verts = parse(j)["results"]["vertices"];
  REQUIRE(verts.size() == 5);
  CHECK(verts[0]["beta_bar"] == "1/15");
  CHECK(verts[0]["alpha_bar"] == "1/3");

  // The achievable region of (6,5,5) coincides with the linear-bound curve.
  RunResult a = run("curve --n 6 --k 5 --d 5 --bound achievable");
  REQUIRE(a.exit_code == 0);
  CHECK(parse(a)["results"]["vertices"] == verts);
}

TEST_CASE("identical invocations are byte-identical modulo timing") {
  auto strip_timing = [](const RunResult& r) {
    auto j = parse(r);
    j.erase("timing_ms");
    return j.dump();
  };
  RunResult r1 = run("bounds --n 13 --k 7 --d 12 --alpha 9 --beta 1");
  RunResult r2 = run("bounds --n 13 --k 7 --d 12 --alpha 9 --beta 1");
  REQUIRE(r1.exit_code == 0);
  CHECK(strip_timing(r1) == strip_timing(r2));

  RunResult v1 = run("verify --suite chain --n 5 --alpha 4 --beta 2 --field 2 --trials 5 --seed 7");
  RunResult v2 = run("verify --suite chain --n 5 --alpha 4 --beta 2 --field 2 --trials 5 --seed 7");
  REQUIRE(v1.exit_code == 0);
  CHECK(strip_timing(v1) == strip_timing(v2));
}

TEST_CASE("verify layered suite") {
  RunResult r = run("verify --suite layered --n 5 --r 3");
  REQUIRE(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["results"]["ok"] == true);
  CHECK(j["results"]["file_size"] == 20);
  CHECK(j["results"]["parity_rank"] == 10);
}

TEST_CASE("verify hrepair rejects a rank-violating matrix file") {
  // Crafted fixture: off-diagonal block of rank 2 against beta = 1.
  rgc::BlockMatrix h;
  h.n = 3;
  h.alpha = 2;
  h.beta_cap = 1;
  h.base = rgc::GFMatrix(2, 6, 6);
  for (std::size_t i = 0; i < 6; ++i) h.base.set(i, i, 1);
  h.base.set(2, 0, 1);  // block (2,1) = I2
  h.base.set(3, 1, 1);
  auto tmp = std::filesystem::temp_directory_path() / "rgc_bad_matrix.json";
  {
    std::ofstream out(tmp);
    out << rgc::block_matrix_to_json(h).dump();
  }
  RunResult r = run("verify --suite hrepair --matrix " + tmp.string());
  CHECK(r.exit_code == 4);
  auto j = parse(r);
  CHECK(j["results"]["ok"] == false);
  std::string text = r.out;
  CHECK(text.find("off_diagonal_rank") != std::string::npos);
  CHECK(text.find("(2,1)") != std::string::npos);
  std::filesystem::remove(tmp);
}

TEST_CASE("RGC_SEED environment variable overrides --seed") {
  std::string cmd = "RGC_SEED=9 " + std::string(RGC_BIN) +
                    " verify --suite chain --n 5 --alpha 4 --beta 2 --field 2 --trials 3 --seed 1";
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  auto j = nlohmann::json::parse(out);
  CHECK(j["params"]["seed"] == 9);
}

TEST_CASE("compare writes one CSV per curve plus manifest and dominance table") {
  auto dir = std::filesystem::temp_directory_path() / "rgc_compare_test";
  std::filesystem::remove_all(dir);
  RunResult r = run("compare --n 6 --k 5 --d 5 --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  for (const char* f : {"fr.csv", "repair-matrix.csv", "mohajer-tandon.csv", "improved-mt.csv",
                        "combined.csv", "linear.csv", "achievable.csv", "manifest.json",
                        "dominance.csv"})
    CHECK(std::filesystem::exists(dir / f));

  // k = d: the Mohajer-Tandon and improved curves are identical files.
  std::ifstream mt(dir / "mohajer-tandon.csv"), imt(dir / "improved-mt.csv");
  std::string mt_text((std::istreambuf_iterator<char>(mt)), {});
  std::string imt_text((std::istreambuf_iterator<char>(imt)), {});
  CHECK(mt_text == imt_text);
  std::filesystem::remove_all(dir);

  CHECK(run("compare --n 6 --k 5 --d 5 --out /proc/nope").exit_code == 5);
}

TEST_CASE("dominance table shows the improved bound winning away from MSR when d > k") {
  auto dir = std::filesystem::temp_directory_path() / "rgc_compare_big";
  std::filesystem::remove_all(dir);
  RunResult r = run("compare --n 13 --k 7 --d 12 --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  std::ifstream dom(dir / "dominance.csv");
  std::string line;
  bool improved_wins = false, repair_matrix_wins = false;
  while (std::getline(dom, line)) {
    if (line.size() >= 12 && line.rfind(",improved-mt") == line.size() - 12) improved_wins = true;
    if (line.size() >= 14 && line.rfind(",repair-matrix") == line.size() - 14)
      repair_matrix_wins = true;
  }
  CHECK(improved_wins);
  CHECK(repair_matrix_wins);
  std::filesystem::remove_all(dir);
}
