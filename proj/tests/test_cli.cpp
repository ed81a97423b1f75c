#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "gf2up/classify.hpp"
#include "gf2up/poly.hpp"
#include "json.hpp"

using namespace gf2up;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check") {
  const Run ok = run({"check", "x^2+x"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "unitary-perfect: true\n");

  const Run no = run({"check", "x^3+x"});
  CHECK(no.code == 1);
  CHECK(no.out == "unitary-perfect: false\n");

  const Run json = run({"check", "x^2+x", "--format", "json"});
  CHECK(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["unitary_perfect"] == true);
}

TEST_CASE("factor") {
  const Run text = run({"factor", "x^8+x^7+1"});
  CHECK(text.code == 0);
  CHECK(text.out == "x^8+x^7+1 = (x^2+x+1)(x^6+x^4+x^3+x+1)\n");

  const Run json = run({"factor", "x^8+x^7+1", "--format", "json"});
  CHECK(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  REQUIRE(j["factors"].size() == 2);
  CHECK(parse_poly(j["factors"][0]["poly"].get<std::string>()) == parse_poly("x^2+x+1"));
  CHECK(j["factors"][1]["multiplicity"] == 1);
}

TEST_CASE("sigma and sigma-star") {
  const Run s = run({"sigma", "x^2"});
  CHECK(s.code == 0);
  CHECK(s.out == "x^2+x+1\n");
  const Run ss = run({"sigma-star", "x^2"});
  CHECK(ss.code == 0);
  CHECK(ss.out == "x^2+1\n");
  CHECK(parse_poly(ss.out.substr(0, ss.out.size() - 1)) == parse_poly("x^2+1"));
}

TEST_CASE("classify") {
  const Poly base = theorem_table()[1].base;  // Thm3.1-ii-a
  const Run hit = run({"classify", format_poly(square(base))});
  CHECK(hit.code == 0);
  CHECK(hit.out.find("label=Thm3.1-ii-a") != std::string::npos);
  CHECK(hit.out.find("n=1") != std::string::npos);

  const Run miss = run({"classify", "x^3+x+1"});
  CHECK(miss.code == 1);
  CHECK(miss.out == "absent\n");
}

TEST_CASE("error exit codes") {
  CHECK(run({"factor", "x^^2"}).code == 2);          // parse error
  CHECK(run({"factor", "1"}).code == 2);             // constant input
  CHECK(run({"no-such-command"}).code == 2);         // usage
  CHECK(run({"search", "--max-degree", "40"}).code == 3);  // resource limit
  CHECK(run({"check", "x^2+x", "--format", "yaml"}).code == 2);
  const Run perr = run({"factor", "x+云"});
  CHECK(perr.code == 2);
  CHECK(!perr.err.empty());
}

TEST_CASE("search output is stable across jobs") {
  const Run a = run({"search", "--max-degree", "12", "--jobs", "1",
                     "--format", "json", "--no-timing"});
  const Run b = run({"search", "--max-degree", "12", "--jobs", "3",
                     "--format", "json", "--no-timing"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["elapsed_ms"] == 0);
  for (const auto& h : j["hits"])
    CHECK(format_poly(parse_poly(h["poly"].get<std::string>())) ==
          h["poly"].get<std::string>());
}

TEST_CASE("structured search via the command line") {
  const Run r = run({"structured-search", "--max-prime-degree", "4",
                     "--max-exp-log", "2", "--format", "json", "--no-timing"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["hits"].size() > 0);
  bool found_base = false;
  for (const auto& h : j["hits"])
    if (h["poly"] == "x^2+x") found_base = true;
  CHECK(found_base);
}

TEST_CASE("verify-theorems") {
  const Run r = run({"verify-theorems", "--max-degree", "64"});
  CHECK(r.code == 0);
  CHECK(r.out.find("16 entries") != std::string::npos);
  const Run j = run({"verify-theorems", "--max-degree", "64", "--format", "json"});
  const auto rows = nlohmann::json::parse(j.out);
  CHECK(rows.size() == 16);
  for (const auto& row : rows) CHECK(row["verified"] == true);
}

TEST_CASE("table") {
  const Run j = run({"table", "--format", "json"});
  CHECK(j.code == 0);
  const auto rows = nlohmann::json::parse(j.out);
  REQUIRE(rows.size() == 16);
  for (const auto& row : rows) {
    const Poly p = parse_poly(row["hex"].get<std::string>());
    CHECK(p.degree() == row["degree"].get<int64_t>());
  }
  CHECK(rows[0]["label"] == "Thm3.1-i");
}

TEST_CASE("lemmas with a bounds file") {
  const std::string path = "/tmp/gf2up_test_bounds.cfg";
  {
    std::ofstream f(path);
    f << "# tiny bounds\nh_max=24\nlemma25_n_max=3\nlemma25_p_deg_max=4\n"
         "lemma26_h_max=40\nlemma28_l_max=5\nlemma28_r_max=3\ncor35_r_max=3\n"
         "swan_n_max=2\ndickson_m_max=32\ncyclo_k_max=21\ncyclo_subst_s_max=7\n"
         "search_degree=8\n";
  }
  const Run r = run({"lemmas", "--bounds", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const Run j = run({"lemmas", "--bounds", path, "--format", "json"});
  CHECK(j.code == 0);
  std::istringstream lines(j.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto obj = nlohmann::json::parse(line);
    CHECK(obj["verdict"] == "pass");
    ++count;
  }
  CHECK(count == 10);
  CHECK(run({"lemmas", "--bounds", "/nonexistent/file"}).code == 2);
}

TEST_CASE("bench asserts equality") {
  const Run r = run({"bench", "--degree", "63", "--reps", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("identical") != std::string::npos);
  const Run r0 = run({"bench", "--degree", "0", "--reps", "1"});
  CHECK(r0.code == 0);
  CHECK(r0.out.find("identical") != std::string::npos);
  const Run rj = run({"bench", "--degree", "127", "--reps", "2",
                      "--format", "json"});
  CHECK(rj.code == 0);
  CHECK(nlohmann::json::parse(rj.out)["identical"] == true);
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("factor") != std::string::npos);
}

}  // TEST_SUITE
