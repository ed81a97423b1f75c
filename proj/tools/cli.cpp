#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "gf2up/classify.hpp"
#include "gf2up/divisor.hpp"
#include "gf2up/errors.hpp"
#include "gf2up/factor.hpp"
#include "gf2up/lemmas.hpp"
#include "gf2up/poly.hpp"
#include "gf2up/search.hpp"
#include "json.hpp"

namespace gf2up::cli {
namespace {

using nlohmann::ordered_json;

std::string factored_string(const std::vector<std::pair<Poly, unsigned>>& fs) {
  std::string s;
  for (const auto& [p, m] : fs) {
    s += (p == Poly::x()) ? "x" : "(" + format_poly(p) + ")";
    if (m != 1) s += "^" + std::to_string(m);
  }
  return s;
}

int emit_search_report(const SearchReport& rep, const std::string& format,
                       bool no_timing, std::ostream& out) {
  if (format == "json") {
    out << report_to_json(rep, !no_timing);
    return 0;
  }
  out << "max_degree=" << rep.max_degree << " hits=" << rep.hits.size()
      << " candidates_tested=" << rep.candidates_tested;
  if (!no_timing) out << " elapsed_ms=" << rep.elapsed.count();
  out << "\n";
  for (const SearchHit& h : rep.hits) {
    out << format_poly(h.poly) << " degree=" << h.poly.degree()
        << " omega=" << h.omega << " label=" << (h.label ? *h.label : "-")
        << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"polynomial arithmetic and unitary perfect polynomial verification over GF(2)"};
  app.require_subcommand(1);

  std::string poly_arg;
  std::string format = "text";
  uint64_t seed = kDefaultFactorSeed;
  unsigned jobs = 1;
  bool no_timing = false;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* factor_cmd = app.add_subcommand("factor", "factor a polynomial into irreducibles");
  factor_cmd->add_option("poly", poly_arg, "polynomial")->required();
  factor_cmd->add_option("--seed", seed, "equal-degree splitting seed");
  add_format(factor_cmd);

  CLI::App* sigma_cmd = app.add_subcommand("sigma", "sum of all monic divisors");
  sigma_cmd->add_option("poly", poly_arg, "polynomial")->required();
  add_format(sigma_cmd);

  CLI::App* sigma_star_cmd = app.add_subcommand("sigma-star", "sum of all unitary divisors");
  sigma_star_cmd->add_option("poly", poly_arg, "polynomial")->required();
  add_format(sigma_star_cmd);

  CLI::App* check_cmd = app.add_subcommand("check", "test whether a polynomial is unitary perfect");
  check_cmd->add_option("poly", poly_arg, "polynomial")->required();
  add_format(check_cmd);

  CLI::App* classify_cmd = app.add_subcommand("classify", "locate a polynomial in the classification orbits");
  classify_cmd->add_option("poly", poly_arg, "polynomial")->required();
  add_format(classify_cmd);

  uint64_t max_degree = 14, degree_limit = 28;
  bool no_prune = false;
  CLI::App* search_cmd = app.add_subcommand("search", "brute-force search for unitary perfect polynomials");
  search_cmd->add_option("--max-degree", max_degree, "largest degree to enumerate");
  search_cmd->add_option("--limit", degree_limit, "resource ceiling on max-degree");
  search_cmd->add_flag("--no-prune", no_prune, "enumerate all polynomials, not just multiples of x(x+1)");
  search_cmd->add_option("--jobs", jobs, "worker threads");
  search_cmd->add_flag("--no-timing", no_timing, "emit elapsed_ms as 0 for byte-stable output");
  add_format(search_cmd);

  uint64_t max_prime_degree = 13, max_exp_log = 5, odd_part_max = 25;
  CLI::App* structured_cmd = app.add_subcommand("structured-search", "shape-constrained search for unitary perfect polynomials");
  structured_cmd->add_option("--max-prime-degree", max_prime_degree, "largest prime degree in the pool");
  structured_cmd->add_option("--max-exp-log", max_exp_log, "largest 2-power index in exponents");
  structured_cmd->add_option("--odd-part-max", odd_part_max, "largest odd part of the x / x+1 exponents");
  structured_cmd->add_option("--jobs", jobs, "worker threads");
  structured_cmd->add_option("--seed", seed, "equal-degree splitting seed");
  structured_cmd->add_flag("--no-timing", no_timing, "emit elapsed_ms as 0 for byte-stable output");
  add_format(structured_cmd);

  uint64_t verify_max_degree = 256;
  CLI::App* verify_cmd = app.add_subcommand("verify-theorems", "verify every classification entry, conjugate and square");
  verify_cmd->add_option("--max-degree", verify_max_degree, "orbit degree bound");
  add_format(verify_cmd);

  std::string bounds_file;
  CLI::App* lemmas_cmd = app.add_subcommand("lemmas", "run the supporting-lemma check suite");
  lemmas_cmd->add_option("--bounds", bounds_file, "key=value bounds file");
  add_format(lemmas_cmd);

  CLI::App* table_cmd = app.add_subcommand("table", "print the classification table");
  add_format(table_cmd);

  uint64_t bench_degree = 4095, bench_reps = 10;
  CLI::App* bench_cmd = app.add_subcommand("bench", "time packed vs naive multiplication");
  bench_cmd->add_option("--degree", bench_degree, "operand degree");
  bench_cmd->add_option("--reps", bench_reps, "repetitions");
  add_format(bench_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gf2up");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const bool json = (format == "json");
  try {
    if (factor_cmd->parsed()) {
      const Poly a = parse_poly(poly_arg);
      const Factorization f = factor(a, seed);
      if (json) {
        ordered_json j;
        j["input"] = format_poly(a);
        j["factors"] = ordered_json::array();
        for (const auto& [p, m] : f.factors)
          j["factors"].push_back({{"poly", format_poly(p)}, {"multiplicity", m}});
        out << j.dump(2) << "\n";
      } else {
        out << format_poly(a) << " = " << f.to_string() << "\n";
      }
      return 0;
    }

    if (sigma_cmd->parsed() || sigma_star_cmd->parsed()) {
      const Poly a = parse_poly(poly_arg);
      const bool star = sigma_star_cmd->parsed();
      const Poly s = star ? sigma_star(a) : sigma(a);
      if (json) {
        ordered_json j;
        j["input"] = format_poly(a);
        j[star ? "sigma_star" : "sigma"] = format_poly(s);
        out << j.dump(2) << "\n";
      } else {
        out << format_poly(s) << "\n";
      }
      return 0;
    }

    if (check_cmd->parsed()) {
      const Poly a = parse_poly(poly_arg);
      const bool up = is_unitary_perfect(a);
      if (json) {
        ordered_json j;
        j["input"] = format_poly(a);
        j["unitary_perfect"] = up;
        out << j.dump(2) << "\n";
      } else {
        out << "unitary-perfect: " << (up ? "true" : "false") << "\n";
      }
      return up ? 0 : 1;
    }

    if (classify_cmd->parsed()) {
      const Poly a = parse_poly(poly_arg);
      const auto c = classify(a);
      if (json) {
        ordered_json j;
        j["input"] = format_poly(a);
        if (c) {
          j["label"] = c->label;
          j["n"] = c->n;
          j["conjugated"] = c->conjugated;
        } else {
          j["label"] = nullptr;
        }
        out << j.dump(2) << "\n";
      } else if (c) {
        out << "label=" << c->label << " n=" << c->n
            << " conjugated=" << (c->conjugated ? "true" : "false") << "\n";
      } else {
        out << "absent\n";
      }
      return c ? 0 : 1;
    }

    if (search_cmd->parsed()) {
      SearchOptions opts;
      opts.jobs = jobs;
      opts.degree_limit = degree_limit;
      const SearchReport rep = brute_force_search(max_degree, !no_prune, opts);
      return emit_search_report(rep, format, no_timing, out);
    }

    if (structured_cmd->parsed()) {
      SearchOptions opts;
      opts.jobs = jobs;
      opts.odd_part_max = odd_part_max;
      opts.seed = seed;
      const SearchReport rep = structured_search(max_prime_degree, max_exp_log, opts);
      return emit_search_report(rep, format, no_timing, out);
    }

    if (verify_cmd->parsed()) {
      bool all_ok = true;
      uint64_t members = 0;
      ordered_json jrows = ordered_json::array();
      for (const ClassEntry& e : theorem_table()) {
        bool ok = true;
        uint64_t count = 0;
        const uint64_t bound =
            std::max(verify_max_degree, uint64_t(e.base.degree()));
        for (const Poly& p : orbit(e, bound)) {
          ++count;
          if (!is_unitary_perfect(p)) ok = false;
        }
        members += count;
        all_ok = all_ok && ok;
        if (json) {
          jrows.push_back({{"label", e.label},
                           {"degree", e.base.degree()},
                           {"omega", e.omega},
                           {"self_conjugate", e.self_conjugate},
                           {"orbit_members", count},
                           {"verified", ok}});
        } else {
          std::ostringstream row;
          row << e.label;
          row << std::string(e.label.size() < 14 ? 14 - e.label.size() : 1, ' ');
          row << "degree=" << e.base.degree() << " omega=" << e.omega
              << " self-conjugate=" << (e.self_conjugate ? "yes" : "no ")
              << " orbit=" << count << " " << (ok ? "ok" : "FAILED");
          out << row.str() << "\n";
        }
      }
      if (json) {
        out << jrows.dump(2) << "\n";
      } else {
        out << (all_ok ? "verified " : "FAILED: ") << theorem_table().size()
            << " entries, " << members << " orbit members up to degree "
            << verify_max_degree << "\n";
      }
      return all_ok ? 0 : 1;
    }

    if (lemmas_cmd->parsed()) {
      LemmaBounds bounds;
      if (!bounds_file.empty()) {
        std::ifstream in(bounds_file);
        if (!in) {
          err << "error: cannot open bounds file '" << bounds_file << "'\n";
          return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        bounds = parse_lemma_bounds(ss.str());
      }
      bool all_ok = true;
      for (const LemmaResult& r : run_all(bounds)) {
        all_ok = all_ok && r.passed;
        if (json) {
          out << lemma_result_to_json(r) << "\n";
        } else {
          out << r.lemma_id << " " << (r.passed ? "pass" : "FAIL")
              << " checked=" << r.checked_count << " range=("
              << r.range_description << ")";
          if (r.counterexample) out << " counterexample: " << *r.counterexample;
          out << "\n";
        }
      }
      return all_ok ? 0 : 1;
    }

    if (table_cmd->parsed()) {
      if (json) {
        ordered_json rows = ordered_json::array();
        for (const ClassEntry& e : theorem_table()) {
          rows.push_back({{"label", e.label},
                          {"factored", factored_string(e.factored)},
                          {"hex", to_hex(e.base)},
                          {"degree", e.base.degree()},
                          {"omega", e.omega},
                          {"self_conjugate", e.self_conjugate}});
        }
        out << rows.dump(2) << "\n";
      } else {
        for (const ClassEntry& e : theorem_table())
          out << e.label << ": " << factored_string(e.factored) << " = "
              << format_poly(e.base) << " [degree " << e.base.degree()
              << ", omega " << e.omega
              << (e.self_conjugate ? ", self-conjugate" : "") << "]\n";
      }
      return 0;
    }

    if (bench_cmd->parsed()) {
      std::mt19937_64 rng(0xbe0c);
      auto random_of_degree = [&rng](uint64_t d) {
        std::vector<uint64_t> w(std::size_t(d / 64) + 1);
        for (uint64_t& v : w) v = rng();
        const unsigned top = unsigned(d & 63);
        w.back() &= (top == 63) ? ~uint64_t(0) : (uint64_t(2) << top) - 1;
        w.back() |= uint64_t(1) << top;
        return Poly::from_words(std::move(w));
      };
      using Clock = std::chrono::steady_clock;
      double packed_ns = 0, naive_ns = 0;
      bool identical = true;
      for (uint64_t rep = 0; rep < bench_reps; ++rep) {
        const Poly a = random_of_degree(bench_degree);
        const Poly b = random_of_degree(bench_degree);
        const auto t0 = Clock::now();
        const Poly fast = a * b;
        const auto t1 = Clock::now();
        const Poly slow = mul_naive(a, b);
        const auto t2 = Clock::now();
        packed_ns += std::chrono::duration<double, std::nano>(t1 - t0).count();
        naive_ns += std::chrono::duration<double, std::nano>(t2 - t1).count();
        if (fast != slow) identical = false;
      }
      const double reps = double(bench_reps ? bench_reps : 1);
      if (json) {
        ordered_json j;
        j["degree"] = bench_degree;
        j["reps"] = bench_reps;
        j["packed_us_per_mul"] = packed_ns / reps / 1000.0;
        j["naive_us_per_mul"] = naive_ns / reps / 1000.0;
        j["speedup"] = packed_ns > 0 ? naive_ns / packed_ns : 0.0;
        j["identical"] = identical;
        out << j.dump(2) << "\n";
      } else {
        out << "degree " << bench_degree << ", " << bench_reps
            << " reps: packed " << packed_ns / reps / 1000.0
            << " us/mul, naive " << naive_ns / reps / 1000.0 << " us/mul";
        if (packed_ns > 0) out << ", speedup " << naive_ns / packed_ns << "x";
        out << ", results " << (identical ? "identical" : "DIFFER") << "\n";
      }
      if (!identical) {
        err << "error: packed and naive products differ\n";
        return 1;
      }
      return 0;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gf2up::cli
