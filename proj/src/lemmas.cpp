#include "gf2up/lemmas.hpp"

#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gf2up/divisor.hpp"
#include "gf2up/factor.hpp"
#include "json.hpp"

namespace gf2up {
namespace {

struct Recorder {
  LemmaResult r;

  explicit Recorder(std::string id, std::string range) {
    r.lemma_id = std::move(id);
    r.range_description = std::move(range);
    r.passed = true;
  }
  void tick() { ++r.checked_count; }
  void fail(const std::string& witness) {
    if (r.passed) {
      r.passed = false;
      r.counterexample = witness;
    }
  }
  LemmaResult done() && { return std::move(r); }
};

bool is_power_of_two(uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

// Whether q + 1 is of the form x^a (x+1)^b.
bool splits_over_x_x1(const Poly& q) {
  Poly v = q + Poly::one();
  if (v.is_zero()) return false;
  while (!v.coeff(0)) v = v.shifted_down(1);
  const uint64_t b = uint64_t(v.degree());
  return v == pow(Poly::x() + Poly::one(), b);
}

}  // namespace

LemmaResult check_lemma_2_4(uint64_t h_max) {
  Recorder rec("2.4", "h <= " + std::to_string(h_max));
  // i) every complete polynomial inverts into itself
  for (uint64_t h = 0; h <= h_max; ++h) {
    rec.tick();
    const Poly c = complete_poly(h);
    if (reverse(c) != c) rec.fail("part i: h=" + std::to_string(h));
  }
  // ii) two-prime squarefree splittings pair up under reversal
  for (uint64_t h = 1; h <= h_max; ++h) {
    const Factorization f = factor(complete_poly(h));
    if (f.factors.size() != 2 || f.factors[0].second != 1 ||
        f.factors[1].second != 1)
      continue;
    rec.tick();
    const Poly& p = f.factors[0].first;
    const Poly& q = f.factors[1].first;
    const bool self_pair = (reverse(p) == p && reverse(q) == q);
    const bool cross_pair = (reverse(p) == q && reverse(q) == p);
    if (!self_pair && !cross_pair)
      rec.fail("part ii: h=" + std::to_string(h) + " factors " + format_poly(p) +
               ", " + format_poly(q));
  }
  // iii) self-reverse irreducibles of the form x^a(x+1)^b + 1; the
  // expected set is cut to the scan range so the check stays monotone
  std::set<Poly> expected;
  if (h_max >= 2) expected.insert(parse_poly("x^2+x+1"));
  if (h_max >= 4) expected.insert(complete_poly(4));
  std::set<Poly> found;
  const Poly x1 = Poly::x() + Poly::one();
  for (uint64_t a = 1; a < h_max; ++a)
    for (uint64_t b = 1; a + b <= h_max; ++b) {
      rec.tick();
      const Poly p = pow(x1, b).shifted_up(a) + Poly::one();
      if (p == reverse(p) && is_irreducible(p)) found.insert(p);
    }
  if (found != expected) {
    std::string w = "part iii: scan found {";
    for (const Poly& p : found) w += " " + format_poly(p);
    rec.fail(w + " }");
  }
  return std::move(rec).done();
}

LemmaResult check_lemma_2_5(uint64_t n_max, uint64_t p_deg_max) {
  Recorder rec("2.5", "n <= " + std::to_string(n_max) +
                          ", deg(P) <= " + std::to_string(p_deg_max));
  // i) & ii) over S = 1 + P + ... + P^{2n}
  for (uint64_t d = 1; d <= p_deg_max; ++d)
    for (uint64_t mask = uint64_t(1) << d; mask < (uint64_t(2) << d); ++mask) {
      const Poly p = Poly::from_words({mask});
      if (!is_irreducible(p)) continue;
      Poly s = Poly::one();
      for (uint64_t j = 1; j <= 2 * n_max; ++j) {
        s = s * p + Poly::one();
        if (j % 2 != 0) continue;
        rec.tick();
        const Factorization f = factor(s);
        if (f.factors.size() == 1 && f.factors[0].second >= 2)
          rec.fail("part i: P=" + format_poly(p) + " 2n=" + std::to_string(j) +
                   " is " + f.to_string());
        for (const auto& [q, m] : f.factors)
          if (m >= 2 && q.degree() >= p.degree())
            rec.fail("part ii: P=" + format_poly(p) + " 2n=" + std::to_string(j) +
                     " repeated factor " + format_poly(q));
      }
    }
  // iii) & iv) over even-degree complete polynomials
  std::vector<std::string> witnesses;
  std::set<uint64_t> all_factors_of_form;
  for (uint64_t n = 1; n <= n_max; ++n) {
    rec.tick();
    const Poly s = complete_poly(2 * n);
    const Factorization f = factor(s);
    bool all_form = true;
    for (const auto& [q, m] : f.factors) {
      (void)m;
      if (!splits_over_x_x1(q)) all_form = false;
    }
    if (all_form) all_factors_of_form.insert(n);
    if (f.factors.size() == 2 && f.factors[0].second == 1 &&
        f.factors[1].second == 1) {
      for (int side = 0; side < 2; ++side) {
        const Poly& p = f.factors[std::size_t(side)].first;
        const Poly& q = f.factors[std::size_t(1 - side)].first;
        const uint64_t dp = uint64_t(p.degree());
        if (dp % 2 == 0 && p == conjugate(complete_poly(dp)))
          witnesses.push_back(std::to_string(n) + ":" + format_poly(p) + ":" +
                              format_poly(q));
      }
    }
  }
  const std::vector<std::string> expected_witness = {
      "4:" + format_poly(parse_poly("x^2+x+1")) + ":" +
      format_poly(parse_poly("x^6+x^3+1"))};
  if (n_max >= 4 && witnesses != expected_witness)
    rec.fail("part iii: witness list has " + std::to_string(witnesses.size()) +
             " entries");
  std::set<uint64_t> expected_form;
  for (uint64_t n : {uint64_t(1), uint64_t(2), uint64_t(3)})
    if (n <= n_max) expected_form.insert(n);
  if (all_factors_of_form != expected_form)
    rec.fail("part iv: factor-form degrees do not match {2,4,6}");
  // v) self-conjugate complete polynomials
  for (uint64_t h = 0; h <= (uint64_t(1) << n_max); ++h) {
    rec.tick();
    const Poly c = complete_poly(h);
    const bool self_conj = (conjugate(c) == c);
    if (self_conj != is_power_of_two(h + 2))
      rec.fail("part v: h=" + std::to_string(h));
  }
  return std::move(rec).done();
}

LemmaResult check_lemma_2_6(uint64_t h_max) {
  Recorder rec("2.6", "h <= " + std::to_string(h_max));
  const Poly t2 = parse_poly("x^2+x+1");
  const Poly c4 = complete_poly(4);
  for (uint64_t h = 0; h <= h_max; ++h) {
    rec.tick();
    const Poly c = complete_poly(h);
    if ((c % t2).is_zero() && h % 3 != 2)
      rec.fail("h=" + std::to_string(h) + " divisible by x^2+x+1");
    if ((c % c4).is_zero() && h % 5 != 4)
      rec.fail("h=" + std::to_string(h) + " divisible by the degree-4 complete polynomial");
  }
  return std::move(rec).done();
}

LemmaResult check_lemma_2_8(uint64_t l_max, uint64_t r_max) {
  Recorder rec("2.8", "l <= " + std::to_string(l_max) +
                          ", r <= " + std::to_string(r_max));
  for (uint64_t l = 1; l <= l_max; ++l) {
    rec.tick();
    const bool irr = is_irreducible(substitute_x_pow(complete_poly(l), 5));
    if (irr != (l == 4)) rec.fail("part i: l=" + std::to_string(l));
  }
  for (uint64_t r = 0; r <= r_max; ++r) {
    rec.tick();
    if (is_irreducible(complete_poly(3 * (uint64_t(1) << r))) != (r == 2))
      rec.fail("part ii: r=" + std::to_string(r));
    rec.tick();
    if (is_irreducible(complete_poly(5 * (uint64_t(1) << r))) != (r == 1))
      rec.fail("part iii: r=" + std::to_string(r));
  }
  return std::move(rec).done();
}

LemmaResult check_corollary_3_5(uint64_t r_max) {
  Recorder rec("3.5", "r <= " + std::to_string(r_max));
  for (uint64_t r = 1; r <= r_max; ++r) {
    rec.tick();
    const Poly p = Poly::monomial(uint64_t(1) << r) +
                   Poly::monomial((uint64_t(1) << r) - 1) + Poly::one();
    if (is_irreducible(p) != (r == 1 || r == 2))
      rec.fail("r=" + std::to_string(r));
  }
  return std::move(rec).done();
}

LemmaResult check_swan(uint64_t n_max) {
  Recorder rec("3.4", "n <= " + std::to_string(n_max) + ", 1 <= k < 8n");
  for (uint64_t n = 1; n <= n_max; ++n)
    for (uint64_t k = 1; k < 8 * n; ++k) {
      rec.tick();
      const Poly t = Poly::monomial(8 * n) + Poly::monomial(k) + Poly::one();
      const bool claim = swan_trinomial_reducible(n, k);
      const bool reducible = factor(t).total_multiplicity() >= 2;
      if (claim != reducible)
        rec.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                 format_poly(t) + " is irreducible");
    }
  return std::move(rec).done();
}

LemmaResult check_lemma_2_1(const SearchReport& report) {
  Recorder rec("2.1", "hits of a search up to degree " +
                          std::to_string(report.max_degree));
  for (const SearchHit& h : report.hits) {
    rec.tick();
    const Factorization f = factor(h.poly);
    uint64_t mn = ~uint64_t(0);
    unsigned cnt = 0;
    for (const auto& [p, m] : f.factors) {
      const uint64_t v = uint64_t(m) * uint64_t(p.degree());
      if (v < mn) {
        mn = v;
        cnt = 1;
      } else if (v == mn) {
        ++cnt;
      }
    }
    if (cnt % 2 != 0)
      rec.fail(format_poly(h.poly) + ": " + std::to_string(cnt) +
               " primary parts of minimal weight " + std::to_string(mn));
  }
  return std::move(rec).done();
}

LemmaResult check_dickson_agreement(uint64_t m_max) {
  Recorder rec("2.7", "1 <= m <= " + std::to_string(m_max));
  for (uint64_t m = 1; m <= m_max; ++m) {
    rec.tick();
    if (complete_irreducible_criterion(m) != is_irreducible(complete_poly(m)))
      rec.fail("m=" + std::to_string(m));
  }
  return std::move(rec).done();
}

LemmaResult check_cyclotomic_product(uint64_t k_max) {
  Recorder rec("cyclotomic-product", "odd k <= " + std::to_string(k_max));
  for (uint64_t k = 1; k <= k_max; k += 2) {
    rec.tick();
    Poly prod = Poly::one();
    for (uint64_t d = 1; d <= k; ++d)
      if (k % d == 0) prod = prod * cyclotomic(d);
    if (prod != Poly::monomial(k) + Poly::one())
      rec.fail("k=" + std::to_string(k));
  }
  return std::move(rec).done();
}

LemmaResult check_cyclotomic_substitution(uint64_t s_max) {
  Recorder rec("cyclotomic-x5", "odd prime s <= " + std::to_string(s_max) + ", s != 5");
  for (uint64_t s = 3; s <= s_max; s += 2) {
    if (s == 5 || !is_prime_u64(s)) continue;
    rec.tick();
    if (substitute_x_pow(cyclotomic(s), 5) != cyclotomic(s) * cyclotomic(5 * s))
      rec.fail("s=" + std::to_string(s));
  }
  return std::move(rec).done();
}

std::vector<LemmaResult> run_all(const LemmaBounds& b) {
  std::vector<LemmaResult> out;
  SearchOptions so;
  const SearchReport report = brute_force_search(b.search_degree, true, so);
  out.push_back(check_lemma_2_1(report));
  out.push_back(check_lemma_2_4(b.lemma24_h_max));
  out.push_back(check_lemma_2_5(b.lemma25_n_max, b.lemma25_p_deg_max));
  out.push_back(check_lemma_2_6(b.lemma26_h_max));
  out.push_back(check_dickson_agreement(b.dickson_m_max));
  out.push_back(check_lemma_2_8(b.lemma28_l_max, b.lemma28_r_max));
  out.push_back(check_swan(b.swan_n_max));
  out.push_back(check_corollary_3_5(b.cor35_r_max));
  out.push_back(check_cyclotomic_product(b.cyclo_k_max));
  out.push_back(check_cyclotomic_substitution(b.cyclo_subst_s_max));
  return out;
}

LemmaBounds parse_lemma_bounds(const std::string& text) {
  LemmaBounds b;
  std::map<std::string, uint64_t*> keys = {
      {"h_max", &b.lemma24_h_max},
      {"lemma25_n_max", &b.lemma25_n_max},
      {"lemma25_p_deg_max", &b.lemma25_p_deg_max},
      {"lemma26_h_max", &b.lemma26_h_max},
      {"lemma28_l_max", &b.lemma28_l_max},
      {"lemma28_r_max", &b.lemma28_r_max},
      {"cor35_r_max", &b.cor35_r_max},
      {"swan_n_max", &b.swan_n_max},
      {"dickson_m_max", &b.dickson_m_max},
      {"cyclo_k_max", &b.cyclo_k_max},
      {"cyclo_subst_s_max", &b.cyclo_subst_s_max},
      {"search_degree", &b.search_degree},
  };
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bounds: expected key=value, got '" + line + "'");
    std::string key = line.substr(0, eq);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string value = line.substr(eq + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    const auto it = keys.find(key);
    if (it == keys.end())
      throw std::invalid_argument("bounds: unknown key '" + key + "'");
    *it->second = std::stoull(value);
  }
  return b;
}

std::string lemma_result_to_json(const LemmaResult& r) {
  nlohmann::ordered_json j;
  j["lemma_id"] = r.lemma_id;
  j["range"] = r.range_description;
  j["verdict"] = r.passed ? "pass" : "fail";
  if (r.counterexample)
    j["counterexample"] = *r.counterexample;
  else
    j["counterexample"] = nullptr;
  j["checked_count"] = r.checked_count;
  return j.dump();
}

}  // namespace gf2up
