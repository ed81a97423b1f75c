#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "gf2up/classify.hpp"
#include "gf2up/divisor.hpp"
#include "gf2up/errors.hpp"
#include "gf2up/search.hpp"

using namespace gf2up;

namespace {
Poly P(const char* s) { return parse_poly(s); }

std::set<Poly> hit_set(const SearchReport& r) {
  std::set<Poly> s;
  for (const SearchHit& h : r.hits) s.insert(h.poly);
  return s;
}

// Orbit representatives modulo conjugation among the non-square hits.
std::set<Poly> cores_up_to_conjugation(const SearchReport& r,
                                       uint64_t omega_min, uint64_t omega_max) {
  std::set<Poly> cores;
  for (const SearchHit& h : r.hits) {
    if (h.omega < omega_min || h.omega > omega_max) continue;
    if (try_sqrt(h.poly).has_value()) continue;  // a square, not a core
    const Poly c = conjugate(h.poly);
    cores.insert(std::min(h.poly, c));
  }
  return cores;
}
}

TEST_SUITE("search") {

TEST_CASE("brute force, small degrees") {
  const SearchReport r2 = brute_force_search(2, false);
  REQUIRE(r2.hits.size() == 1);
  CHECK(r2.hits[0].poly == P("x^2+x"));
  CHECK(r2.hits[0].omega == 2);
  CHECK(r2.hits[0].label == "Thm3.1-i");

  const SearchReport r8 = brute_force_search(8, false);
  const std::set<Poly> expected = {
      P("x^2+x"), square(P("x^2+x")), square(square(P("x^2+x"))),
      pow(P("x"), 3) * pow(P("x+1"), 2) * P("x^2+x+1"),
      pow(P("x"), 2) * pow(P("x+1"), 3) * P("x^2+x+1")};
  CHECK(hit_set(r8) == expected);
  CHECK(r8.candidates_tested == (uint64_t(1) << 9) - 2);
}

TEST_CASE("pruned and unpruned modes find the same hits") {
  const SearchReport pruned = brute_force_search(12, true);
  const SearchReport full = brute_force_search(12, false);
  CHECK(hit_set(pruned) == hit_set(full));
  CHECK(pruned.candidates_tested < full.candidates_tested);
  // every hit of the unpruned scan is divisible by x and by x+1
  for (const SearchHit& h : full.hits) {
    CHECK((h.poly % P("x")).is_zero());
    CHECK((h.poly % P("x+1")).is_zero());
    CHECK(is_unitary_perfect(h.poly));
    CHECK(h.label.has_value());
  }
}

TEST_CASE("brute force guards") {
  CHECK_THROWS_AS(brute_force_search(1, false), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_search(29, false), resource_error);
  SearchOptions opts;
  opts.degree_limit = 10;
  CHECK_THROWS_AS(brute_force_search(11, false, opts), resource_error);
}

TEST_CASE("reports are identical for any worker count") {
  SearchOptions one, four;
  one.jobs = 1;
  four.jobs = 4;
  const SearchReport a = brute_force_search(12, true, one);
  const SearchReport b = brute_force_search(12, true, four);
  CHECK(a.hits == b.hits);
  CHECK(a.candidates_tested == b.candidates_tested);
  CHECK(report_to_json(a, false) == report_to_json(b, false));

  const SearchReport sa = structured_search(6, 3, one);
  const SearchReport sb = structured_search(6, 3, four);
  CHECK(sa.hits == sb.hits);
  CHECK(sa.candidates_tested == sb.candidates_tested);
}

TEST_CASE("candidate prime pool") {
  const auto p2 = candidate_prime_pool(2);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0] == P("x^2+x+1"));

  const auto p3 = candidate_prime_pool(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[1] == P("x^3+x+1"));
  CHECK(p3[2] == P("x^3+x^2+1"));

  const auto p4 = candidate_prime_pool(4);
  CHECK(std::count(p4.begin(), p4.end(), P("1+x+x^4")) == 1);
  CHECK(std::count(p4.begin(), p4.end(), P("1+x+x^2+x^3+x^4")) == 1);

  // known irreducible counts per degree
  const std::map<uint64_t, std::size_t> counts = {{2, 1}, {3, 2}, {4, 3},
                                                  {5, 6}, {6, 9}, {7, 18}, {8, 30}};
  const auto p8 = candidate_prime_pool(8);
  std::map<uint64_t, std::size_t> got;
  for (const Poly& p : p8) ++got[uint64_t(p.degree())];
  CHECK(got == counts);
  CHECK(std::is_sorted(p8.begin(), p8.end(), canonical_less));
}

TEST_CASE("structured search, tiny bounds") {
  const SearchReport r = structured_search(2, 0);
  std::set<Poly> omega2;
  for (const SearchHit& h : r.hits) {
    CHECK(is_unitary_perfect(h.poly));
    if (h.omega == 2) omega2.insert(h.poly);
  }
  CHECK(omega2 == std::set<Poly>{P("x^2+x")});
}

TEST_CASE("structured search rediscovers the omega<=3 bases") {
  const SearchReport r = structured_search(6, 3);
  std::set<Poly> expected;
  for (const ClassEntry& e : theorem_table())
    if (e.omega <= 3) expected.insert(std::min(e.base, conjugate(e.base)));
  CHECK(cores_up_to_conjugation(r, 2, 3) == expected);
  for (const SearchHit& h : r.hits) {
    CHECK(is_unitary_perfect(h.poly));
    // every hit with omega <= 4 must land in a classification orbit
    if (h.omega <= 4) CHECK(h.label.has_value());
  }
}

TEST_CASE("structured search with small prime bound finds the reachable omega=4 bases") {
  // With prime degrees <= 6 and 2-power indices <= 3, every omega=4 entry
  // is reachable except Thm4.1-v, whose x+1 exponent is 2^4.
  const SearchReport r = structured_search(6, 3);
  std::set<Poly> expected;
  for (const ClassEntry& e : theorem_table())
    if (e.omega == 4 && e.label != "Thm4.1-v")
      expected.insert(std::min(e.base, conjugate(e.base)));
  CHECK(cores_up_to_conjugation(r, 4, 4) == expected);

  // raising the exponent bound to 4 brings in the last entry
  const SearchReport r4 = structured_search(6, 4);
  std::set<Poly> all4;
  for (const ClassEntry& e : theorem_table())
    if (e.omega == 4) all4.insert(std::min(e.base, conjugate(e.base)));
  CHECK(cores_up_to_conjugation(r4, 4, 4) == all4);
}

TEST_CASE("cross check") {
  const SearchReport b8 = brute_force_search(8, true);
  const SearchReport b2 = brute_force_search(2, true);
  CHECK(cross_check(b8, b8));
  CHECK(cross_check(b2, b8));

  const SearchReport s = structured_search(6, 3);
  const SearchReport b = brute_force_search(8, true);
  CHECK(cross_check(b, s));
}

TEST_CASE("report serialization round-trips polynomials") {
  const SearchReport r = brute_force_search(8, true);
  const std::string json = report_to_json(r);
  for (const SearchHit& h : r.hits) {
    CHECK(json.find('"' + format_poly(h.poly) + '"') != std::string::npos);
    CHECK(parse_poly(format_poly(h.poly)) == h.poly);
    CHECK(parse_poly(to_hex(h.poly)) == h.poly);
  }
}

}  // TEST_SUITE
