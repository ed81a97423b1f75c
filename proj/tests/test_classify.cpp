#include <stdexcept>
#include <map>
#include <set>

#include "doctest.h"
#include "gf2up/classify.hpp"
#include "gf2up/divisor.hpp"
#include "gf2up/factor.hpp"
#include "gf2up/poly.hpp"

using namespace gf2up;

namespace {
Poly P(const char* s) { return parse_poly(s); }

const ClassEntry& by_label(const std::string& label) {
  for (const ClassEntry& e : theorem_table())
    if (e.label == label) return e;
  REQUIRE(false);
  return theorem_table().front();
}
}

TEST_SUITE("classify") {

TEST_CASE("table shape and per-entry invariants") {
  const auto& table = theorem_table();
  REQUIRE(table.size() == 16);

  std::map<int, int> omega_counts;
  std::set<std::string> labels;
  for (const ClassEntry& e : table) {
    labels.insert(e.label);
    ++omega_counts[e.omega];
    CHECK(is_unitary_perfect(e.base));
    CHECK(omega(e.base) == uint64_t(e.omega));
    CHECK(e.self_conjugate == (conjugate(e.base) == e.base));
    Poly prod = Poly::one();
    for (const auto& [p, m] : e.factored) {
      CHECK(is_irreducible(p));
      prod = prod * pow(p, m);
    }
    CHECK(prod == e.base);
  }
  CHECK(labels.size() == 16);
  CHECK(omega_counts[2] == 1);
  CHECK(omega_counts[3] == 3);
  CHECK(omega_counts[4] == 12);

  const std::map<std::string, int64_t> expected_degrees = {
      {"Thm3.1-i", 2},    {"Thm3.1-ii-a", 7},  {"Thm3.1-ii-b", 13},
      {"Thm3.1-iii", 10}, {"Thm4.1-i", 20},    {"Thm4.1-ii", 41},
      {"Thm4.1-iii", 37}, {"Thm4.1-iv", 23},   {"Thm4.1-v", 77},
      {"Thm4.1-vi", 17},  {"Thm4.1-vii", 16},  {"Thm4.1-viii", 19},
      {"Thm4.1-ix", 18},  {"Thm4.1-x", 53},    {"Thm4.1-xi", 29},
      {"Thm4.1-xii", 26}};
  for (const auto& [label, deg] : expected_degrees)
    CHECK(by_label(label).base.degree() == deg);

  CHECK(by_label("Thm3.1-iii").self_conjugate);
  CHECK(by_label("Thm4.1-xii").self_conjugate);
  CHECK(!by_label("Thm4.1-v").self_conjugate);
}

TEST_CASE("additional irreducible divisors appear in the table") {
  const Poly s[4] = {P("1+x^3+x^6"), P("1+x^5+x^10+x^15+x^20"), complete_poly(10),
                     complete_poly(12)};
  for (const Poly& p : s) {
    CHECK(is_irreducible(p));
    CHECK(is_irreducible(conjugate(p)));
    bool used = false;
    for (const ClassEntry& e : theorem_table())
      for (const auto& [q, m] : e.factored) {
        (void)m;
        if (q == p) used = true;
      }
    CHECK(used);
  }
}

TEST_CASE("orbit generation") {
  const auto o1 = orbit(by_label("Thm3.1-i"), 8);
  REQUIRE(o1.size() == 3);
  CHECK(o1[0] == P("x^2+x"));
  CHECK(o1[1] == square(P("x^2+x")));
  CHECK(o1[2] == square(square(P("x^2+x"))));

  CHECK(orbit(by_label("Thm3.1-ii-a"), 14).size() == 4);
  CHECK(orbit(by_label("Thm3.1-iii"), 10).size() == 1);
  CHECK_THROWS_AS(orbit(by_label("Thm3.1-iii"), 9), std::invalid_argument);
}

TEST_CASE("classify examples") {
  const Poly iia = by_label("Thm3.1-ii-a").base;
  const auto sq = classify(square(iia));
  REQUIRE(sq.has_value());
  CHECK(sq->label == "Thm3.1-ii-a");
  CHECK(sq->n == 1);
  CHECK(!sq->conjugated);

  const auto cj = classify(conjugate(iia));
  REQUIRE(cj.has_value());
  CHECK(cj->label == "Thm3.1-ii-a");
  CHECK(cj->n == 0);
  CHECK(cj->conjugated);

  CHECK(!classify(P("x^3+x+1")).has_value());
  CHECK(!classify(P("x^5")).has_value());
  CHECK_THROWS_AS(classify(Poly::one()), std::domain_error);
}

TEST_CASE("orbit members are unitary perfect and classify back") {
  for (const ClassEntry& e : theorem_table()) {
    for (const Poly& p : orbit(e, 256)) {
      CHECK(is_unitary_perfect(p));
      const auto c = classify(p);
      REQUIRE(c.has_value());
      CHECK(c->label == e.label);
      Poly rebuilt = e.base;
      for (uint64_t i = 0; i < c->n; ++i) rebuilt = square(rebuilt);
      if (c->conjugated) rebuilt = conjugate(rebuilt);
      CHECK(rebuilt == p);
    }
  }
}

TEST_CASE("coprime-split and closure properties on the table") {
  for (const ClassEntry& e : theorem_table()) {
    // closure under conjugation and squaring
    CHECK(is_unitary_perfect(conjugate(e.base)));
    CHECK(is_unitary_perfect(square(e.base)));
    // coprime splits: both halves agree on unitary perfection
    const auto& fs = e.factored;
    const std::size_t n = fs.size();
    for (uint64_t subset = 1; subset + 1 < (uint64_t(1) << n); ++subset) {
      Poly a = Poly::one(), b = Poly::one();
      for (std::size_t i = 0; i < n; ++i) {
        if (subset & (uint64_t(1) << i))
          a = a * pow(fs[i].first, fs[i].second);
        else
          b = b * pow(fs[i].first, fs[i].second);
      }
      CHECK(is_unitary_perfect(a) == is_unitary_perfect(b));
    }
  }
}

}  // TEST_SUITE
