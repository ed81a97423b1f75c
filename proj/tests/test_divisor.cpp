#include <stdexcept>
#include <random>

#include "doctest.h"
#include "gf2up/divisor.hpp"
#include "gf2up/poly.hpp"
#include "oracles.hpp"

using namespace gf2up;

namespace {
Poly P(const char* s) { return parse_poly(s); }
}

TEST_SUITE("divisor") {

TEST_CASE("sigma_star fixed values") {
  CHECK(sigma_star(P("x^2+x")) == P("x^2+x"));
  CHECK(sigma_star(P("x^2")) == P("x^2+1"));
  const Poly b = pow(P("x"), 3) * pow(P("x+1"), 2) * P("x^2+x+1");
  CHECK(sigma_star(b) == b);
  CHECK_THROWS_AS(sigma_star(Poly::one()), std::domain_error);
  CHECK_THROWS_AS(sigma_star(Poly::zero()), std::domain_error);
}

TEST_CASE("sigma fixed values") {
  CHECK(sigma(P("x^2")) == P("1+x+x^2"));
  CHECK(sigma(P("x")) == P("x+1"));
  // (1+x+x^2)(1+(x+1)+(x+1)^2) = (x^2+x+1)^2, which x^2(x+1)^2 is not
  CHECK(sigma(P("x^2") * P("x^2+1")) == P("x^4+x^2+1"));
  CHECK(sigma(P("x^2") * P("x^2+1")) == oracle::sigma_by_enumeration(P("x^4+x^2")));
}

TEST_CASE("perfect polynomials") {
  CHECK(is_perfect(P("x^2+x")));                             // x(x+1)
  CHECK(is_perfect(pow(P("x"), 3) * pow(P("x+1"), 3)));      // (x(x+1))^3
  CHECK(!is_perfect(pow(P("x"), 2) * pow(P("x+1"), 2)));     // degree drop in sigma parity
  CHECK(!is_perfect(P("x^3")));
  CHECK(oracle::sigma_by_enumeration(P("x^2+x")) == P("x^2+x"));
}

TEST_CASE("unitary perfect predicate") {
  CHECK(is_unitary_perfect(P("x^2+x")));
  const Poly thm41i =
      pow(P("x"), 6) * pow(P("x+1"), 4) * pow(P("1+x+x^2"), 3) * P("1+x+x^4");
  CHECK(is_unitary_perfect(thm41i));
  CHECK(!is_unitary_perfect(P("x^3+x^2")));  // x^2(x+1)
}

TEST_CASE("omega") {
  CHECK(omega(P("x^2+x")) == 2);
  const Poly thm41i =
      pow(P("x"), 6) * pow(P("x+1"), 4) * pow(P("1+x+x^2"), 3) * P("1+x+x^4");
  CHECK(omega(thm41i) == 4);
  CHECK(omega(P("x^4")) == 1);
  CHECK(omega(Poly::one()) == 0);
  CHECK_THROWS_AS(omega(Poly::zero()), std::domain_error);
}

TEST_CASE("unitary divisor check") {
  CHECK(unitary_divisor_check(P("x^2"), P("x^2") * P("x+1")));
  CHECK(!unitary_divisor_check(P("x"), P("x^2") * P("x+1")));
  CHECK(unitary_divisor_check(Poly::one(), P("x^5+x^2")));
  CHECK(!unitary_divisor_check(Poly::zero(), P("x")));
  CHECK_THROWS_AS(unitary_divisor_check(P("x"), Poly::zero()), std::domain_error);
}

TEST_CASE("divisor profile") {
  const DivisorProfile pr = divisor_profile(P("x^2+x"));
  CHECK(pr.omega == 2);
  CHECK(pr.is_even_poly);
  CHECK(pr.sigma == P("x^2+x"));
  CHECK(pr.sigma_star == P("x^2+x"));
  const DivisorProfile odd = divisor_profile(P("x^2+x+1"));
  CHECK(!odd.is_even_poly);
  CHECK(odd.omega == 1);
}

TEST_CASE("multiplicativity over coprime pairs") {
  std::mt19937_64 rng(4242);
  int done = 0;
  while (done < 1000) {
    const Poly a = oracle::random_poly(rng, 64);
    const Poly b = oracle::random_poly(rng, 64);
    if (a.degree() < 1 || b.degree() < 1 || !gcd(a, b).is_one()) continue;
    ++done;
    CHECK(sigma_star(a * b) == sigma_star(a) * sigma_star(b));
    CHECK(sigma(a * b) == sigma(a) * sigma(b));
  }
}

TEST_CASE("lattice enumeration agrees with the formulas up to degree 9") {
  for (int64_t d = 1; d <= 9; ++d)
    for (uint64_t mask = uint64_t(1) << d; mask < (uint64_t(2) << d); ++mask) {
      const Poly a = Poly::from_words({mask});
      CHECK(sigma(a) == oracle::sigma_by_enumeration(a));
      CHECK(sigma_star(a) == oracle::sigma_star_by_enumeration(a));
      CHECK(sigma_star(a).degree() == a.degree());
      CHECK(sigma(a).degree() == a.degree());
    }
}

TEST_CASE("lattice oracle agrees with literal trial division up to degree 7") {
  for (int64_t d = 1; d <= 7; ++d)
    for (uint64_t mask = uint64_t(1) << d; mask < (uint64_t(2) << d); ++mask) {
      const Poly a = Poly::from_words({mask});
      Poly total = Poly::zero(), unitary_total = Poly::zero();
      for (const Poly& dv : oracle::divisors_by_trial(a)) {
        total += dv;
        if (unitary_divisor_check(dv, a)) unitary_total += dv;
      }
      CHECK(total == oracle::sigma_by_enumeration(a));
      CHECK(unitary_total == oracle::sigma_star_by_enumeration(a));
    }
}

}  // TEST_SUITE
