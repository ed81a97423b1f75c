#include "gf2up/divisor.hpp"

#include <stdexcept>

namespace gf2up {
namespace {

void require_nonconstant(const Poly& a, const char* who) {
  if (a.degree() < 1)
    throw std::domain_error(std::string(who) + ": nonconstant input required");
}

}  // namespace

Poly sigma_star_of(const Factorization& f) {
  Poly r = Poly::one();
  for (const auto& [p, m] : f.factors) r = r * (Poly::one() + pow(p, m));
  return r;
}

Poly sigma_of(const Factorization& f) {
  Poly r = Poly::one();
  for (const auto& [p, m] : f.factors) {
    Poly geom = Poly::one();  // 1 + p + ... + p^m by Horner
    for (unsigned i = 0; i < m; ++i) geom = geom * p + Poly::one();
    r = r * geom;
  }
  return r;
}

Poly sigma_star(const Poly& a) {
  require_nonconstant(a, "sigma_star");
  return sigma_star_of(factor(a));
}

Poly sigma(const Poly& a) {
  require_nonconstant(a, "sigma");
  return sigma_of(factor(a));
}

bool is_unitary_perfect(const Poly& a) {
  require_nonconstant(a, "is_unitary_perfect");
  return sigma_star(a) == a;
}

bool is_perfect(const Poly& a) {
  require_nonconstant(a, "is_perfect");
  return sigma(a) == a;
}

uint64_t omega(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("omega: zero input");
  if (a.degree() == 0) return 0;
  return factor(a).factors.size();
}

bool unitary_divisor_check(const Poly& d, const Poly& a) {
  if (a.is_zero()) throw std::domain_error("unitary_divisor_check: zero input");
  if (d.is_zero()) return false;
  const auto [q, r] = divrem(a, d);
  if (!r.is_zero()) return false;
  return gcd(d, q).is_one();
}

DivisorProfile divisor_profile(const Poly& a) {
  require_nonconstant(a, "divisor_profile");
  const Factorization f = factor(a);
  const auto [at0, at1] = eval_at_01(a);
  return DivisorProfile{f.factors.size(), !at0 || !at1, sigma_of(f),
                        sigma_star_of(f)};
}

}  // namespace gf2up
