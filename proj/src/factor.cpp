#include "gf2up/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gf2up/errors.hpp"

namespace gf2up {
namespace {

Poly random_poly_below(int64_t degree_bound, std::mt19937_64& rng) {
  const std::size_t nwords = std::size_t((degree_bound + 63) / 64);
  std::vector<uint64_t> w(nwords);
  for (uint64_t& v : w) v = rng();
  const unsigned top = unsigned(degree_bound & 63);
  if (top != 0) w.back() &= (uint64_t(1) << top) - 1;
  return Poly::from_words(std::move(w));
}

// Split a product of distinct primes of equal degree d using the trace map
// T(r) = r + r^2 + ... + r^{2^{d-1}} mod g, which sends roughly half of
// the residues to 0 mod each prime.
void edf_split(const Poly& g, uint64_t d, std::vector<Poly>& out,
               std::mt19937_64& rng) {
  if (uint64_t(g.degree()) == d) {
    out.push_back(g);
    return;
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const Poly r = random_poly_below(g.degree(), rng);
    Poly t = r % g, acc = t;
    for (uint64_t i = 1; i < d; ++i) {
      t = square(t) % g;
      acc += t;
    }
    if (acc.is_zero()) continue;
    const Poly s = gcd(acc, g);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      edf_split(s, d, out, rng);
      edf_split(g / s, d, out, rng);
      return;
    }
  }
  throw std::logic_error("edf_split: failed to split (internal error)");
}

// Distinct-degree decomposition of a squarefree polynomial.
std::vector<Poly> factor_squarefree(Poly f, std::mt19937_64& rng) {
  std::vector<Poly> out;
  if (f.degree() < 1) return out;
  Poly h = Poly::x() % f;  // x^{2^d} mod f, advanced one squaring per step
  for (uint64_t d = 1; 2 * d <= uint64_t(f.degree()); ++d) {
    h = square(h) % f;
    const Poly g = gcd(h + Poly::x(), f);
    if (!g.is_one()) {
      edf_split(g, d, out, rng);
      f = f / g;
      if (f.degree() < 1) break;
      h = h % f;
    }
  }
  if (f.degree() >= 1) out.push_back(f);
  return out;
}

}  // namespace

Poly Factorization::product() const {
  Poly r = Poly::one();
  for (const auto& [p, m] : factors) r = r * pow(p, m);
  return r;
}

uint64_t Factorization::total_multiplicity() const {
  uint64_t n = 0;
  for (const auto& [p, m] : factors) n += m;
  return n;
}

unsigned Factorization::multiplicity_of(const Poly& p) const {
  for (const auto& [q, m] : factors)
    if (q == p) return m;
  return 0;
}

std::string Factorization::to_string() const {
  std::string s;
  for (const auto& [p, m] : factors) {
    if (p == Poly::x())
      s += "x";
    else
      s += "(" + format_poly(p) + ")";
    if (m != 1) s += "^" + std::to_string(m);
  }
  return s;
}

Factorization factor(const Poly& a, uint64_t seed) {
  if (a.is_zero() || a.degree() < 1)
    throw std::domain_error("factor: nonconstant input required");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Poly, unsigned>> acc;
  auto add = [&acc](const Poly& p, unsigned m) {
    for (auto& [q, mm] : acc)
      if (q == p) {
        mm += m;
        return;
      }
    acc.emplace_back(p, m);
  };

  Poly f = a;
  unsigned scale = 1;
  while (f.degree() > 0) {
    const Poly d = derivative(f);
    if (d.is_zero()) {
      // All odd coefficients vanish: f is a perfect square.
      f = *try_sqrt(f);
      scale *= 2;
      continue;
    }
    // f / gcd(f, f') is the squarefree product of the odd-multiplicity
    // primes; the even part that remains afterwards loops back above.
    const Poly w = f / gcd(f, d);
    for (const Poly& p : factor_squarefree(w, rng)) {
      unsigned m = 0;
      while ((f % p).is_zero()) {
        f = f / p;
        ++m;
      }
      add(p, m * scale);
    }
  }
  std::sort(acc.begin(), acc.end(), [](const auto& l, const auto& r) {
    return canonical_less(l.first, r.first);
  });
  return {std::move(acc)};
}

bool is_irreducible(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("is_irreducible: zero input");
  const int64_t d = a.degree();
  if (d == 0) return false;
  if (d == 1) return true;
  if (!a.coeff(0)) return false;  // divisible by x

  std::vector<uint64_t> primes;
  uint64_t m = uint64_t(d);
  for (uint64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);

  std::vector<bool> checkpoint(std::size_t(d) + 1, false);
  for (uint64_t p : primes) checkpoint[std::size_t(uint64_t(d) / p)] = true;

  Poly h = Poly::x();
  for (int64_t k = 1; k <= d; ++k) {
    h = square(h) % a;
    if (checkpoint[std::size_t(k)] && !gcd(h + Poly::x(), a).is_one())
      return false;
  }
  return h == Poly::x();
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

uint64_t mult_order(uint64_t base, uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("mult_order: modulus must be >= 2");
  uint64_t g = base % modulus, mo = modulus;
  while (mo != 0) {
    const uint64_t t = g % mo;
    g = mo;
    mo = t;
  }
  if (g != 1) throw std::invalid_argument("mult_order: arguments must be coprime");
  const uint64_t b = base % modulus;
  uint64_t acc = b, e = 1;
  while (acc != 1) {
    acc = uint64_t((__uint128_t(acc) * b) % modulus);
    ++e;
  }
  return e;
}

bool complete_irreducible_criterion(uint64_t m) {
  if (m == 0) return false;
  if (m == 1) return true;  // 1 + x
  if (!is_prime_u64(m + 1)) return false;
  return mult_order(2, m + 1) == m;
}

Poly cyclotomic(uint64_t k) {
  if (k == 0 || k % 2 == 0)
    throw std::invalid_argument("cyclotomic: index must be odd and positive");
  Poly num = Poly::monomial(k) + Poly::one();
  for (uint64_t d = 1; d < k; ++d)
    if (k % d == 0) num = num / cyclotomic(d);
  return num;
}

bool swan_trinomial_reducible(uint64_t n, uint64_t k) {
  if (n < 1 || k < 1 || 8 * n <= k)
    throw std::invalid_argument("swan_trinomial_reducible: need 8n > k >= 1");
  return true;
}

}  // namespace gf2up
