#include "gf2up/search.hpp"

#include <algorithm>
#include <functional>
#include <bit>
#include <set>
#include <stdexcept>
#include <thread>

#include "gf2up/classify.hpp"
#include "gf2up/divisor.hpp"
#include "gf2up/errors.hpp"
#include "json.hpp"

namespace gf2up {
namespace {

using Clock = std::chrono::steady_clock;

std::vector<SearchHit> finalize_hits(const std::set<Poly>& polys) {
  std::vector<SearchHit> hits;
  hits.reserve(polys.size());
  for (const Poly& p : polys) {
    SearchHit h;
    h.poly = p;
    h.omega = omega(p);
    if (auto c = classify(p)) h.label = c->label;
    hits.push_back(std::move(h));
  }
  return hits;
}

// ---------------------------------------------------------------- brute

struct WorkerResult {
  std::set<Poly> hits;
  uint64_t tested = 0;
};

void brute_range(uint64_t lo, uint64_t hi, bool assume_even, WorkerResult& out) {
  for (uint64_t mask = lo; mask < hi; ++mask) {
    if (assume_even &&
        ((mask & 1) != 0 || (std::popcount(mask) & 1) != 0))
      continue;  // keep multiples of x(x+1) only
    const Poly a = Poly::from_words({mask});
    ++out.tested;
    if (sigma_star(a) == a) out.hits.insert(a);
  }
}

// ------------------------------------------------------------ structured

// Exponents of x and x+1 in v plus the part coprime to both.
struct XStrip {
  uint64_t ex = 0;
  uint64_t ex1 = 0;
  Poly rest;
};

XStrip strip_x_x1(Poly v) {
  XStrip s;
  while (!v.is_zero() && !v.coeff(0)) {
    v = v.shifted_down(1);
    ++s.ex;
  }
  const Poly x1 = Poly::x() + Poly::one();
  while (v.degree() > 0 && !eval_at_01(v).second) {
    v = v / x1;
    ++s.ex1;
  }
  s.rest = std::move(v);
  return s;
}

// v = p^m exactly, or absent.
std::optional<uint64_t> pure_power_of(const Poly& v, const Poly& p) {
  Poly w = v;
  uint64_t m = 0;
  while (!w.is_one()) {
    auto [q, r] = divrem(w, p);
    if (!r.is_zero()) return std::nullopt;
    w = std::move(q);
    ++m;
  }
  return m;
}

// Count of primary parts attaining the minimal exponent*degree value must
// be even for a unitary perfect polynomial (characteristic 2).
bool even_min_primary_parts(const std::vector<std::pair<uint64_t, uint64_t>>& parts) {
  uint64_t mn = ~uint64_t(0);
  unsigned cnt = 0;
  for (const auto& [e, dg] : parts) {
    const uint64_t v = e * dg;
    if (v < mn) {
      mn = v;
      cnt = 1;
    } else if (v == mn) {
      ++cnt;
    }
  }
  return cnt % 2 == 0;
}

struct OddPart {
  uint64_t c;
  unsigned e1;  // exponent of the first designated prime in the odd-part factor
  unsigned e2;  // exponent of the second
};

struct StructuredCtx {
  uint64_t max_exp_log;
  uint64_t seed;
  std::vector<Poly> pool;
  std::vector<uint64_t> odds;
  std::vector<Poly> tc;  // complete_poly(c-1) per odd part
  std::vector<Poly> td;  // conjugate(complete_poly(c-1)) per odd part
  Poly x, x1, one;
};

// Factor of 1 + prime^exp over {x, x+1, other}: exponent contributions.
struct CompStrip {
  uint64_t ex, ex1, eo;
};

void verify_and_record(const StructuredCtx& ctx, uint64_t h1, uint64_t k1,
                       const std::vector<std::pair<Poly, uint64_t>>& odd_parts,
                       WorkerResult& out) {
  Poly a = pow(ctx.x, h1) * pow(ctx.x1, k1);
  for (const auto& [p, e] : odd_parts) a = a * pow(p, e);
  if (sigma_star_of(factor(a, ctx.seed)) == a) out.hits.insert(a);
}

// Matches t against {1, P, Q, PQ}; result is the exponent pair or absent.
std::optional<std::pair<unsigned, unsigned>> match_odd_part(const Poly& t,
                                                            const Poly& p,
                                                            const Poly& q,
                                                            const Poly& pq) {
  if (t.is_one()) return std::make_pair(0u, 0u);
  if (t == p) return std::make_pair(1u, 0u);
  if (t == q) return std::make_pair(0u, 1u);
  if (t == pq) return std::make_pair(1u, 1u);
  return std::nullopt;
}

void run_pair(const StructuredCtx& ctx, const Poly& p, const Poly& q, uint64_t u,
              const CompStrip& sp, WorkerResult& out) {
  // sp describes 1 + P^u over {x, x+1, Q}; derive the same for 1 + Q.
  const XStrip sqx = strip_x_x1(ctx.one + q);
  const auto c4 = pure_power_of(sqx.rest, p);
  if (!c4) return;
  const CompStrip sq{sqx.ex, sqx.ex1, *c4};

  const Poly pq = p * q;
  std::vector<OddPart> cs, ds;
  for (std::size_t i = 0; i < ctx.odds.size(); ++i) {
    if (auto m = match_odd_part(ctx.tc[i], p, q, pq))
      cs.push_back({ctx.odds[i], m->first, m->second});
    if (auto m = match_odd_part(ctx.td[i], p, q, pq))
      ds.push_back({ctx.odds[i], m->first, m->second});
  }

  const uint64_t dp = uint64_t(p.degree()), dq = uint64_t(q.degree());
  const uint64_t L = ctx.max_exp_log;
  for (const OddPart& c : cs)
    for (const OddPart& d : ds)
      for (uint64_t h = 0; h <= L; ++h)
        for (uint64_t k = 0; k <= L; ++k)
          for (uint64_t l = 0; l <= L; ++l)
            for (uint64_t m = 0; m <= L; ++m) {
              ++out.tested;
              const uint64_t h1 = c.c << h, k1 = d.c << k;
              const uint64_t ep = u << l, eq = uint64_t(1) << m;
              if ((uint64_t(1) << k) + (sp.ex << l) + (sq.ex << m) != h1) continue;
              if ((uint64_t(1) << h) + (sp.ex1 << l) + (sq.ex1 << m) != k1) continue;
              if ((uint64_t(c.e1) << h) + (uint64_t(d.e1) << k) + (sq.eo << m) != ep)
                continue;
              if ((uint64_t(c.e2) << h) + (uint64_t(d.e2) << k) + (sp.eo << l) != eq)
                continue;
              if (!even_min_primary_parts({{h1, 1}, {k1, 1}, {ep, dp}, {eq, dq}}))
                continue;
              verify_and_record(ctx, h1, k1, {{p, ep}, {q, eq}}, out);
            }
}

void structured_omega2(const StructuredCtx& ctx, WorkerResult& out) {
  const uint64_t L = ctx.max_exp_log;
  for (std::size_t ci = 0; ci < ctx.odds.size(); ++ci)
    for (std::size_t di = 0; di < ctx.odds.size(); ++di)
      for (uint64_t h = 0; h <= L; ++h)
        for (uint64_t k = 0; k <= L; ++k) {
          ++out.tested;
          // No odd primes are available, so the odd parts must be trivial.
          if (!ctx.tc[ci].is_one() || !ctx.td[di].is_one()) continue;
          const uint64_t h1 = ctx.odds[ci] << h, k1 = ctx.odds[di] << k;
          if (h1 != (uint64_t(1) << k) || k1 != (uint64_t(1) << h)) continue;
          verify_and_record(ctx, h1, k1, {}, out);
        }
}

void structured_omega3(const StructuredCtx& ctx, const Poly& p, WorkerResult& out) {
  const XStrip sp = strip_x_x1(ctx.one + p);
  if (!sp.rest.is_one()) return;  // 1+P must factor over {x, x+1}

  std::vector<OddPart> cs, ds;
  for (std::size_t i = 0; i < ctx.odds.size(); ++i) {
    if (ctx.tc[i].is_one())
      cs.push_back({ctx.odds[i], 0, 0});
    else if (ctx.tc[i] == p)
      cs.push_back({ctx.odds[i], 1, 0});
    if (ctx.td[i].is_one())
      ds.push_back({ctx.odds[i], 0, 0});
    else if (ctx.td[i] == p)
      ds.push_back({ctx.odds[i], 1, 0});
  }

  const uint64_t dp = uint64_t(p.degree());
  const uint64_t L = ctx.max_exp_log;
  for (const OddPart& c : cs)
    for (const OddPart& d : ds)
      for (uint64_t h = 0; h <= L; ++h)
        for (uint64_t k = 0; k <= L; ++k)
          for (uint64_t n = 0; n <= L; ++n) {
            ++out.tested;
            const uint64_t h1 = c.c << h, k1 = d.c << k;
            const uint64_t ep = uint64_t(1) << n;
            if ((uint64_t(1) << k) + (sp.ex << n) != h1) continue;
            if ((uint64_t(1) << h) + (sp.ex1 << n) != k1) continue;
            if ((uint64_t(c.e1) << h) + (uint64_t(d.e1) << k) != ep) continue;
            if (!even_min_primary_parts({{h1, 1}, {k1, 1}, {ep, dp}})) continue;
            verify_and_record(ctx, h1, k1, {{p, ep}}, out);
          }
}

void structured_omega4(const StructuredCtx& ctx, std::size_t ip,
                       uint64_t max_prime_degree, WorkerResult& out) {
  const Poly& p = ctx.pool[ip];
  const XStrip sp = strip_x_x1(ctx.one + p);

  // u = 1: candidate partners.
  std::set<Poly> qs;
  if (sp.rest.is_one()) {
    for (std::size_t j = ip + 1; j < ctx.pool.size(); ++j) qs.insert(ctx.pool[j]);
    // Shape-derived partners beyond the pool bound: odd-part complete
    // polynomials, their conjugates, and cofactors by P.
    for (const auto* tab : {&ctx.tc, &ctx.td})
      for (const Poly& t : *tab) {
        if (t.is_one()) continue;
        if (uint64_t(t.degree()) > max_prime_degree && is_irreducible(t))
          qs.insert(t);
        const auto [qt, rt] = divrem(t, p);
        if (rt.is_zero() && !qt.is_one() &&
            uint64_t(qt.degree()) > max_prime_degree && is_irreducible(qt))
          qs.insert(qt);
      }
    for (const Poly& q : qs)
      run_pair(ctx, p, q, 1, CompStrip{sp.ex, sp.ex1, 0}, out);
  } else {
    // The partner must absorb the leftover of 1+P entirely.
    const Factorization rf = factor(sp.rest, ctx.seed);
    if (rf.factors.size() == 1) {
      const auto& [q0, m0] = rf.factors.front();
      if (canonical_less(p, q0))
        run_pair(ctx, p, q0, 1, CompStrip{sp.ex, sp.ex1, m0}, out);
    }
  }

  // u = 3: partner pinned to 1 + P + P^2.
  const Poly q3 = ctx.one + p + p * p;
  if (is_irreducible(q3)) {
    const XStrip s3 = strip_x_x1(ctx.one + pow(p, 3));
    if (auto d3 = pure_power_of(s3.rest, q3))
      run_pair(ctx, p, q3, 3, CompStrip{s3.ex, s3.ex1, *d3}, out);
  }
}

std::vector<WorkerResult> run_workers(unsigned jobs,
                                      const std::function<void(unsigned, WorkerResult&)>& fn) {
  if (jobs <= 1) {
    std::vector<WorkerResult> res(1);
    fn(0, res[0]);
    return res;
  }
  std::vector<WorkerResult> res(jobs);
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w)
    threads.emplace_back([&, w] { fn(w, res[w]); });
  for (auto& t : threads) t.join();
  return res;
}

SearchReport merge(std::vector<WorkerResult> results, uint64_t max_degree,
                   Clock::time_point start) {
  std::set<Poly> all;
  uint64_t tested = 0;
  for (auto& r : results) {
    all.merge(r.hits);
    tested += r.tested;
  }
  SearchReport rep;
  rep.max_degree = max_degree;
  rep.hits = finalize_hits(all);
  rep.candidates_tested = tested;
  rep.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return rep;
}

}  // namespace

SearchReport brute_force_search(uint64_t max_degree, bool assume_even,
                                const SearchOptions& opts) {
  if (max_degree < 2)
    throw std::invalid_argument("brute_force_search: max_degree must be >= 2");
  if (max_degree > opts.degree_limit)
    throw resource_error("brute_force_search: max_degree beyond the candidate ceiling");
  const auto start = Clock::now();
  const unsigned jobs = std::max(1u, opts.jobs);

  auto results = run_workers(jobs, [&](unsigned w, WorkerResult& out) {
    for (uint64_t d = 1; d <= max_degree; ++d) {
      const uint64_t lo = uint64_t(1) << d, hi = uint64_t(1) << (d + 1);
      const uint64_t chunk = (hi - lo + jobs - 1) / jobs;
      const uint64_t b = lo + w * chunk;
      const uint64_t e = std::min(hi, b + chunk);
      if (b < e) brute_range(b, e, assume_even, out);
    }
  });
  return merge(std::move(results), max_degree, start);
}

SearchReport structured_search(uint64_t max_prime_degree, uint64_t max_exp_log,
                               const SearchOptions& opts) {
  if (max_prime_degree < 2)
    throw std::invalid_argument("structured_search: max_prime_degree must be >= 2");
  if (opts.odd_part_max < 1)
    throw std::invalid_argument("structured_search: odd_part_max must be >= 1");
  const auto start = Clock::now();

  StructuredCtx ctx;
  ctx.max_exp_log = max_exp_log;
  ctx.seed = opts.seed;
  ctx.pool = candidate_prime_pool(max_prime_degree);
  for (uint64_t c = 1; c <= opts.odd_part_max; c += 2) ctx.odds.push_back(c);
  for (uint64_t c : ctx.odds) {
    ctx.tc.push_back(complete_poly(c - 1));
    ctx.td.push_back(conjugate(ctx.tc.back()));
  }
  ctx.x = Poly::x();
  ctx.x1 = ctx.x + Poly::one();
  ctx.one = Poly::one();

  const unsigned jobs = std::max(1u, opts.jobs);
  auto results = run_workers(jobs, [&](unsigned w, WorkerResult& out) {
    if (w == 0) structured_omega2(ctx, out);
    for (std::size_t ip = w; ip < ctx.pool.size(); ip += jobs) {
      structured_omega3(ctx, ctx.pool[ip], out);
      structured_omega4(ctx, ip, max_prime_degree, out);
    }
  });

  // Completeness bound: below this degree every admissible shape fits the
  // enumerated parameters.
  const uint64_t coverage =
      std::min({max_prime_degree + 2, (uint64_t(1) << (max_exp_log + 1)) - 1,
                opts.odd_part_max + 1});
  return merge(std::move(results), coverage, start);
}

bool cross_check(const SearchReport& a, const SearchReport& b) {
  const uint64_t cap = std::min(a.max_degree, b.max_degree);
  auto scope = [cap](const SearchReport& r) {
    std::vector<Poly> v;
    for (const SearchHit& h : r.hits)
      if (uint64_t(h.poly.degree()) <= cap && h.omega >= 2 && h.omega <= 4)
        v.push_back(h.poly);
    return v;  // hits are already canonically sorted
  };
  return scope(a) == scope(b);
}

std::vector<Poly> candidate_prime_pool(uint64_t max_degree) {
  if (max_degree < 2)
    throw std::invalid_argument("candidate_prime_pool: max_degree must be >= 2");
  std::vector<Poly> pool;
  for (uint64_t d = 2; d <= max_degree; ++d) {
    for (uint64_t mask = uint64_t(1) << d; mask < (uint64_t(2) << d); ++mask) {
      if ((mask & 1) == 0) continue;                 // value 1 at 0
      if ((std::popcount(mask) & 1) == 0) continue;  // value 1 at 1
      const Poly p = Poly::from_words({mask});
      if (is_irreducible(p)) pool.push_back(p);
    }
  }
  return pool;  // mask order per degree is already canonical
}

std::string report_to_json(const SearchReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["max_degree"] = r.max_degree;
  j["hits"] = nlohmann::ordered_json::array();
  for (const SearchHit& h : r.hits) {
    nlohmann::ordered_json e;
    e["poly"] = format_poly(h.poly);
    e["hex"] = to_hex(h.poly);
    e["degree"] = h.poly.degree();
    e["omega"] = h.omega;
    if (h.label)
      e["label"] = *h.label;
    else
      e["label"] = nullptr;
    j["hits"].push_back(std::move(e));
  }
  j["candidates_tested"] = r.candidates_tested;
  j["elapsed_ms"] = include_timing ? r.elapsed.count() : 0;
  return j.dump(2) + "\n";
}

}  // namespace gf2up
