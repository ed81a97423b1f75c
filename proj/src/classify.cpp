#include "gf2up/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gf2up {
namespace {

ClassEntry make_entry(std::string label,
                      std::vector<std::pair<Poly, unsigned>> factored) {
  ClassEntry e;
  e.label = std::move(label);
  e.base = Poly::one();
  for (const auto& [p, m] : factored) e.base = e.base * pow(p, m);
  std::sort(factored.begin(), factored.end(), [](const auto& l, const auto& r) {
    return canonical_less(l.first, r.first);
  });
  e.factored = std::move(factored);
  e.omega = int(e.factored.size());
  e.self_conjugate = (conjugate(e.base) == e.base);
  return e;
}

std::vector<ClassEntry> build_table() {
  const Poly x = Poly::x();
  const Poly x1 = parse_poly("x+1");
  const Poly t2 = parse_poly("x^2+x+1");
  const Poly q4 = parse_poly("x^4+x+1");
  const Poly c4 = complete_poly(4);
  const Poly k3a = parse_poly("x^3+x+1");
  const Poly k3b = parse_poly("x^3+x^2+1");
  const Poly f4 = parse_poly("x^4+x^3+1");
  const Poly s1 = parse_poly("x^6+x^3+1");
  const Poly s2 = substitute_x_pow(complete_poly(4), 5);
  const Poly s3 = complete_poly(10);
  const Poly s4 = complete_poly(12);

  return {
      make_entry("Thm3.1-i", {{x, 1}, {x1, 1}}),
      make_entry("Thm3.1-ii-a", {{x, 3}, {x1, 2}, {t2, 1}}),
      make_entry("Thm3.1-ii-b", {{x, 5}, {x1, 4}, {c4, 1}}),
      make_entry("Thm3.1-iii", {{x, 3}, {x1, 3}, {t2, 2}}),
      make_entry("Thm4.1-i", {{x, 6}, {x1, 4}, {t2, 3}, {q4, 1}}),
      make_entry("Thm4.1-ii", {{x, 13}, {x1, 8}, {t2, 4}, {s4, 1}}),
      make_entry("Thm4.1-iii", {{x, 11}, {x1, 8}, {c4, 2}, {s3, 1}}),
      make_entry("Thm4.1-iv", {{x, 9}, {x1, 4}, {t2, 2}, {s1, 1}}),
      make_entry("Thm4.1-v", {{x, 25}, {x1, 16}, {c4, 4}, {s2, 1}}),
      make_entry("Thm4.1-vi", {{x, 7}, {x1, 4}, {k3b, 1}, {k3a, 1}}),
      make_entry("Thm4.1-vii", {{x, 3}, {x1, 3}, {t2, 3}, {q4, 1}}),
      make_entry("Thm4.1-viii", {{x, 5}, {x1, 6}, {t2, 2}, {c4, 1}}),
      make_entry("Thm4.1-ix", {{x, 5}, {x1, 5}, {f4, 1}, {c4, 1}}),
      make_entry("Thm4.1-x", {{x, 13}, {x1, 12}, {t2, 8}, {s4, 1}}),
      make_entry("Thm4.1-xi", {{x, 9}, {x1, 6}, {t2, 4}, {s1, 1}}),
      make_entry("Thm4.1-xii", {{x, 7}, {x1, 7}, {k3a, 2}, {k3b, 2}}),
  };
}

}  // namespace

const std::vector<ClassEntry>& theorem_table() {
  static const std::vector<ClassEntry> table = build_table();
  return table;
}

std::vector<Poly> orbit(const ClassEntry& entry, uint64_t max_degree) {
  if (int64_t(max_degree) < entry.base.degree())
    throw std::invalid_argument("orbit: max_degree below the base degree");
  std::set<Poly> out;
  const Poly cores[2] = {entry.base, conjugate(entry.base)};
  for (const Poly& core : cores) {
    Poly p = core;
    while (uint64_t(p.degree()) <= max_degree) {
      out.insert(p);
      if (uint64_t(p.degree()) * 2 > max_degree) break;
      p = square(p);
    }
  }
  return {out.begin(), out.end()};
}

std::optional<Classification> classify(const Poly& a) {
  if (a.degree() < 1)
    throw std::domain_error("classify: nonconstant input required");
  Poly core = a;
  uint64_t n = 0;
  // None of the 16 bases is a perfect square, so peeling every square
  // root leaves the unique candidate core.
  while (auto r = try_sqrt(core)) {
    core = std::move(*r);
    ++n;
  }
  const Poly conj = conjugate(core);
  for (const ClassEntry& e : theorem_table()) {
    if (core == e.base) return Classification{e.label, n, false};
    if (conj == e.base) return Classification{e.label, n, true};
  }
  return std::nullopt;
}

}  // namespace gf2up
