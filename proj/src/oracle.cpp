#include "toridim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <random>
#include <sstream>

#include "toridim/error.hpp"

namespace toridim::oracle {

long Ring::degree(const Mono& m) const {
  long d = 0;
  for (std::size_t i = 0; i < nvars(); ++i) d += weights[i] * m[i];
  return d;
}

bool Ring::greater(const Mono& a, const Mono& b) const {
  const long da = degree(a), db = degree(b);
  if (da != db) return da > db;
  for (std::size_t i = nvars(); i > 0; --i)
    if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1];
  return false;
}

Ring standard_ring(std::size_t nvars) { return Ring{std::vector<long>(nvars, 1)}; }

namespace {

// Integer-coefficient working form; the ideal over Q is what matters.
struct ITerm {
  Mono m{};
  Int c;
};
using IPoly = std::vector<ITerm>;

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < max_vars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono lcm(const Mono& a, const Mono& b) {
  Mono m{};
  for (std::size_t i = 0; i < max_vars; ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Mono quotient(const Mono& a, const Mono& b) {
  Mono m{};
  for (std::size_t i = 0; i < max_vars; ++i) m[i] = a[i] - b[i];
  return m;
}

bool coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < max_vars; ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Mono times(const Mono& a, const Mono& b) {
  Mono m{};
  for (std::size_t i = 0; i < max_vars; ++i) m[i] = a[i] + b[i];
  return m;
}

void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Int g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().c < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

// a*f - b*m*g
IPoly combine(const Ring& ring, const Int& a, const IPoly& f, const Int& b, const Mono& m, const IPoly& g) {
  IPoly out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back({f[i].m, a * f[i].c});
      ++i;
      continue;
    }
    const Mono gm = times(m, g[j].m);
    if (i == f.size() || ring.greater(gm, f[i].m)) {
      out.push_back({gm, -b * g[j].c});
      ++j;
    } else if (ring.greater(f[i].m, gm)) {
      out.push_back({f[i].m, a * f[i].c});
      ++i;
    } else {
      Int c = a * f[i].c - b * g[j].c;
      if (c != 0) out.push_back({gm, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Budget unlimited() {
  const auto inf = ~std::size_t{0};
  return Budget{inf, inf, inf, inf};
}

struct Engine {
  Engine(const Ring& r, const Budget& b) : ring(r), budget(b) {}

  const Ring& ring;
  Budget budget;
  std::vector<IPoly> polys;
  std::vector<bool> active;
  GroebnerStats stats;

  [[noreturn]] void exceeded(const std::string& what) const {
    std::ostringstream os;
    os << what << " (pairs " << stats.pairs << ", zero reductions " << stats.zero_reductions << ", basis "
       << stats.basis_size << ", largest polynomial " << stats.max_terms << " terms)";
    fail(ErrorCode::budget_exceeded, os.str());
  }

  std::vector<std::size_t> sizes;  // total coefficient bits

  // The cheapest element whose leading monomial divides m.
  const IPoly* reducer(const Mono& m) const {
    const IPoly* best = nullptr;
    std::size_t best_size = 0;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k] && divides(polys[k].front().m, m) && (!best || sizes[k] < best_size)) {
        best = &polys[k];
        best_size = sizes[k];
      }
    return best;
  }

  void add(IPoly h) {
    std::size_t bits = 0;
    for (const auto& t : h) bits += mpz_sizeinbase(t.c.get_mpz_t(), 2);
    polys.push_back(std::move(h));
    active.push_back(true);
    sizes.push_back(bits);
  }

  // Full reduction, returned primitive.
  IPoly reduce(IPoly f) {
    IPoly rem;
    std::size_t steps = 0;
    while (!f.empty()) {
      if (f.size() > budget.max_terms) exceeded("polynomial grew beyond the term cap");
      std::size_t k = 0;
      const IPoly* g = nullptr;
      for (; k < f.size() && !(g = reducer(f[k].m)); ++k) {
      }
      rem.insert(rem.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.begin() + k));
      f.erase(f.begin(), f.begin() + k);
      if (!g) break;
      const ITerm& lt = f.front();
      Int d = gcd(lt.c, g->front().c);
      Int a = g->front().c / d, b = lt.c / d;
      f = combine(ring, a, f, b, quotient(lt.m, g->front().m), *g);
      if (a != 1)
        for (auto& t : rem) t.c *= a;
      if (++steps % 16 == 0) {
        // keep coefficients small: divide the remainder and the rest by their common content
        Int g2 = 0;
        for (const auto& t : rem) mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), t.c.get_mpz_t());
        for (const auto& t : f) mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), t.c.get_mpz_t());
        if (g2 > 1) {
          for (auto& t : rem) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g2.get_mpz_t());
          for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g2.get_mpz_t());
        }
        check_bits(f);
      }
    }
    make_primitive(rem);
    stats.max_terms = std::max(stats.max_terms, rem.size());
    return rem;
  }

  void check_bits(const IPoly& f) const {
    for (const auto& t : f)
      if (mpz_sizeinbase(t.c.get_mpz_t(), 2) > budget.max_coeff_bits) exceeded("coefficients grew beyond the bit cap");
  }

  IPoly spoly(std::size_t i, std::size_t j) const {
    const auto& f = polys[i];
    const auto& g = polys[j];
    const Mono l = lcm(f.front().m, g.front().m);
    Int d = gcd(f.front().c, g.front().c);
    Int a = g.front().c / d, b = f.front().c / d;
    IPoly fm;
    const Mono qf = quotient(l, f.front().m);
    for (const auto& t : f) fm.push_back({times(qf, t.m), t.c});
    return combine(ring, a, fm, b, quotient(l, g.front().m), g);
  }

  struct Pair {
    std::size_t i, j;
    Mono lcm;
    long degree;
  };
  std::vector<Pair> pairs;

  Pair make_pair(std::size_t i, std::size_t j) const {
    Mono l = lcm(polys[i].front().m, polys[j].front().m);
    return {i, j, l, ring.degree(l)};
  }

  // Gebauer-Moeller installation of a new element.
  void update(IPoly h) {
    const std::size_t hi = polys.size();
    add(std::move(h));
    const Mono& lh = polys[hi].front().m;

    std::vector<Pair> c;
    for (std::size_t k = 0; k < hi; ++k)
      if (active[k]) c.push_back(make_pair(k, hi));
    std::vector<Pair> d;
    for (std::size_t x = 0; x < c.size(); ++x) {
      const Pair& p = c[x];
      bool keep = coprime(lh, polys[p.i].front().m);
      if (!keep) {
        keep = true;
        for (std::size_t y = x + 1; y < c.size() && keep; ++y)
          if (divides(c[y].lcm, p.lcm)) keep = false;
        for (std::size_t y = 0; y < d.size() && keep; ++y)
          if (divides(d[y].lcm, p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs) {
      const bool drop = divides(lh, p.lcm) && lcm(polys[p.i].front().m, lh) != p.lcm &&
                        lcm(polys[p.j].front().m, lh) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (const auto& p : d)
      if (!coprime(lh, polys[p.i].front().m)) next.push_back(p);
    pairs = std::move(next);
    for (std::size_t k = 0; k < hi; ++k)
      if (active[k] && divides(lh, polys[k].front().m)) active[k] = false;
    stats.basis_size = static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
    if (stats.basis_size > budget.max_basis) exceeded("basis grew beyond the size cap");
  }

  void run(const std::vector<IPoly>& gens) {
    std::vector<IPoly> sorted = gens;
    std::sort(sorted.begin(), sorted.end(),
              [&](const IPoly& a, const IPoly& b) { return ring.greater(b.front().m, a.front().m); });
    for (auto& g : sorted) {
      auto h = reduce(g);
      if (!h.empty()) update(std::move(h));
    }
    while (!pairs.empty()) {
      auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return ring.greater(b.lcm, a.lcm);
      });
      Pair p = *best;
      pairs.erase(best);
      if (++stats.pairs > budget.max_pairs) exceeded("pair queue exceeded the cap");
      auto h = reduce(spoly(p.i, p.j));
      if (h.empty()) {
        ++stats.zero_reductions;
        continue;
      }
      update(std::move(h));
    }
  }

  std::vector<Poly> reduced_basis() {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) keep.push_back(k);
    std::vector<Poly> out;
    for (auto k : keep) {
      active[k] = false;
      IPoly rest = reduce(polys[k]);
      active[k] = true;
      Poly p;
      const Rat lc = Rat(rest.front().c);
      for (const auto& t : rest) {
        Rat c = Rat(t.c) / lc;
        c.canonicalize();
        p.terms.push_back({t.m, c});
      }
      out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return ring.greater(b.lead(), a.lead()); });
    return out;
  }

};

IPoly to_ipoly(const Poly& p) {
  Int l = 1;
  for (const auto& t : p.terms) l = lcm(l, Int(t.c.get_den()));
  IPoly out;
  for (const auto& t : p.terms) {
    Rat c = t.c * l;
    out.push_back({t.m, c.get_num()});
  }
  make_primitive(out);
  return out;
}

void check_guard(const Ring& ring, const std::vector<Poly>& gens) {
  if (ring.nvars() == 0 || ring.nvars() > max_vars)
    fail(ErrorCode::size_limit, "oracle handles 1 to 5 variables");
  for (auto w : ring.weights) require(w >= 1, "weights must be positive");
  if (gens.size() > 6) fail(ErrorCode::size_limit, "oracle handles at most 6 generators");
  for (const auto& g : gens)
    for (const auto& t : g.terms)
      if (ring.degree(t.m) > 12) fail(ErrorCode::size_limit, "oracle handles degrees up to 12");
}

}  // namespace

Poly make_poly(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ring.greater(a.m, b.m); });
  Poly p;
  for (auto& t : terms) {
    for (std::size_t i = 0; i < max_vars; ++i) {
      require(t.m[i] >= 0, "negative exponent");
      require(i < ring.nvars() || t.m[i] == 0, "exponent beyond the ring's variables");
    }
    if (!p.terms.empty() && p.terms.back().m == t.m) {
      p.terms.back().c += t.c;
    } else {
      p.terms.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms, [](const Term& t) { return t.c == 0; });
  for (auto& t : p.terms) t.c.canonicalize();
  return p;
}

Poly make_poly(const Ring& ring, const std::vector<IntVec>& exponents, const std::vector<Int>& coeffs) {
  require(exponents.size() == coeffs.size(), "exponent and coefficient counts differ");
  std::vector<Term> terms;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    require(exponents[k].size() == ring.nvars(), "exponent length does not match the ring");
    Term t;
    for (std::size_t i = 0; i < ring.nvars(); ++i) t.m[i] = static_cast<int>(exponents[k][i].get_si());
    t.c = coeffs[k];
    terms.push_back(std::move(t));
  }
  return make_poly(ring, std::move(terms));
}

bool is_homogeneous(const Ring& ring, const Poly& p) {
  return std::all_of(p.terms.begin(), p.terms.end(),
                     [&](const Term& t) { return ring.degree(t.m) == ring.degree(p.lead()); });
}

std::string to_string(const Poly& p) {
  if (p.zero()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < p.terms.size(); ++k) {
    const auto& t = p.terms[k];
    if (k > 0) os << (t.c < 0 ? " - " : " + ");
    else if (t.c < 0) os << "-";
    Rat a = abs(t.c);
    bool unit = true;
    for (int e : t.m) unit = unit && e == 0;
    if (a != 1 || unit) os << a.get_str();
    for (std::size_t i = 0; i < max_vars; ++i)
      if (t.m[i] > 0) {
        os << "X" << i;
        if (t.m[i] > 1) os << "^" << t.m[i];
      }
  }
  return os.str();
}

GroebnerBasis buchberger(const Ring& ring, const std::vector<Poly>& gens, const Budget& budget) {
  check_guard(ring, gens);
  Engine e(ring, budget);
  std::vector<IPoly> input;
  for (const auto& g : gens)
    if (!g.zero()) input.push_back(to_ipoly(g));
  e.run(input);
  GroebnerBasis gb;
  gb.polys = e.reduced_basis();
  gb.stats = e.stats;
  return gb;
}

Poly normal_form(const Ring& ring, const std::vector<Poly>& g, const Poly& p) {
  Engine e(ring, unlimited());
  for (const auto& q : g) {
    if (q.zero()) continue;
    e.add(to_ipoly(q));
  }
  if (p.zero()) return {};
  auto r = e.reduce(to_ipoly(p));
  Poly out;
  for (const auto& t : r) {
    Rat c = Rat(t.c) / Rat(r.front().c);
    c.canonicalize();
    out.terms.push_back({t.m, c});
  }
  return out;
}

bool is_groebner_basis(const Ring& ring, const std::vector<Poly>& g) {
  Engine e(ring, unlimited());
  for (const auto& p : g) {
    if (p.zero()) continue;
    e.add(to_ipoly(p));
  }
  for (std::size_t i = 0; i < e.polys.size(); ++i)
    for (std::size_t j = i + 1; j < e.polys.size(); ++j)
      if (!e.reduce(e.spoly(i, j)).empty()) return false;
  return true;
}

std::size_t krull_dimension(const std::vector<Mono>& leads, std::size_t nvars) {
  require(nvars <= max_vars, "too many variables");
  std::size_t best = 0;
  bool any = false;
  for (unsigned s = 0; s < (1U << nvars); ++s) {
    bool free = std::none_of(leads.begin(), leads.end(), [&](const Mono& m) {
      for (std::size_t i = 0; i < nvars; ++i)
        if (m[i] > 0 && !(s >> i & 1)) return false;
      return true;
    });
    if (free) {
      any = true;
      best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
    }
  }
  require(any, "the unit ideal has no dimension");
  return best;
}

std::size_t krull_dimension(const GroebnerBasis& gb, std::size_t nvars) {
  std::vector<Mono> leads;
  for (const auto& p : gb.polys) leads.push_back(p.lead());
  return krull_dimension(leads, nvars);
}

namespace {

int complement_dim(const std::vector<Mono>& leads, unsigned allowed, std::size_t nvars) {
  for (const auto& m : leads) {
    unsigned supp = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i] > 0) supp |= 1U << i;
    if ((supp & ~allowed) != 0) continue;
    // this generator must lose one of its variables
    int best = -1;
    for (std::size_t i = 0; i < nvars; ++i)
      if (supp >> i & 1) best = std::max(best, complement_dim(leads, allowed & ~(1U << i), nvars));
    return best;
  }
  return std::popcount(allowed);
}

}  // namespace

std::size_t krull_dimension_recursive(const std::vector<Mono>& leads, std::size_t nvars) {
  require(nvars <= max_vars, "too many variables");
  int d = complement_dim(leads, (1U << nvars) - 1, nvars);
  require(d >= 0, "the unit ideal has no dimension");
  return static_cast<std::size_t>(d);
}

std::vector<Poly> random_instance(const Ring& ring, const std::vector<std::vector<IntVec>>& supports,
                                  std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> coef(-coefficient_bound, coefficient_bound - 1);
  std::vector<Poly> out;
  for (const auto& s : supports) {
    std::vector<Int> cs;
    for (std::size_t k = 0; k < s.size(); ++k) {
      long c = coef(rng);
      cs.push_back(c >= 0 ? c + 1 : c);
    }
    out.push_back(make_poly(ring, s, cs));
  }
  return out;
}

namespace {

void check_probe(const Ring& ring, const std::vector<std::vector<IntVec>>& supports, std::size_t trials) {
  require(trials >= 5, "the probe needs at least 5 trials");
  for (std::size_t i = 0; i < supports.size(); ++i) {
    require(!supports[i].empty(), "support " + std::to_string(i) + " is empty");
    auto p = make_poly(ring, supports[i], std::vector<Int>(supports[i].size(), 1));
    require(p.terms.size() == supports[i].size(), "support " + std::to_string(i) + " repeats a monomial");
    require(is_homogeneous(ring, p), "support " + std::to_string(i) + " is not homogeneous");
  }
}

int trial_dim(const Ring& ring, const std::vector<std::vector<IntVec>>& supports, std::uint64_t seed,
              std::size_t t, const Budget& budget) {
  try {
    auto gb = buchberger(ring, random_instance(ring, supports, seed, t), budget);
    return static_cast<int>(krull_dimension(gb, ring.nvars()));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::budget_exceeded) return -1;
    throw;
  }
}

ProbeResult summarize(std::vector<int> dims) {
  ProbeResult r;
  int low = -1;
  for (int d : dims) {
    if (d < 0) {
      ++r.failures;
      continue;
    }
    ++r.successes;
    low = low < 0 ? d : std::min(low, d);
  }
  r.affine_dims = std::move(dims);
  if (r.successes < 5)
    fail(ErrorCode::budget_exceeded, "only " + std::to_string(r.successes) + " trials finished within the budget");
  r.proj_dim = low == 0 ? Dim::empty() : Dim::of(low - 1);
  return r;
}

}  // namespace

ProbeResult random_proj_dimension_serial(const Ring& ring, const std::vector<std::vector<IntVec>>& supports,
                                         std::size_t trials, std::uint64_t seed, const Budget& budget) {
  check_probe(ring, supports, trials);
  std::vector<int> dims;
  for (std::size_t t = 0; t < trials; ++t) dims.push_back(trial_dim(ring, supports, seed, t, budget));
  return summarize(std::move(dims));
}

ProbeResult random_proj_dimension(const Ring& ring, const std::vector<std::vector<IntVec>>& supports,
                                  std::size_t trials, std::uint64_t seed, const Budget& budget) {
  check_probe(ring, supports, trials);
  std::vector<int> dims(trials);
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < static_cast<long>(trials); ++t) {
    try {
      dims[static_cast<std::size_t>(t)] = trial_dim(ring, supports, seed, static_cast<std::size_t>(t), budget);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return summarize(std::move(dims));
}

}  // namespace toridim::oracle
