#include "finitype/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "finitype/errors.hpp"
#include "gb_engine.hpp"

namespace finitype {
namespace detail {

int Order::compare(const Term& a, const Term& b) const {
  std::size_t lo = 0;
  std::uint32_t da = a.deg;
  std::uint32_t db = b.deg;
  if (eliminate_first_) {
    if (a.e[0] != b.e[0]) return a.e[0] > b.e[0] ? 1 : -1;
    lo = 1;
    da -= a.e[0];
    db -= b.e[0];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = nvars_; i-- > lo;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

bool divides(const Exps& a, const Exps& b, std::size_t nvars) {
  for (std::size_t i = 0; i < nvars; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

void sort_terms(SparsePoly& p, const Order& order) {
  std::sort(p.terms.begin(), p.terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a, b) > 0; });
}

SparsePoly monomial_poly(const Exps& e, std::uint32_t deg, const GaussianRational& c) {
  SparsePoly p;
  p.terms.push_back(Term{e, deg, c});
  return p;
}

SparsePoly from_holo(const HoloPoly& h, const Order& order, std::size_t offset) {
  const std::size_t n = h.num_vars();
  if (n + offset > order.nvars() || order.nvars() > kMaxEngineVars) {
    throw InputError("too many variables for the Groebner engine (max " + std::to_string(kMaxEngineVars - 1) + ")");
  }
  SparsePoly p;
  for (const auto& [m, c] : h.poly().terms()) {
    Term t;
    for (std::size_t j = 0; j < n; ++j) {
      if (m.holo(j) > UINT16_MAX) throw ResourceLimit("exponent too large for the Groebner engine");
      t.e[j + offset] = static_cast<std::uint16_t>(m.holo(j));
      t.deg += m.holo(j);
    }
    t.c = c;
    p.terms.push_back(std::move(t));
  }
  sort_terms(p, order);
  return p;
}

HoloPoly to_holo(const SparsePoly& p, std::size_t n, std::size_t offset) {
  Poly out(n);
  for (const auto& t : p.terms) {
    Monomial m(n);
    for (std::size_t j = 0; j < offset; ++j) {
      if (t.e[j] != 0) throw InvariantViolation("eliminated variable left in polynomial");
    }
    for (std::size_t j = 0; j < n; ++j) m.holo(j) = t.e[j + offset];
    out.add_term(m, t.c);
  }
  return HoloPoly(std::move(out));
}

namespace {

// a[from..] − coef · x^shift · b[bfrom..], both sorted descending.
std::vector<Term> sub_scaled(const std::vector<Term>& a, std::size_t from, const std::vector<Term>& b,
                             std::size_t bfrom, const GaussianRational& coef, const Exps& shift,
                             std::uint32_t shift_deg, std::size_t nvars, const Order& order) {
  std::vector<Term> out;
  out.reserve(a.size() - from + b.size() - bfrom);
  auto scaled = [&](const Term& t) {
    Term s;
    for (std::size_t i = 0; i < nvars; ++i) s.e[i] = static_cast<std::uint16_t>(t.e[i] + shift[i]);
    s.deg = t.deg + shift_deg;
    s.c = -(coef * t.c);
    return s;
  };
  std::size_t i = from;
  std::size_t j = bfrom;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term sb = scaled(b[j]);
    if (i == a.size()) {
      out.push_back(std::move(sb));
      ++j;
      continue;
    }
    int cmp = order.compare(a[i], sb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(sb));
      ++j;
    } else {
      GaussianRational c = a[i].c + sb.c;
      if (!c.is_zero()) {
        sb.c = std::move(c);
        out.push_back(std::move(sb));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(SparsePoly& p) {
  if (p.is_zero() || p.lead().c.is_one()) return;
  const GaussianRational inv = p.lead().c.inverse();
  for (auto& t : p.terms) t.c *= inv;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Exps lcm;
  std::uint32_t deg;
};

Pair make_pair_of(const std::vector<SparsePoly>& g, std::size_t i, std::size_t j, std::size_t nvars) {
  Pair p{i, j, {}, 0};
  for (std::size_t v = 0; v < nvars; ++v) {
    p.lcm[v] = std::max(g[i].lead().e[v], g[j].lead().e[v]);
    p.deg += p.lcm[v];
  }
  return p;
}

bool coprime(const Exps& a, const Exps& b, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    if (a[v] != 0 && b[v] != 0) return false;
  }
  return true;
}

SparsePoly s_polynomial(const SparsePoly& f, const SparsePoly& g, const Pair& pr, std::size_t nvars,
                        const Order& order) {
  Exps sf{};
  Exps sg{};
  std::uint32_t df = 0;
  std::uint32_t dg = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    sf[v] = static_cast<std::uint16_t>(pr.lcm[v] - f.lead().e[v]);
    sg[v] = static_cast<std::uint16_t>(pr.lcm[v] - g.lead().e[v]);
    df += sf[v];
    dg += sg[v];
  }
  // x^sf·f tail, then subtract x^sg·g tail; both inputs are monic.
  std::vector<Term> ft;
  ft.reserve(f.terms.size());
  for (std::size_t k = 1; k < f.terms.size(); ++k) {
    Term t = f.terms[k];
    for (std::size_t v = 0; v < nvars; ++v) t.e[v] = static_cast<std::uint16_t>(t.e[v] + sf[v]);
    t.deg += df;
    ft.push_back(std::move(t));
  }
  SparsePoly s;
  s.terms = sub_scaled(ft, 0, g.terms, 1, GaussianRational(1), sg, dg, nvars, order);
  return s;
}

}  // namespace

SparsePoly normal_form(const SparsePoly& f, const std::vector<SparsePoly>& g, const Order& order) {
  const std::size_t nvars = order.nvars();
  SparsePoly rem;
  std::vector<Term> cur = f.terms;
  std::size_t head = 0;
  while (head < cur.size()) {
    const Term& lt = cur[head];
    const SparsePoly* divisor = nullptr;
    for (const auto& q : g) {
      if (!q.is_zero() && divides(q.lead().e, lt.e, nvars)) {
        divisor = &q;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.terms.push_back(lt);
      ++head;
      continue;
    }
    Exps shift{};
    for (std::size_t v = 0; v < nvars; ++v) shift[v] = static_cast<std::uint16_t>(lt.e[v] - divisor->lead().e[v]);
    const GaussianRational coef = lt.c / divisor->lead().c;
    cur = sub_scaled(cur, head + 1, divisor->terms, 1, coef, shift, lt.deg - divisor->lead().deg, nvars, order);
    head = 0;
  }
  return rem;
}

std::vector<SparsePoly> buchberger(std::vector<SparsePoly> input, const Order& order, const EngineLimits& limits) {
  const std::size_t nvars = order.nvars();
  std::vector<SparsePoly> g;
  auto unit = [&]() {
    Exps zero{};
    return std::vector<SparsePoly>{monomial_poly(zero, 0, GaussianRational(1))};
  };
  for (auto& p : input) {
    if (p.is_zero()) continue;
    make_monic(p);
    if (p.is_constant()) return unit();
    g.push_back(std::move(p));
  }
  if (g.empty()) return {};

  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t t) {
    for (std::size_t i = 0; i < t; ++i) {
      pairs.push_back(make_pair_of(g, i, t, nvars));
      pending.emplace(i, t);
    }
  };
  for (std::size_t t = 1; t < g.size(); ++t) add_pairs_for(t);

  std::uint64_t reduced = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    Pair pr = *best;
    pairs.erase(best);
    pending.erase({pr.i, pr.j});

    const SparsePoly& fi = g[pr.i];
    const SparsePoly& fj = g[pr.j];
    if (fi.is_monomial() && fj.is_monomial()) continue;
    if (coprime(fi.lead().e, fj.lead().e, nvars)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(g[k].lead().e, pr.lcm, nvars)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
      chain = !pending.contains(key(pr.i, k)) && !pending.contains(key(pr.j, k));
    }
    if (chain) continue;

    if (++reduced > limits.pair_limit) {
      throw ResourceLimit("Groebner pair limit exceeded (" + std::to_string(limits.pair_limit) + ")");
    }
    SparsePoly h = normal_form(s_polynomial(fi, fj, pr, nvars, order), g, order);
    if (h.is_zero()) continue;
    make_monic(h);
    if (h.is_constant()) return unit();
    g.push_back(std::move(h));
    add_pairs_for(g.size() - 1);
  }

  // Minimalize, then interreduce tails.
  std::vector<bool> keep(g.size(), true);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (divides(g[j].lead().e, g[i].lead().e, nvars)) {
        const bool same = g[j].lead().e == g[i].lead().e;
        if (!same || j < i) keep[i] = false;
      }
    }
  }
  std::vector<SparsePoly> basis;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (keep[i]) basis.push_back(std::move(g[i]));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<SparsePoly> others;
    others.reserve(basis.size() - 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != i) others.push_back(basis[j]);
    }
    basis[i] = normal_form(basis[i], others, order);
    make_monic(basis[i]);
  }
  std::sort(basis.begin(), basis.end(),
            [&](const SparsePoly& a, const SparsePoly& b) { return order.compare(a.lead(), b.lead()) < 0; });
  return basis;
}

}  // namespace detail

// ------------------------------------------------------------- public API

IdealSpec::IdealSpec(std::size_t n, std::vector<HoloPoly> generators) : n_(n) {
  for (auto& g : generators) {
    if (g.num_vars() != n) throw InputError("ideal generator has the wrong variable count");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

GroebnerBasis::GroebnerBasis(std::size_t n, std::vector<HoloPoly> elements) : n_(n), elements_(std::move(elements)) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(leading_monomial(e));
  return out;
}

bool GroebnerBasis::is_unit() const { return elements_.size() == 1 && elements_.front().degree() == 0; }

HoloPoly GroebnerBasis::reduce(const HoloPoly& f) const {
  const detail::Order order(n_, false);
  std::vector<detail::SparsePoly> g;
  g.reserve(elements_.size());
  for (const auto& e : elements_) g.push_back(detail::from_holo(e, order));
  return detail::to_holo(detail::normal_form(detail::from_holo(f, order), g, order), n_);
}

Monomial leading_monomial(const HoloPoly& f) {
  if (f.is_zero()) throw InputError("leading monomial of zero polynomial");
  const detail::Order order(f.num_vars(), false);
  detail::SparsePoly p = detail::from_holo(f, order);
  Monomial m(f.num_vars());
  for (std::size_t j = 0; j < f.num_vars(); ++j) m.holo(j) = p.lead().e[j];
  return m;
}

GroebnerBasis groebner_basis(const IdealSpec& ideal, const GroebnerCaps& caps) {
  const std::size_t n = ideal.num_vars();
  const detail::Order order(n, false);
  std::vector<detail::SparsePoly> input;
  for (const auto& g : ideal.generators()) input.push_back(detail::from_holo(g, order));
  auto basis = detail::buchberger(std::move(input), order, {caps.pair_limit});
  std::vector<HoloPoly> elements;
  elements.reserve(basis.size());
  for (const auto& b : basis) elements.push_back(detail::to_holo(b, n));
  return GroebnerBasis(n, std::move(elements));
}

ExtNatural standard_monomial_count(std::size_t n, const std::vector<Monomial>& leading, std::uint64_t cap) {
  for (const auto& m : leading) {
    if (m.is_one()) return std::uint64_t{0};
  }
  // Bounded staircase iff every axis is capped by a pure power.
  for (std::size_t j = 0; j < n; ++j) {
    bool capped = false;
    for (const auto& m : leading) {
      if (m.holo(j) > 0 && m.holo_degree() == m.holo(j)) capped = true;
    }
    if (!capped) return ExtNatural::infinite();
  }
  auto standard = [&](const std::vector<unsigned>& e) {
    for (const auto& m : leading) {
      bool divisible = true;
      for (std::size_t j = 0; j < n && divisible; ++j) divisible = m.holo(j) <= e[j];
      if (divisible) return false;
    }
    return true;
  };
  // Depth-first walk of the order ideal; each monomial is reached once by
  // raising variables in nondecreasing index order.
  std::uint64_t count = 0;
  std::vector<std::pair<std::vector<unsigned>, std::size_t>> stack;
  stack.emplace_back(std::vector<unsigned>(n, 0), 0);
  while (!stack.empty()) {
    auto [e, first] = std::move(stack.back());
    stack.pop_back();
    if (!standard(e)) continue;
    if (++count > cap) throw ResourceLimit("standard monomial count exceeded cap");
    for (std::size_t v = first; v < n; ++v) {
      auto child = e;
      ++child[v];
      stack.emplace_back(std::move(child), v);
    }
  }
  return count;
}

ExtNatural standard_monomial_count(const GroebnerBasis& g, std::uint64_t cap) {
  return standard_monomial_count(g.num_vars(), g.leading_monomials(), cap);
}

}  // namespace finitype
