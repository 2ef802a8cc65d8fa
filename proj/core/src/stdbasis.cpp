#include "chernob/stdbasis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chernob/errors.hpp"

namespace chernob {

namespace {

struct Budget {
  std::uint64_t steps_left;
  void consume() {
    if (steps_left == 0) {
      throw ResourceLimitError("reduction step budget exhausted; result would be uncertified");
    }
    --steps_left;
  }
};

struct BasisElem {
  Polynomial poly;  // monic with respect to the active order
  Monomial lm;
  int ecart;
  int sugar;
};

Polynomial make_monic(const Polynomial& p, MonomialOrder order) {
  const Term& lt = p.leading_term(order);
  if (lt.coefficient == 1) return p;
  return p * Rational(Rational(1) / lt.coefficient);
}

BasisElem make_elem(Polynomial p, MonomialOrder order) {
  Polynomial monic = make_monic(p, order);
  Monomial lm = monic.leading_term(order).monomial;
  const int ecart = monic.total_degree() - static_cast<int>(lm.total_degree());
  const int sugar = monic.total_degree();
  return BasisElem{std::move(monic), std::move(lm), ecart, sugar};
}

int ecart_of(const Polynomial& p, const Monomial& lm) {
  return p.total_degree() - static_cast<int>(lm.total_degree());
}

// One cancellation step: h - LC(h) * (LM(h)/LM(g)) * g for monic g.
Polynomial reduce_once(const Polynomial& h, const Term& lt_h, const BasisElem& g) {
  return h - Polynomial::from_term(lt_h.coefficient, lt_h.monomial.divide_by(g.lm)) * g.poly;
}

// Reduces the leading term of h until it is irreducible against the
// reducer set, or h vanishes. For local orders this is Mora's weak
// normal form: the reducer of minimal ecart is chosen and intermediate
// results join `extra` when every available reducer has larger ecart,
// which is what guarantees termination. `extra` must start fresh for
// each polynomial being reduced; its elements certify membership only
// relative to the current h.
Polynomial weak_reduce(Polynomial h, std::span<const BasisElem> base,
                       std::vector<BasisElem>& extra, MonomialOrder order, Budget& budget) {
  const bool local = order == MonomialOrder::LocalNegDegRevLex;
  while (!h.is_zero()) {
    const Term lt_h = h.leading_term(order);
    const BasisElem* best = nullptr;
    for (const BasisElem& g : base) {
      if (g.lm.divides(lt_h.monomial) && (!best || g.ecart < best->ecart)) best = &g;
    }
    for (const BasisElem& g : extra) {
      if (g.lm.divides(lt_h.monomial) && (!best || g.ecart < best->ecart)) best = &g;
    }
    if (!best) break;
    const BasisElem chosen = *best;  // push_back below may reallocate `extra`
    if (local && chosen.ecart > ecart_of(h, lt_h.monomial)) {
      extra.push_back(make_elem(h, order));
    }
    h = reduce_once(h, lt_h, chosen);
    budget.consume();
  }
  return h;
}

// Weak reduction of the leading term plus reduction of every tail term,
// so no monomial of the result is divisible by a reducer leading
// monomial. Stage-wise: each stage runs a fresh Mora pass on what is
// left below the already-frozen irreducible terms.
Polynomial full_reduce(const Polynomial& p, std::span<const BasisElem> base, MonomialOrder order,
                       Budget& budget) {
  Polynomial remainder = Polynomial::zero(p.variable_count());
  Polynomial h = p;
  while (!h.is_zero()) {
    std::vector<BasisElem> extra;
    h = weak_reduce(std::move(h), base, extra, order, budget);
    if (h.is_zero()) break;
    const Term lt = h.leading_term(order);
    remainder = remainder + Polynomial::from_term(lt.coefficient, lt.monomial);
    h = h - Polynomial::from_term(lt.coefficient, lt.monomial);
  }
  return remainder;
}

std::vector<BasisElem> make_reducers(std::span<const Polynomial> basis, MonomialOrder order) {
  std::vector<BasisElem> reducers;
  reducers.reserve(basis.size());
  for (const Polynomial& g : basis) {
    if (!g.is_zero()) reducers.push_back(make_elem(g, order));
  }
  return reducers;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis,
                       MonomialOrder order, const EngineLimits& limits) {
  Budget budget{limits.reduction_step_limit};
  const std::vector<BasisElem> reducers = make_reducers(basis, order);
  return full_reduce(p, reducers, order, budget);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  const Term& lf = f.leading_term(order);
  const Term& lg = g.leading_term(order);
  const Monomial l = lcm(lf.monomial, lg.monomial);
  const Polynomial left =
      Polynomial::from_term(Rational(1) / lf.coefficient, l.divide_by(lf.monomial)) * f;
  const Polynomial right =
      Polynomial::from_term(Rational(1) / lg.coefficient, l.divide_by(lg.monomial)) * g;
  return left - right;
}

namespace {

struct PairKey {
  std::uint32_t lcm_degree;
  int sugar;
  int i;
  int j;
  auto operator<=>(const PairKey&) const = default;
};

}  // namespace

StandardBasis standard_basis(const Ideal& ideal, MonomialOrder order,
                             const EngineLimits& limits) {
  Budget budget{limits.reduction_step_limit};
  std::vector<BasisElem> g;
  for (const Polynomial& gen : ideal.generators) g.push_back(make_elem(gen, order));

  std::set<PairKey> queue;
  std::set<std::pair<int, int>> treated;
  std::map<std::pair<int, int>, Monomial> pair_lcm;

  auto push_pair = [&](int i, int j) {
    const Monomial l = lcm(g[static_cast<std::size_t>(i)].lm, g[static_cast<std::size_t>(j)].lm);
    const int sugar_i = g[static_cast<std::size_t>(i)].sugar +
                        static_cast<int>(l.total_degree() -
                                         g[static_cast<std::size_t>(i)].lm.total_degree());
    const int sugar_j = g[static_cast<std::size_t>(j)].sugar +
                        static_cast<int>(l.total_degree() -
                                         g[static_cast<std::size_t>(j)].lm.total_degree());
    queue.insert(PairKey{l.total_degree(), std::max(sugar_i, sugar_j), i, j});
    pair_lcm.emplace(std::make_pair(i, j), l);
  };

  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(g.size()); ++j) push_pair(i, j);
  }

  std::uint64_t reductions = 0;
  while (!queue.empty()) {
    const PairKey key = *queue.begin();
    queue.erase(queue.begin());
    const int i = key.i;
    const int j = key.j;
    const Monomial& l = pair_lcm.at({i, j});
    treated.insert({i, j});

    const BasisElem& gi = g[static_cast<std::size_t>(i)];
    const BasisElem& gj = g[static_cast<std::size_t>(j)];

    // Product criterion: coprime leading monomials reduce to zero.
    if (l.total_degree() == gi.lm.total_degree() + gj.lm.total_degree()) continue;

    // Chain criterion: a third element whose leading monomial divides the
    // lcm, with both companion pairs already treated, makes this pair
    // redundant.
    bool chained = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!g[static_cast<std::size_t>(k)].lm.divides(l)) continue;
      const auto ik = std::minmax(i, k);
      const auto jk = std::minmax(j, k);
      if (treated.count({ik.first, ik.second}) > 0 && treated.count({jk.first, jk.second}) > 0) {
        chained = true;
      }
    }
    if (chained) continue;

    if (++reductions > limits.pair_limit) {
      throw ResourceLimitError("standard-basis pair reduction limit exceeded (" +
                               std::to_string(limits.pair_limit) + ")");
    }

    std::vector<BasisElem> extra;
    const Polynomial h =
        weak_reduce(s_polynomial(gi.poly, gj.poly, order), g, extra, order, budget);
    if (h.is_zero()) continue;

    g.push_back(make_elem(h, order));
    const int fresh = static_cast<int>(g.size()) - 1;
    for (int k = 0; k < fresh; ++k) push_pair(k, fresh);
  }

  // Minimalize: keep only elements whose leading monomial is not
  // divisible by another kept element's. Divisors have lower or equal
  // total degree under both orders, so process by ascending degree.
  std::vector<int> idx(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) idx[k] = static_cast<int>(k);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const Monomial& ma = g[static_cast<std::size_t>(a)].lm;
    const Monomial& mb = g[static_cast<std::size_t>(b)].lm;
    if (ma.total_degree() != mb.total_degree()) return ma.total_degree() < mb.total_degree();
    return less(MonomialOrder::GlobalDegRevLex, ma, mb);
  });
  std::vector<BasisElem> minimal;
  for (int k : idx) {
    const Monomial& lm = g[static_cast<std::size_t>(k)].lm;
    bool redundant = false;
    for (const BasisElem& kept : minimal) {
      if (kept.lm.divides(lm)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g[static_cast<std::size_t>(k)]);
  }

  // Best-effort tail interreduction. Fully reduced tails need not exist
  // over a local ring, so a per-element step allowance bounds the work
  // and the weakly reduced element is kept on overflow.
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<BasisElem> others;
    for (std::size_t m = 0; m < minimal.size(); ++m) {
      if (m != k) others.push_back(minimal[m]);
    }
    const Polynomial& p = minimal[k].poly;
    const Term lt = p.leading_term(order);
    const Polynomial head = Polynomial::from_term(lt.coefficient, lt.monomial);
    try {
      Budget tail_budget{10'000};
      const Polynomial tail = full_reduce(p - head, others, order, tail_budget);
      out.push_back(make_monic(head + tail, order));
    } catch (const ResourceLimitError&) {
      out.push_back(minimal[k].poly);
    }
  }

  return StandardBasis{ideal.variable_count, std::move(out), order, true};
}

Colength colength(const StandardBasis& basis) {
  if (!basis.complete) throw std::invalid_argument("colength requires a complete basis");
  std::vector<Monomial> lms;
  lms.reserve(basis.elements.size());
  for (const Polynomial& p : basis.elements) lms.push_back(p.leading_term(basis.order).monomial);

  const int n = basis.variable_count;

  // Staircase finiteness test: every variable needs a pure power among
  // the leading monomials (exponent 0 covers the unit ideal).
  for (int m = 0; m < n; ++m) {
    bool found = false;
    for (const Monomial& lm : lms) {
      bool pure = true;
      for (int v = 0; v < n && pure; ++v) {
        if (v != m && lm.exponent(v) != 0) pure = false;
      }
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return Colength::infinite();
  }

  // Breadth-first walk of the staircase complement from 1.
  auto divisible = [&](const Monomial& m) {
    for (const Monomial& lm : lms) {
      if (lm.divides(m)) return true;
    }
    return false;
  };
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Monomial> frontier;
  std::uint64_t count = 0;
  const Monomial one = Monomial::one(n);
  if (!divisible(one)) {
    seen.insert(one.exponents());
    frontier.push_back(one);
    count = 1;
  }
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& m : frontier) {
      for (int v = 0; v < n; ++v) {
        const Monomial candidate = m * Monomial::variable(n, v);
        if (divisible(candidate)) continue;
        if (seen.insert(candidate.exponents()).second) {
          next.push_back(candidate);
          ++count;
        }
      }
    }
    frontier = std::move(next);
  }
  return Colength::finite(count);
}

bool is_zero_dimensional_local(const Ideal& ideal, const EngineLimits& limits) {
  return colength(standard_basis(ideal, MonomialOrder::LocalNegDegRevLex, limits)).is_finite();
}

}  // namespace chernob
