#include "clusterexp/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace clusterexp {

namespace {

void check_same_vars(const LaurentPoly& p, const LaurentPoly& q) {
  require(p.num_vars() == q.num_vars(), ErrorCode::BAD_INPUT,
          "polynomials over different variable counts");
}

int64_t total_degree(const ExpVec& e) {
  int64_t d = 0;
  for (int32_t x : e) d += x;
  return d;
}

// Strict weak order used to pick leading terms: graded, ties lexicographic
// with x_1 most significant. Returns true when a < b.
bool grlex_less(const ExpVec& a, const ExpVec& b) {
  int64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;  // vector lex compare, x_1 first
}

int32_t checked_exp_add(int32_t a, int32_t b) {
  int64_t s = int64_t(a) + int64_t(b);
  require(s >= std::numeric_limits<int32_t>::min() &&
              s <= std::numeric_limits<int32_t>::max(),
          ErrorCode::BAD_INPUT, "exponent overflow");
  return int32_t(s);
}

}  // namespace

LaurentPoly LaurentPoly::constant(int num_vars, const Coeff& c) {
  LaurentPoly p(num_vars);
  p.add_term(ExpVec(num_vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int var) {
  require(var >= 1 && var <= num_vars, ErrorCode::BAD_INPUT,
          "variable index out of range");
  ExpVec e(num_vars, 0);
  e[var - 1] = 1;
  LaurentPoly p(num_vars);
  p.add_term(e, 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(int num_vars, const ExpVec& exps,
                                  const Coeff& c) {
  require(int(exps.size()) == num_vars, ErrorCode::BAD_INPUT,
          "exponent vector length mismatch");
  LaurentPoly p(num_vars);
  p.add_term(exps, c);
  return p;
}

void LaurentPoly::add_term(const ExpVec& exps, const Coeff& c) {
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
  check_same_vars(p, q);
  LaurentPoly r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, c);
  return r;
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) {
  check_same_vars(p, q);
  LaurentPoly r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, -c);
  return r;
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
  check_same_vars(p, q);
  LaurentPoly r(p.num_vars());
  ExpVec e(p.num_vars());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (int v = 0; v < p.num_vars(); ++v)
        e[v] = checked_exp_add(ep[v], eq[v]);
      r.add_term(e, cp * cq);
    }
  }
  return r;
}

namespace {

// Per-variable minimum exponent over all terms; zero vector for the zero
// polynomial.
ExpVec min_exponents(const LaurentPoly& p) {
  ExpVec m(p.num_vars(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    if (first) {
      m = e;
      first = false;
    } else {
      for (int v = 0; v < p.num_vars(); ++v) m[v] = std::min(m[v], e[v]);
    }
  }
  return m;
}

LaurentPoly shift(const LaurentPoly& p, const ExpVec& by) {
  LaurentPoly r(p.num_vars());
  ExpVec e(p.num_vars());
  for (const auto& [ep, c] : p.terms()) {
    for (int v = 0; v < p.num_vars(); ++v) e[v] = checked_exp_add(ep[v], by[v]);
    r.add_term(e, c);
  }
  return r;
}

const ExpVec& leading_exps(const LaurentPoly& p) {
  const ExpVec* best = nullptr;
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    if (!best || grlex_less(*best, e)) best = &e;
  }
  return *best;
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  check_same_vars(p, q);
  require(!q.is_zero(), ErrorCode::BAD_INPUT, "division by zero");
  if (p.is_zero()) return LaurentPoly::zero(p.num_vars());

  const int m = p.num_vars();
  ExpVec mp = min_exponents(p), mq = min_exponents(q);
  ExpVec neg_mp(m), neg_mq(m);
  for (int v = 0; v < m; ++v) {
    neg_mp[v] = checked_exp_add(0, -mp[v]);
    neg_mq[v] = checked_exp_add(0, -mq[v]);
  }
  LaurentPoly rem = shift(p, neg_mp);
  LaurentPoly den = shift(q, neg_mq);

  // Single-divisor leading-term division. Because graded lex is a monomial
  // order, rem = den * h implies LT(rem) = LT(den) * LT(h), so each step
  // strips LT(h); failure at any step proves non-divisibility.
  LaurentPoly quot(m);
  const ExpVec& dl = leading_exps(den);
  const Coeff& dc = den.terms().at(dl);
  ExpVec t(m);
  while (!rem.is_zero()) {
    const ExpVec& rl = leading_exps(rem);
    const Coeff& rc = rem.terms().at(rl);
    for (int v = 0; v < m; ++v) {
      if (rl[v] < dl[v])
        fail(ErrorCode::NOT_DIVISIBLE, "leading monomial not divisible");
      t[v] = rl[v] - dl[v];
    }
    Coeff tc = rc / dc;
    if (tc * dc != rc)
      fail(ErrorCode::NOT_DIVISIBLE, "leading coefficient not divisible");
    LaurentPoly step = LaurentPoly::monomial(m, t, tc);
    quot = add(quot, step);
    rem = sub(rem, mul(step, den));
  }

  // Undo the shifts: p/q = (rem shift) has net exponent offset mq - mp.
  ExpVec back(m);
  for (int v = 0; v < m; ++v) back[v] = checked_exp_add(mp[v], -mq[v]);
  return shift(quot, back);
}

std::pair<LaurentPoly, ExpVec> strip_monomial(const LaurentPoly& p) {
  require(!p.is_zero(), ErrorCode::BAD_INPUT, "strip_monomial of zero");
  const int m = p.num_vars();
  ExpVec mins = min_exponents(p);
  ExpVec d(m, 0);
  for (int v = 0; v < m; ++v) d[v] = mins[v] < 0 ? -mins[v] : 0;
  return {shift(p, d), d};
}

Coeff eval_all_ones(const LaurentPoly& p) {
  Coeff s = 0;
  for (const auto& [e, c] : p.terms()) {
    (void)e;
    s += c;
  }
  return s;
}

std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";

  std::vector<const ExpVec*> order;
  order.reserve(p.num_terms());
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    order.push_back(&e);
  }
  std::sort(order.begin(), order.end(), [](const ExpVec* a, const ExpVec* b) {
    int64_t da = total_degree(*a), db = total_degree(*b);
    if (da != db) return da < db;
    return *b < *a;  // within a degree the lex-larger term prints first
  });

  std::ostringstream out;
  bool first = true;
  for (const ExpVec* e : order) {
    Coeff c = p.terms().at(*e);
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    Coeff a = neg ? Coeff(-c) : c;

    std::ostringstream vars;
    bool any = false;
    for (std::size_t v = 0; v < e->size(); ++v) {
      int32_t x = (*e)[v];
      if (x == 0) continue;
      if (any) vars << "*";
      vars << "x" << (v + 1);
      if (x != 1) vars << "^" << x;
      any = true;
    }
    if (!any) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << vars.str();
    }
  }
  return out.str();
}

}  // namespace clusterexp
