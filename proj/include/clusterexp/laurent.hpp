#ifndef CLUSTEREXP_LAURENT_HPP
#define CLUSTEREXP_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clusterexp/error.hpp"

namespace clusterexp {

using Coeff = boost::multiprecision::cpp_int;

// Exponent vector of a Laurent monomial; entry v-1 is the exponent of x_v.
// Entries may be negative.
using ExpVec = std::vector<int32_t>;

// Exact multivariate Laurent polynomial over Z in variables x_1..x_m.
// Stored normalized: no zero coefficients.
class LaurentPoly {
public:
  explicit LaurentPoly(int num_vars) : num_vars_(num_vars) {}

  static LaurentPoly zero(int num_vars) { return LaurentPoly(num_vars); }
  static LaurentPoly constant(int num_vars, const Coeff& c);
  // var is 1-based.
  static LaurentPoly variable(int num_vars, int var);
  static LaurentPoly monomial(int num_vars, const ExpVec& exps, const Coeff& c);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::map<ExpVec, Coeff>& terms() const { return terms_; }

  // Adds c * x^exps, dropping the term if the total cancels.
  void add_term(const ExpVec& exps, const Coeff& c);

  bool operator==(const LaurentPoly& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

private:
  int num_vars_;
  std::map<ExpVec, Coeff> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

// Exact quotient p / q; throws NOT_DIVISIBLE when no Laurent polynomial r
// with q*r = p exists. Both are first shifted by their per-variable minimum
// exponents into ordinary polynomials (valid over an integral domain because
// minimum exponents are additive under multiplication), then divided by
// leading terms under graded lex.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

// Splits p = f * x^(-d) with d_v = max(0, -min_exp_v): f is p with all
// denominators cleared, d the denominator exponent vector.
std::pair<LaurentPoly, ExpVec> strip_monomial(const LaurentPoly& p);

// Sum of coefficients, i.e. the evaluation at x_1 = ... = x_m = 1.
Coeff eval_all_ones(const LaurentPoly& p);

// Canonical text rendering: terms sorted by ascending total degree, ties
// broken lexicographically with x_1 most significant and the larger vector
// first. Reproduces e.g. "x3*x5 + x1*x3*x6 + x2*x4*x5".
std::string render(const LaurentPoly& p);

}  // namespace clusterexp

#endif
