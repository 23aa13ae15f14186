#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "skeinlab/error.hpp"

namespace skeinlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exponents are kept in quarter-units: the stored integer e stands for the
/// exponent e/4.  Integer powers are therefore multiples of 4; the grid exists
/// so that changes of variable like A -> t^{-1/4} stay exact.
constexpr int kQuarter = 4;

using ExpVec = std::vector<int>;

/// Exact multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients.  Canonical form: variables sorted alphabetically, no unused
/// variable, terms keyed by exponent vector (lexicographic map order), no zero
/// coefficient.  Values are immutable; every operation returns a fresh value.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly variable(const std::string& name) { return monomial(name, kQuarter); }
  /// var^(quarter_exp/4) scaled by coeff.
  static LaurentPoly monomial(const std::string& name, int quarter_exp, const BigInt& coeff = 1);
  /// Builds from explicit data; canonicalizes (sorts vars, drops zeros/unused).
  static LaurentPoly from_terms(std::vector<std::string> vars, std::map<ExpVec, BigInt> terms);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<ExpVec, BigInt>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const;  // canonical total order, for map keys

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const BigInt& c) const;

  /// Integer power.  Negative powers are defined only for single-term
  /// monomials with coefficient +-1.
  LaurentPoly pow(long long k) const;

  bool is_monomial() const { return terms_.size() == 1; }

  /// Substitutes `image` for `var`.  A single-term image with coefficient +-1
  /// is always legal provided the composed exponents land on the quarter grid
  /// (and, for coefficient -1, the exponents of var are integers so the sign
  /// is well-defined).  A general image requires every exponent of var to be
  /// a nonnegative integer.  Violations raise NonIntegralComposition.
  LaurentPoly substituted(const std::string& var, const LaurentPoly& image) const;

  /// Coefficients c_0..c_n of the expansion at var = e^x for a polynomial
  /// univariate in `var`: c_k = sum over terms coeff * exponent^k / k!.
  std::vector<BigRat> series_coeffs(const std::string& var, int n_max) const;

  /// Quarter-unit exponent range of `var` over all terms; {0,0} if absent.
  std::pair<int, int> exponent_range(const std::string& var) const;

  /// Multiplies every term by var^(quarter_shift/4).
  LaurentPoly shifted(const std::string& var, int quarter_shift) const;

  /// Signed-monomial text form, terms in descending exponent order, e.g.
  /// "-t^4 + t^3 + t" or "-t^1/2 - t^-1/2".
  std::string to_text() const;

private:
  std::vector<std::string> vars_;   // sorted, each used by some term
  std::map<ExpVec, BigInt> terms_;  // exponent vectors aligned with vars_

  void normalize();
  // Re-expresses both operands over the union variable list.
  static void align(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& a2, LaurentPoly& b2);
  LaurentPoly with_vars(const std::vector<std::string>& target) const;
};

inline LaurentPoly operator*(const BigInt& c, const LaurentPoly& p) { return p.scaled(c); }

/// d = -A^2 - A^{-2}, the bracket loop value.
LaurentPoly bracket_loop_value();

/// p = +- var^N * q for some (possibly fractional) power N.
bool equal_up_to_unit_power(const LaurentPoly& p, const LaurentPoly& q, const std::string& var);

std::string format_quarter_exponent(int quarter);  // "2", "-1/2", "3/4", ...

}  // namespace skeinlab
