#include "skeinlab/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skeinlab {

LaurentPoly LaurentPoly::constant(const BigInt& c) {
  LaurentPoly p;
  if (c != 0) p.terms_[{}] = c;
  return p;
}

LaurentPoly LaurentPoly::monomial(const std::string& name, int quarter_exp, const BigInt& coeff) {
  LaurentPoly p;
  if (coeff == 0) return p;
  if (quarter_exp == 0) return constant(coeff);
  p.vars_ = {name};
  p.terms_[{quarter_exp}] = coeff;
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::string> vars, std::map<ExpVec, BigInt> terms) {
  LaurentPoly p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  for (const auto& [e, c] : p.terms_)
    require(e.size() == p.vars_.size(), "BadPolynomial", "exponent vector length mismatch");
  p.normalize();
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](int e) { return e == 0; });
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  if (vars_ != o.vars_) return vars_ < o.vars_;
  return terms_ < o.terms_;
}

void LaurentPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);

  // Sort variables alphabetically, permuting exponent vectors to match.
  if (!std::is_sorted(vars_.begin(), vars_.end())) {
    std::vector<size_t> order(vars_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return vars_[a] < vars_[b]; });
    std::vector<std::string> nv;
    nv.reserve(vars_.size());
    for (size_t k : order) nv.push_back(vars_[k]);
    std::map<ExpVec, BigInt> nt;
    for (const auto& [e, c] : terms_) {
      ExpVec ne(e.size());
      for (size_t i = 0; i < order.size(); ++i) ne[i] = e[order[i]];
      nt[std::move(ne)] += c;
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
    for (auto it = terms_.begin(); it != terms_.end();)
      it = (it->second == 0) ? terms_.erase(it) : std::next(it);
  }

  // Drop variables that no term uses.
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  if (!std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
    std::vector<std::string> nv;
    for (size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) nv.push_back(vars_[i]);
    std::map<ExpVec, BigInt> nt;
    for (const auto& [e, c] : terms_) {
      ExpVec ne;
      ne.reserve(nv.size());
      for (size_t i = 0; i < e.size(); ++i)
        if (used[i]) ne.push_back(e[i]);
      nt[std::move(ne)] += c;
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
  }
}

LaurentPoly LaurentPoly::with_vars(const std::vector<std::string>& target) const {
  LaurentPoly out;
  out.vars_ = target;
  std::vector<int> pos(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(target.begin(), target.end(), vars_[i]);
    pos[i] = static_cast<int>(it - target.begin());
  }
  for (const auto& [e, c] : terms_) {
    ExpVec ne(target.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.terms_[std::move(ne)] = c;
  }
  return out;
}

void LaurentPoly::align(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& a2,
                        LaurentPoly& b2) {
  std::vector<std::string> u;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(u));
  a2 = a.with_vars(u);
  b2 = b.with_vars(u);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly a, b;
  align(*this, o, a, b);
  for (const auto& [e, c] : b.terms_) a.terms_[e] += c;
  a.normalize();
  return a;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
  if (c == 0) return LaurentPoly();
  LaurentPoly p = *this;
  for (auto& [e, v] : p.terms_) v *= c;
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly a, b;
  align(*this, o, a, b);
  LaurentPoly out;
  out.vars_ = a.vars_;
  const size_t n = a.vars_.size();
  ExpVec e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.terms_[e] += ca * cb;
    }
  }
  out.normalize();
  return out;
}

LaurentPoly LaurentPoly::pow(long long k) const {
  if (k == 0) return constant(1);
  if (k < 0) {
    require(terms_.size() == 1, "BadPower", "negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    require(c == 1 || c == -1, "BadPower", "negative power needs unit coefficient");
    LaurentPoly inv;
    inv.vars_ = vars_;
    ExpVec ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    inv.terms_[std::move(ne)] = c;  // (+-1)^{-1} = +-1
    return inv.pow(-k);
  }
  LaurentPoly acc = constant(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = (k >>= 1) ? base * base : base;
  }
  return acc;
}

LaurentPoly LaurentPoly::substituted(const std::string& var, const LaurentPoly& image) const {
  auto vit = std::find(vars_.begin(), vars_.end(), var);
  if (vit == vars_.end()) return *this;
  const size_t vi = static_cast<size_t>(vit - vars_.begin());

  // Remaining skeleton over the other variables.
  std::vector<std::string> rest = vars_;
  rest.erase(rest.begin() + vi);

  if (image.is_monomial()) {
    const auto& [ie, ic] = *image.terms_.begin();
    require(ic == 1 || ic == -1, "NonIntegralComposition",
            "monomial substitution needs coefficient +-1");
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
      const int ev = e[vi];
      BigInt coeff = c;
      if (ic == -1) {
        require(ev % kQuarter == 0, "NonIntegralComposition",
                "sign of fractional power is undefined");
        if (((ev / kQuarter) % 2 + 2) % 2 == 1) coeff = -coeff;
      }
      LaurentPoly term;
      term.vars_ = rest;
      ExpVec ne(e.size() - 1);
      for (size_t i = 0, j = 0; i < e.size(); ++i)
        if (i != vi) ne[j++] = e[i];
      term.terms_[std::move(ne)] = coeff;
      LaurentPoly factor;
      factor.vars_ = image.vars_;
      ExpVec fe(ie.size());
      for (size_t i = 0; i < ie.size(); ++i) {
        const long long prod = static_cast<long long>(ev) * ie[i];
        require(prod % kQuarter == 0, "NonIntegralComposition",
                "composed exponent leaves the quarter grid");
        fe[i] = static_cast<int>(prod / kQuarter);
      }
      factor.terms_[std::move(fe)] = 1;
      factor.normalize();
      term.normalize();
      out = out + term * factor;
    }
    return out;
  }

  // General image: Horner over nonnegative integer powers of var.
  long long max_pow = 0;
  for (const auto& [e, c] : terms_) {
    require(e[vi] >= 0 && e[vi] % kQuarter == 0, "NonIntegralComposition",
            "general substitution needs nonnegative integer exponents");
    max_pow = std::max<long long>(max_pow, e[vi] / kQuarter);
  }
  // coefficient polynomial of var^k, over `rest`
  std::vector<LaurentPoly> by_pow(static_cast<size_t>(max_pow) + 1);
  for (const auto& [e, c] : terms_) {
    LaurentPoly term;
    term.vars_ = rest;
    ExpVec ne(e.size() - 1);
    for (size_t i = 0, j = 0; i < e.size(); ++i)
      if (i != vi) ne[j++] = e[i];
    term.terms_[std::move(ne)] = c;
    term.normalize();
    auto& slot = by_pow[static_cast<size_t>(e[vi] / kQuarter)];
    slot = slot + term;
  }
  LaurentPoly out;
  for (size_t k = by_pow.size(); k-- > 0;) out = out * image + by_pow[k];
  return out;
}

std::vector<BigRat> LaurentPoly::series_coeffs(const std::string& var, int n_max) const {
  require(vars_.empty() || vars_ == std::vector<std::string>{var}, "NotUnivariate",
          "series expansion needs a polynomial univariate in " + var);
  std::vector<BigRat> out(static_cast<size_t>(n_max) + 1, BigRat(0));
  BigInt factorial = 1;
  for (int k = 0; k <= n_max; ++k) {
    if (k > 0) factorial *= k;
    BigRat acc = 0;
    for (const auto& [e, c] : terms_) {
      BigRat expo = vars_.empty() ? BigRat(0) : BigRat(e[0], kQuarter);
      BigRat pw = 1;
      for (int t = 0; t < k; ++t) pw *= expo;
      acc += BigRat(c) * pw;
    }
    out[static_cast<size_t>(k)] = acc / BigRat(factorial);
  }
  return out;
}

std::pair<int, int> LaurentPoly::exponent_range(const std::string& var) const {
  auto vit = std::find(vars_.begin(), vars_.end(), var);
  if (vit == vars_.end() || terms_.empty()) return {0, 0};
  const size_t vi = static_cast<size_t>(vit - vars_.begin());
  int lo = terms_.begin()->first[vi], hi = lo;
  for (const auto& [e, c] : terms_) {
    lo = std::min(lo, e[vi]);
    hi = std::max(hi, e[vi]);
  }
  return {lo, hi};
}

LaurentPoly LaurentPoly::shifted(const std::string& var, int quarter_shift) const {
  return *this * monomial(var, quarter_shift);
}

std::string format_quarter_exponent(int quarter) {
  if (quarter % kQuarter == 0) return std::to_string(quarter / kQuarter);
  int num = quarter, den = kQuarter;
  if (num % 2 == 0) num /= 2, den /= 2;
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  // Descending exponent order (lexicographic on exponent vectors).
  std::vector<const std::pair<const ExpVec, BigInt>*> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(&t);
  std::reverse(ts.begin(), ts.end());

  std::ostringstream os;
  bool first = true;
  for (const auto* t : ts) {
    const auto& [e, c] = *t;
    const bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mono;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += vars_[i];
      if (e[i] != kQuarter) mono += "^" + format_quarter_exponent(e[i]);
    }
    if (mono.empty()) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << " ";
      os << mono;
    }
  }
  return os.str();
}

LaurentPoly bracket_loop_value() {
  return LaurentPoly::monomial("A", 2 * kQuarter, -1) + LaurentPoly::monomial("A", -2 * kQuarter, -1);
}

bool equal_up_to_unit_power(const LaurentPoly& p, const LaurentPoly& q, const std::string& var) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const auto [plo, phi] = p.exponent_range(var);
  const auto [qlo, qhi] = q.exponent_range(var);
  if (phi - plo != qhi - qlo) return false;
  const LaurentPoly shifted = q.shifted(var, plo - qlo);
  return p == shifted || p == -shifted;
}

}  // namespace skeinlab
