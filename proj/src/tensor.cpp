#include "skeinlab/tensor.hpp"

#include <algorithm>

namespace skeinlab {

LaurentPoly reduce_imaginary(const LaurentPoly& p) {
  auto vit = std::find(p.vars().begin(), p.vars().end(), "i");
  if (vit == p.vars().end()) return p;
  const size_t vi = static_cast<size_t>(vit - p.vars().begin());
  std::map<ExpVec, BigInt> terms;
  for (const auto& [e, c] : p.terms()) {
    require(e[vi] % kQuarter == 0, "BadPolynomial", "fractional power of i");
    const long long k = e[vi] / kQuarter;
    const long long half = k >= 0 ? k / 2 : (k - 1) / 2;  // floor
    const int rem = static_cast<int>(k - 2 * half);       // 0 or 1
    ExpVec ne = e;
    ne[vi] = rem * kQuarter;
    BigInt coeff = (half % 2 == 0) ? c : -c;
    auto it = terms.find(ne);
    if (it == terms.end())
      terms[ne] = coeff;
    else
      it->second += coeff;
  }
  return LaurentPoly::from_terms(p.vars(), std::move(terms));
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix out(n, n);
  for (int k = 0; k < n; ++k) out.at(k, k) = LaurentPoly::constant(1);
  return out;
}

PolyMatrix PolyMatrix::multiplied(const PolyMatrix& o) const {
  require(cols == o.rows, "BadIndex", "matrix product shape mismatch");
  PolyMatrix out(rows, o.cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < o.cols; ++c) {
      LaurentPoly acc;
      for (int k = 0; k < cols; ++k) acc = acc + at(r, k) * o.at(k, c);
      out.at(r, c) = reduce_imaginary(acc);
    }
  return out;
}

PolyMatrix PolyMatrix::tensored(const PolyMatrix& o) const {
  PolyMatrix out(rows * o.rows, cols * o.cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      for (int r2 = 0; r2 < o.rows; ++r2)
        for (int c2 = 0; c2 < o.cols; ++c2)
          out.at(r * o.rows + r2, c * o.cols + c2) = reduce_imaginary(at(r, c) * o.at(r2, c2));
  return out;
}

RMatrixSet default_rmatrix() {
  RMatrixSet rm;
  rm.M = PolyMatrix(2, 2);
  const LaurentPoly iA = LaurentPoly::variable("i") * LaurentPoly::variable("A");
  const LaurentPoly neg_iA_inv =
      LaurentPoly::variable("i").scaled(-1) * LaurentPoly::monomial("A", -kQuarter);
  rm.M.at(0, 1) = iA;
  rm.M.at(1, 0) = neg_iA_inv;

  const LaurentPoly a = LaurentPoly::variable("A");
  const LaurentPoly a_inv = LaurentPoly::monomial("A", -kQuarter);
  rm.R_plus = PolyMatrix(4, 4);
  rm.R_minus = PolyMatrix(4, 4);
  for (int out = 0; out < 4; ++out)
    for (int in = 0; in < 4; ++in) {
      const LaurentPoly id = out == in ? LaurentPoly::constant(1) : LaurentPoly::zero();
      const LaurentPoly cupcap =
          reduce_imaginary(rm.M.at(out >> 1, out & 1) * rm.M.at(in >> 1, in & 1));
      rm.R_plus.at(out, in) = reduce_imaginary(a * id + a_inv * cupcap);
      rm.R_minus.at(out, in) = reduce_imaginary(a_inv * id + a * cupcap);
    }
  return rm;
}

MorseWord compile_morse(int n_strands, const std::vector<int>& word) {
  require(n_strands >= 1, "BadIndex", "need at least one strand");
  MorseWord mw;
  for (int k = 0; k < n_strands; ++k) mw.events.push_back({MorseEvent::Kind::cup, k});
  for (int letter : word) {
    require(letter != 0 && std::abs(letter) < n_strands, "BadIndex", "braid letter out of range");
    const int pos = 2 * n_strands - std::abs(letter) - 1;
    mw.events.push_back(
        {letter > 0 ? MorseEvent::Kind::cross_pos : MorseEvent::Kind::cross_neg, pos});
  }
  for (int k = n_strands - 1; k >= 0; --k) mw.events.push_back({MorseEvent::Kind::cap, k});
  return mw;
}

LaurentPoly contract(const MorseWord& mw, const RMatrixSet& rm) {
  int width = 0;
  std::vector<LaurentPoly> state = {LaurentPoly::constant(1)};
  auto index_bits = [](size_t idx, int w, int pos) {
    // bit of strand `pos` counting from the left
    return static_cast<int>(idx >> (w - 1 - pos)) & 1;
  };
  (void)index_bits;

  for (const MorseEvent& ev : mw.events) {
    if (ev.kind == MorseEvent::Kind::cup) {
      require(ev.pos >= 0 && ev.pos <= width, "BadIndex", "cup position out of range");
      const int w2 = width + 2;
      std::vector<LaurentPoly> next(static_cast<size_t>(1) << w2);
      const size_t total = static_cast<size_t>(1) << w2;
      for (size_t idx = 0; idx < total; ++idx) {
        const int a = static_cast<int>(idx >> (w2 - 1 - ev.pos)) & 1;
        const int b = static_cast<int>(idx >> (w2 - 2 - ev.pos)) & 1;
        if (rm.M.at(a, b).is_zero()) continue;
        // remove the two inserted bits to address the old state
        const size_t high = idx >> (w2 - ev.pos) << (w2 - ev.pos);
        const size_t low = idx & ((static_cast<size_t>(1) << (w2 - 2 - ev.pos)) - 1);
        const size_t old_idx = (high >> 2) | low;
        next[idx] = reduce_imaginary(state[old_idx] * rm.M.at(a, b));
      }
      state = std::move(next);
      width = w2;
    } else if (ev.kind == MorseEvent::Kind::cap) {
      require(width >= 2 && ev.pos >= 0 && ev.pos + 1 < width, "BadIndex", "cap position out of range");
      const int w2 = width - 2;
      std::vector<LaurentPoly> next(static_cast<size_t>(1) << w2);
      const size_t total = static_cast<size_t>(1) << width;
      for (size_t idx = 0; idx < total; ++idx) {
        if (state[idx].is_zero()) continue;
        const int a = static_cast<int>(idx >> (width - 1 - ev.pos)) & 1;
        const int b = static_cast<int>(idx >> (width - 2 - ev.pos)) & 1;
        if (rm.M.at(a, b).is_zero()) continue;
        const size_t high = idx >> (width - ev.pos) << (width - ev.pos);
        const size_t low = idx & ((static_cast<size_t>(1) << (width - 2 - ev.pos)) - 1);
        const size_t new_idx = (high >> 2) | low;
        next[new_idx] = reduce_imaginary(next[new_idx] + state[idx] * rm.M.at(a, b));
      }
      state = std::move(next);
      width = w2;
    } else {
      require(ev.pos >= 0 && ev.pos + 1 < width, "BadIndex", "crossing position out of range");
      const PolyMatrix& R = ev.kind == MorseEvent::Kind::cross_pos ? rm.R_plus : rm.R_minus;
      std::vector<LaurentPoly> next(state.size());
      const size_t total = state.size();
      for (size_t idx = 0; idx < total; ++idx) {
        const int cbit = static_cast<int>(idx >> (width - 1 - ev.pos)) & 1;
        const int dbit = static_cast<int>(idx >> (width - 2 - ev.pos)) & 1;
        const int outp = 2 * cbit + dbit;
        LaurentPoly acc;
        for (int inp = 0; inp < 4; ++inp) {
          if (R.at(outp, inp).is_zero()) continue;
          size_t src = idx;
          const size_t mask_c = static_cast<size_t>(1) << (width - 1 - ev.pos);
          const size_t mask_d = static_cast<size_t>(1) << (width - 2 - ev.pos);
          src = (src & ~mask_c & ~mask_d) | ((inp >> 1) ? mask_c : 0) | ((inp & 1) ? mask_d : 0);
          acc = acc + R.at(outp, inp) * state[src];
        }
        next[idx] = reduce_imaginary(acc);
      }
      state = std::move(next);
    }
  }
  require(width == 0, "BadIndex", "morse word does not close every strand");
  LaurentPoly out = state[0];
  // the formal unit always cancels in a closed contraction
  require(std::find(out.vars().begin(), out.vars().end(), "i") == out.vars().end(), "BadPolynomial",
          "contraction left a stray imaginary unit");
  return out;
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

AxiomReport verify_tensor_axioms(const RMatrixSet& rm) {
  AxiomReport rep;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    rep.checks.push_back({name, pass, detail});
  };

  // (1) cancellation of minima and maxima: M M = I
  add("minmax", rm.M.multiplied(rm.M) == PolyMatrix::identity(2), "M^2 = I");

  // loop value tr(M M^T) = d
  LaurentPoly loop;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) loop = loop + rm.M.at(a, b) * rm.M.at(a, b);
  add("loop", reduce_imaginary(loop) == bracket_loop_value(), "tr(M M^T) = d");

  // (2) vertical second move: R+ R- = R- R+ = I
  const PolyMatrix id4 = PolyMatrix::identity(4);
  add("vertical-r2",
      rm.R_plus.multiplied(rm.R_minus) == id4 && rm.R_minus.multiplied(rm.R_plus) == id4,
      "R+ R- = I");

  // (3) slide an arc across a maximum: for both crossing types,
  //     sum_{ijk} R[(i,j),(x,l)] R[(k,m),(j,r)] M[i,k] = delta(x,m) M[l,r]
  auto slide_ok = [&](const PolyMatrix& R) {
    for (int x = 0; x < 2; ++x)
      for (int l = 0; l < 2; ++l)
        for (int r = 0; r < 2; ++r)
          for (int mm = 0; mm < 2; ++mm) {
            LaurentPoly acc;
            for (int i = 0; i < 2; ++i)
              for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                  acc = acc + R.at(2 * i + j, 2 * x + l) * R.at(2 * k + mm, 2 * j + r) * rm.M.at(i, k);
            LaurentPoly want = x == mm ? rm.M.at(l, r) : LaurentPoly::zero();
            if (reduce_imaginary(acc) != reduce_imaginary(want)) return false;
          }
    return true;
  };
  // twist compatibility: (M (x) M) R (M (x) M) equals R rotated by a half turn
  auto flip_ok = [&](const PolyMatrix& R) {
    const PolyMatrix mm = rm.M.tensored(rm.M);
    const PolyMatrix lhs = mm.multiplied(R).multiplied(mm);
    PolyMatrix flip(4, 4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) flip.at(2 * a + b, 2 * c + d) = R.at(2 * d + c, 2 * b + a);
    return lhs == flip;
  };
  add("slide", slide_ok(rm.R_plus) && slide_ok(rm.R_minus) && flip_ok(rm.R_plus) && flip_ok(rm.R_minus),
      "arc slides across max/min; M twist-compatible with R");

  // (4) Yang-Baxter
  const PolyMatrix id2 = PolyMatrix::identity(2);
  auto ybe_ok = [&](const PolyMatrix& R) {
    const PolyMatrix r12 = R.tensored(id2);
    const PolyMatrix r23 = id2.tensored(R);
    return r12.multiplied(r23).multiplied(r12) == r23.multiplied(r12).multiplied(r23);
  };
  add("ybe", ybe_ok(rm.R_plus) && ybe_ok(rm.R_minus), "(R(x)I)(I(x)R)(R(x)I) = (I(x)R)(R(x)I)(I(x)R)");
  return rep;
}

}  // namespace skeinlab
