#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skeinlab/alexander.hpp"
#include "skeinlab/arrow.hpp"
#include "skeinlab/bracket.hpp"
#include "skeinlab/diagram.hpp"
#include "skeinlab/fixtures.hpp"
#include "skeinlab/khovanov.hpp"
#include "skeinlab/moves.hpp"
#include "skeinlab/parallel.hpp"
#include "skeinlab/search.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/tensor.hpp"
#include "skeinlab/tl.hpp"
#include "skeinlab/vassiliev.hpp"

namespace {

using namespace skeinlab;
using nlohmann::json;

constexpr const char* kSchema = "skeinlab/1";

json poly_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t;
    t["e"] = e;
    // exact coefficients: numbers when they fit, decimal strings otherwise
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      t["c"] = static_cast<std::int64_t>(c);
    else
      t["c"] = c.str();
    terms.push_back(t);
  }
  json out;
  out["vars"] = p.vars();
  out["edenom"] = kQuarter;
  out["terms"] = terms;
  out["text"] = p.to_text();
  return out;
}

struct InputSpec {
  std::string braid, gauss, pd, file, format = "json";
  bool braid_given = false;  // an empty braid word is the unknot

  int sources() const {
    return (braid_given ? 1 : 0) + (gauss.empty() ? 0 : 1) + (pd.empty() ? 0 : 1) +
           (file.empty() ? 0 : 1);
  }

  std::pair<std::string, std::string> describe() const {
    if (braid_given) return {"braid", braid};
    if (!gauss.empty()) return {"gauss", gauss};
    if (!pd.empty()) return {"pd", pd};
    return {"file:" + format, file};
  }

  Diagram load() const {
    require(sources() == 1, "ParseError", "exactly one input source is required");
    if (braid_given) return codec_decode(CodecFormat::braid, braid);
    if (!gauss.empty()) return codec_decode(CodecFormat::gauss, gauss);
    if (!pd.empty()) return codec_decode(CodecFormat::pd, pd);
    std::ifstream in(file);
    require(in.good(), "ParseError", "cannot read " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    if (format == "json") return codec_decode(CodecFormat::json, ss.str());
    if (format == "gauss") return codec_decode(CodecFormat::gauss, ss.str());
    if (format == "pd") return codec_decode(CodecFormat::pd, ss.str());
    if (format == "braid") return codec_decode(CodecFormat::braid, ss.str());
    fail("ParseError", "unknown format " + format);
  }

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--braid", braid, "braid word, e.g. \"1 -2 1 -2\" (empty = unknot)")
        ->each([this](const std::string&) { braid_given = true; });
    cmd->add_option("--gauss", gauss, "gauss code, e.g. O1+U2+O3+U1+O2+U3+");
    cmd->add_option("--pd", pd, "pd code, e.g. X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    cmd->add_option("--file", file, "read the diagram from a file");
    cmd->add_option("--format", format, "file format: json|gauss|pd|braid")->capture_default_str();
  }
};

int run_compute(const InputSpec& input, const std::string& invariant, const std::string& output,
                int cap, int nmax) {
  Diagram d = input.load();
  json out;
  out["schema"] = kSchema;
  out["invariant"] = invariant;
  auto [kind, text] = input.describe();
  out["input"] = {{"kind", kind}, {"text", text}};
  std::ostringstream text_out;

  if (invariant == "bracket" || invariant == "f" || invariant == "jones") {
    BracketValue v = normalized_jones(d, cap);
    out["result"] = {{"bracket", poly_json(v.bracket)}, {"f", poly_json(v.f)},
                     {"jones", poly_json(v.jones)}};
    const LaurentPoly& main = invariant == "bracket" ? v.bracket : invariant == "f" ? v.f : v.jones;
    text_out << main.to_text() << "\n";
  } else if (invariant == "arrow") {
    ArrowValue v = arrow_polynomial(d, cap);
    out["result"] = {{"raw", poly_json(v.raw)}, {"normalized", poly_json(v.normalized)}};
    text_out << v.normalized.to_text() << "\n";
  } else if (invariant == "alexander") {
    LaurentPoly p = alexander_poly(d);
    out["result"] = poly_json(p);
    text_out << p.to_text() << "\n";
  } else if (invariant == "conway") {
    LaurentPoly p = skein_eval(d, conway_rule());
    out["result"] = poly_json(p);
    text_out << p.to_text() << "\n";
  } else if (invariant == "homflypt") {
    LaurentPoly p = skein_eval(d, homflypt_rule());
    out["result"] = poly_json(p);
    text_out << p.to_text() << "\n";
  } else if (invariant == "khovanov") {
    KhovanovComplex kc = build_complex(d, cap);
    HomologyTable t = homology(kc);
    json rows = json::array();
    for (const auto& [ij, h] : t) {
      json row;
      row["i"] = ij.first;
      row["j"] = ij.second;
      row["free"] = h.free_rank;
      json tor = json::array();
      for (const BigInt& f : h.torsion) tor.push_back(f.str());
      row["torsion"] = tor;
      rows.push_back(row);
    }
    out["result"] = {{"table", rows}, {"graded_euler", poly_json(graded_euler(kc))}};
    text_out << homology_text(t);
  } else if (invariant == "vcoeffs") {
    auto coeffs = jones_vassiliev_coeffs(d, nmax);
    json cs = json::array();
    for (const auto& c : coeffs) cs.push_back(c.str());
    out["result"] = {{"coeffs", cs}};
    for (size_t k = 0; k < coeffs.size(); ++k)
      text_out << "v" << k << " = " << coeffs[k].str() << "\n";
  } else {
    fail("ParseError", "unknown invariant " + invariant);
  }

  if (output == "json")
    std::cout << out.dump() << "\n";
  else
    std::cout << text_out.str();
  return 0;
}

int run_states(const InputSpec& input, bool trails, const std::string& output, int cap) {
  Diagram d = input.load();
  json out;
  out["schema"] = kSchema;
  std::ostringstream text_out;

  auto states = enumerate_states(d, cap);
  json st = json::array();
  for (const auto& s : states) {
    std::string word;
    for (Smoothing ch : s.choice) word += ch == Smoothing::A ? 'A' : 'B';
    st.push_back({{"choice", word}, {"tier", s.tier}, {"loops", s.loop_count}});
    text_out << "tier " << s.tier << "  " << (word.empty() ? "-" : word) << "  loops "
             << s.loop_count << "\n";
  }
  out["states"] = st;

  if (trails) {
    TrailSum ts = trail_state_sum(d);
    json tr = json::array();
    text_out << "marker states (deleted regions " << ts.deleted.first << "," << ts.deleted.second
             << "):\n";
    for (const auto& m : ts.states) {
      json row;
      row["sign"] = m.sign;
      row["term"] = m.term.to_text();
      row["trail_loops"] = m.trail_loops;
      json mk = json::array();
      for (auto [c, corner] : m.markers) mk.push_back({c, corner});
      row["markers"] = mk;
      tr.push_back(row);
      text_out << "  sign " << (m.sign > 0 ? "+" : "-") << " term " << m.term.to_text()
               << " trail loops " << m.trail_loops << "\n";
    }
    out["trails"] = tr;
    out["trail_poly"] = poly_json(ts.poly);
    text_out << "state sum: " << ts.poly.to_text() << "\n";
  }

  if (output == "json")
    std::cout << out.dump() << "\n";
  else
    std::cout << text_out.str();
  return 0;
}

bool verify_tl_suite(std::ostream& os) {
  bool ok = true;
  auto line = [&](const std::string& name, bool pass) {
    os << (pass ? "pass" : "FAIL") << "  tl." << name << "\n";
    ok = ok && pass;
  };
  const LaurentPoly d = bracket_loop_value();
  const int n = 5;
  bool rel = true;
  for (int i = 1; i < n; ++i) {
    TLElement u(Matching::u_generator(n, i));
    rel = rel && tl_multiply(u, u) == u.scaled(d);
    if (i + 1 < n) {
      TLElement v(Matching::u_generator(n, i + 1));
      rel = rel && tl_multiply(tl_multiply(u, v), u) == u;
      rel = rel && tl_multiply(tl_multiply(v, u), v) == v;
    }
    for (int j = i + 2; j < n; ++j) {
      TLElement w(Matching::u_generator(n, j));
      rel = rel && tl_multiply(u, w) == tl_multiply(w, u);
    }
  }
  line("relations-tl5", rel);
  line("catalan-basis", enumerate_planar_matchings(2, 2).size() == 2 &&
                            enumerate_planar_matchings(3, 3).size() == 5 &&
                            enumerate_planar_matchings(4, 4).size() == 14);
  bool braid_ok = braid_to_tl(3, {1, 2, 1}) == braid_to_tl(3, {2, 1, 2});
  for (auto [nn, w] :
       std::vector<std::pair<int, std::vector<int>>>{{2, {1, 1, 1}}, {3, {1, -2, 1, -2}}})
    braid_ok = braid_ok && closure_trace(braid_to_tl(nn, w)) == bracket_poly(from_braid_word(nn, w));
  line("braid-representation", braid_ok);
  {
    Matching a(3, 1, {1, 0, 3, 2});
    Matching b(1, 3, {3, 2, 1, 0});
    auto [q, k] = meander_projector(a, b);
    Matching cap(2, 0, {1, 0});
    Matching cup(0, 2, {1, 0});
    auto [qu, ku] = meander_projector(cap, cup);
    line("meander-projectors", k == 0 && tl_multiply(q, q) == q && ku == 1 &&
                                   tl_multiply(qu, qu) == qu.scaled(d));
  }
  return ok;
}

bool verify_tensor_suite(std::ostream& os) {
  AxiomReport rep = verify_tensor_axioms(default_rmatrix());
  bool ok = true;
  for (const auto& c : rep.checks) {
    os << (c.pass ? "pass" : "FAIL") << "  tensor." << c.name << "  (" << c.detail << ")\n";
    ok = ok && c.pass;
  }
  const LaurentPoly d = bracket_loop_value();
  bool agree = true;
  for (auto [n, w] :
       std::vector<std::pair<int, std::vector<int>>>{{2, {1, 1, 1}}, {3, {1, -2, 1, -2}}})
    agree = agree && contract(compile_morse(n, w), default_rmatrix()) ==
                         d * bracket_poly(from_braid_word(n, w));
  os << (agree ? "pass" : "FAIL") << "  tensor.bracket-agreement\n";
  return ok && agree;
}

bool verify_frobenius_suite(std::ostream& os) {
  // V = Z[x]/(x^2) over the basis {1, x}: m(1,1)=1, m(1,x)=m(x,1)=x, m(x,x)=0,
  // Delta(1) = 1(x)x + x(x)1, Delta(x) = x(x)x
  const int m_mat[2][4] = {{1, 0, 0, 0}, {0, 1, 1, 0}};
  const int d_mat[4][2] = {{0, 0}, {1, 0}, {1, 0}, {0, 1}};
  auto mm = [&](int r, int c) { return m_mat[r][c]; };
  auto dd = [&](int r, int c) { return d_mat[r][c]; };

  bool assoc = true;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int out = 0; out < 2; ++out) {
          int lhs = 0, rhs = 0;
          for (int k = 0; k < 2; ++k) {
            lhs += mm(out, 2 * k + c) * mm(k, 2 * a + b);
            rhs += mm(out, 2 * a + k) * mm(k, 2 * b + c);
          }
          assoc = assoc && lhs == rhs;
        }

  bool coassoc = true;
  {
    int lhs[8][2] = {}, rhs[8][2] = {};
    auto delta_pairs = [&](int in) {
      std::vector<std::pair<int, int>> out;
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
          if (dd(2 * u + v, in)) out.push_back({u, v});
      return out;
    };
    for (int in = 0; in < 2; ++in)
      for (auto [u, v] : delta_pairs(in)) {
        for (auto [a, b] : delta_pairs(u)) lhs[4 * a + 2 * b + v][in] += 1;
        for (auto [b, c] : delta_pairs(v)) rhs[4 * u + 2 * b + c][in] += 1;
      }
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 2; ++c) coassoc = coassoc && lhs[r][c] == rhs[r][c];
  }

  bool frob = true;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
          int lhs = 0, mid = 0, rhs = 0;
          for (int k = 0; k < 2; ++k) {
            lhs += dd(2 * u + v, k) * mm(k, 2 * a + b);
            mid += mm(u, 2 * a + k) * dd(2 * k + v, b);
            rhs += mm(v, 2 * k + b) * dd(2 * u + k, a);
          }
          frob = frob && lhs == mid && lhs == rhs;
        }

  os << (assoc ? "pass" : "FAIL") << "  frobenius.associativity\n";
  os << (coassoc ? "pass" : "FAIL") << "  frobenius.coassociativity\n";
  os << (frob ? "pass" : "FAIL") << "  frobenius.compatibility\n";
  return assoc && coassoc && frob;
}

bool verify_dd_suite(std::ostream& os) {
  bool ok = true;
  for (const auto& f : classical_fixtures()) {
    Diagram d = fixture_diagram(f);
    if (d.classical_count() > 8) continue;
    try {
      build_complex(d);  // asserts d^2 = 0 internally
    } catch (const Error&) {
      ok = false;
    }
  }
  os << (ok ? "pass" : "FAIL") << "  khovanov.dd-zero\n";
  return ok;
}

int run_verify_axioms(bool tl_only, bool tensor_only) {
  bool ok = true;
  const bool all = !tl_only && !tensor_only;
  if (tl_only || all) ok = verify_tl_suite(std::cout) && ok;
  if (tensor_only || all) ok = verify_tensor_suite(std::cout) && ok;
  if (all) {
    ok = verify_frobenius_suite(std::cout) && ok;
    ok = verify_dd_suite(std::cout) && ok;
  }
  std::cout << (ok ? "all axiom suites passed" : "axiom suites FAILED") << "\n";
  return ok ? 0 : 1;
}

struct FuzzOutcome {
  std::string line;
  bool ok = true;
};

int run_verify_fuzz(std::uint64_t seed, int moves, int sequences, int budget) {
  std::vector<FuzzOutcome> outcomes;

  // classical fixtures: f, jones, conway, alexander; homology on small ones
  const auto& fixtures = classical_fixtures();
  std::vector<FuzzOutcome> classical(fixtures.size());
  parallel_chunks(
      static_cast<std::int64_t>(fixtures.size()), 8, [&](std::int64_t lo, std::int64_t hi, int) {
        for (std::int64_t fi = lo; fi < hi; ++fi) {
          const auto& fx = fixtures[static_cast<size_t>(fi)];
          Diagram d = fixture_diagram(fx);
          BracketValue base = normalized_jones(d);
          LaurentPoly base_conway = skein_eval(d, conway_rule());
          const bool knot = d.component_count() == 1;
          LaurentPoly base_alex = knot ? alexander_poly(d) : LaurentPoly::zero();
          const bool small = d.classical_count() <= 5;
          HomologyTable base_kh = small ? homology(build_complex(d)) : HomologyTable{};
          bool ok = true;
          int applied = 0;
          for (int s = 0; s < sequences && ok; ++s) {
            const std::uint64_t sseed = seed * 1000003 + static_cast<std::uint64_t>(fi) * 101 +
                                        static_cast<std::uint64_t>(s);
            FuzzResult r = random_moves(d, moves, sseed, classical_move_set(), budget);
            applied += static_cast<int>(r.steps.size());
            BracketValue v = normalized_jones(r.diagram);
            ok = ok && v.f == base.f && v.jones == base.jones;
            ok = ok && skein_eval(r.diagram, conway_rule()) == base_conway;
            if (knot) ok = ok && alexander_poly(r.diagram) == base_alex;
            if (small && s < 3) {
              FuzzResult rk =
                  random_moves(d, std::min(moves, 8), sseed ^ 0x9e3779b9, classical_move_set(), 7);
              ok = ok && homology(build_complex(rk.diagram, 7)) == base_kh;
            }
          }
          std::ostringstream os;
          os << (ok ? "pass" : "FAIL") << "  fuzz." << fx.name << "  (" << sequences
             << " sequences, " << applied << " moves)";
          classical[static_cast<size_t>(fi)] = {os.str(), ok};
        }
      });
  outcomes.insert(outcomes.end(), classical.begin(), classical.end());

  // virtual fixtures: normalized arrow polynomial
  const auto& vfx = virtual_fixtures();
  std::vector<FuzzOutcome> virt(vfx.size());
  parallel_chunks(
      static_cast<std::int64_t>(vfx.size()), 8, [&](std::int64_t lo, std::int64_t hi, int) {
        for (std::int64_t fi = lo; fi < hi; ++fi) {
          const auto& fx = vfx[static_cast<size_t>(fi)];
          Diagram d = decode_gauss(fx.code);
          const LaurentPoly base = arrow_polynomial(d).normalized;
          bool ok = true;
          int applied = 0;
          for (int s = 0; s < sequences && ok; ++s) {
            const std::uint64_t sseed = seed * 2000003 + static_cast<std::uint64_t>(fi) * 211 +
                                        static_cast<std::uint64_t>(s);
            FuzzResult r = random_moves(d, moves, sseed, virtual_move_set(), budget);
            applied += static_cast<int>(r.steps.size());
            ok = ok && arrow_polynomial(r.diagram).normalized == base;
          }
          std::ostringstream os;
          os << (ok ? "pass" : "FAIL") << "  fuzz.virtual." << fx.name << "  (" << sequences
             << " sequences, " << applied << " moves)";
          virt[static_cast<size_t>(fi)] = {os.str(), ok};
        }
      });
  outcomes.insert(outcomes.end(), virt.begin(), virt.end());

  bool ok = true;
  for (const auto& o : outcomes) {
    std::cout << o.line << "\n";
    ok = ok && o.ok;
  }
  std::cout << (ok ? "fuzz verification passed" : "fuzz verification FAILED") << "\n";
  return ok ? 0 : 1;
}

int run_verify_fourterm(int degree) {
  WeightSystem ws = WeightSystem::so3();
  const auto rels = four_term_relations(degree);
  long long nonzero = 0;
  for (const auto& rel : rels) {
    BigInt acc = 0;
    for (int k = 0; k < 4; ++k)
      acc += rel.signs[static_cast<size_t>(k)] * lie_weight(rel.diagrams[static_cast<size_t>(k)], ws);
    if (acc != 0) ++nonzero;
  }
  const bool ok = nonzero == 0;
  std::cout << (ok ? "pass" : "FAIL") << "  fourterm.degree-" << degree << "  (" << rels.size()
            << " relations, " << nonzero << " nonzero under so(3))\n";
  return ok ? 0 : 1;
}

int run_search(int max_classical, const std::string& output) {
  UnitJonesReport rep = search_unit_jones(max_classical);
  if (output == "json") {
    json out;
    out["schema"] = kSchema;
    out["max_classical"] = rep.max_classical;
    out["searched"] = rep.searched;
    out["unit_bracket"] = rep.unit_f;
    json hits = json::array();
    for (const auto& h : rep.hits)
      hits.push_back({{"gauss", h.gauss},
                      {"classical", h.classical},
                      {"virtual", h.virtual_crossings},
                      {"arrow", poly_json(h.arrow_normalized)}});
    out["hits"] = hits;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "searched " << rep.searched << " gauss codes with <= " << rep.max_classical
              << " classical crossings (exhaustive up to rotation and relabeling)\n";
    std::cout << rep.unit_f << " diagrams have normalized bracket 1\n";
    if (rep.hits.empty()) {
      std::cout << "no diagram with unit bracket and nontrivial arrow polynomial in this range\n";
    } else {
      std::cout << rep.hits.size() << " diagrams have unit bracket but arrow != 1; first:\n";
      const auto& h = rep.hits.front();
      std::cout << "  " << h.gauss << "  (" << h.classical << " classical, " << h.virtual_crossings
                << " virtual)\n  arrow = " << h.arrow_normalized.to_text() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact knot and virtual-knot invariants"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute an invariant of one diagram");
  InputSpec compute_input;
  compute_input.add_flags(compute);
  std::string invariant = "jones";
  std::string output = "text";
  int cap = kDefaultCrossingCap;
  int nmax = 3;
  compute->add_option("--invariant", invariant,
                      "bracket|f|jones|arrow|alexander|conway|homflypt|khovanov|vcoeffs");
  compute->add_option("--output", output, "text|json")->capture_default_str();
  compute->add_option("--max-crossings", cap, "state enumeration cap")->capture_default_str();
  compute->add_option("--nmax", nmax, "highest series coefficient for vcoeffs")
      ->capture_default_str();

  auto* states = app.add_subcommand("states", "dump the smoothing cube (and marker trails)");
  InputSpec states_input;
  states_input.add_flags(states);
  bool trails = false;
  std::string states_what;
  states->add_option("what", states_what, "optional: 'trails' to dump marker states too");
  states->add_flag("--trails", trails, "also dump marker states and their trails");
  std::string states_output = "text";
  states->add_option("--output", states_output, "text|json")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->require_subcommand(1);
  auto* axioms = verify->add_subcommand("axioms", "algebraic axiom suites");
  bool tl_only = false, tensor_only = false;
  axioms->add_flag("--tl", tl_only, "only the Temperley-Lieb relation suite");
  axioms->add_flag("--tensor", tensor_only, "only the tensor axiom suite");
  auto* fourterm = verify->add_subcommand("fourterm", "four-term relations vanish under so(3)");
  int ft_degree = 3;
  fourterm->add_option("--degree", ft_degree, "chord diagram degree")->capture_default_str();
  auto* fuzz = verify->add_subcommand("fuzz", "seeded move sequences preserve the invariants");
  std::uint64_t seed = 1;
  int moves = 50, sequences = 20, budget = 14;
  fuzz->add_option("--seed", seed, "base seed")->capture_default_str();
  fuzz->add_option("--moves", moves, "moves per sequence")->capture_default_str();
  fuzz->add_option("--sequences", sequences, "sequences per fixture")->capture_default_str();
  fuzz->add_option("--budget", budget, "crossing growth budget")->capture_default_str();

  auto* search = app.add_subcommand("search", "experiments");
  search->require_subcommand(1);
  auto* unit = search->add_subcommand("unit-jones",
                                      "virtual diagrams with unit bracket but nontrivial arrow");
  int max_classical = 4;
  unit->add_option("--max-classical", max_classical, "classical crossing bound")
      ->capture_default_str();
  std::string search_output = "text";
  unit->add_option("--output", search_output, "text|json")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (*compute) return run_compute(compute_input, invariant, output, cap, nmax);
    if (*states) {
      if (states_what == "trails") trails = true;
      else require(states_what.empty(), "ParseError", "unknown states mode " + states_what);
      return run_states(states_input, trails, states_output, cap);
    }
    if (*verify) {
      if (*axioms) return run_verify_axioms(tl_only, tensor_only);
      if (*fourterm) return run_verify_fourterm(ft_degree);
      if (*fuzz) return run_verify_fuzz(seed, moves, sequences, budget);
    }
    if (*search && *unit) return run_search(max_classical, search_output);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
