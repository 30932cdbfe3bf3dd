// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--only N]... [--expect-fail N]...
//
// Exit status is 0 exactly when the set of failing criteria equals the
// --expect-fail set, so an unexpected pass is reported as loudly as a failure.

#include "oracles/oracle.hpp"
#include "qvt/bilform.hpp"
#include "qvt/canbasis.hpp"
#include "qvt/deform.hpp"
#include "qvt/hwmod.hpp"
#include "qvt/linalg.hpp"
#include "qvt/parse.hpp"
#include "qvt/qint.hpp"
#include "qvt/serre.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace qvt;

namespace {

constexpr double kSerreSeconds = 60.0;
constexpr double kModuleSeconds = 30.0;
constexpr int kSeriesOrder = 20;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> notes;

  // Records the first few failures; keeps going so the summary counts stay honest.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass || notes.size() < 5) notes.push_back("failed: " + what);
    pass = false;
  }
};

Cartan a2() { return make_cartan({{1, -1}, {0, 1}}); }
Cartan a2_opposite() { return make_cartan({{1, 0}, {-1, 1}}); }
Cartan b2() { return make_cartan({{2, -1}, {-1, 1}}); }

std::string deg_str(const Degree& d) {
  std::string s = "(";
  for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return s + ")";
}

std::vector<Word> words_up_to(int rank, int n) {
  std::vector<Word> out;
  for (const auto& nu : degrees_up_to_trace(rank, n))
    for (const auto& w : words_of_degree(nu)) out.push_back(w);
  return out;
}

// All rank-2 matrices with d_i = 1 and a', a'' in {0,1,2}.
std::vector<Cartan> rank2_scan() {
  std::vector<Cartan> out;
  for (int x = 0; x >= -2; --x)
    for (int y = 0; y >= -2; --y) out.push_back(make_cartan({{1, x}, {y, 1}}));
  return out;
}

std::vector<Cartan> serre_scan() {
  auto out = rank2_scan();
  out.push_back(make_cartan({{1, -1, 0}, {-1, 1, -1}, {0, -1, 1}}));
  out.push_back(make_cartan({{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}));
  return out;
}

void serre_vanishing(Verdict& v) {
  std::size_t matrices = 0, checks = 0;
  for (const auto& c : serre_scan()) {
    ++matrices;
    for (int i = 0; i < c->rank(); ++i)
      for (int j = 0; j < c->rank(); ++j) {
        if (i == j) continue;
        const FreeElem s = serre_elem(c, i, j).element;
        for (int k = 0; k < c->rank(); ++k) {
          v.require(deriv_r(k, s).is_zero(), "r_k S_ij, k=" + std::to_string(k));
          v.require(deriv_l(k, s).is_zero(), "_kr S_ij, k=" + std::to_string(k));
          checks += 2;
        }
      }
  }
  v.detail << matrices << " matrices, " << checks << " derivations";
}

void radical_is_serre_ideal(Verdict& v) {
  std::size_t degrees = 0;
  auto scan = [&](const Cartan& c, int tr, const char* name) {
    for (const auto& nu : degrees_up_to_trace(c->rank(), tr)) {
      const IdealComparison r = compare_serre_ideal(c, nu, tr);
      v.require(r.equal(), std::string(name) + " at " + deg_str(nu));
      ++degrees;
    }
  };
  scan(a2(), 6, "A2");
  scan(a2_opposite(), 6, "A2 opposite");
  scan(b2(), 5, "B2");
  v.detail << degrees << " degrees";
}

void dimension_oracle(Verdict& v) {
  const Cartan c = a2();
  std::size_t degrees = 0;
  for (const auto& nu : degrees_up_to_trace(2, 8)) {
    const std::size_t r = rank(gram(c, nu).poly);
    v.require(r == static_cast<std::size_t>(oracle::kostant_a2(nu[0], nu[1])), "rank at " + deg_str(nu));
    ++degrees;
  }
  v.detail << degrees << " degrees up to tr 8";
}

void form_axioms(Verdict& v) {
  const Cartan c = a2();
  const auto ws = words_up_to(2, 6);
  std::size_t pairs = 0;
  for (const auto& x : ws)
    for (const auto& y : ws) {
      if (x.size() + y.size() > 6) continue;
      ++pairs;
      const FreeElem fx = FreeElem::word(c, x), fy = FreeElem::word(c, y);
      const RatFunc p = pair(fx, fy);
      v.require(p == pair(fy, fx), "symmetry");
      // (x, y'y'') = (r(x), y' (x) y'') and (x'x'', y) = (x' (x) x'', r(y)).
      const TensorElem rx = coproduct(fx), ry = coproduct(fy);
      for (std::size_t s = 0; s <= y.size(); ++s) {
        TensorElem split(c);
        split.add(y.substr(0, s), y.substr(s), 1);
        v.require(p == pair_tensor(rx, split), "adjunction (x, y'y'')");
      }
      for (std::size_t s = 0; s <= x.size(); ++s) {
        TensorElem split(c);
        split.add(x.substr(0, s), x.substr(s), 1);
        v.require(p == pair_tensor(split, ry), "adjunction (x'x'', y)");
      }
      // (y theta_i, x) and (theta_i y, x) through the derivations.
      if (y.size() + 1 + x.size() > 6) continue;
      const Degree dy = word_degree(y, 2);
      for (int i = 0; i < 2; ++i) {
        const FreeElem ti = FreeElem::gen(c, i);
        const RatFunc tt = pair(ti, ti);
        v.require(pair(fy * ti, fx) == monomial(0, 2 * c->bracket(dy, c->unit(i))) * pair(fy, deriv_r(i, fx)) * tt,
                  "(y theta_i, x)");
        v.require(pair(ti * fy, fx) == monomial(0, 2 * c->bracket(c->unit(i), dy)) * tt * pair(fy, deriv_l(i, fx)),
                  "(theta_i y, x)");
      }
    }
  v.detail << pairs << " word pairs";
}

void coproduct_laws(Verdict& v) {
  const Cartan c = a2();
  std::size_t n = 0;
  for (const auto& w : words_up_to(2, 4)) {
    const FreeElem x = FreeElem::word(c, w);
    v.require(coassoc_check(x), "coassociativity on " + word_str(w));
    v.require(bar_coproduct_check(x), "bar-coproduct on " + word_str(w));
    ++n;
  }
  v.detail << n << " words";
}

void divided_power_coproduct(Verdict& v) {
  // Vertex 0 of A2 (d = 1) and vertex 0 of [[2,-1],[-1,1]] (d = 2).
  for (const auto& c : {a2(), b2()}) {
    const int d = c->scale(0);
    for (int n = 0; n <= 6; ++n) {
      TensorElem expect(c);
      for (int p = 0; p <= n; ++p)
        expect += TensorElem::pure(divided_power(c, 0, p) * monomial(-d * p * (n - p), -d * p * (n - p)),
                                   divided_power(c, 0, n - p));
      v.require(coproduct(divided_power(c, 0, n)) == expect, "d=" + std::to_string(d) + " n=" + std::to_string(n));
    }
  }
  v.detail << "n <= 6 at d = 1 and d = 2";
}

void canonical_basis(Verdict& v) {
  const Cartan c = a2();
  std::size_t elements = 0, verified = 0, norm_fail = 0, other_fail = 0, mirror_fail = 0, near_fail = 0,
              near_mirror_fail = 0;
  const auto degrees = degrees_up_to_trace(2, 8);
  for (const auto& nu : degrees) {
    const auto fam = a2_basis(c, nu);
    v.require(fam.size() == rank(gram(c, nu).poly), "cardinality at " + deg_str(nu));
    for (const auto& b : fam) {
      ++elements;
      const CBReport r = cb_verify(b.element, kSeriesOrder);
      if (r.all()) ++verified;
      if (!r.norm_ok) ++norm_fail;
      if (!(r.integral && r.bar_invariant && r.t_free_norm)) ++other_fail;
      if (!r.mirror_norm_ok) ++mirror_fail;
      v.require(r.all(), "cb_verify " + b.label.str());
    }
    const bool near = near_orthonormality(fam, kSeriesOrder);
    if (!near) ++near_fail;
    if (!near_orthonormality_mirror(fam, kSeriesOrder)) ++near_mirror_fail;
    v.require(near, "pairings at " + deg_str(nu));
  }
  v.detail << elements << " elements, " << verified << " pass cb_verify; " << norm_fail
           << " fail the norm test, " << other_fail << " fail integrality/bar/t-freeness; " << near_fail
           << " degrees not almost orthonormal";
  v.notes.push_back("diagnostic: under the opposite coproduct v-sign " + std::to_string(elements - mirror_fail) + "/" +
                    std::to_string(elements) + " norms and " + std::to_string(degrees.size() - near_mirror_fail) +
                    "/" + std::to_string(degrees.size()) + " degrees are almost orthonormal");
}

void pi_leading_terms(Verdict& v) {
  const Cartan c = a2();
  std::size_t triples = 0;
  for (const auto& nu : degrees_up_to_trace(2, 5))
    for (const auto& b : a2_basis(c, nu))
      for (int i = 0; i < 2; ++i) {
        if (membership_filtration(b.element, i) != 0) continue;
        for (int n = 1; trace(nu) + n <= 6; ++n) {
          ++triples;
          v.require(pi_image(b, i, n).has_value(), b.label.str() + " i=" + std::to_string(i) + " n=" + std::to_string(n));
        }
      }
  v.detail << triples << " triples (b, i, n)";
}

void positivity(Verdict& v) {
  const Cartan c = a2();
  std::vector<CBCandidate> all;
  for (const auto& nu : degrees_up_to_trace(2, 6))
    for (auto& b : a2_basis(c, nu)) all.push_back(b);
  std::size_t products = 0, coproducts = 0;
  for (const auto& b : all)
    for (const auto& bp : all) {
      const Degree d = b.element.degree(), dp = bp.element.degree();
      if (trace(d) + trace(dp) > 6) continue;
      for (const auto& t : structure_constants(b, bp)) {
        ++products;
        v.require(positive_in_v(t.coeff, c->bracket(d, dp)), b.label.str() + " * " + bp.label.str());
      }
    }
  for (const auto& b : all)
    for (const auto& t : coproduct_constants(b)) {
      ++coproducts;
      v.require(positive_in_v(t.coeff, -c->bracket(t.left.element.degree(), t.right.element.degree())),
                "r(" + b.label.str() + ")");
    }
  v.detail << products << " structure constants, " << coproducts << " coproduct constants";
}

FreeElem lusztig_divided(const Cartan& c, int i, int n) {
  RatFunc f = 1;
  for (int k = 1; k <= n; ++k)
    f *= RatFunc::normalize(LPoly::monomial(1, k, 0) - LPoly::monomial(1, -k, 0),
                            LPoly::monomial(1, 1, 0) - LPoly::monomial(1, -1, 0));
  return FreeElem::word(c, Word(static_cast<std::size_t>(n), static_cast<char>(i)), f.inverse());
}

void deformation_bridge(Verdict& v) {
  const Cartan c = a2();
  auto sigma = [&](const Word& w) {
    int s = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t b = a + 1; b < w.size(); ++b) s += c->bracket(w[a], w[b]);
    return s;
  };
  std::size_t entries = 0, agree = 0, specialised = 0;
  for (const auto& nu : degrees_up_to_trace(2, 6)) {
    const GramBlock g = gram(c, nu);
    for (std::size_t a = 0; a < g.words.size(); ++a)
      for (std::size_t b = 0; b < g.words.size(); ++b) {
        ++entries;
        v.require(g.entry(a, b).shifted(0, -sigma(g.words[a]) - sigma(g.words[b])).is_t_free(),
                  "Gram twist at " + deg_str(nu));
      }
  }
  for (const auto& u : words_up_to(2, 4))
    for (const auto& w : words_of_degree(word_degree(u, 2))) {
      const FreeElem x = cocycle_twist(FreeElem::word(c, u, parse_coeff("v^2+1")), TwistDirection::FromF);
      const FreeElem y = cocycle_twist(FreeElem::word(c, w, parse_coeff("v^-1")), TwistDirection::FromF);
      v.require(forms_agree_check(x, y), "forms agree " + word_str(u) + "," + word_str(w));
      ++agree;
    }
  for (const auto& nu : degrees_up_to_trace(2, 6)) {
    const auto fam = a2_basis(c, nu);
    for (const auto& b : fam) {
      for (const auto& b2 : fam) {
        v.require(forms_agree_check(b.element, b2.element), "forms agree on " + b.label.str());
        ++agree;
      }
      const int outer = b.label.side == 1 ? 0 : 1;
      const int first = b.label.side == 1 ? b.label.a : b.label.c;
      const int last = b.label.side == 1 ? b.label.c : b.label.a;
      const FreeElem lus = lusztig_divided(c, outer, first) * lusztig_divided(c, 1 - outer, b.label.b) *
                           lusztig_divided(c, outer, last);
      v.require(specialize_t1(cocycle_twist(b.element, TwistDirection::ToF)) == lus, "t = 1 of " + b.label.str());
      ++specialised;
    }
  }
  v.detail << entries << " Gram entries, " << agree << " form comparisons, " << specialised << " specialisations";
}

void serre_forms(Verdict& v) {
  std::size_t n = 0;
  for (const auto& c : rank2_scan())
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
      v.require(serre_form_equivalence(c, i, j), "Omega " + std::to_string(c->angle(0, 1)) + "," +
                                                   std::to_string(c->angle(1, 0)));
      ++n;
    }
  v.detail << n << " (Omega, i, j)";
}

void modules(Verdict& v) {
  std::size_t vectors = 0;
  auto r3 = [&](const HWData& h) {
    Module m(h);
    const int n = h.cartan->rank();
    for (const auto& [mu, d] : m.dimensions())
      for (const auto& x : m.weight_space(mu).basis())
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            ++vectors;
            ModuleVector lhs = act_E(h, i, act_F(h, j, x));
            const ModuleVector fe = act_E(h, i, x);
            if (!fe.rep.is_zero()) lhs.rep -= act_F(h, j, fe).rep;
            ModuleVector rhs{FreeElem(h.cartan), x.depth};
            if (i == j) {
              const int s = h.cartan->scale(i);
              rhs.rep = x.rep * ((act_K(h, i, x, false) - act_K(h, i, x, true)) /
                                 RatFunc(LPoly::monomial(1, s, 0) - LPoly::monomial(1, -s, 0)));
            }
            v.require(m.equal(lhs, rhs), "EF - FE commutator");
          }
  };
  const Cartan a1 = make_cartan({{1}});
  for (int lam = 0; lam <= 4; ++lam) {
    const HWData h = HWData::make(a1, {lam});
    Module m(h);
    for (int n = 0; n <= lam + 2; ++n)
      v.require(m.weight_space({n}).dim() == (n <= lam ? 1u : 0u), "A1 dim at lambda=" + std::to_string(lam));
    r3(h);
    for (int n = 1; n <= lam + 1; ++n) {
      const ModuleVector e = act_E(h, 0, {divided_power(a1, 0, n), {n}});
      const FreeElem brute =
          oracle::rewrite_on_highest(a1, h.lambda, h.eps,
                                     [&] {
                                       std::vector<oracle::Op> ops{{'E', 0}};
                                       for (int k = 0; k < n; ++k) ops.emplace_back('F', 0);
                                       return ops;
                                     }()) *
          RatFunc(qfactorial(n, QFlavor::VT)).inverse();
      v.require(e.rep == brute, "E F^(n) oracle");
    }
  }
  Module m(HWData::make(a2(), {1, 1}));
  const std::size_t total = m.total_dimension();
  v.require(total == 8, "A2 (1,1) total dimension");
  r3(HWData::make(a2(), {1, 1}));
  v.detail << "A2 (1,1) dimension " << total << ", " << vectors << " commutator checks";
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Verdict&)> run;
  double seconds_limit = 0;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only, expect_fail;
  CLI::App app{"acceptance criteria"};
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--expect-fail", expect_fail, "criteria known to fail");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "Serre vanishing", serre_vanishing, kSerreSeconds},
      {2, "radical equals Serre ideal", radical_is_serre_ideal},
      {3, "Gram rank equals Kostant count", dimension_oracle},
      {4, "bilinear form axioms", form_axioms},
      {5, "coproduct laws", coproduct_laws},
      {6, "divided-power coproduct", divided_power_coproduct},
      {7, "A2 canonical basis", canonical_basis},
      {8, "pi_{i,n} leading terms", pi_leading_terms},
      {9, "positivity", positivity},
      {10, "deformation bridge", deformation_bridge},
      {11, "Serre-form equivalence", serre_forms},
      {12, "highest-weight modules", modules, kModuleSeconds},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds_limit > 0) {
      std::ostringstream lim;
      lim << "runtime " << secs << " s over " << c.seconds_limit << " s";
      v.require(secs < c.seconds_limit, lim.str());
    }
    if (!v.pass) failed.insert(c.id);
    std::printf("%s %2d %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.str().c_str(), secs);
    for (const auto& n : v.notes) std::printf("        %s\n", n.c_str());
    std::fflush(stdout);
  }
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::set<int> relevant;
  for (int id : expected)
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) relevant.insert(id);
  std::printf("%zu failing; %s\n", failed.size(),
              failed == relevant ? "matches the expected failures" : "DIFFERS from the expected failures");
  return failed == relevant ? 0 : 1;
}
