#include "lieqr/fidelity.hpp"

#include <sstream>

namespace lieqr {

namespace {

std::string mismatch_detail(const LieAlgebra& L, const Elem<MultiPoly>& got,
                            const Elem<MultiPoly>& want) {
  for (int b = 0; b < L.dim(); ++b) {
    if (got[b] == want[b]) continue;
    return "component " + L.label(b) + ": engine " + got[b].str() + ", formula " + want[b].str();
  }
  return "";
}

FormulaCheck compare(const LieAlgebra& L, std::string name, const Elem<MultiPoly>& got,
                     const Elem<MultiPoly>& want) {
  FormulaCheck c{std::move(name), true, ""};
  std::string d = mismatch_detail(L, got, want);
  if (!d.empty()) {
    c.pass = false;
    c.detail = std::move(d);
  }
  return c;
}

// Nested bracket [E_{c0}, [E_{c1}, ... E_{ck}]] (or the F version) as an
// exact element; zero when the chain dies.
Elem<Rat> nested_bracket(const LieAlgebra& L, const std::vector<int>& chain, bool use_f) {
  auto gen = [&](int vertex) {
    int r = L.roots().simple_index(vertex);
    return rat_basis(L, use_f ? L.f_index(r) : L.e_index(r));
  };
  auto acc = gen(chain.back());
  for (int i = static_cast<int>(chain.size()) - 2; i >= 0; --i) {
    acc = bracket(L, gen(chain[i]), acc);
  }
  return acc;
}

void increasing_chains(int n, int min_len, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out, int next) {
  if (static_cast<int>(cur.size()) >= min_len) out.push_back(cur);
  for (int v = next; v <= n; ++v) {
    cur.push_back(v);
    increasing_chains(n, min_len, cur, out, v + 1);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FormulaCheck> check_flow_formulas(const LieAlgebra& L) {
  std::vector<FormulaCheck> out;
  const int n = L.rank();
  const int h1 = L.h_index(1);
  auto a1 = [&](int i) { return L.datum().entry(1, i); };

  // beta_t(E_i)(H_1) = H_1 - t a_{1i} E_i  and the F mirror
  for (int i = 1; i <= n; ++i) {
    int er = L.roots().simple_index(i);
    for (bool use_f : {false, true}) {
      FlowWord w;
      w.steps = {nil_step(use_f ? L.f_index(er) : L.e_index(er), std::string("t"))};
      auto ring = word_ring(w);
      auto got = expand_word(L, w, ring, h1);
      auto want = poly_zero(L, ring);
      want[h1] = MultiPoly::constant(ring, 1);
      auto t = MultiPoly::variable(ring, 0);
      if (use_f) {
        want[L.f_index(er)] += t * Rat(a1(i));
      } else {
        want[L.e_index(er)] += t * Rat(-a1(i));
      }
      out.push_back(compare(L, std::string(use_f ? "f" : "e") + "(i=" + std::to_string(i) + ")",
                            got, want));
    }
  }

  // iterated brackets: beta_t(X)(H_1) = H_1 -+ (a_{1,i1}+...+a_{1,ik}) t X
  {
    std::vector<int> cur;
    std::vector<std::vector<int>> chains;
    increasing_chains(n, 2, cur, chains, 1);
    for (const auto& chain : chains) {
      for (bool use_f : {false, true}) {
        auto x = nested_bracket(L, chain, use_f);
        if (elem_is_zero(x)) continue;
        int support = -1;
        for (int b = 0; b < L.dim(); ++b) {
          if (x[b] != 0) support = b;
        }
        int coupling = 0;
        for (int v : chain) coupling += a1(v);

        auto ring = std::make_shared<PolyRing>();
        int tv = ring->add_var("t");
        RingPtr r = ring;
        auto target = poly_zero(L, r);
        target[h1] = MultiPoly::constant(r, 1);
        long scale = x[support].get_num().get_si();
        auto got = nilpotent_flow_apply(L, support, MultiPoly::variable(r, tv), target,
                                        static_cast<int>(scale));

        auto want = poly_zero(L, r);
        want[h1] = MultiPoly::constant(r, 1);
        auto t = MultiPoly::variable(r, tv);
        Rat sign = use_f ? Rat(coupling) : Rat(-coupling);
        want[support] += t * sign * x[support];

        std::ostringstream name;
        name << (use_f ? "[ff](" : "[ee](");
        for (size_t q = 0; q < chain.size(); ++q) name << (q ? "," : "") << chain[q];
        name << ")";
        out.push_back(compare(L, name.str(), got, want));
      }
    }
  }

  // beta_s(E_i) beta_t(F_i) (H_1) = H_1 - s a E_i + t a F_i + st a H_i - s^2 t a E_i
  for (int i = 1; i <= n; ++i) {
    int er = L.roots().simple_index(i);
    FlowWord w;
    w.steps = {nil_step(L.e_index(er), std::string("s")), nil_step(L.f_index(er), std::string("t"))};
    auto ring = word_ring(w);
    auto got = expand_word(L, w, ring, h1);
    auto s = MultiPoly::variable(ring, 0);
    auto t = MultiPoly::variable(ring, 1);
    Rat a(a1(i));
    auto want = poly_zero(L, ring);
    want[h1] = MultiPoly::constant(ring, 1);
    want[L.e_index(er)] += s * Rat(-a) + s * s * t * Rat(-a);
    want[L.f_index(er)] += t * a;
    want[L.h_index(i)] += s * t * a;
    out.push_back(compare(L, "h(i=" + std::to_string(i) + ")", got, want));
  }

  // mixed pairs
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      int ei = L.e_index(L.roots().simple_index(i));
      int ej = L.e_index(L.roots().simple_index(j));
      int fj = L.f_index(L.roots().simple_index(j));

      {
        FlowWord w;
        w.steps = {nil_step(ei, std::string("s")), nil_step(fj, std::string("t"))};
        auto ring = word_ring(w);
        auto got = expand_word(L, w, ring, h1);
        auto s = MultiPoly::variable(ring, 0);
        auto t = MultiPoly::variable(ring, 1);
        auto want = poly_zero(L, ring);
        want[h1] = MultiPoly::constant(ring, 1);
        want[ei] += s * Rat(-a1(i));
        want[fj] += t * Rat(a1(j));
        out.push_back(compare(
            L, "e_if_j(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")", got, want));
      }
      {
        FlowWord w;
        w.steps = {nil_step(ei, std::string("s")), nil_step(ej, std::string("t"))};
        auto ring = word_ring(w);
        auto got = expand_word(L, w, ring, h1);
        auto s = MultiPoly::variable(ring, 0);
        auto t = MultiPoly::variable(ring, 1);
        auto want = poly_zero(L, ring);
        want[h1] = MultiPoly::constant(ring, 1);
        want[ei] += s * Rat(-a1(i));
        want[ej] += t * Rat(-a1(j));
        auto comm = bracket(L, rat_basis(L, ei), rat_basis(L, ej));  // [E_i, E_j]
        for (int b = 0; b < L.dim(); ++b) {
          if (comm[b] != 0) want[b] += s * t * Rat(-a1(j)) * comm[b];
        }
        // the displayed -1/2 s^2 t a_{1j} [E_i,[E_i,E_j]] term vanishes
        // identically here: ad_{E_i}^2(E_j) = 0 in the simply-laced case
        out.push_back(compare(
            L, "e_ie_j(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")", got, want));
      }
    }
  }

  return out;
}

std::vector<TripleWordReport> check_triple_word(const LieAlgebra& L) {
  std::vector<TripleWordReport> out;
  const int n = L.rank();
  const int h1 = L.h_index(1);
  for (int i = 1; i <= n; ++i) {
    if (L.datum().entry(1, i) != 0) continue;
    for (int j = 1; j <= n; ++j) {
      if (L.datum().entry(1, j) == 0 || L.datum().entry(j, i) == 0 || i == j) continue;

      TripleWordReport rep;
      rep.i = i;
      rep.j = j;
      Rat aj(L.datum().entry(1, j));
      Rat aji(L.datum().entry(j, i));

      int ei = L.e_index(L.roots().simple_index(i));
      int ej = L.e_index(L.roots().simple_index(j));
      int fj = L.f_index(L.roots().simple_index(j));

      FlowWord w;
      w.steps = {nil_step(ei, std::string("w")), nil_step(ej, std::string("s")),
                 nil_step(fj, std::string("t"))};
      auto ring = word_ring(w);  // vars: w=0, s=1, t=2
      auto got = expand_word(L, w, ring, h1);

      auto W = MultiPoly::variable(ring, 0);
      auto S = MultiPoly::variable(ring, 1);
      auto T = MultiPoly::variable(ring, 2);

      // displayed formula:
      // H_1 - (s a_j + 1/2 s^2 t a_j^2)(E_j + w [E_i,E_j]) + t a_j F_j
      //     + s t a_j (H_j - a_ji w E_i)
      auto want = poly_zero(L, ring);
      want[h1] = MultiPoly::constant(ring, 1);
      auto group = S * (-aj) + S * S * T * (-aj * aj / 2);
      auto comm = bracket(L, rat_basis(L, ei), rat_basis(L, ej));
      want[ej] += group;
      for (int b = 0; b < L.dim(); ++b) {
        if (comm[b] != 0) want[b] += group * W * comm[b];
      }
      want[fj] += T * aj;
      want[L.h_index(j)] += S * T * aj;
      want[ei] += S * T * W * (-aj * aji);

      // the only tolerated differences: the s^2 t slice of the (E_j + w[.,.]) group
      rep.engine_inner_s2t = -got[ej].coefficient({0, 2, 1});
      rep.displayed_inner_s2t = aj * aj / 2;

      bool ok = true;
      for (int b = 0; b < L.dim(); ++b) {
        auto diff = got[b] - want[b];
        if (diff.is_zero()) continue;
        for (const auto& [m, c] : diff.terms()) {
          bool known_spot = (b == ej && m == Mono{0, 2, 1});
          for (int cb = 0; cb < L.dim(); ++cb) {
            if (comm[cb] != 0 && b == cb && m == Mono{1, 2, 1}) known_spot = true;
          }
          if (!known_spot) ok = false;
          (void)c;
        }
      }
      rep.rest_matches = ok;

      std::ostringstream sum;
      sum << "word E" << i << ":w,E" << j << ":s,F" << j << ":t on H_1: s^2*t coefficient of the "
          << "E_" << j << " group is " << rep.engine_inner_s2t.get_str() << " (engine, = a_1" << j
          << ") vs " << rep.displayed_inner_s2t.get_str() << " (displayed, = a_1" << j
          << "^2/2); all other coefficients agree";
      rep.summary = sum.str();
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace lieqr
