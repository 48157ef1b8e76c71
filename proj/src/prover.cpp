#include "lieqr/prover.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <unordered_set>

#include "lieqr/quadind.hpp"

namespace lieqr {

namespace {

std::string var(const char* stem, int k) { return std::string(stem) + std::to_string(k); }

class ProverEngine {
public:
  ProverEngine(const LieAlgebra& L, const ProverConfig& cfg)
      : L_(L), cfg_(cfg), unknowns_(quad_cols(L.dim())) {
    Rng prng(Rng::mix(cfg.seed, 0x70726f76ull));
    prime_ = random_prime(prng);
    rref_ = std::make_unique<ModularRref>(unknowns_, prime_);
    rep_.dim = L.dim();
    rep_.unknowns = unknowns_;
    rep_.prime = prime_;
  }

  ProverReport run() {
    schedule_named_h_words();
    schedule_main();
    if (!rref_->full() && cfg_.allow_extension) extend();

    rep_.rank = rref_->rank();
    if (rref_->full()) {
      rep_.nullspace_dim = 0;  // full rank mod p certifies full rank over Q
    } else {
      // exact fallback: the honest nullspace dimension over Q
      ExactRref ex(unknowns_);
      for (const auto& row : exact_rows_) {
        std::vector<Rat> dense(unknowns_, Rat(0));
        for (const auto& [idx, c] : row) dense[idx] = c;
        ex.consume(std::move(dense));
      }
      rep_.rank = ex.rank();
      rep_.nullspace_dim = unknowns_ - ex.rank();
    }
    return std::move(rep_);
  }

private:
  const LieAlgebra& L_;
  ProverConfig cfg_;
  int unknowns_;
  uint64_t prime_ = 0;
  std::unique_ptr<ModularRref> rref_;
  std::unordered_set<std::string> seen_;
  std::vector<std::vector<std::pair<int, Rat>>> exact_rows_;
  ProverReport rep_;

  int e_of(int vertex) const { return L_.e_index(L_.roots().simple_index(vertex)); }
  int f_of(int vertex) const { return L_.f_index(L_.roots().simple_index(vertex)); }

  // Extract one constraint per monomial of sum_{X,Y} c_{(X,Y)} h_X h_Y,
  // insert the new ones, and return the normalized rows by monomial.
  std::map<Mono, std::vector<std::pair<int, Rat>>, MonoLess> process_word(const FlowWord& w,
                                                                          const RingPtr& ring) {
    auto target = poly_zero(L_, ring);
    target[L_.h_index(1)] = MultiPoly::constant(ring, 1);
    auto h = apply_word_sym(L_, w, ring, std::move(target));

    std::map<Mono, std::map<int, Rat>, MonoLess> rows;
    for (int x = 0; x < L_.dim(); ++x) {
      if (h[x].is_zero()) continue;
      for (int y = x; y < L_.dim(); ++y) {
        if (h[y].is_zero()) continue;
        MultiPoly q = h[x] * h[y];
        Rat factor(y == x ? 1 : 2);  // symmetric c, ordered double-sum
        int col = pair_index(x, y);
        for (const auto& [m, c] : q.terms()) {
          Rat v = c * factor;
          auto& row = rows[m];
          auto [it, fresh] = row.try_emplace(col, v);
          if (!fresh) {
            it->second += v;
            if (it->second == 0) row.erase(it);
          }
        }
      }
    }

    std::map<Mono, std::vector<std::pair<int, Rat>>, MonoLess> normalized;
    std::string wstr = word_str(L_, w);
    for (auto& [mono, row] : rows) {
      if (row.empty()) continue;
      Rat lead = row.begin()->second;
      std::vector<std::pair<int, Rat>> vec;
      vec.reserve(row.size());
      std::ostringstream key;
      for (auto& [idx, c] : row) {
        Rat n = c / lead;
        vec.emplace_back(idx, n);
        key << idx << ":" << n.get_str() << ";";
      }
      normalized.emplace(mono, vec);
      if (!seen_.insert(key.str()).second) continue;

      std::vector<uint64_t> mod_row(unknowns_, 0);
      for (const auto& [idx, c] : vec) mod_row[idx] = reduce_mod(c, prime_);
      bool fresh = rref_->consume(std::move(mod_row));
      exact_rows_.push_back(vec);
      ++rep_.constraints;
      if (cfg_.keep_trace) {
        rep_.trace.push_back({wstr, MultiPoly::mono_str(*ring, mono), std::move(vec), fresh});
      }
    }
    ++rep_.words;
    return normalized;
  }

  void process_word(const FlowWord& w) { process_word(w, word_ring(w)); }

  // (h)-words at base 1; the displayed intermediate identities come from
  // the s^2 t^2 and s t monomials for neighbors i of vertex 1.
  void schedule_named_h_words() {
    for (int i = 1; i <= L_.rank(); ++i) {
      FlowWord w;
      w.steps = {nil_step(e_of(i), std::string("s")), nil_step(f_of(i), std::string("t"))};
      auto ring = word_ring(w);
      auto rows = process_word(w, ring);
      int a = L_.datum().entry(1, i);
      if (i == 1 || a == 0) continue;

      auto match = [&](const Mono& mono, std::vector<std::pair<int, Rat>> expect,
                       const std::string& name) {
        std::sort(expect.begin(), expect.end());
        NamedIdentity id{name, word_str(L_, w), MultiPoly::mono_str(*ring, mono), false};
        auto it = rows.find(mono);
        if (it != rows.end() && it->second == expect) id.matched = true;
        rep_.named.push_back(std::move(id));
      };

      int hi = L_.h_index(i), h1 = L_.h_index(1), ei = e_of(i), fi = f_of(i);
      match({2, 2}, {{pair_index(hi, hi), Rat(1)}, {pair_index(ei, fi), Rat(-2)}},
            "c(" + L_.label(hi) + "," + L_.label(hi) + ") = 2 c(" + L_.label(ei) + "," +
                L_.label(fi) + ")");
      match({1, 1}, {{pair_index(h1, hi), Rat(1)}, {pair_index(ei, fi), Rat(-a)}},
            "c(H1," + L_.label(hi) + ") = a_1" + std::to_string(i) + " c(" + L_.label(ei) + "," +
                L_.label(fi) + ")");
    }
  }

  void schedule_main() {
    const int n = L_.rank();
    const int npos = L_.num_positive();
    std::vector<FlowWord> conj(n + 1);
    for (int b = 1; b <= n; ++b) conj[b] = weyl_conjugator(L_, b);

    auto emit = [&](FlowWord w, int base) {
      if (rref_->full()) return;
      w.append(conj[base]);
      process_word(w);
    };

    for (int b = 1; b <= n && !rref_->full(); ++b) {
      // singles: every root direction, E and F
      for (int r = 0; r < npos; ++r) {
        FlowWord we;
        we.steps = {nil_step(L_.e_index(r), std::string("t"))};
        emit(we, b);
        FlowWord wf;
        wf.steps = {nil_step(L_.f_index(r), std::string("t"))};
        emit(wf, b);
      }
      // E_i/F_i pairs (base-1 copies already processed; duplicates dedup)
      for (int i = 1; i <= n; ++i) {
        FlowWord w;
        w.steps = {nil_step(e_of(i), std::string("s")), nil_step(f_of(i), std::string("t"))};
        emit(w, b);
      }
      // mixed simple pairs
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          FlowWord ef;
          ef.steps = {nil_step(e_of(i), std::string("s")), nil_step(f_of(j), std::string("t"))};
          emit(ef, b);
          FlowWord ee;
          ee.steps = {nil_step(e_of(i), std::string("s")), nil_step(e_of(j), std::string("t"))};
          emit(ee, b);
          FlowWord ff;
          ff.steps = {nil_step(f_of(i), std::string("s")), nil_step(f_of(j), std::string("t"))};
          emit(ff, b);
        }
      }
    }

    // ladders along Dynkin paths, their EF variants and mirrors
    for (int b = 1; b <= n && !rref_->full(); ++b) {
      for (int j = 1; j <= n; ++j) {
        int dj = graph_distance(L_.datum(), b, j);
        if (dj < 2) continue;
        auto pth = path(L_.datum(), b, j);
        for (bool mirror : {false, true}) {
          auto up = [&](int v, const std::string& s) {
            return nil_step(mirror ? f_of(v) : e_of(v), s);
          };
          auto dn = [&](int v, const std::string& s) {
            return nil_step(mirror ? e_of(v) : f_of(v), s);
          };
          FlowWord ladder;
          for (int k = dj - 1; k >= 1; --k) {
            ladder.steps.push_back(up(pth[k], var("s", k + 1)));
            ladder.steps.push_back(dn(pth[k], var("t", k + 1)));
          }
          FlowWord w1;
          w1.steps = {up(j, "w")};
          w1.append(ladder);
          emit(w1, b);
          FlowWord w2;
          w2.steps = {up(j, "w"), dn(j, "w2")};
          w2.append(ladder);
          emit(w2, b);
        }
      }
    }

    // triple words for second-neighborhood vertices
    for (int b = 1; b <= n && !rref_->full(); ++b) {
      for (int i = 1; i <= n; ++i) {
        if (L_.datum().entry(b, i) != 0) continue;
        for (int j = 1; j <= n; ++j) {
          if (j == i || L_.datum().entry(b, j) == 0 || L_.datum().entry(j, i) == 0) continue;
          FlowWord w;
          w.steps = {nil_step(e_of(i), std::string("w")), nil_step(e_of(j), std::string("s")),
                     nil_step(f_of(j), std::string("t"))};
          emit(w, b);
          FlowWord m;
          m.steps = {nil_step(f_of(i), std::string("w")), nil_step(f_of(j), std::string("s")),
                     nil_step(e_of(j), std::string("t"))};
          emit(m, b);
        }
      }
    }

    // double ladders: an F_i ladder prefix composed with the E_j ladder
    for (int b = 1; b <= n && !rref_->full(); ++b) {
      for (int j = 1; j <= n; ++j) {
        int dj = graph_distance(L_.datum(), b, j);
        if (dj < 2) continue;
        auto pj = path(L_.datum(), b, j);
        for (int i = 1; i <= n; ++i) {
          int di = graph_distance(L_.datum(), b, i);
          if (i == j || di < 1 || di > dj - 1) continue;
          auto pi = path(L_.datum(), b, i);
          for (bool mirror : {false, true}) {
            auto up = [&](int v, const std::string& s) {
              return nil_step(mirror ? f_of(v) : e_of(v), s);
            };
            auto dn = [&](int v, const std::string& s) {
              return nil_step(mirror ? e_of(v) : f_of(v), s);
            };
            FlowWord w;
            w.steps.push_back(dn(i, "wp"));
            for (int k = di - 1; k >= 1; --k) {
              w.steps.push_back(up(pi[k], var("sp", k + 1)));
              w.steps.push_back(dn(pi[k], var("tp", k + 1)));
            }
            w.steps.push_back(up(j, "w"));
            for (int k = dj - 1; k >= 1; --k) {
              w.steps.push_back(up(pj[k], var("s", k + 1)));
              w.steps.push_back(dn(pj[k], var("t", k + 1)));
            }
            emit(w, b);
          }
        }
      }
    }

    // chain pairs: bracket chains of two roots composed, in all four
    // upper/lower combinations (E.../F..., E.../E..., F.../F...)
    for (int b = 1; b <= n && !rref_->full(); ++b) {
      for (int ra = 0; ra < npos && !rref_->full(); ++ra) {
        for (int rb = 0; rb < npos; ++rb) {
          const auto& ca = L_.bracket_chain(ra);
          const auto& cb = L_.bracket_chain(rb);
          if (static_cast<int>(ca.size() + cb.size()) > PolyRing::kMaxVars) continue;
          for (bool a_is_f : {false, true}) {
            for (bool b_is_f : {false, true}) {
              if (ra == rb && a_is_f == b_is_f) continue;
              FlowWord w;
              for (size_t k = 0; k < ca.size(); ++k) {
                int g = a_is_f ? f_of(ca[k]) : e_of(ca[k]);
                w.steps.push_back(nil_step(g, var("a", static_cast<int>(k) + 1)));
              }
              for (size_t k = 0; k < cb.size(); ++k) {
                int g = b_is_f ? f_of(cb[k]) : e_of(cb[k]);
                w.steps.push_back(nil_step(g, var("b", static_cast<int>(k) + 1)));
              }
              emit(w, b);
            }
          }
        }
      }
    }
  }

  void extend() {
    Rng rng(Rng::mix(cfg_.seed, 0x65787431ull));
    while (!rref_->full() && rep_.extension_words < cfg_.max_extension_words) {
      int len = 4 + static_cast<int>(rng.below(9));  // <= 12 symbols
      FlowWord w;
      for (int s = 0; s < len; ++s) {
        int kind = static_cast<int>(rng.below(3));
        std::string name = var("x", s + 1);
        if (kind == 2) {
          int v = 1 + static_cast<int>(rng.below(L_.rank()));
          w.steps.push_back(toral_step(L_.h_index(v), name));
        } else {
          int r = static_cast<int>(rng.below(L_.num_positive()));
          w.steps.push_back(nil_step(kind == 0 ? L_.e_index(r) : L_.f_index(r), name));
        }
      }
      process_word(w);
      ++rep_.extension_words;
    }
  }
};

}  // namespace

ProverReport coefficient_prover(const LieAlgebra& L, const ProverConfig& cfg) {
  if (L.rank() > cfg.rank_cap) {
    throw std::invalid_argument("coefficient_prover: rank " + std::to_string(L.rank()) +
                                " exceeds the symbolic cap " + std::to_string(cfg.rank_cap));
  }
  return ProverEngine(L, cfg).run();
}

std::string render_trace(const LieAlgebra& L, const ProverReport& rep) {
  std::ostringstream os;
  os << "unknowns " << rep.unknowns << " constraints " << rep.constraints << " rank " << rep.rank
     << " nullspace " << rep.nullspace_dim << "\n";
  os << "named identities:\n";
  for (const auto& id : rep.named) {
    os << "  " << (id.matched ? "[matched] " : "[MISSING] ") << id.name << "  from " << id.word
       << " @ " << id.monomial << "\n";
  }
  auto pair_label = [&](int col) {
    auto [x, y] = index_pair(col);
    return "c(" + L.label(x) + "," + L.label(y) + ")";
  };
  for (size_t k = 0; k < rep.trace.size(); ++k) {
    const auto& t = rep.trace[k];
    os << "constraint " << k << (t.fresh ? "" : " (dependent)") << " from [" << t.word << "] @ "
       << t.monomial << ":";
    for (const auto& [col, c] : t.combo) {
      os << " " << (c >= 0 ? "+" : "") << c.get_str() << "*" << pair_label(col);
    }
    os << " = 0\n";
  }
  return os.str();
}

}  // namespace lieqr
