#include "lieqr/flows.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace lieqr {

FlowStep nil_step(int basis, const Rat& t) {
  return {FlowStep::Kind::Nilpotent, basis, false, t, {}};
}
FlowStep nil_step(int basis, const std::string& symbol) {
  return {FlowStep::Kind::Nilpotent, basis, true, Rat(0), symbol};
}
FlowStep toral_step(int h_basis, const Rat& u) {
  if (u == 0) throw std::invalid_argument("toral_step: parameter must be nonzero");
  return {FlowStep::Kind::Toral, h_basis, false, u, {}};
}
FlowStep toral_step(int h_basis, const std::string& symbol) {
  return {FlowStep::Kind::Toral, h_basis, true, Rat(0), symbol};
}

bool FlowWord::has_symbols() const {
  return std::any_of(steps.begin(), steps.end(), [](const FlowStep& s) { return s.symbolic; });
}

FlowWord FlowWord::inverse() const {
  FlowWord w;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->symbolic) throw std::invalid_argument("inverse: word has symbolic parameters");
    if (it->kind == FlowStep::Kind::Nilpotent) {
      w.steps.push_back(nil_step(it->basis, -it->value));
    } else {
      w.steps.push_back(toral_step(it->basis, 1 / it->value));
    }
  }
  return w;
}

FlowWord& FlowWord::append(const FlowWord& tail) {
  steps.insert(steps.end(), tail.steps.begin(), tail.steps.end());
  return *this;
}

Elem<Rat> toral_flow_apply(const LieAlgebra& L, int h_basis, const Rat& u, Elem<Rat> target) {
  if (u == 0) throw std::invalid_argument("toral_flow: u must be nonzero");
  if (!L.is_cartan(h_basis)) throw std::invalid_argument("toral_flow: generator is not toral");
  int vertex = L.vertex_of(h_basis);
  for (int j = 0; j < L.dim(); ++j) {
    if (L.is_cartan(j) || target[j] == 0) continue;
    int e = L.roots().pairing(L.root_of(j), vertex);
    if (L.is_f(j)) e = -e;
    if (e != 0) target[j] *= rat_pow(u, e);
  }
  return target;
}

Elem<MultiPoly> toral_flow_apply_sym(const LieAlgebra& L, int h_basis, int var,
                                     const RingPtr& ring, Elem<MultiPoly> target) {
  if (!L.is_cartan(h_basis)) throw std::invalid_argument("toral_flow: generator is not toral");
  int vertex = L.vertex_of(h_basis);
  for (int j = 0; j < L.dim(); ++j) {
    if (L.is_cartan(j) || target[j].is_zero()) continue;
    int e = L.roots().pairing(L.root_of(j), vertex);
    if (L.is_f(j)) e = -e;
    if (e != 0) target[j] = target[j] * MultiPoly::variable(ring, var, e);
  }
  return target;
}

Elem<Rat> apply_word(const LieAlgebra& L, const FlowWord& w, Elem<Rat> target) {
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    if (it->symbolic) {
      throw std::invalid_argument("apply_word: symbolic step needs apply_word_sym");
    }
    if (it->kind == FlowStep::Kind::Nilpotent) {
      target = nilpotent_flow_apply(L, it->basis, it->value, std::move(target));
    } else {
      target = toral_flow_apply(L, it->basis, it->value, std::move(target));
    }
  }
  return target;
}

RingPtr word_ring(const FlowWord& w) {
  auto ring = std::make_shared<PolyRing>();
  for (const auto& s : w.steps) {
    if (s.symbolic) ring->add_var(s.symbol, s.kind == FlowStep::Kind::Toral);
  }
  return ring;
}

Elem<MultiPoly> apply_word_sym(const LieAlgebra& L, const FlowWord& w, const RingPtr& ring,
                               Elem<MultiPoly> target) {
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    if (it->kind == FlowStep::Kind::Nilpotent) {
      MultiPoly t = it->symbolic ? MultiPoly::variable(ring, ring->index_of(it->symbol))
                                 : MultiPoly::constant(ring, it->value);
      target = nilpotent_flow_apply(L, it->basis, t, std::move(target));
    } else if (it->symbolic) {
      target =
          toral_flow_apply_sym(L, it->basis, ring->index_of(it->symbol), ring, std::move(target));
    } else {
      // rational toral parameter inside a symbolic word
      for (int j = 0; j < L.dim(); ++j) {
        if (L.is_cartan(j) || target[j].is_zero()) continue;
        int e = L.roots().pairing(L.root_of(j), L.vertex_of(it->basis));
        if (L.is_f(j)) e = -e;
        if (e != 0) target[j] = target[j] * rat_pow(it->value, e);
      }
    }
  }
  return target;
}

Elem<MultiPoly> expand_word(const LieAlgebra& L, const FlowWord& w, const RingPtr& ring,
                            int target_basis) {
  auto target = poly_zero(L, ring);
  target[target_basis] = MultiPoly::constant(ring, 1);
  return apply_word_sym(L, w, ring, std::move(target));
}

namespace {

FlowWord reflection_triple(const LieAlgebra& L, int vertex) {
  int r = L.roots().simple_index(vertex);
  FlowWord w;
  w.steps = {nil_step(L.e_index(r), Rat(1)), nil_step(L.f_index(r), Rat(-1)),
             nil_step(L.e_index(r), Rat(1))};
  return w;
}

std::string elem_key(const Elem<Rat>& v) {
  std::ostringstream os;
  for (const auto& q : v) os << q.get_str() << ",";
  return os.str();
}

}  // namespace

FlowWord weyl_conjugator(const LieAlgebra& L, int vertex) {
  if (vertex < 1 || vertex > L.rank()) throw std::invalid_argument("weyl_conjugator: bad vertex");
  FlowWord empty;
  if (vertex == 1) return empty;

  auto start = rat_basis(L, L.h_index(1));
  auto goal = rat_basis(L, L.h_index(vertex));

  std::map<std::string, bool> seen;
  std::deque<std::pair<Elem<Rat>, std::vector<int>>> queue;
  queue.emplace_back(start, std::vector<int>{});
  seen[elem_key(start)] = true;
  const size_t max_len = static_cast<size_t>(L.num_positive()) + 1;

  while (!queue.empty()) {
    auto [state, word] = std::move(queue.front());
    queue.pop_front();
    if (word.size() >= max_len) continue;
    for (int j = 1; j <= L.rank(); ++j) {
      auto next = apply_word(L, reflection_triple(L, j), state);
      auto key = elem_key(next);
      if (seen.count(key)) continue;
      seen[key] = true;
      auto next_word = word;
      next_word.push_back(j);
      if (next == goal) {
        FlowWord out;
        for (auto it = next_word.rbegin(); it != next_word.rend(); ++it) {
          out.append(reflection_triple(L, *it));
        }
        if (!(apply_word(L, out, start) == goal)) {
          throw std::logic_error("weyl_conjugator: verification failed");
        }
        return out;
      }
      queue.emplace_back(std::move(next), std::move(next_word));
    }
  }
  throw std::logic_error("weyl_conjugator: search exhausted (bounded word length exceeded)");
}

FlowWord sample_word(const LieAlgebra& L, Rng& rng, int length) {
  FlowWord w;
  for (int s = 0; s < length; ++s) {
    int kind = static_cast<int>(rng.below(3));
    long num = rng.range(-9, 9);
    while (num == 0) num = rng.range(-9, 9);
    Rat param = make_rat(num, rng.range(1, 4));
    if (kind == 2) {
      int v = 1 + static_cast<int>(rng.below(L.rank()));
      w.steps.push_back(toral_step(L.h_index(v), param));
    } else {
      int r = static_cast<int>(rng.below(L.num_positive()));
      int basis = kind == 0 ? L.e_index(r) : L.f_index(r);
      w.steps.push_back(nil_step(basis, param));
    }
  }
  return w;
}

FlowWord parse_word(const LieAlgebra& L, const std::string& text) {
  FlowWord w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' '; }), tok.end());
    if (tok.empty()) continue;
    auto colon = tok.find(':');
    if (colon == std::string::npos || colon < 2) {
      throw std::invalid_argument("parse_word: expected GEN:PARAM in '" + tok + "'");
    }
    char g = tok[0];
    int vertex = 0;
    try {
      vertex = std::stoi(tok.substr(1, colon - 1));
    } catch (...) {
      throw std::invalid_argument("parse_word: bad generator in '" + tok + "'");
    }
    if (vertex < 1 || vertex > L.rank()) {
      throw std::invalid_argument("parse_word: vertex out of range in '" + tok + "'");
    }
    std::string param = tok.substr(colon + 1);
    if (param.empty()) throw std::invalid_argument("parse_word: empty parameter in '" + tok + "'");
    bool rational = param.find_first_not_of("+-/0123456789") == std::string::npos;

    if (g == 'H' || g == 'h') {
      int basis = L.h_index(vertex);
      if (rational) {
        Rat u(param);
        u.canonicalize();
        w.steps.push_back(toral_step(basis, u));
      } else {
        w.steps.push_back(toral_step(basis, param));
      }
    } else if (g == 'E' || g == 'e' || g == 'F' || g == 'f') {
      int r = L.roots().simple_index(vertex);
      int basis = (g == 'E' || g == 'e') ? L.e_index(r) : L.f_index(r);
      if (rational) {
        Rat t(param);
        t.canonicalize();
        w.steps.push_back(nil_step(basis, t));
      } else {
        w.steps.push_back(nil_step(basis, param));
      }
    } else {
      throw std::invalid_argument("parse_word: unknown generator kind '" + std::string(1, g) + "'");
    }
  }
  return w;
}

std::string word_str(const LieAlgebra& L, const FlowWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.steps) {
    if (!first) os << ",";
    first = false;
    if (s.kind == FlowStep::Kind::Toral) {
      os << "H" << L.vertex_of(s.basis);
    } else {
      int r = L.root_of(s.basis);
      if (L.roots().positive(r).height == 1) {
        int v = 0;
        for (int k = 1; k <= L.rank(); ++k) {
          if (L.roots().positive(r).coeffs[k - 1] == 1) v = k;
        }
        os << (L.is_e(s.basis) ? "E" : "F") << v;
      } else {
        os << L.label(s.basis);
      }
    }
    os << ":" << (s.symbolic ? s.symbol : s.value.get_str());
  }
  return os.str();
}

}  // namespace lieqr
