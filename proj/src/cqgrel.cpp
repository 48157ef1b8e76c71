#include "lieqr/cqgrel.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lieqr {

void NCPoly::add_term(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  NCPoly r;
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : o.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

NCPoly NCPoly::operator*(const Rat& c) const {
  NCPoly r;
  if (c == 0) return r;
  for (const auto& [w, co] : terms_) r.terms_.emplace(w, co * c);
  return r;
}

NCPoly NCPoly::normalized_sign() const {
  if (terms_.empty()) return *this;
  if (terms_.begin()->second < 0) return *this * Rat(-1);
  return *this;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1 || w.empty()) os << to_string(a);
    if (a != 1 && !w.empty()) os << "*";
    for (size_t m = 0; m < w.size(); ++m) {
      if (m) os << "*";
      os << "Q" << w[m].i << w[m].j;
    }
    first = false;
  }
  return os.str();
}

NCPoly antipode(const NCPoly& p) {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) {
    NCPoly::Word rev;
    rev.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) rev.push_back({it->j, it->i});
    r.add_term(rev, c);
  }
  return r;
}

NCPoly rel1(int i, int j, int k) {
  auto a = NCPoly::gen(i, j), b = NCPoly::gen(k, j);
  return a * b - b * a;
}

NCPoly rel2(int i, int j, int k, int l) {
  auto ik = NCPoly::gen(i, k), jl = NCPoly::gen(j, l);
  auto il = NCPoly::gen(i, l), jk = NCPoly::gen(j, k);
  return ik * jl + il * jk - jk * il - jl * ik;
}

std::vector<NCPoly> relation_set(int n) {
  if (n < 2) throw std::invalid_argument("relation_set: need n >= 2");
  std::vector<NCPoly> out;
  std::set<std::string> seen;
  auto push = [&](NCPoly p) {
    if (p.is_zero()) return;
    p = p.normalized_sign();
    if (seen.insert(p.str()).second) out.push_back(std::move(p));
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) push(rel1(i, j, k));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) push(rel2(i, j, k, l));
      }
    }
  }
  return out;
}

CqgReport derive_commutativity(int n) {
  if (n < 2) throw std::invalid_argument("derive_commutativity: need n >= 2");
  CqgReport rep;
  rep.n = n;
  rep.assumptions = {
      "the coefficients Q_ij act on an orthonormal self-adjoint frame, so Q_ij* = Q_ij",
      "Q = ((Q_ij)) is a unitary representation matrix, hence Q^-1 = Q^T",
      "kappa is an antihomomorphism with kappa(Q_ij) = Q_ji",
  };

  // kappa-image of the column relations: Q_jk Q_ji = Q_ji Q_jk, displayed
  // form checked against the engine's antipode
  for (int i = 1; i <= n && rep.kappa_rows_ok; ++i) {
    for (int j = 1; j <= n && rep.kappa_rows_ok; ++j) {
      for (int k = 1; k <= n; ++k) {
        auto jk = NCPoly::gen(j, k), ji = NCPoly::gen(j, i);
        if (!(antipode(rel1(i, j, k)) == jk * ji - ji * jk)) {
          rep.kappa_rows_ok = false;
          break;
        }
        ++rep.kappa_row_checks;
      }
    }
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          // r6: antipode of r2 with k<->i and l<->j interchanged; at the
          // symbol level that is antipode(r2(k, l, i, j))
          NCPoly r2 = rel2(i, j, k, l);
          NCPoly r6 = antipode(rel2(k, l, i, j));
          auto ik = NCPoly::gen(i, k), jl = NCPoly::gen(j, l);
          NCPoly rhs = (ik * jl - jl * ik) * Rat(2);
          bool ok = (r2 - r6) == rhs;
          bool trivial = (i == j && k == l);
          rep.tuples.push_back({i, j, k, l, ok, trivial});
        }
      }
    }
  }
  return rep;
}

std::string render_cqg_trace(const CqgReport& rep) {
  std::ostringstream os;
  os << "n = " << rep.n << "\n";
  os << "assumptions (stated, not computed):\n";
  for (const auto& a : rep.assumptions) os << "  - " << a << "\n";
  os << "kappa row-relation checks: " << rep.kappa_row_checks << " "
     << (rep.kappa_rows_ok ? "OK" : "FAIL") << "\n";
  for (const auto& t : rep.tuples) {
    os << "rel(" << t.i << "," << t.j << "," << t.k << "," << t.l << "): r2 - r6 = 2*[Q_" << t.i
       << t.k << ",Q_" << t.j << t.l << "]  " << (t.ok ? "OK" : "FAIL");
    if (t.trivial) os << "  (trivial)";
    os << "\n";
  }
  os << (rep.all_ok() ? "verdict: all tuples verified" : "verdict: FAILURE") << "\n";
  return os.str();
}

}  // namespace lieqr
