#include "lieqr/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "lieqr/rng.hpp"

namespace lieqr {

namespace {

std::vector<int> diff_coeffs(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t k = 0; k < a.size(); ++k) c[k] = a[k] - b[k];
  return c;
}

bool all_nonneg(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

bool all_nonpos(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
}

}  // namespace

LieAlgebra chevalley_algebra(const RootSystem& rs, const SignTable& signs) {
  LieAlgebra L;
  L.rs_ = rs;
  L.signs_ = signs;
  const int n = rs.rank();
  const int npos = rs.num_positive();
  L.dim_ = n + 2 * npos;
  L.table_.assign(static_cast<size_t>(L.dim_) * L.dim_, {});

  auto set = [&](int i, int j, LieAlgebra::SparseVec v) {
    L.table_[static_cast<size_t>(i) * L.dim_ + j] = std::move(v);
  };

  // [H_i, E_a] = <a, H_i> E_a ; [H_i, F_a] = -<a, H_i> F_a ; [H_i, H_j] = 0.
  for (int v = 1; v <= n; ++v) {
    int hi = L.h_index(v);
    for (int a = 0; a < npos; ++a) {
      int pa = rs.pairing(a, v);
      if (pa != 0) {
        set(hi, L.e_index(a), {{L.e_index(a), pa}});
        set(L.e_index(a), hi, {{L.e_index(a), -pa}});
        set(hi, L.f_index(a), {{L.f_index(a), -pa}});
        set(L.f_index(a), hi, {{L.f_index(a), pa}});
      }
    }
  }

  // Root-vector pairs.
  for (int a = 0; a < npos; ++a) {
    const auto& ra = rs.positive(a).coeffs;
    for (int b = 0; b < npos; ++b) {
      // [E_a, E_b] and [F_a, F_b]
      if (a != b) {
        std::vector<int> sum(ra.size());
        for (size_t k = 0; k < ra.size(); ++k) sum[k] = ra[k] + rs.positive(b).coeffs[k];
        int si = rs.index_of(sum);
        if (si >= 0) {
          int eps = signs.sign(a, b);
          set(L.e_index(a), L.e_index(b), {{L.e_index(si), eps}});
          set(L.f_index(a), L.f_index(b), {{L.f_index(si), -eps}});
        }
      }
      // [E_a, F_b]
      if (a == b) {
        LieAlgebra::SparseVec h;
        for (int v = 1; v <= n; ++v) {
          if (ra[v - 1] != 0) h.push_back({L.h_index(v), ra[v - 1]});
        }
        set(L.e_index(a), L.f_index(a), h);
        for (auto& t : h) t.coeff = -t.coeff;
        set(L.f_index(a), L.e_index(a), std::move(h));
      } else {
        const auto& rb = rs.positive(b).coeffs;
        std::vector<int> d = diff_coeffs(ra, rb);
        LieAlgebra::SparseVec v;
        if (all_nonneg(d)) {
          int ti = rs.index_of(d);
          if (ti >= 0) v = {{L.e_index(ti), -signs.sign(b, ti)}};
        } else if (all_nonpos(d)) {
          std::vector<int> nd(d.size());
          for (size_t k = 0; k < d.size(); ++k) nd[k] = -d[k];
          int ti = rs.index_of(nd);
          if (ti >= 0) v = {{L.f_index(ti), signs.sign(ti, a)}};
        }
        set(L.e_index(a), L.f_index(b), v);
        for (auto& t : v) t.coeff = -t.coeff;
        set(L.f_index(b), L.e_index(a), std::move(v));
      }
    }
  }

  // Iterated-bracket chains by height descent through extraspecial parents.
  L.chains_.resize(npos);
  L.chain_signs_.assign(npos, 1);
  for (int k = 0; k < npos; ++k) {
    if (rs.positive(k).height == 1) {
      for (int v = 1; v <= n; ++v) {
        if (rs.positive(k).coeffs[v - 1] == 1) L.chains_[k] = {v};
      }
      continue;
    }
    const auto& par = rs.parent(k);
    L.chains_[k] = {par.simple_vertex};
    const auto& rest_chain = L.chains_[par.rest_idx];
    L.chains_[k].insert(L.chains_[k].end(), rest_chain.begin(), rest_chain.end());
    L.chain_signs_[k] =
        signs.sign(rs.simple_index(par.simple_vertex), par.rest_idx) * L.chain_signs_[par.rest_idx];
  }
  return L;
}

LieAlgebra build_algebra(Series series, int rank) {
  auto rs = close_roots(cartan_matrix(series, rank));
  auto signs = extraspecial_signs(rs);
  return chevalley_algebra(rs, signs);
}

std::string LieAlgebra::label(int basis) const {
  std::ostringstream os;
  if (is_cartan(basis)) {
    os << "H" << vertex_of(basis);
    return os.str();
  }
  os << (is_e(basis) ? "E[" : "F[");
  const auto& c = rs_.positive(root_of(basis)).coeffs;
  for (size_t k = 0; k < c.size(); ++k) {
    if (k) os << ",";
    os << c[k];
  }
  os << "]";
  return os.str();
}

namespace {

using DenseInt = std::vector<long>;

DenseInt bracket_dense(const LieAlgebra& L, const DenseInt& x, const DenseInt& y) {
  DenseInt out(L.dim(), 0);
  for (int i = 0; i < L.dim(); ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < L.dim(); ++j) {
      if (!y[j]) continue;
      for (const auto& t : L.table(i, j)) out[t.basis] += x[i] * y[j] * t.coeff;
    }
  }
  return out;
}

DenseInt basis_dense(const LieAlgebra& L, int i) {
  DenseInt v(L.dim(), 0);
  v[i] = 1;
  return v;
}

bool is_zero_dense(const DenseInt& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

bool jacobi_holds(const LieAlgebra& L, int i, int j, int k) {
  DenseInt bi = basis_dense(L, i), bj = basis_dense(L, j), bk = basis_dense(L, k);
  DenseInt s = bracket_dense(L, bracket_dense(L, bi, bj), bk);
  DenseInt t = bracket_dense(L, bracket_dense(L, bj, bk), bi);
  DenseInt u = bracket_dense(L, bracket_dense(L, bk, bi), bj);
  for (int m = 0; m < L.dim(); ++m) {
    if (s[m] + t[m] + u[m] != 0) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate(const LieAlgebra& L, int jacobi_samples, uint64_t seed) {
  ValidationReport rep;
  const int dim = L.dim();
  const int n = L.rank();

  {
    ValidationEntry e{"antisymmetry", true, ""};
    for (int i = 0; i < dim && e.pass; ++i) {
      for (int j = 0; j < dim && e.pass; ++j) {
        DenseInt a(dim, 0), b(dim, 0);
        for (const auto& t : L.table(i, j)) a[t.basis] += t.coeff;
        for (const auto& t : L.table(j, i)) b[t.basis] += t.coeff;
        for (int m = 0; m < dim; ++m) {
          if (a[m] + b[m] != 0) {
            e.pass = false;
            e.witness = "pair (" + L.label(i) + ", " + L.label(j) + ")";
            break;
          }
        }
      }
    }
    rep.entries.push_back(std::move(e));
  }

  {
    ValidationEntry e{"jacobi", true, ""};
    if (jacobi_samples <= 0) {
      for (int i = 0; i < dim && e.pass; ++i) {
        for (int j = i; j < dim && e.pass; ++j) {
          for (int k = j; k < dim; ++k) {
            if (!jacobi_holds(L, i, j, k)) {
              e.pass = false;
              e.witness =
                  "triple (" + L.label(i) + ", " + L.label(j) + ", " + L.label(k) + ")";
              break;
            }
          }
        }
      }
    } else {
      Rng rng(Rng::mix(seed, 0x6a636f62));  // "jacb"
      for (int s = 0; s < jacobi_samples; ++s) {
        int i = static_cast<int>(rng.below(dim));
        int j = static_cast<int>(rng.below(dim));
        int k = static_cast<int>(rng.below(dim));
        if (!jacobi_holds(L, i, j, k)) {
          e.pass = false;
          e.witness = "triple (" + L.label(i) + ", " + L.label(j) + ", " + L.label(k) + ")";
          break;
        }
      }
    }
    rep.entries.push_back(std::move(e));
  }

  {
    ValidationEntry e{"serre-basic", true, ""};
    auto expect = [&](const DenseInt& got, const DenseInt& want, const std::string& what) {
      if (!e.pass) return;
      for (int m = 0; m < dim; ++m) {
        if (got[m] != want[m]) {
          e.pass = false;
          e.witness = what;
          return;
        }
      }
    };
    for (int i = 1; i <= n; ++i) {
      int ei = L.e_index(L.roots().simple_index(i));
      int fi = L.f_index(L.roots().simple_index(i));
      int hi = L.h_index(i);
      expect(bracket_dense(L, basis_dense(L, ei), basis_dense(L, fi)), basis_dense(L, hi),
             "[E_" + std::to_string(i) + ", F_" + std::to_string(i) + "] != H_" + std::to_string(i));
      for (int j = 1; j <= n; ++j) {
        int ej = L.e_index(L.roots().simple_index(j));
        int fj = L.f_index(L.roots().simple_index(j));
        int hj = L.h_index(j);
        DenseInt want(dim, 0);
        expect(bracket_dense(L, basis_dense(L, hi), basis_dense(L, hj)), want,
               "[H_" + std::to_string(i) + ", H_" + std::to_string(j) + "] != 0");
        // [E_j, H_i] = -a_{ij} E_j, [F_j, H_i] = a_{ij} F_j
        want.assign(dim, 0);
        want[ej] = -L.datum().entry(i, j);
        expect(bracket_dense(L, basis_dense(L, ej), basis_dense(L, hi)), want,
               "[E_" + std::to_string(j) + ", H_" + std::to_string(i) + "] != -a_ij E_j");
        want.assign(dim, 0);
        want[fj] = L.datum().entry(i, j);
        expect(bracket_dense(L, basis_dense(L, fj), basis_dense(L, hi)), want,
               "[F_" + std::to_string(j) + ", H_" + std::to_string(i) + "] != a_ij F_j");
        if (i != j) {
          want.assign(dim, 0);
          expect(bracket_dense(L, basis_dense(L, ei), basis_dense(L, fj)), want,
                 "[E_" + std::to_string(i) + ", F_" + std::to_string(j) + "] != 0");
        }
      }
    }
    rep.entries.push_back(std::move(e));
  }

  {
    ValidationEntry e{"serre-higher", true, ""};
    for (int i = 1; i <= n && e.pass; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        int power = 1 - L.datum().entry(i, j);
        int ei = L.e_index(L.roots().simple_index(i));
        int fi = L.f_index(L.roots().simple_index(i));
        int ej = L.e_index(L.roots().simple_index(j));
        int fj = L.f_index(L.roots().simple_index(j));
        DenseInt accE = basis_dense(L, ej), accF = basis_dense(L, fj);
        for (int k = 0; k < power; ++k) {
          accE = bracket_dense(L, basis_dense(L, ei), accE);
          accF = bracket_dense(L, basis_dense(L, fi), accF);
        }
        if (!is_zero_dense(accE) || !is_zero_dense(accF)) {
          e.pass = false;
          e.witness = "ad^" + std::to_string(power) + " at (i,j)=(" + std::to_string(i) + "," +
                      std::to_string(j) + ")";
          break;
        }
      }
    }
    rep.entries.push_back(std::move(e));
  }

  {
    ValidationEntry e{"root-bracket-constants", true, ""};
    for (int a = 0; a < L.num_positive() && e.pass; ++a) {
      for (int b = 0; b < L.num_positive(); ++b) {
        for (const auto& t : L.table(L.e_index(a), L.e_index(b))) {
          if (t.coeff < -1 || t.coeff > 1) {
            e.pass = false;
            e.witness = "constant " + std::to_string(t.coeff) + " at (" + L.label(L.e_index(a)) +
                        ", " + L.label(L.e_index(b)) + ")";
            break;
          }
        }
        if (!e.pass) break;
      }
    }
    rep.entries.push_back(std::move(e));
  }

  return rep;
}

std::string export_structure_constants(const LieAlgebra& L) {
  std::ostringstream os;
  for (int i = 0; i < L.dim(); ++i) {
    for (int j = i + 1; j < L.dim(); ++j) {
      const auto& terms = L.table(i, j);
      if (terms.empty()) continue;
      os << "bracket " << L.label(i) << " " << L.label(j) << " =";
      for (const auto& t : terms) {
        os << " " << (t.coeff >= 0 ? "+" : "") << t.coeff << " " << L.label(t.basis);
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace lieqr
