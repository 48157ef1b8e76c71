#include "lieqr/rootsystem.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieqr {

namespace {

// Height ascending; ties: larger coefficient at the first differing index
// sorts first (so alpha_1 < alpha_2 < ... among simple roots).
bool root_less(const Root& a, const Root& b) {
  if (a.height != b.height) return a.height < b.height;
  for (size_t k = 0; k < a.coeffs.size(); ++k) {
    if (a.coeffs[k] != b.coeffs[k]) return a.coeffs[k] > b.coeffs[k];
  }
  return false;
}

}  // namespace

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  auto it = index_.find(coeffs);
  return it == index_.end() ? -1 : it->second;
}

const RootSystem::Parent& RootSystem::parent(int idx) const {
  const Parent& p = parents_.at(idx);
  if (p.simple_vertex == 0) throw std::logic_error("parent: root is simple");
  return p;
}

RootSystem close_roots(const CartanDatum& d) {
  const int n = d.rank();
  std::vector<Root> found;
  std::map<std::vector<int>, int> seen;

  auto push = [&](Root r) {
    if (seen.emplace(r.coeffs, 0).second) found.push_back(std::move(r));
  };

  for (int i = 1; i <= n; ++i) {
    Root r;
    r.coeffs.assign(n, 0);
    r.coeffs[i - 1] = 1;
    r.height = 1;
    push(std::move(r));
  }

  auto pair_with = [&](const Root& r, int vertex) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += d.entry(vertex, j + 1) * r.coeffs[j];
    return s;
  };

  // Closure by height: alpha + alpha_i is a root iff <alpha, H_i> = -1
  // (and alpha - alpha_i is not a root; automatic in the simply-laced
  // case, kept as a guard).
  for (size_t head = 0; head < found.size(); ++head) {
    Root cur = found[head];
    for (int i = 1; i <= n; ++i) {
      if (pair_with(cur, i) != -1) continue;
      std::vector<int> minus = cur.coeffs;
      minus[i - 1] -= 1;
      bool minus_is_root = minus[i - 1] >= 0 && seen.count(minus) != 0;
      if (minus_is_root) continue;
      Root next;
      next.coeffs = cur.coeffs;
      next.coeffs[i - 1] += 1;
      next.height = cur.height + 1;
      push(std::move(next));
    }
  }

  std::sort(found.begin(), found.end(), root_less);

  RootSystem rs;
  rs.datum_ = d;
  rs.roots_ = std::move(found);
  for (size_t k = 0; k < rs.roots_.size(); ++k) rs.index_[rs.roots_[k].coeffs] = static_cast<int>(k);

  rs.pairing_.resize(rs.roots_.size());
  for (size_t k = 0; k < rs.roots_.size(); ++k) {
    rs.pairing_[k].resize(n);
    for (int i = 1; i <= n; ++i) rs.pairing_[k][i - 1] = pair_with(rs.roots_[k], i);
  }

  rs.simple_idx_.resize(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> c(n, 0);
    c[i - 1] = 1;
    rs.simple_idx_[i - 1] = rs.index_of(c);
  }

  rs.parents_.assign(rs.roots_.size(), {0, -1});
  for (size_t k = 0; k < rs.roots_.size(); ++k) {
    if (rs.roots_[k].height == 1) continue;
    for (int i = 1; i <= n; ++i) {
      if (rs.roots_[k].coeffs[i - 1] == 0) continue;
      std::vector<int> rest = rs.roots_[k].coeffs;
      rest[i - 1] -= 1;
      int ri = rs.index_of(rest);
      if (ri >= 0) {
        rs.parents_[k] = {i, ri};
        break;
      }
    }
    if (rs.parents_[k].simple_vertex == 0) {
      throw std::logic_error("close_roots: no height-descent parent found");
    }
  }
  return rs;
}

int SignTable::sign(int a, int b) const {
  auto it = table_.find({a, b});
  if (it == table_.end()) throw std::invalid_argument("sign: pair sum is not a root");
  return it->second;
}

namespace {

// Structure-constant helper over signed roots during sign derivation.
// Roots are encoded as (idx, sign) with idx a positive-root index.
struct SignedRoot {
  int idx;
  bool neg;
};

class SignDeriver {
public:
  explicit SignDeriver(const RootSystem& rs) : rs_(rs) {}

  std::map<std::pair<int, int>, int> run() {
    const int npos = rs_.num_positive();
    for (int g = 0; g < npos; ++g) {
      if (rs_.positive(g).height < 2) continue;
      derive_for(g);
    }
    return table_;
  }

private:
  const RootSystem& rs_;
  std::map<std::pair<int, int>, int> table_;

  void set_sign(int a, int b, int s) {
    table_[{a, b}] = s;
    table_[{b, a}] = -s;
  }

  int eps(int a, int b) const {
    auto it = table_.find({a, b});
    if (it == table_.end()) throw SignConsistencyError("sign table lookup before assignment");
    return it->second;
  }

  std::vector<int> sum_coeffs(const std::vector<int>& a, const std::vector<int>& b, int sb) const {
    std::vector<int> c(a.size());
    for (size_t k = 0; k < a.size(); ++k) c[k] = a[k] + sb * b[k];
    return c;
  }

  // N for arbitrary-sign root vectors; zero when the sum is not a root.
  // Mixed cases reduce to positive pairs by the cycle identity
  // N(x,y) = N(y,z) = N(z,x) for x+y+z = 0 (all lengths equal here).
  int bracket_sign(SignedRoot x, SignedRoot y) const {
    if (x.neg && y.neg) {
      int v = bracket_sign({x.idx, false}, {y.idx, false});
      return -v;
    }
    if (x.neg) return -bracket_sign(y, x);
    if (!y.neg) {
      // both positive
      std::vector<int> s = sum_coeffs(rs_.positive(x.idx).coeffs, rs_.positive(y.idx).coeffs, +1);
      int si = rs_.index_of(s);
      return si < 0 ? 0 : eps(x.idx, y.idx);
    }
    // x = alpha positive, y = -beta
    const auto& alpha = rs_.positive(x.idx).coeffs;
    const auto& beta = rs_.positive(y.idx).coeffs;
    std::vector<int> diff = sum_coeffs(alpha, beta, -1);
    bool nonneg = std::all_of(diff.begin(), diff.end(), [](int v) { return v >= 0; });
    bool nonpos = std::all_of(diff.begin(), diff.end(), [](int v) { return v <= 0; });
    if (nonneg) {
      int ti = rs_.index_of(diff);
      if (ti < 0) return 0;
      return -eps(y.idx, ti);  // alpha = beta + tau
    }
    if (nonpos) {
      std::vector<int> neg(diff.size());
      for (size_t k = 0; k < diff.size(); ++k) neg[k] = -diff[k];
      int ti = rs_.index_of(neg);
      if (ti < 0) return 0;
      return eps(ti, x.idx);  // beta = alpha + tau'
    }
    return 0;  // mixed signs: not a root
  }

  void derive_for(int g) {
    const Root& gamma = rs_.positive(g);
    const auto& par = rs_.parent(g);
    const int ap = rs_.simple_index(par.simple_vertex);  // extraspecial alpha'
    const int bp = par.rest_idx;                         // extraspecial beta'
    set_sign(ap, bp, +1);

    // Other special pairs (a, b), a < b, a + b = gamma, via the Jacobi
    // identity on (X_{alpha'}, X_{beta'}, X_{-alpha}).
    for (int a = 0; a < rs_.num_positive(); ++a) {
      if (a == ap) continue;
      std::vector<int> rest = sum_coeffs(gamma.coeffs, rs_.positive(a).coeffs, -1);
      bool nonneg = std::all_of(rest.begin(), rest.end(), [](int v) { return v >= 0; });
      if (!nonneg) continue;
      int b = rs_.index_of(rest);
      if (b < 0 || b <= a) continue;

      int k2 = 0;
      {
        // [[X_{beta'}, X_{-a}], X_{alpha'}]
        int first = bracket_sign({bp, false}, {a, true});
        if (first != 0) {
          std::vector<int> delta = sum_coeffs(rs_.positive(bp).coeffs, rs_.positive(a).coeffs, -1);
          SignedRoot d{};
          bool nn = std::all_of(delta.begin(), delta.end(), [](int v) { return v >= 0; });
          if (nn) {
            d = {rs_.index_of(delta), false};
          } else {
            std::vector<int> neg(delta.size());
            for (size_t k = 0; k < delta.size(); ++k) neg[k] = -delta[k];
            d = {rs_.index_of(neg), true};
          }
          if (d.idx >= 0) k2 = first * bracket_sign(d, {ap, false});
        }
      }
      int k3 = 0;
      {
        // [[X_{-a}, X_{alpha'}], X_{beta'}]
        int first = -bracket_sign({ap, false}, {a, true});
        if (first != 0) {
          std::vector<int> mu =
              sum_coeffs(rs_.positive(ap).coeffs, rs_.positive(a).coeffs, -1);
          SignedRoot m{};
          bool nn = std::all_of(mu.begin(), mu.end(), [](int v) { return v >= 0; });
          if (nn) {
            m = {rs_.index_of(mu), false};
          } else {
            std::vector<int> neg(mu.size());
            for (size_t k = 0; k < mu.size(); ++k) neg[k] = -mu[k];
            m = {rs_.index_of(neg), true};
          }
          if (m.idx >= 0) k3 = first * bracket_sign(m, {bp, false});
        }
      }
      int val = k2 + k3;
      if (val != 1 && val != -1) {
        throw SignConsistencyError("extraspecial sign derivation produced " + std::to_string(val));
      }
      set_sign(a, b, val);
    }
  }
};

}  // namespace

SignTable extraspecial_signs(const RootSystem& rs) {
  SignTable t;
  t.table_ = SignDeriver(rs).run();
  return t;
}

}  // namespace lieqr
