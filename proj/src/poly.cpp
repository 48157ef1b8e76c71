#include "lieqr/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lieqr {

int PolyRing::add_var(const std::string& name, bool laurent) {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      if (laurent) laurent_[i] = true;
      return static_cast<int>(i);
    }
  }
  if (static_cast<int>(names_.size()) >= kMaxVars) {
    throw std::runtime_error("symbolic cap exceeded: more than " + std::to_string(kMaxVars) +
                             " active variables");
  }
  names_.push_back(name);
  laurent_.push_back(laurent);
  return static_cast<int>(names_.size()) - 1;
}

int PolyRing::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown variable: " + name);
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0l);
  long db = std::accumulate(b.begin(), b.end(), 0l);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rat& c) {
  MultiPoly p(std::move(ring));
  if (c != 0) p.terms_.emplace(Mono(p.ring_ ? p.ring_->nvars() : 0, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, int var, int exp) {
  MultiPoly p(std::move(ring));
  Mono m(p.ring_->nvars(), 0);
  m.at(var) = exp;
  p.check_exponents(m);
  p.terms_.emplace(std::move(m), Rat(1));
  return p;
}

Rat MultiPoly::coefficient(const Mono& m) const {
  if (ring_ && static_cast<int>(m.size()) != ring_->nvars())
    throw std::invalid_argument("monomial arity mismatch");
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::check_exponents(const Mono& m) const {
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 && !(ring_ && ring_->is_laurent(static_cast<int>(i)))) {
      throw std::invalid_argument("negative exponent on non-Laurent variable " +
                                  (ring_ ? ring_->name(static_cast<int>(i)) : std::string("?")));
    }
  }
}

void MultiPoly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  check_exponents(m);
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("polynomial ring mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_ring(o);
  MultiPoly r(ring_);
  Mono m(ring_ ? ring_->nvars() : 0);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly r(ring_);
  if (c == 0) return r;
  for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
  return r;
}

MultiPoly MultiPoly::operator-() const { return (*this) * Rat(-1); }

std::string MultiPoly::mono_str(const PolyRing& ring, const Mono& m) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << ring.name(static_cast<int>(i));
    if (m[i] != 1) os << "^" << m[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
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
    bool is_const = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    if (is_const) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << mono_str(*ring_, m);
    }
    first = false;
  }
  return os.str();
}

}  // namespace lieqr
