// Copyright 2026 The wres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wres/number.hpp"

#include <algorithm>
#include <sstream>

#include "wres/error.hpp"

namespace wres {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw ParseError("not a rational number: '" + text + "'", 0);
  }
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator", 0);
  q.canonicalize();
  return q;
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  Gaussian conj(o.re_ / norm, -o.im_ / norm);
  return *this *= conj;
}

std::string Gaussian::to_string() const {
  if (sgn(im_) == 0) return wres::to_string(re_);
  std::string imag = wres::to_string(im_) + "*i";
  if (sgn(re_) == 0) return imag;
  return "(" + wres::to_string(re_) + (sgn(im_) > 0 ? " + " : " - ") +
         wres::to_string(abs(im_)) + "*i)";
}

Polynomial::Polynomial(Gaussian c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<Gaussian> ascending) : c_(std::move(ascending)) {
  trim();
}

Polynomial Polynomial::m() { return Polynomial({Gaussian(0), Gaussian(1)}); }

Gaussian Polynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size())) return Gaussian();
  return c_[power];
}

bool Polynomial::is_real() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Gaussian& g) { return g.is_real(); });
}

Gaussian Polynomial::evaluate(const Gaussian& m) const {
  Gaussian acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= m;
    acc += *it;
  }
  return acc;
}

bool Polynomial::divide_by_linear(long shift) {
  if (c_.empty()) return true;
  // Synthetic division by (m - r) with r = -shift.
  const Gaussian r(-shift);
  std::vector<Gaussian> q(c_.size() - 1);
  Gaussian carry;
  for (std::size_t k = c_.size(); k-- > 0;) {
    Gaussian v = c_[k] + carry * r;
    if (k == 0) {
      if (!v.is_zero()) return false;
    } else {
      q[k - 1] = v;
      carry = v;
    }
  }
  c_ = std::move(q);
  trim();
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& g : p.c_) g = -g;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Gaussian> r(c_.size() + o.c_.size() - 1);
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Gaussian& g = c_[k];
    if (g.is_zero()) continue;
    std::string s = g.to_string();
    bool negative = g.is_real() && sgn(g.re()) < 0;
    if (negative) s = wres::to_string(Rational(-g.re()));
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << s;
      continue;
    }
    if (s != "1") out << s << "*";
    out << "m";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

Polynomial Affine::as_polynomial() const {
  return Polynomial({Gaussian(constant), Gaussian(m_coef)});
}

std::string Affine::to_string() const {
  std::ostringstream out;
  if (m_coef != 0) {
    if (m_coef == -1) {
      out << "-";
    } else if (m_coef != 1) {
      out << m_coef;
    }
    out << "m";
  }
  if (constant != 0 || m_coef == 0) {
    if (m_coef != 0 && constant > 0) out << "+";
    out << constant;
  }
  return out.str();
}

Coeff Coeff::dimension() { return Coeff(Polynomial({Gaussian(0), Gaussian(2)})); }

Coeff& Coeff::divide_by_linear(long shift, int power) {
  if (num_.is_zero()) return *this;
  den_[shift] += power;
  reduce();
  return *this;
}

Coeff& Coeff::operator/=(const Gaussian& g) {
  num_ *= Polynomial(Gaussian(1) / g);
  return *this;
}

Gaussian Coeff::evaluate(const Rational& m) const {
  Gaussian value = num_.evaluate(Gaussian(m));
  for (const auto& [shift, power] : den_) {
    Rational d = m + shift;
    if (sgn(d) == 0) throw DomainError("pole of coefficient at m = " + wres::to_string(m));
    for (int k = 0; k < power; ++k) value /= Gaussian(d);
  }
  return value;
}

Coeff Coeff::operator-() const {
  Coeff c = *this;
  c.num_ = -c.num_;
  return c;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) den_.clear();
    reduce();
    return *this;
  }
  std::map<long, int> common = den_;
  for (const auto& [s, p] : o.den_) common[s] = std::max(common[s], p);
  auto lift = [&](const Polynomial& n, const std::map<long, int>& d) {
    Polynomial r = n;
    for (const auto& [s, p] : common) {
      auto it = d.find(s);
      int have = it == d.end() ? 0 : it->second;
      for (int k = have; k < p; ++k) {
        r *= Polynomial({Gaussian(s), Gaussian(1)});
      }
    }
    return r;
  };
  num_ = lift(num_, den_) + lift(o.num_, o.den_);
  den_ = std::move(common);
  reduce();
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff& Coeff::operator*=(const Coeff& o) {
  num_ *= o.num_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (const auto& [s, p] : o.den_) den_[s] += p;
  reduce();
  return *this;
}

void Coeff::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0 && num_.divide_by_linear(it->first)) --it->second;
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

std::string Coeff::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::ostringstream out;
  out << "(" << num_.to_string() << ")/(";
  bool first = true;
  for (const auto& [s, p] : den_) {
    if (!first) out << "*";
    first = false;
    if (s == 0) {
      out << "m";
    } else {
      out << "(m" << (s > 0 ? "+" : "-") << std::labs(s) << ")";
    }
    if (p > 1) out << "^" << p;
  }
  out << ")";
  return out.str();
}

}  // namespace wres
