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

// Exact scalars: rationals, Gaussian rationals, polynomials and rational
// functions in the half-dimension symbol m.

#ifndef WRES_NUMBER_HPP_
#define WRES_NUMBER_HPP_

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace wres {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

// a + b i with a, b rational.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long v) : re_(v) {}  // NOLINT(runtime/explicit)
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(runtime/explicit)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return Gaussian(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Gaussian operator-() const { return {-re_, -im_}; }
  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

// Polynomial in m with Gaussian-rational coefficients, ascending powers,
// no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Gaussian c);  // NOLINT(runtime/explicit)
  explicit Polynomial(std::vector<Gaussian> ascending);

  static Polynomial m();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Gaussian>& coefficients() const { return c_; }
  Gaussian coefficient(int power) const;
  bool is_real() const;

  Gaussian evaluate(const Gaussian& m) const;
  // Exact division by (m + shift); returns false and leaves *this untouched
  // when (m + shift) does not divide.
  bool divide_by_linear(long shift);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  // "-1/6*m + 1/6"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Gaussian> c_;
};

// Affine integer expression c + k*m, used for symbol orders and norm powers.
struct Affine {
  int m_coef = 0;
  int constant = 0;

  friend auto operator<=>(const Affine&, const Affine&) = default;
  Affine operator+(const Affine& o) const {
    return {m_coef + o.m_coef, constant + o.constant};
  }
  Affine operator-(const Affine& o) const {
    return {m_coef - o.m_coef, constant - o.constant};
  }
  Polynomial as_polynomial() const;
  // "-2m-2"
  std::string to_string() const;
};

// Rational function N(m) / prod_k (m + k)^e_k. Kept reduced, so equality is
// structural.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long v) : num_(Gaussian(v)) {}  // NOLINT(runtime/explicit)
  Coeff(Gaussian g) : num_(std::move(g)) {}  // NOLINT(runtime/explicit)
  Coeff(Polynomial p) : num_(std::move(p)) {}  // NOLINT(runtime/explicit)

  static Coeff m() { return Coeff(Polynomial::m()); }
  // The dimension n = 2m.
  static Coeff dimension();
  static Coeff i() { return Coeff(Gaussian::i()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_real() const { return num_.is_real(); }
  const Polynomial& numerator() const { return num_; }
  const std::map<long, int>& denominator() const { return den_; }

  // Multiplies by 1 / (m + shift)^power.
  Coeff& divide_by_linear(long shift, int power = 1);
  Coeff& operator/=(const Gaussian& g);

  Gaussian evaluate(const Rational& m) const;

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void reduce();
  Polynomial num_;
  std::map<long, int> den_;
};

}  // namespace wres

#endif  // WRES_NUMBER_HPP_
