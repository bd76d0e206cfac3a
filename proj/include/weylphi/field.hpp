#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace weylphi {

using Rational = mpq_class;

// Prime field with compile-time modulus.
template <std::uint32_t P>
class Fp {
 public:
  static constexpr std::uint32_t modulus = P;

  Fp() = default;
  Fp(long long x) {
    long long r = x % static_cast<long long>(P);
    if (r < 0) r += P;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return raw((a.v_ + b.v_) % P); }
  friend Fp operator-(Fp a, Fp b) { return raw((a.v_ + P - b.v_) % P); }
  friend Fp operator*(Fp a, Fp b) {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % P));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp operator-() const { return raw((P - v_) % P); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inv() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    Fp r(1), b = *this;
    std::uint32_t e = P - 2;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

 private:
  static Fp raw(std::uint32_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint32_t v_ = 0;
};

template <class T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr int characteristic = 0;
  static std::string name() { return "Q"; }
  static std::string str(const Rational& x) { return x.get_str(); }
  static std::optional<Rational> sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
  }
  // Squarefree integer d with x = d * (square); used to pick an extension.
  static Rational square_class(const Rational& x) {
    mpz_class v = x.get_num() * x.get_den();
    int sign = v < 0 ? -1 : 1;
    if (sign < 0) v = -v;
    mpz_class d = 1;
    for (mpz_class f = 2; f * f <= v; ++f) {
      int e = 0;
      while (v % f == 0) {
        v /= f;
        ++e;
      }
      if (e % 2) d *= f;
    }
    d *= v;
    return Rational(d * sign);
  }
};

template <std::uint32_t P>
struct FieldTraits<Fp<P>> {
  static constexpr int characteristic = static_cast<int>(P);
  static std::string name() { return "F" + std::to_string(P); }
  static std::string str(const Fp<P>& x) { return std::to_string(x.value()); }
  static std::optional<Fp<P>> sqrt(const Fp<P>& x) {
    for (std::uint32_t r = 0; r < P; ++r)
      if (Fp<P>(r) * Fp<P>(r) == x) return Fp<P>(r);
    return std::nullopt;
  }
  static Fp<P> square_class(const Fp<P>& x) {
    if (sqrt(x)) return Fp<P>(1);
    for (std::uint32_t r = 2; r < P; ++r)
      if (!sqrt(Fp<P>(r))) return Fp<P>(r);
    return Fp<P>(1);
  }
};

// Quadratic extension F[t]/(t^2 - d). The element carries d; elements with
// b = 0 are compatible with any d.
template <class F>
class Ext {
 public:
  Ext() : a_(0), b_(0), d_(0) {}
  Ext(long x) : a_(x), b_(0), d_(0) {}
  Ext(const F& a) : a_(a), b_(0), d_(0) {}
  Ext(const F& a, const F& b, const F& d) : a_(a), b_(b), d_(d) {}

  const F& re() const { return a_; }
  const F& im() const { return b_; }
  const F& d() const { return d_; }
  bool in_base() const { return b_ == F(0); }

  friend Ext operator+(const Ext& x, const Ext& y) {
    return Ext(x.a_ + y.a_, x.b_ + y.b_, pick(x, y));
  }
  friend Ext operator-(const Ext& x, const Ext& y) {
    return Ext(x.a_ - y.a_, x.b_ - y.b_, pick(x, y));
  }
  friend Ext operator*(const Ext& x, const Ext& y) {
    F d = pick(x, y);
    return Ext(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend Ext operator/(const Ext& x, const Ext& y) { return x * y.inv(); }
  Ext operator-() const { return Ext(-a_, -b_, d_); }
  Ext& operator+=(const Ext& y) { return *this = *this + y; }
  Ext& operator-=(const Ext& y) { return *this = *this - y; }
  Ext& operator*=(const Ext& y) { return *this = *this * y; }
  Ext& operator/=(const Ext& y) { return *this = *this / y; }
  friend bool operator==(const Ext& x, const Ext& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Ext& x, const Ext& y) { return !(x == y); }

  Ext inv() const {
    F norm = a_ * a_ - d_ * b_ * b_;
    if (norm == F(0)) throw std::domain_error("division by zero in quadratic extension");
    return Ext(a_ / norm, -b_ / norm, d_);
  }

 private:
  static F pick(const Ext& x, const Ext& y) {
    if (x.b_ != F(0) && y.b_ != F(0) && x.d_ != y.d_)
      throw std::logic_error("mixing quadratic extensions with different d");
    return x.b_ != F(0) ? x.d_ : (y.b_ != F(0) ? y.d_ : (x.d_ != F(0) ? x.d_ : y.d_));
  }
  F a_, b_, d_;
};

template <class F>
struct FieldTraits<Ext<F>> {
  static constexpr int characteristic = FieldTraits<F>::characteristic;
  static std::string name() { return FieldTraits<F>::name() + "(sqrt d)"; }
  static std::string str(const Ext<F>& x) {
    if (x.in_base()) return FieldTraits<F>::str(x.re());
    return FieldTraits<F>::str(x.re()) + "+" + FieldTraits<F>::str(x.im()) + "*sqrt(" +
           FieldTraits<F>::str(x.d()) + ")";
  }
};

template <>
struct FieldTraits<long long> {
  static constexpr int characteristic = 0;
  static std::string name() { return "Z"; }
  static std::string str(long long x) { return std::to_string(x); }
};

template <class T>
inline bool is_zero(const T& x) {
  return x == T(0);
}

template <class T>
inline int characteristic() {
  return FieldTraits<T>::characteristic;
}

}  // namespace weylphi
