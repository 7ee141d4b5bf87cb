#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace logcoh {

/// Arbitrary-precision rational. Expression templates are off so the type
/// behaves like a plain value inside Eigen containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Element of the prime field Z/P. P must be prime and below 2^31.
template <std::uint32_t P>
class Zp {
  static_assert(P >= 2 && P < (1u << 31), "modulus out of range");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Zp() = default;
  constexpr Zp(long long v)  // NOLINT: implicit, Eigen builds scalars from ints
      : value_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  constexpr std::uint32_t value() const { return value_; }

  friend constexpr Zp operator+(Zp a, Zp b) { return raw((a.value_ + b.value_) % P); }
  friend constexpr Zp operator-(Zp a, Zp b) { return raw((a.value_ + P - b.value_) % P); }
  friend constexpr Zp operator*(Zp a, Zp b) {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value_) * b.value_ % P));
  }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  constexpr Zp operator-() const { return raw((P - value_) % P); }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  Zp& operator*=(Zp o) { return *this = *this * o; }
  Zp& operator/=(Zp o) { return *this = *this / o; }
  friend constexpr bool operator==(Zp a, Zp b) { return a.value_ == b.value_; }

  Zp inverse() const {
    if (value_ == 0) throw std::domain_error("division by zero in Z/p");
    return pow(P - 2);
  }
  Zp pow(std::uint64_t e) const {
    Zp base = *this, acc = Zp(1);
    for (; e; e >>= 1, base *= base)
      if (e & 1) acc *= base;
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.value_; }

 private:
  static constexpr Zp raw(std::uint32_t v) {
    Zp z;
    z.value_ = v;
    return z;
  }
  std::uint32_t value_ = 0;
};

using F1009 = Zp<1009>;

/// Conversions between the ground scalar types.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational from_rational(const Rational& q) { return q; }
  static std::string name() { return "q"; }
  static std::string to_string(const Rational& q) { return q.str(); }
};

template <std::uint32_t P>
struct ScalarTraits<Zp<P>> {
  static Zp<P> from_rational(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    const auto reduce = [](const Integer& z) {
      Integer r = z % P;
      if (r < 0) r += P;
      return Zp<P>(r.convert_to<long long>());
    };
    const Zp<P> d = reduce(den);
    if (d == Zp<P>(0)) throw std::domain_error("denominator divisible by the characteristic");
    return reduce(num) / d;
  }
  static std::string name() { return "fp:" + std::to_string(P); }
  static std::string to_string(const Zp<P>& a) { return std::to_string(a.value()); }
};

template <class S>
inline bool is_zero(const S& x) {
  return x == S(0);
}

/// Parses "a", "-a" or "a/b" into a rational; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace logcoh

namespace Eigen {

template <std::uint32_t P>
struct NumTraits<logcoh::Zp<P>> : GenericNumTraits<logcoh::Zp<P>> {
  using Real = logcoh::Zp<P>;
  using NonInteger = logcoh::Zp<P>;
  using Literal = logcoh::Zp<P>;
  using Nested = logcoh::Zp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
