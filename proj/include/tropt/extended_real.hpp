#pragma once

#include <Eigen/Core>
#include <limits>
#include <ostream>

namespace tropt {

// A value in the max-plus carrier: a real number or minus infinity.
// Minus infinity is a tagged state rather than an IEEE sentinel, so finite
// arithmetic stays exact and no comparison depends on floating infinities.
template <typename Scalar>
class ExtendedValue {
 public:
  constexpr ExtendedValue() = default;  // finite zero
  constexpr ExtendedValue(Scalar v) : value_(v) {}

  static constexpr ExtendedValue neg_inf() {
    ExtendedValue e;
    e.finite_ = false;
    return e;
  }

  constexpr bool is_finite() const { return finite_; }

  // Only meaningful when is_finite().
  constexpr Scalar value() const { return value_; }

  // Extended addition: minus infinity absorbs.
  friend constexpr ExtendedValue operator+(ExtendedValue a, ExtendedValue b) {
    if (!a.finite_ || !b.finite_) return neg_inf();
    return ExtendedValue(a.value_ + b.value_);
  }
  constexpr ExtendedValue& operator+=(ExtendedValue other) {
    *this = *this + other;
    return *this;
  }

  friend constexpr bool operator==(ExtendedValue a, ExtendedValue b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend constexpr bool operator!=(ExtendedValue a, ExtendedValue b) {
    return !(a == b);
  }

  // Total order with minus infinity below every finite value.
  friend constexpr bool operator<(ExtendedValue a, ExtendedValue b) {
    if (!a.finite_) return b.finite_;
    return b.finite_ && a.value_ < b.value_;
  }
  friend constexpr bool operator>(ExtendedValue a, ExtendedValue b) { return b < a; }
  friend constexpr bool operator<=(ExtendedValue a, ExtendedValue b) { return !(b < a); }
  friend constexpr bool operator>=(ExtendedValue a, ExtendedValue b) { return !(a < b); }

 private:
  Scalar value_{};
  bool finite_ = true;
};

// Semiring operations: addition is max, multiplication is +. The additive
// identity is minus infinity, the multiplicative identity is 0.
template <typename Scalar>
constexpr ExtendedValue<Scalar> tropical_add(ExtendedValue<Scalar> a,
                                             ExtendedValue<Scalar> b) {
  return a < b ? b : a;
}
template <typename Scalar>
constexpr ExtendedValue<Scalar> tropical_mul(ExtendedValue<Scalar> a,
                                             ExtendedValue<Scalar> b) {
  return a + b;
}
template <typename Scalar>
constexpr ExtendedValue<Scalar> tropical_zero() {
  return ExtendedValue<Scalar>::neg_inf();
}
template <typename Scalar>
constexpr ExtendedValue<Scalar> tropical_one() {
  return ExtendedValue<Scalar>(Scalar(0));
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, ExtendedValue<Scalar> v) {
  if (v.is_finite()) return os << v.value();
  return os << "-inf";
}

using ExtendedReal = ExtendedValue<double>;

}  // namespace tropt

namespace Eigen {

template <typename Scalar>
struct NumTraits<tropt::ExtendedValue<Scalar>>
    : GenericNumTraits<tropt::ExtendedValue<Scalar>> {
  using Real = tropt::ExtendedValue<Scalar>;
  using NonInteger = Real;
  using Nested = Real;
  using Literal = Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1,
  };
  static inline Real epsilon() { return Real(NumTraits<Scalar>::epsilon()); }
  static inline Real dummy_precision() {
    return Real(NumTraits<Scalar>::dummy_precision());
  }
  static inline Real highest() {
    return Real(std::numeric_limits<Scalar>::max());
  }
  static inline Real lowest() { return Real::neg_inf(); }
  static inline int digits10() { return NumTraits<Scalar>::digits10(); }
};

}  // namespace Eigen
