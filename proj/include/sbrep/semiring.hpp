// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SBREP_SEMIRING_HPP_
#define SBREP_SEMIRING_HPP_

#include <array>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "sbrep/error.hpp"

namespace sbrep {

// The superboolean scalars. The total order is Ghost > One > Zero, and the
// numeric encoding below follows it.
enum class SbElem : std::uint8_t {
  kZero = 0,
  kOne = 1,
  kGhost = 2,  // written 1^nu, text token "v"
};

inline constexpr std::array<SbElem, 3> kSbElems = {
    SbElem::kZero, SbElem::kOne, SbElem::kGhost};

constexpr SbElem sb_add(SbElem a, SbElem b) {
  if (a == b) return a == SbElem::kZero ? SbElem::kZero : SbElem::kGhost;
  return static_cast<SbElem>(
      std::max(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)));
}

constexpr SbElem sb_mul(SbElem a, SbElem b) {
  if (a == SbElem::kZero || b == SbElem::kZero) return SbElem::kZero;
  if (a == SbElem::kOne && b == SbElem::kOne) return SbElem::kOne;
  return SbElem::kGhost;
}

// Ghost projection: 1 -> 1^nu, fixes 0 and 1^nu.
constexpr SbElem nu(SbElem a) {
  return a == SbElem::kOne ? SbElem::kGhost : a;
}

constexpr bool nu_equiv(SbElem a, SbElem b) { return nu(a) == nu(b); }

constexpr bool is_ghost_or_zero(SbElem a) { return a != SbElem::kOne; }

constexpr bool sb_less(SbElem a, SbElem b) {
  return static_cast<std::uint8_t>(a) < static_cast<std::uint8_t>(b);
}

// Text tokens for the file formats: "0", "1", "v". Case sensitive.
char sb_to_char(SbElem a);
SbElem sb_from_token(std::string_view token);

// ---------------------------------------------------------------------------
// Bipotent semirings and their supertropicalization.
// ---------------------------------------------------------------------------

// A bipotent semiring: a + b always equals a or b, so addition is a total
// order with the zero as least element.
template <class R>
concept BipotentSemiring = requires(typename R::Value a, typename R::Value b) {
  { R::zero() } -> std::convertible_to<typename R::Value>;
  { R::one() } -> std::convertible_to<typename R::Value>;
  { R::add(a, b) } -> std::convertible_to<typename R::Value>;
  { R::mul(a, b) } -> std::convertible_to<typename R::Value>;
  { R::less(a, b) } -> std::convertible_to<bool>;
  { R::equal(a, b) } -> std::convertible_to<bool>;
};

// The two-element boolean semiring. Note 1 + 1 = 1 here, so this is a
// different arithmetic from the superboolean one, not a sub-semiring of it.
struct BooleanSemiring {
  using Value = bool;
  static constexpr Value zero() { return false; }
  static constexpr Value one() { return true; }
  static constexpr Value add(Value a, Value b) { return a || b; }
  static constexpr Value mul(Value a, Value b) { return a && b; }
  static constexpr bool less(Value a, Value b) { return !a && b; }
  static constexpr bool equal(Value a, Value b) { return a == b; }
};

// Exact rational with normalized sign and gcd-reduced terms. Enough for the
// max-plus instance, where multiplication is rational addition.
struct Rational {
  long long num = 0;
  long long den = 1;

  constexpr Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend bool operator==(Rational a, Rational b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(Rational a, Rational b) {
    return a.num * b.den < b.num * a.den;
  }
};

// Max-plus over the rationals with a formal -infinity as the zero. Rationals
// rather than reals keep equality exact.
struct MaxPlusRationalSemiring {
  struct Value {
    bool finite = false;  // false encodes -infinity
    Rational r;

    friend bool operator==(const Value& a, const Value& b) {
      if (a.finite != b.finite) return false;
      return !a.finite || a.r == b.r;
    }
  };

  static Value zero() { return Value{}; }
  static Value one() { return Value{true, Rational(0)}; }
  static Value finite(Rational r) { return Value{true, r}; }
  static Value add(const Value& a, const Value& b) { return less(a, b) ? b : a; }
  static Value mul(const Value& a, const Value& b) {
    if (!a.finite || !b.finite) return zero();
    return Value{true, a.r + b.r};
  }
  static bool less(const Value& a, const Value& b) {
    if (!a.finite) return b.finite;
    if (!b.finite) return false;
    return a.r < b.r;
  }
  static bool equal(const Value& a, const Value& b) { return a == b; }
};

enum class Sort : std::uint8_t { kZero, kTangible, kGhost };

// Supertropicalization T(R) of a bipotent semiring R: a tangible and a ghost
// copy of R \ {0} glued over a shared zero. Addition compares ghost images
// and collapses ties to a ghost; multiplication is ghost-absorbing.
template <BipotentSemiring R>
struct Supertropical {
  using BaseValue = typename R::Value;

  struct Elem {
    Sort sort = Sort::kZero;
    BaseValue value = R::zero();  // ignored when sort == kZero

    friend bool operator==(const Elem& a, const Elem& b) {
      if (a.sort != b.sort) return false;
      return a.sort == Sort::kZero || R::equal(a.value, b.value);
    }
  };

  static Elem zero() { return Elem{}; }
  static Elem one() { return tangible(R::one()); }

  static Elem tangible(BaseValue v) {
    if (R::equal(v, R::zero()))
      fail(ErrorCode::kInvalidArgument, "tangible value must be nonzero");
    return Elem{Sort::kTangible, v};
  }

  static Elem ghost(BaseValue v) {
    if (R::equal(v, R::zero()))
      fail(ErrorCode::kInvalidArgument, "ghost value must be nonzero");
    return Elem{Sort::kGhost, v};
  }

  static Elem nu(const Elem& a) {
    return a.sort == Sort::kTangible ? Elem{Sort::kGhost, a.value} : a;
  }

  // Compares nu-images: zero below everything, ghosts ordered by R.
  static int nu_compare(const Elem& a, const Elem& b) {
    bool az = a.sort == Sort::kZero, bz = b.sort == Sort::kZero;
    if (az || bz) return az && bz ? 0 : (az ? -1 : 1);
    if (R::less(a.value, b.value)) return -1;
    if (R::less(b.value, a.value)) return 1;
    return 0;
  }

  static Elem add(const Elem& a, const Elem& b) {
    int c = nu_compare(a, b);
    if (c > 0) return a;
    if (c < 0) return b;
    return nu(a);  // supertropicality: equal nu-images collapse to a ghost
  }

  static Elem mul(const Elem& a, const Elem& b) {
    if (a.sort == Sort::kZero || b.sort == Sort::kZero) return zero();
    BaseValue v = R::mul(a.value, b.value);
    if (R::equal(v, R::zero())) return zero();
    Sort s = (a.sort == Sort::kGhost || b.sort == Sort::kGhost)
                 ? Sort::kGhost
                 : Sort::kTangible;
    return Elem{s, v};
  }
};

// The canonical embedding of the superboolean scalars into any
// supertropicalized semiring: 1 -> one, 1^nu -> ghost(one), 0 -> zero.
template <BipotentSemiring R>
typename Supertropical<R>::Elem embed_sb(SbElem a) {
  switch (a) {
    case SbElem::kZero:
      return Supertropical<R>::zero();
    case SbElem::kOne:
      return Supertropical<R>::one();
    default:
      return Supertropical<R>::ghost(R::one());
  }
}

using SuperBooleanModel = Supertropical<BooleanSemiring>;

// The bijection witnessing that T(boolean) is the superboolean arithmetic.
SbElem sb_of_model(const SuperBooleanModel::Elem& e);
SuperBooleanModel::Elem model_of_sb(SbElem a);

}  // namespace sbrep

#endif  // SBREP_SEMIRING_HPP_
