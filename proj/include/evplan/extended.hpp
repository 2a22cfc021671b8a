#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>

namespace evplan {

// Extended number over a base scalar: the scalar values plus -inf/+inf.
// Two instantiations are used throughout: Extended<long long> for exact
// integer runs and Extended<double> for floating-point runs.
//
// Arithmetic follows min-plus conventions: +inf absorbs everything in
// addition (+inf + -inf == +inf), and finite integer arithmetic saturates
// instead of overflowing.
template <typename T>
class Extended {
    static_assert(std::is_same_v<T, long long> || std::is_same_v<T, double>);

  public:
    constexpr Extended() : v_(T{}) {}
    constexpr Extended(T v) : v_(v) {}

    static constexpr Extended pos_inf() { return Extended(kPosInf); }
    static constexpr Extended neg_inf() { return Extended(kNegInf); }

    constexpr bool is_pos_inf() const { return v_ == kPosInf; }
    constexpr bool is_neg_inf() const { return v_ == kNegInf; }
    constexpr bool is_finite() const { return !is_pos_inf() && !is_neg_inf(); }

    // Finite payload; callers must check is_finite() first.
    constexpr T value() const {
        assert(is_finite());
        return v_;
    }

    // Raw representation (sentinel values included); used by serialization.
    constexpr T raw() const { return v_; }

    friend constexpr bool operator==(Extended a, Extended b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Extended a, Extended b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(Extended a, Extended b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(Extended a, Extended b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(Extended a, Extended b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(Extended a, Extended b) { return a.v_ >= b.v_; }

    friend constexpr Extended operator+(Extended a, Extended b) {
        if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        return Extended(sat_add(a.v_, b.v_));
    }

    // a - b with +inf dominance: x - (-inf) = +inf, x - (+inf) = -inf.
    friend constexpr Extended operator-(Extended a, Extended b) {
        if (a.is_pos_inf() || b.is_neg_inf()) return pos_inf();
        if (a.is_neg_inf() || b.is_pos_inf()) return neg_inf();
        return Extended(sat_add(a.v_, sat_neg(b.v_)));
    }

    friend constexpr Extended min(Extended a, Extended b) { return a < b ? a : b; }
    friend constexpr Extended max(Extended a, Extended b) { return a < b ? b : a; }

  private:
    static constexpr T kPosInf = std::is_integral_v<T>
                                     ? std::numeric_limits<T>::max()
                                     : std::numeric_limits<T>::infinity();
    static constexpr T kNegInf = std::is_integral_v<T>
                                     ? std::numeric_limits<T>::min()
                                     : -std::numeric_limits<T>::infinity();
    static constexpr T kMaxFinite =
        std::is_integral_v<T> ? std::numeric_limits<T>::max() - 1 : std::numeric_limits<T>::max();
    static constexpr T kMinFinite = std::is_integral_v<T> ? std::numeric_limits<T>::min() + 1
                                                          : std::numeric_limits<T>::lowest();

    static constexpr T sat_add(T a, T b) {
        if constexpr (std::is_integral_v<T>) {
            T r;
            if (__builtin_add_overflow(a, b, &r)) return b > 0 ? kMaxFinite : kMinFinite;
            if (r > kMaxFinite) return kMaxFinite;
            if (r < kMinFinite) return kMinFinite;
            return r;
        } else {
            return a + b;
        }
    }

    static constexpr T sat_neg(T a) {
        if constexpr (std::is_integral_v<T>) {
            return a == std::numeric_limits<T>::min() ? kMaxFinite : -a;
        } else {
            return -a;
        }
    }

    T v_;
};

// price * amount for money computations, both operands finite and >= 0.
// Saturates in integer mode.
template <typename T>
constexpr T sat_mul_nonneg(T a, T b) {
    assert(a >= 0 && b >= 0);
    if constexpr (std::is_integral_v<T>) {
        T r;
        if (__builtin_mul_overflow(a, b, &r) || r >= std::numeric_limits<T>::max()) {
            return std::numeric_limits<T>::max() - 1;
        }
        return r;
    } else {
        return a * b;
    }
}

template <typename T>
struct numeric_traits {
    // Comparison slack used by plan validation; exact in integer mode.
    static constexpr T tolerance() {
        if constexpr (std::is_integral_v<T>) {
            return 0;
        } else {
            return 1e-9;
        }
    }
};

using ExtInt = Extended<long long>;
using ExtReal = Extended<double>;

}  // namespace evplan
