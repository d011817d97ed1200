#pragma once

#include <compare>
#include <string>

#include "snc/rational.hpp"

namespace snc {

/// c0 + c1·ε + c2·ε² for a symbolic positive infinitesimal ε. Ordering is
/// lexicographic on (c0, c1, c2); products are truncated at degree 2.
struct PerturbedRational {
  Rational c0;
  Rational c1;
  Rational c2;

  PerturbedRational() = default;
  PerturbedRational(Rational a0, Rational a1 = 0, Rational a2 = 0)
      : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)) {}

  static PerturbedRational epsilon() { return {0, 1, 0}; }

  PerturbedRational& operator+=(const PerturbedRational& o) {
    c0 += o.c0;
    c1 += o.c1;
    c2 += o.c2;
    return *this;
  }
  PerturbedRational& operator-=(const PerturbedRational& o) {
    c0 -= o.c0;
    c1 -= o.c1;
    c2 -= o.c2;
    return *this;
  }

  friend PerturbedRational operator+(PerturbedRational a,
                                     const PerturbedRational& b) {
    return a += b;
  }
  friend PerturbedRational operator-(PerturbedRational a,
                                     const PerturbedRational& b) {
    return a -= b;
  }
  friend PerturbedRational operator-(const PerturbedRational& a) {
    return {-a.c0, -a.c1, -a.c2};
  }
  friend PerturbedRational operator*(const PerturbedRational& a,
                                     const PerturbedRational& b) {
    return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0,
            a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
  }

  friend bool operator==(const PerturbedRational&,
                         const PerturbedRational&) = default;
  friend std::strong_ordering operator<=>(const PerturbedRational& a,
                                          const PerturbedRational& b) {
    if (a.c0 != b.c0) {
      return a.c0 < b.c0 ? std::strong_ordering::less
                         : std::strong_ordering::greater;
    }
    if (a.c1 != b.c1) {
      return a.c1 < b.c1 ? std::strong_ordering::less
                         : std::strong_ordering::greater;
    }
    if (a.c2 != b.c2) {
      return a.c2 < b.c2 ? std::strong_ordering::less
                         : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
};

std::string to_string(const PerturbedRational& p);

}  // namespace snc
