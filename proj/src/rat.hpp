// Copyright (c) 2026 The hypercross authors
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

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"

namespace hx {

// Exact rational scalar. Invariant: canonical form (reduced, denominator > 0).
// All arithmetic is exact; there is no rounding anywhere in the engine.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, integers embed in Q
  Rat(long num, long den);

  // Accepts "p" or "p/q" with optional leading sign; canonicalizes.
  static Rat parse(std::string_view s);

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  // Canonical text form: "p" when the denominator is 1, else "p/q" with q > 1.
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) fail(Err::invalid_argument, "rational division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  // Exact integer power, e >= 0.
  static Rat pow(const Rat& base, unsigned e);

  // Binomial coefficient C(n, k) as an exact integer value.
  static Rat binomial(unsigned n, unsigned k);

private:
  explicit Rat(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

}  // namespace hx
