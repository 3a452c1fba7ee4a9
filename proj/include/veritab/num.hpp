#pragma once

// Exact rational value used for all quantity arithmetic. Backed by GMP so
// sums and means over table decimals never suffer float drift.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace veritab {

class Num {
 public:
  Num() : v_(0) {}
  explicit Num(long long n) : v_(static_cast<long>(n)) {}
  explicit Num(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses a plain decimal literal: optional sign, digits, optional fraction.
  // Group separators and '%' must be stripped by the caller's grammar.
  static std::optional<Num> parse_decimal(const std::string& text);

  Num operator+(const Num& o) const { return Num(mpq_class(v_ + o.v_)); }
  Num operator-(const Num& o) const { return Num(mpq_class(v_ - o.v_)); }
  Num operator*(const Num& o) const { return Num(mpq_class(v_ * o.v_)); }
  Num operator/(const Num& o) const { return Num(mpq_class(v_ / o.v_)); }
  Num operator-() const { return Num(mpq_class(-v_)); }

  bool operator==(const Num& o) const { return v_ == o.v_; }
  bool operator!=(const Num& o) const { return v_ != o.v_; }
  bool operator<(const Num& o) const { return v_ < o.v_; }
  bool operator<=(const Num& o) const { return v_ <= o.v_; }
  bool operator>(const Num& o) const { return v_ > o.v_; }
  bool operator>=(const Num& o) const { return v_ >= o.v_; }

  Num abs() const { return v_ < 0 ? -*this : *this; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_negative() const { return v_ < 0; }
  double to_double() const { return v_.get_d(); }
  long long to_ll() const { return static_cast<long long>(v_.get_num().get_si()); }

  // Canonical rendering: thousands separators on the integer part when
  // grouped, fractional part rounded to at most two places, trailing zeros
  // trimmed. render_fixed keeps exactly `dp` fractional digits.
  std::string render(bool grouped = true) const;
  std::string render_fixed(int dp, bool grouped = true) const;

  // Exact value key ("num/den"), safe for set membership.
  std::string key() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

}  // namespace veritab
