#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rgc {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator, so equality is plain member comparison. All arithmetic is
/// exact; there is no floating-point fallback anywhere in the library.
///
/// Values are immutable in practice (operators return fresh objects), safe
/// for unrestricted concurrent reads.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rat(Int v) : num_(std::move(v)), den_(1) {}
  Rat(Int num, Int den);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  /// Largest integer <= value.
  Int floor() const;
  /// Smallest integer >= value.
  Int ceil() const;

  Rat operator-() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // throws std::domain_error on division by zero

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  bool operator==(const Rat& o) const = default;
  std::strong_ordering operator<=>(const Rat& o) const;

  /// Parses "p/q" or a plain integer "p". Throws std::invalid_argument on
  /// malformed input or zero denominator.
  static Rat parse(std::string_view s);

  /// Canonical form: "p" when integral, otherwise "p/q" with q > 1.
  std::string str() const;

  /// Approximate value for display only.
  double to_double() const;

 private:
  void reduce();
  Int num_;
  Int den_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Int binomial(long long n, long long k);

}  // namespace rgc
