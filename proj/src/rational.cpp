#include "rgc/rational.hpp"

#include <utility>

namespace rgc {

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  reduce();
}

void Rat::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Int Rat::floor() const {
  Int q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) --q;
  return q;
}

Int Rat::ceil() const {
  Int q = num_ / den_;
  if (num_ > 0 && q * den_ != num_) ++q;
  return q;
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
  // Denominators are positive, so cross-multiplication preserves order.
  Int lhs = num_ * o.den_;
  Int rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rat Rat::parse(std::string_view s) {
  auto strip = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  auto parse_int = [&](std::string_view v) -> Int {
    v = strip(v);
    if (v.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t i = 0;
    if (v[0] == '+' || v[0] == '-') i = 1;
    if (i == v.size()) throw std::invalid_argument("sign without digits in rational literal");
    for (std::size_t j = i; j < v.size(); ++j)
      if (v[j] < '0' || v[j] > '9')
        throw std::invalid_argument("malformed rational literal: " + std::string(v));
    if (v[0] == '+') v.remove_prefix(1);
    return Int(std::string(v));
  };
  s = strip(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational literal with zero denominator");
  return Rat(std::move(num), std::move(den));
}

std::string Rat::str() const {
  std::string out = num_.str();
  if (den_ != 1) {
    out += '/';
    out += den_.str();
  }
  return out;
}

double Rat::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace rgc
