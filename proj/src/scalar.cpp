#include "cforge/scalar.hpp"

#include <algorithm>
#include <ostream>

#include "cforge/error.hpp"

namespace cforge {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t b, std::size_t e) {
    return e > b && std::all_of(s.begin() + static_cast<long>(b),
                                s.begin() + static_cast<long>(e),
                                [](char c) { return c >= '0' && c <= '9'; });
  };
  bool ok = slash == std::string::npos
                ? digits(start, s.size())
                : digits(start, slash) && digits(slash + 1, s.size());
  if (!ok) throw ParseError("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (slash != std::string::npos) {
    mpz_class den(s.substr(s.find('/') + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  }
  r.set_str(s, 10);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

Scalar Scalar::inverse() const {
  Rational norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw NotInvertible("division by zero scalar");
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (sgn(a.im_) == 0 && sgn(b.im_) == 0) {
    re_ += a.re_ * b.re_;
    return;
  }
  re_ += a.re_ * b.re_ - a.im_ * b.im_;
  im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

std::string Scalar::to_string() const {
  if (is_real()) return format_rational(re_);
  return format_rational(re_) + (sgn(im_) < 0 ? "-" : "+") +
         format_rational(abs(im_)) + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = Scalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace cforge
