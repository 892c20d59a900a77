#include "realsets/dyadic.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace realsets {

namespace {

mpz_class shifted_left(const mpz_class& m, std::uint64_t k) {
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), m.get_mpz_t(), k);
  return out;
}

std::uint64_t parse_natural(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("bad " + std::string(what) + " in dyadic literal: '" +
                                std::string(text) + "'");
  }
  return value;
}

mpz_class parse_big_natural(std::string_view text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("bad numerator in dyadic literal: '" + std::string(text) + "'");
  }
  return mpz_class(std::string(text), 10);
}

}  // namespace

DyadicExt::DyadicExt(mpz_class mantissa, std::uint64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (mantissa_ < 0) {
    throw std::invalid_argument("DyadicExt mantissa must be non-negative");
  }
  normalize();
}

void DyadicExt::normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  std::uint64_t zeros = mpz_scan1(mantissa_.get_mpz_t(), 0);
  std::uint64_t drop = zeros < exponent_ ? zeros : exponent_;
  if (drop > 0) {
    mpz_fdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), drop);
    exponent_ -= drop;
  }
}

DyadicExt DyadicExt::infinity() {
  DyadicExt x;
  x.infinite_ = true;
  return x;
}

DyadicExt DyadicExt::pow2(std::int64_t k) {
  if (k >= 0) return DyadicExt(shifted_left(1, static_cast<std::uint64_t>(k)), 0);
  return DyadicExt(1, static_cast<std::uint64_t>(-k));
}

DyadicExt DyadicExt::floor_of(const mpq_class& q, std::uint64_t bits) {
  if (q < 0) throw std::invalid_argument("DyadicExt::floor_of: negative rational");
  mpz_class num = shifted_left(q.get_num(), bits);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return DyadicExt(out, bits);
}

DyadicExt DyadicExt::ceil_of(const mpq_class& q, std::uint64_t bits) {
  if (q < 0) throw std::invalid_argument("DyadicExt::ceil_of: negative rational");
  mpz_class num = shifted_left(q.get_num(), bits);
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return DyadicExt(out, bits);
}

DyadicExt DyadicExt::from_rational(const mpq_class& q) {
  if (q < 0) throw std::invalid_argument("DyadicExt::from_rational: negative rational");
  const mpz_class& den = q.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) {
    throw std::invalid_argument("DyadicExt::from_rational: denominator is not a power of two");
  }
  return DyadicExt(q.get_num(), mpz_scan1(den.get_mpz_t(), 0));
}

DyadicExt DyadicExt::parse(std::string_view text) {
  if (text == "inf" || text == "∞") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return DyadicExt(parse_big_natural(text), 0);
  mpz_class m = parse_big_natural(text.substr(0, slash));
  std::string_view den = text.substr(slash + 1);
  if (den.starts_with("2^")) {
    return DyadicExt(m, parse_natural(den.substr(2), "exponent"));
  }
  std::uint64_t d = parse_natural(den, "denominator");
  if (d == 0 || (d & (d - 1)) != 0) {
    throw std::invalid_argument("dyadic denominator must be a power of two: '" +
                                std::string(text) + "'");
  }
  std::uint64_t e = 0;
  while ((std::uint64_t{1} << e) != d) ++e;
  return DyadicExt(m, e);
}

mpq_class DyadicExt::to_rational() const {
  if (infinite_) throw std::domain_error("DyadicExt::to_rational: value is infinite");
  mpq_class q(mantissa_, shifted_left(1, exponent_));
  q.canonicalize();
  return q;
}

mpz_class DyadicExt::integer_part() const {
  if (infinite_) throw std::domain_error("DyadicExt::integer_part: value is infinite");
  mpz_class out;
  mpz_fdiv_q_2exp(out.get_mpz_t(), mantissa_.get_mpz_t(), exponent_);
  return out;
}

DyadicExt DyadicExt::scaled(std::int64_t k) const {
  if (infinite_ || mantissa_ == 0 || k == 0) return *this;
  if (k < 0) return DyadicExt(mantissa_, exponent_ + static_cast<std::uint64_t>(-k));
  auto up = static_cast<std::uint64_t>(k);
  if (up <= exponent_) return DyadicExt(mantissa_, exponent_ - up);
  return DyadicExt(shifted_left(mantissa_, up - exponent_), 0);
}

DyadicExt DyadicExt::truncated(std::uint64_t bits) const {
  if (infinite_ || exponent_ <= bits) return *this;
  mpz_class out;
  mpz_fdiv_q_2exp(out.get_mpz_t(), mantissa_.get_mpz_t(), exponent_ - bits);
  return DyadicExt(out, bits);
}

std::optional<DyadicExt> DyadicExt::subtract_from(const DyadicExt& b) const {
  if (b.infinite_) return infinite_ ? DyadicExt{} : infinity();
  if (infinite_) return std::nullopt;
  if (*this > b) return std::nullopt;
  std::uint64_t e = std::max(exponent_, b.exponent_);
  mpz_class diff = shifted_left(b.mantissa_, e - b.exponent_) - shifted_left(mantissa_, e - exponent_);
  return DyadicExt(diff, e);
}

DyadicExt operator+(const DyadicExt& a, const DyadicExt& b) {
  if (a.infinite_ || b.infinite_) return DyadicExt::infinity();
  std::uint64_t e = std::max(a.exponent_, b.exponent_);
  return DyadicExt(shifted_left(a.mantissa_, e - a.exponent_) +
                       shifted_left(b.mantissa_, e - b.exponent_),
                   e);
}

DyadicExt operator*(const DyadicExt& a, const DyadicExt& b) {
  if (a.is_zero() || b.is_zero()) return DyadicExt{};
  if (a.infinite_ || b.infinite_) return DyadicExt::infinity();
  return DyadicExt(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

bool operator==(const DyadicExt& a, const DyadicExt& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
}

std::strong_ordering operator<=>(const DyadicExt& a, const DyadicExt& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  std::uint64_t e = std::max(a.exponent_, b.exponent_);
  int c = cmp(shifted_left(a.mantissa_, e - a.exponent_), shifted_left(b.mantissa_, e - b.exponent_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string DyadicExt::str() const {
  if (infinite_) return "inf";
  if (exponent_ == 0) return mantissa_.get_str();
  if (exponent_ <= 20) {
    return mantissa_.get_str() + "/" + std::to_string(std::uint64_t{1} << exponent_);
  }
  return mantissa_.get_str() + "/2^" + std::to_string(exponent_);
}

std::ostream& operator<<(std::ostream& os, const DyadicExt& x) { return os << x.str(); }

std::uint64_t ceil_log2(const mpz_class& n) {
  if (n <= 1) return 0;
  mpz_class m = n - 1;
  return mpz_sizeinbase(m.get_mpz_t(), 2);
}

std::uint64_t ceil_log2(std::uint64_t n) {
  std::uint64_t c = 0;
  while (c < 64 && (std::uint64_t{1} << c) < n) ++c;
  return c;
}

}  // namespace realsets
