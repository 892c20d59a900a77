#include "realsets/paradoxical.hpp"

#include <map>
#include <stdexcept>

namespace realsets {

namespace {

bool is_dyadic(const mpq_class& q) { return mpz_popcount(q.get_den().get_mpz_t()) == 1; }

mpz_class pow2(unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

/// Fraction bits of a dyadic fraction 0 <= f < 1 with denominator 2^width.
std::string dyadic_bits(const mpq_class& f, unsigned long width) {
  mpz_class scaled = f.get_num() * (pow2(width) / f.get_den());
  std::string bits = scaled.get_str(2);
  return std::string(width - std::min<std::size_t>(width, bits.size()), '0') +
         (scaled == 0 ? "" : bits);
}

mpz_class parse_bits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) return 0;
  for (char ch : digits) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("not a binary literal: '" + std::string(whole) + "'");
    }
  }
  return mpz_class(std::string(digits), 2);
}

}  // namespace

ZPElem ZPElem::terminating(const mpq_class& value) {
  if (value < 0) throw std::invalid_argument("paradoxical reals are non-negative");
  if (value == 0) return {};
  if (!is_dyadic(value)) {
    throw std::invalid_argument("S holds dyadic values only, got " + value.get_str());
  }
  return {Kind::S, value};
}

ZPElem ZPElem::nonterminating(const mpq_class& value) {
  if (value < 0) throw std::invalid_argument("paradoxical reals are non-negative");
  if (value == 0) return {};
  return {Kind::X, value};
}

std::string ZPElem::str() const {
  if (kind_ == Kind::zero) return "0";
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
  mpq_class frac = value_ - mpq_class(whole);
  if (kind_ == Kind::S) {
    unsigned long width = mpz_sizeinbase(value_.get_den().get_mpz_t(), 2) - 1;
    std::string bits = width == 0 ? "0" : dyadic_bits(frac, width);
    return "t:" + whole.get_str(2) + "." + bits;
  }
  if (is_dyadic(value_)) {
    // Replace the last 1-bit by 0 and continue with 1s.
    unsigned long width = mpz_sizeinbase(value_.get_den().get_mpz_t(), 2) - 1;
    mpq_class lowered = value_ - mpq_class(1, pow2(width));
    mpz_class w;
    mpz_fdiv_q(w.get_mpz_t(), lowered.get_num().get_mpz_t(), lowered.get_den().get_mpz_t());
    std::string bits = width == 0 ? "" : dyadic_bits(lowered - mpq_class(w), width);
    return "r:" + w.get_str(2) + "." + bits + "(1)";
  }
  // Long division; the first repeated remainder closes the period.
  const mpz_class& den = frac.get_den();
  mpz_class rem = frac.get_num();
  std::map<mpz_class, std::size_t> seen;
  std::string digits;
  while (!seen.count(rem)) {
    seen[rem] = digits.size();
    rem *= 2;
    if (rem >= den) {
      digits += '1';
      rem -= den;
    } else {
      digits += '0';
    }
  }
  std::size_t start = seen[rem];
  return "r:" + whole.get_str(2) + "." + digits.substr(0, start) + "(" + digits.substr(start) + ")";
}

ZPElem ZPElem::parse(std::string_view text) {
  if (text == "0") return {};
  auto fail = [&](const std::string& why) -> ZPElem {
    throw std::invalid_argument("bad paradoxical literal '" + std::string(text) + "': " + why);
  };
  if (text.size() < 3 || text[1] != ':') return fail("expected t:, r: or 0");
  char tag = text[0];
  std::string_view body = text.substr(2);
  std::size_t dot = body.find('.');
  std::string_view whole = body.substr(0, dot);
  std::string_view rest = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (whole.empty()) return fail("missing integer part");
  mpq_class value(parse_bits(whole, text));
  if (tag == 't') {
    if (rest.find('(') != std::string_view::npos) return fail("terminating literal with a period");
    value += mpq_class(parse_bits(rest, text), pow2(rest.size()));
    value.canonicalize();
    return terminating(value);
  }
  if (tag != 'r') return fail("unknown tag");
  std::size_t open = rest.find('(');
  if (open == std::string_view::npos || rest.back() != ')') return fail("missing (period)");
  std::string_view pre = rest.substr(0, open);
  std::string_view period = rest.substr(open + 1, rest.size() - open - 2);
  if (period.empty()) return fail("empty period");
  mpz_class block = parse_bits(period, text);
  if (block == 0) return fail("an all-zero period is a terminating expansion");
  value += mpq_class(parse_bits(pre, text), pow2(pre.size()));
  value += mpq_class(block, (pow2(period.size()) - 1) * pow2(pre.size()));
  value.canonicalize();
  return nonterminating(value);
}

ZPElem zp_k(const ZPElem& s) {
  if (s.kind() != ZPElem::Kind::S) throw std::invalid_argument("k is defined on S only, got " + s.str());
  return ZPElem::nonterminating(s.value());
}

ZPElem zp_add(const ZPElem& a, const ZPElem& b) {
  using Kind = ZPElem::Kind;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  mpq_class total = a.value() + b.value();
  if (a.kind() == Kind::S && b.kind() == Kind::S) return ZPElem::terminating(total);
  return ZPElem::nonterminating(total);
}

bool zp_leq(const ZPElem& a, const ZPElem& b) {
  using Kind = ZPElem::Kind;
  if (a.is_zero() || a == b) return true;
  if (b.is_zero()) return false;
  // u = 0 is covered by a == b; a non-zero u has value b - a > 0, and an S
  // result needs both summands in S. X contains every positive rational.
  if (b.kind() == Kind::S && a.kind() != Kind::S) return false;
  return a.value() < b.value();
}

}  // namespace realsets
