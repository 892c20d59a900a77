#include "realsets/formal.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <vector>

namespace realsets {

FormalMagnitude FormalMagnitude::generator(std::size_t n, ExtNat c) {
  FormalMagnitude x;
  if (!c.is_zero()) x.coeffs[n] = c;
  return x;
}

FormalMagnitude FormalMagnitude::ones_from(std::size_t from, ExtNat c) {
  FormalMagnitude x;
  if (!c.is_zero()) x.tail = Tail{from, c};
  return x;
}

FormalMagnitude FormalMagnitude::infinity() { return generator(0, ExtNat::infinity()); }

bool FormalMagnitude::is_infinite_form() const {
  return !tail && coeffs.size() == 1 && coeffs.begin()->first == 0 &&
         coeffs.begin()->second.is_infinite();
}

bool operator==(const FormalMagnitude& a, const FormalMagnitude& b) {
  if (a.coeffs != b.coeffs || a.tail.has_value() != b.tail.has_value()) return false;
  return !a.tail || (a.tail->from == b.tail->from && a.tail->coeff == b.tail->coeff);
}

std::string FormalMagnitude::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [n, c] : coeffs) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(n) + ":" + c.str();
  }
  out += "}";
  if (tail) out += " tail " + std::to_string(tail->from) + ":" + tail->coeff.str();
  return out;
}

FormalMagnitude FormalMagnitude::parse(std::string_view text) {
  auto fail = [&]() -> FormalMagnitude {
    throw std::invalid_argument("not a formal magnitude: '" + std::string(text) + "'");
  };
  std::string body;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) body += ch;
  }
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') return fail();
  body = body.substr(1, body.size() - 2);
  FormalMagnitude x;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos) return fail();
    ExtNat n = ExtNat::parse(item.substr(0, colon));
    if (n.is_infinite()) return fail();
    ExtNat c = ExtNat::parse(item.substr(colon + 1));
    if (x.coeffs.count(n.value())) return fail();
    if (!c.is_zero()) x.coeffs[n.value()] = c;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return x;
}

DyadicExt formal_value(const FormalMagnitude& x) {
  DyadicExt total;
  for (const auto& [n, c] : x.coeffs) {
    if (c.is_infinite()) return DyadicExt::infinity();
    total += DyadicExt(mpz_class(static_cast<unsigned long>(c.value())), n);
  }
  if (x.tail) {
    if (x.tail->coeff.is_infinite()) return DyadicExt::infinity();
    // c·(2^-N + 2^-(N+1) + ...) = c·2^(1-N)
    DyadicExt c(x.tail->coeff.value());
    total += c * DyadicExt::pow2(1 - static_cast<std::int64_t>(x.tail->from));
  }
  return total;
}

FormalMagnitude formal_normalize(const FormalMagnitude& x) {
  for (const auto& [n, c] : x.coeffs) {
    if (c.is_infinite()) return FormalMagnitude::infinity();
  }
  if (x.tail && x.tail->coeff.is_infinite()) return FormalMagnitude::infinity();

  std::size_t top = x.coeffs.empty() ? 0 : x.coeffs.rbegin()->first;
  if (x.tail) top = std::max(top, x.tail->from);
  std::vector<mpz_class> c(top + 1);
  for (const auto& [n, v] : x.coeffs) c[n] += static_cast<unsigned long>(v.value());
  if (x.tail) {
    // c·(χ_N + χ_{N+1} + ...) ∼ c·χ_{N-1} ∼ 2c·χ_N; at N = 0 the tail is 2c·χ₀.
    c[x.tail->from] += 2 * mpz_class(static_cast<unsigned long>(x.tail->coeff.value()));
  }
  // 2χₙ ∼ χₙ₋₁: carry pairs toward χ₀.
  for (std::size_t n = top; n > 0; --n) {
    mpz_class carry;
    mpz_fdiv_q_2exp(carry.get_mpz_t(), c[n].get_mpz_t(), 1);
    c[n - 1] += carry;
    c[n] -= 2 * carry;
  }
  if (!c[0].fits_ulong_p() ||
      c[0].get_ui() > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("formal_normalize: integer part exceeds 64 bits");
  }
  FormalMagnitude out;
  for (std::size_t n = 0; n <= top; ++n) {
    if (c[n] != 0) out.coeffs[n] = ExtNat(static_cast<std::uint64_t>(c[n].get_ui()));
  }
  return out;
}

FormalMagnitude formal_halve(const FormalMagnitude& x) {
  FormalMagnitude out;
  for (const auto& [n, c] : x.coeffs) out.coeffs[n + 1] = c;
  if (x.tail) out.tail = FormalMagnitude::Tail{x.tail->from + 1, x.tail->coeff};
  return out;
}

bool formal_congruent(const FormalMagnitude& a, const FormalMagnitude& b) {
  return formal_normalize(a) == formal_normalize(b);
}

}  // namespace realsets
