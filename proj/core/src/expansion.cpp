#include "realsets/expansion.hpp"

#include <algorithm>
#include <stdexcept>

namespace realsets {

DyadicExt BinaryExpansion::evaluate() const {
  if (integer.is_infinite()) return DyadicExt::infinity();
  DyadicExt total(integer.value());
  for (std::size_t m : positions) total += DyadicExt::pow2(-static_cast<std::int64_t>(m));
  if (ones_from) total += DyadicExt::pow2(1 - static_cast<std::int64_t>(*ones_from));
  return total;
}

LowerReal BinaryExpansion::evaluate_lower() const {
  if (!ones_from) return LowerReal(evaluate());
  BinaryExpansion head = *this;
  head.ones_from.reset();
  DyadicExt base = head.evaluate();
  if (base.is_infinite()) return LowerReal::infinity();
  std::size_t q = *ones_from;
  // Bits q..k+1 of the tail: 2^(1-q) - 2^-(k+1), so the error is 2^-(k+1).
  return LowerReal::from_bounds(
      [base, q](std::size_t k) {
        if (k + 1 < q) return base;
        DyadicExt all = DyadicExt::pow2(1 - static_cast<std::int64_t>(q));
        return base + *DyadicExt::pow2(-static_cast<std::int64_t>(k + 1)).subtract_from(all);
      },
      true);
}

std::string BinaryExpansion::str() const {
  std::string bits;
  std::string pos;
  std::size_t last = positions.empty() ? 0 : positions.back();
  std::size_t shown = last;
  if (ones_from) shown = std::max(last, *ones_from + 2);
  for (std::size_t m = 1; m <= shown; ++m) {
    bool one = std::binary_search(positions.begin(), positions.end(), m) ||
               (ones_from && m >= *ones_from);
    bits += one ? '1' : '0';
    if (one) pos += (pos.empty() ? "" : ",") + std::to_string(m);
  }
  bool open = ones_from || known_until;
  if (bits.empty()) bits = "0";
  std::string out = integer.str() + " + 0." + bits + (open ? "…" : "");
  out += " pos:[" + pos;
  if (open) out += pos.empty() ? "…" : ",…";
  return out + "]";
}

BinaryExpansion BinaryExpansion::from_bits(ExtNat integer, const std::vector<bool>& bits) {
  BinaryExpansion x;
  x.integer = integer;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) x.positions.push_back(i + 1);
  }
  x.known_until = bits.size();
  return x;
}

BinaryExpansion binary_expand(const DyadicExt& x, bool nonterminating) {
  if (x.is_infinite()) throw std::domain_error("binary_expand: ∞ has no binary expansion");
  BinaryExpansion out;
  mpz_class whole = x.integer_part();
  if (!whole.fits_ulong_p()) throw std::overflow_error("binary_expand: integer part exceeds 64 bits");
  out.integer = ExtNat(static_cast<std::uint64_t>(whole.get_ui()));
  const mpz_class& m = x.mantissa();
  std::uint64_t e = x.exponent();
  for (std::uint64_t bit = 0; bit < e; ++bit) {
    // fraction bit at position e - bit
    if (mpz_tstbit(m.get_mpz_t(), bit)) out.positions.push_back(e - bit);
  }
  std::reverse(out.positions.begin(), out.positions.end());
  if (!nonterminating || x.is_zero()) return out;
  // The last 1-bit becomes 0 and is followed by 1s forever.
  if (out.positions.empty()) {
    out.integer = ExtNat(out.integer.value() - 1);
    out.ones_from = 1;
  } else {
    out.ones_from = out.positions.back() + 1;
    out.positions.pop_back();
  }
  return out;
}

const std::vector<bool>& pi_fraction_bits() {
  // π - 3 = 0.001001000011111101101010100010001000010110100011000010001101001100...
  static const std::vector<bool> bits = [] {
    const char* text =
        "0010010000111111011010101000100010000101101000110000100011010011"
        "0001001100011001100010100010111000000011011100000111001101000100";
    std::vector<bool> out;
    for (const char* p = text; *p; ++p) out.push_back(*p == '1');
    return out;
  }();
  return bits;
}

}  // namespace realsets
