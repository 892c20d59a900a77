#include "realsets/extnat.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace realsets {

std::uint64_t ExtNat::value() const {
  if (infinite_) throw std::domain_error("ExtNat::value: infinite");
  return value_;
}

ExtNat operator+(ExtNat a, ExtNat b) {
  if (a.infinite_ || b.infinite_) return ExtNat::infinity();
  if (a.value_ > std::numeric_limits<std::uint64_t>::max() - b.value_) {
    throw std::overflow_error("ExtNat addition overflows 64 bits");
  }
  return ExtNat(a.value_ + b.value_);
}

ExtNat operator*(ExtNat a, ExtNat b) {
  if (a.is_zero() || b.is_zero()) return ExtNat(0);
  if (a.infinite_ || b.infinite_) return ExtNat::infinity();
  if (a.value_ > std::numeric_limits<std::uint64_t>::max() / b.value_) {
    throw std::overflow_error("ExtNat multiplication overflows 64 bits");
  }
  return ExtNat(a.value_ * b.value_);
}

std::string ExtNat::str() const { return infinite_ ? "inf" : std::to_string(value_); }

ExtNat ExtNat::parse(std::string_view text) {
  if (text == "inf" || text == "∞") return infinity();
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an extended natural: '" + std::string(text) + "'");
  }
  return ExtNat(n);
}

}  // namespace realsets
