#pragma once

#include <cstddef>

#include "realsets/extnat.hpp"
#include "realsets/family.hpp"
#include "realsets/series.hpp"

namespace realsets {

/// Σ on ℕ∪{∞}: the finite sum for finite support without ∞, ∞ otherwise.
///
/// Lazy families are exact when a trait settles them (support bound, constant
/// tail, infinite support, unbounded) or when ∞ appears within the scan
/// budget; otherwise the result is the scanned prefix flagged partial.
Partial<ExtNat> extnat_sum(const Family<ExtNat>& fam, std::size_t scan_budget = 4096);

/// (ℕ∪{∞}, 0, Σ).
SeriesMonoid<ExtNat> extnat_instance(std::size_t scan_budget = 4096);

/// (ℕ∪{∞}, 0, sup): the countable-sup structure on the same carrier.
SeriesMonoid<ExtNat> natmax_instance(std::size_t scan_budget = 4096);

/// Supremum of a family of extended naturals; `unbounded` families are ∞.
Partial<ExtNat> natmax_sum(const Family<ExtNat>& fam, std::size_t scan_budget = 4096);

}  // namespace realsets
