#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "realsets/family.hpp"
#include "realsets/series.hpp"

namespace realsets {

/// Element of a finite lattice, identified by its position in the lattice.
struct LatticePoint {
  std::size_t index = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// A finite lattice given by its order relation. Finite lattices have all
/// suprema, so each is a countable-sup series monoid.
class FiniteLattice {
 public:
  /// `leq[i][j]` says i <= j; must be a partial order with all binary joins and a bottom.
  FiniteLattice(std::string name, std::vector<std::vector<bool>> leq,
                std::vector<std::string> labels);

  static FiniteLattice boolean();
  static FiniteLattice chain(std::size_t length);

  const std::string& name() const { return name_; }
  std::size_t size() const { return leq_.size(); }
  LatticePoint bottom() const { return {bottom_}; }
  LatticePoint top() const { return {top_}; }
  bool leq(LatticePoint a, LatticePoint b) const { return leq_[a.index][b.index]; }
  LatticePoint join(LatticePoint a, LatticePoint b) const { return {join_[a.index][b.index]}; }
  const std::string& label(LatticePoint a) const { return labels_[a.index]; }
  LatticePoint parse(const std::string& label) const;

 private:
  std::string name_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<std::size_t>> join_;
  std::vector<std::string> labels_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Supremum of a family. Lazy scans stop at the top element; a constant tail
/// or support bound makes the answer exact, otherwise the result is partial.
Partial<LatticePoint> sup_lattice_sum(const FiniteLattice& lattice, const Family<LatticePoint>& fam,
                                      std::size_t scan_budget = 4096);

/// (L, ⊥, ⋁) as an idempotent series monoid.
SeriesMonoid<LatticePoint> sup_lattice_instance(std::shared_ptr<const FiniteLattice> lattice,
                                                std::size_t scan_budget = 4096);

}  // namespace realsets
