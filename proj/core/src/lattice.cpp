#include "realsets/lattice.hpp"

#include <stdexcept>

namespace realsets {

FiniteLattice::FiniteLattice(std::string name, std::vector<std::vector<bool>> leq,
                             std::vector<std::string> labels)
    : name_(std::move(name)), leq_(std::move(leq)), labels_(std::move(labels)) {
  const std::size_t n = leq_.size();
  if (n == 0 || labels_.size() != n) throw std::invalid_argument("FiniteLattice: bad size");
  for (const auto& row : leq_) {
    if (row.size() != n) throw std::invalid_argument("FiniteLattice: order is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_[i][i]) throw std::invalid_argument("FiniteLattice: order is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i]) {
        throw std::invalid_argument("FiniteLattice: order is not antisymmetric");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (leq_[i][j] && leq_[j][k] && !leq_[i][k]) {
          throw std::invalid_argument("FiniteLattice: order is not transitive");
        }
      }
    }
  }
  join_.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool found = false;
      for (std::size_t u = 0; u < n && !found; ++u) {
        if (!leq_[a][u] || !leq_[b][u]) continue;
        bool least = true;
        for (std::size_t v = 0; v < n && least; ++v) {
          if (leq_[a][v] && leq_[b][v] && !leq_[u][v]) least = false;
        }
        if (least) {
          join_[a][b] = u;
          found = true;
        }
      }
      if (!found) throw std::invalid_argument("FiniteLattice: missing join");
    }
  }
  bottom_ = join_[0][0];
  top_ = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bottom_ = leq_[i][bottom_] ? i : bottom_;
    top_ = join_[top_][i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_[bottom_][i]) throw std::invalid_argument("FiniteLattice: no bottom element");
  }
}

FiniteLattice FiniteLattice::boolean() {
  return FiniteLattice("bool", {{true, true}, {false, true}}, {"bot", "top"});
}

FiniteLattice FiniteLattice::chain(std::size_t length) {
  std::vector<std::vector<bool>> leq(length, std::vector<bool>(length, false));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < length; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = i; j < length; ++j) leq[i][j] = true;
  }
  return FiniteLattice("chain" + std::to_string(length), std::move(leq), std::move(labels));
}

LatticePoint FiniteLattice::parse(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return {i};
  }
  throw std::invalid_argument("no element '" + label + "' in lattice " + name_);
}

Partial<LatticePoint> sup_lattice_sum(const FiniteLattice& lattice, const Family<LatticePoint>& fam,
                                      std::size_t scan_budget) {
  LatticePoint acc = lattice.bottom();
  if (fam.is_finite_support()) {
    for (const auto& e : fam.entries()) acc = lattice.join(acc, e.value);
    return {acc};
  }
  LazyTraits t = fam.traits();
  std::size_t end = scan_budget;
  bool exact = false;
  if (t.support_bound) {
    end = *t.support_bound;
    exact = true;
  } else if (t.constant_from) {
    end = *t.constant_from + 1;
    exact = true;
  }
  for (std::size_t i = 0; i < end; ++i) {
    acc = lattice.join(acc, fam.at(i));
    if (acc == lattice.top()) return {acc};
  }
  return {acc, !exact};
}

SeriesMonoid<LatticePoint> sup_lattice_instance(std::shared_ptr<const FiniteLattice> lattice,
                                                std::size_t scan_budget) {
  SeriesMonoid<LatticePoint> inst;
  inst.name = lattice->name();
  inst.zero = lattice->bottom();
  inst.is_zero = [bottom = lattice->bottom()](const LatticePoint& x) { return x == bottom; };
  inst.sum = [lattice, scan_budget](const Family<LatticePoint>& fam) {
    return sup_lattice_sum(*lattice, fam, scan_budget);
  };
  inst.eq_at = [](const LatticePoint& x, const LatticePoint& y, ApproxLevel) {
    return x == y ? Verdict::equal : Verdict::unequal;
  };
  inst.same = [](const LatticePoint& x, const LatticePoint& y) { return x == y; };
  inst.show = [lattice](const LatticePoint& x) { return lattice->label(x); };
  inst.subtract = [lattice](const LatticePoint& a, const LatticePoint& b) -> Witness<LatticePoint> {
    using Status = Witness<LatticePoint>::Status;
    if (lattice->leq(a, b)) return {Status::found, b};
    return {Status::disproved, std::nullopt};
  };
  inst.enumerate = [lattice](std::size_t i) { return LatticePoint{i % lattice->size()}; };
  inst.idempotent = true;
  return inst;
}

}  // namespace realsets
