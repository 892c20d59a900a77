#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realsets/family.hpp"

namespace realsets {

/// How many dyadic fraction bits (stream stages) an equality test inspects.
struct ApproxLevel {
  std::size_t bits = 32;
};

/// Tri-state equality. `unknown` is never a pass.
enum class Verdict { equal, unequal, unknown };

/// A sum together with a flag saying the scan stopped before the family was
/// exhausted, in which case `value` is only a lower bound.
template <class T>
struct Partial {
  T value;
  bool partial = false;
};

/// Outcome of a search for u with a + u = b. `undecided` comes only from
/// oracles that cannot settle the question on the given inputs.
template <class T>
struct Witness {
  enum class Status { found, disproved, budget_exhausted, undecided };
  Status status;
  std::optional<T> u;
};

/// A series monoid (A, 0, Σ) presented as data, so that several structures on
/// one carrier can coexist.
template <class T>
struct SeriesMonoid {
  std::string name;
  T zero;
  std::function<bool(const T&)> is_zero;
  std::function<Partial<T>(const Family<T>&)> sum;
  /// Symmetric; a verdict of `equal` never turns into `unequal` at higher levels.
  std::function<Verdict(const T&, const T&, ApproxLevel)> eq_at;
  /// Exact identity where it is decidable; false means "not known equal".
  std::function<bool(const T&, const T&)> same;
  std::function<std::string(const T&)> show;
  /// Optional subtraction oracle for a + u = b.
  std::function<Witness<T>(const T& a, const T& b)> subtract;
  /// Optional element enumeration used for witness search.
  std::function<T(std::size_t)> enumerate;
  bool idempotent = false;

  using Entry = typename Family<T>::Entry;

  Family<T> finite(std::vector<Entry> entries) const {
    return Family<T>::finite(std::move(entries), zero, is_zero);
  }
  /// Family with values at indices 0, 1, 2, ...
  Family<T> list(const std::vector<T>& values) const {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < values.size(); ++i) entries.push_back({i, values[i]});
    return finite(std::move(entries));
  }
  Family<T> lazy(typename Family<T>::Generator gen, LazyTraits traits = {}) const {
    return Family<T>::lazy(std::move(gen), zero, std::move(traits));
  }
  /// δ_n(a): a at index n, zero elsewhere.
  Family<T> single(std::size_t n, T a) const { return finite({{n, std::move(a)}}); }
  /// The constant family (a, a, a, ...).
  Family<T> constant(T a) const {
    LazyTraits t;
    t.constant_from = 0;
    t.infinite_support = !is_zero(a);
    return lazy([a](std::size_t) { return a; }, std::move(t));
  }
  Family<Family<T>> matrix(const std::vector<std::vector<T>>& rows) const;
};

/// Verdict of an equality used as a pass/fail step.
inline bool is_equal(Verdict v) { return v == Verdict::equal; }

/// Σ over a family.
template <class T>
Partial<T> sum(const SeriesMonoid<T>& inst, const Family<T>& fam) {
  return inst.sum(fam);
}

/// A decidable subset of ℕ: a membership predicate plus what is known about
/// its extent.
struct IndexSet {
  std::function<bool(std::size_t)> contains;
  /// All members are < bound.
  std::optional<std::size_t> bound;
  /// The set is infinite.
  bool infinite = false;

  static IndexSet of(std::vector<std::size_t> members);
  static IndexSet empty();
  static IndexSet evens();
  static IndexSet all();
};

inline IndexSet IndexSet::of(std::vector<std::size_t> members) {
  std::size_t bound = 0;
  for (std::size_t m : members) bound = std::max(bound, m + 1);
  return IndexSet{[members = std::move(members)](std::size_t n) {
                    return std::find(members.begin(), members.end(), n) != members.end();
                  },
                  bound, false};
}
inline IndexSet IndexSet::empty() { return IndexSet{[](std::size_t) { return false; }, 0, false}; }
inline IndexSet IndexSet::evens() {
  return IndexSet{[](std::size_t n) { return n % 2 == 0; }, std::nullopt, true};
}
inline IndexSet IndexSet::all() { return IndexSet{[](std::size_t) { return true; }, std::nullopt, true}; }

/// The family extended by zero off S.
template <class T>
Family<T> restrict_to(const SeriesMonoid<T>& inst, const Family<T>& fam, const IndexSet& s) {
  if (fam.is_finite_support()) {
    std::vector<typename Family<T>::Entry> kept;
    for (const auto& e : fam.entries()) {
      if (s.contains(e.index)) kept.push_back(e);
    }
    return inst.finite(std::move(kept));
  }
  LazyTraits in = fam.traits();
  LazyTraits t;
  t.support_bound = in.support_bound;
  if (s.bound && (!t.support_bound || *s.bound < *t.support_bound)) t.support_bound = s.bound;
  if (!t.support_bound && s.infinite && in.constant_from &&
      !inst.is_zero(fam.at(*in.constant_from))) {
    t.infinite_support = true;
    t.unbounded = in.unbounded;
  }
  if (t.support_bound && *t.support_bound <= 64) {
    std::vector<typename Family<T>::Entry> kept;
    for (std::size_t n = 0; n < *t.support_bound; ++n) {
      if (s.contains(n)) kept.push_back({n, fam.at(n)});
    }
    return inst.finite(std::move(kept));
  }
  T zero = inst.zero;
  return inst.lazy([fam, s, zero](std::size_t n) { return s.contains(n) ? fam.at(n) : zero; },
                   std::move(t));
}

/// Σ_{n∈S} a_n.
template <class T>
Partial<T> sum_over_subset(const SeriesMonoid<T>& inst, const Family<T>& fam, const IndexSet& s) {
  return inst.sum(restrict_to(inst, fam, s));
}

/// a + b, defined as the sum over the subset {1, 2}.
template <class T>
T binary_add(const SeriesMonoid<T>& inst, const T& a, const T& b) {
  return inst.sum(inst.finite({{1, a}, {2, b}})).value;
}

/// Searches for u with a + u = b, first through the subtraction oracle, then
/// through the element enumeration.
template <class T>
Witness<T> leq_witness(const SeriesMonoid<T>& inst, const T& a, const T& b, std::size_t budget,
                       ApproxLevel level = {}) {
  using Status = typename Witness<T>::Status;
  if (inst.subtract) {
    Witness<T> w = inst.subtract(a, b);
    if (w.status == Status::disproved) return w;
    if (w.status == Status::found && w.u &&
        is_equal(inst.eq_at(binary_add(inst, a, *w.u), b, level))) {
      return w;
    }
  }
  if (inst.enumerate) {
    for (std::size_t i = 0; i < budget; ++i) {
      T u = inst.enumerate(i);
      if (is_equal(inst.eq_at(binary_add(inst, a, u), b, level))) return {Status::found, u};
    }
  }
  return {inst.enumerate ? Status::budget_exhausted : Status::undecided, std::nullopt};
}

// ---------------------------------------------------------------------------
// Law checks

enum class Outcome { pass, fail, inconclusive, invalid };

struct Check {
  Outcome outcome = Outcome::pass;
  std::string detail;

  static Check pass() { return {}; }
  static Check fail(std::string why) { return {Outcome::fail, std::move(why)}; }
  static Check inconclusive(std::string why) { return {Outcome::inconclusive, std::move(why)}; }
  static Check invalid(std::string why) { return {Outcome::invalid, std::move(why)}; }
  bool passed() const { return outcome == Outcome::pass; }
};

const char* outcome_name(Outcome o);

/// Folds an equality verdict into a check outcome; partial sums are inconclusive.
template <class T>
Check expect_equal(const SeriesMonoid<T>& inst, const Partial<T>& lhs, const T& rhs,
                   ApproxLevel level, const std::string& what) {
  if (lhs.partial) return Check::inconclusive(what + ": scan budget exhausted");
  switch (inst.eq_at(lhs.value, rhs, level)) {
    case Verdict::equal:
      return Check::pass();
    case Verdict::unequal:
      return Check::fail(what + ": " + inst.show(lhs.value) + " != " + inst.show(rhs));
    case Verdict::unknown:
      break;
  }
  return Check::inconclusive(what + ": undecided at " + std::to_string(level.bits) + " bits");
}

/// Combines outcomes: fail dominates, then invalid, then inconclusive.
inline Check both(Check a, Check b) {
  auto rank = [](Outcome o) {
    switch (o) {
      case Outcome::fail: return 3;
      case Outcome::invalid: return 2;
      case Outcome::inconclusive: return 1;
      case Outcome::pass: return 0;
    }
    return 0;
  };
  return rank(b.outcome) > rank(a.outcome) ? b : a;
}

/// Σ_m δ(a)_{m,n} = a for column n, and the column is zero off the diagonal.
template <class T>
Check check_zero_diagonal(const SeriesMonoid<T>& inst, const T& a, std::size_t n,
                          ApproxLevel level) {
  Family<T> column = inst.single(n, a);
  for (std::size_t m = 0; m <= n + 2; ++m) {
    if (m != n && !inst.is_zero(column.at(m))) {
      return Check::fail("delta column " + std::to_string(n) + " non-zero at row " +
                         std::to_string(m));
    }
  }
  Check c = expect_equal(inst, inst.sum(column), a, level,
                         "sum of delta column " + std::to_string(n));
  Partial<T> z = inst.sum(inst.finite({}));
  return both(c, expect_equal(inst, z, inst.zero, level, "sum of zero family"));
}

/// Column family n ↦ (m ↦ a_{m,n}).
template <class T>
Family<Family<T>> transpose(const SeriesMonoid<T>& inst, const Family<Family<T>>& rows) {
  Family<T> empty = inst.finite({});
  auto is_empty = [](const Family<T>& f) {
    return f.is_finite_support() && f.entries().empty();
  };
  bool all_finite = rows.is_finite_support();
  if (all_finite) {
    for (const auto& r : rows.entries()) all_finite = all_finite && r.value.is_finite_support();
  }
  if (all_finite) {
    std::vector<std::vector<typename Family<T>::Entry>> cols;
    std::vector<std::size_t> col_index;
    for (const auto& r : rows.entries()) {
      for (const auto& e : r.value.entries()) {
        auto it = std::find(col_index.begin(), col_index.end(), e.index);
        std::size_t slot = static_cast<std::size_t>(it - col_index.begin());
        if (it == col_index.end()) {
          col_index.push_back(e.index);
          cols.emplace_back();
        }
        cols[slot].push_back({r.index, e.value});
      }
    }
    std::vector<typename Family<Family<T>>::Entry> out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out.push_back({col_index[i], inst.finite(std::move(cols[i]))});
    }
    return Family<Family<T>>::finite(std::move(out), empty, is_empty);
  }
  std::optional<std::size_t> row_end = rows.support_end();
  std::optional<std::size_t> col_end = 0;
  if (rows.is_finite_support()) {
    for (const auto& r : rows.entries()) {
      auto e = r.value.support_end();
      col_end = (e && col_end) ? std::optional(std::max(*e, *col_end)) : std::nullopt;
    }
  } else {
    col_end = std::nullopt;
  }
  LazyTraits outer;
  outer.support_bound = col_end;
  return Family<Family<T>>::lazy(
      [inst, rows, row_end](std::size_t n) {
        LazyTraits inner;
        inner.support_bound = row_end;
        return inst.lazy([rows, n](std::size_t m) { return rows.at(m).at(n); }, inner);
      },
      empty, outer);
}

/// Σ_m Σ_n a_{m,n} against Σ_n Σ_m a_{m,n}.
template <class T>
Check check_sum_swap(const SeriesMonoid<T>& inst, const Family<Family<T>>& rows,
                     ApproxLevel level) {
  bool partial = false;
  auto row_sum = [&](const Family<Family<T>>& m) {
    Family<T> sums = m.template map<T>(
        [&](const Family<T>& r) {
          Partial<T> s = inst.sum(r);
          partial = partial || s.partial;
          return s.value;
        },
        inst.zero, inst.is_zero);
    Partial<T> total = inst.sum(sums);
    total.partial = total.partial || partial;
    return total;
  };
  Partial<T> by_rows = row_sum(rows);
  Partial<T> by_cols = row_sum(transpose(inst, rows));
  if (by_rows.partial || by_cols.partial) return Check::inconclusive("double sum: scan budget exhausted");
  return expect_equal(inst, by_rows, by_cols.value, level, "row-major vs column-major double sum");
}

/// An injection ξ: ℕ → ℕ given by a finite table and a rule for n >= table size.
struct Reindex {
  enum class Tail { shift, undefined };
  std::vector<std::size_t> table;
  Tail tail = Tail::undefined;
  /// For Tail::shift: ξ(n) = n + offset when n >= table.size().
  std::size_t offset = 0;

  static Reindex identity() { return {{}, Tail::shift, 0}; }

  bool injective() const {
    std::vector<std::size_t> sorted = table;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (tail == Tail::shift) {
      for (std::size_t v : table) {
        if (v >= table.size() + offset) return false;
      }
    }
    return true;
  }
  /// Preimage of i, if i lies in the image.
  std::optional<std::size_t> preimage(std::size_t i) const {
    for (std::size_t n = 0; n < table.size(); ++n) {
      if (table[n] == i) return n;
    }
    if (tail == Tail::shift && i >= table.size() + offset) return i - offset;
    return std::nullopt;
  }
};

/// Σ_n a_{ξ(n)} = Σ_n a_n when a vanishes off the image of an injective ξ.
template <class T>
Check check_injective_reindex(const SeriesMonoid<T>& inst, const Family<T>& fam, const Reindex& xi,
                              ApproxLevel level) {
  if (!xi.injective()) return Check::invalid("reindexing map is not injective");
  if (!fam.is_finite_support()) return Check::invalid("reindex check needs finite support");
  std::vector<typename Family<T>::Entry> moved;
  for (const auto& e : fam.entries()) {
    std::optional<std::size_t> n = xi.preimage(e.index);
    if (!n) {
      return Check::invalid("family is non-zero at " + std::to_string(e.index) +
                            ", outside the image of the reindexing");
    }
    moved.push_back({*n, e.value});
  }
  return expect_equal(inst, inst.sum(inst.finite(std::move(moved))), inst.sum(fam).value, level,
                      "reindexed sum");
}

/// ℕ → ℕ×ℕ reindexing: Σ_n a_{ξ(n)} equals the double sum when the matrix
/// vanishes off the image. `inverse` locates preimages of support points.
template <class T>
Check check_pair_reindex(
    const SeriesMonoid<T>& inst, const Family<Family<T>>& rows,
    const std::function<std::pair<std::size_t, std::size_t>(std::size_t)>& xi,
    const std::function<std::optional<std::size_t>(std::size_t, std::size_t)>& inverse,
    ApproxLevel level) {
  if (!rows.is_finite_support()) return Check::invalid("pair reindex check needs finite support");
  std::vector<typename Family<T>::Entry> flat;
  for (const auto& r : rows.entries()) {
    if (!r.value.is_finite_support()) return Check::invalid("pair reindex check needs finite rows");
    for (const auto& e : r.value.entries()) {
      std::optional<std::size_t> n = inverse(r.index, e.index);
      if (!n || xi(*n) != std::pair{r.index, e.index}) {
        return Check::invalid("matrix is non-zero outside the image of the reindexing");
      }
      flat.push_back({*n, e.value});
    }
  }
  Partial<T> reindexed = inst.sum(inst.finite(std::move(flat)));
  Family<T> row_sums = rows.template map<T>(
      [&](const Family<T>& r) { return inst.sum(r).value; }, inst.zero, inst.is_zero);
  return both(check_sum_swap(inst, rows, level),
              expect_equal(inst, reindexed, inst.sum(row_sums).value, level,
                           "pair-reindexed sum"));
}

/// f(0) = 0 and f(Σ a) = Σ f(a) on every sample.
template <class S, class T>
Check check_morphism(const SeriesMonoid<S>& from, const SeriesMonoid<T>& to,
                     const std::function<T(const S&)>& f, const std::vector<Family<S>>& samples,
                     ApproxLevel level) {
  Check zero = expect_equal(to, Partial<T>{f(from.zero)}, to.zero, level, "f(0) = 0");
  if (zero.outcome == Outcome::fail) return zero;
  Check acc = zero;
  for (const Family<S>& fam : samples) {
    Partial<S> s = from.sum(fam);
    if (s.partial) {
      acc = both(acc, Check::inconclusive("source sum: scan budget exhausted"));
      continue;
    }
    Family<T> image = fam.template map<T>(f, to.zero, to.is_zero);
    acc = both(acc, expect_equal(to, to.sum(image), f(s.value), level, "f(sum) vs sum(f)"));
    if (acc.outcome == Outcome::fail) return acc;
  }
  return acc;
}

/// Constant-or-zero families sum to the constant, and the derived preorder is
/// antisymmetric on the samples.
template <class T>
Check check_idempotent_sup(const SeriesMonoid<T>& inst, const std::vector<T>& samples,
                           ApproxLevel level, std::size_t budget = 64) {
  if (!inst.idempotent) return Check::invalid(inst.name + " is not flagged idempotent");
  Check acc;
  for (const T& c : samples) {
    Family<T> sparse = inst.finite({{0, c}, {2, c}, {5, c}});
    acc = both(acc, expect_equal(inst, inst.sum(sparse), c, level, "sum of (c,0,c,0,0,c)"));
    acc = both(acc, expect_equal(inst, inst.sum(inst.constant(c)), c, level, "sum of (c,c,...)"));
    if (acc.outcome == Outcome::fail) return acc;
  }
  using Status = typename Witness<T>::Status;
  for (const T& a : samples) {
    for (const T& b : samples) {
      auto ab = leq_witness(inst, a, b, budget, level);
      auto ba = leq_witness(inst, b, a, budget, level);
      if (ab.status == Status::found && ba.status == Status::found) {
        acc = both(acc, expect_equal(inst, Partial<T>{a}, b, level, "antisymmetry"));
        if (acc.outcome == Outcome::fail) return acc;
      }
    }
  }
  return acc;
}

/// Two series magma structures on one carrier with a shared zero: when the
/// second sum is a morphism for the first on the sampled matrices, the two
/// sums must agree on every sampled family.
struct EckmannHilton {
  bool morphism_condition_holds = false;
  Check agreement;
};

template <class T>
EckmannHilton check_eckmann_hilton(const SeriesMonoid<T>& first, const SeriesMonoid<T>& second,
                                   const std::vector<Family<Family<T>>>& matrices,
                                   const std::vector<Family<T>>& families, ApproxLevel level) {
  EckmannHilton out;
  if (!first.is_zero(second.zero) || !second.is_zero(first.zero)) {
    out.agreement = Check::invalid("structures do not share a zero");
    return out;
  }
  // Σ'_m Σ_n a_{m,n} = Σ_n Σ'_m a_{m,n}
  out.morphism_condition_holds = true;
  for (const auto& rows : matrices) {
    auto outer_of = [&](const SeriesMonoid<T>& outer, const SeriesMonoid<T>& inner,
                        const Family<Family<T>>& m) {
      Family<T> inner_sums = m.template map<T>(
          [&](const Family<T>& r) { return inner.sum(r).value; }, first.zero, first.is_zero);
      return outer.sum(inner_sums);
    };
    Partial<T> lhs = outer_of(second, first, rows);
    Partial<T> rhs = outer_of(first, second, transpose(first, rows));
    Check c = expect_equal(first, lhs, rhs.value, level, "morphism condition");
    if (!c.passed()) {
      out.morphism_condition_holds = false;
      break;
    }
  }
  if (!out.morphism_condition_holds) {
    out.agreement = Check::invalid("second sum is not a morphism for the first");
    return out;
  }
  Check acc;
  for (const auto& fam : families) {
    acc = both(acc, expect_equal(first, first.sum(fam), second.sum(fam).value, level,
                                 "sums agree"));
  }
  out.agreement = acc;
  return out;
}

template <class T>
Family<Family<T>> SeriesMonoid<T>::matrix(const std::vector<std::vector<T>>& rows) const {
  std::vector<typename Family<Family<T>>::Entry> out;
  for (std::size_t m = 0; m < rows.size(); ++m) out.push_back({m, list(rows[m])});
  return Family<Family<T>>::finite(std::move(out), finite({}), [](const Family<T>& f) {
    return f.is_finite_support() && f.entries().empty();
  });
}

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inconclusive: return "inconclusive";
    case Outcome::invalid: return "invalid";
  }
  return "?";
}

}  // namespace realsets
