#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace realsets {

/// What is known about a lazily generated family beyond its generator.
///
/// Every field is a promise made by whoever builds the family; instances use
/// them to turn otherwise unbounded scans into exact answers.
struct LazyTraits {
  /// Entries at index >= support_bound are zero.
  std::optional<std::size_t> support_bound;
  /// gen(n) == gen(constant_from) for every n >= constant_from.
  std::optional<std::size_t> constant_from;
  /// Infinitely many entries are non-zero.
  bool infinite_support = false;
  /// The entries exceed every finite element of the carrier.
  bool unbounded = false;
  /// Analytic carriers only: k -> N such that the entries after index N sum
  /// to at most 2^-(k+1), and every entry is two-sided (carries a modulus).
  std::function<std::size_t(std::size_t)> tail_bound;
};

/// An ℕ-indexed family of values: finite support (explicit entries over a zero
/// tail) or lazy (a pure index -> value procedure plus LazyTraits).
template <class T>
class Family {
 public:
  struct Entry {
    std::size_t index;
    T value;
  };
  using Generator = std::function<T(std::size_t)>;
  using ZeroTest = std::function<bool(const T&)>;

  /// Sorts entries by index, rejects duplicates and drops zero values.
  static Family finite(std::vector<Entry> entries, T zero, const ZeroTest& is_zero) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.index < b.index; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
      if (entries[i - 1].index == entries[i].index) {
        throw std::invalid_argument("Family::finite: duplicate index " +
                                    std::to_string(entries[i].index));
      }
    }
    std::erase_if(entries, [&](const Entry& e) { return is_zero(e.value); });
    Family f(std::move(zero));
    f.data_ = std::move(entries);
    return f;
  }

  static Family lazy(Generator gen, T zero, LazyTraits traits = {}) {
    if (!gen) throw std::invalid_argument("Family::lazy: empty generator");
    Family f(std::move(zero));
    f.data_ = Lazy{std::move(gen), std::move(traits)};
    return f;
  }

  bool is_finite_support() const { return std::holds_alternative<std::vector<Entry>>(data_); }
  bool is_lazy() const { return !is_finite_support(); }

  /// One past the last possibly non-zero index, when known.
  std::optional<std::size_t> support_end() const {
    if (auto* entries = std::get_if<std::vector<Entry>>(&data_)) {
      return entries->empty() ? 0 : entries->back().index + 1;
    }
    return std::get<Lazy>(data_).traits.support_bound;
  }

  T at(std::size_t n) const {
    if (auto* entries = std::get_if<std::vector<Entry>>(&data_)) {
      auto it = std::lower_bound(entries->begin(), entries->end(), n,
                                 [](const Entry& e, std::size_t i) { return e.index < i; });
      if (it != entries->end() && it->index == n) return it->value;
      return zero_;
    }
    const Lazy& lazy = std::get<Lazy>(data_);
    if (lazy.traits.support_bound && n >= *lazy.traits.support_bound) return zero_;
    if (lazy.traits.constant_from && n > *lazy.traits.constant_from) {
      return lazy.gen(*lazy.traits.constant_from);
    }
    return lazy.gen(n);
  }

  std::span<const Entry> entries() const {
    if (auto* entries = std::get_if<std::vector<Entry>>(&data_)) return *entries;
    throw std::logic_error("Family::entries: family is lazy");
  }

  /// Traits of a lazy family; a finite family reports its support bound.
  LazyTraits traits() const {
    if (auto* lazy = std::get_if<Lazy>(&data_)) return lazy->traits;
    LazyTraits t;
    t.support_bound = support_end();
    return t;
  }

  const T& zero() const { return zero_; }

  /// Applies f entrywise. When f(0) is non-zero the result is lazy with that
  /// constant tail, so the image is faithful even for non-morphisms.
  template <class U, class F>
  Family<U> map(F f, U zero, const typename Family<U>::ZeroTest& is_zero) const {
    U image_of_zero = f(zero_);
    bool keeps_zero = is_zero(image_of_zero);
    if (keeps_zero && is_finite_support()) {
      std::vector<typename Family<U>::Entry> out;
      for (const Entry& e : entries()) out.push_back({e.index, f(e.value)});
      return Family<U>::finite(std::move(out), std::move(zero), is_zero);
    }
    LazyTraits t;
    if (keeps_zero) {
      t.support_bound = traits().support_bound;
    } else if (auto end = support_end()) {
      t.constant_from = *end;
      t.infinite_support = true;
    }
    if (is_lazy()) {
      const LazyTraits& mine = std::get<Lazy>(data_).traits;
      if (mine.constant_from && (!t.constant_from || *mine.constant_from < *t.constant_from)) {
        t.constant_from = mine.constant_from;
      }
    }
    Family self = *this;
    return Family<U>::lazy([self, f](std::size_t n) { return f(self.at(n)); }, std::move(zero),
                           std::move(t));
  }

 private:
  struct Lazy {
    Generator gen;
    LazyTraits traits;
  };

  explicit Family(T zero) : zero_(std::move(zero)) {}

  T zero_;
  std::variant<std::vector<Entry>, Lazy> data_;
};

}  // namespace realsets
