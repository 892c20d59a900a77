#include "realsets/harness/suites.hpp"

#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "realsets/biproduct.hpp"
#include "realsets/expansion.hpp"
#include "realsets/extnat_series.hpp"
#include "realsets/formal.hpp"
#include "realsets/harness/samples.hpp"
#include "realsets/intsets.hpp"
#include "realsets/lattice.hpp"
#include "realsets/lower_real.hpp"
#include "realsets/magnitude.hpp"
#include "realsets/omega.hpp"
#include "realsets/paradoxical.hpp"
#include "realsets/rig.hpp"

namespace realsets::harness {

void SuiteReport::record(std::size_t index, const Check& c) {
  switch (c.outcome) {
    case Outcome::pass:
      ++pass;
      // Passing cases of negative suites carry the refutation.
      if (c.detail.empty() || notes.size() >= 3) return;
      notes.push_back("case " + std::to_string(index) + ": refuted: " + c.detail);
      return;
    case Outcome::fail: ++fail; break;
    case Outcome::inconclusive: ++inconclusive; break;
    case Outcome::invalid: ++invalid; break;
  }
  if (notes.size() < 5) {
    notes.push_back("case " + std::to_string(index) + ": " + outcome_name(c.outcome) + ": " + c.detail);
  }
}

namespace {

using CaseFn = std::function<Check(CaseRng&, ApproxLevel)>;

struct Suite {
  CaseFn run;
  bool expected_negative = false;
};

using Registry = std::map<std::string, std::map<std::string, Suite>>;

Check equal_or_fail(bool ok, const std::string& what) { return ok ? Check::pass() : Check::fail(what); }

/// A negative law: the case passes when the inner check is refuted.
Check refuted(const Check& c, const std::string& what) {
  if (c.outcome == Outcome::fail) return {Outcome::pass, c.detail};
  if (c.outcome == Outcome::pass) return Check::fail(what + " unexpectedly holds");
  return c;
}

std::size_t cantor_pair(std::size_t m, std::size_t n) { return (m + n) * (m + n + 1) / 2 + n; }

std::pair<std::size_t, std::size_t> cantor_unpair(std::size_t k) {
  std::size_t w = 0;
  while ((w + 1) * (w + 2) / 2 <= k) ++w;
  std::size_t n = k - w * (w + 1) / 2;
  return {w - n, n};
}

template <class T>
void add_series_laws(Registry& reg, const std::string& name, SeriesMonoid<T> inst,
                     std::function<T(CaseRng&)> gen, std::size_t max_matrix) {
  auto& s = reg[name];
  s["zerodiag"] = {[inst, gen](CaseRng& rng, ApproxLevel level) {
    T a = gen(rng);
    return check_zero_diagonal(inst, a, rng.between(0, 20), level);
  }};
  s["sumswap"] = {[inst, gen, max_matrix](CaseRng& rng, ApproxLevel level) {
    return check_sum_swap(inst, sample_matrix(rng, inst, gen, max_matrix, max_matrix), level);
  }};
  s["reindex"] = {[inst, gen](CaseRng& rng, ApproxLevel level) {
    Family<T> fam = sample_family(rng, inst, gen, 6, 12);
    std::vector<std::size_t> table;
    std::vector<bool> used(24, false);
    for (const auto& e : fam.entries()) {
      table.push_back(e.index);
      used[e.index] = true;
    }
    std::vector<std::size_t> others;
    for (std::size_t i : sample_permutation(rng, 24)) {
      if (!used[i]) others.push_back(i);
    }
    for (std::size_t i = 0; table.size() < 12; ++i) table.push_back(others[i]);
    std::vector<std::size_t> order = sample_permutation(rng, table.size());
    Reindex xi;
    for (std::size_t i : order) xi.table.push_back(table[i]);
    return check_injective_reindex(inst, fam, xi, level);
  }};
  s["perm"] = {[inst, gen](CaseRng& rng, ApproxLevel level) {
    Family<T> fam = sample_family(rng, inst, gen, 8, 12);
    Reindex xi{sample_permutation(rng, 12), Reindex::Tail::shift, 0};
    return check_injective_reindex(inst, fam, xi, level);
  }};
  s["pairreindex"] = {[inst, gen, max_matrix](CaseRng& rng, ApproxLevel level) {
    auto rows = sample_matrix(rng, inst, gen, max_matrix, max_matrix);
    return check_pair_reindex<T>(
        inst, rows, cantor_unpair,
        [](std::size_t m, std::size_t n) -> std::optional<std::size_t> { return cantor_pair(m, n); },
        level);
  }};
  s["binary"] = {[inst, gen](CaseRng& rng, ApproxLevel level) {
    T a = gen(rng), b = gen(rng), c = gen(rng);
    auto add = [&](const T& x, const T& y) { return binary_add(inst, x, y); };
    Check acc = expect_equal(inst, Partial<T>{add(a, add(b, c))}, add(add(a, b), c), level,
                             "associativity");
    acc = both(acc, expect_equal(inst, Partial<T>{add(a, b)}, add(b, a), level, "commutativity"));
    return both(acc, expect_equal(inst, Partial<T>{add(a, inst.zero)}, a, level, "unit"));
  }};
  // One case of every law above.
  Registry::mapped_type laws = s;
  s["laws"] = {[laws](CaseRng& rng, ApproxLevel level) {
    Check acc;
    for (const auto& [name, suite] : laws) acc = both(acc, suite.run(rng, level));
    return acc;
  }};
}

template <class T>
void add_idempotent(Registry& reg, const std::string& name, SeriesMonoid<T> inst,
                    std::function<T(CaseRng&)> gen) {
  reg[name]["idempotent"] = {[inst, gen](CaseRng& rng, ApproxLevel level) {
    return check_idempotent_sup(inst, {gen(rng), gen(rng), gen(rng)}, level);
  }};
}

template <class T>
void add_lattice(Registry& reg, std::shared_ptr<const FiniteLattice> lattice) {
  const std::string name = lattice->name();
  SeriesMonoid<LatticePoint> inst = sup_lattice_instance(lattice);
  std::function<LatticePoint(CaseRng&)> gen = [lattice](CaseRng& rng) {
    return sample_point(rng, *lattice);
  };
  add_series_laws(reg, name, inst, gen, 6);
  add_idempotent(reg, name, inst, gen);
  reg[name]["zeno"] = {[inst, lattice](CaseRng&, ApproxLevel level) {
    std::vector<LatticePoint> all;
    for (std::size_t i = 0; i < lattice->size(); ++i) all.push_back({i});
    return zeno_verify(inst, identity_endo<LatticePoint>(), all, level);
  }};
  reg[name]["tilde"] = {[inst, gen](CaseRng& rng, ApproxLevel level) {
    LatticePoint a = gen(rng);
    return both(check_tilde_equation(inst, identity_endo<LatticePoint>(), a, level),
                check_tilde_equation(inst, zero_endo(inst.zero), a, level));
  }};
  reg[name]["ev1"] = {[inst, gen](CaseRng& rng, ApproxLevel level) {
    LatticePoint a = gen(rng);
    std::function<LatticePoint(ExtNat)> f = [inst, a](ExtNat n) {
      return n.is_zero() ? inst.zero : a;
    };
    return ev1_bijection_check(inst, {a}, {f}, {ExtNat(0), ExtNat(1), ExtNat(5), ExtNat::infinity()},
                               level);
  }};
}

void add_extnat(Registry& reg) {
  SeriesMonoid<ExtNat> inst = extnat_instance();
  std::function<ExtNat(CaseRng&)> gen = [](CaseRng& rng) { return sample_extnat(rng); };
  add_series_laws(reg, "extnat", inst, gen, 6);
  reg["extnat"]["idempotent"] = {[inst](CaseRng& rng, ApproxLevel level) {
    SeriesMonoid<ExtNat> flagged = inst;
    flagged.idempotent = true;
    ExtNat c = sample_extnat(rng, 20, 0) + ExtNat(1);
    return refuted(check_idempotent_sup(flagged, {c}, level), "idempotence of ℕ∪{∞}");
  }, true};
  reg["extnat"]["zeno"] = {[inst](CaseRng& rng, ApproxLevel level) {
    auto candidates = extnat_endomorphisms(8);
    const Endo<ExtNat>& h = candidates[rng.between(0, candidates.size() - 1)];
    return refuted(zeno_verify(inst, h, {ExtNat(1)}, level), h.name + " as a Zeno morphism");
  }, true};
  reg["extnat"]["euler"] = {[inst](CaseRng& rng, ApproxLevel) {
    ExtNat a = sample_extnat(rng, 100, 16), b = sample_extnat(rng, 100, 16);
    bool zero_sum = binary_add(inst, a, b).is_zero();
    return equal_or_fail(!zero_sum || (a.is_zero() && b.is_zero()),
                         a.str() + " + " + b.str() + " = 0 with a non-zero summand");
  }};
  reg["extnat"]["omega"] = {[inst, gen](CaseRng& rng, ApproxLevel level) {
    auto om = OmegaMonoid<ExtNat>::from_series(inst);
    return omega_assoc_check(om, sample_family(rng, inst, gen, 8, 10), sample_fibres(rng, 5, 4), level);
  }};
  reg["extnat"]["ev1"] = {[inst](CaseRng& rng, ApproxLevel level) {
    ExtNat a = sample_extnat(rng, 20, 8);
    std::function<ExtNat(ExtNat)> f = [a](ExtNat n) { return n * a; };
    return ev1_bijection_check(inst, {a}, {f}, {ExtNat(0), ExtNat(1), ExtNat(7), ExtNat::infinity()},
                               level);
  }};
  reg["extnat"]["morphism"] = {[inst, gen](CaseRng& rng, ApproxLevel level) {
    std::vector<Family<ExtNat>> samples{sample_family(rng, inst, gen, 6, 10)};
    return check_morphism<ExtNat, LowerReal>(inst, extreal_instance(), embed, samples, level);
  }};

  SeriesMonoid<ExtNat> mx = natmax_instance();
  add_series_laws(reg, "natmax", mx, gen, 6);
  add_idempotent(reg, "natmax", mx, gen);
}

void add_free(Registry& reg) {
  // ℕ∪{∞} is the free series monoid on one generator; check the single-component form.
  Biproduct<ExtNat> free1 = free_series_monoid(1);
  SeriesMonoid<FreeSeriesElem> inst = free1.instance("free1");
  std::function<FreeSeriesElem(CaseRng&)> gen = [free1](CaseRng& rng) {
    return free1.make({{0, sample_extnat(rng)}});
  };
  add_series_laws(reg, "free1", inst, gen, 4);
  reg["free1"]["euler"] = {[inst, free1](CaseRng& rng, ApproxLevel level) {
    FreeSeriesElem a = free1.make({{0, sample_extnat(rng, 100, 16)}});
    FreeSeriesElem b = free1.make({{0, sample_extnat(rng, 100, 16)}});
    bool zero_sum = is_equal(inst.eq_at(binary_add(inst, a, b), inst.zero, level));
    return equal_or_fail(!zero_sum || (inst.is_zero(a) && inst.is_zero(b)),
                         "a + b = 0 with a non-zero summand");
  }};
}

void add_biproduct(Registry& reg) {
  Biproduct<ExtNat> bp({extnat_instance(), extnat_instance()});
  SeriesMonoid<BiproductElem<ExtNat>> inst = bp.instance("biproduct");
  std::function<BiproductElem<ExtNat>(CaseRng&)> gen = [bp](CaseRng& rng) {
    return bp.make({{0, sample_extnat(rng)}, {1, sample_extnat(rng)}});
  };
  add_series_laws(reg, "biproduct", inst, gen, 5);
  reg["biproduct"]["equations"] = {[bp, inst, gen](CaseRng& rng, ApproxLevel level) {
    Check acc;
    ExtNat a = sample_extnat(rng);
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t m = 0; m < 2; ++m) {
        ExtNat got = bp.pr(k, bp.in(m, a));
        ExtNat want = k == m ? a : ExtNat(0);
        acc = both(acc, equal_or_fail(got == want, "pr" + std::to_string(k) + " in" +
                                                       std::to_string(m) + "(" + a.str() + ")"));
      }
    }
    BiproductElem<ExtNat> x = gen(rng);
    std::vector<BiproductElem<ExtNat>> parts;
    for (std::size_t k = 0; k < 2; ++k) parts.push_back(bp.in(k, bp.pr(k, x)));
    return both(acc, expect_equal(inst, inst.sum(inst.list(parts)), x, level, "Σ in_k pr_k = id"));
  }};
}

void add_dyadic(Registry& reg) {
  SeriesMonoid<DyadicExt> inst = dyadic_instance();
  std::function<DyadicExt(CaseRng&)> gen = [](CaseRng& rng) {
    return rng.chance(16) ? DyadicExt::infinity() : sample_dyadic(rng);
  };
  add_series_laws(reg, "dyadic", inst, gen, 6);
}

void add_extreal(Registry& reg) {
  SeriesMonoid<LowerReal> inst = extreal_instance();
  std::function<LowerReal(CaseRng&)> gen = [](CaseRng& rng) { return sample_lower_real(rng); };
  add_series_laws(reg, "extreal", inst, gen, 6);
  auto& s = reg["extreal"];
  s["zeno"] = {[inst](CaseRng& rng, ApproxLevel level) {
    LowerReal a = rng.chance(4) ? sample_finite_lower_real(rng) : LowerReal(sample_dyadic(rng));
    return zeno_verify(inst, halving(), {a}, level);
  }};
  s["tilde"] = {[inst, gen](CaseRng& rng, ApproxLevel level) {
    LowerReal a = gen(rng);
    return both(check_tilde_equation(inst, halving(), a, level),
                check_tilde_equation(inst, zero_endo(inst.zero), a, level));
  }};
  s["mul"] = {[inst](CaseRng& rng, ApproxLevel level) {
    LowerReal x = sample_finite_lower_real(rng), y = sample_finite_lower_real(rng),
              z = sample_finite_lower_real(rng);
    Check acc = expect_equal(inst, Partial<LowerReal>{extreal_mul(x, extreal_mul(y, z))},
                             extreal_mul(extreal_mul(x, y), z), level, "associativity");
    return both(acc, expect_equal(inst, Partial<LowerReal>{extreal_mul(x, y)}, extreal_mul(y, x),
                                  level, "commutativity"));
  }};
  s["geominv"] = {[](CaseRng& rng, ApproxLevel level) {
    DyadicExt a = sample_unit_dyadic(rng, 8);
    DyadicExt av = extreal_mul(LowerReal(a), geometric_inverse(a)).bound(level.bits);
    DyadicExt low = *DyadicExt::pow2(-static_cast<std::int64_t>(level.bits)).subtract_from(DyadicExt(1));
    return equal_or_fail(low <= av && av <= DyadicExt(1),
                         "a·v = " + av.str() + " outside [1 - 2^-k, 1] at a = " + a.str());
  }};
  s["action"] = {[inst](CaseRng& rng, ApproxLevel level) {
    std::vector<LowerReal> probe{LowerReal(DyadicExt(1)), LowerReal(DyadicExt(3)),
                                 LowerReal::from_rational(mpq_class(1, 3))};
    auto module = make_magnitude_module(inst, halving(), probe, level);
    DyadicExt alpha = sample_dyadic(rng, 8, 6);
    LowerReal a = sample_finite_lower_real(rng), b = sample_finite_lower_real(rng);
    Partial<LowerReal> lhs = scalar_action(module, alpha, binary_add(inst, a, b));
    LowerReal rhs = binary_add(inst, scalar_action(module, alpha, a).value,
                               scalar_action(module, alpha, b).value);
    Check acc = expect_equal(inst, lhs, rhs, level, "α·(a+b) = α·a + α·b");
    return both(acc, expect_equal(inst, scalar_action(module, DyadicExt(1), a), a, level, "1·a = a"));
  }};
}

void add_p(Registry& reg) {
  Rig<ExtNat> nat = nat_rig();
  SeriesMonoid<ExtNat> pn = p_instance(nat);
  std::function<ExtNat(CaseRng&)> small = [](CaseRng& rng) { return sample_extnat(rng, 2, 24); };
  add_series_laws(reg, "pnat", pn, small, 4);
  reg["pnat"]["omega"] = {[pn, nat](CaseRng& rng, ApproxLevel level) {
    auto om = OmegaMonoid<ExtNat>::from_rig(nat);
    auto tiny = [](CaseRng& r) { return ExtNat(r.between(0, 2)); };
    return omega_assoc_check(om, sample_family(rng, pn, tiny, 8, 10), sample_fibres(rng, 5, 4), level);
  }};

  Rig<DyadicExt> dy = dyadic_rig();
  SeriesMonoid<DyadicExt> pd = p_instance(dy);
  std::function<DyadicExt(CaseRng&)> gen = [](CaseRng& rng) { return sample_dyadic(rng, 3, 3); };
  add_series_laws(reg, "pdyadic", pd, gen, 4);
}

void add_intsets(Registry& reg, const std::string& name, IntMode mode) {
  auto& s = reg[name];
  s["category"] = {[mode](CaseRng& rng, ApproxLevel) {
    IntObject a = sample_int_object(rng, 4);
    IntObject b = sample_target(rng, a, 4, mode);
    IntObject c = sample_target(rng, b, 4, mode);
    IntObject d = sample_target(rng, c, 4, mode);
    IntMorphism f = sample_int_morphism(rng, a, b, mode);
    IntMorphism g = sample_int_morphism(rng, b, c, mode);
    IntMorphism h = sample_int_morphism(rng, c, d, mode);
    Check acc = equal_or_fail(int_compose(h, int_compose(g, f)) == int_compose(int_compose(h, g), f),
                              "associativity");
    acc = both(acc, equal_or_fail(int_compose(f, int_identity(a, mode)) == f, "right identity"));
    return both(acc, equal_or_fail(int_compose(int_identity(b, mode), f) == f, "left identity"));
  }};
  s["trace"] = {[mode](CaseRng& rng, ApproxLevel) {
    std::size_t x = rng.between(0, 4), u = rng.between(0, 3);
    std::size_t y = mode == IntMode::FB ? x : rng.between(x, 5);
    Injection f = sample_injection(rng, x + u, y + u);
    Injection t = trace_injection(f, x, u, y);
    return equal_or_fail(!f.bijective() || t.bijective(), "trace of a bijection is not a bijection");
  }};
  s["snake"] = {[](CaseRng& rng, ApproxLevel) {
    IntObject a = sample_int_object(rng, 4);
    IntObject ad = int_dual(a);
    IntMorphism one = int_identity(a), one_d = int_identity(ad);
    IntMorphism left = int_compose(int_tensor(one, int_counit(a)), int_tensor(int_unit(a), one));
    IntMorphism right = int_compose(int_tensor(int_counit(a), one_d), int_tensor(one_d, int_unit(a)));
    return both(equal_or_fail(left == one, "(1⊗ε)(η⊗1) = 1"),
                equal_or_fail(right == one_d, "(ε⊗1)(1⊗η) = 1"));
  }};
  s["card"] = {[mode](CaseRng& rng, ApproxLevel) {
    IntObject a = sample_int_object(rng, 4), b = sample_int_object(rng, 4);
    Check acc = equal_or_fail(cardinality(int_tensor(a, b)) == cardinality(a) + cardinality(b),
                              "cardinality of a tensor");
    IntObject c = sample_target(rng, a, 4, IntMode::FB);
    IntMorphism f = sample_int_morphism(rng, a, c, IntMode::FB);
    (void)mode;
    return both(acc, equal_or_fail(cardinality(f.dom) == cardinality(f.cod),
                                   "bijective morphism between different cardinalities"));
  }};
  s["tensor"] = {[mode](CaseRng& rng, ApproxLevel) {
    IntObject a = sample_int_object(rng, 3), b = sample_target(rng, a, 3, mode),
              c = sample_target(rng, b, 3, mode);
    IntObject p = sample_int_object(rng, 3), q = sample_target(rng, p, 3, mode),
              r = sample_target(rng, q, 3, mode);
    IntMorphism f = sample_int_morphism(rng, a, b, mode), g = sample_int_morphism(rng, b, c, mode);
    IntMorphism f2 = sample_int_morphism(rng, p, q, mode), g2 = sample_int_morphism(rng, q, r, mode);
    return equal_or_fail(int_tensor(int_compose(g, f), int_compose(g2, f2)) ==
                             int_compose(int_tensor(g, g2), int_tensor(f, f2)),
                         "(g∘f)⊗(g'∘f') = (g⊗g')∘(f⊗f')");
  }};
}

void add_paradox(Registry& reg) {
  auto& s = reg["paradox"];
  s["add"] = {[](CaseRng& rng, ApproxLevel) {
    ZPElem a = sample_zp(rng), b = sample_zp(rng), c = sample_zp(rng);
    Check acc = equal_or_fail(zp_add(a, zp_add(b, c)) == zp_add(zp_add(a, b), c), "associativity");
    return both(acc, equal_or_fail(zp_add(a, b) == zp_add(b, a), "commutativity"));
  }};
  s["value"] = {[](CaseRng& rng, ApproxLevel) {
    ZPElem a = sample_zp(rng), b = sample_zp(rng);
    return equal_or_fail(zp_add(a, b).value() == a.value() + b.value(), "value(a+b) = value(a)+value(b)");
  }};
  s["k"] = {[](CaseRng& rng, ApproxLevel) {
    DyadicExt d = sample_dyadic(rng, 8, 8);
    if (d.is_zero()) return Check::pass();
    ZPElem s1 = ZPElem::terminating(d.to_rational());
    ZPElem s2 = ZPElem::terminating(sample_unit_dyadic(rng).to_rational());
    ZPElem k1 = zp_k(s1);
    Check acc = equal_or_fail(k1.kind() == ZPElem::Kind::X && k1.value() == s1.value(),
                              "k changes the value or misses X");
    return both(acc, equal_or_fail(zp_k(zp_add(s1, s2)) == zp_add(zp_k(s1), zp_k(s2)),
                                   "k(s+s') = k(s)+k(s')"));
  }};
}

void add_formal(Registry& reg) {
  reg["formal"]["normalize"] = {[](CaseRng& rng, ApproxLevel) {
    FormalMagnitude x = sample_formal(rng), y = sample_formal(rng);
    FormalMagnitude nx = formal_normalize(x);
    Check acc = equal_or_fail(formal_value(nx) == formal_value(x), "normalize changes the value");
    acc = both(acc, equal_or_fail(formal_normalize(nx) == nx, "normalize is not idempotent"));
    bool same_class = formal_normalize(y) == nx;
    return both(acc, equal_or_fail(same_class == (formal_value(x) == formal_value(y)),
                                   "normal forms disagree with values on " + x.str() + ", " + y.str()));
  }};
  reg["formal"]["expansion"] = {[](CaseRng& rng, ApproxLevel) {
    DyadicExt d = sample_dyadic(rng, 10, 10);
    Check acc = equal_or_fail(binary_expand(d).evaluate() == d, "terminating round trip at " + d.str());
    return both(acc, equal_or_fail(binary_expand(d, true).evaluate() == d,
                                   "nonterminating round trip at " + d.str()));
  }};
}

const Registry& registry() {
  static const Registry reg = [] {
    Registry r;
    add_extnat(r);
    add_free(r);
    add_biproduct(r);
    add_dyadic(r);
    add_extreal(r);
    add_lattice<LatticePoint>(r, std::make_shared<const FiniteLattice>(FiniteLattice::boolean()));
    add_lattice<LatticePoint>(r, std::make_shared<const FiniteLattice>(FiniteLattice::chain(3)));
    add_p(r);
    add_intsets(r, "intfi", IntMode::FI);
    add_intsets(r, "intfb", IntMode::FB);
    add_paradox(r);
    add_formal(r);
    return r;
  }();
  return reg;
}

const Suite& lookup(const std::string& instance, const std::string& suite) {
  const Registry& reg = registry();
  auto it = reg.find(instance);
  if (it == reg.end()) throw UnknownName("unknown instance '" + instance + "'");
  auto jt = it->second.find(suite);
  if (jt == it->second.end()) {
    throw UnknownName("instance '" + instance + "' has no suite '" + suite + "'");
  }
  return jt->second;
}

}  // namespace

std::vector<std::string> instance_names() {
  std::vector<std::string> out;
  for (const auto& [name, suites] : registry()) out.push_back(name);
  return out;
}

std::vector<std::string> suite_names(const std::string& instance) {
  auto it = registry().find(instance);
  if (it == registry().end()) throw UnknownName("unknown instance '" + instance + "'");
  std::vector<std::string> out;
  for (const auto& [name, suite] : it->second) out.push_back(name);
  return out;
}

SuiteReport run_suite(const std::string& instance, const std::string& suite, const SuiteConfig& config) {
  const Suite& s = lookup(instance, suite);
  SuiteReport report;
  report.instance = instance;
  report.suite = suite;
  report.expected_negative = s.expected_negative;
  for (std::size_t i = 0; i < config.cases; ++i) {
    CaseRng rng(config.seed, i);
    Check c;
    try {
      c = s.run(rng, config.level);
    } catch (const std::exception& e) {
      c = Check::fail(std::string("exception: ") + e.what());
    }
    report.record(i, c);
  }
  return report;
}

std::string render(const SuiteReport& r, const SuiteConfig& config) {
  std::ostringstream out;
  out << "check " << r.instance << " " << r.suite << " seed=" << config.seed
      << " cases=" << config.cases << " bits=" << config.level.bits << "\n";
  if (r.expected_negative) out << "expected negative: each case must refute the law\n";
  out << "pass " << r.pass << "  fail " << r.fail << "  inconclusive " << r.inconclusive
      << "  invalid " << r.invalid << "\n";
  for (const auto& n : r.notes) out << "  " << n << "\n";
  return out.str();
}

}  // namespace realsets::harness
