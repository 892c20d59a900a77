#include "expr.hpp"

#include <cctype>
#include <functional>
#include <memory>
#include <optional>
#include <variant>

#include "realsets/expansion.hpp"
#include "realsets/extnat_series.hpp"
#include "realsets/formal.hpp"
#include "realsets/lattice.hpp"
#include "realsets/lower_real.hpp"
#include "realsets/magnitude.hpp"
#include "realsets/omega.hpp"
#include "realsets/rig.hpp"

namespace realsets::cli {

namespace {

// ---------------------------------------------------------------------------
// Syntax

struct Node {
  enum class Kind { number, formal, prefixed, ident, call, list };
  Kind kind;
  std::string text;    // literal text, identifier or operator name
  std::string prefix;  // "nat" in nat:5
  std::string inst;    // "nat" in sum@nat(...)
  std::vector<Node> args;
  std::size_t line = 0;
  std::size_t col = 0;
};

class Parser {
 public:
  Parser(std::string_view src, std::size_t line) : src_(src), line_(line) {}

  Node parse() {
    Node n = expr();
    skip_space();
    if (pos_ < src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void error(const std::string& what) const { throw EvalError(line_, pos_ + 1, what); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < src_.size() && src_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  std::string number_text() {
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t s = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (s == pos_) error("expected digits");
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      digits();
      if (pos_ < src_.size() && src_[pos_] == '^') {
        ++pos_;
        digits();
      }
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  std::vector<Node> args(char close) {
    std::vector<Node> out;
    if (peek(close)) {
      ++pos_;
      return out;
    }
    while (true) {
      out.push_back(expr());
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(close);
      return out;
    }
  }

  Node expr() {
    skip_space();
    if (pos_ >= src_.size()) error("unexpected end of expression");
    Node n;
    n.line = line_;
    n.col = pos_ + 1;
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      n.kind = Node::Kind::number;
      n.text = number_text();
      return n;
    }
    if (c == '{') {
      std::size_t close = src_.find('}', pos_);
      if (close == std::string_view::npos) error("unterminated '{'");
      n.kind = Node::Kind::formal;
      n.text = std::string(src_.substr(pos_, close - pos_ + 1));
      pos_ = close + 1;
      return n;
    }
    if (c == '[') {
      ++pos_;
      n.kind = Node::Kind::list;
      n.args = args(']');
      return n;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) error("unexpected '" + std::string(1, c) + "'");
    n.text = word();
    if (pos_ < src_.size() && src_[pos_] == ':') {
      ++pos_;
      n.kind = Node::Kind::prefixed;
      n.prefix = n.text;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        n.text = number_text();
      } else {
        n.text = word();
        if (n.text.empty()) error("expected a literal after '" + n.prefix + ":'");
      }
      return n;
    }
    if (pos_ < src_.size() && src_[pos_] == '@') {
      ++pos_;
      n.inst = word();
      if (n.inst.empty()) error("expected an instance name after '@'");
    }
    if (peek('(')) {
      ++pos_;
      n.kind = Node::Kind::call;
      n.args = args(')');
      return n;
    }
    if (!n.inst.empty()) error("instance tag on a non-call");
    n.kind = Node::Kind::ident;
    return n;
  }

  std::string_view src_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Values

struct Value;

struct LazyValue {
  std::function<Value(std::size_t)> gen;
  LazyTraits traits;
};

struct LogValue {
  std::shared_ptr<const Value> base;
};

struct PointValue {
  std::shared_ptr<const FiniteLattice> lattice;
  LatticePoint point;
};

struct CheckValue {
  Check check;
};

struct Value {
  std::variant<ExtNat, DyadicExt, LowerReal, FormalMagnitude, BinaryExpansion, std::vector<Value>,
               LazyValue, LogValue, PointValue, CheckValue>
      v;

  template <class T>
  const T* get() const {
    return std::get_if<T>(&v);
  }
};

const std::shared_ptr<const FiniteLattice>& lattice_named(const std::string& name) {
  static const auto boolean = std::make_shared<const FiniteLattice>(FiniteLattice::boolean());
  static const auto chain3 = std::make_shared<const FiniteLattice>(FiniteLattice::chain(3));
  static const std::shared_ptr<const FiniteLattice> none;
  if (name == "bool") return boolean;
  if (name == "chain3") return chain3;
  return none;
}

std::string print(const Value& x, ApproxLevel level);

std::string print_list(const std::vector<Value>& xs, ApproxLevel level) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + print(xs[i], level);
  return out + "]";
}

std::string print(const Value& x, ApproxLevel level) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, ExtNat> || std::is_same_v<V, DyadicExt> ||
                      std::is_same_v<V, FormalMagnitude> || std::is_same_v<V, BinaryExpansion>) {
          return v.str();
        } else if constexpr (std::is_same_v<V, LowerReal>) {
          return format(v, level);
        } else if constexpr (std::is_same_v<V, std::vector<Value>>) {
          return print_list(v, level);
        } else if constexpr (std::is_same_v<V, LazyValue>) {
          std::vector<Value> head;
          for (std::size_t i = 0; i < 4; ++i) head.push_back(v.gen(i));
          std::string s = print_list(head, level);
          return s.substr(0, s.size() - 1) + ", ...]";
        } else if constexpr (std::is_same_v<V, LogValue>) {
          return "ℓ(" + print(*v.base, level) + ")";
        } else if constexpr (std::is_same_v<V, PointValue>) {
          return v.lattice->label(v.point);
        } else {
          return v.check.passed() ? std::string("pass")
                                  : std::string(outcome_name(v.check.outcome)) + ": " + v.check.detail;
        }
      },
      x.v);
}

// ---------------------------------------------------------------------------
// Evaluation

class Evaluator {
 public:
  explicit Evaluator(ApproxLevel level) : level_(level) {}

  Value eval(const Node& n) {
    try {
      return dispatch(n);
    } catch (const EvalError&) {
      throw;
    } catch (const std::exception& e) {
      throw EvalError(n.line, n.col, e.what());
    }
  }

 private:
  [[noreturn]] static void fail(const Node& n, const std::string& what) {
    throw EvalError(n.line, n.col, what);
  }

  void arity(const Node& n, std::size_t want) {
    if (n.args.size() != want) {
      fail(n, n.text + " takes " + std::to_string(want) + " argument" + (want == 1 ? "" : "s") +
                  ", got " + std::to_string(n.args.size()));
    }
  }

  Value dispatch(const Node& n) {
    switch (n.kind) {
      case Node::Kind::number:
        return {DyadicExt::parse(n.text)};
      case Node::Kind::formal:
        return {FormalMagnitude::parse(n.text)};
      case Node::Kind::prefixed:
        return prefixed(n);
      case Node::Kind::list: {
        std::vector<Value> xs;
        for (const Node& a : n.args) xs.push_back(eval(a));
        return {std::move(xs)};
      }
      case Node::Kind::ident:
        if (n.text == "inf") return {DyadicExt::infinity()};
        if (n.text == "pi") return {BinaryExpansion::from_bits(ExtNat(3), pi_fraction_bits())};
        fail(n, "unknown name '" + n.text + "'");
      case Node::Kind::call:
        return call(n);
    }
    fail(n, "bad node");
  }

  Value prefixed(const Node& n) {
    if (n.prefix == "nat") return {ExtNat::parse(n.text)};
    if (auto lattice = lattice_named(n.prefix)) return {PointValue{lattice, lattice->parse(n.text)}};
    fail(n, "unknown literal prefix '" + n.prefix + "'");
  }

  // -- conversions

  static std::string kind_name(const Value& x) {
    static const char* names[] = {"natural", "dyadic", "lower real", "formal magnitude",
                                  "binary expansion", "list", "lazy family", "logarithm",
                                  "lattice element", "check result"};
    return names[x.v.index()];
  }

  ExtNat to_nat(const Node& n, const Value& x) {
    if (auto a = x.get<ExtNat>()) return *a;
    if (auto d = x.get<DyadicExt>()) {
      if (d->is_infinite()) return ExtNat::infinity();
      if (d->is_integer() && d->mantissa().fits_ulong_p()) return ExtNat(d->mantissa().get_ui());
    }
    fail(n, "expected a natural, got " + kind_name(x) + " " + print(x, level_));
  }

  DyadicExt to_dyadic(const Node& n, const Value& x) {
    if (auto d = x.get<DyadicExt>()) return *d;
    if (auto r = x.get<LowerReal>(); r && r->exact()) return *r->exact();
    if (x.get<ExtNat>()) fail(n, "ℕ∪{∞} value where a dyadic is expected; write it without nat:");
    fail(n, "expected a dyadic, got " + kind_name(x));
  }

  LowerReal to_real(const Node& n, const Value& x) {
    if (auto r = x.get<LowerReal>()) return *r;
    if (auto d = x.get<DyadicExt>()) return LowerReal(*d);
    if (x.get<ExtNat>()) fail(n, "ℕ∪{∞} value in [0,∞]; convert it with embed()");
    fail(n, "expected a value in [0,∞], got " + kind_name(x));
  }

  PointValue to_point(const Node& n, const Value& x) {
    if (auto p = x.get<PointValue>()) return *p;
    fail(n, "expected a lattice element, got " + kind_name(x));
  }

  /// The entries of a list or lazy family, for instance inference.
  std::vector<Value> probe(const Value& fam) {
    if (auto xs = fam.get<std::vector<Value>>()) return *xs;
    if (auto lazy = fam.get<LazyValue>()) return {lazy->gen(0)};
    return {fam};
  }

  template <class T>
  Family<T> to_family(const Node& n, const SeriesMonoid<T>& inst, const Value& fam,
                      std::function<T(const Value&)> conv) {
    if (auto xs = fam.get<std::vector<Value>>()) {
      std::vector<T> vals;
      for (const Value& x : *xs) vals.push_back(conv(x));
      return inst.list(vals);
    }
    if (auto lazy = fam.get<LazyValue>()) {
      auto gen = lazy->gen;
      return inst.lazy([gen, conv](std::size_t i) { return conv(gen(i)); }, lazy->traits);
    }
    fail(n, "expected a family ([...], const(...) or geom(...)), got " + kind_name(fam));
  }

  /// Instance named by a tag, or inferred from the values.
  std::string instance_for(const Node& n, const std::vector<Value>& vals, bool lazy) {
    if (!n.inst.empty()) return n.inst == "extnat" ? "nat" : n.inst;
    bool nat = false, dy = false, real = false;
    std::shared_ptr<const FiniteLattice> lattice;
    for (const Value& v : vals) {
      if (v.get<ExtNat>()) nat = true;
      else if (v.get<DyadicExt>()) dy = true;
      else if (v.get<LowerReal>()) real = true;
      else if (auto p = v.get<PointValue>()) lattice = p->lattice;
      else fail(n, "cannot sum " + kind_name(v) + " values");
    }
    if (lattice) {
      if (nat || dy || real) fail(n, "mixing lattice elements with numbers");
      return lattice->name();
    }
    if (nat && (dy || real)) fail(n, "mixing ℕ∪{∞} with [0,∞] values; convert with embed()");
    if (nat) return "nat";
    return real || lazy ? "extreal" : "dyadic";
  }

  // -- operators

  Value call(const Node& n) {
    const std::string& op = n.text;
    if (op == "sum") return sum(n);
    if (op == "add") return add(n);
    if (op == "mul") return mul(n);
    if (op == "halve") return halve_op(n);
    if (op == "P") return p_op(n);
    if (op == "geominv") {
      arity(n, 1);
      return {geometric_inverse(to_dyadic(n, eval(n.args[0])))};
    }
    if (op == "log") {
      arity(n, 1);
      return {LogValue{std::make_shared<const Value>(eval(n.args[0]))}};
    }
    if (op == "logadd") return logadd(n);
    if (op == "logsum") return logsum(n);
    if (op == "tilde") return tilde_op(n);
    if (op == "action") return action(n);
    if (op == "omegacheck") return omegacheck(n);
    if (op == "normalize") {
      arity(n, 1);
      return {formal_normalize(formal(n, eval(n.args[0])))};
    }
    if (op == "value") {
      arity(n, 1);
      Value x = eval(n.args[0]);
      if (auto e = x.get<BinaryExpansion>()) return {e->evaluate()};
      return {formal_value(formal(n, x))};
    }
    if (op == "expand" || op == "expand_nt") {
      arity(n, 1);
      return {binary_expand(to_dyadic(n, eval(n.args[0])), op == "expand_nt")};
    }
    if (op == "expansion") {
      arity(n, 1);
      Value x = eval(n.args[0]);
      if (x.get<BinaryExpansion>()) return x;
      return {binary_expand(to_dyadic(n, x))};
    }
    if (op == "embed") {
      arity(n, 1);
      return {embed(to_nat(n, eval(n.args[0])))};
    }
    if (op == "const") {
      arity(n, 1);
      Value c = eval(n.args[0]);
      LazyTraits t;
      t.constant_from = 0;
      t.infinite_support = true;
      return {LazyValue{[c](std::size_t) { return c; }, t}};
    }
    if (op == "geom") return geom(n);
    fail(n, "unknown operator '" + op + "'");
  }

  FormalMagnitude formal(const Node& n, const Value& x) {
    if (auto f = x.get<FormalMagnitude>()) return *f;
    fail(n, "expected a formal magnitude {n:c, ...}, got " + kind_name(x));
  }

  Value geom(const Node& n) {
    arity(n, 2);
    DyadicExt a = to_dyadic(n, eval(n.args[0]));
    DyadicExt r = to_dyadic(n, eval(n.args[1]));
    LazyTraits t;
    if (a.is_zero() || r.is_zero()) t.support_bound = a.is_zero() ? 0 : 1;
    else if (r == DyadicExt(1)) t.constant_from = 0;
    else if (r > DyadicExt(1)) t.unbounded = true;
    t.infinite_support = !t.support_bound;
    return {LazyValue{[a, r](std::size_t i) {
                        DyadicExt x = a;
                        for (std::size_t j = 0; j < i && !x.is_zero(); ++j) x *= r;
                        return Value{x};
                      },
                      t}};
  }

  Value sum(const Node& n) {
    arity(n, 1);
    Value fam = eval(n.args[0]);
    bool lazy = fam.get<LazyValue>() != nullptr;
    std::string inst = instance_for(n, probe(fam), lazy);
    const Node& at = n.args[0];
    auto partial_note = [&](bool partial) {
      if (partial) fail(n, "sum did not settle within the scan budget");
    };
    if (inst == "nat" || inst == "natmax") {
      auto s = inst == "nat" ? extnat_instance() : natmax_instance();
      Partial<ExtNat> r = s.sum(to_family<ExtNat>(at, s, fam, [&](const Value& v) { return to_nat(at, v); }));
      partial_note(r.partial);
      return {r.value};
    }
    if (inst == "dyadic") {
      auto s = dyadic_instance();
      Partial<DyadicExt> r =
          s.sum(to_family<DyadicExt>(at, s, fam, [&](const Value& v) { return to_dyadic(at, v); }));
      partial_note(r.partial);
      return {r.value};
    }
    if (inst == "extreal") {
      auto s = extreal_instance();
      return {s.sum(to_family<LowerReal>(at, s, fam, [&](const Value& v) { return to_real(at, v); })).value};
    }
    if (auto lattice = lattice_named(inst)) {
      auto s = sup_lattice_instance(lattice);
      Partial<LatticePoint> r = s.sum(to_family<LatticePoint>(
          at, s, fam, [&](const Value& v) { return to_point(at, v).point; }));
      partial_note(r.partial);
      return {PointValue{lattice, r.value}};
    }
    fail(n, "unknown instance '" + inst + "'");
  }

  Value add(const Node& n) {
    arity(n, 2);
    Node as_sum = n;
    as_sum.text = "sum";
    Node list;
    list.kind = Node::Kind::list;
    list.args = n.args;
    list.line = n.line;
    list.col = n.col;
    as_sum.args = {list};
    return sum(as_sum);
  }

  Value mul(const Node& n) {
    arity(n, 2);
    Value x = eval(n.args[0]), y = eval(n.args[1]);
    if (x.get<ExtNat>() && y.get<ExtNat>()) return {*x.get<ExtNat>() * *y.get<ExtNat>()};
    if (x.get<DyadicExt>() && y.get<DyadicExt>()) {
      return {extreal_mul(*x.get<DyadicExt>(), *y.get<DyadicExt>())};
    }
    return {extreal_mul(to_real(n.args[0], x), to_real(n.args[1], y))};
  }

  Value halve_op(const Node& n) {
    arity(n, 1);
    Value x = eval(n.args[0]);
    if (auto d = x.get<DyadicExt>()) return {d->half()};
    if (auto r = x.get<LowerReal>()) return {halve(*r)};
    if (auto f = x.get<FormalMagnitude>()) return {formal_halve(*f)};
    if (x.get<ExtNat>()) fail(n, "ℕ∪{∞} has no halving map");
    fail(n, "cannot halve " + kind_name(x));
  }

  /// P's arguments: one list or family, or the entries themselves.
  Value p_family(const Node& n, std::vector<Value>& vals, bool& lazy) {
    Value fam;
    if (n.args.size() == 1) {
      fam = eval(n.args[0]);
      if (!fam.get<std::vector<Value>>() && !fam.get<LazyValue>()) fam = Value{std::vector<Value>{fam}};
    } else {
      std::vector<Value> xs;
      for (const Node& a : n.args) xs.push_back(eval(a));
      fam = Value{std::move(xs)};
    }
    lazy = fam.get<LazyValue>() != nullptr;
    vals = probe(fam);
    return fam;
  }

  Value p_op(const Node& n) {
    std::vector<Value> vals;
    bool lazy = false;
    Value fam = p_family(n, vals, lazy);
    std::string inst = instance_for(n, vals, lazy);
    if (inst == "nat") {
      Rig<ExtNat> rig = nat_rig();
      return {p_sum(rig, to_family<ExtNat>(n, rig.base, fam, [&](const Value& v) { return to_nat(n, v); })).value};
    }
    if (inst == "dyadic") {
      Rig<DyadicExt> rig = dyadic_rig();
      return {p_sum(rig, to_family<DyadicExt>(n, rig.base, fam, [&](const Value& v) { return to_dyadic(n, v); }))
                  .value};
    }
    if (inst == "extreal") {
      Rig<LowerReal> rig = extreal_rig();
      return {p_sum(rig, to_family<LowerReal>(n, rig.base, fam, [&](const Value& v) { return to_real(n, v); }))
                  .value};
    }
    fail(n, "P needs a rig: nat, dyadic or extreal");
  }

  Value logadd(const Node& n) {
    arity(n, 2);
    Value x = eval(n.args[0]), y = eval(n.args[1]);
    auto lx = x.get<LogValue>(), ly = y.get<LogValue>();
    if (!lx || !ly) fail(n, "logadd takes two log(...) values");
    Node m = n;
    m.text = "mul";
    Value prod = mul_values(n, *lx->base, *ly->base);
    return {LogValue{std::make_shared<const Value>(prod)}};
  }

  Value mul_values(const Node& n, const Value& x, const Value& y) {
    if (x.get<ExtNat>() && y.get<ExtNat>()) return {*x.get<ExtNat>() * *y.get<ExtNat>()};
    if (x.get<DyadicExt>() && y.get<DyadicExt>()) return {*x.get<DyadicExt>() * *y.get<DyadicExt>()};
    return {extreal_mul(to_real(n, x), to_real(n, y))};
  }

  Value logsum(const Node& n) {
    std::vector<Value> vals;
    bool lazy = false;
    Value fam = p_family(n, vals, lazy);
    if (lazy) fail(n, "logsum takes a finite list of u's");
    const auto& us = *fam.get<std::vector<Value>>();
    std::string inst = instance_for(n, vals, false);
    auto run = [&](auto rig, auto conv) -> Value {
      using T = std::decay_t<decltype(*rig.one)>;
      std::vector<T> u;
      std::vector<LogElem<T>> terms;
      for (const Value& v : us) {
        u.push_back(conv(v));
        terms.push_back({binary_add(rig.base, *rig.one, u.back())});
      }
      return {LogValue{std::make_shared<const Value>(Value{log_series_sum(rig, terms, u, level_).base})}};
    };
    if (inst == "nat") return run(nat_rig(), [&](const Value& v) { return to_nat(n, v); });
    if (inst == "dyadic") return run(dyadic_rig(), [&](const Value& v) { return to_dyadic(n, v); });
    return run(extreal_rig(), [&](const Value& v) { return to_real(n, v); });
  }

  Value tilde_op(const Node& n) {
    arity(n, 2);
    const Node& f = n.args[0];
    if (f.kind != Node::Kind::ident) fail(f, "expected an endomorphism name: h, id or zero");
    Value a = eval(n.args[1]);
    if (auto p = a.get<PointValue>()) {
      auto inst = sup_lattice_instance(p->lattice);
      Endo<LatticePoint> e;
      if (f.text == "id") e = identity_endo<LatticePoint>();
      else if (f.text == "zero") e = zero_endo(inst.zero);
      else fail(f, "on a lattice the endomorphisms are id and zero");
      return {PointValue{p->lattice, tilde(inst, e, p->point).value}};
    }
    if (auto x = a.get<ExtNat>()) {
      auto inst = extnat_instance();
      if (f.text == "h") fail(f, "ℕ∪{∞} has no halving map");
      Endo<ExtNat> e = f.text == "id" ? identity_endo<ExtNat>() : zero_endo(ExtNat(0));
      if (f.text != "id" && f.text != "zero") fail(f, "unknown endomorphism '" + f.text + "'");
      return {tilde(inst, e, *x).value};
    }
    auto inst = extreal_instance();
    Endo<LowerReal> e;
    if (f.text == "h" || f.text == "halve") e = halving();
    else if (f.text == "id") e = identity_endo<LowerReal>();
    else if (f.text == "zero") e = zero_endo(LowerReal());
    else fail(f, "unknown endomorphism '" + f.text + "'");
    return {tilde(inst, e, to_real(n.args[1], a)).value};
  }

  Value action(const Node& n) {
    arity(n, 2);
    Value alpha = eval(n.args[0]);
    Value a = eval(n.args[1]);
    BinaryExpansion scalar;
    if (auto e = alpha.get<BinaryExpansion>()) scalar = *e;
    else if (auto k = alpha.get<ExtNat>()) scalar.integer = *k;
    else {
      DyadicExt d = to_dyadic(n.args[0], alpha);
      if (d.is_infinite()) scalar.integer = ExtNat::infinity();
      else scalar = binary_expand(d);
    }
    if (auto p = a.get<PointValue>()) {
      scalar.known_until.reset();
      auto inst = sup_lattice_instance(p->lattice);
      std::vector<LatticePoint> all;
      for (std::size_t i = 0; i < p->lattice->size(); ++i) all.push_back({i});
      auto module = make_magnitude_module(inst, identity_endo<LatticePoint>(), all, level_);
      return {PointValue{p->lattice, scalar_action(module, scalar, p->point).value}};
    }
    // A scalar known only as a prefix (such as pi) acts through that prefix,
    // which yields a one-sided lower bound.
    bool prefix = scalar.known_until.has_value();
    scalar.known_until.reset();
    auto inst = extreal_instance();
    std::vector<LowerReal> probe_samples{LowerReal(DyadicExt(1)), LowerReal(DyadicExt(3)),
                                         LowerReal::from_rational(mpq_class(1, 3))};
    Check report;
    auto module = make_magnitude_module(inst, halving(), probe_samples, level_, &report);
    if (!module) fail(n, "halving failed Zeno verification: " + report.detail);
    LowerReal r = scalar_action(module, scalar, to_real(n.args[1], a)).value;
    if (!prefix) return {r};
    return {LowerReal::from_bounds([r](std::size_t k) { return r.bound(k).truncated(k); })};
  }

  Value omegacheck(const Node& n) {
    arity(n, 2);
    Value fam = eval(n.args[0]);
    Value fib = eval(n.args[1]);
    auto fibs = fib.get<std::vector<Value>>();
    if (!fibs) fail(n.args[1], "expected a list of fibre sizes");
    std::vector<ExtNat> sizes;
    for (const Value& v : *fibs) sizes.push_back(to_nat(n.args[1], v));
    OrderPreservingMap xi(sizes);
    std::string inst = n.inst.empty() ? "nat" : n.inst;
    auto conv = [&](const Value& v) { return to_nat(n.args[0], v); };
    if (inst == "nat" || inst == "extnat") {
      auto s = extnat_instance();
      return {CheckValue{omega_assoc_check(OmegaMonoid<ExtNat>::from_series(s),
                                           to_family<ExtNat>(n.args[0], s, fam, conv), xi, level_)}};
    }
    if (inst == "pnat") {
      Rig<ExtNat> rig = nat_rig();
      return {CheckValue{omega_assoc_check(OmegaMonoid<ExtNat>::from_rig(rig),
                                           to_family<ExtNat>(n.args[0], rig.base, fam, conv), xi,
                                           level_)}};
    }
    fail(n, "omegacheck instances are nat and pnat");
  }

  ApproxLevel level_;
};

std::string strip_comment(std::string_view line) {
  std::size_t hash = line.find('#');
  return std::string(line.substr(0, hash));
}

}  // namespace

std::vector<std::string> eval_text(std::string_view text, ApproxLevel level) {
  std::vector<std::string> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line = strip_comment(text.substr(start, end - start));
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) {
      Node n = Parser(line, line_no).parse();
      out.push_back(print(Evaluator(level).eval(n), level));
    }
    start = end + 1;
  }
  return out;
}

std::string eval_expression(std::string_view expr, ApproxLevel level) {
  auto lines = eval_text(expr, level);
  if (lines.size() != 1) throw EvalError(1, 1, "expected exactly one expression");
  return lines.front();
}

}  // namespace realsets::cli
