#include "pbracket/powerbracket.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "io_detail.hpp"

namespace pbracket {

PowerBracket::PowerBracket(Biquandle biquandle, RingZm ring, CoefficientTable A,
                           CoefficientTable B, CoefficientTable Abar, CoefficientTable Bbar,
                           std::int64_t w, std::vector<std::int64_t> delta)
    : X_(std::move(biquandle)),
      ring_(ring),
      A_(std::move(A)),
      B_(std::move(B)),
      Abar_(std::move(Abar)),
      Bbar_(std::move(Bbar)),
      w_(ring.reduce(w)),
      w_inv_(0),
      delta_(std::move(delta)) {
  const int n = X_.size();
  if (n > 20) throw MalformedTable("power brackets support at most 20 elements");
  for (auto* t : {&A_, &B_, &Abar_, &Bbar_}) {
    if (t->size() != n) throw MalformedTable("coefficient table is not " + std::to_string(n) + "x" + std::to_string(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) (*t)(r, c) = ring_.reduce((*t)(r, c));
  }
  if (delta_.size() != (std::size_t{1} << n)) {
    throw MalformedTable("delta needs " + std::to_string(std::size_t{1} << n) + " entries, got " +
                         std::to_string(delta_.size()));
  }
  for (auto& d : delta_) d = ring_.reduce(d);
  w_inv_ = inverse_mod(w_, ring_.modulus());
}

std::string axiom_tag(Axiom a) {
  switch (a) {
    case Axiom::I:
      return "i";
    case Axiom::II_I:
      return "ii.i";
    case Axiom::II_II:
      return "ii.ii";
    case Axiom::III_I:
      return "iii.i";
    case Axiom::III_II:
      return "iii.ii";
    case Axiom::III_III:
      return "iii.iii";
    case Axiom::III_IV:
      return "iii.iv";
    case Axiom::III_V:
      return "iii.v";
  }
  return "?";
}

namespace {

std::string set_string(ColorSet s) {
  std::string out = "{";
  bool first = true;
  for (int k = 0; s >> k; ++k) {
    if ((s >> k) & 1) {
      out += (first ? "" : ",") + std::to_string(k + 1);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

std::string BracketViolation::describe() const {
  std::ostringstream os;
  os << "(" << axiom_tag(axiom) << ") eq " << equation << " at ";
  const char* names[] = {"x", "y", "z"};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    os << (i ? " " : "") << names[i] << "=" << elements[i] + 1;
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    os << (sets.size() == 1 ? " C=" : " C" + std::to_string(i + 1) + "=") << set_string(sets[i]);
  }
  os << ": " << left << " != " << right;
  return os.str();
}

namespace checks {

BracketView view_of(const PowerBracket& b) {
  return BracketView{&b.biquandle(),        b.modulus(),         b.A().data().data(),
                     b.B().data().data(),   b.Abar().data().data(), b.Bbar().data().data(),
                     b.w(),                 b.w_inverse(),       b.delta_table().data()};
}

namespace {

// Calls f(C) for every C containing `required`, masks ascending.
template <typename F>
bool for_supersets(ColorSet required, ColorSet full, F&& f) {
  const ColorSet free = full & ~required;
  ColorSet sub = 0;
  while (true) {
    if (!f(required | sub)) return false;
    if (sub == free) return true;
    sub = (sub - free) & free;  // next subset of `free` in ascending order
  }
}

struct Ctx {
  const BracketView& v;
  int n;
  std::int64_t m;
  ColorSet full;

  explicit Ctx(const BracketView& view)
      : v(view), n(view.X->size()), m(view.m), full((ColorSet{1} << view.X->size()) - 1) {}

  std::int64_t d(ColorSet s) const { return v.delta[s]; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % m; }
  std::int64_t A(Element x, Element y) const { return v.A[x * n + y]; }
  std::int64_t B(Element x, Element y) const { return v.B[x * n + y]; }
  std::int64_t Ab(Element x, Element y) const { return v.Abar[x * n + y]; }
  std::int64_t Bb(Element x, Element y) const { return v.Bbar[x * n + y]; }
};

bool emit(const Sink& sink, Axiom ax, int eq, std::vector<Element> el, std::vector<ColorSet> sets,
          std::int64_t l, std::int64_t r) {
  return sink(BracketViolation{ax, eq, std::move(el), std::move(sets), l, r});
}

// ---- Type III tables -------------------------------------------------------
//
// Symbols for the extra colors appearing in the closures:
//   Y = y, XY = x under y, ZY = z over y (left side of the move),
//   ZX = z over x, XZ = x under z, YZXZ = (y under z) over (x under z) (right side).
enum Sym : std::uint8_t { Y = 1, XY = 2, ZY = 4, ZX = 8, XZ = 16, YZXZ = 32 };
constexpr std::uint8_t L = Y | XY | ZY;
constexpr std::uint8_t R = ZX | XZ | YZXZ;
constexpr std::uint8_t C1 = 1, C2 = 2, C3 = 4;

struct Factor {
  std::uint8_t cs;    // which of C1, C2, C3 are unioned in
  std::uint8_t syms;  // which symbols are unioned in
};

struct Term {
  std::uint8_t count;
  std::array<Factor, 4> f;
};

// Membership conditions: required elements of C1, C2, C3.
// Condition symbols: x, z, y over x, y under z, (z over x) over (y over x),
// (x under z) under (y under z).
enum CondSym : std::uint8_t { cX, cZ, cYX, cYZ, cZXYX, cXZYZ };

struct Clause {
  Axiom axiom;
  std::array<std::array<CondSym, 2>, 3> cond;
  std::array<Term, 8> lhs;  // order AAA, AAB, ABA, ABB, BAA, BAB, BBA, BBB
  std::array<Term, 8> rhs;
};

constexpr Term T1(Factor a) { return Term{1, {a, {}, {}, {}}}; }
constexpr Term T2(Factor a, Factor b) { return Term{2, {a, b, {}, {}}}; }
constexpr Term T3(Factor a, Factor b, Factor c) { return Term{3, {a, b, c, {}}}; }
constexpr Term T4(Factor a, Factor b, Factor c, Factor d) { return Term{4, {a, b, c, d}}; }
constexpr Factor F(std::uint8_t cs, std::uint8_t syms = 0) { return Factor{cs, syms}; }

constexpr std::array<Clause, 5> kTypeIII = {{
    {Axiom::III_I,
     {{{cX, cZ}, {cYX, cYZ}, {cZXYX, cXZYZ}}},
     {T3(F(C1, Y), F(C2, XY | ZY), F(C3)), T2(F(C1, Y), F(C2 | C3, XY | ZY)),
      T2(F(C1 | C2, L), F(C3)), T1(F(C1 | C2 | C3, L)), T2(F(C1 | C2, L), F(C3)),
      T1(F(C1 | C2 | C3, L)), T3(F(C1 | C2), F(C3), F(0, L)), T2(F(C1 | C2), F(C3, L))},
     {T3(F(C1), F(C2, ZX | XZ), F(C3, YZXZ)), T2(F(C1), F(C2 | C3, R)),
      T2(F(C1), F(C2 | C3, R)), T3(F(C1), F(C2 | C3), F(0, R)),
      T2(F(C1 | C2, ZX | XZ), F(C3, YZXZ)), T1(F(C1 | C2 | C3, R)), T1(F(C1 | C2 | C3, R)),
      T2(F(C1, R), F(C2 | C3))}},
    {Axiom::III_II,
     {{{cX, cYX}, {cZXYX, cXZYZ}, {cZ, cYZ}}},
     {T2(F(C1 | C3, L), F(C2)), T1(F(C1 | C2 | C3, L)), T3(F(C1, L), F(C2), F(C3)),
      T2(F(C1 | C2, L), F(C3)), T3(F(C1), F(C2), F(C3, L)), T2(F(C1), F(C2 | C3, L)),
      T4(F(C1), F(C2), F(C3), F(0, L)), T3(F(C1), F(C2, L), F(C3))},
     {T2(F(C1 | C3, ZX | XZ), F(C2, YZXZ)), T1(F(C1 | C2 | C3, R)), T1(F(C1 | C2 | C3, R)),
      T2(F(C1 | C2 | C3), F(0, R)), T3(F(C1, ZX), F(C2, YZXZ), F(C3, XZ)),
      T2(F(C1, ZX), F(C2 | C3, XZ | YZXZ)), T2(F(C1 | C2, ZX | YZXZ), F(C3, XZ)),
      T1(F(C1 | C2 | C3, R))}},
    {Axiom::III_III,
     {{{cX, cZ}, {cYX, cZXYX}, {cYZ, cXZYZ}}},
     {T2(F(C1, Y), F(C2 | C3, XY | ZY)), T3(F(C1, Y), F(C2, XY), F(C3, ZY)),
      T1(F(C1 | C2 | C3, L)), T2(F(C1 | C3, Y | ZY), F(C2, XY)), T1(F(C1 | C2 | C3, L)),
      T2(F(C1 | C2, Y | XY), F(C3, ZY)), T2(F(C1 | C2 | C3), F(0, L)), T1(F(C1 | C2 | C3, L))},
     {T2(F(C1), F(C2 | C3, R)), T3(F(C1), F(C2, R), F(C3)), T3(F(C1), F(C2), F(C3, R)),
      T4(F(C1), F(C2), F(C3), F(0, R)), T1(F(C1 | C2 | C3, R)), T2(F(C1 | C2, R), F(C3)),
      T2(F(C1 | C3, R), F(C2)), T3(F(C1, R), F(C2), F(C3))}},
    {Axiom::III_IV,
     {{{cX, cXZYZ}, {cYX, cZXYX}, {cZ, cYZ}}},
     {T1(F(C1 | C2 | C3, L)), T2(F(C1 | C3, Y | ZY), F(C2, XY)), T2(F(C1 | C2, L), F(C3)),
      T3(F(C1, Y | ZY), F(C2, XY), F(C3)), T2(F(C1 | C2), F(C3, L)), T1(F(C1 | C2 | C3, L)),
      T3(F(C1 | C2), F(C3), F(0, L)), T2(F(C1 | C2, L), F(C3))},
     {T1(F(C1 | C2 | C3, R)), T2(F(C1 | C3), F(C2, R)), T2(F(C1 | C3, R), F(C2)),
      T3(F(C1 | C3), F(C2), F(0, R)), T2(F(C1 | C2, ZX | YZXZ), F(C3, XZ)),
      T1(F(C1 | C2 | C3, R)), T3(F(C1, ZX | YZXZ), F(C2), F(C3, XZ)), T2(F(C1 | C3, R), F(C2))}},
    {Axiom::III_V,
     {{{cX, cYX}, {cZ, cZXYX}, {cYZ, cXZYZ}}},
     {T1(F(C1 | C2 | C3, L)), T2(F(C1 | C2, Y | XY), F(C3, ZY)), T2(F(C1, L), F(C2 | C3)),
      T1(F(C1 | C2 | C3, L)), T2(F(C1), F(C2 | C3, L)), T3(F(C1), F(C2, Y | XY), F(C3, ZY)),
      T3(F(C1), F(C2 | C3), F(0, L)), T2(F(C1), F(C2 | C3, L))},
     {T1(F(C1 | C2 | C3, R)), T2(F(C1 | C2, R), F(C3)), T2(F(C1 | C2), F(C3, R)),
      T3(F(C1 | C2), F(C3), F(0, R)), T2(F(C1, ZX), F(C2 | C3, XZ | YZXZ)),
      T3(F(C1, ZX), F(C2, XZ | YZXZ), F(C3)), T1(F(C1 | C2 | C3, R)), T2(F(C1 | C2, R), F(C3))}},
}};

struct TypeIIIFrame {
  std::array<ColorSet, 6> sym_mask;  // Y, XY, ZY, ZX, XZ, YZXZ as singleton masks
  std::array<ColorSet, 6> cond_mask;
  std::array<std::int64_t, 8> lcoef;
  std::array<std::int64_t, 8> rcoef;
};

TypeIIIFrame make_frame(const Ctx& c, Element x, Element y, Element z) {
  const Biquandle& X = *c.v.X;
  const Element xy = X.under(x, y), zy = X.over(z, y);
  const Element yx = X.over(y, x), zx = X.over(z, x);
  const Element xz = X.under(x, z), yz = X.under(y, z);
  const Element zx_yx = X.over(zx, yx), xz_yz = X.under(xz, yz), yz_xz = X.over(yz, xz);

  TypeIIIFrame f{};
  f.sym_mask = {singleton(y), singleton(xy), singleton(zy),
                singleton(zx), singleton(xz), singleton(yz_xz)};
  f.cond_mask = {singleton(x), singleton(z), singleton(yx),
                 singleton(yz), singleton(zx_yx), singleton(xz_yz)};
  const std::int64_t l1[2] = {c.A(x, y), c.B(x, y)};
  const std::int64_t l2[2] = {c.A(y, z), c.B(y, z)};
  const std::int64_t l3[2] = {c.A(xy, zy), c.B(xy, zy)};
  const std::int64_t r1[2] = {c.A(x, z), c.B(x, z)};
  const std::int64_t r2[2] = {c.A(yx, zx), c.B(yx, zx)};
  const std::int64_t r3[2] = {c.A(xz, yz), c.B(xz, yz)};
  for (int t = 0; t < 8; ++t) {
    const int a = (t >> 2) & 1, b = (t >> 1) & 1, d = t & 1;
    f.lcoef[t] = c.mul(c.mul(l1[a], l2[b]), l3[d]);
    f.rcoef[t] = c.mul(c.mul(r1[a], r2[b]), r3[d]);
  }
  return f;
}

std::int64_t eval_side(const Ctx& c, const TypeIIIFrame& fr, const std::array<Term, 8>& terms,
                       const std::array<std::int64_t, 8>& coef, const std::array<ColorSet, 3>& cs) {
  std::int64_t total = 0;
  for (int t = 0; t < 8; ++t) {
    if (coef[t] == 0) continue;
    std::int64_t prod = coef[t];
    const Term& term = terms[t];
    for (int k = 0; k < term.count && prod != 0; ++k) {
      ColorSet s = 0;
      const Factor& f = term.f[k];
      for (int i = 0; i < 3; ++i)
        if (f.cs & (1u << i)) s |= cs[i];
      for (int i = 0; i < 6; ++i)
        if (f.syms & (1u << i)) s |= fr.sym_mask[i];
      prod = c.mul(prod, c.d(s));
    }
    total += prod;
  }
  return total % c.m;
}

}  // namespace

bool check_i(const BracketView& v, Element x, const Sink& sink) {
  const Ctx c(v);
  const Element xx = v.X->under(x, x);
  const std::int64_t a = c.A(x, x), b = c.B(x, x), ab = c.Ab(x, x), bb = c.Bb(x, x);
  // Loop colored x under x split off (x in C), then loop colored x (x under x in C).
  const std::array<std::pair<Element, Element>, 2> forms = {{{x, xx}, {xx, x}}};
  for (int form = 0; form < 2; ++form) {
    const auto [member, loop] = forms[form];
    const bool go = for_supersets(singleton(member), c.full, [&](ColorSet C) {
      const std::int64_t dC = c.d(C), dl = c.d(singleton(loop)), dm = c.d(C | singleton(loop));
      const std::int64_t l0 = c.mul(v.w, dC);
      const std::int64_t r0 = (c.mul(c.mul(a, dC), dl) + c.mul(b, dm)) % c.m;
      if (l0 != r0 && !emit(sink, Axiom::I, 2 * form, {x}, {C}, l0, r0)) return false;
      const std::int64_t l1 = c.mul(v.w_inv, dC);
      const std::int64_t r1 = (c.mul(c.mul(ab, dC), dl) + c.mul(bb, dm)) % c.m;
      if (l1 != r1 && !emit(sink, Axiom::I, 2 * form + 1, {x}, {C}, l1, r1)) return false;
      return true;
    });
    if (!go) return false;
  }
  return true;
}

bool check_ii(const BracketView& v, Element x, Element y, bool derivation_variants,
              const Sink& sink) {
  const Ctx c(v);
  const Element xy = v.X->under(x, y), yx = v.X->over(y, x);
  const std::int64_t aa = c.mul(c.A(x, y), c.Ab(x, y));
  const std::int64_t ba = c.mul(c.B(x, y), c.Ab(x, y));
  const std::int64_t ab = c.mul(c.A(x, y), c.Bb(x, y));
  const std::int64_t bb = c.mul(c.B(x, y), c.Bb(x, y));
  const ColorSet e = singleton(xy) | singleton(yx);
  const ColorSet f = singleton(x) | singleton(y);
  const ColorSet sx = singleton(x), sy = singleton(y), sxy = singleton(xy), syx = singleton(yx);

  auto closed_i = [&](ColorSet C1, ColorSet C2) {
    const std::int64_t l = c.d(C1 | C2);
    const std::int64_t r = (c.mul(c.mul(c.mul(aa, c.d(C1)), c.d(C2)), c.d(e)) +
                            c.mul(c.mul(ba, c.d(C1 | e)), c.d(C2)) +
                            c.mul(c.mul(ab, c.d(C1)), c.d(C2 | e)) + c.mul(bb, c.d(C1 | C2 | e))) %
                           c.m;
    return std::pair{l, r};
  };

  for (ColorSet C1 = 1; C1 <= c.full; ++C1) {
    for (ColorSet C2 = 1; C2 <= c.full; ++C2) {
      const ColorSet U = C1 | C2, I = C1 & C2;
      // (ii.i) single closure
      if ((I & f) == f) {
        auto [l, r] = closed_i(C1, C2);
        if (l != r && !emit(sink, Axiom::II_I, 0, {x, y}, {C1, C2}, l, r)) return false;
      } else if (derivation_variants && (U & f) == f) {
        auto [l, r] = closed_i(C1, C2);
        if (l != r && !emit(sink, Axiom::II_I, 2, {x, y}, {C1, C2}, l, r)) return false;
      }
      // (ii.i) two closures
      if ((C1 & sx) && (C2 & sy)) {
        const std::int64_t l = c.mul(c.d(C1), c.d(C2));
        const std::int64_t r =
            (c.mul(c.mul(aa, c.d(U)), c.d(e)) + c.mul((ba + ab) % c.m, c.d(U | e)) +
             c.mul(c.mul(bb, c.d(C1 | syx)), c.d(C2 | sxy))) %
            c.m;
        if (l != r && !emit(sink, Axiom::II_I, 1, {x, y}, {C1, C2}, l, r)) return false;
      }
      // (ii.ii) single closure. Its derivation variant (intersection) is
      // implied by this union condition, so there is nothing extra to check.
      if ((U & (syx | sxy)) == (syx | sxy)) {
        const std::int64_t l = c.d(U);
        const std::int64_t r = (c.mul(c.mul(c.mul(aa, c.d(C1)), c.d(C2)), c.d(f)) +
                                c.mul(c.mul(ab, c.d(C1 | f)), c.d(C2)) +
                                c.mul(c.mul(ba, c.d(C1)), c.d(C2 | f)) + c.mul(bb, c.d(U | f))) %
                               c.m;
        if (l != r && !emit(sink, Axiom::II_II, 0, {x, y}, {C1, C2}, l, r)) return false;
      }
      // (ii.ii) two closures
      if ((C1 & syx) && (C2 & sxy)) {
        const std::int64_t l = c.mul(c.d(C1), c.d(C2));
        const std::int64_t r = (c.mul(c.mul(aa, c.d(U)), c.d(f)) +
                                c.mul((ab + ba) % c.m, c.d(U | f)) +
                                c.mul(c.mul(bb, c.d(C1 | sx)), c.d(C2 | sy))) %
                               c.m;
        if (l != r && !emit(sink, Axiom::II_II, 1, {x, y}, {C1, C2}, l, r)) return false;
      }
    }
  }
  return true;
}

bool check_iii(const BracketView& v, Element x, Element y, Element z, const Sink& sink) {
  const Ctx c(v);
  const TypeIIIFrame fr = make_frame(c, x, y, z);
  for (const Clause& clause : kTypeIII) {
    std::array<ColorSet, 3> req{};
    for (int i = 0; i < 3; ++i) {
      req[i] = fr.cond_mask[clause.cond[i][0]] | fr.cond_mask[clause.cond[i][1]];
    }
    std::array<ColorSet, 3> cs{};
    const bool go = for_supersets(req[0], c.full, [&](ColorSet a) {
      cs[0] = a;
      return for_supersets(req[1], c.full, [&](ColorSet b) {
        cs[1] = b;
        return for_supersets(req[2], c.full, [&](ColorSet d) {
          cs[2] = d;
          const std::int64_t l = eval_side(c, fr, clause.lhs, fr.lcoef, cs);
          const std::int64_t r = eval_side(c, fr, clause.rhs, fr.rcoef, cs);
          if (l == r) return true;
          return emit(sink, clause.axiom, 0, {x, y, z}, {cs[0], cs[1], cs[2]}, l, r);
        });
      });
    });
    if (!go) return false;
  }
  return true;
}

namespace {
const Sink kStopAtFirst = [](const BracketViolation&) { return false; };
}

bool holds_i(const BracketView& v, Element x) { return check_i(v, x, kStopAtFirst); }
bool holds_ii(const BracketView& v, Element x, Element y) {
  return check_ii(v, x, y, false, kStopAtFirst);
}
bool holds_iii(const BracketView& v, Element x, Element y, Element z) {
  return check_iii(v, x, y, z, kStopAtFirst);
}

}  // namespace checks

ViolationReport verify(const PowerBracket& bracket, const VerifyOptions& options) {
  using namespace checks;
  const BracketView v = view_of(bracket);
  const int n = bracket.size();
  ViolationReport report;
  const std::size_t cap = options.first_violation ? 1 : options.max_violations;

  const Sink collect = [&](const BracketViolation& viol) {
    report.violations.push_back(viol);
    if (cap != 0 && report.violations.size() >= cap) {
      report.truncated = true;
      return false;
    }
    return true;
  };

  for (Element x = 0; x < n; ++x)
    if (!check_i(v, x, collect)) return report;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!check_ii(v, x, y, options.derivation_variants, collect)) return report;

  const int triples = n * n * n;
  const int jobs = std::clamp(options.jobs, 1, triples);
  if (jobs == 1) {
    for (int t = 0; t < triples; ++t)
      if (!check_iii(v, t / (n * n), (t / n) % n, t % n, collect)) return report;
    return report;
  }

  // Parallel: each triple collects into its own slot, merged in triple order.
  std::vector<std::vector<BracketViolation>> per_triple(triples);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < triples; t = next++) {
      auto& slot = per_triple[t];
      check_iii(v, t / (n * n), (t / n) % n, t % n, [&](const BracketViolation& viol) {
        slot.push_back(viol);
        return cap == 0 || slot.size() < cap;
      });
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& slot : per_triple) {
    for (auto& viol : slot) {
      if (!collect(viol)) return report;
    }
  }
  return report;
}

PowerBracket from_standard(const Biquandle& X, const RingZm& ring, const CoefficientTable& A,
                           const CoefficientTable& B, std::int64_t w) {
  const int n = X.size();
  if (A.size() != n || B.size() != n) throw MalformedTable("coefficient table has wrong size");
  const std::int64_t m = ring.modulus();
  std::int64_t value = -1;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const std::int64_t a = ring.reduce(A(x, y)), b = ring.reduce(B(x, y));
      const std::int64_t ai = inverse_mod(a, m), bi = inverse_mod(b, m);
      const std::int64_t d = ring.reduce(-mulmod(a, bi, m) - mulmod(ai, b, m));
      if (value < 0) {
        value = d;
      } else if (d != value) {
        throw InconsistentDelta("delta value " + std::to_string(d) + " at (" +
                                std::to_string(x + 1) + "," + std::to_string(y + 1) +
                                ") differs from " + std::to_string(value));
      }
    }
  }
  CoefficientTable Abar(n), Bbar(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      Abar(x, y) = inverse_mod(A(x, y), m);
      Bbar(x, y) = inverse_mod(B(x, y), m);
    }
  }
  return PowerBracket(X, ring, A, B, Abar, Bbar, w,
                      std::vector<std::int64_t>(std::size_t{1} << n, value));
}

namespace {

CoefficientTable read_coefficients(detail::Tokens& tok, const char* name, int n) {
  tok.expect(name);
  CoefficientTable t(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) t(r, c) = tok.integer();
  return t;
}

void write_table(std::ostream& os, const char* name, const CoefficientTable& t) {
  os << name << "\n";
  for (int r = 0; r < t.size(); ++r) {
    for (int c = 0; c < t.size(); ++c) os << (c ? " " : "") << t(r, c);
    os << "\n";
  }
}

}  // namespace

PowerBracket parse_bracket(std::istream& in) {
  detail::Tokens tok(in);
  Biquandle X = detail::read_biquandle(tok);
  const int n = X.size();
  tok.expect("ring");
  const RingZm ring(tok.integer());
  auto A = read_coefficients(tok, "A", n);
  auto B = read_coefficients(tok, "B", n);
  auto Abar = read_coefficients(tok, "Abar", n);
  auto Bbar = read_coefficients(tok, "Bbar", n);
  tok.expect("w");
  const std::int64_t w = tok.integer();
  tok.expect("delta");
  std::vector<std::int64_t> delta;
  while (!tok.done()) delta.push_back(tok.integer());
  return PowerBracket(std::move(X), ring, std::move(A), std::move(B), std::move(Abar),
                      std::move(Bbar), w, std::move(delta));
}

PowerBracket parse_bracket(const std::string& text) {
  std::istringstream in(text);
  return parse_bracket(in);
}

PowerBracket load_bracket(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_bracket(in);
}

std::string serialize_bracket(const PowerBracket& b) {
  std::ostringstream os;
  os << serialize_biquandle(b.biquandle());
  os << "ring " << b.modulus() << "\n";
  write_table(os, "A", b.A());
  write_table(os, "B", b.B());
  write_table(os, "Abar", b.Abar());
  write_table(os, "Bbar", b.Bbar());
  os << "w " << b.w() << "\n";
  os << "delta";
  for (auto d : b.delta_table()) os << " " << d;
  os << "\n";
  return os.str();
}

}  // namespace pbracket
