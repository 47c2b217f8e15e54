#include "braidcalc/witt.hpp"

#include <algorithm>

#include "braidcalc/rewrite.hpp"

namespace braidcalc {

LaurentPoly LaurentPoly::monomial(long k, const Scalar& c) {
  LaurentPoly p;
  p.add(k, c);
  return p;
}

Scalar LaurentPoly::coeff(long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar() : it->second;
}

long LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly::add(long k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [i, x] : a.terms_)
    for (const auto& [j, y] : b.terms_) out.add(i + j, x * y);
  return out;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
  LaurentPoly out;
  for (const auto& [k, x] : terms_) out.add(k, x * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e + k, x);
  return out;
}

LaurentPoly LaurentPoly::dilate(const Scalar& s) const {
  if (s.is_zero() && !is_polynomial()) throw Error("dilate: x -> 0 on a Laurent polynomial");
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.add(k, c * s.pow(static_cast<int>(k)));
  return out;
}

LaurentPoly LaurentPoly::affine(const Scalar& s, const Scalar& b) const {
  if (b.is_zero()) return dilate(s);
  if (!is_polynomial()) throw Error("affine substitution needs a polynomial");
  LaurentPoly lin = monomial(1, s) + constant(b);
  LaurentPoly out, power = constant(1);
  long e = 0;
  for (const auto& [k, c] : terms_) {
    for (; e < k; ++e) power = power * lin;
    out += power.scaled(c);
  }
  return out;
}

LaurentPoly LaurentPoly::divide(const LaurentPoly& d) const {
  if (d.is_zero()) throw Error("division by the zero polynomial");
  if (d.terms_.size() == 1) {
    const auto& [j, c] = *d.terms_.begin();
    return shifted(-j).scaled(c.inverse());
  }
  if (!is_polynomial() || !d.is_polynomial()) throw Error("polynomial division needs polynomials");
  LaurentPoly rem = *this, quot;
  const auto& [dk, dc] = *d.terms_.rbegin();
  while (!rem.is_zero() && rem.max_exponent() >= dk) {
    long k = rem.max_exponent() - dk;
    Scalar c = rem.terms_.rbegin()->second / dc;
    quot.add(k, c);
    rem -= d.shifted(k).scaled(c);
  }
  if (!rem.is_zero()) throw Error("polynomial division leaves a remainder");
  return quot;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string cs = c.to_string(var);
    bool neg = !cs.empty() && cs[0] == '-' && c.is_constant();
    if (neg) cs = cs.substr(1);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string mono = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += (c.is_constant() ? cs : "(" + cs + ")") + " " + mono;
  }
  return out;
}

Scalar q_integer(long k, const Scalar& q) {
  Scalar out;
  if (k >= 0)
    for (long i = 0; i < k; ++i) out += q.pow(static_cast<int>(i));
  else
    for (long i = k; i < 0; ++i) out -= q.pow(static_cast<int>(i));
  return out;
}

LaurentPoly q_derivative(const LaurentPoly& f, const Scalar& q) {
  LaurentPoly out;
  for (const auto& [k, c] : f.terms()) out.add(k - 1, c * q_integer(k, q));
  return out;
}

namespace {

void require_nonzero(const Scalar& h, const char* what) {
  if (h.is_zero()) throw Error(std::string(what) + ": h must be nonzero");
}

void require_polynomial(const LaurentPoly& f, const char* what) {
  if (!f.is_polynomial()) throw Error(std::string(what) + ": argument must be a polynomial");
}

LaurentPoly shift_arg(const LaurentPoly& f, const Scalar& c) { return f.affine(1, c); }

}  // namespace

LaurentPoly h_derivative(const LaurentPoly& f, const Scalar& h) {
  require_nonzero(h, "h_derivative");
  require_polynomial(f, "h_derivative");
  return (shift_arg(f, h) - f).scaled(h.inverse());
}

LaurentPoly qh_derivative(const LaurentPoly& f, const Scalar& h, const Scalar& q) {
  require_polynomial(f, "qh_derivative");
  LaurentPoly den = LaurentPoly::monomial(1, q - 1) + LaurentPoly::constant(h);
  if (den.is_zero()) throw Error("qh_derivative: q = 1 and h = 0 is degenerate");
  return (f.affine(q, h) - f).divide(den);
}

LaurentPoly tilde_q_derivative(const LaurentPoly& f, const Scalar& q) {
  Scalar gap = q - q.inverse();
  if (gap.is_zero()) throw Error("tilde_q_derivative: q = q^-1 is degenerate");
  return (f.dilate(q) - f.dilate(q.inverse())).divide(LaurentPoly::monomial(1, gap));
}

LaurentPoly tilde_h_derivative(const LaurentPoly& f, const Scalar& h) {
  require_nonzero(h, "tilde_h_derivative");
  require_polynomial(f, "tilde_h_derivative");
  return (shift_arg(f, h) - shift_arg(f, -h)).scaled((h * 2).inverse());
}

LaurentPoly random_polynomial(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> coef(-4, 4);
  LaurentPoly f;
  for (int k = 0; k <= max_degree; ++k) f.add(k, coef(rng));
  return f;
}

LaurentPoly random_laurent(std::mt19937& rng, int radius) {
  return random_polynomial(rng, 2 * radius).shifted(-radius);
}

namespace {

using Op = std::function<LaurentPoly(const LaurentPoly&)>;

// D x - a x D = 1 + h D on every input.
ConditionReport permutation_check(const std::string& id, const Op& D, const std::vector<LaurentPoly>& fs,
                                  const Scalar& a, const Scalar& h) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const LaurentPoly& f = fs[i];
    LaurentPoly lhs = D(LaurentPoly::x() * f) - (LaurentPoly::x() * D(f)).scaled(a);
    LaurentPoly rhs = f + D(f).scaled(h);
    if (!(lhs == rhs))
      return make_report(id, false, "fails on input " + std::to_string(i + 1) + ": " + f.to_string() +
                                        "; difference " + (lhs - rhs).to_string());
  }
  return make_report(id, true, std::to_string(fs.size()) + " inputs");
}

}  // namespace

ConditionReport q_permutation_check(const std::vector<LaurentPoly>& fs, const Scalar& q) {
  return permutation_check("perm.q", [&](const LaurentPoly& f) { return q_derivative(f, q); }, fs, q, 0);
}

ConditionReport h_permutation_check(const std::vector<LaurentPoly>& fs, const Scalar& h) {
  return permutation_check("perm.h", [&](const LaurentPoly& f) { return h_derivative(f, h); }, fs, 1, h);
}

ConditionReport qh_permutation_check(const std::vector<LaurentPoly>& fs, const Scalar& h, const Scalar& q) {
  return permutation_check("perm.qh", [&](const LaurentPoly& f) { return qh_derivative(f, h, q); }, fs, q, h);
}

ConditionReport qh_conjugation_check(const std::vector<LaurentPoly>& fs, const Scalar& h, const Scalar& q) {
  const std::string id = "perm.qh.conjugation";
  if (q == Scalar(1)) throw Error("qh_conjugation_check: q = 1 has no shift");
  Scalar c = h / (q - 1);
  Op conj = [&](const LaurentPoly& f) { return shift_arg(q_derivative(shift_arg(f, -c), q), c); };
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!(conj(fs[i]) == qh_derivative(fs[i], h, q)))
      return make_report(id, false, "S_c d_q S_-c differs from d_qh on input " + std::to_string(i + 1));
  ConditionReport rel = permutation_check(id, conj, fs, q, h);
  if (!rel.passed()) return rel;
  return make_report(id, true, "c = " + c.to_string());
}

LaurentPoly witt_apply(long k, const LaurentPoly& f, const Scalar& q) { return q_derivative(f, q).shifted(k + 1); }

ConditionReport witt_relation_check(long m, long n, long bound, int shift, const Scalar& q) {
  const std::string id = "witt.relation(" + std::to_string(m) + "," + std::to_string(n) + ")";
  Scalar cm = q.pow(static_cast<int>(m) + shift), cn = q.pow(static_cast<int>(n) + shift);
  Scalar lin = q_integer(n + 1, q) - q_integer(m + 1, q);
  for (long s = -bound; s <= bound; ++s) {
    LaurentPoly f = LaurentPoly::monomial(s);
    LaurentPoly r = witt_apply(m, witt_apply(n, f, q), q).scaled(cm) - witt_apply(n, witt_apply(m, f, q), q).scaled(cn) -
                    witt_apply(m + n, f, q).scaled(lin);
    if (!r.is_zero()) return make_report(id, false, "fails on x^" + std::to_string(s) + ": " + r.to_string());
  }
  return make_report(id, true);
}

Scalar WittStructure::weight(long k) const {
  if (param.is_zero()) throw Error("witt structure: the parameter must be nonzero");
  return kind == Kind::q ? param.pow(static_cast<int>(k + 1)) : param.pow(static_cast<int>(k));
}

Scalar WittStructure::bracket(long k, long l) const {
  if (kind == Kind::q) return q_integer(l + 1, param) - q_integer(k + 1, param);
  return param.pow(static_cast<int>(l)) - param.pow(static_cast<int>(k));
}

WittStructure qwitt(const Scalar& q) { return {WittStructure::Kind::q, q}; }
WittStructure hwitt(const Scalar& t) { return {WittStructure::Kind::h, t}; }

WittElement witt_e(long k, const Scalar& c) {
  WittElement e;
  if (!c.is_zero()) e[k] = c;
  return e;
}

WittElement witt_bracket(const WittElement& a, const WittElement& b, const WittStructure& s) {
  WittElement out;
  for (const auto& [k, x] : a)
    for (const auto& [l, y] : b) {
      Scalar c = x * y * s.bracket(k, l);
      if (c.is_zero()) continue;
      Scalar& slot = out[k + l];
      slot += c;
      if (slot.is_zero()) out.erase(k + l);
    }
  return out;
}

WittElement qwitt_bracket(const WittElement& a, const WittElement& b, const Scalar& q) {
  return witt_bracket(a, b, qwitt(q));
}

WittElement qwitt_jacobiator(long k, long l, long m, const Scalar& q) {
  WittElement out;
  auto add = [&](long a, long b, long c) {
    WittElement t = qwitt_bracket(witt_e(a), qwitt_bracket(witt_e(b), witt_e(c), q), q);
    for (const auto& [i, x] : t) {
      Scalar& slot = out[i];
      slot += x * (1 + q.pow(static_cast<int>(a)));
      if (slot.is_zero()) out.erase(i);
    }
  };
  add(k, l, m);
  add(l, m, k);
  add(m, k, l);
  return out;
}

LetterNamer witt_namer() {
  return [](int k) { return "e_" + std::to_string(k); };
}

namespace {

Tensor w3(long a, long b, long c, const Scalar& coef) {
  return Tensor(Word{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)}, coef);
}

// w_a e_a e_b - w_b e_b e_a placed in front of (first) or behind (last) e_c.
Tensor rel_then(long a, long b, long c, const WittStructure& s) {
  return w3(a, b, c, s.weight(a)) - w3(b, a, c, s.weight(b));
}

Tensor then_rel(long c, long a, long b, const WittStructure& s) {
  return w3(c, a, b, s.weight(a)) - w3(c, b, a, s.weight(b));
}

}  // namespace

Tensor witt_Z(long k, long l, long m, const WittStructure& s) {
  Tensor z;
  z.add_scaled(rel_then(l, m, k, s), s.weight(l) * s.weight(m));
  z.add_scaled(rel_then(m, k, l, s), s.weight(m) * s.weight(k));
  z.add_scaled(rel_then(k, l, m, s), s.weight(k) * s.weight(l));
  return z;
}

Tensor witt_Z_right(long k, long l, long m, const WittStructure& s) {
  Tensor z;
  z.add_scaled(then_rel(m, k, l, s), s.weight(m).pow(2));
  z.add_scaled(then_rel(k, l, m, s), s.weight(k).pow(2));
  z.add_scaled(then_rel(l, m, k, s), s.weight(l).pow(2));
  return z;
}

std::optional<Tensor> witt_alpha(const Tensor& t, const WittStructure& s) {
  Tensor out;
  for (const auto& [w, c] : t.terms()) {
    if (w.size() != 2 || w[0] == w[1]) return std::nullopt;
    long a = w[0], b = w[1];
    if (a > b) {
      if (t.coeff({w[1], w[0]}).is_zero()) return std::nullopt;
      continue;  // handled with its partner
    }
    Scalar cab = c, cba = t.coeff({w[1], w[0]});
    Scalar lambda = cab / s.weight(a);
    if (!(cba == -lambda * s.weight(b))) return std::nullopt;
    out.add(Word{static_cast<int>(a + b)}, lambda * s.bracket(a, b));
  }
  return out;
}

bool witt_in_I(const Tensor& t, const WittStructure& s) { return witt_alpha(t, s).has_value(); }

namespace {

// Applies alpha to the two letters at position pos of every word.
std::optional<Tensor> witt_alpha_at(const Tensor& t, const WittStructure& s, bool front) {
  std::map<Word, Tensor, WordLess> groups;
  for (const auto& [w, c] : t.terms()) {
    if (w.size() < 2) return std::nullopt;
    std::size_t pos = front ? 0 : w.size() - 2;
    Word rest = w;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos), rest.begin() + static_cast<std::ptrdiff_t>(pos + 2));
    groups[rest].add(Word{w[pos], w[pos + 1]}, c);
  }
  Tensor out;
  for (const auto& [rest, pair] : groups) {
    std::optional<Tensor> a = witt_alpha(pair, s);
    if (!a) return std::nullopt;
    Tensor r(rest);
    out += front ? *a * r : r * *a;
  }
  return out;
}

Tensor restrict_pair(const Tensor& t, long a, long b) {
  Tensor out;
  for (const auto& [w, c] : t.terms())
    if (w.size() == 2 && ((w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))) out.add(w, c);
  return out;
}

std::string triple(long k, long l, long m) {
  return "(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + ")";
}

}  // namespace

std::optional<Tensor> witt_alpha_12(const Tensor& t, const WittStructure& s) { return witt_alpha_at(t, s, true); }
std::optional<Tensor> witt_alpha_23(const Tensor& t, const WittStructure& s) { return witt_alpha_at(t, s, false); }

bool witt_indices_distinct(long k, long l, long m) {
  std::vector<long> v{k, l, m, k + l, k + m, l + m};
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

ConditionReport witt_pp_check(long k, long l, long m, const WittStructure& s) {
  const std::string id = s.name() + ".pp" + triple(k, l, m);
  Tensor z = witt_Z(k, l, m, s);
  std::optional<Tensor> a12 = witt_alpha_12(z, s), a23 = witt_alpha_23(z, s);
  if (!a12 || !a23) throw Error("witt_pp_check: Z is not in I (x) U and U (x) I");
  Tensor diff = *a12 - *a23;
  bool in_I = witt_in_I(diff, s);
  if (!witt_indices_distinct(k, l, m))
    return {id, Status::inconclusive,
            std::string("indices not pairwise distinct; difference ") + (in_I ? "lies" : "does not lie") + " in I",
            {}};
  if (in_I) return make_report(id, true);
  for (const auto& [a, b] : {std::pair{k, l + m}, std::pair{l, m + k}, std::pair{m, k + l}}) {
    Tensor w = restrict_pair(diff, a, b);
    if (!witt_in_I(w, s))
      return make_report(id, false, "condition 1 fails on the pair {e_" + std::to_string(a) + ", e_" +
                                        std::to_string(b) + "}: " + w.to_string(witt_namer(), "q"),
                         w);
  }
  return make_report(id, false, "condition 1 fails", diff);
}

ConditionReport qwitt_pp_scan(long lo, long hi) {
  const std::string id = "qwitt.pp.scan";
  int admissible = 0;
  for (long k = lo; k <= hi; ++k)
    for (long l = lo; l <= hi; ++l)
      for (long m = lo; m <= hi; ++m) {
        if (!witt_indices_distinct(k, l, m)) continue;
        ++admissible;
        if (!witt_pp_check(k, l, m).failed())
          return make_report(id, false, "condition 1 holds at symbolic q for " + triple(k, l, m));
        if (!witt_pp_check(k, l, m, qwitt(1)).passed())
          return make_report(id, false, "condition 1 fails at q = 1 for " + triple(k, l, m));
      }
  return make_report(id, true, std::to_string(admissible) + " admissible triples");
}

ConditionReport witt_relation_scan(long lo, long hi, long bound) {
  for (long m = lo; m <= hi; ++m)
    for (long n = lo; n <= hi; ++n) {
      ConditionReport r = witt_relation_check(m, n, bound);
      if (!r.passed()) return make_report("witt.relation.scan", false, r.id + ": " + r.detail);
    }
  return make_report("witt.relation.scan", true);
}

ConditionReport qwitt_identities_check(int samples, unsigned seed, long radius) {
  const std::string id = "qwitt.identities";
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> idx(-radius, radius);
  for (int s = 0; s < samples; ++s) {
    long k = idx(rng), l = idx(rng), m = idx(rng);
    WittElement a = qwitt_bracket(witt_e(k), witt_e(l)), b = qwitt_bracket(witt_e(l), witt_e(k));
    for (auto& [i, c] : b) c = -c;
    if (a != b) return make_report(id, false, "q-skew-symmetry fails for (" + std::to_string(k) + "," + std::to_string(l) + ")");
    if (!qwitt_jacobiator(k, l, m).empty()) return make_report(id, false, "q-Jacobi fails for " + triple(k, l, m));
  }
  return make_report(id, true, std::to_string(samples) + " random triples");
}

AlgebraPresentation witt_presentation(long lo, long hi, const WittStructure& s) {
  if (hi < lo) throw Error("witt_presentation: empty range");
  AlgebraPresentation p;
  p.name = s.kind == WittStructure::Kind::q ? "qwitt-truncated" : "hwitt-truncated";
  p.symbol = s.kind == WittStructure::Kind::q ? "q" : "t";
  for (long k = lo; k <= hi; ++k) p.generators.push_back("e_" + std::to_string(k));
  auto letter = [&](long k) { return static_cast<int>(k - lo); };
  for (long a = lo; a <= hi; ++a)
    for (long b = a + 1; b <= hi; ++b) {
      Relation r;
      r.quadratic = Tensor({letter(a), letter(b)}, s.weight(a)) - Tensor({letter(b), letter(a)}, s.weight(b));
      if (a + b >= lo && a + b <= hi) r.linear = Tensor({letter(a + b)}, -s.bracket(a, b));
      p.relations.push_back(std::move(r));
    }
  p.validate();
  return p;
}

BracketData hwitt_data(long K, const Scalar& t) {
  if (K < 3) throw Error("hwitt_data: K must be at least 3");
  return bracket_from_presentation(witt_presentation(1, K, hwitt(t)));
}

AlgebraPresentation jackson_sl2(const Scalar& q) {
  AlgebraPresentation p;
  p.name = "jackson-sl2";
  p.generators = {"e_-1", "e_0", "e_1"};
  enum { M = 0, O = 1, P = 2 };
  p.relations.push_back({Tensor({M, O}) - Tensor({O, M}, q), Tensor({M}, -1), {}});
  p.relations.push_back({Tensor({M, P}) - Tensor({P, M}, q * q), Tensor({O}, -(1 + q)), {}});
  p.relations.push_back({Tensor({O, P}) - Tensor({P, O}, q), Tensor({P}, -1), {}});
  p.validate();
  return p;
}

ConditionReport jackson_operator_check(long bound, const Scalar& q) {
  auto e = [&](long k, const LaurentPoly& f) { return witt_apply(k, f, q); };
  for (long s = -bound; s <= bound; ++s) {
    LaurentPoly f = LaurentPoly::monomial(s);
    LaurentPoly r1 = e(-1, e(0, f)) - e(0, e(-1, f)).scaled(q) - e(-1, f);
    LaurentPoly r2 = e(-1, e(1, f)) - e(1, e(-1, f)).scaled(q * q) - e(0, f).scaled(1 + q);
    LaurentPoly r3 = e(0, e(1, f)) - e(1, e(0, f)).scaled(q) - e(1, f);
    if (!r1.is_zero() || !r2.is_zero() || !r3.is_zero())
      return make_report("jackson.operators", false, "fails on x^" + std::to_string(s));
  }
  return make_report("jackson.operators", true, "x^s for |s| <= " + std::to_string(bound));
}

std::vector<ConditionReport> jackson_sl2_suite(const Scalar& q) {
  std::vector<ConditionReport> out;
  out.push_back(jackson_operator_check(6, q));
  AlgebraPresentation p = jackson_sl2(q);
  BracketData d = bracket_from_presentation(p);
  auto [pp1, pp2] = check_pp(d);
  pp1.id = "jackson.pp.1";
  pp2.id = "jackson.pp.2";
  out.push_back(pp1);
  out.push_back(pp2);
  DimReport dims = pbw_check(p, 4);
  std::string detail = "quadratic " + format_dims(dims.quadratic) + ", graded " + format_dims(dims.graded);
  bool expected = dims.graded == std::vector<long>{1, 3, 6, 10, 15};
  out.push_back(make_report("jackson.pbw", dims.pass && expected, detail));
  return out;
}

}  // namespace braidcalc
