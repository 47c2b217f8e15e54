#include "braidcalc/weyl.hpp"

#include <algorithm>
#include <random>

namespace braidcalc {

namespace {

Word shift_letters(const Word& w, int offset) {
  Word r = w;
  for (int& a : r) a += offset;
  return r;
}

Tensor shift_letters(const Tensor& t, int offset) {
  Tensor r;
  for (const auto& [w, c] : t.terms()) r.add(shift_letters(w, offset), c);
  return r;
}

std::vector<std::string> matrix_names(const std::string& base, int m) {
  if (m == 1) return {base};
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) out.push_back(base + "_" + std::to_string(i) + "^" + std::to_string(j));
  return out;
}

Relation relation_from(const Tensor& full) {
  Relation r;
  r.quadratic = full.component(2);
  r.linear = full.component(1);
  r.constant = full.coeff(Word{});
  return r;
}

// Commutators of all pairs of generators.
std::vector<Relation> commutators(int n) {
  std::vector<Relation> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.push_back(relation_from(Tensor({a, b}) - Tensor({b, a})));
  return out;
}

// Drops terms mentioning a removed letter and renumbers the rest.
Tensor remap(const Tensor& t, const std::vector<int>& map) {
  Tensor r;
  for (const auto& [w, c] : t.terms()) {
    Word nw;
    bool keep = true;
    for (int a : w) {
      if (map[static_cast<std::size_t>(a)] < 0) {
        keep = false;
        break;
      }
      nw.push_back(map[static_cast<std::size_t>(a)]);
    }
    if (keep) r.add(nw, c);
  }
  return r;
}

bool delta(int a, int b) { return a == b; }

// Rules [d^p, x_i] = b^p_{i,k} d^k + delta^p_i from structure constants.
std::map<std::pair<int, int>, Tensor> rules_from_constants(const StructureConstants& s) {
  std::map<std::pair<int, int>, Tensor> rules;
  int n = s.n;
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < n; ++i) {
      Tensor t({i, n + p});
      if (p == i) t.add(Word{}, 1);
      for (int k = 0; k < n; ++k) t.add({n + k}, s.Bc(p, i, k));
      rules[{p, i}] = t;
    }
  return rules;
}

}  // namespace

// ---------------------------------------------------------------- presentation

std::vector<std::string> WeylPresentation::names() const {
  std::vector<std::string> out = A.generators;
  out.insert(out.end(), B.generators.begin(), B.generators.end());
  return out;
}

AlgebraPresentation WeylPresentation::combined() const {
  AlgebraPresentation p;
  p.name = A.name + "+" + B.name;
  p.symbol = A.symbol;
  p.parameters = A.parameters;
  p.generators = names();
  p.relations = A.relations;
  for (const Relation& r : B.relations) p.relations.push_back(relation_from(shift_letters(r.full(), na())));
  for (const auto& [key, t] : rules) {
    Tensor full = Tensor({b_letter(key.first), key.second}) - t;
    p.relations.push_back(relation_from(full));
  }
  return p;
}

void WeylPresentation::validate() const {
  A.validate();
  B.validate();
  int total = na() + nb();
  for (int b = 0; b < nb(); ++b)
    for (int a = 0; a < na(); ++a) {
      auto it = rules.find({b, a});
      if (it == rules.end())
        throw Error("missing permutation rule for " + B.generators[static_cast<std::size_t>(b)] + " " +
                    A.generators[static_cast<std::size_t>(a)]);
      for (const auto& [w, c] : it->second.terms())
        for (int l : w)
          if (l < 0 || l >= total) throw Error("permutation rule uses an undeclared letter");
    }
}

// ---------------------------------------------------------------- engine

WeylEngine::WeylEngine(WeylPresentation w) : w_(std::move(w)) {}

Tensor WeylEngine::normal_order(const Word& mixed) {
  auto it = memo_.find(mixed);
  if (it != memo_.end()) return it->second;
  std::size_t pos = mixed.size();
  for (std::size_t i = 0; i + 1 < mixed.size(); ++i)
    if (w_.is_b(mixed[i]) && !w_.is_b(mixed[i + 1])) {
      pos = i;
      break;
    }
  Tensor out;
  if (pos == mixed.size()) {
    out = Tensor(mixed);
  } else {
    auto rule = w_.rules.find({mixed[pos] - w_.na(), mixed[pos + 1]});
    if (rule == w_.rules.end()) throw Error("no permutation rule for this pair");
    Word u(mixed.begin(), mixed.begin() + static_cast<std::ptrdiff_t>(pos));
    Word v(mixed.begin() + static_cast<std::ptrdiff_t>(pos + 2), mixed.end());
    for (const auto& [tw, tc] : rule->second.terms()) out.add_scaled(normal_order(concat(concat(u, tw), v)), tc);
  }
  memo_.emplace(mixed, out);
  return out;
}

Tensor WeylEngine::normal_order(const Tensor& mixed) {
  Tensor out;
  for (const auto& [w, c] : mixed.terms()) out.add_scaled(normal_order(w), c);
  return out;
}

Tensor WeylEngine::apply(const Word& dword, const Tensor& f) {
  Word prefix = shift_letters(dword, w_.na());
  Tensor out;
  for (const auto& [fw, fc] : f.terms()) {
    Tensor t = normal_order(concat(prefix, fw));
    for (const auto& [w, c] : t.terms()) {
      bool pure = true;
      for (int l : w) pure = pure && !w_.is_b(l);
      if (pure) out.add(w, c * fc);
    }
  }
  return out;
}

Tensor WeylEngine::reduce_a(const Tensor& f) {
  if (!a_rules_) a_rules_ = complete_to_degree(orient(w_.A), 3);
  return a_rules_->reduce(f);
}

Tensor normal_order(const WeylPresentation& w, const Word& mixed) { return WeylEngine(w).normal_order(mixed); }

Tensor apply_derivative(const WeylPresentation& w, const Word& dword, const Tensor& f) {
  return WeylEngine(w).apply(dword, f);
}

ConditionReport check_representation(const WeylPresentation& w, int max_degree) {
  WeylEngine e(w);
  LetterNamer an = w.A.namer();
  for (std::size_t r = 0; r < w.A.relations.size(); ++r) {
    Tensor rel = w.A.relations[r].full();
    for (int b = 0; b < w.nb(); ++b) {
      Tensor img = e.reduce_a(e.apply({b}, rel));
      if (!img.is_zero())
        return make_report("representation", false,
                           w.B.generators[static_cast<std::size_t>(b)] + " does not kill relation " +
                               std::to_string(r + 1) + ": " + img.to_string(an, w.A.symbol),
                           img);
    }
  }
  for (std::size_t r = 0; r < w.B.relations.size(); ++r) {
    Tensor rel = w.B.relations[r].full();
    for (int len = 0; len <= max_degree; ++len)
      for (const Word& u : all_words(w.na(), len)) {
        Tensor img;
        for (const auto& [dw, dc] : rel.terms()) img.add_scaled(e.apply(dw, Tensor(u)), dc);
        img = e.reduce_a(img);
        if (!img.is_zero())
          return make_report("representation", false,
                             "relation " + std::to_string(r + 1) + " of the derivative algebra acts nontrivially on " +
                                 Tensor(u).to_string(an, w.A.symbol),
                             img);
      }
  }
  return make_report("representation", true);
}

ConditionReport check_representation_spot(const WeylPresentation& w, int samples, int extra, unsigned seed) {
  if (w.A.relations.empty() || w.na() == 0) return make_report("representation.spot", true, "no relations");
  WeylEngine e(w);
  std::mt19937 rng(seed);
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  for (int s = 0; s < samples; ++s) {
    Tensor rel = w.A.relations[static_cast<std::size_t>(pick(static_cast<int>(w.A.relations.size())))].full();
    int lu = pick(extra + 1);
    int lv = pick(extra - lu + 1);
    Word u, v;
    for (int i = 0; i < lu; ++i) u.push_back(pick(w.na()));
    for (int i = 0; i < lv; ++i) v.push_back(pick(w.na()));
    Tensor f = Tensor(u) * rel * Tensor(v);
    for (int b = 0; b < w.nb(); ++b) {
      Tensor img = e.reduce_a(e.apply({b}, f));
      if (!img.is_zero())
        return make_report("representation.spot", false,
                           "sample " + std::to_string(s) + ": " + f.to_string(w.A.namer(), w.A.symbol), img);
    }
  }
  return make_report("representation.spot", true, std::to_string(samples) + " samples");
}

WeylPresentation kill_derivatives(const WeylPresentation& w, const std::vector<int>& b_indices) {
  std::vector<int> map(static_cast<std::size_t>(w.na() + w.nb()));
  int next = w.na();
  for (int a = 0; a < w.na(); ++a) map[static_cast<std::size_t>(a)] = a;
  std::vector<int> bmap(static_cast<std::size_t>(w.nb()), -1);
  for (int b = 0; b < w.nb(); ++b) {
    bool killed = std::find(b_indices.begin(), b_indices.end(), b) != b_indices.end();
    map[static_cast<std::size_t>(w.na() + b)] = killed ? -1 : next;
    if (!killed) bmap[static_cast<std::size_t>(b)] = next++ - w.na();
  }
  WeylPresentation r;
  r.A = w.A;
  r.B.name = w.B.name;
  r.B.symbol = w.B.symbol;
  r.B.parameters = w.B.parameters;
  for (int b = 0; b < w.nb(); ++b)
    if (bmap[static_cast<std::size_t>(b)] >= 0) r.B.generators.push_back(w.B.generators[static_cast<std::size_t>(b)]);
  for (const Relation& rel : w.B.relations) {
    Tensor t = remap(shift_letters(rel.full(), w.na()), map);
    if (t.component(2).is_zero()) continue;
    r.B.relations.push_back(relation_from(shift_letters(t, -w.na())));
  }
  for (const auto& [key, t] : w.rules) {
    int nb = bmap[static_cast<std::size_t>(key.first)];
    if (nb < 0) continue;
    r.rules[{nb, key.second}] = remap(t, map);
  }
  return r;
}

BracketData weyl_bracket_data(const WeylPresentation& w) { return bracket_from_presentation(w.combined()); }

// ---------------------------------------------------------------- structure constants

StructureConstants::StructureConstants(int size)
    : n(size),
      c(static_cast<std::size_t>(size * size * size)),
      b(static_cast<std::size_t>(size * size * size)) {}

ConditionReport check_weyl_jacobi(const StructureConstants& s) {
  int n = s.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int p = 0; p < n; ++p) {
        if (s.C(i, j, p) != s.Bc(p, i, j) - s.Bc(p, j, i))
          return make_report("weyl.jacobi", false,
                             "c_{" + std::to_string(i) + "," + std::to_string(j) + "}^" + std::to_string(p) +
                                 " != b_{ij}^p - b_{ji}^p");
        for (int l = 0; l < n; ++l) {
          Scalar lhs, rhs;
          for (int k = 0; k < n; ++k) {
            lhs += s.C(i, j, k) * s.Bc(p, k, l);
            rhs += s.Bc(p, i, k) * s.Bc(k, j, l) - s.Bc(p, j, k) * s.Bc(k, i, l);
          }
          if (lhs != rhs)
            return make_report("weyl.jacobi", false,
                               "index tuple (i,j,l,p) = (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(l) + "," + std::to_string(p) + "): " + lhs.to_string("h") +
                                   " != " + rhs.to_string("h"));
        }
      }
  return make_report("weyl.jacobi", true);
}

// ---------------------------------------------------------------- gl(m)

AlgebraPresentation gl_presentation(int m, const Scalar& hbar) {
  AlgebraPresentation p;
  p.name = "gl" + std::to_string(m);
  p.symbol = "h";
  p.generators = matrix_names("n", m);
  auto L = [m](int i, int j) { return i * m + j; };
  for (int a = 0; a < m * m; ++a)
    for (int b = a + 1; b < m * m; ++b) {
      int i = a / m, j = a % m, k = b / m, l = b % m;
      Tensor t = Tensor({a, b}) - Tensor({b, a});
      if (delta(k, j)) t.add({L(i, l)}, -hbar);
      if (delta(i, l)) t.add({L(k, j)}, hbar);
      if (t.component(2).is_zero()) continue;
      p.relations.push_back(relation_from(t));
    }
  return p;
}

WeylPresentation gl_weyl(int m, const Scalar& hbar, GlRules rules) {
  WeylPresentation w;
  w.A = gl_presentation(m, hbar);
  w.B.name = "d" + std::to_string(m);
  w.B.symbol = "h";
  w.B.generators = matrix_names("d", m);
  w.B.relations = commutators(m * m);
  int n = m * m;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int i = a / m, j = a % m, k = b / m, l = b % m;
      Tensor t({b, n + a});
      if (delta(i, l) && delta(k, j)) t.add(Word{}, 1);
      if (delta(k, j)) t.add({n + i * m + l}, hbar);
      if (rules == GlRules::verbatim && delta(i, l)) t.add({n + k * m + j}, -hbar);
      w.rules[{a, b}] = t;
    }
  return w;
}

Tensor gl_circle_action(int m, const Scalar& hbar, int i, int j, const Word& word) {
  int p = static_cast<int>(word.size());
  Tensor out;
  for (unsigned mask = 1; mask < (1u << p); ++mask) {
    int first = -1, last = -1, count = 0;
    bool ok = true;
    Word rest;
    for (int pos = 0; pos < p; ++pos) {
      int r = word[static_cast<std::size_t>(pos)] / m, s = word[static_cast<std::size_t>(pos)] % m;
      if (!(mask & (1u << pos))) {
        rest.push_back(word[static_cast<std::size_t>(pos)]);
        continue;
      }
      if (first < 0) first = r;
      else if (last != r) ok = false;
      last = s;
      ++count;
    }
    // d_i^j pairs with n_first^last as delta_i^last delta_first^j.
    if (!ok || last != i || first != j) continue;
    out.add(rest, hbar.pow(count - 1));
  }
  return out;
}

std::vector<GlComparison> compare_gl_actions(int m, const std::vector<Word>& sample, const Scalar& hbar) {
  WeylEngine cop(gl_weyl(m, hbar, GlRules::coproduct));
  WeylEngine verb(gl_weyl(m, hbar, GlRules::verbatim));
  std::vector<GlComparison> out;
  for (int a = 0; a < m * m; ++a)
    for (const Word& w : sample) {
      GlComparison c;
      c.deriv = {a};
      c.word = w;
      c.coproduct = cop.reduce_a(cop.apply({a}, Tensor(w)));
      c.circle = cop.reduce_a(gl_circle_action(m, hbar, a / m, a % m, w));
      c.verbatim = cop.reduce_a(verb.apply({a}, Tensor(w)));
      out.push_back(std::move(c));
    }
  return out;
}

// ---------------------------------------------------------------- u(2)

StructureConstants u2_constants(const Scalar& hbar) {
  enum { t, x, y, z };
  StructureConstants s(4);
  auto bracket = [&](int i, int j, int k) {
    s.C(i, j, k) = hbar;
    s.C(j, i, k) = -hbar;
  };
  bracket(x, y, z);
  bracket(y, z, x);
  bracket(z, x, y);
  Scalar h2 = hbar / Scalar(2);
  // [d^p, x_i] = b^p_{i,k} d^k + delta, row by row of the permutation table.
  s.Bc(t, t, t) = h2;
  s.Bc(t, x, x) = -h2;
  s.Bc(t, y, y) = -h2;
  s.Bc(t, z, z) = -h2;
  s.Bc(x, t, x) = h2;
  s.Bc(x, x, t) = h2;
  s.Bc(x, y, z) = h2;
  s.Bc(x, z, y) = -h2;
  s.Bc(y, t, y) = h2;
  s.Bc(y, x, z) = -h2;
  s.Bc(y, y, t) = h2;
  s.Bc(y, z, x) = h2;
  s.Bc(z, t, z) = h2;
  s.Bc(z, x, y) = h2;
  s.Bc(z, y, x) = -h2;
  s.Bc(z, z, t) = h2;
  return s;
}

WeylPresentation u2_weyl(const Scalar& hbar) {
  StructureConstants s = u2_constants(hbar);
  WeylPresentation w;
  w.A.name = "u2";
  w.A.symbol = "h";
  w.A.generators = {"t", "x", "y", "z"};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Tensor r = Tensor({i, j}) - Tensor({j, i});
      for (int k = 0; k < 4; ++k) r.add({k}, -s.C(i, j, k));
      w.A.relations.push_back(relation_from(r));
    }
  w.B.name = "u2-derivatives";
  w.B.symbol = "h";
  w.B.generators = {"dt", "dx", "dy", "dz"};
  w.B.relations = commutators(4);
  w.rules = rules_from_constants(s);
  return w;
}

// ---------------------------------------------------------------- 2d families

WeylPresentation weyl_2d(const Family2d& f) {
  StructureConstants s(2);
  s.Bc(0, 0, 0) = f.a1;
  s.Bc(0, 0, 1) = f.b1;
  s.Bc(1, 0, 0) = f.c1;
  s.Bc(1, 0, 1) = f.d1;
  s.Bc(0, 1, 0) = f.a2;
  s.Bc(0, 1, 1) = f.b2;
  s.Bc(1, 1, 0) = f.c2;
  s.Bc(1, 1, 1) = f.d2;
  WeylPresentation w;
  w.A.name = "comm2";
  w.A.symbol = "h";
  w.A.generators = {"t", "x"};
  w.A.relations = commutators(2);
  w.B.name = "comm2-derivatives";
  w.B.symbol = "h";
  w.B.generators = {"dt", "dx"};
  w.B.relations = commutators(2);
  w.rules = rules_from_constants(s);
  return w;
}

std::vector<Family2d> scan_2d_weyl_families(const std::vector<Scalar>& grid) {
  std::vector<Family2d> out;
  if (grid.empty()) return out;
  BracketData base = weyl_bracket_data(weyl_2d(Family2d{}));
  const Subspace& i3 = base.i3();
  std::size_t g = grid.size();
  std::size_t total = 1;
  for (int i = 0; i < 8; ++i) total *= g;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = idx;
    std::vector<Scalar> v(8);
    for (int i = 7; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = grid[r % g];
      r /= g;
    }
    Family2d f{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
    BracketData d = weyl_bracket_data(weyl_2d(f));
    if (!(d.I == base.I)) continue;
    d.I3 = i3;
    bool ok = true;
    for (const auto& rep : check_bg(d)) ok = ok && rep.passed();
    if (ok) out.push_back(f);
  }
  return out;
}

WeylPresentation jackson_weyl() {
  WeylPresentation w;
  w.A.name = "line";
  w.A.generators = {"x"};
  w.B.name = "jackson-derivative";
  w.B.generators = {"d"};
  Tensor t({0, 1}, Scalar::z());
  t.add(Word{}, 1);
  w.rules[{0, 0}] = t;
  return w;
}

// ---------------------------------------------------------------- su(2) closed form

GaussPoly GaussPoly::from_rational(const std::vector<Rational>& coeffs) {
  GaussPoly p;
  for (const Rational& c : coeffs) p.c_.push_back({c, Rational(0)});
  p.trim();
  return p;
}

void GaussPoly::trim() {
  while (!c_.empty() && c_.back().re == 0 && c_.back().im == 0) c_.pop_back();
}

namespace {
GaussPoly::Coeff cmul(const GaussPoly::Coeff& a, const GaussPoly::Coeff& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rational binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}
}  // namespace

GaussPoly GaussPoly::shifted(const Coeff& s) const {
  GaussPoly r;
  r.c_.assign(c_.size(), {Rational(0), Rational(0)});
  for (std::size_t n = 0; n < c_.size(); ++n) {
    Coeff power{Rational(1), Rational(0)};
    // (v + s)^n = sum_k C(n,k) s^(n-k) v^k
    std::vector<Coeff> powers{power};
    for (std::size_t e = 1; e <= n; ++e) powers.push_back(cmul(powers.back(), s));
    for (std::size_t k = 0; k <= n; ++k) {
      Coeff term = cmul(c_[n], powers[n - k]);
      Rational b = binom(static_cast<int>(n), static_cast<int>(k));
      r.c_[k].re += term.re * b;
      r.c_[k].im += term.im * b;
    }
  }
  r.trim();
  return r;
}

GaussPoly GaussPoly::operator+(const GaussPoly& o) const {
  GaussPoly r = *this;
  if (r.c_.size() < o.c_.size()) r.c_.resize(o.c_.size(), {Rational(0), Rational(0)});
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    r.c_[i].re += o.c_[i].re;
    r.c_[i].im += o.c_[i].im;
  }
  r.trim();
  return r;
}

GaussPoly GaussPoly::times(const Coeff& s) const {
  GaussPoly r;
  for (const Coeff& c : c_) r.c_.push_back(cmul(c, s));
  r.trim();
  return r;
}

GaussPoly GaussPoly::operator-(const GaussPoly& o) const { return *this + o.times({Rational(-1), Rational(0)}); }

GaussPoly GaussPoly::operator*(const GaussPoly& o) const {
  GaussPoly r;
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, {Rational(0), Rational(0)});
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      Coeff t = cmul(c_[i], o.c_[j]);
      r.c_[i + j].re += t.re;
      r.c_[i + j].im += t.im;
    }
  r.trim();
  return r;
}

bool GaussPoly::is_real() const {
  for (const Coeff& c : c_)
    if (c.im != 0) return false;
  return true;
}

std::vector<Rational> GaussPoly::real_part() const {
  std::vector<Rational> r;
  for (const Coeff& c : c_) r.push_back(c.re);
  return r;
}

GaussPoly shift_a(const GaussPoly& f, const Rational& hbar) {
  Rational s = hbar / 2;
  return (f.shifted({Rational(0), -s}) + f.shifted({Rational(0), s})).times({Rational(1, 2), Rational(0)});
}

GaussPoly shift_b(const GaussPoly& f, const Rational& hbar) {
  Rational s = hbar / 2;
  return (f.shifted({Rational(0), -s}) - f.shifted({Rational(0), s})).times({Rational(0), Rational(1, 2)});
}

Tensor su2_derivative(Axis axis, const std::vector<Rational>& f1, const std::vector<Rational>& f2,
                      const std::vector<Rational>& f3, const Rational& hbar) {
  if (hbar == 0) throw Error("su2_derivative: hbar must be nonzero");
  int u = 1 + static_cast<int>(axis);
  int v = 1 + (static_cast<int>(axis) + 1) % 3;
  int w = 1 + (static_cast<int>(axis) + 2) % 3;
  GaussPoly g1 = GaussPoly::from_rational(f1), g2 = GaussPoly::from_rational(f2), g3 = GaussPoly::from_rational(f3);
  struct Triple {
    GaussPoly a, b, c;
  };
  Triple parts[2] = {{shift_b(g1, hbar), shift_a(g2, hbar), shift_a(g3, hbar)},
                     {shift_a(g1, hbar), shift_b(g2, hbar), shift_b(g3, hbar)}};
  // Imaginary parts must cancel in the full sum, so accumulate in Q(i).
  std::map<Word, GaussPoly::Coeff, WordLess> acc;
  for (const Triple& t : parts) {
    for (std::size_t i = 0; i < t.a.coeffs().size(); ++i)
      for (std::size_t j = 0; j < t.b.coeffs().size(); ++j)
        for (std::size_t k = 0; k < t.c.coeffs().size(); ++k) {
          GaussPoly::Coeff c = cmul(cmul(t.a.coeffs()[i], t.b.coeffs()[j]), t.c.coeffs()[k]);
          Word word;
          word.insert(word.end(), i, u);
          word.insert(word.end(), j, v);
          word.insert(word.end(), k, w);
          auto& slot = acc[word];
          slot.re += c.re;
          slot.im += c.im;
        }
  }
  Tensor out;
  Rational scale = Rational(2) / hbar;
  for (const auto& [word, c] : acc) {
    if (c.im != 0) throw Error("su2_derivative: nonzero imaginary residue");
    out.add(word, Scalar(Rational(c.re * scale)));
  }
  return out;
}

ConditionReport su2_closed_form_check(int samples, unsigned seed, const Rational& hbar, int max_degree) {
  const std::string id = "su2.closed_form";
  WeylEngine e(u2_weyl(Scalar(hbar)));
  LetterNamer names = e.presentation().A.namer();
  std::mt19937 rng(seed);
  auto power = [](int k) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = 1;
    return v;
  };
  for (int s = 0; s < samples; ++s) {
    int a = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
    int b = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1 - a));
    int c = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1 - a - b));
    int axis = static_cast<int>(rng() % 3);
    int u = 1 + axis, v = 1 + (axis + 1) % 3, w = 1 + (axis + 2) % 3;
    Word mono;
    mono.insert(mono.end(), static_cast<std::size_t>(a), u);
    mono.insert(mono.end(), static_cast<std::size_t>(b), v);
    mono.insert(mono.end(), static_cast<std::size_t>(c), w);
    std::string label = "d" + names(u) + "(" + Tensor(mono).to_string(names, "h") + ")";
    Tensor closed;
    try {
      closed = su2_derivative(static_cast<Axis>(axis), power(a), power(b), power(c), hbar);
    } catch (const Error& err) {
      return make_report(id, false, label + ": " + err.what());
    }
    Tensor perm = e.reduce_a(e.apply({u}, Tensor(mono)));
    for (const auto& [word, k] : perm.terms())
      if (std::find(word.begin(), word.end(), 0) != word.end())
        return make_report(id, false, label + " involves t", perm);
    Tensor diff = e.reduce_a(closed) - perm;
    if (!diff.is_zero()) return make_report(id, false, label + " differs", diff);
  }
  return make_report(id, true, std::to_string(samples) + " monomials");
}

}  // namespace braidcalc
