#include "braidcalc/jacobi.hpp"

#include <map>

namespace braidcalc {

namespace {

Word slice(const Word& w, std::size_t from, std::size_t to) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

std::string show(const BracketData& d, const Tensor& t) { return t.to_string(d.namer()); }

}  // namespace

std::optional<Tensor> BracketData::alpha_of(const Tensor& t) const {
  auto c = I.coordinates(t);
  if (!c) return std::nullopt;
  Tensor r;
  for (std::size_t i = 0; i < c->size(); ++i) r.add_scaled(alpha[i], (*c)[i]);
  return r;
}

std::optional<Scalar> BracketData::beta_of(const Tensor& t) const {
  auto c = I.coordinates(t);
  if (!c) return std::nullopt;
  Scalar r;
  if (beta)
    for (std::size_t i = 0; i < c->size(); ++i) r += (*beta)[i] * (*c)[i];
  return r;
}

const Subspace& BracketData::i3() {
  if (!I3) I3 = iterated_intersection(I, alphabet_size, 3);
  return *I3;
}

std::vector<Tensor> BracketData::relations() const {
  std::vector<Tensor> out;
  for (std::size_t i = 0; i < I.basis().size(); ++i) {
    Tensor t = I.basis()[i] - alpha[i];
    if (beta) t.add(Word{}, -(*beta)[i]);
    out.push_back(std::move(t));
  }
  return out;
}

BracketData bracket_from_presentation(const AlgebraPresentation& p) {
  BracketData d;
  d.alphabet_size = p.size();
  d.names = p.generators;
  Subspace rows(-1);
  bool has_const = false;
  for (const auto& r : p.relations) {
    rows.insert(r.full());
    has_const = has_const || !r.constant.is_zero();
  }
  std::vector<Tensor> quad;
  std::vector<Scalar> beta;
  for (const Tensor& row : rows.basis()) {
    if (row.leading_word().size() != 2)
      throw Error("presentation '" + p.name + "': quadratic parts are linearly dependent, bracket undefined");
    quad.push_back(row.component(2));
    d.alpha.push_back(-row.component(1));
    beta.push_back(-row.coeff(Word{}));
  }
  d.I = Subspace::from_reduced(2, quad);
  // from_reduced sorts by pivot; rows.basis() is already sorted the same way.
  if (has_const) d.beta = beta;
  return d;
}

std::optional<Tensor> alpha_12(const BracketData& d, const Tensor& t) {
  std::map<Word, Tensor, WordLess> groups;
  for (const auto& [w, c] : t.terms()) {
    if (w.size() < 2) return std::nullopt;
    groups[slice(w, 2, w.size())].add(slice(w, 0, 2), c);
  }
  Tensor r;
  for (const auto& [suffix, q] : groups) {
    auto a = d.alpha_of(q);
    if (!a) return std::nullopt;
    r += *a * Tensor(suffix);
  }
  return r;
}

std::optional<Tensor> alpha_23(const BracketData& d, const Tensor& t) {
  std::map<Word, Tensor, WordLess> groups;
  for (const auto& [w, c] : t.terms()) {
    if (w.size() < 2) return std::nullopt;
    groups[slice(w, 0, w.size() - 2)].add(slice(w, w.size() - 2, w.size()), c);
  }
  Tensor r;
  for (const auto& [prefix, q] : groups) {
    auto a = d.alpha_of(q);
    if (!a) return std::nullopt;
    r += Tensor(prefix) * *a;
  }
  return r;
}

namespace {

// beta applied to letters (1,2) / (2,3) of a degree-3 tensor.
Tensor beta_12(const BracketData& d, const Tensor& t) {
  std::map<Word, Tensor, WordLess> groups;
  for (const auto& [w, c] : t.terms()) groups[slice(w, 2, w.size())].add(slice(w, 0, 2), c);
  Tensor r;
  for (const auto& [suffix, q] : groups) r.add(suffix, *d.beta_of(q));
  return r;
}

Tensor beta_23(const BracketData& d, const Tensor& t) {
  std::map<Word, Tensor, WordLess> groups;
  for (const auto& [w, c] : t.terms()) groups[slice(w, 0, w.size() - 2)].add(slice(w, w.size() - 2, w.size()), c);
  Tensor r;
  for (const auto& [prefix, q] : groups) r.add(prefix, *d.beta_of(q));
  return r;
}

// W = (alpha_12 - alpha_23) Z for each basis element Z of I^(3).
std::vector<Tensor> jacobi_images(BracketData& d) {
  std::vector<Tensor> out;
  for (const Tensor& z : d.i3().basis()) {
    auto a = alpha_12(d, z);
    auto b = alpha_23(d, z);
    if (!a || !b) throw Error("internal: I^(3) element outside I (x) U or U (x) I");
    out.push_back(*a - *b);
  }
  return out;
}

}  // namespace

std::pair<ConditionReport, ConditionReport> check_pp(BracketData& d) {
  auto images = jacobi_images(d);
  ConditionReport c1{"pp.condition1", Status::pass, "dim I^(3) = " + std::to_string(d.i3().dim()), {}};
  for (const Tensor& w : images) {
    Tensor rem = d.I.reduce(w);
    if (!rem.is_zero()) {
      c1.status = Status::fail;
      c1.witness = w;
      c1.detail = "(alpha_12 - alpha_23)Z = " + show(d, w) + " is not in I";
      break;
    }
  }
  ConditionReport c2{"pp.condition2", Status::pass, {}, {}};
  if (!c1.passed()) {
    c2.status = Status::inconclusive;
    c2.detail = "condition 1 failed; alpha is undefined on the image";
    return {c1, c2};
  }
  for (const Tensor& w : images) {
    Tensor v = *d.alpha_of(w);
    if (!v.is_zero()) {
      c2.status = Status::fail;
      c2.witness = v;
      c2.detail = "alpha((alpha_12 - alpha_23)Z) = " + show(d, v);
      break;
    }
  }
  return {c1, c2};
}

std::vector<ConditionReport> check_bg(BracketData& d) {
  auto [a, ignored] = check_pp(d);
  a.id = "bg.a";
  ConditionReport b{"bg.b", Status::pass, {}, {}};
  ConditionReport c{"bg.c", Status::pass, {}, {}};
  if (!a.passed()) {
    b.status = c.status = Status::inconclusive;
    b.detail = c.detail = "condition (a) failed";
    return {a, b, c};
  }
  const auto& basis = d.i3().basis();
  auto images = jacobi_images(d);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Tensor lhs = *d.alpha_of(images[i]);
    if (d.beta) lhs += beta_12(d, basis[i]) - beta_23(d, basis[i]);
    if (!lhs.is_zero() && b.passed()) {
      b.status = Status::fail;
      b.witness = lhs;
      b.detail = "alpha(W) + (beta_12 - beta_23)Z = " + show(d, lhs);
    }
    Scalar e = *d.beta_of(images[i]);
    if (!e.is_zero() && c.passed()) {
      c.status = Status::fail;
      c.witness = Tensor::constant(e);
      c.detail = "beta(W) = " + e.to_string();
    }
  }
  return {a, b, c};
}

Tensor ExtendedBracket::apply(const Tensor& t) const {
  Tensor r;
  for (const auto& [w, c] : t.terms()) {
    if (w.size() != 2) throw Error("ExtendedBracket::apply: degree-2 input expected");
    r.add_scaled(at(w[0], w[1]), c);
  }
  return r;
}

Tensor ExtendedBracket::apply_12(const Tensor& t) const {
  Tensor r;
  for (const auto& [w, c] : t.terms()) {
    if (w.size() < 2) throw Error("ExtendedBracket::apply_12: word too short");
    r.add_scaled(at(w[0], w[1]) * Tensor(slice(w, 2, w.size())), c);
  }
  return r;
}

Tensor ExtendedBracket::apply_23(const Tensor& t) const {
  Tensor r;
  for (const auto& [w, c] : t.terms()) {
    if (w.size() < 2) throw Error("ExtendedBracket::apply_23: word too short");
    std::size_t k = w.size();
    r.add_scaled(Tensor(slice(w, 0, k - 2)) * at(w[k - 2], w[k - 1]), c);
  }
  return r;
}

ExtendedBracket extend_by_zero(const BracketData& d) {
  if (!d.Iplus) throw Error("extend_by_zero: no complement I+ given");
  int n = d.alphabet_size;
  int N = n * n;
  int di = d.I.dim(), dp = d.Iplus->dim();
  if (di + dp != N)
    throw Error("extend_by_zero: dim I + dim I+ = " + std::to_string(di) + " + " + std::to_string(dp) +
                " != " + std::to_string(N));
  Matrix m(N, N);
  auto fill = [&](const std::vector<Tensor>& rows, int offset) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [w, c] : rows[r].terms()) m(offset + static_cast<int>(r), w[0] * n + w[1]) = c;
  };
  fill(d.I.basis(), 0);
  fill(d.Iplus->basis(), di);
  Matrix inv;
  try {
    inv = m.inverse();
  } catch (const Error&) {
    throw Error("extend_by_zero: I and I+ intersect (rank of I + I+ is " + std::to_string(m.rank()) + " < " +
                std::to_string(N) + ")");
  }
  // Row w of inv gives the coordinates of e_w in the combined basis.
  ExtendedBracket b;
  b.n = n;
  b.table.resize(static_cast<std::size_t>(N));
  for (int w = 0; w < N; ++w) {
    Tensor img;
    for (int r = 0; r < di; ++r) img.add_scaled(d.alpha[static_cast<std::size_t>(r)], inv(w, r));
    b.table[static_cast<std::size_t>(w)] = img;
  }
  return b;
}

ConditionReport check_complement(const BracketData& d) {
  try {
    extend_by_zero(d);
    return make_report("complement", true);
  } catch (const Error& e) {
    return make_report("complement", false, e.what());
  }
}

ConditionReport check_strong(BracketData& d) {
  auto [c1, c2] = check_pp(d);
  if (!c1.passed() || !c2.passed()) {
    ConditionReport r = c1.passed() ? c2 : c1;
    r.id = "strong";
    r.status = Status::fail;
    r.detail = "Jacobi-PP fails: " + r.detail;
    return r;
  }
  ExtendedBracket ext = extend_by_zero(d);
  for (const Tensor& z : d.i3().basis()) {
    Tensor a = ext.apply(*alpha_12(d, z));
    if (!a.is_zero()) return make_report("strong", false, "[,][,]_12 Z = " + show(d, a), a);
    Tensor b = ext.apply(*alpha_23(d, z));
    if (!b.is_zero()) return make_report("strong", false, "[,][,]_23 Z = " + show(d, b), b);
  }
  return make_report("strong", true, "dim I^(3) = " + std::to_string(d.i3().dim()));
}

ConditionReport chevalley_d_squared(BracketData& d, int max_k) {
  ConditionReport strong = check_strong(d);
  if (!strong.passed()) return {"chevalley", Status::inconclusive, "strong Jacobi does not hold", {}};
  ExtendedBracket ext = extend_by_zero(d);
  std::string info;
  Subspace prev = d.I;
  for (int k = 3; k <= max_k; ++k) {
    Subspace ik = k == 3 ? d.i3() : iterated_intersection(d.I, d.alphabet_size, k);
    bool contained = true;
    for (const Tensor& z : ik.basis()) {
      Tensor dz = *alpha_12(d, z);
      if (k - 1 >= 2 && !dz.is_zero() && !prev.contains(dz)) contained = false;
      Tensor ddz = ext.apply_12(dz);
      if (!ddz.is_zero())
        return make_report("chevalley", false, "d^2 != 0 on I^(" + std::to_string(k) + "): " + show(d, ddz), ddz);
    }
    info += (info.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) +
            ": dim I^(k) = " + std::to_string(ik.dim()) + ", d(I^(k)) in I^(k-1): " + (contained ? "yes" : "no");
    prev = ik;
  }
  return make_report("chevalley", true, info);
}

Matrix left_operator(const ExtendedBracket& b, int u) {
  Matrix m(b.n, b.n);
  for (int v = 0; v < b.n; ++v)
    for (const auto& [w, c] : b.at(u, v).terms()) m(w[0], v) = c;
  return m;
}

Matrix right_operator(const ExtendedBracket& b, int u) {
  Matrix m(b.n, b.n);
  for (int v = 0; v < b.n; ++v)
    for (const auto& [w, c] : b.at(v, u).terms()) m(w[0], v) = c;
  return m;
}

namespace {

struct Coefficients {
  Matrix A, B, C;  // relation operator = P^2 A + P B + C with P = p * scale
};

std::vector<Coefficients> representation_coefficients(const BracketData& d) {
  ExtendedBracket ext = extend_by_zero(d);
  int n = d.alphabet_size;
  std::vector<Matrix> L, R;
  for (int u = 0; u < n; ++u) {
    L.push_back(left_operator(ext, u));
    R.push_back(right_operator(ext, u));
  }
  std::vector<Coefficients> out;
  for (const Tensor& rel : d.relations()) {
    Coefficients left{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
    Coefficients right{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
    for (const auto& [w, c] : rel.terms()) {
      if (w.size() == 2) {
        left.A += (L[static_cast<std::size_t>(w[0])] * L[static_cast<std::size_t>(w[1])]).scaled(c);
        right.A += (R[static_cast<std::size_t>(w[1])] * R[static_cast<std::size_t>(w[0])]).scaled(c);
      } else if (w.size() == 1) {
        left.B += L[static_cast<std::size_t>(w[0])].scaled(c);
        right.B += R[static_cast<std::size_t>(w[0])].scaled(c);
      } else {
        left.C += Matrix::scalar(n, c);
        right.C += Matrix::scalar(n, c);
      }
    }
    out.push_back(std::move(left));
    out.push_back(std::move(right));
  }
  return out;
}

}  // namespace

ConditionReport check_almost_lie(const BracketData& d, const Scalar& p) {
  Scalar P = p * d.action_scale;
  auto coeffs = representation_coefficients(d);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& c = coeffs[i];
    Matrix op = c.A.scaled(P * P) + c.B.scaled(P) + c.C;
    if (!op.is_zero()) {
      std::string side = i % 2 == 0 ? "left" : "right";
      return make_report("almost_lie", false,
                         side + " representation fails on relation " + std::to_string(i / 2 + 1) + " at p = " +
                             p.to_string());
    }
  }
  return make_report("almost_lie", true, "p = " + p.to_string());
}

std::optional<Scalar> solve_p(const BracketData& d) {
  auto coeffs = representation_coefficients(d);
  std::optional<Scalar> P;
  for (const auto& c : coeffs) {
    if (!c.C.is_zero()) return std::nullopt;
    for (int i = 0; i < c.A.rows() && !P; ++i)
      for (int j = 0; j < c.A.cols() && !P; ++j)
        if (!c.A(i, j).is_zero()) P = -c.B(i, j) / c.A(i, j);
  }
  if (!P || P->is_zero()) return std::nullopt;
  for (const auto& c : coeffs)
    if (!(c.A.scaled(*P) + c.B).is_zero()) return std::nullopt;
  return *P / d.action_scale;
}

}  // namespace braidcalc
