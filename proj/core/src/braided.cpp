#include "braidcalc/braided.hpp"

namespace braidcalc {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<int> digits(int index, int m, int k) {
  std::vector<int> d(static_cast<std::size_t>(k));
  for (int s = k - 1; s >= 0; --s) {
    d[static_cast<std::size_t>(s)] = index % m;
    index /= m;
  }
  return d;
}

int undigits(const std::vector<int>& d, int m) {
  int r = 0;
  for (int x : d) r = r * m + x;
  return r;
}

Scalar q() { return Scalar::z(); }
Scalar q_minus_qinv() { return q() - q().inverse(); }

/// Square matrix with tensor entries; products concatenate entries in order.
struct TMat {
  int n = 0;
  std::vector<Tensor> e;
  explicit TMat(int size) : n(size), e(static_cast<std::size_t>(size * size)) {}
  Tensor& at(int r, int c) { return e[static_cast<std::size_t>(r * n + c)]; }
  const Tensor& at(int r, int c) const { return e[static_cast<std::size_t>(r * n + c)]; }
};

TMat lift(const Matrix& a) {
  TMat t(a.rows());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) t.at(r, c) = Tensor::constant(a(r, c));
  return t;
}

TMat operator*(const TMat& a, const TMat& b) {
  TMat r(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      const Tensor& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < a.n; ++j) {
        const Tensor& y = b.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

TMat operator*(const TMat& a, const Matrix& b) { return a * lift(b); }
TMat operator*(const Matrix& a, const TMat& b) { return lift(a) * b; }

TMat operator+(TMat a, const TMat& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i) a.e[i] += b.e[i];
  return a;
}

TMat operator-(TMat a, const TMat& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i) a.e[i] -= b.e[i];
  return a;
}

TMat scaled(TMat a, const Scalar& s) {
  for (auto& t : a.e) t = t.scaled(s);
  return a;
}

// X_1 for the matrix of generators x_i^j = letter offset + i*m + j.
TMat generator_matrix_1(int m, int offset) {
  TMat t(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) t.at(i * m + k, j * m + k) = Tensor({offset + i * m + j});
  return t;
}

std::vector<Tensor> nonzero_entries(const TMat& t) {
  std::vector<Tensor> out;
  for (const Tensor& x : t.e)
    if (!x.is_zero()) out.push_back(x);
  return out;
}

Relation relation_from(const Tensor& full) {
  Relation r;
  r.quadratic = full.component(2);
  r.linear = full.component(1);
  r.constant = full.coeff(Word{});
  return r;
}

// Echelonized inhomogeneous relations; every row must lead with a quadratic
// word.
std::vector<Relation> relations_from_entries(const std::vector<Tensor>& entries, const std::string& what) {
  Subspace rows(-1);
  for (const Tensor& t : entries) rows.insert(t);
  std::vector<Relation> out;
  for (const Tensor& row : rows.basis()) {
    if (row.leading_word().size() != 2) throw Error(what + ": a relation without quadratic part");
    out.push_back(relation_from(row));
  }
  return out;
}

Matrix inverse_of(const Braiding& b) { return b.R.inverse(); }

}  // namespace

std::vector<std::string> matrix_generator_names(const std::string& base, int m) {
  if (m == 1) return {base};
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) out.push_back(base + "_" + std::to_string(i) + "^" + std::to_string(j));
  return out;
}

// ---------------------------------------------------------------- braidings

Matrix flip_matrix(int m) {
  Matrix P(m * m, m * m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) P(i * m + k, k * m + i) = 1;
  return P;
}

Braiding standard_hecke(int m) {
  if (m < 1) throw Error("standard_hecke: m must be positive");
  Matrix R(m * m, m * m);
  for (int i = 0; i < m; ++i) {
    R(i * m + i, i * m + i) = q();
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      R(i * m + j, j * m + i) = 1;
      if (i > j) R(i * m + j, i * m + j) += q_minus_qinv();
    }
  }
  return {m, R, BraidingKind::hecke, "hecke" + std::to_string(m)};
}

Braiding flip(int m) {
  if (m < 1) throw Error("flip: m must be positive");
  return {m, flip_matrix(m), BraidingKind::involutive, "flip" + std::to_string(m)};
}

Braiding super_flip(int p, int n) {
  int m = p + n;
  if (p < 0 || n < 0 || m < 1) throw Error("super_flip: bad dimensions");
  Matrix R(m * m, m * m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) R(i * m + k, k * m + i) = (i >= p && k >= p) ? -1 : 1;
  return {m, R, BraidingKind::involutive, "superflip" + std::to_string(p) + "|" + std::to_string(n)};
}

Matrix embed(const Matrix& op, int m, const std::vector<int>& sites, int k) {
  int r = static_cast<int>(sites.size());
  int dim = ipow(m, k), sub = ipow(m, r);
  if (op.rows() != sub || op.cols() != sub) throw Error("embed: operator size does not match the sites");
  Matrix out(dim, dim);
  for (int I = 0; I < dim; ++I) {
    std::vector<int> di = digits(I, m, k);
    std::vector<int> local(static_cast<std::size_t>(r));
    for (int s = 0; s < r; ++s) local[static_cast<std::size_t>(s)] = di[static_cast<std::size_t>(sites[static_cast<std::size_t>(s)])];
    int row = undigits(local, m);
    for (int c = 0; c < sub; ++c) {
      const Scalar& v = op(row, c);
      if (v.is_zero()) continue;
      std::vector<int> dj = di;
      std::vector<int> lc = digits(c, m, r);
      for (int s = 0; s < r; ++s) dj[static_cast<std::size_t>(sites[static_cast<std::size_t>(s)])] = lc[static_cast<std::size_t>(s)];
      out(I, undigits(dj, m)) = v;
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& op, int m, int site, int k) {
  int dim = ipow(m, k - 1);
  Matrix out(dim, dim);
  for (int I = 0; I < dim; ++I)
    for (int J = 0; J < dim; ++J) {
      std::vector<int> di = digits(I, m, k - 1), dj = digits(J, m, k - 1);
      Scalar s;
      for (int a = 0; a < m; ++a) {
        std::vector<int> fi = di, fj = dj;
        fi.insert(fi.begin() + site, a);
        fj.insert(fj.begin() + site, a);
        s += op(undigits(fi, m), undigits(fj, m));
      }
      out(I, J) = s;
    }
  return out;
}

ConditionReport check_braid(const Braiding& b) {
  Matrix r12 = embed(b.R, b.m, {0, 1}, 3), r23 = embed(b.R, b.m, {1, 2}, 3);
  return make_report("braid." + b.name, r12 * r23 * r12 == r23 * r12 * r23);
}

ConditionReport check_hecke(const Braiding& b) {
  int n = b.m * b.m;
  Matrix lhs = (b.R - Matrix::scalar(n, q())) * (b.R + Matrix::scalar(n, q().inverse()));
  return make_report("hecke." + b.name, lhs.is_zero());
}

ConditionReport check_involutive(const Braiding& b) {
  int n = b.m * b.m;
  return make_report("involutive." + b.name, b.R * b.R == Matrix::identity(n));
}

// ---------------------------------------------------------------- skew inverse

SkewInverseData skew_inverse(const Braiding& b) {
  int m = b.m, n = m * m;
  // Tr_2 R_12 Psi_23 = P_13 reads sum_{a,x} R[(i,a),(j,x)] Psi[(x,k),(a,l)] = delta_il delta_kj.
  Matrix Rt(n, n), target(n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int x = 0; x < m; ++x)
        for (int a = 0; a < m; ++a) Rt(i * m + j, x * m + a) = b.R(i * m + a, j * m + x);
      target(i * m + j, j * m + i) = 1;
    }
  Matrix Pt;
  try {
    Pt = Rt.inverse() * target;
  } catch (const Error&) {
    throw Error("not skew-invertible");
  }
  SkewInverseData s;
  s.Psi = Matrix(n, n);
  for (int x = 0; x < m; ++x)
    for (int a = 0; a < m; ++a)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) s.Psi(x * m + k, a * m + l) = Pt(x * m + a, k * m + l);
  s.B = partial_trace(s.Psi, m, 0, 2);
  s.C = partial_trace(s.Psi, m, 1, 2);
  return s;
}

std::vector<ConditionReport> check_skew_inverse(const Braiding& b, const SkewInverseData& s) {
  int m = b.m;
  std::vector<ConditionReport> out;
  Matrix P13 = flip_matrix(m);
  Matrix left = partial_trace(embed(b.R, m, {0, 1}, 3) * embed(s.Psi, m, {1, 2}, 3), m, 1, 3);
  Matrix right = partial_trace(embed(s.Psi, m, {0, 1}, 3) * embed(b.R, m, {1, 2}, 3), m, 1, 3);
  out.push_back(make_report("psi.left." + b.name, left == P13, "Tr_2 R_12 Psi_23 = P_13"));
  out.push_back(make_report("psi.right." + b.name, right == P13, "Tr_2 Psi_12 R_23 = P_13"));
  Matrix id = Matrix::identity(m);
  Matrix bcr_b = partial_trace(embed(s.B, m, {0}, 2) * b.R, m, 0, 2);
  Matrix bcr_c = partial_trace(embed(s.C, m, {1}, 2) * b.R, m, 1, 2);
  out.push_back(make_report("bcr.B." + b.name, bcr_b == id, "Tr_1 B_1 R_12 = I"));
  out.push_back(make_report("bcr.C." + b.name, bcr_c == id, "Tr_2 C_2 R_12 = I"));
  if (b.kind == BraidingKind::hecke) {
    Scalar expect = q().pow(-2 * m);
    out.push_back(make_report("bc.product." + b.name, s.B * s.C == Matrix::scalar(m, expect),
                              "B C = " + expect.to_string()));
    Scalar tr = q().pow(-m) * qnum_sym(m);
    bool ok = s.B.trace() == tr && s.C.trace() == tr;
    out.push_back(make_report("bc.trace." + b.name, ok,
                              "Tr B = " + s.B.trace().to_string() + ", Tr C = " + s.C.trace().to_string()));
  }
  return out;
}

Matrix psi_hat(const Braiding& b, const SkewInverseData& s, bool with_correction) {
  Matrix P = flip_matrix(b.m);
  Matrix h = P * s.Psi * P;
  if (with_correction && b.kind == BraidingKind::hecke)
    h += kron(s.B, s.C).scaled(q_minus_qinv() * q().pow(2 * b.m));
  return h;
}

ConditionReport check_psi_hat(const Braiding& b, const SkewInverseData& s) {
  int m = b.m;
  Matrix h = psi_hat(b, s), Ri = inverse_of(b), P = flip_matrix(m);
  Matrix first = partial_trace(embed(h, m, {0, 1}, 3) * embed(Ri, m, {0, 2}, 3), m, 0, 3);
  Matrix second = partial_trace(embed(h, m, {1, 0}, 3) * embed(Ri, m, {2, 0}, 3), m, 0, 3);
  return make_report("psi_hat." + b.name, first == P && second == P,
                     "Tr_1 PsiHat_12 R^-1_13 = P_23 = Tr_1 PsiHat_21 R^-1_31");
}

// ---------------------------------------------------------------- algebras

AlgebraPresentation mre_presentation(const Braiding& b, const Scalar& hbar) {
  int m = b.m;
  TMat N = generator_matrix_1(m, 0);
  TMat E = b.R * N * b.R * N - N * b.R * N * b.R - scaled(b.R * N - N * b.R, hbar);
  AlgebraPresentation p;
  p.name = "mre-" + b.name;
  p.symbol = "q";
  p.generators = matrix_generator_names("n", m);
  p.relations = relations_from_entries(nonzero_entries(E), p.name);
  return p;
}

AlgebraPresentation derivative_presentation(const Braiding& b) {
  Matrix Ri = inverse_of(b);
  TMat D = generator_matrix_1(b.m, 0);
  TMat E = Ri * D * Ri * D - D * Ri * D * Ri;
  AlgebraPresentation p;
  p.name = "derivatives-" + b.name;
  p.symbol = "q";
  p.generators = matrix_generator_names("d", b.m);
  p.relations = relations_from_entries(nonzero_entries(E), p.name);
  return p;
}

WeylPresentation braided_weyl(const Braiding& b, const Scalar& hbar) {
  int m = b.m, n = m * m;
  Matrix Ri = inverse_of(b);
  TMat N = generator_matrix_1(m, 0), D = generator_matrix_1(m, n);
  TMat E = D * b.R * N * b.R - b.R * N * Ri * D - lift(b.R) - scaled(D * b.R, hbar);
  Subspace rows(-1);
  for (const Tensor& t : nonzero_entries(E)) rows.insert(t);
  WeylPresentation w;
  w.A = mre_presentation(b, hbar);
  w.B = derivative_presentation(b);
  for (const Tensor& row : rows.basis()) {
    const Word& lead = row.leading_word();
    if (lead.size() != 2 || lead[0] < n || lead[1] >= n)
      throw Error("permutation relations do not solve for the products d n");
    w.rules[{lead[0] - n, lead[1]}] = Tensor(lead) - row;
  }
  if (static_cast<int>(w.rules.size()) != n * n)
    throw Error("permutation relations do not determine every product d n");
  return w;
}

ConditionReport check_action_on_generators(const WeylPresentation& w, const SkewInverseData& s) {
  WeylEngine e(w);
  int m = s.B.rows();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int p = 0; p < m; ++p) {
          Tensor got = e.apply({i * m + j}, Tensor({k * m + p}));
          Tensor want = i == p ? Tensor::constant(s.B(k, j)) : Tensor();
          if (got != want)
            return make_report("action.generators", false,
                               w.B.generators[static_cast<std::size_t>(i * m + j)] + "(" +
                                   w.A.generators[static_cast<std::size_t>(k * m + p)] + ") = " +
                                   got.to_string(w.A.namer()),
                               got);
        }
  return make_report("action.generators", true, "d_i^j(n_k^p) = delta_i^p B_k^j");
}

AlgebraPresentation ext_algebra(const Braiding& b, const SkewInverseData& s, bool with_correction) {
  Matrix h = psi_hat(b, s, with_correction), Ri = inverse_of(b);
  TMat Om = generator_matrix_1(b.m, 0);
  TMat E = b.R * Om * h * Om + Om * h * Om * Ri;
  AlgebraPresentation p;
  p.name = "lambda-" + b.name;
  p.symbol = "q";
  p.generators = matrix_generator_names("om", b.m);
  Subspace rows = echelonize(nonzero_entries(E), 2);
  for (const Tensor& row : rows.basis()) p.relations.push_back(relation_from(row));
  return p;
}

Subspace mre_symmetric_complement(const Braiding& b) {
  Matrix Ri = inverse_of(b);
  TMat N = generator_matrix_1(b.m, 0);
  return echelonize(nonzero_entries(b.R * N * b.R * N + N * b.R * N * Ri), 2);
}

// ---------------------------------------------------------------- de Rham

BraidedCalculus::BraidedCalculus(Braiding b, const Scalar& hbar)
    : b_(std::move(b)),
      s_(skew_inverse(b_)),
      engine_(braided_weyl(b_, hbar)),
      lambda_(ext_algebra(b_, s_)),
      lambda_rules_(complete_to_degree(orient(lambda_), 3)) {}

DifferentialForm BraidedCalculus::function(const Tensor& f) {
  DifferentialForm w;
  if (!f.is_zero()) w.parts[Word{}] = f;
  return w;
}

DifferentialForm BraidedCalculus::reduce(const DifferentialForm& w) {
  std::map<Word, Tensor, WordLess> buckets;
  for (const auto& [om, f] : w.parts) {
    Tensor r = lambda_rules_.reduce(Tensor(om));
    for (const auto& [ow, oc] : r.terms()) buckets[ow].add_scaled(f, oc);
  }
  DifferentialForm out;
  for (auto& [om, f] : buckets) {
    Tensor r = engine_.reduce_a(f);
    if (!r.is_zero()) out.parts[om] = std::move(r);
  }
  return out;
}

DifferentialForm BraidedCalculus::d(const DifferentialForm& w) {
  int m = b_.m;
  DifferentialForm out;
  for (const auto& [om, f] : w.parts)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Tensor g = engine_.apply({j * m + i}, f);
        if (g.is_zero()) continue;
        Word nw = om;
        nw.push_back(i * m + j);
        out.parts[nw] += g;
      }
  return reduce(out);
}

std::string BraidedCalculus::to_string(const DifferentialForm& w) const {
  if (w.is_zero()) return "0";
  LetterNamer on = lambda_.namer(), nn = weyl().A.namer();
  std::string out;
  for (auto it = w.parts.rbegin(); it != w.parts.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string om;
    for (int l : it->first) om += (om.empty() ? "" : " ") + on(l);
    std::string f = it->second.to_string(nn);
    out += it->second.size() > 1 ? "(" + f + ")" : f;
    if (!om.empty()) out += " " + om;
  }
  return out;
}

// ---------------------------------------------------------------- duality and Q operators

ConditionReport duality_check(const Braiding& b, const SkewInverseData& s, bool with_correction) {
  int m = b.m, n = m * m;
  Matrix Ri = inverse_of(b), h = psi_hat(b, s, with_correction);
  TMat D = generator_matrix_1(m, 0), Om = generator_matrix_1(m, 0);
  TMat X = Ri * D * Ri * D;
  TMat Xs = Om * h * Om * b.R;
  LetterPairing pair = [m](int d, int om) { return Scalar((d / m == om % m && om / m == d % m) ? 1 : 0); };
  Matrix M(n * n, n * n);
  for (int I = 0; I < n * n; ++I)
    for (int J = 0; J < n * n; ++J) {
      // I = (i1 i2 i3 i4): X uses (i1 i2), X* uses (i3 i4).
      int x_row = I / n, xs_row = I % n, x_col = J / n, xs_col = J % n;
      M(I, J) = dual_pairing(X.at(x_row, x_col), Xs.at(xs_row, xs_col), pair);
    }
  Matrix P = flip_matrix(m);
  Matrix expect = embed(P, m, {0, 2}, 4) * embed(P, m, {1, 3}, 4);
  std::string id = std::string("duality.") + b.name + (with_correction ? "" : ".uncorrected");
  return make_report(id, M == expect, "<X_12, X*_34> = P_13 P_24");
}

QQData qq_operators(const Braiding& b) {
  int m = b.m, n = m * m;
  Matrix Ri = inverse_of(b);
  TMat D = generator_matrix_1(m, 0);
  TMat X = Ri * D * Ri * D, Y = D * Ri * D * Ri, Yp = D * Ri * D * b.R;
  auto coords = [n](const TMat& t) {
    Matrix M(n * n, n * n);
    for (int e = 0; e < n * n; ++e)
      for (const auto& [w, c] : t.e[static_cast<std::size_t>(e)].terms()) M(e, w[0] * n + w[1]) = c;
    return M;
  };
  Matrix MX = coords(X), MY = coords(Y), MYp = coords(Yp);
  Matrix MXi;
  try {
    MXi = MX.inverse();
  } catch (const Error&) {
    throw Error("the entries of R^-1 D1 R^-1 D1 are not a basis of the quadratic words");
  }
  QQData out;
  out.Q = MXi * MY;
  out.Qp = MXi * MYp;
  auto rows = [n](const Matrix& M) {
    std::vector<Tensor> v;
    for (int r = 0; r < M.rows(); ++r) {
      Tensor t;
      for (int c = 0; c < M.cols(); ++c) t.add({c / n, c % n}, M(r, c));
      v.push_back(std::move(t));
    }
    return echelonize(v, 2);
  };
  out.I = rows(MX - MY);
  out.Iplus = rows(MX + MYp);
  return out;
}

ConditionReport qq_check(const Braiding& b) {
  int n = b.m * b.m;
  QQData d = qq_operators(b);
  Matrix id = Matrix::identity(n * n);
  std::string detail = "dims " + std::to_string(d.I.dim()) + " + " + std::to_string(d.Iplus.dim());
  if (!(d.Q * d.Qp == d.Qp * d.Q)) return make_report("qq." + b.name, false, "Q Q' != Q' Q");
  if (!((id - d.Q) * (id + d.Qp)).is_zero()) return make_report("qq." + b.name, false, "(I - Q)(I + Q') != 0");
  Subspace ddd = derivative_presentation(b).quadratic_space();
  if (!(d.I == ddd)) return make_report("qq." + b.name, false, "X - Q(X) does not span the derivative relations");
  bool direct = span_sum(d.I, d.Iplus).dim() == n * n && d.I.dim() + d.Iplus.dim() == n * n;
  return make_report("qq." + b.name, direct, detail);
}

ConditionReport coevaluation_check(const Braiding& b, const SkewInverseData& s) {
  int m = b.m, n = m * m;
  Subspace I = derivative_presentation(b).quadratic_space();
  Subspace S = ext_algebra(b, s).quadratic_space();
  auto dual = [m](int a) { return (a % m) * m + a / m; };
  Tensor acc;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      Tensor ro = S.reduce(Tensor({dual(a), dual(c)}));
      Tensor rd = I.reduce(Tensor({c, a}));
      if (ro.is_zero() || rd.is_zero()) continue;
      Tensor shifted;
      for (const auto& [w, k] : rd.terms()) shifted.add({w[0] + n, w[1] + n}, k);
      acc += tensor_product(ro, shifted);
    }
  return make_report("coevaluation." + b.name, acc.is_zero(), "sum u^a u^b (x) u_b u_a in Lambda^2 (x) Sym^2", acc);
}

ConditionReport orthogonality_check(const Braiding& b, const SkewInverseData& s) {
  int m = b.m, n = m * m;
  Subspace I = derivative_presentation(b).quadratic_space();
  Subspace S = ext_algebra(b, s).quadratic_space();
  std::vector<int> duals(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) duals[static_cast<std::size_t>(a)] = a;
  LetterPairing pair = [m](int d, int om) { return Scalar((d / m == om % m && om / m == d % m) ? 1 : 0); };
  Subspace perp = orthogonal_complement(I, duals, pair);
  return make_report("orthogonality." + b.name, perp == S,
                     "dim I = " + std::to_string(I.dim()) + ", dim I^perp = " + std::to_string(perp.dim()) +
                         ", dim skew = " + std::to_string(S.dim()));
}

ConditionReport coproduct_check(int m) {
  // Letters: -1 is the unit, i*m + j is n_i^j.
  auto delta = [m](int letter) {
    Tensor t;
    if (letter < 0) return Tensor({-1, -1});
    int i = letter / m, j = letter % m;
    t.add({letter, -1}, 1);
    t.add({-1, letter}, 1);
    for (int k = 0; k < m; ++k) t.add({i * m + k, k * m + j}, -q_minus_qinv());
    return t;
  };
  auto delta_at = [&](const Tensor& t, std::size_t pos) {
    Tensor out;
    for (const auto& [w, c] : t.terms()) {
      Tensor d = delta(w[pos]);
      for (const auto& [dw, dc] : d.terms()) {
        Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        nw.insert(nw.end(), dw.begin(), dw.end());
        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 1), w.end());
        out.add(nw, c * dc);
      }
    }
    return out;
  };
  // Counit on one factor: kills generators, keeps the unit.
  auto counit_at = [](const Tensor& t, std::size_t pos) {
    Tensor out;
    for (const auto& [w, c] : t.terms()) {
      if (w[pos] >= 0) continue;
      Word nw = w;
      nw.erase(nw.begin() + static_cast<std::ptrdiff_t>(pos));
      out.add(nw, c);
    }
    return out;
  };
  for (int a = 0; a < m * m; ++a) {
    Tensor d = delta(a);
    if (counit_at(d, 0) != Tensor({a}) || counit_at(d, 1) != Tensor({a}))
      return make_report("coproduct.m" + std::to_string(m), false, "counit fails on a generator");
    if (delta_at(d, 0) != delta_at(d, 1))
      return make_report("coproduct.m" + std::to_string(m), false, "coassociativity fails on a generator");
  }
  return make_report("coproduct.m" + std::to_string(m), true);
}

}  // namespace braidcalc
