#include <random>

#include "braidcalc/linalg.hpp"
#include "doctest.h"

using namespace braidcalc;

namespace {

const Scalar q = Scalar::z();

Tensor w2(int a, int b, const Scalar& c = 1) { return Tensor(Word{a, b}, c); }

// Brute-force dimension of a span through a dense matrix rank.
int dense_rank(const std::vector<Tensor>& vs, int alphabet, int degree) {
  auto words = all_words(alphabet, degree);
  Matrix m(static_cast<int>(vs.size()), static_cast<int>(words.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = vs[i].coeff(words[j]);
  return m.rank();
}

// Classical skew relations on n letters: ab - ba.
Subspace skew(int n) {
  std::vector<Tensor> v;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) v.push_back(w2(a, b) - w2(b, a));
  return echelonize(v, 2);
}

}  // namespace

TEST_CASE("echelonize examples") {
  auto s = echelonize({w2(0, 1), w2(0, 1) + w2(1, 0)}, 2);
  CHECK(s.dim() == 2);
  CHECK(s.basis()[0] == w2(0, 1));
  CHECK(s.basis()[1] == w2(1, 0));
  CHECK(echelonize({w2(0, 1) - w2(1, 0, q), w2(0, 1, q) - w2(1, 0, q * q)}, 2).dim() == 1);
  CHECK(echelonize({}, 2).dim() == 0);
  CHECK_THROWS(echelonize({Tensor(Word{0})}, 2));
  CHECK_THROWS(echelonize({Tensor(Word{0}) + w2(0, 0)}, 2));
}

TEST_CASE("echelon form is canonical") {
  std::vector<Tensor> v{w2(0, 1) + w2(1, 1, 2), w2(1, 0, q) - w2(0, 0), w2(0, 0) + w2(1, 1)};
  auto a = echelonize(v, 2);
  std::reverse(v.begin(), v.end());
  auto b = echelonize(v, 2);
  CHECK(a == b);
  CHECK(echelonize(a.basis(), 2) == a);
}

TEST_CASE("member") {
  auto s = skew(3);
  CHECK(member(s, Tensor()));
  CHECK(member(s, w2(0, 2, q) - w2(2, 0, q)));
  CHECK_FALSE(member(s, w2(0, 2)));
  CHECK_THROWS(member(s, Tensor(Word{1})));
}

TEST_CASE("intersection") {
  auto s = skew(3);
  CHECK(intersect(s, s) == s);
  CHECK(intersect(echelonize({w2(0, 1)}, 2), echelonize({w2(1, 0)}, 2)).dim() == 0);
  CHECK(iterated_intersection(s, 3, 2) == s);
  auto i3 = iterated_intersection(s, 3, 3);
  CHECK(i3.dim() == 1);
  CHECK(iterated_intersection(s, 3, 4).dim() == 0);
  // Oracle: the totally antisymmetric tensor.
  Tensor alt;
  int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  for (int i = 0; i < 6; ++i) alt.add(Word{perms[i][0], perms[i][1], perms[i][2]}, i < 3 ? 1 : -1);
  CHECK(member(i3, alt));
}

TEST_CASE("modular law on random subspaces") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto random_space = [&](int count) {
    std::vector<Tensor> v;
    for (int i = 0; i < count; ++i) {
      Tensor t;
      for (const Word& w : all_words(3, 2))
        if (coef(rng) > 0) t.add(w, Scalar(coef(rng)) + q * coef(rng));
      v.push_back(t);
    }
    return echelonize(v, 2);
  };
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_space(5), b = random_space(6);
    CHECK(intersect(a, b).dim() + span_sum(a, b).dim() == a.dim() + b.dim());
    CHECK(a.dim() == dense_rank(a.basis(), 3, 2));
  }
}

TEST_CASE("dual pairing and complements") {
  // Letters 0,1 pair with dual letters 10,11.
  LetterPairing pair = [](int g, int d) { return Scalar(g + 10 == d ? 1 : 0); };
  CHECK(dual_pairing(w2(0, 1), w2(11, 10), pair) == Scalar(1));
  CHECK(dual_pairing(w2(0, 1), w2(10, 11), pair) == Scalar(0));
  CHECK_THROWS(dual_pairing(w2(0, 1), Tensor(Word{10}), pair));
  std::vector<int> duals{10, 11};
  auto full = echelonize({w2(0, 0), w2(0, 1), w2(1, 0), w2(1, 1)}, 2);
  CHECK(orthogonal_complement(full, duals, pair).dim() == 0);
  CHECK(orthogonal_complement(Subspace(2), duals, pair).dim() == 4);
  auto s = skew(2);
  auto c = orthogonal_complement(s, duals, pair);
  CHECK(c.dim() == 3);
  for (const Tensor& v : s.basis())
    for (const Tensor& w : c.basis()) CHECK(dual_pairing(v, w, pair).is_zero());
}

TEST_CASE("tensor printing") {
  LetterNamer name = index_namer({"n"});
  Tensor t = Tensor(Word{0}, 2) + Tensor::constant(1);
  CHECK(t.to_string(name) == "2n + 1");
  Tensor u = Tensor(Word{0, 0}, q + 1) - Tensor(Word{0});
  CHECK(u.to_string(name) == "(q + 1) n n - n");
}
