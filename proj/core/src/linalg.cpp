#include "braidcalc/linalg.hpp"

#include <algorithm>
#include <climits>

namespace braidcalc {

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

LetterNamer index_namer(const std::vector<std::string>& names) {
  return [names](int letter) {
    if (letter >= 0 && letter < static_cast<int>(names.size())) return names[static_cast<std::size_t>(letter)];
    return "g" + std::to_string(letter);
  };
}

// ---------------------------------------------------------------- Tensor

Tensor::Tensor(const Word& w, const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(w, c);
}

Scalar Tensor::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<int> Tensor::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = static_cast<int>(terms_.begin()->first.size());
  if (static_cast<int>(terms_.rbegin()->first.size()) != d) return std::nullopt;
  return d;
}

int Tensor::max_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

Tensor Tensor::component(int degree) const {
  Tensor r;
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == degree) r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

void Tensor::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Tensor::add_scaled(const Tensor& t, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [w, x] : t.terms_) add(w, x * c);
}

Tensor& Tensor::operator+=(const Tensor& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Tensor Tensor::operator-() const {
  Tensor r(*this);
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Tensor Tensor::scaled(const Scalar& c) const {
  if (c.is_zero()) return Tensor();
  Tensor r(*this);
  for (auto& [w, x] : r.terms_) x *= c;
  return r;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  Tensor r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add(concat(wa, wb), ca * cb);
  return r;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) { return a * b; }

Tensor Tensor::map_coeffs(const std::function<Scalar(const Scalar&)>& f) const {
  Tensor r;
  for (const auto& [w, c] : terms_) r.add(w, f(c));
  return r;
}

std::string Tensor::to_string(const LetterNamer& name, std::string_view var) const {
  if (terms_.empty()) return "0";
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second.to_string(var);
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Word& w = it->first;
    const Scalar& c = it->second;
    std::string letters;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) letters += " ";
      letters += name(w[i]);
    }
    std::string coeff;
    bool negative = false;
    if (c.is_constant()) {
      Rational v = c.constant();
      negative = v < 0;
      Rational a = abs(v);
      if (w.empty()) {
        coeff = braidcalc::to_string(a);
      } else if (a != 1) {
        coeff = braidcalc::to_string(a);
        if (a.get_den() != 1) coeff += " ";
      }
    } else {
      coeff = "(" + c.to_string(var) + ")";
      if (!w.empty()) coeff += " ";
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coeff + letters;
    first = false;
  }
  return out;
}

std::vector<Word> all_words(int alphabet_size, int length) {
  std::vector<Word> out{Word{}};
  for (int l = 0; l < length; ++l) {
    std::vector<Word> next;
    next.reserve(out.size() * static_cast<std::size_t>(alphabet_size));
    for (const Word& w : out)
      for (int a = 0; a < alphabet_size; ++a) {
        Word x = w;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------- Subspace

void Subspace::reindex() {
  std::sort(rows_.begin(), rows_.end(),
            [](const Tensor& a, const Tensor& b) { return WordLess{}(a.leading_word(), b.leading_word()); });
  pivots_.clear();
  for (std::size_t i = 0; i < rows_.size(); ++i) pivots_.emplace(rows_[i].leading_word(), i);
}

Subspace Subspace::from_reduced(int degree, std::vector<Tensor> rows) {
  Subspace s(degree);
  s.rows_ = std::move(rows);
  s.reindex();
  return s;
}

int Subspace::pivot_index(const Word& w) const {
  auto it = pivots_.find(w);
  return it == pivots_.end() ? -1 : static_cast<int>(it->second);
}

Tensor Subspace::reduce(const Tensor& t) const {
  if (rows_.empty()) return t;
  std::vector<std::pair<std::size_t, Scalar>> hits;
  for (const auto& [w, c] : t.terms()) {
    auto it = pivots_.find(w);
    if (it != pivots_.end()) hits.emplace_back(it->second, c);
  }
  if (hits.empty()) return t;
  Tensor r(t);
  for (const auto& [i, c] : hits) r.add_scaled(rows_[i], -c);
  return r;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const Tensor& t) const {
  std::vector<Scalar> coords(rows_.size());
  for (const auto& [w, c] : t.terms()) {
    auto it = pivots_.find(w);
    if (it != pivots_.end()) coords[it->second] = c;
  }
  Tensor r(t);
  for (std::size_t i = 0; i < rows_.size(); ++i) r.add_scaled(rows_[i], -coords[i]);
  if (!r.is_zero()) return std::nullopt;
  return coords;
}

bool Subspace::insert(const Tensor& t) {
  Tensor r = reduce(t);
  if (r.is_zero()) return false;
  r = r.scaled(r.leading_coeff().inverse());
  const Word& p = r.leading_word();
  for (auto& row : rows_) {
    Scalar c = row.coeff(p);
    if (!c.is_zero()) row.add_scaled(r, -c);
  }
  rows_.push_back(std::move(r));
  reindex();
  return true;
}

Subspace echelonize(const std::vector<Tensor>& vectors, int degree) {
  Subspace s(degree);
  for (const Tensor& v : vectors) {
    if (v.is_zero()) continue;
    auto d = v.degree();
    if (!d) throw Error("echelonize: inhomogeneous vector");
    if (*d != degree)
      throw Error("echelonize: vector of degree " + std::to_string(*d) + " in degree " + std::to_string(degree));
    s.insert(v);
  }
  return s;
}

bool member(const Subspace& s, const Tensor& t) {
  if (!t.is_zero() && t.degree() != std::optional<int>(s.degree())) throw Error("member: degree mismatch");
  return s.contains(t);
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  if (a.degree() != b.degree()) throw Error("span_sum: degree mismatch");
  Subspace s = a;
  for (const Tensor& t : b.basis()) s.insert(t);
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.degree() != b.degree()) throw Error("intersect: degree mismatch");
  const Subspace& small = a.dim() <= b.dim() ? a : b;
  const Subspace& large = a.dim() <= b.dim() ? b : a;
  // Remainder words get a high prefix so they dominate the index tags; rows
  // of the augmented echelon whose pivot is a tag encode dependencies.
  Subspace aug(-1);
  for (std::size_t j = 0; j < small.basis().size(); ++j) {
    Tensor rem = large.reduce(small.basis()[j]);
    Tensor v;
    for (const auto& [w, c] : rem.terms()) v.add(concat(Word{INT_MAX}, w), c);
    v.add(Word{INT_MIN, static_cast<int>(j)}, Scalar(1));
    aug.insert(v);
  }
  std::vector<Tensor> vecs;
  for (const Tensor& row : aug.basis()) {
    if (row.leading_word().empty() || row.leading_word()[0] != INT_MIN) continue;
    Tensor x;
    for (const auto& [w, c] : row.terms()) x.add_scaled(small.basis()[static_cast<std::size_t>(w[1])], c);
    vecs.push_back(std::move(x));
  }
  return echelonize(vecs, a.degree());
}

Subspace embed(const Subspace& s, int alphabet_size, int left, int right) {
  std::vector<Word> lw = all_words(alphabet_size, left);
  std::vector<Word> rw = all_words(alphabet_size, right);
  std::vector<Tensor> rows;
  rows.reserve(lw.size() * rw.size() * s.basis().size());
  for (const Tensor& t : s.basis())
    for (const Word& l : lw)
      for (const Word& r : rw) {
        Tensor x;
        for (const auto& [w, c] : t.terms()) x.add(concat(concat(l, w), r), c);
        rows.push_back(std::move(x));
      }
  return Subspace::from_reduced(s.degree() + left + right, std::move(rows));
}

Subspace iterated_intersection(const Subspace& I, int alphabet_size, int k) {
  if (k < 2) throw Error("iterated_intersection: k must be at least 2");
  Subspace cur = I;
  for (int j = 3; j <= k; ++j) {
    if (cur.dim() == 0) return Subspace(k);
    cur = intersect(embed(cur, alphabet_size, 0, 1), embed(I, alphabet_size, j - 2, 0));
  }
  return cur;
}

Scalar dual_pairing(const Tensor& t, const Tensor& s, const LetterPairing& pair) {
  Scalar total;
  for (const auto& [w, c] : t.terms())
    for (const auto& [v, d] : s.terms()) {
      if (w.size() != v.size()) throw Error("dual_pairing: degree mismatch");
      Scalar p = c * d;
      for (std::size_t i = 0; i < w.size() && !p.is_zero(); ++i) p *= pair(w[i], v[v.size() - 1 - i]);
      total += p;
    }
  return total;
}

Subspace orthogonal_complement(const Subspace& s, const std::vector<int>& dual_letters, const LetterPairing& pair) {
  int k = s.degree();
  std::vector<Word> idx = all_words(static_cast<int>(dual_letters.size()), k);
  std::vector<Word> words;
  words.reserve(idx.size());
  for (const Word& w : idx) {
    Word x;
    for (int i : w) x.push_back(dual_letters[static_cast<std::size_t>(i)]);
    words.push_back(std::move(x));
  }
  std::vector<Tensor> out;
  if (s.dim() == 0) {
    for (const Word& w : words) out.emplace_back(w);
    return echelonize(out, k);
  }
  Matrix m(s.dim(), static_cast<int>(words.size()));
  for (int i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      m(i, static_cast<int>(j)) = dual_pairing(s.basis()[static_cast<std::size_t>(i)], Tensor(words[j]), pair);
  for (const auto& v : m.nullspace()) {
    Tensor t;
    for (std::size_t j = 0; j < v.size(); ++j) t.add(words[j], v[j]);
    out.push_back(std::move(t));
  }
  return echelonize(out, k);
}

Tensor LinMap::apply(const Tensor& t) const {
  auto coords = domain.coordinates(t);
  if (!coords) throw Error("LinMap::apply: argument outside the domain");
  Tensor r;
  for (std::size_t i = 0; i < coords->size(); ++i) r.add_scaled(images[i], (*coords)[i]);
  return r;
}

}  // namespace braidcalc
