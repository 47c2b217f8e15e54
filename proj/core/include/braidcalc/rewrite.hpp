#pragma once

// Bounded noncommutative rewriting over the deg-lex order.

#include <map>
#include <string>
#include <vector>

#include "braidcalc/presentation.hpp"

namespace braidcalc {

class RewriteSystem {
 public:
  using Rules = std::map<Word, Tensor, WordLess>;

  RewriteSystem() = default;
  explicit RewriteSystem(int alphabet_size) : alphabet_(alphabet_size) {}

  int alphabet_size() const { return alphabet_; }
  const Rules& rules() const { return rules_; }
  // Largest overlap length for which all ambiguities are known to resolve.
  int completion_degree() const { return completion_degree_; }
  // Rules created by completion (beyond the oriented input), with the length
  // of their leading word.
  const std::vector<int>& added_rule_degrees() const { return added_; }
  // True when 1 -> 0 was derived (the algebra is zero).
  bool collapsed() const { return rules_.count(Word{}) > 0; }

  bool is_normal(const Word& w) const;
  Tensor reduce(const Tensor& t) const;
  // Number of normal words of each length 0..max_len.
  std::vector<long> normal_word_counts(int max_len) const;

  // Adds "lead(t) -> lead(t) - t/lc(t)" after reducing t and keeps the
  // system interreduced. Returns false when t reduces to zero.
  bool add_relation(const Tensor& t, bool from_completion);
  void set_completion_degree(int n) { completion_degree_ = n; }

 private:
  int alphabet_ = 0;
  int completion_degree_ = 2;
  Rules rules_;
  std::vector<std::size_t> lead_lengths_;
  std::vector<int> added_;
  void refresh_lengths();
  // First (leftmost, shortest) occurrence of a lead inside w.
  bool find_lead(const Word& w, std::size_t& pos, std::size_t& len) const;
};

// Orients the relations of p (deg-lex greatest word leads). When
// quadratic_only is set, linear and constant parts are ignored.
RewriteSystem orient(const AlgebraPresentation& p, bool quadratic_only = false);
RewriteSystem complete_to_degree(RewriteSystem rs, int N);

// Dimensions of degrees 0..N of T(U)/<quadratic parts>.
std::vector<long> graded_dims(const AlgebraPresentation& p, int N);

struct DimReport {
  std::vector<long> quadratic;  // quadratic algebra
  std::vector<long> graded;     // associated graded of the full algebra
  bool pass = false;
  bool collapsed = false;
  int added_rules = 0;
};

DimReport pbw_check(const AlgebraPresentation& p, int N);

// "[1,3,6]"
std::string format_dims(const std::vector<long>& dims);

}  // namespace braidcalc
