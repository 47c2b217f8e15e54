#include "braidcalc/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace braidcalc {

namespace {

bool contains_at(const Word& w, std::size_t pos, const Word& sub) {
  return std::equal(sub.begin(), sub.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool contains_subword(const Word& w, const Word& sub) {
  if (sub.size() > w.size()) return false;
  for (std::size_t p = 0; p + sub.size() <= w.size(); ++p)
    if (contains_at(w, p, sub)) return true;
  return false;
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

void RewriteSystem::refresh_lengths() {
  std::set<std::size_t> lens;
  for (const auto& [lead, tail] : rules_) lens.insert(lead.size());
  lead_lengths_.assign(lens.begin(), lens.end());
}

bool RewriteSystem::find_lead(const Word& w, std::size_t& pos, std::size_t& len) const {
  for (std::size_t p = 0; p <= w.size(); ++p)
    for (std::size_t l : lead_lengths_) {
      if (p + l > w.size()) break;
      Word sub = slice(w, p, p + l);
      if (rules_.count(sub)) {
        pos = p;
        len = l;
        return true;
      }
    }
  return false;
}

bool RewriteSystem::is_normal(const Word& w) const {
  std::size_t p, l;
  return !find_lead(w, p, l);
}

Tensor RewriteSystem::reduce(const Tensor& t) const {
  Tensor work = t;
  Tensor done;
  while (!work.is_zero()) {
    Word w = work.leading_word();
    Scalar c = work.leading_coeff();
    work.add(w, -c);
    std::size_t pos, len;
    if (!find_lead(w, pos, len)) {
      done.add(w, c);
      continue;
    }
    const Tensor& tail = rules_.at(slice(w, pos, pos + len));
    Word u = slice(w, 0, pos);
    Word v = slice(w, pos + len, w.size());
    for (const auto& [tw, tc] : tail.terms()) work.add(concat(concat(u, tw), v), tc * c);
  }
  return done;
}

std::vector<long> RewriteSystem::normal_word_counts(int max_len) const {
  std::vector<long> counts(static_cast<std::size_t>(max_len) + 1, 0);
  if (collapsed()) return counts;
  // Normal words are closed under taking prefixes, so extend letter by letter
  // and test only the suffixes ending at the new letter.
  std::function<void(Word&)> dfs = [&](Word& w) {
    ++counts[w.size()];
    if (static_cast<int>(w.size()) == max_len) return;
    for (int a = 0; a < alphabet_; ++a) {
      w.push_back(a);
      bool ok = true;
      for (std::size_t l : lead_lengths_) {
        if (l == 0 || l > w.size()) continue;
        if (rules_.count(slice(w, w.size() - l, w.size()))) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(w);
      w.pop_back();
    }
  };
  Word w;
  dfs(w);
  return counts;
}

bool RewriteSystem::add_relation(const Tensor& t, bool from_completion) {
  std::vector<Tensor> queue{t};
  bool any = false;
  while (!queue.empty()) {
    Tensor x = reduce(queue.back());
    queue.pop_back();
    if (x.is_zero()) continue;
    x = x.scaled(x.leading_coeff().inverse());
    Word lead = x.leading_word();
    Tensor tail = -(x - Tensor(lead));
    for (auto it = rules_.begin(); it != rules_.end();) {
      if (contains_subword(it->first, lead)) {
        queue.push_back(Tensor(it->first) - it->second);
        it = rules_.erase(it);
      } else {
        ++it;
      }
    }
    rules_[lead] = tail;
    refresh_lengths();
    if (from_completion) added_.push_back(static_cast<int>(lead.size()));
    any = true;
    for (auto& [l, tl] : rules_) tl = reduce(tl);
  }
  return any;
}

RewriteSystem orient(const AlgebraPresentation& p, bool quadratic_only) {
  RewriteSystem rs(p.size());
  Subspace rows(-1);
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const Relation& r = p.relations[i];
    if (r.quadratic.is_zero())
      throw Error("relation " + std::to_string(i + 1) + " of '" + p.name +
                  "' has a vanishing leading coefficient at this specialization");
    rows.insert(quadratic_only ? r.quadratic : r.full());
  }
  for (const Tensor& row : rows.basis()) rs.add_relation(row, false);
  return rs;
}

RewriteSystem complete_to_degree(RewriteSystem rs, int N) {
  if (N < 2) throw Error("complete_to_degree: N must be at least 2");
  bool changed = true;
  while (changed && !rs.collapsed()) {
    changed = false;
    std::vector<Word> leads;
    for (const auto& [lead, tail] : rs.rules()) leads.push_back(lead);
    for (const Word& a : leads) {
      for (const Word& b : leads) {
        for (std::size_t k = 1; k < a.size() && k < b.size(); ++k) {
          if (static_cast<int>(a.size() + b.size() - k) > N) continue;
          if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) continue;
          auto ia = rs.rules().find(a);
          auto ib = rs.rules().find(b);
          if (ia == rs.rules().end() || ib == rs.rules().end()) continue;
          Word u = slice(a, 0, a.size() - k);
          Word v = slice(b, k, b.size());
          Tensor s = rs.reduce(ia->second * Tensor(v)) - rs.reduce(Tensor(u) * ib->second);
          if (rs.add_relation(s, true)) changed = true;
          if (rs.collapsed()) break;
        }
      }
    }
  }
  rs.set_completion_degree(N);
  return rs;
}

std::vector<long> graded_dims(const AlgebraPresentation& p, int N) {
  return complete_to_degree(orient(p, true), std::max(N, 2)).normal_word_counts(N);
}

DimReport pbw_check(const AlgebraPresentation& p, int N) {
  DimReport rep;
  rep.quadratic = graded_dims(p, N);
  RewriteSystem full = complete_to_degree(orient(p, false), std::max(N, 2));
  rep.graded = full.normal_word_counts(N);
  rep.collapsed = full.collapsed();
  rep.added_rules = static_cast<int>(full.added_rule_degrees().size());
  rep.pass = rep.quadratic == rep.graded;
  return rep;
}

std::string format_dims(const std::vector<long>& dims) {
  std::string out = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + std::to_string(dims[i]);
  return out + "]";
}

}  // namespace braidcalc
