#include "wordsystem.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace ncequiv::detail {

std::vector<char> alphabet_of(std::initializer_list<const NcPoly*> polys) {
  std::set<char> s;
  for (const NcPoly* p : polys)
    for (const auto& [w, c] : p->terms())
      for (char ch : w.codes()) s.insert(ch);
  return {s.begin(), s.end()};
}

std::vector<Word> words_of_length(const std::vector<char>& alphabet, std::size_t d) {
  std::vector<std::string> cur{""};
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::string> next;
    next.reserve(cur.size() * alphabet.size());
    for (const auto& s : cur)
      for (char c : alphabet) next.push_back(s + c);
    cur = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(cur.size());
  for (auto& s : cur) out.push_back(Word::from_codes(std::move(s)));
  return out;
}

std::vector<Word> words_up_to(const std::vector<char>& alphabet, std::size_t d) {
  std::vector<Word> out;
  for (std::size_t k = d + 1; k-- > 0;) {
    auto w = words_of_length(alphabet, k);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::size_t WordSystem::add_unknown(std::vector<Word> basis) {
  offsets_.push_back(offsets_.back() + basis.size());
  bases_.push_back(std::move(basis));
  return bases_.size() - 1;
}

void WordSystem::add_term(std::size_t unknown, const NcPoly& left, const NcPoly& right, const Scalar& scale) {
  field_ = common_field(field_, common_field(left.field(), right.field()));
  terms_.push_back({unknown, left, right, scale});
}

WordSystem::Solution WordSystem::solve(bool want_nullspace) const {
  FieldPtr f = common_field(field_, target_.field());
  std::unordered_map<Word, SparseRow, WordHash> rows;
  for (const Term& t : terms_) {
    const auto& basis = bases_[t.unknown];
    const std::size_t off = offsets_[t.unknown];
    for (const auto& [u, cu] : t.left.terms())
      for (const auto& [v, cv] : t.right.terms()) {
        Scalar c = cu * cv * t.scale;
        for (std::size_t k = 0; k < basis.size(); ++k) {
          Word w = u * basis[k] * v;
          if (keep_ && !keep_(w)) continue;
          rows[std::move(w)].emplace_back(static_cast<std::uint32_t>(off + k), c);
        }
      }
  }
  for (const auto& [w, c] : target_.terms())
    if (!keep_ || keep_(w)) rows.try_emplace(w);

  std::vector<const Word*> order;
  order.reserve(rows.size());
  for (auto& [w, r] : rows) order.push_back(&w);
  std::sort(order.begin(), order.end(), [](const Word* a, const Word* b) { return GradedLex{}(*a, *b); });

  SparseEchelon ech(num_unknowns(), f);
  for (const Word* w : order) {
    SparseRow& r = rows[*w];
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow merged;
    for (auto& e : r) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
        merged.push_back(std::move(e));
      }
    }
    if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
    ech.add_row(std::move(merged), target_.coeff(*w));
  }

  Solution s;
  s.rank = ech.rank();
  if (auto p = ech.particular()) s.particular = split(*p);
  if (want_nullspace)
    for (const auto& v : ech.nullspace()) s.nullspace.push_back(split(v));
  return s;
}

std::vector<NcPoly> WordSystem::split(const std::vector<Scalar>& x) const {
  std::vector<NcPoly> out;
  for (std::size_t k = 0; k < bases_.size(); ++k) {
    NcPoly p(field_);
    for (std::size_t j = 0; j < bases_[k].size(); ++j) {
      const Scalar& c = x[offsets_[k] + j];
      if (!c.is_zero()) p.add_term(bases_[k][j], c);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace ncequiv::detail
