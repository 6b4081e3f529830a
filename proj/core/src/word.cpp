#include "ncequiv/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ncequiv {

Word Word::letter(std::size_t var, bool star) {
  if (var >= kMaxVars) throw std::out_of_range("variable index too large");
  return Word(std::string(1, Letter{static_cast<std::uint8_t>(var), star}.code()));
}

Word Word::star() const {
  std::string r(s_.rbegin(), s_.rend());
  for (auto& c : r) c = static_cast<char>(c ^ 1);
  return Word(std::move(r));
}

Word Word::min_rotation() const {
  const std::size_t n = s_.size();
  if (n < 2) return *this;
  // Booth's least rotation.
  std::string d = s_ + s_;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    long i = f[j - k - 1];
    while (i != -1 && d[j] != d[k + static_cast<std::size_t>(i) + 1]) {
      if (d[j] < d[k + static_cast<std::size_t>(i) + 1]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && d[j] != d[k]) {
      if (d[j] < d[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return Word(d.substr(k, n));
}

bool Word::has_star() const {
  return std::any_of(s_.begin(), s_.end(), [](char c) { return (c & 1) != 0; });
}

std::size_t Word::num_vars() const {
  std::size_t n = 0;
  for (char c : s_) n = std::max<std::size_t>(n, Letter::from_code(c).var + 1u);
  return n;
}

std::size_t Degree::value() const {
  if (is_minus_infinity()) throw std::domain_error("degree of the zero polynomial");
  return static_cast<std::size_t>(d_);
}

std::string Degree::to_string() const { return is_minus_infinity() ? "-inf" : std::to_string(d_); }

std::ostream& operator<<(std::ostream& os, Degree d) { return os << d.to_string(); }

}  // namespace ncequiv
