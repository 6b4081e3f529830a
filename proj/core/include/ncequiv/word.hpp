#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace ncequiv {

// Letter code 2*var + star; var is 0-based.
struct Letter {
  std::uint8_t var = 0;
  bool star = false;

  constexpr char code() const { return static_cast<char>(2 * var + (star ? 1 : 0)); }
  static constexpr Letter from_code(char c) {
    auto u = static_cast<std::uint8_t>(c);
    return {static_cast<std::uint8_t>(u >> 1), (u & 1) != 0};
  }
  friend constexpr bool operator==(Letter, Letter) = default;
};

inline constexpr std::size_t kMaxVars = 64;

class Word {
 public:
  Word() = default;
  static Word letter(std::size_t var, bool star = false);
  static Word from_codes(std::string codes) { return Word(std::move(codes)); }

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  Letter operator[](std::size_t i) const { return Letter::from_code(s_[i]); }
  std::string_view codes() const { return s_; }

  Word substr(std::size_t pos, std::size_t n = std::string::npos) const { return Word(s_.substr(pos, n)); }
  Word& operator*=(const Word& o) {
    s_ += o.s_;
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  // Reverse and toggle stars.
  Word star() const;
  // Lexicographically least cyclic rotation.
  Word min_rotation() const;
  bool has_star() const;
  // One past the largest variable index, 0 for the empty word.
  std::size_t num_vars() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) { return a.s_ <=> b.s_; }

 private:
  explicit Word(std::string s) : s_(std::move(s)) {}
  std::string s_;
};

// Print order: higher degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.codes() < b.codes();
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::string_view>{}(w.codes()); }
};

// Degree of a polynomial; the zero polynomial has degree minus infinity.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(std::size_t d) : d_(static_cast<long>(d)) {}
  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const { return d_ == kNeg; }
  // Requires a finite degree.
  std::size_t value() const;

  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) { return a.d_ <=> b.d_; }
  friend constexpr bool operator==(Degree a, std::size_t b) { return a.d_ == static_cast<long>(b); }
  friend constexpr std::strong_ordering operator<=>(Degree a, std::size_t b) {
    return a.d_ <=> static_cast<long>(b);
  }
  friend Degree operator+(Degree a, Degree b) {
    if (a.is_minus_infinity() || b.is_minus_infinity()) return {};
    return Degree(static_cast<std::size_t>(a.d_ + b.d_));
  }

  std::string to_string() const;

 private:
  static constexpr long kNeg = std::numeric_limits<long>::min();
  long d_ = kNeg;
};

std::ostream& operator<<(std::ostream& os, Degree d);

}  // namespace ncequiv
