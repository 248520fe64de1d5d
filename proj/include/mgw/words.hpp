#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mgw {

// Thrown for malformed input text and violated preconditions on user data.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Letters are stored as signed codes: +i for x_i, -i for its inverse.
using LetterCode = std::int16_t;

struct Letter {
  int index = 1;  // 1-based generator index
  int sign = 1;   // +1 or -1

  constexpr LetterCode code() const { return static_cast<LetterCode>(sign * index); }
  static constexpr Letter from_code(LetterCode c) {
    return c > 0 ? Letter{c, 1} : Letter{-c, -1};
  }
  constexpr Letter inverse() const { return Letter{index, -sign}; }
  friend constexpr bool operator==(Letter, Letter) = default;
};

// Position of a letter in the fixed order x1 < X1 < x2 < X2 < ...
constexpr int letter_rank(LetterCode c) { return c > 0 ? 2 * (c - 1) : 2 * (-c - 1) + 1; }
constexpr LetterCode letter_from_rank(int r) {
  return static_cast<LetterCode>((r % 2 == 0) ? (r / 2 + 1) : -(r / 2 + 1));
}

class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}
  Word(int rank, std::vector<LetterCode> codes);
  Word(int rank, std::initializer_list<int> codes);

  // Parses whitespace-separated letters ("x1 X2", or "a B" for rank <= 26).
  static Word parse(std::string_view text, int rank);

  int rank() const { return rank_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  Letter operator[](std::size_t i) const { return Letter::from_code(codes_[i]); }
  std::span<const LetterCode> codes() const { return codes_; }

  void push_back(Letter l);
  void push_back_code(LetterCode c) { codes_.push_back(c); }
  void pop_back() { codes_.pop_back(); }
  LetterCode back_code() const { return codes_.back(); }

  Word subword(std::size_t pos, std::size_t len) const;
  bool is_reduced() const;
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_ = 0;
  std::vector<LetterCode> codes_;
};

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word invert(const Word& w);
// Freely reduced product; throws on rank mismatch.
Word concat(const Word& u, const Word& v);
Word cyclic_shift(const Word& w, std::size_t k);

// Length first, then letter order x1 < X1 < x2 < X2 < ...
bool shortlex_less(const Word& u, const Word& v);
struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

// Number of freely reduced words of length <= max_len over rank n.
std::uint64_t count_reduced_words(int rank, int max_len);

// Visits every freely reduced word of length <= max_len exactly once, in
// shortlex order. Returning false from the visitor stops the walk.
void for_each_reduced_word(int rank, int max_len, const std::function<bool(const Word&)>& visit);
std::vector<Word> enumerate_words(int rank, int max_len);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace mgw
