#include "mgw/words.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace mgw {

namespace {

void check_code(int rank, LetterCode c) {
  if (c == 0 || std::abs(static_cast<int>(c)) > rank) {
    throw Error("letter index " + std::to_string(std::abs(static_cast<int>(c))) +
                " out of range for rank " + std::to_string(rank));
  }
}

}  // namespace

Word::Word(int rank, std::vector<LetterCode> codes) : rank_(rank), codes_(std::move(codes)) {
  for (auto c : codes_) check_code(rank_, c);
}

Word::Word(int rank, std::initializer_list<int> codes) : rank_(rank) {
  codes_.reserve(codes.size());
  for (int c : codes) {
    check_code(rank_, static_cast<LetterCode>(c));
    codes_.push_back(static_cast<LetterCode>(c));
  }
}

Word Word::parse(std::string_view text, int rank) {
  Word w(rank);
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    const char c = text[i];
    int index = 0;
    int sign = 0;
    if ((c == 'x' || c == 'X') && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      sign = c == 'x' ? 1 : -1;
      ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        index = index * 10 + (text[i] - '0');
        if (index > 32767) throw Error("letter index too large at position " + std::to_string(start));
        ++i;
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) && rank <= 26) {
      sign = std::islower(static_cast<unsigned char>(c)) ? 1 : -1;
      index = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
      ++i;
    } else {
      throw Error("unexpected character '" + std::string(1, c) + "' at position " +
                  std::to_string(start));
    }
    if (index < 1 || index > rank) {
      throw Error("letter at position " + std::to_string(start) + " out of range for rank " +
                  std::to_string(rank));
    }
    w.codes_.push_back(static_cast<LetterCode>(sign * index));
  }
  return w;
}

void Word::push_back(Letter l) {
  check_code(rank_, l.code());
  codes_.push_back(l.code());
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word w(rank_);
  w.codes_.assign(codes_.begin() + static_cast<std::ptrdiff_t>(pos),
                  codes_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < codes_.size(); ++i) {
    if (codes_[i] == -codes_[i - 1]) return false;
  }
  return true;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (i) out += ' ';
    out += codes_[i] > 0 ? 'x' : 'X';
    out += std::to_string(std::abs(static_cast<int>(codes_[i])));
  }
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<LetterCode> stack;
  stack.reserve(w.size());
  for (auto c : w.codes()) {
    if (!stack.empty() && stack.back() == -c) {
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  Word out(w.rank());
  for (auto c : stack) out.push_back_code(c);
  return out;
}

Word cyclic_reduce(const Word& w) {
  const Word r = free_reduce(w);
  auto codes = r.codes();
  std::size_t lo = 0;
  std::size_t hi = codes.size();
  while (hi - lo >= 2 && codes[lo] == -codes[hi - 1]) {
    ++lo;
    --hi;
  }
  return r.subword(lo, hi - lo);
}

Word invert(const Word& w) {
  Word out(w.rank());
  auto codes = w.codes();
  for (auto it = codes.rbegin(); it != codes.rend(); ++it) out.push_back_code(static_cast<LetterCode>(-*it));
  return out;
}

Word concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw Error("rank mismatch: " + std::to_string(u.rank()) + " vs " + std::to_string(v.rank()));
  }
  Word out = free_reduce(u);
  for (auto c : v.codes()) {
    if (!out.empty() && out.back_code() == -c) {
      out.pop_back();
    } else {
      out.push_back_code(c);
    }
  }
  return out;
}

Word cyclic_shift(const Word& w, std::size_t k) {
  Word out(w.rank());
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back_code(w.codes()[(i + k) % n]);
  return out;
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  auto a = u.codes();
  auto b = v.codes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  }
  return false;
}

std::uint64_t count_reduced_words(int rank, int max_len) {
  std::uint64_t total = 1;
  std::uint64_t layer = 2ULL * static_cast<std::uint64_t>(rank);
  for (int k = 1; k <= max_len; ++k) {
    total += layer;
    layer *= 2ULL * static_cast<std::uint64_t>(rank) - 1;
  }
  return total;
}

void for_each_reduced_word(int rank, int max_len, const std::function<bool(const Word&)>& visit) {
  if (rank < 1) throw Error("rank must be positive");
  if (max_len < 0) throw Error("max_len must be non-negative");
  const int alphabet = 2 * rank;
  Word w(rank);
  if (!visit(w)) return;
  // Odometer over letter ranks; position i may not cancel position i-1.
  std::vector<int> digits;
  for (int len = 1; len <= max_len; ++len) {
    digits.assign(static_cast<std::size_t>(len), 0);
    // Smallest reduced word of this length.
    for (int i = 1; i < len; ++i) {
      if (letter_from_rank(digits[i]) == -letter_from_rank(digits[i - 1])) ++digits[i];
    }
    while (true) {
      std::vector<LetterCode> codes(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i) codes[i] = letter_from_rank(digits[i]);
      if (!visit(Word(rank, std::move(codes)))) return;
      // Advance to the next reduced word in lexicographic order.
      int pos = len - 1;
      while (pos >= 0) {
        ++digits[pos];
        if (pos > 0 && digits[pos] < alphabet &&
            letter_from_rank(digits[pos]) == -letter_from_rank(digits[pos - 1])) {
          ++digits[pos];
        }
        if (digits[pos] < alphabet) break;
        --pos;
      }
      if (pos < 0) break;
      for (int i = pos + 1; i < len; ++i) {
        digits[i] = 0;
        if (letter_from_rank(digits[i]) == -letter_from_rank(digits[i - 1])) ++digits[i];
      }
    }
  }
}

std::vector<Word> enumerate_words(int rank, int max_len) {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count_reduced_words(rank, max_len), 1u << 24)));
  for_each_reduced_word(rank, max_len, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ULL ^ static_cast<std::size_t>(w.rank());
  for (auto c : w.codes()) {
    h ^= static_cast<std::uint16_t>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace mgw
