#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symrec {

// Binary words are stored as ASCII strings over {'0','1'}.
using Word = std::string;
using Letter = char;

constexpr Letter flip(Letter a) noexcept { return a == '0' ? '1' : '0'; }

constexpr bool is_binary_letter(char c) noexcept { return c == '0' || c == '1'; }

inline bool is_binary_word(std::string_view w) noexcept {
  for (char c : w)
    if (!is_binary_letter(c)) return false;
  return true;
}

inline std::size_t count_letter(std::string_view w, Letter a) noexcept {
  std::size_t n = 0;
  for (char c : w) n += (c == a);
  return n;
}

inline Word flipped(std::string_view w) {
  Word out(w);
  for (auto& c : out) c = flip(c);
  return out;
}

// Base error for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was not met by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A mathematical guarantee failed to hold; always an implementation bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace symrec
