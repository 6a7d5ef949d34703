#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "symrec/word.hpp"

namespace symrec {

// A q-uniform substitution on {0,1}: both letter images have the same length q >= 2.
class Substitution {
 public:
  // Throws PreconditionError unless the images are binary, of equal length, with q >= 2.
  Substitution(Word image0, Word image1);

  const Word& image(Letter a) const noexcept { return a == '0' ? image0_ : image1_; }
  const Word& image0() const noexcept { return image0_; }
  const Word& image1() const noexcept { return image1_; }
  std::size_t q() const noexcept { return image0_.size(); }

  Word apply(std::string_view w) const;
  // Composition with itself k times; power(1) is *this. k must be >= 1.
  Substitution power(unsigned k) const;

  std::string to_string() const;  // "0->W0;1->W1"

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Word image0_;
  Word image1_;
};

enum class ParseErrorKind { Syntax, EmptyImage, NonBinaryLetter, LengthMismatch, TooShort };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

// Parses "0->W0;1->W1"; whitespace anywhere is ignored.
Substitution parse_substitution(std::string_view text);

struct NormalizationFlags {
  bool letters_swapped = false;
  bool squared = false;
  friend bool operator==(const NormalizationFlags&, const NormalizationFlags&) = default;
};

struct Normalized {
  Substitution substitution;
  NormalizationFlags flags;
};

// Brings the substitution to a form whose image of 0 starts with 0, by relabeling
// the letters or, when neither image starts with its own letter, by squaring.
Normalized normalize(const Substitution& s);

enum class CaseKind {
  Equal,
  OddAlternating,
  AllZeros,
  ZeroThenOnes,
  NonPrimitive,
  PrimitiveAperiodic,
};

const char* to_string(CaseKind kind) noexcept;

struct CaseLabel {
  CaseKind kind;
  NormalizationFlags flags;  // copied from normalize() by classify_any

  // True for the four labels whose fixed point is (eventually) shift-periodic.
  bool eventually_periodic() const noexcept;
  // Human-readable verdict about lines in the infinite plot.
  std::string verdict() const;
};

// Requires image0 to start with 0 (normalized input).
CaseLabel classify(const Substitution& s);

// Normalizes, then classifies; flags record the normalization.
CaseLabel classify_any(const Substitution& s);

struct AlphaBeta {
  std::size_t alpha;  // longest common prefix of the images
  std::size_t beta;   // longest common suffix of the images
  friend bool operator==(const AlphaBeta&, const AlphaBeta&) = default;
};

// Throws PreconditionError when the two images are equal.
AlphaBeta alpha_beta(const Substitution& s);

bool is_primitive(const Substitution& s);

inline constexpr std::size_t kDefaultPrefixCap = std::size_t{1} << 26;

// x_[0,n) for the fixed point x starting with 0. Requires a normalized substitution.
// Throws PreconditionError when n exceeds cap.
Word fixed_point_prefix(const Substitution& s, std::size_t n,
                        std::size_t cap = kDefaultPrefixCap);

}  // namespace symrec
