#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symrec/language.hpp"

namespace symrec {

// Inner line-pattern <a, w, b>: both a w b and flip(a) w flip(b) occur in the fixed point.
struct InnerPattern {
  Letter a = '0';
  Word w;
  Letter b = '0';

  std::size_t length() const noexcept { return w.size(); }
  Word word() const { return a + w + b; }
  Word mirror_word() const { return flip(a) + w + flip(b); }
  InnerPattern mirror() const { return {flip(a), w, flip(b)}; }

  friend auto operator<=>(const InnerPattern&, const InnerPattern&) = default;
};

// 0-boundary line-pattern w^b: w b occurs in the fixed point, which itself starts with
// w flip(b).
struct BoundaryPattern {
  Word w;
  Letter b = '0';

  std::size_t length() const noexcept { return w.size(); }
  friend auto operator<=>(const BoundaryPattern&, const BoundaryPattern&) = default;
};

enum class Sign { Plus, Minus };

struct SeparatorType {
  Sign left;      // a = c (Plus) or a = flip(c) (Minus)
  Sign right;     // b = d (Plus) or b = flip(d) (Minus)
  Sign boundary;  // always equal to `right`

  std::string to_string() const;  // "(-+)" style, boundary sign after a slash
  friend bool operator==(const SeparatorType&, const SeparatorType&) = default;
};

// All inner patterns of length `length`, mirrors included, in lexicographic order.
// Requires lang to cover length + 2.
std::vector<InnerPattern> enumerate_inner(const Language& lang, std::size_t length);

// All 0-boundary patterns of length `length` (at most one). Requires lang to cover
// length + 1.
std::vector<BoundaryPattern> enumerate_boundary0(const Language& lang, std::size_t length);

// Whether <a,w,b> is a pattern according to lang (which must cover |w| + 2).
bool is_inner_pattern(const Language& lang, const InnerPattern& p);

SeparatorType separator_type(const Substitution& s);

// The pattern induced by q through one application of the substitution; its length is
// q*|Q| + alpha + beta.
InnerPattern induce(const Substitution& s, const InnerPattern& q);
BoundaryPattern induce_boundary0(const Substitution& s, const BoundaryPattern& q);

enum class DesubstitutionStatus {
  Ok,
  TooShort,       // |P| < R: no unique predecessor
  EmptyResidue,   // |P| not congruent to alpha+beta mod q: K_|P| is empty
};

template <class Pattern>
struct Desubstitution {
  DesubstitutionStatus status;
  std::optional<Pattern> predecessor;
};

// Unique Q with induce(Q) == P. Throws InvariantError if block decoding fails on an
// input that passed the length checks.
Desubstitution<InnerPattern> desubstitute(const Substitution& s, std::size_t recog,
                                          const InnerPattern& p);
Desubstitution<BoundaryPattern> desubstitute_boundary0(const Substitution& s, std::size_t recog,
                                                       const BoundaryPattern& p);

// The chain root = P_0 -> P_1 -> ... -> P_k = P of induced patterns; order = k.
template <class Pattern>
struct PatternChain {
  Pattern root;
  std::vector<Pattern> links;  // P_1 .. P_k
  std::size_t order = 0;
};

// Desubstitutes while the length is at least R. Throws PreconditionError if a step hits
// a residue mismatch (P is then not a valid pattern).
PatternChain<InnerPattern> chain(const Substitution& s, std::size_t recog, const InnerPattern& p);
PatternChain<BoundaryPattern> chain_boundary0(const Substitution& s, std::size_t recog,
                                              const BoundaryPattern& p);

// Serialization: "a|w|b" and "w^b".
std::string format_pattern(const InnerPattern& p);
std::string format_pattern(const BoundaryPattern& p);
InnerPattern parse_inner_pattern(const std::string& text);
BoundaryPattern parse_boundary_pattern(const std::string& text);

}  // namespace symrec
