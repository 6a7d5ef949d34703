#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "symrec/substitution.hpp"

namespace symrec {

// Sorted residue set P_w: the starting indices of w in the fixed point, taken mod q.
using ResidueSet = std::vector<std::size_t>;

// All allowed words of one length together with their residue sets.
struct AllowedWordSet {
  std::size_t length = 0;
  std::map<Word, ResidueSet> residues;  // ordered, so iteration is lexicographic

  bool contains(const Word& w) const { return residues.count(w) != 0; }
  std::size_t size() const noexcept { return residues.size(); }
  std::vector<Word> words() const;
};

// The language of a normalized primitive aperiodic substitution, tabulated for lengths
// 1..max_length. Residues come from the images of shorter allowed words, so they are
// exact and independent of any finite prefix. Immutable after construction.
class Language {
 public:
  Language(const Substitution& s, std::size_t max_length);

  const Substitution& substitution() const noexcept { return subst_; }
  std::size_t max_length() const noexcept { return tables_.size() - 1; }

  // Throws PreconditionError when length is 0 or above max_length().
  const AllowedWordSet& words(std::size_t length) const;

  bool is_allowed(const Word& w) const;
  // Throws PreconditionError when w is not allowed.
  const ResidueSet& residues(const Word& w) const;

 private:
  Substitution subst_;
  std::vector<AllowedWordSet> tables_;  // index = length; slot 0 unused
};

// Allowed 2-words: 2-subwords of both images, closed once under the boundary words
// zeta(a)_{q-1} zeta(b)_0.
std::vector<Word> allowed_two_words(const Substitution& s);

// Whether one more closure pass over `two_words` adds nothing.
bool two_word_closure_is_stable(const Substitution& s, const std::vector<Word>& two_words);

AllowedWordSet allowed_words(const Substitution& s, std::size_t length);

// P_w is a singleton. Throws PreconditionError when w is not allowed.
bool is_recognizable(const Language& lang, const Word& w);
bool is_recognizable(const Substitution& s, const Word& w);

struct RecognizabilityConstant {
  std::size_t value = 0;  // R
  // all_recognizable[l] for l in [1, R]: every allowed l-word is recognizable.
  std::vector<bool> all_recognizable;
};

// Smallest R > alpha + beta such that every allowed word of length R is recognizable.
// Throws InvariantError if the search reaches q^3.
RecognizabilityConstant recognizability_constant(const Substitution& s);

enum class CuttingClass { None, WeaklyUnique, StronglyUnique, TwoPlus };

const char* to_string(CuttingClass c) noexcept;

// A 1-cutting [s, v_0, ..., v_{k-1}, t].
struct Cutting {
  Word head;                // s: proper suffix of a letter image
  std::vector<Word> blocks; // v_h: full letter images
  Word tail;                // t: proper prefix of a letter image

  Word concatenated() const;
  friend bool operator==(const Cutting&, const Cutting&) = default;
};

struct CuttingReport {
  Word word;
  CuttingClass classification = CuttingClass::None;
  std::optional<Cutting> cutting;         // present for WeaklyUnique / StronglyUnique / TwoPlus
  std::optional<Cutting> second_cutting;  // present for TwoPlus
};

// Cutting at an occurrence whose start index is congruent to `residue` mod q, split at
// the first cutting bar q - residue positions in. Requires residue + |w| >= q.
Cutting cutting_at_residue(const Substitution& s, const Word& w, std::size_t residue);

CuttingReport classify_cuttings(const Language& lang, const Word& w);
CuttingReport classify_cuttings(const Substitution& s, const Word& w);

}  // namespace symrec
