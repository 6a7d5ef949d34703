#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "symrec/substitution.hpp"

namespace testing {

using symrec::Substitution;
using symrec::Word;

inline const Substitution kThueMorse{"01", "10"};
inline const Substitution kPeriodDoubling{"01", "00"};
inline const Substitution kFive{"01110", "01010"};
inline const Substitution kFour{"0101", "0100"};
inline const Substitution kNonPrimitive{"010", "111"};

// Residues mod q of every window of the given length that starts in [0, n - length].
inline std::map<Word, std::set<std::size_t>> brute_residues(const Word& x, std::size_t length,
                                                            std::size_t q) {
  std::map<Word, std::set<std::size_t>> out;
  for (std::size_t i = 0; i + length <= x.size(); ++i) out[x.substr(i, length)].insert(i % q);
  return out;
}

inline Word random_word(std::mt19937& rng, std::size_t q) {
  Word w(q, '0');
  for (auto& c : w) c = (rng() & 1u) ? '1' : '0';
  return w;
}

// Random substitutions with 2 <= q <= max_q, any label.
inline std::vector<Substitution> random_corpus(unsigned seed, std::size_t count, std::size_t max_q) {
  std::mt19937 rng(seed);
  std::vector<Substitution> out;
  while (out.size() < count) {
    const std::size_t q = 2 + rng() % (max_q - 1);
    out.emplace_back(random_word(rng, q), random_word(rng, q));
  }
  return out;
}

// Normalized primitive aperiodic substitutions from the random corpus.
inline std::vector<Substitution> random_primitive(unsigned seed, std::size_t count, std::size_t max_q) {
  std::vector<Substitution> out;
  unsigned s = seed;
  while (out.size() < count) {
    for (const auto& raw : random_corpus(s++, 64, max_q)) {
      auto t = symrec::normalize(raw).substitution;
      if (symrec::classify(t).kind == symrec::CaseKind::PrimitiveAperiodic && t.q() <= max_q)
        out.push_back(t);
      if (out.size() == count) break;
    }
  }
  return out;
}

}  // namespace testing
