#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symrec/measures.hpp"

namespace symrec {

// Everything the density formulas need for one normalized primitive aperiodic
// substitution, computed once: alpha, beta, R, the language up to R + 2 and the
// cylinder measures up to R + 1.
class Analysis {
 public:
  explicit Analysis(const Substitution& normalized);

  const Substitution& substitution() const noexcept { return lang_.substitution(); }
  std::size_t q() const noexcept { return substitution().q(); }
  const AlphaBeta& alpha_beta() const noexcept { return ab_; }
  std::size_t recog() const noexcept { return recog_.value; }
  const RecognizabilityConstant& recognizability() const noexcept { return recog_; }
  const Language& language() const noexcept { return lang_; }
  const Measures& measures() const noexcept { return measures_; }
  SeparatorType separator() const { return separator_type(substitution()); }

  // Inner patterns of a length below R (mirrors included).
  std::vector<InnerPattern> inner_patterns(std::size_t length) const;

 private:
  AlphaBeta ab_;
  RecognizabilityConstant recog_;
  Language lang_;
  Measures measures_;
};

enum class Provenance { Direct, Scaled, EmptyResidue, EmptyRoot };

struct PatternTerm {
  InnerPattern pattern;
  Rational density;
};

struct DensityResult {
  std::size_t length = 0;
  Rational value;
  // Patterns of length root_length and their densities; empty when K is empty.
  std::vector<PatternTerm> decomposition;
  Provenance provenance = Provenance::Direct;
  std::size_t order = 0;        // k
  std::size_t root_length = 0;  // l0 (equals length when order == 0)

  std::string provenance_label() const;  // "direct", "scaled(k=1,l0=2)", ...
};

// Exact d(K_l) for l >= 1.
DensityResult density_K(const Analysis& an, std::size_t length);

// One infinite chain of lengths l(k) = q^k l0 + (alpha+beta)(q^k - 1)/(q - 1) with
// densities base / q^(2k).
struct DensityFamily {
  std::size_t root_length = 0;
  Rational base;
  std::size_t q = 2;
  std::size_t shift = 0;  // alpha + beta

  // Throws PreconditionError when the length overflows size_t.
  std::size_t length_at(unsigned k) const;
  Rational density_at(unsigned k) const;
  std::string length_formula() const;   // e.g. "l(k) = 2*5^k - 1"
  std::string density_formula() const;  // e.g. "d(k) = 7/(50*25^k)"
};

struct FamilyReport {
  std::vector<DensityFamily> families;  // roots with q*l0 + alpha + beta >= R
  std::vector<DensityResult> isolated;  // nonempty roots that start no chain
};

FamilyReport density_families(const Analysis& an);

struct LengthSupport {
  std::size_t limit = 0;              // L
  std::vector<std::size_t> lengths;   // sorted, all <= L
  Rational fraction;                  // |lengths| / L
};

// Lengths l <= L with K_l nonempty.
LengthSupport length_support(const Analysis& an, std::size_t limit);

// Lengths l <= L that carry a 0-boundary pattern, via the chain l -> (l - alpha)/q.
LengthSupport boundary0_length_support(const Analysis& an, std::size_t limit);

// Non-primitive case: every K_l is infinite yet has density zero.
struct NonPrimitiveVerdict {
  std::size_t length = 0;
  InnerPattern witness;                  // <0, 1^l, 1>
  Rational density;                      // always 0
  std::string justification;
  std::size_t prefix_length = 0;         // prefix scanned for the detected patterns
  bool witness_in_prefix = false;
  std::vector<InnerPattern> detected;    // all patterns of length l seen in the prefix
};

// Requires a normalized substitution classified NonPrimitive.
NonPrimitiveVerdict nonprimitive_verdict(const Substitution& s, std::size_t length);

}  // namespace symrec
