#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "symrec/patterns.hpp"

namespace symrec {

// Exact rational in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
std::string to_string(const Rational& r);               // "n/d", or "n" when d == 1
std::string to_decimal(const Rational& r, int digits);  // rounded convenience rendering

// Square integer matrix indexed by the allowed 2-words.
struct TwoWordMatrix {
  std::vector<Word> index;                     // sorted allowed 2-words
  std::vector<std::vector<std::int64_t>> m;    // m[row][col]

  std::size_t size() const noexcept { return index.size(); }
  std::size_t position(const Word& ab) const;  // throws PreconditionError if absent
};

// m[ab][cd] = occurrences of ab in the first q+1 letters of zeta(cd).
TwoWordMatrix m2_matrix(const Language& lang);

// Normalized eigenvector of M2 for the eigenvalue q, by exact nullspace computation of
// M2 - qI. Throws InvariantError if that nullspace is not one-dimensional or the vector
// is not strictly positive.
std::vector<Rational> pf_vector(const TwoWordMatrix& m2, std::size_t q);

// Exact nullspace basis of an integer matrix via fraction-free (Bareiss) elimination.
std::vector<std::vector<Rational>> integer_nullspace(std::vector<std::vector<mpz_class>> a);

struct CylinderMeasureTable {
  std::size_t length = 0;
  std::map<Word, Rational> measure;

  const Rational& at(const Word& w) const;  // throws PreconditionError if w is not listed
  Rational total() const;
};

// Cylinder measures of the unique shift-invariant measure, for every allowed word of one
// length. Tables for lengths 1 and 2 come straight from the eigenvector.
CylinderMeasureTable cylinder_measures(const Language& lang, const std::vector<Rational>& nu,
                                       std::size_t length);

// Table for length-1 words obtained by summing right extensions: mu[w] = mu[w0] + mu[w1].
CylinderMeasureTable marginalize(const CylinderMeasureTable& longer);

// All cylinder tables up to a fixed length, computed once.
class Measures {
 public:
  Measures(const Language& lang, std::size_t max_length);

  std::size_t max_length() const noexcept { return tables_.size() - 1; }
  const TwoWordMatrix& m2() const noexcept { return m2_; }
  const std::vector<Rational>& nu() const noexcept { return nu_; }
  const CylinderMeasureTable& table(std::size_t length) const;
  // mu([w]); zero for words that are not allowed.
  Rational measure(const Word& w) const;

 private:
  TwoWordMatrix m2_;
  std::vector<Rational> nu_;
  std::vector<CylinderMeasureTable> tables_;
};

// mu([awb]) * mu([flip(a) w flip(b)]). Throws PreconditionError if either word is not
// allowed (the triple is then not a pattern).
Rational pattern_density(const Measures& measures, const InnerPattern& p);

}  // namespace symrec
