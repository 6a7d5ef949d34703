#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symrec/measures.hpp"

namespace symrec {

// Brute-force checks on finite prefixes of the fixed point. The plot of a prefix x of
// size n has a recurrence at (i,j) iff x_i == x_j; the main diagonal is never a line.

enum class LineKind { Inner, Boundary0, BoundaryN, BothBoundary };

const char* to_string(LineKind k) noexcept;  // "inner", "0-boundary", "n-boundary", "both"

struct LineRecord {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t length = 0;
  LineKind kind = LineKind::Inner;

  friend auto operator<=>(const LineRecord&, const LineRecord&) = default;
};

// Visits every maximal line of the n x n plot of x, first (i, i+d) then its mirror
// (i+d, i), offsets d = 1..n-1 in order.
template <class Visit>
void for_each_line(std::string_view x, std::size_t n, Visit&& visit) {
  for (std::size_t d = 1; d < n; ++d) {
    std::size_t i = 0;
    while (i + d < n) {
      if (x[i] != x[i + d]) {
        ++i;
        continue;
      }
      std::size_t e = i;
      while (e + d < n && x[e] == x[e + d]) ++e;
      const bool zero = i == 0;
      const bool end = e + d == n;
      const LineKind kind = zero && end ? LineKind::BothBoundary
                            : zero      ? LineKind::Boundary0
                            : end       ? LineKind::BoundaryN
                                        : LineKind::Inner;
      visit(LineRecord{i, i + d, e - i, kind});
      visit(LineRecord{i + d, i, e - i, kind});
      i = e;
    }
  }
}

// Throws PreconditionError when n exceeds the prefix.
std::vector<LineRecord> extract_lines(std::string_view prefix, std::size_t n);

// counts[l] for l in [0, max_length]: inner lines of the infinite plot that start in
// [0,n)^2 and have length l, both orientations. Reads x_[0, n + max_length + 1) and
// scans the O(n^2) plot directly; `jobs` worker threads split the diagonals.
std::vector<std::uint64_t> direct_inner_counts(std::string_view prefix, std::size_t n,
                                               std::size_t max_length, unsigned jobs = 1);

// Number of i in [1,n) with x_[i-1, i-1+|u|) == u, for every window u of size l + 2.
std::map<Word, std::uint64_t> window_counts(std::string_view prefix, std::size_t n,
                                            std::size_t length);

// Sum over the patterns of occ(awb) * occ(flip(a) w flip(b)), starts counted in [1,n).
std::uint64_t product_form_count(std::string_view prefix, std::size_t n,
                                 const std::vector<InnerPattern>& patterns);

struct EmpiricalDensity {
  std::size_t length = 0;
  std::size_t n = 0;
  std::uint64_t count = 0;  // |K_l intersected with [0,n)^2|
  Rational ratio;           // count / n^2
};

EmpiricalDensity empirical_density(std::string_view prefix, std::size_t n,
                                   const std::vector<InnerPattern>& patterns);

// Same count without a pattern list: every window awb whose mirror also occurs in the
// prefix contributes. Works for any substitution.
EmpiricalDensity empirical_density_scan(std::string_view prefix, std::size_t n, std::size_t length);

struct BoundCheck {
  std::string name;
  double observed = 0;
  double bound = 0;
  bool strict = false;  // observed < bound rather than <=

  bool pass() const noexcept { return strict ? observed < bound : observed <= bound + 1e-9; }
  double margin() const noexcept { return bound - observed; }
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t recog = 0;
  std::size_t q = 0;
  std::vector<std::size_t> inner_lengths;      // distinct, sorted
  std::vector<std::size_t> boundary0_lengths;  // distinct, sorted
  std::map<std::size_t, std::uint64_t> b;      // b_l(n) for every l that occurs
  std::vector<BoundCheck> checks;

  bool all_pass() const;
};

// Smallest prefix that bound_checks accepts for plot size n.
std::size_t bound_prefix_length(std::size_t n, std::size_t recog);

// Finite-plot bounds on line lengths, measured with infinite-plot lengths of the lines
// that start in [0,n)^2.
BoundReport bound_checks(std::string_view prefix, std::size_t n, std::size_t recog, std::size_t q,
                         unsigned jobs = 1);

struct LineScreen {
  CaseLabel label;
  bool periodic = false;
  std::string verdict;
  std::size_t prefix_length = 0;  // 0 when no scan was needed
  std::uint64_t one_lines = 0;    // 1-line starts found in the prefix
  bool confirmed = true;
};

// Periodic cases are decided from the label alone; the others are confirmed by finding
// at least two 1-lines in a q^5 prefix.
LineScreen infinite_line_screen(const Substitution& s);

}  // namespace symrec
