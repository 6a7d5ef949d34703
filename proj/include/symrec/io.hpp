#pragma once

#include <cstddef>
#include <ostream>
#include <string_view>
#include <vector>

#include "symrec/densities.hpp"
#include "symrec/oracle.hpp"

namespace symrec {

// Plain-text and TSV writers. Every line ends with '\n'.

void write_prefix(std::ostream& out, std::string_view prefix);

// "word<TAB>r1,r2,..." one word per line, lexicographic.
void write_word_list(std::ostream& out, const AllowedWordSet& words);

// "word<TAB>num<TAB>den" with an optional rounded decimal column.
void write_measure_tsv(std::ostream& out, const CylinderMeasureTable& table, int decimals = -1);

// "l<TAB>num<TAB>den<TAB>provenance" with an optional rounded decimal column.
void write_density_tsv(std::ostream& out, const std::vector<DensityResult>& rows, int decimals = -1);

void write_line_tsv(std::ostream& out, const std::vector<LineRecord>& lines);

void write_bound_report(std::ostream& out, const BoundReport& report);

// Recurrence plot of x_[0,n): binary P5 with recurrences black. With overlay, cells on
// inner lines are black and cells on boundary lines gray. Throws PreconditionError when
// n exceeds kMaxRasterSize.
inline constexpr std::size_t kMaxRasterSize = 4096;
void write_pgm(std::ostream& out, std::string_view x, std::size_t n, bool overlay);

// '#' for a recurrence, '.' otherwise, sampling every stride-th row and column.
void write_ascii_plot(std::ostream& out, std::string_view x, std::size_t n, std::size_t stride);

}  // namespace symrec
