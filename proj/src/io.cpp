#include "symrec/io.hpp"

#include <cstdint>
#include <vector>

namespace symrec {

namespace {

void require_raster(std::string_view x, std::size_t n) {
  if (n > kMaxRasterSize)
    throw PreconditionError("raster plots are limited to n <= " + std::to_string(kMaxRasterSize) +
                            "; use the ascii format with a stride");
  if (x.size() < n) throw PreconditionError("prefix shorter than the plot size");
}

}  // namespace

void write_prefix(std::ostream& out, std::string_view prefix) { out << prefix << '\n'; }

void write_word_list(std::ostream& out, const AllowedWordSet& words) {
  for (const auto& [w, residues] : words.residues) {
    out << w << '\t';
    for (std::size_t k = 0; k < residues.size(); ++k) out << (k ? "," : "") << residues[k];
    out << '\n';
  }
}

void write_measure_tsv(std::ostream& out, const CylinderMeasureTable& table, int decimals) {
  out << "word\tnum\tden" << (decimals >= 0 ? "\tdecimal" : "") << '\n';
  for (const auto& [w, m] : table.measure) {
    out << w << '\t' << m.get_num().get_str() << '\t' << m.get_den().get_str();
    if (decimals >= 0) out << '\t' << to_decimal(m, decimals);
    out << '\n';
  }
}

void write_density_tsv(std::ostream& out, const std::vector<DensityResult>& rows, int decimals) {
  out << "l\tnum\tden\tprovenance" << (decimals >= 0 ? "\tdecimal" : "") << '\n';
  for (const auto& r : rows) {
    out << r.length << '\t' << r.value.get_num().get_str() << '\t' << r.value.get_den().get_str()
        << '\t' << r.provenance_label();
    if (decimals >= 0) out << '\t' << to_decimal(r.value, decimals);
    out << '\n';
  }
}

void write_line_tsv(std::ostream& out, const std::vector<LineRecord>& lines) {
  out << "i\tj\tl\tkind\n";
  for (const auto& r : lines) out << r.i << '\t' << r.j << '\t' << r.length << '\t' << to_string(r.kind) << '\n';
}

void write_bound_report(std::ostream& out, const BoundReport& report) {
  out << "n=" << report.n << " R=" << report.recog << " q=" << report.q << '\n';
  out << "inner lengths:";
  for (auto l : report.inner_lengths) out << ' ' << l;
  out << "\n0-boundary lengths:";
  for (auto l : report.boundary0_lengths) out << ' ' << l;
  out << '\n';
  for (const auto& c : report.checks)
    out << (c.pass() ? "PASS" : "FAIL") << '\t' << c.name << "\tobserved=" << c.observed
        << "\tbound=" << c.bound << "\tmargin=" << c.margin() << '\n';
}

void write_pgm(std::ostream& out, std::string_view x, std::size_t n, bool overlay) {
  require_raster(x, n);
  std::vector<std::uint8_t> pixels(n * n, 255);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x[i] == x[j]) pixels[i * n + j] = 0;
  if (overlay) {
    for_each_line(x, n, [&](const LineRecord& r) {
      if (r.kind == LineKind::Inner) return;
      for (std::size_t h = 0; h < r.length; ++h) pixels[(r.i + h) * n + (r.j + h)] = 128;
    });
  }
  out << "P5\n" << n << ' ' << n << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
}

void write_ascii_plot(std::ostream& out, std::string_view x, std::size_t n, std::size_t stride) {
  if (stride == 0) throw PreconditionError("stride must be positive");
  if (x.size() < n) throw PreconditionError("prefix shorter than the plot size");
  for (std::size_t i = 0; i < n; i += stride) {
    for (std::size_t j = 0; j < n; j += stride) out << (x[i] == x[j] ? '#' : '.');
    out << '\n';
  }
}

}  // namespace symrec
