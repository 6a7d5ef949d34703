#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "symrec/io.hpp"

namespace symrec::cli {

namespace {

struct Config {
  std::string subst;
  std::string subst_file;
  std::size_t lmax = 0;  // 0: command default
  std::size_t n = 0;     // 0: command default
  std::string out_dir;
  std::string format;
  unsigned jobs = 1;
  int decimal = -1;
  std::string prefix_file;
  bool overlay = false;
  std::size_t stride = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to a named file inside --out, or to the default stream.
class Output {
 public:
  Output(const Config& cfg, const std::string& name, std::ostream& fallback) : stream_(&fallback) {
    if (cfg.out_dir.empty()) return;
    std::filesystem::create_directories(cfg.out_dir);
    file_ = std::make_unique<std::ofstream>(std::filesystem::path(cfg.out_dir) / name,
                                            std::ios::binary | std::ios::trunc);
    if (!*file_) throw UsageError("cannot write " + (std::filesystem::path(cfg.out_dir) / name).string());
    stream_ = file_.get();
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Input {
  Substitution raw;
  Normalized norm;
  CaseLabel label;

  const Substitution& s() const { return norm.substitution; }
};

Input load(const Config& cfg) {
  if (cfg.subst.empty() == cfg.subst_file.empty())
    throw UsageError("give exactly one of --subst or --subst-file");
  Substitution raw = parse_substitution(cfg.subst.empty() ? read_file(cfg.subst_file) : cfg.subst);
  Normalized norm = normalize(raw);
  CaseLabel label = classify(norm.substitution);
  label.flags = norm.flags;
  return {std::move(raw), std::move(norm), label};
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw UsageError("format '" + cfg.format + "' is not available here; use one of " + list);
}

std::string flags_text(const NormalizationFlags& f) {
  if (f.letters_swapped) return "letters swapped";
  if (f.squared) return "squared";
  return "none";
}

void header(std::ostream& os, const Input& in) {
  os << "substitution: " << in.raw.to_string() << '\n'
     << "normalized: " << in.s().to_string() << " (normalization: " << flags_text(in.norm.flags) << ")\n"
     << "q: " << in.s().q() << '\n'
     << "case: " << to_string(in.label.kind) << '\n'
     << "verdict: " << in.label.verdict() << '\n';
}

Analysis primitive_analysis(const Input& in) {
  if (in.label.kind != CaseKind::PrimitiveAperiodic)
    throw UsageError("this command needs a primitive aperiodic substitution; case is " +
                     std::string(to_string(in.label.kind)));
  return Analysis(in.s());
}

std::size_t default_verify_n(std::size_t q) {
  if (q == 2) return std::size_t{1} << 14;
  std::size_t n = q;
  while (n * q <= (std::size_t{1} << 17)) n *= q;
  return n;
}

Word load_prefix(const Config& cfg, const Substitution& s, std::size_t needed) {
  if (cfg.prefix_file.empty()) return fixed_point_prefix(s, needed);
  Word x;
  for (char c : read_file(cfg.prefix_file))
    if (!std::isspace(static_cast<unsigned char>(c))) x += c;
  if (!is_binary_word(x)) throw UsageError("prefix file holds letters other than 0 and 1");
  if (x.size() < needed)
    throw UsageError("prefix file has " + std::to_string(x.size()) + " symbols; " +
                     std::to_string(needed) + " needed");
  return x;
}

// ---- analyze ---------------------------------------------------------------

int cmd_analyze(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"text"});
  Input in = load(cfg);
  Output o(cfg, "analyze.txt", out);
  header(*o, in);
  if (in.label.kind == CaseKind::NonPrimitive) {
    *o << "non-primitive: every K_l is infinite (witness <0,1^l,1>) and has density 0\n";
    for (std::size_t l = 1; l <= 3; ++l) {
      auto v = nonprimitive_verdict(in.s(), l);
      *o << "  l=" << l << ": witness " << format_pattern(v.witness) << ", " << v.detected.size()
         << " patterns seen in a prefix of " << v.prefix_length << '\n';
    }
    return kOk;
  }
  if (in.label.kind != CaseKind::PrimitiveAperiodic) return kOk;

  Analysis an(in.s());
  *o << "alpha: " << an.alpha_beta().alpha << '\n'
     << "beta: " << an.alpha_beta().beta << '\n'
     << "R: " << an.recog() << '\n'
     << "separator type: " << an.separator().to_string() << '\n'
     << "inner patterns below R:\n";
  std::size_t total = 0;
  for (std::size_t l = 1; l < an.recog(); ++l) {
    DensityResult d = density_K(an, l);
    total += d.decomposition.size();
    *o << "  l=" << l << ": " << d.decomposition.size() << " patterns, d(K_l) = " << to_string(d.value) << '\n';
    for (const auto& t : d.decomposition)
      *o << "    " << format_pattern(t.pattern) << '\t' << to_string(t.density) << '\n';
  }
  *o << "  total: " << total << " patterns\n"
     << "0-boundary patterns below R:\n";
  for (std::size_t l = 1; l < an.recog(); ++l)
    for (const auto& p : enumerate_boundary0(an.language(), l)) *o << "  " << format_pattern(p) << '\n';
  return kOk;
}

// ---- densities ---------------------------------------------------------------

int cmd_densities(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"tsv", "text"});
  Input in = load(cfg);
  const std::size_t lmax = cfg.lmax ? cfg.lmax : 16;
  Output o(cfg, cfg.format == "tsv" ? "densities.tsv" : "densities.txt", out);

  if (in.label.kind == CaseKind::NonPrimitive) {
    if (cfg.format == "tsv") *o << "l\tnum\tden\tprovenance\n";
    for (std::size_t l = 1; l <= lmax; ++l) {
      auto v = nonprimitive_verdict(in.s(), l);
      if (cfg.format == "tsv")
        *o << l << "\t0\t1\tnon-primitive(" << format_pattern(v.witness) << ")\n";
      else
        *o << "d(K_" << l << ") = 0\tnon-primitive, witness " << format_pattern(v.witness) << '\n';
    }
    *o << "# " << nonprimitive_verdict(in.s(), 1).justification << '\n';
    return kOk;
  }
  if (in.label.kind != CaseKind::PrimitiveAperiodic) {
    *o << "# " << in.label.verdict() << '\n';
    return kOk;
  }

  Analysis an(in.s());
  std::vector<DensityResult> rows;
  for (std::size_t l = 1; l <= lmax; ++l) rows.push_back(density_K(an, l));
  if (cfg.format == "tsv") {
    write_density_tsv(*o, rows, cfg.decimal);
  } else {
    for (const auto& r : rows) {
      *o << "d(K_" << r.length << ") = " << to_string(r.value);
      if (cfg.decimal >= 0) *o << " ~ " << to_decimal(r.value, cfg.decimal);
      *o << "\t" << r.provenance_label() << '\n';
    }
  }

  Output f(cfg, "families.txt", out);
  const FamilyReport fam = density_families(an);
  for (const auto& d : fam.families)
    *f << "# family l0=" << d.root_length << ": " << d.length_formula() << ", " << d.density_formula() << '\n';
  for (const auto& d : fam.isolated)
    *f << "# isolated l0=" << d.length << ": d = " << to_string(d.value) << '\n';
  return kOk;
}

// ---- verify ------------------------------------------------------------------

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
  bool bound = false;
  bool skipped = false;
};

bool prefix_is_fixed(const Substitution& s, std::string_view x) {
  const std::size_t m = x.size();
  const std::size_t src = (m + s.q() - 1) / s.q();
  return s.apply(x.substr(0, src)).compare(0, m, x) == 0;
}

std::string ratio_text(double v) {
  std::ostringstream ss;
  ss.precision(4);
  ss << v;
  return ss.str();
}

std::vector<Check> verify_primitive(const Config& cfg, const Input& in) {
  Analysis an(in.s());
  const std::size_t R = an.recog();
  const std::size_t q = an.q();
  const std::size_t lmax = cfg.lmax ? cfg.lmax : R + 2;
  const std::size_t n = cfg.n ? cfg.n : default_verify_n(q);
  const std::size_t n_direct = std::min<std::size_t>(n, 4096);
  const std::size_t n_bound = std::min<std::size_t>(n, 4096);
  const std::size_t needed =
      std::max({n + lmax + 1, n_direct + lmax + 1, bound_prefix_length(n_bound, R)});
  const Word x = load_prefix(cfg, in.s(), needed);
  const Language lang(in.s(), lmax + 2);
  std::vector<Check> out;

  out.push_back({"prefix is a fixed-point prefix", prefix_is_fixed(in.s(), x), "length " + std::to_string(x.size())});

  {
    Check c{"reconstruction: direct scan = pattern product form", true, "n=" + std::to_string(n_direct)};
    const auto direct = direct_inner_counts(x, n_direct, lmax, cfg.jobs);
    for (std::size_t l = 1; l <= lmax; ++l) {
      const auto pf = product_form_count(x, n_direct, enumerate_inner(lang, l));
      if (pf != direct[l]) {
        c.pass = false;
        c.detail += "; l=" + std::to_string(l) + " direct " + std::to_string(direct[l]) + " vs " + std::to_string(pf);
      }
    }
    out.push_back(c);
  }

  {
    Check c{"empirical density within 5%", true, "n=" + std::to_string(n)};
    for (std::size_t l = 1; l <= lmax; ++l) {
      const Rational exact = density_K(an, l).value;
      const auto e = empirical_density(x, n, enumerate_inner(lang, l));
      if (sgn(exact) == 0) {
        if (e.count != 0) {
          c.pass = false;
          c.detail += "; l=" + std::to_string(l) + " expected no lines, saw " + std::to_string(e.count);
        }
        continue;
      }
      const double dev = std::abs(Rational(e.ratio / exact).get_d() - 1.0);
      c.detail += "; l=" + std::to_string(l) + " dev " + ratio_text(dev);
      if (dev > 0.05) c.pass = false;
    }
    out.push_back(c);
  }

  {
    const BoundReport br = bound_checks(x, n_bound, R, q, cfg.jobs);
    for (const auto& b : br.checks)
      out.push_back({b.name, b.pass(),
                     "n=" + std::to_string(n_bound) + " observed " + ratio_text(b.observed) + " bound " +
                         ratio_text(b.bound) + " margin " + ratio_text(b.margin()),
                     true});
  }

  const LineScreen screen = infinite_line_screen(in.raw);
  out.push_back({"1-lines recur", screen.confirmed, std::to_string(screen.one_lines) + " starting points in a prefix of " + std::to_string(screen.prefix_length)});
  return out;
}

std::vector<Check> verify_nonprimitive(const Config& cfg, const Input& in) {
  const std::size_t q = in.s().q();
  std::size_t n = cfg.n;
  if (n == 0) {
    n = 1;
    for (int e = 0; e < 9; ++e) n *= q;
  }
  const std::size_t n_small = n / (q * q);
  const std::size_t lmax = cfg.lmax ? cfg.lmax : 32;
  const Word x = load_prefix(cfg, in.s(), n + 5);
  std::vector<Check> out;
  out.push_back({"prefix is a fixed-point prefix", prefix_is_fixed(in.s(), x), "length " + std::to_string(x.size())});

  Check decay{"empirical density decays", true, "n=" + std::to_string(n_small) + " vs " + std::to_string(n)};
  for (std::size_t l = 1; l <= 3; ++l) {
    const auto a = empirical_density_scan(x, n_small, l).ratio;
    const auto b = empirical_density_scan(x, n, l).ratio;
    decay.detail += "; l=" + std::to_string(l) + " " + ratio_text(a.get_d()) + " > " + ratio_text(b.get_d());
    if (!(a > b)) decay.pass = false;
  }
  out.push_back(decay);

  Check wit{"witness <0,1^l,1> occurs", true, "l <= " + std::to_string(lmax)};
  const std::string_view head(x.data(), n);
  for (std::size_t l = 1; l <= lmax; ++l) {
    const InnerPattern w{'0', Word(l, '1'), '1'};
    if (head.find(w.word()) == std::string_view::npos || head.find(w.mirror_word()) == std::string_view::npos) {
      wit.pass = false;
      wit.detail += "; missing at l=" + std::to_string(l);
    }
  }
  out.push_back(wit);
  out.push_back({"exact densities", true, "not applicable: no unique invariant measure", false, true});
  return out;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"text"});
  Input in = load(cfg);
  Output o(cfg, "verify.txt", out);
  header(*o, in);
  std::vector<Check> checks;
  if (in.label.kind == CaseKind::PrimitiveAperiodic)
    checks = verify_primitive(cfg, in);
  else if (in.label.kind == CaseKind::NonPrimitive)
    checks = verify_nonprimitive(cfg, in);
  else
    checks.push_back({"line screen", infinite_line_screen(in.raw).confirmed, in.label.verdict()});

  int code = kOk;
  for (const auto& c : checks) {
    *o << (c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL") << '\t' << c.name << '\t' << c.detail << '\n';
    if (!c.pass) code = c.bound ? kBoundBreach : std::max<int>(code, kValidation);
  }
  for (const auto& c : checks)
    if (!c.pass && c.bound) code = kBoundBreach;
  return code;
}

// ---- render and extras -------------------------------------------------------

int cmd_render(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"pgm", "ascii"});
  Input in = load(cfg);
  const std::size_t n = cfg.n ? cfg.n : 64;
  if (cfg.format == "pgm" && n > kMaxRasterSize)
    throw UsageError("raster plots are limited to n <= 4096; use --format ascii with --stride");
  const Word x = fixed_point_prefix(in.s(), n);
  if (cfg.format == "pgm") {
    Output o(cfg, "plot.pgm", out);
    write_pgm(*o, x, n, cfg.overlay);
  } else {
    Output o(cfg, "plot.txt", out);
    write_ascii_plot(*o, x, n, cfg.stride);
  }
  return kOk;
}

int cmd_prefix(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"text"});
  Input in = load(cfg);
  Output o(cfg, "prefix.txt", out);
  write_prefix(*o, fixed_point_prefix(in.s(), cfg.n ? cfg.n : 64));
  return kOk;
}

int cmd_words(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"text"});
  Input in = load(cfg);
  primitive_analysis(in);
  const std::size_t lmax = cfg.lmax ? cfg.lmax : 4;
  const Language lang(in.s(), lmax);
  for (std::size_t l = 1; l <= lmax; ++l) {
    Output o(cfg, "words_" + std::to_string(l) + ".txt", out);
    if (cfg.out_dir.empty()) *o << "# length " << l << '\n';
    write_word_list(*o, lang.words(l));
  }
  return kOk;
}

int cmd_patterns(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"text"});
  Input in = load(cfg);
  const Analysis an = primitive_analysis(in);
  const std::size_t lmax = cfg.lmax ? cfg.lmax : an.recog();
  const Language lang(in.s(), lmax + 2);
  Output o(cfg, "patterns.txt", out);
  for (std::size_t l = 1; l <= lmax; ++l) {
    *o << "# length " << l << '\n';
    for (const auto& p : enumerate_inner(lang, l)) *o << format_pattern(p) << '\n';
    for (const auto& p : enumerate_boundary0(lang, l)) *o << format_pattern(p) << '\n';
  }
  return kOk;
}

int cmd_measures(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"tsv", "text"});
  Input in = load(cfg);
  const Analysis an = primitive_analysis(in);
  const std::size_t lmax = cfg.lmax ? cfg.lmax : an.recog() + 1;
  const Language lang(in.s(), lmax);
  const Measures m(lang, lmax);
  for (std::size_t l = 1; l <= lmax; ++l) {
    Output o(cfg, "measures_" + std::to_string(l) + ".tsv", out);
    if (cfg.out_dir.empty()) *o << "# length " << l << '\n';
    if (cfg.format == "tsv") {
      write_measure_tsv(*o, m.table(l), cfg.decimal);
    } else {
      for (const auto& [w, v] : m.table(l).measure) *o << "mu([" << w << "]) = " << to_string(v) << '\n';
    }
  }
  return kOk;
}

int cmd_lines(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"tsv"});
  Input in = load(cfg);
  const std::size_t n = cfg.n ? cfg.n : 64;
  Output o(cfg, "lines.tsv", out);
  write_line_tsv(*o, extract_lines(fixed_point_prefix(in.s(), n), n));
  return kOk;
}

int cmd_bounds(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"text"});
  Input in = load(cfg);
  const Analysis an = primitive_analysis(in);
  const std::size_t n = cfg.n ? cfg.n : 1024;
  const Word x = load_prefix(cfg, in.s(), bound_prefix_length(n, an.recog()));
  const BoundReport br = bound_checks(x, n, an.recog(), an.q(), cfg.jobs);
  Output o(cfg, "bounds.txt", out);
  write_bound_report(*o, br);
  return br.all_pass() ? kOk : kBoundBreach;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line patterns and exact line densities in recurrence plots of uniform binary substitutions", "symrec"};
  app.require_subcommand(1);
  Config cfg;

  struct Sub {
    const char* name;
    const char* help;
    const char* default_format;
    int (*fn)(const Config&, std::ostream&);
  };
  const Sub subs[] = {
      {"analyze", "case label, alpha, beta, R, separator type and the patterns below R", "text", cmd_analyze},
      {"densities", "exact d(K_l) for l <= lmax plus closed-form families", "tsv", cmd_densities},
      {"verify", "brute-force checks against a fixed-point prefix", "text", cmd_verify},
      {"render", "recurrence plot as PGM or ASCII", "pgm", cmd_render},
      {"prefix", "fixed-point prefix as ASCII", "text", cmd_prefix},
      {"words", "allowed words with residues mod q", "text", cmd_words},
      {"patterns", "inner and 0-boundary patterns", "text", cmd_patterns},
      {"measures", "cylinder measure tables", "tsv", cmd_measures},
      {"lines", "diagonal lines of the finite plot", "tsv", cmd_lines},
      {"bounds", "finite-plot bounds on line lengths", "text", cmd_bounds},
  };

  std::vector<std::pair<CLI::App*, const Sub*>> registered;
  for (const Sub& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    sc->add_option("substitution", cfg.subst, "substitution \"0->W0;1->W1\"");
    sc->add_option("--subst", cfg.subst, "substitution \"0->W0;1->W1\"");
    sc->add_option("--subst-file", cfg.subst_file, "file holding the substitution");
    sc->add_option("--lmax", cfg.lmax, "largest length");
    sc->add_option("--n", cfg.n, "plot or prefix size")->check(CLI::Range(std::size_t{1}, kDefaultPrefixCap));
    sc->add_option("--out", cfg.out_dir, "output directory (default: stdout)");
    sc->add_option("--format", cfg.format, "tsv, text, pgm or ascii")
        ->check(CLI::IsMember({"tsv", "text", "pgm", "ascii"}));
    sc->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sc->add_option("--decimal", cfg.decimal, "add a rounded decimal column with this many digits")
        ->check(CLI::Range(0, 60));
    sc->add_option("--prefix-file", cfg.prefix_file, "read the prefix from a file instead of generating it");
    sc->add_flag("--overlay", cfg.overlay, "gray out boundary lines in the plot");
    sc->add_option("--stride", cfg.stride, "sampling stride for ascii plots")->check(CLI::PositiveNumber);
    registered.emplace_back(sc, &s);
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  for (auto [sc, s] : registered) {
    if (!sc->parsed()) continue;
    if (cfg.format.empty()) cfg.format = s->default_format;
    try {
      return s->fn(cfg, out);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const PreconditionError& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const Error& e) {
      err << "internal error: " << e.what() << '\n';
      return kValidation;
    }
  }
  return kUsage;
}

}  // namespace symrec::cli
