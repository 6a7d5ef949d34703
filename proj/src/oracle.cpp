#include "symrec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

namespace symrec {

namespace {

void require_prefix(std::string_view prefix, std::size_t needed) {
  if (prefix.size() < needed)
    throw PreconditionError("prefix of length " + std::to_string(prefix.size()) + " is too short; " +
                            std::to_string(needed) + " symbols needed");
}

// Runs work(d, slot) for d in [1, n) on `jobs` threads, offsets dealt round-robin.
template <class Work>
void over_offsets(std::size_t n, unsigned jobs, Work&& work) {
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    for (std::size_t d = 1; d < n; ++d) work(d, 0u);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t d = 1 + t; d < n; d += jobs) work(d, t);
    });
  for (auto& th : pool) th.join();
}

Rational ratio_of(std::uint64_t count, std::size_t n) {
  Rational r(mpz_class(static_cast<unsigned long>(count)),
             mpz_class(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n));
  r.canonicalize();
  return r;
}

std::vector<std::size_t> sorted(const std::set<std::size_t>& s) { return {s.begin(), s.end()}; }

}  // namespace

const char* to_string(LineKind k) noexcept {
  switch (k) {
    case LineKind::Inner: return "inner";
    case LineKind::Boundary0: return "0-boundary";
    case LineKind::BoundaryN: return "n-boundary";
    case LineKind::BothBoundary: return "both";
  }
  return "?";
}

std::vector<LineRecord> extract_lines(std::string_view prefix, std::size_t n) {
  require_prefix(prefix, n);
  std::vector<LineRecord> out;
  for_each_line(prefix, n, [&](const LineRecord& r) { out.push_back(r); });
  return out;
}

std::vector<std::uint64_t> direct_inner_counts(std::string_view x, std::size_t n,
                                               std::size_t max_length, unsigned jobs) {
  const std::size_t plot = n + max_length + 1;
  require_prefix(x, plot);
  const unsigned workers = std::max(1u, jobs);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(max_length + 1, 0));

  over_offsets(n, workers, [&](std::size_t d, unsigned slot) {
    auto& counts = partial[slot];
    // Starts (i, i+d) with i >= 1 and i + d < n.
    std::size_t i = 1;
    while (i + d < n) {
      if (x[i] != x[i + d] || x[i - 1] == x[i - 1 + d]) {
        ++i;
        continue;
      }
      std::size_t e = i;
      while (e + d < plot && e - i <= max_length && x[e] == x[e + d]) ++e;
      const std::size_t len = e - i;
      if (len <= max_length && e + d < plot) counts[len] += 2;
      i = e;
    }
  });

  std::vector<std::uint64_t> out(max_length + 1, 0);
  for (const auto& p : partial)
    for (std::size_t l = 0; l <= max_length; ++l) out[l] += p[l];
  return out;
}

std::map<Word, std::uint64_t> window_counts(std::string_view prefix, std::size_t n,
                                            std::size_t length) {
  require_prefix(prefix, n + length + 1);
  std::map<Word, std::uint64_t> out;
  for (std::size_t i = 1; i < n; ++i) ++out[Word(prefix.substr(i - 1, length + 2))];
  return out;
}

std::uint64_t product_form_count(std::string_view prefix, std::size_t n,
                                 const std::vector<InnerPattern>& patterns) {
  if (patterns.empty()) return 0;
  const std::size_t length = patterns.front().length();
  const auto counts = window_counts(prefix, n, length);
  auto occ = [&](const Word& u) {
    auto it = counts.find(u);
    return it == counts.end() ? std::uint64_t{0} : it->second;
  };
  std::uint64_t total = 0;
  for (const auto& p : patterns) {
    if (p.length() != length) throw PreconditionError("patterns of mixed lengths");
    total += occ(p.word()) * occ(p.mirror_word());
  }
  return total;
}

EmpiricalDensity empirical_density(std::string_view prefix, std::size_t n,
                                   const std::vector<InnerPattern>& patterns) {
  EmpiricalDensity out;
  out.length = patterns.empty() ? 0 : patterns.front().length();
  out.n = n;
  out.count = product_form_count(prefix, n, patterns);
  out.ratio = ratio_of(out.count, n);
  return out;
}

EmpiricalDensity empirical_density_scan(std::string_view prefix, std::size_t n, std::size_t length) {
  EmpiricalDensity out;
  out.length = length;
  out.n = n;
  const auto counts = window_counts(prefix, n, length);
  for (const auto& [u, c] : counts) {
    Word m = u;
    m.front() = flip(m.front());
    m.back() = flip(m.back());
    auto it = counts.find(m);
    if (it != counts.end()) out.count += c * it->second;
  }
  out.ratio = ratio_of(out.count, n);
  return out;
}

bool BoundReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass(); });
}

std::size_t bound_prefix_length(std::size_t n, std::size_t recog) { return (recog + 1) * n + 2; }

BoundReport bound_checks(std::string_view x, std::size_t n, std::size_t recog, std::size_t q,
                         unsigned jobs) {
  if (n < 2) throw PreconditionError("bound checks need n >= 2");
  require_prefix(x, bound_prefix_length(n, recog));
  const unsigned workers = std::max(1u, jobs);

  struct Partial {
    std::set<std::size_t> inner, zero;
    std::map<std::size_t, std::uint64_t> b;
    std::size_t longest = 0;
  };
  std::vector<Partial> partial(workers);

  over_offsets(n, workers, [&](std::size_t d, unsigned slot) {
    Partial& acc = partial[slot];
    std::size_t i = 0;
    while (i + d < n) {
      if (x[i] != x[i + d]) {
        ++i;
        continue;
      }
      std::size_t e = i;
      while (e + d < x.size() && x[e] == x[e + d]) ++e;
      if (e + d == x.size()) throw InvariantError("line at offset " + std::to_string(d) + " runs past the prefix");
      const std::size_t len = e - i;
      (i == 0 ? acc.zero : acc.inner).insert(len);
      acc.longest = std::max(acc.longest, len);
      if (i + d + len >= n) acc.b[len] += 2;
      i = e;
    }
  });

  BoundReport out;
  out.n = n;
  out.recog = recog;
  out.q = q;
  std::set<std::size_t> inner, zero;
  std::size_t longest = 0;
  for (auto& p : partial) {
    inner.insert(p.inner.begin(), p.inner.end());
    zero.insert(p.zero.begin(), p.zero.end());
    for (const auto& [l, c] : p.b) out.b[l] += c;
    longest = std::max(longest, p.longest);
  }
  out.inner_lengths = sorted(inner);
  out.boundary0_lengths = sorted(zero);

  const double count_bound =
      static_cast<double>(recog - 1) * (1.0 + std::log(static_cast<double>(n)) / std::log(static_cast<double>(q)));
  const double rn = static_cast<double>(recog * n);
  out.checks.push_back({"distinct inner lengths <= (R-1)(1+log_q n)",
                        static_cast<double>(inner.size()), count_bound, false});
  out.checks.push_back({"longest line < R*n", static_cast<double>(longest), rn, true});
  out.checks.push_back({"distinct 0-boundary lengths <= (R-1)(1+log_q n)",
                        static_cast<double>(zero.size()), count_bound, false});
  double worst = 0;
  for (const auto& [l, c] : out.b) worst = std::max(worst, static_cast<double>(l) * static_cast<double>(c));
  out.checks.push_back({"max l*b_l(n) < 8*R*n", worst, 8.0 * rn, true});
  return out;
}

LineScreen infinite_line_screen(const Substitution& s) {
  LineScreen out;
  out.label = classify_any(s);
  out.periodic = out.label.eventually_periodic();
  out.verdict = out.label.verdict();
  if (out.periodic) return out;

  const Substitution t = normalize(s).substitution;
  std::size_t n = 1;
  for (int e = 0; e < 5; ++e) n *= t.q();
  out.prefix_length = n;
  const Word x = fixed_point_prefix(t, n);
  out.one_lines = empirical_density_scan(x, n - 2, 1).count;
  out.confirmed = out.one_lines >= 2;
  return out;
}

}  // namespace symrec
