#include "symrec/measures.hpp"

#include <algorithm>

namespace symrec {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rational& r, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = r.get_num() * scale;
  const mpz_class& den = r.get_den();
  // Round half away from zero.
  mpz_class q = (abs(num) * 2 + den) / (den * 2);
  std::string digits_str = q.get_str();
  if (digits > 0) {
    if (digits_str.size() <= static_cast<std::size_t>(digits))
      digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
    digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sgn(num) < 0 && q != 0 ? "-" : "") + digits_str;
}

std::size_t TwoWordMatrix::position(const Word& ab) const {
  auto it = std::lower_bound(index.begin(), index.end(), ab);
  if (it == index.end() || *it != ab) throw PreconditionError("'" + ab + "' is not an allowed 2-word");
  return static_cast<std::size_t>(it - index.begin());
}

TwoWordMatrix m2_matrix(const Language& lang) {
  const Substitution& s = lang.substitution();
  const std::size_t q = s.q();
  TwoWordMatrix out;
  out.index = lang.words(2).words();
  const std::size_t n = out.index.size();
  out.m.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t col = 0; col < n; ++col) {
    const Word window = s.apply(out.index[col]).substr(0, q + 1);
    for (std::size_t i = 0; i < q; ++i) ++out.m[out.position(window.substr(i, 2))][col];
  }
  return out;
}

std::vector<std::vector<Rational>> integer_nullspace(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_cols;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
          throw InvariantError("fraction-free elimination lost exact divisibility");
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = pivot_cols[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) acc += Rational(a[k][j]) * x[j];
      x[pc] = -acc / Rational(a[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Rational> pf_vector(const TwoWordMatrix& m2, std::size_t q) {
  const std::size_t n = m2.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = mpz_class(static_cast<long>(m2.m[i][j])) - (i == j ? mpz_class(static_cast<unsigned long>(q)) : mpz_class(0));
  auto basis = integer_nullspace(a);
  if (basis.size() != 1)
    throw InvariantError("eigenspace of q has dimension " + std::to_string(basis.size()) +
                         "; expected 1 for a primitive substitution");
  std::vector<Rational> nu = std::move(basis.front());
  Rational total = 0;
  for (const auto& v : nu) total += v;
  for (auto& v : nu) v /= total;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(nu[i]) <= 0) throw InvariantError("eigenvector entry is not positive");
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) row += Rational(static_cast<long>(m2.m[i][j])) * nu[j];
    if (row != Rational(static_cast<unsigned long>(q)) * nu[i])
      throw InvariantError("eigenvector check M2 nu = q nu failed");
  }
  return nu;
}

const Rational& CylinderMeasureTable::at(const Word& w) const {
  auto it = measure.find(w);
  if (it == measure.end()) throw PreconditionError("'" + w + "' is not in the measure table");
  return it->second;
}

Rational CylinderMeasureTable::total() const {
  Rational t = 0;
  for (const auto& [w, m] : measure) t += m;
  return t;
}

CylinderMeasureTable cylinder_measures(const Language& lang, const std::vector<Rational>& nu,
                                       std::size_t length) {
  const Substitution& s = lang.substitution();
  const std::vector<Word> pairs = lang.words(2).words();
  if (nu.size() != pairs.size()) throw PreconditionError("eigenvector does not match L_2");

  CylinderMeasureTable table;
  table.length = length;
  if (length == 0) throw PreconditionError("cylinder length must be positive");
  if (length <= 2) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      table.measure[length == 2 ? pairs[i] : pairs[i].substr(0, 1)] += nu[i];
    return table;
  }

  const std::size_t q = s.q();
  std::size_t p = 0;
  mpz_class qp = 1;
  while (qp <= static_cast<unsigned long>(length - 2)) {
    qp *= static_cast<unsigned long>(q);
    ++p;
  }
  const std::size_t starts = qp.get_ui();
  const auto& allowed = lang.words(length);
  for (const auto& [w, r] : allowed.residues) table.measure[w] = 0;

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    Word img = pairs[i];
    for (std::size_t k = 0; k < p; ++k) img = s.apply(img);
    for (std::size_t pos = 0; pos < starts; ++pos) {
      auto it = table.measure.find(img.substr(pos, length));
      if (it == table.measure.end())
        throw InvariantError("image window produced a word outside L_" + std::to_string(length));
      it->second += nu[i];
    }
  }
  const Rational scale(mpz_class(1), qp);
  for (auto& [w, m] : table.measure) {
    m *= scale;
    if (sgn(m) <= 0) throw InvariantError("allowed word '" + w + "' received zero measure");
  }
  return table;
}

CylinderMeasureTable marginalize(const CylinderMeasureTable& longer) {
  if (longer.length < 2) throw PreconditionError("nothing to marginalize");
  CylinderMeasureTable out;
  out.length = longer.length - 1;
  for (const auto& [w, m] : longer.measure) out.measure[w.substr(0, out.length)] += m;
  return out;
}

Measures::Measures(const Language& lang, std::size_t max_length)
    : m2_(m2_matrix(lang)), nu_(pf_vector(m2_, lang.substitution().q())) {
  if (max_length > lang.max_length())
    throw PreconditionError("language does not cover the requested measure length");
  tables_.resize(max_length + 1);
  for (std::size_t l = 1; l <= max_length; ++l) tables_[l] = cylinder_measures(lang, nu_, l);
}

const CylinderMeasureTable& Measures::table(std::size_t length) const {
  if (length == 0 || length > max_length())
    throw PreconditionError("no measure table for length " + std::to_string(length));
  return tables_[length];
}

Rational Measures::measure(const Word& w) const {
  const auto& t = table(w.size());
  auto it = t.measure.find(w);
  return it == t.measure.end() ? Rational(0) : it->second;
}

Rational pattern_density(const Measures& measures, const InnerPattern& p) {
  const Rational m1 = measures.measure(p.word());
  const Rational m2 = measures.measure(p.mirror_word());
  if (sgn(m1) == 0 || sgn(m2) == 0)
    throw PreconditionError(format_pattern(p) + " is not an inner line-pattern");
  return m1 * m2;
}

}  // namespace symrec
