#include "symrec/language.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace symrec {

namespace {

void add_residue(ResidueSet& r, std::size_t p) {
  auto it = std::lower_bound(r.begin(), r.end(), p);
  if (it == r.end() || *it != p) r.insert(it, p);
}

// Smallest k with l <= k*q + 1: every l-word of the fixed point lies inside the image of
// some allowed (k+1)-word, starting at an index below q.
std::size_t source_length(std::size_t length, std::size_t q) {
  if (length <= 1) return 1;
  return (length - 2) / q + 2;
}

// Scans the first q windows of zeta(v) for every v in `sources`.
AllowedWordSet scan_images(const Substitution& s, const AllowedWordSet& sources,
                           std::size_t length) {
  AllowedWordSet out;
  out.length = length;
  const std::size_t q = s.q();
  for (const auto& [v, unused] : sources.residues) {
    const Word image = s.apply(v);
    assert(image.size() >= length + q - 1);
    for (std::size_t i = 0; i < q; ++i) add_residue(out.residues[image.substr(i, length)], i);
  }
  return out;
}

}  // namespace

std::vector<Word> AllowedWordSet::words() const {
  std::vector<Word> out;
  out.reserve(residues.size());
  for (const auto& [w, r] : residues) out.push_back(w);
  return out;
}

std::vector<Word> allowed_two_words(const Substitution& s) {
  std::set<Word> found;
  for (Letter a : {'0', '1'}) {
    const Word& img = s.image(a);
    for (std::size_t i = 0; i + 2 <= img.size(); ++i) found.insert(img.substr(i, 2));
  }
  const std::vector<Word> seed(found.begin(), found.end());
  for (const Word& ab : seed) found.insert(Word{s.image(ab[0]).back(), s.image(ab[1]).front()});
  std::vector<Word> out(found.begin(), found.end());
  assert(two_word_closure_is_stable(s, out));
  return out;
}

bool two_word_closure_is_stable(const Substitution& s, const std::vector<Word>& two_words) {
  const std::set<Word> have(two_words.begin(), two_words.end());
  for (const Word& ab : two_words)
    if (!have.count(Word{s.image(ab[0]).back(), s.image(ab[1]).front()})) return false;
  return true;
}

Language::Language(const Substitution& s, std::size_t max_length) : subst_(s) {
  if (s.image0().front() != '0')
    throw PreconditionError("Language needs a normalized substitution");
  if (classify(s).kind != CaseKind::PrimitiveAperiodic)
    throw PreconditionError("Language needs a primitive aperiodic substitution");
  const std::size_t top = std::max<std::size_t>(max_length, 2);
  tables_.resize(top + 1);

  AllowedWordSet letters;
  letters.length = 1;
  letters.residues["0"];
  letters.residues["1"];
  tables_[1] = scan_images(s, letters, 1);

  AllowedWordSet pairs;
  pairs.length = 2;
  for (const Word& ab : allowed_two_words(s)) pairs.residues[ab];
  tables_[2] = scan_images(s, pairs, 2);

  for (std::size_t l = 3; l <= top; ++l) tables_[l] = scan_images(s, tables_[source_length(l, s.q())], l);
  tables_.resize(std::max<std::size_t>(max_length, 1) + 1);
}

const AllowedWordSet& Language::words(std::size_t length) const {
  if (length == 0 || length > max_length())
    throw PreconditionError("word length " + std::to_string(length) +
                            " is outside the tabulated range 1.." + std::to_string(max_length()));
  return tables_[length];
}

bool Language::is_allowed(const Word& w) const {
  if (w.empty()) return true;
  return words(w.size()).contains(w);
}

const ResidueSet& Language::residues(const Word& w) const {
  const auto& table = words(w.size());
  auto it = table.residues.find(w);
  if (it == table.residues.end()) throw PreconditionError("word '" + w + "' is not allowed");
  return it->second;
}

AllowedWordSet allowed_words(const Substitution& s, std::size_t length) {
  return Language(s, length).words(length);
}

bool is_recognizable(const Language& lang, const Word& w) {
  return lang.residues(w).size() == 1;
}

bool is_recognizable(const Substitution& s, const Word& w) {
  if (w.empty()) throw PreconditionError("empty word");
  return is_recognizable(Language(s, w.size()), w);
}

RecognizabilityConstant recognizability_constant(const Substitution& s) {
  const AlphaBeta ab = alpha_beta(s);
  const std::size_t q = s.q();
  const std::size_t limit = q * q * q;

  RecognizabilityConstant out;
  // Grow the table geometrically; languages of uniform substitutions are small.
  std::size_t reach = 8;
  std::optional<Language> lang;
  for (std::size_t l = 1; l < limit; ++l) {
    if (!lang || l > lang->max_length()) {
      reach = std::min(limit, std::max(reach * 2, l));
      lang.emplace(s, reach);
    }
    const auto& table = lang->words(l);
    const bool all = std::all_of(table.residues.begin(), table.residues.end(),
                                 [](const auto& kv) { return kv.second.size() == 1; });
    out.all_recognizable.resize(l + 1);
    out.all_recognizable[l] = all;
    if (l >= 3 && all) {
      out.value = std::max(l, ab.alpha + ab.beta + 1);
      for (std::size_t m = l + 1; m <= out.value; ++m) out.all_recognizable.push_back(true);
      return out;
    }
  }
  throw InvariantError("recognizability search reached q^3 = " + std::to_string(limit) +
                       " for " + s.to_string());
}

const char* to_string(CuttingClass c) noexcept {
  switch (c) {
    case CuttingClass::None: return "none";
    case CuttingClass::WeaklyUnique: return "weakly-unique";
    case CuttingClass::StronglyUnique: return "strongly-unique";
    case CuttingClass::TwoPlus: return "two-or-more";
  }
  return "?";
}

Word Cutting::concatenated() const {
  Word out = head;
  for (const auto& v : blocks) out += v;
  return out + tail;
}

Cutting cutting_at_residue(const Substitution& s, const Word& w, std::size_t residue) {
  const std::size_t q = s.q();
  if (residue >= q || residue + w.size() < q)
    throw PreconditionError("no cutting bar inside the occurrence");
  Cutting c;
  std::size_t pos = (q - residue) % q;
  c.head = w.substr(0, pos);
  while (pos + q <= w.size()) {
    c.blocks.push_back(w.substr(pos, q));
    pos += q;
  }
  c.tail = w.substr(pos);
  return c;
}

CuttingReport classify_cuttings(const Language& lang, const Word& w) {
  if (w.empty()) throw PreconditionError("empty word");
  const Substitution& s = lang.substitution();
  const std::size_t q = s.q();
  const std::size_t len = w.size();
  const ResidueSet& residues = lang.residues(w);

  CuttingReport report;
  report.word = w;
  const std::size_t p = residues.back();
  if (residues.size() == 1) {
    if (p + len >= q) {
      report.classification = CuttingClass::StronglyUnique;
      report.cutting = cutting_at_residue(s, w, p);
    }
    return report;
  }
  const std::size_t p2 = residues[residues.size() - 2];
  if (p2 + len >= q) {
    report.classification = CuttingClass::TwoPlus;
    report.cutting = cutting_at_residue(s, w, p);
    report.second_cutting = cutting_at_residue(s, w, p2);
  } else if (q < p + len) {
    report.classification = CuttingClass::WeaklyUnique;
    report.cutting = cutting_at_residue(s, w, p);
  } else if (q == p + len) {
    report.classification = CuttingClass::StronglyUnique;
    report.cutting = Cutting{w, {}, {}};
  }
  return report;
}

CuttingReport classify_cuttings(const Substitution& s, const Word& w) {
  if (w.empty()) throw PreconditionError("empty word");
  return classify_cuttings(Language(s, w.size()), w);
}

}  // namespace symrec
