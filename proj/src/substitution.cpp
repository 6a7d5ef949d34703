#include "symrec/substitution.hpp"

#include <algorithm>
#include <array>

namespace symrec {

namespace {

std::size_t common_prefix(std::string_view a, std::string_view b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  return n;
}

std::size_t common_suffix(std::string_view a, std::string_view b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[a.size() - 1 - n] == b[b.size() - 1 - n]) ++n;
  return n;
}

bool is_constant(std::string_view w, Letter a) {
  return std::all_of(w.begin(), w.end(), [a](char c) { return c == a; });
}

}  // namespace

Substitution::Substitution(Word image0, Word image1)
    : image0_(std::move(image0)), image1_(std::move(image1)) {
  if (!is_binary_word(image0_) || !is_binary_word(image1_))
    throw PreconditionError("substitution images must be words over {0,1}");
  if (image0_.size() != image1_.size())
    throw PreconditionError("substitution images must have equal length");
  if (image0_.size() < 2) throw PreconditionError("substitution length q must be at least 2");
}

Word Substitution::apply(std::string_view w) const {
  Word out;
  out.reserve(w.size() * q());
  for (char c : w) out += image(c);
  return out;
}

Substitution Substitution::power(unsigned k) const {
  if (k == 0) throw PreconditionError("power() needs k >= 1");
  Word a = image0_, b = image1_;
  for (unsigned i = 1; i < k; ++i) {
    a = apply(a);
    b = apply(b);
  }
  return Substitution(std::move(a), std::move(b));
}

std::string Substitution::to_string() const { return "0->" + image0_ + ";1->" + image1_; }

Substitution parse_substitution(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact += c;

  std::array<std::string, 2> images;
  std::array<bool, 2> seen{false, false};
  std::size_t pos = 0;
  for (int rule = 0; rule < 2; ++rule) {
    std::size_t end = compact.find(';', pos);
    if (rule == 0 && end == std::string::npos)
      throw ParseError(ParseErrorKind::Syntax, "expected two rules separated by ';'");
    if (rule == 1 && end != std::string::npos && end + 1 != compact.size())
      throw ParseError(ParseErrorKind::Syntax, "unexpected text after the second rule");
    std::string_view part = std::string_view(compact).substr(pos, end == std::string::npos
                                                                      ? std::string::npos
                                                                      : end - pos);
    pos = end == std::string::npos ? compact.size() : end + 1;

    if (part.size() < 3 || part.substr(1, 2) != "->" || !is_binary_letter(part[0]))
      throw ParseError(ParseErrorKind::Syntax, "rule must look like 'a->W' with a in {0,1}");
    int letter = part[0] - '0';
    if (seen[letter])
      throw ParseError(ParseErrorKind::Syntax, "letter " + std::string(1, part[0]) +
                                                   " is defined twice");
    seen[letter] = true;
    images[letter] = std::string(part.substr(3));
  }

  for (int a = 0; a < 2; ++a) {
    if (images[a].empty())
      throw ParseError(ParseErrorKind::EmptyImage,
                       "image of " + std::to_string(a) + " is empty");
    if (!is_binary_word(images[a]))
      throw ParseError(ParseErrorKind::NonBinaryLetter,
                       "image of " + std::to_string(a) + " contains a letter outside {0,1}");
  }
  if (images[0].size() != images[1].size())
    throw ParseError(ParseErrorKind::LengthMismatch,
                     "images have unequal lengths " + std::to_string(images[0].size()) +
                         " and " + std::to_string(images[1].size()));
  if (images[0].size() < 2)
    throw ParseError(ParseErrorKind::TooShort, "substitution length q must be at least 2");
  return Substitution(std::move(images[0]), std::move(images[1]));
}

Normalized normalize(const Substitution& s) {
  if (s.image0().front() == '0') return {s, {}};
  if (s.image1().front() == '1') {
    // Relabel 0 <-> 1: the new image of 0 is the relabeled image of 1.
    return {Substitution(flipped(s.image1()), flipped(s.image0())), {true, false}};
  }
  return {s.power(2), {false, true}};
}

const char* to_string(CaseKind kind) noexcept {
  switch (kind) {
    case CaseKind::Equal: return "Equal";
    case CaseKind::OddAlternating: return "OddAlternating";
    case CaseKind::AllZeros: return "AllZeros";
    case CaseKind::ZeroThenOnes: return "ZeroThenOnes";
    case CaseKind::NonPrimitive: return "NonPrimitive";
    case CaseKind::PrimitiveAperiodic: return "PrimitiveAperiodic";
  }
  return "?";
}

bool CaseLabel::eventually_periodic() const noexcept {
  return kind == CaseKind::Equal || kind == CaseKind::OddAlternating ||
         kind == CaseKind::AllZeros || kind == CaseKind::ZeroThenOnes;
}

std::string CaseLabel::verdict() const {
  switch (kind) {
    case CaseKind::Equal:
    case CaseKind::OddAlternating:
    case CaseKind::AllZeros:
      return "fixed point is sigma-periodic: no finite lines, infinitely many infinite lines";
    case CaseKind::ZeroThenOnes:
      return "fixed point is eventually sigma-periodic: no finite lines, infinitely many "
             "infinite lines";
    case CaseKind::NonPrimitive:
      return "non-primitive: no infinite lines; every K_l is infinite and has zero density";
    case CaseKind::PrimitiveAperiodic:
      return "primitive aperiodic: no infinite lines; K_l is empty or of positive density";
  }
  return {};
}

CaseLabel classify(const Substitution& s) {
  if (s.image0().front() != '0')
    throw PreconditionError("classify() needs a normalized substitution (image of 0 starts with 0)");
  const Word& z0 = s.image0();
  const Word& z1 = s.image1();
  const std::size_t q = s.q();

  if (z0 == z1) return {CaseKind::Equal, {}};
  if (q % 2 == 1) {
    Word alt0, alt1;
    for (std::size_t i = 0; i < q; ++i) {
      alt0 += (i % 2 == 0) ? '0' : '1';
      alt1 += (i % 2 == 0) ? '1' : '0';
    }
    if (z0 == alt0 && z1 == alt1) return {CaseKind::OddAlternating, {}};
  }
  if (is_constant(z0, '0')) return {CaseKind::AllZeros, {}};
  if (is_constant(z1, '1')) {
    // z0 starts with 0 and is not all zeros, so it contains a 1.
    if (count_letter(z0, '0') == 1) return {CaseKind::ZeroThenOnes, {}};
    return {CaseKind::NonPrimitive, {}};
  }
  return {CaseKind::PrimitiveAperiodic, {}};
}

CaseLabel classify_any(const Substitution& s) {
  auto [norm, flags] = normalize(s);
  CaseLabel label = classify(norm);
  label.flags = flags;
  return label;
}

AlphaBeta alpha_beta(const Substitution& s) {
  if (s.image0() == s.image1())
    throw PreconditionError("alpha/beta are undefined when both images are equal");
  return {common_prefix(s.image0(), s.image1()), common_suffix(s.image0(), s.image1())};
}

bool is_primitive(const Substitution& s) {
  // m[a][b] = number of letters a in the image of b.
  std::array<std::array<std::size_t, 2>, 2> m{};
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a)
      m[a][b] = count_letter(s.image(static_cast<Letter>('0' + b)), static_cast<Letter>('0' + a));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (m[i][0] * m[0][j] + m[i][1] * m[1][j] == 0) return false;
  return true;
}

Word fixed_point_prefix(const Substitution& s, std::size_t n, std::size_t cap) {
  if (s.image0().front() != '0')
    throw PreconditionError("fixed_point_prefix() needs a normalized substitution");
  if (n > cap)
    throw PreconditionError("prefix length " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(cap) + " symbols");
  // x = zeta(x), so x_i is letter i mod q of the image of x_{i / q}.
  Word x(n, '0');
  const std::size_t q = s.q();
  for (std::size_t i = 1; i < n; ++i) x[i] = s.image(x[i / q])[i % q];
  return x;
}

}  // namespace symrec
