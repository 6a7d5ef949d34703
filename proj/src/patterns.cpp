#include "symrec/patterns.hpp"

namespace symrec {

namespace {

// The letter c whose image has `suffix` as a suffix; nullopt if none.
std::optional<Letter> letter_with_suffix(const Substitution& s, const Word& suffix) {
  for (Letter c : {'0', '1'}) {
    const Word& img = s.image(c);
    if (img.compare(img.size() - suffix.size(), suffix.size(), suffix) == 0) return c;
  }
  return std::nullopt;
}

std::optional<Letter> letter_with_prefix(const Substitution& s, const Word& prefix) {
  for (Letter c : {'0', '1'})
    if (s.image(c).compare(0, prefix.size(), prefix) == 0) return c;
  return std::nullopt;
}

// Inverse of the letter-wise substitution on a word made of whole images.
std::optional<Word> decode_blocks(const Substitution& s, const Word& w) {
  const std::size_t q = s.q();
  if (w.size() % q != 0) return std::nullopt;
  Word v;
  for (std::size_t i = 0; i < w.size(); i += q) {
    if (w.compare(i, q, s.image0()) == 0)
      v += '0';
    else if (w.compare(i, q, s.image1()) == 0)
      v += '1';
    else
      return std::nullopt;
  }
  return v;
}

Sign sign_of(Letter image_letter) { return image_letter == '0' ? Sign::Plus : Sign::Minus; }

char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

}  // namespace

std::string SeparatorType::to_string() const {
  return std::string("(") + sign_char(left) + sign_char(right) + ")/(" + sign_char(boundary) + ")";
}

bool is_inner_pattern(const Language& lang, const InnerPattern& p) {
  if (p.w.empty()) return false;
  return lang.is_allowed(p.word()) && lang.is_allowed(p.mirror_word());
}

std::vector<InnerPattern> enumerate_inner(const Language& lang, std::size_t length) {
  std::vector<InnerPattern> out;
  if (length == 0) return out;
  const auto& table = lang.words(length + 2);
  for (const auto& [awb, unused] : table.residues) {
    InnerPattern p{awb.front(), awb.substr(1, length), awb.back()};
    if (table.contains(p.mirror_word())) out.push_back(std::move(p));
  }
  return out;
}

std::vector<BoundaryPattern> enumerate_boundary0(const Language& lang, std::size_t length) {
  std::vector<BoundaryPattern> out;
  if (length == 0) return out;
  const Word head = fixed_point_prefix(lang.substitution(), length + 1);
  BoundaryPattern p{head.substr(0, length), flip(head[length])};
  if (lang.is_allowed(p.w + p.b)) out.push_back(std::move(p));
  return out;
}

SeparatorType separator_type(const Substitution& s) {
  const AlphaBeta ab = alpha_beta(s);
  const Word& z0 = s.image0();
  const Sign left = sign_of(z0[s.q() - ab.beta - 1]);
  const Sign right = sign_of(z0[ab.alpha]);
  return {left, right, right};
}

InnerPattern induce(const Substitution& s, const InnerPattern& q) {
  const AlphaBeta ab = alpha_beta(s);
  const std::size_t n = s.q();
  const Word& zc = s.image(q.a);
  const Word& zd = s.image(q.b);
  InnerPattern p;
  p.a = zc[n - ab.beta - 1];
  p.w = zc.substr(n - ab.beta) + s.apply(q.w) + zd.substr(0, ab.alpha);
  p.b = zd[ab.alpha];
  return p;
}

BoundaryPattern induce_boundary0(const Substitution& s, const BoundaryPattern& q) {
  const AlphaBeta ab = alpha_beta(s);
  const Word& zd = s.image(q.b);
  return {s.apply(q.w) + zd.substr(0, ab.alpha), zd[ab.alpha]};
}

Desubstitution<InnerPattern> desubstitute(const Substitution& s, std::size_t recog,
                                          const InnerPattern& p) {
  const AlphaBeta ab = alpha_beta(s);
  const std::size_t n = s.q();
  const std::size_t len = p.length();
  if (len < recog) return {DesubstitutionStatus::TooShort, std::nullopt};
  if (len < ab.alpha + ab.beta + n || (len - ab.alpha - ab.beta) % n != 0)
    return {DesubstitutionStatus::EmptyResidue, std::nullopt};

  auto v = decode_blocks(s, p.w.substr(ab.beta, len - ab.alpha - ab.beta));
  auto c = letter_with_suffix(s, p.a + p.w.substr(0, ab.beta));
  auto d = letter_with_prefix(s, p.w.substr(len - ab.alpha) + p.b);
  if (!v || !c || !d)
    throw InvariantError("pattern " + format_pattern(p) +
                         " does not decode into images; it is not a pattern of " + s.to_string());
  return {DesubstitutionStatus::Ok, InnerPattern{*c, std::move(*v), *d}};
}

Desubstitution<BoundaryPattern> desubstitute_boundary0(const Substitution& s, std::size_t recog,
                                                       const BoundaryPattern& p) {
  const AlphaBeta ab = alpha_beta(s);
  const std::size_t n = s.q();
  const std::size_t len = p.length();
  if (len < recog) return {DesubstitutionStatus::TooShort, std::nullopt};
  if (len < ab.alpha + n || (len - ab.alpha) % n != 0)
    return {DesubstitutionStatus::EmptyResidue, std::nullopt};

  auto v = decode_blocks(s, p.w.substr(0, len - ab.alpha));
  auto d = letter_with_prefix(s, p.w.substr(len - ab.alpha) + p.b);
  if (!v || !d)
    throw InvariantError("pattern " + format_pattern(p) +
                         " does not decode into images; it is not a pattern of " + s.to_string());
  return {DesubstitutionStatus::Ok, BoundaryPattern{std::move(*v), *d}};
}

namespace {

template <class Pattern, class Step>
PatternChain<Pattern> build_chain(const Pattern& p, std::size_t recog, Step step) {
  std::vector<Pattern> descending{p};
  while (descending.back().length() >= recog) {
    auto r = step(descending.back());
    if (r.status == DesubstitutionStatus::EmptyResidue)
      throw PreconditionError("length " + std::to_string(descending.back().length()) +
                              " admits no pattern (residue mismatch)");
    descending.push_back(std::move(*r.predecessor));
  }
  PatternChain<Pattern> out{descending.back(), {}, descending.size() - 1};
  for (std::size_t i = descending.size() - 1; i-- > 0;) out.links.push_back(descending[i]);
  return out;
}

}  // namespace

PatternChain<InnerPattern> chain(const Substitution& s, std::size_t recog, const InnerPattern& p) {
  return build_chain(p, recog, [&](const InnerPattern& x) { return desubstitute(s, recog, x); });
}

PatternChain<BoundaryPattern> chain_boundary0(const Substitution& s, std::size_t recog,
                                              const BoundaryPattern& p) {
  return build_chain(p, recog,
                     [&](const BoundaryPattern& x) { return desubstitute_boundary0(s, recog, x); });
}

std::string format_pattern(const InnerPattern& p) {
  return std::string(1, p.a) + "|" + p.w + "|" + std::string(1, p.b);
}

std::string format_pattern(const BoundaryPattern& p) { return p.w + "^" + std::string(1, p.b); }

InnerPattern parse_inner_pattern(const std::string& text) {
  if (text.size() < 5 || text[1] != '|' || text[text.size() - 2] != '|' ||
      !is_binary_letter(text.front()) || !is_binary_letter(text.back()))
    throw PreconditionError("expected an inner pattern 'a|w|b', got '" + text + "'");
  Word w = text.substr(2, text.size() - 4);
  if (!is_binary_word(w)) throw PreconditionError("non-binary generating word in '" + text + "'");
  return {text.front(), std::move(w), text.back()};
}

BoundaryPattern parse_boundary_pattern(const std::string& text) {
  if (text.size() < 3 || text[text.size() - 2] != '^' || !is_binary_letter(text.back()))
    throw PreconditionError("expected a boundary pattern 'w^b', got '" + text + "'");
  Word w = text.substr(0, text.size() - 2);
  if (!is_binary_word(w)) throw PreconditionError("non-binary generating word in '" + text + "'");
  return {std::move(w), text.back()};
}

}  // namespace symrec
