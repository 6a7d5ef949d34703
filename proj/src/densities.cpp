#include "symrec/densities.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>

namespace symrec {

namespace {

const Substitution& checked(const Substitution& s) {
  if (s.image0().front() != '0') throw PreconditionError("substitution is not normalized");
  if (classify(s).kind != CaseKind::PrimitiveAperiodic)
    throw PreconditionError(s.to_string() + " is not primitive and aperiodic");
  return s;
}

mpz_class mpz_pow(std::size_t base, unsigned e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

struct RootOf {
  std::size_t order;
  std::size_t root;
};

// Walks l -> (l - shift)/q while l >= R. Empty on a residue mismatch.
std::optional<RootOf> descend(std::size_t length, std::size_t q, std::size_t shift,
                              std::size_t recog) {
  RootOf r{0, length};
  while (r.root >= recog) {
    if ((r.root - shift) % q != 0) return std::nullopt;
    r.root = (r.root - shift) / q;
    ++r.order;
  }
  return r;
}

std::vector<bool> nonempty_inner_roots(const Analysis& an) {
  std::vector<bool> out(an.recog(), false);
  for (std::size_t l = 1; l < an.recog(); ++l) out[l] = !an.inner_patterns(l).empty();
  return out;
}

std::vector<bool> nonempty_boundary_roots(const Analysis& an) {
  std::vector<bool> out(an.recog(), false);
  for (std::size_t l = 1; l < an.recog(); ++l)
    out[l] = !enumerate_boundary0(an.language(), l).empty();
  return out;
}

LengthSupport support_from(const std::vector<bool>& roots, std::size_t limit, std::size_t q,
                           std::size_t shift, std::size_t recog) {
  if (limit == 0) throw PreconditionError("support limit must be positive");
  LengthSupport out;
  out.limit = limit;
  for (std::size_t l = 1; l <= limit; ++l) {
    auto r = descend(l, q, shift, recog);
    if (r && roots[r->root]) out.lengths.push_back(l);
  }
  out.fraction = Rational(mpz_class(static_cast<unsigned long>(out.lengths.size())),
                          mpz_class(static_cast<unsigned long>(limit)));
  out.fraction.canonicalize();
  return out;
}

}  // namespace

Analysis::Analysis(const Substitution& normalized)
    : ab_(symrec::alpha_beta(checked(normalized))),
      recog_(recognizability_constant(normalized)),
      lang_(normalized, recog_.value + 2),
      measures_(lang_, recog_.value + 1) {}

std::vector<InnerPattern> Analysis::inner_patterns(std::size_t length) const {
  if (length == 0 || length > recog())
    throw PreconditionError("direct pattern enumeration covers lengths 1.." + std::to_string(recog()));
  return enumerate_inner(lang_, length);
}

std::string DensityResult::provenance_label() const {
  switch (provenance) {
    case Provenance::Direct: return "direct";
    case Provenance::Scaled:
      return "scaled(k=" + std::to_string(order) + ",l0=" + std::to_string(root_length) + ")";
    case Provenance::EmptyResidue: return "empty-residue";
    case Provenance::EmptyRoot: return "empty-root";
  }
  return "?";
}

DensityResult density_K(const Analysis& an, std::size_t length) {
  if (length == 0) throw PreconditionError("line length must be positive");
  const std::size_t q = an.q();
  const std::size_t shift = an.alpha_beta().alpha + an.alpha_beta().beta;
  DensityResult out;
  out.length = length;
  out.value = 0;

  auto r = descend(length, q, shift, an.recog());
  if (!r) {
    out.provenance = Provenance::EmptyResidue;
    return out;
  }
  out.order = r->order;
  out.root_length = r->root;
  if (r->order > 0 && q * r->root + shift < an.recog())
    throw InvariantError("chain root " + std::to_string(r->root) + " lies below the induction window");

  Rational sum = 0;
  for (auto& p : an.inner_patterns(r->root)) {
    Rational d = pattern_density(an.measures(), p);
    sum += d;
    out.decomposition.push_back({std::move(p), std::move(d)});
  }
  if (out.decomposition.empty()) {
    out.provenance = Provenance::EmptyRoot;
    return out;
  }
  out.provenance = r->order == 0 ? Provenance::Direct : Provenance::Scaled;
  out.value = sum / Rational(mpz_pow(q, static_cast<unsigned>(2 * r->order)));
  return out;
}

std::size_t DensityFamily::length_at(unsigned k) const {
  const mpz_class qk = mpz_pow(q, k);
  const mpz_class l = qk * static_cast<unsigned long>(root_length) +
                      mpz_class(static_cast<unsigned long>(shift)) * (qk - 1) / static_cast<unsigned long>(q - 1);
  if (!l.fits_ulong_p() || l.get_ui() > std::numeric_limits<std::size_t>::max())
    throw PreconditionError("family length overflows at k=" + std::to_string(k));
  return static_cast<std::size_t>(l.get_ui());
}

Rational DensityFamily::density_at(unsigned k) const {
  return base / Rational(mpz_pow(q * q, k));
}

std::string DensityFamily::length_formula() const {
  const std::string qs = std::to_string(q);
  if (shift % (q - 1) == 0) {
    const std::size_t c = shift / (q - 1);
    const std::size_t m = root_length + c;
    std::string out = "l(k) = " + (m == 1 ? std::string() : std::to_string(m) + "*") + qs + "^k";
    if (c > 0) out += " - " + std::to_string(c);
    return out;
  }
  return "l(k) = " + std::to_string(root_length) + "*" + qs + "^k + " + std::to_string(shift) +
         "*(" + qs + "^k - 1)/" + std::to_string(q - 1);
}

std::string DensityFamily::density_formula() const {
  return "d(k) = " + base.get_num().get_str() + "/(" + base.get_den().get_str() + "*" +
         std::to_string(q * q) + "^k)";
}

FamilyReport density_families(const Analysis& an) {
  const std::size_t q = an.q();
  const std::size_t shift = an.alpha_beta().alpha + an.alpha_beta().beta;
  FamilyReport out;
  for (std::size_t l0 = 1; l0 < an.recog(); ++l0) {
    DensityResult root = density_K(an, l0);
    if (sgn(root.value) == 0) continue;
    if (q * l0 + shift >= an.recog())
      out.families.push_back({l0, root.value, q, shift});
    else
      out.isolated.push_back(std::move(root));
  }
  return out;
}

LengthSupport length_support(const Analysis& an, std::size_t limit) {
  const std::size_t shift = an.alpha_beta().alpha + an.alpha_beta().beta;
  return support_from(nonempty_inner_roots(an), limit, an.q(), shift, an.recog());
}

LengthSupport boundary0_length_support(const Analysis& an, std::size_t limit) {
  return support_from(nonempty_boundary_roots(an), limit, an.q(), an.alpha_beta().alpha,
                      an.recog());
}

NonPrimitiveVerdict nonprimitive_verdict(const Substitution& s, std::size_t length) {
  if (length == 0) throw PreconditionError("line length must be positive");
  if (s.image0().front() != '0' || classify(s).kind != CaseKind::NonPrimitive)
    throw PreconditionError(s.to_string() + " is not a normalized non-primitive substitution");

  NonPrimitiveVerdict out;
  out.length = length;
  out.witness = InnerPattern{'0', Word(length, '1'), '1'};
  out.density = 0;
  out.justification =
      "every l-line (i,j) has x_{i-1} != x_{j-1}, so one of its coordinates follows a 0; "
      "the zeros of the fixed point have density 0, hence d(K_l) = 0, while runs 0 1^m 0 "
      "with m > l make K_l infinite";

  // zeta^(k+1)(0) already holds the run zeta^k(1) = 1^(q^k) between two zeros.
  const std::size_t q = s.q();
  unsigned k = 0;
  std::size_t qk = 1;
  while (qk < length + 2) {
    qk *= q;
    ++k;
  }
  std::size_t n = 1;
  for (unsigned e = 0; e < std::max(k + 2, 5u); ++e) n *= q;
  out.prefix_length = std::min(n, kDefaultPrefixCap);
  const Word x = fixed_point_prefix(s, out.prefix_length);

  std::set<Word> windows;
  for (std::size_t i = 0; i + length + 2 <= x.size(); ++i) windows.insert(x.substr(i, length + 2));
  for (const Word& awb : windows) {
    InnerPattern p{awb.front(), awb.substr(1, length), awb.back()};
    if (windows.count(p.mirror_word())) out.detected.push_back(std::move(p));
  }
  out.witness_in_prefix =
      std::find(out.detected.begin(), out.detected.end(), out.witness) != out.detected.end();
  return out;
}

}  // namespace symrec
