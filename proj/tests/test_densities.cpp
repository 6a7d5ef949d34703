#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "symrec/densities.hpp"
#include "symrec/oracle.hpp"

using namespace symrec;
using namespace testing;

namespace {

Rational Q(long n, long d) { return make_rational(n, d); }

std::vector<std::size_t> support_of(const Analysis& an, std::size_t limit) {
  return length_support(an, limit).lengths;
}

}  // namespace

TEST_CASE("Thue-Morse densities") {
  const Analysis an(kThueMorse);
  CHECK(an.recog() == 4);
  const std::pair<std::size_t, Rational> expected[] = {
      {1, Q(1, 9)}, {2, Q(1, 18)}, {3, Q(1, 36)}, {4, Q(1, 72)}, {5, Q(0, 1)}, {6, Q(1, 144)}};
  for (const auto& [l, d] : expected) {
    CAPTURE(l);
    CHECK(density_K(an, l).value == d);
  }
  const auto four = density_K(an, 4);
  CHECK(four.provenance == Provenance::Scaled);
  CHECK(four.order == 1);
  CHECK(four.root_length == 2);
  CHECK(four.provenance_label() == "scaled(k=1,l0=2)");
  CHECK(four.decomposition.size() == 8);
  CHECK(density_K(an, 5).provenance == Provenance::EmptyResidue);
  CHECK(density_K(an, 5).provenance_label() == "empty-residue");
  CHECK(density_K(an, 1).provenance_label() == "direct");
  CHECK_THROWS_AS(density_K(an, 0), PreconditionError);
}

TEST_CASE("q=5 densities") {
  const Analysis an(kFive);
  CHECK(density_K(an, 4).value == Q(13, 1250));
  CHECK(density_K(an, 9).value == Q(7, 1250));
  CHECK(density_K(an, 1).value == Q(7, 50));
  CHECK(density_K(an, 2).value == Q(3, 50));
  CHECK(density_K(an, 3).value == Q(1, 50));
  CHECK(density_K(an, 10).value == 0);
}

TEST_CASE("empty roots") {
  const Analysis an(kFour);
  CHECK(an.recog() == 14);
  const auto r = density_K(an, 4);
  CHECK(r.value == 0);
  CHECK(r.provenance == Provenance::EmptyRoot);
  CHECK(r.provenance_label() == "empty-root");
}

TEST_CASE("analysis needs a normalized primitive aperiodic substitution") {
  CHECK_THROWS_AS(Analysis{kNonPrimitive}, PreconditionError);
  CHECK_THROWS_AS(Analysis(Substitution("10", "01")), PreconditionError);
  const Analysis an(kThueMorse);
  CHECK_THROWS_AS(an.inner_patterns(5), PreconditionError);
}

TEST_CASE("families") {
  const auto tm = density_families(Analysis(kThueMorse));
  REQUIRE(tm.families.size() == 2);
  CHECK(tm.families[0].root_length == 2);
  CHECK(tm.families[0].base == Q(1, 18));
  CHECK(tm.families[0].length_formula() == "l(k) = 2*2^k");
  CHECK(tm.families[0].density_formula() == "d(k) = 1/(18*4^k)");
  CHECK(tm.families[1].length_formula() == "l(k) = 3*2^k");
  CHECK(tm.families[1].density_formula() == "d(k) = 1/(36*4^k)");
  REQUIRE(tm.isolated.size() == 1);
  CHECK(tm.isolated[0].length == 1);

  const auto five = density_families(Analysis(kFive));
  REQUIRE(five.families.size() == 4);
  const Rational bases[] = {Q(7, 50), Q(3, 50), Q(1, 50), Q(13, 1250)};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(five.families[i].root_length == i + 1);
    CHECK(five.families[i].base == bases[i]);
    CHECK(five.families[i].length_at(1) == (i + 2) * 5 - 1);
  }
  CHECK(five.families[0].length_formula() == "l(k) = 2*5^k - 1");
  CHECK(five.isolated.empty());

  DensityFamily odd{1, Q(1, 2), 3, 1};
  CHECK(odd.length_formula() == "l(k) = 1*3^k + 1*(3^k - 1)/2");
  CHECK(odd.length_at(2) == 13);
  CHECK(odd.density_at(2) == Q(1, 162));
  CHECK_THROWS_AS(DensityFamily({1, Q(1, 2), 2, 0}).length_at(80), PreconditionError);
}

TEST_CASE("length support") {
  const Analysis tm(kThueMorse);
  CHECK(support_of(tm, 16) == std::vector<std::size_t>{1, 2, 3, 4, 6, 8, 12, 16});
  CHECK(length_support(tm, 16).fraction == Q(1, 2));
  CHECK(support_of(Analysis(kFive), 30) == std::vector<std::size_t>{1, 2, 3, 4, 9, 14, 19, 24});
  CHECK_THROWS_AS(length_support(tm, 0), PreconditionError);
  CHECK(boundary0_length_support(tm, 40).lengths == std::vector<std::size_t>{1, 2, 4, 8, 16, 32});
}

TEST_CASE("non-primitive verdict") {
  const auto v = nonprimitive_verdict(kNonPrimitive, 3);
  CHECK(format_pattern(v.witness) == "0|111|1");
  CHECK(v.density == 0);
  CHECK(v.witness_in_prefix);
  const auto one = nonprimitive_verdict(kNonPrimitive, 1);
  CHECK(format_pattern(one.witness) == "0|1|1");
  CHECK(one.witness_in_prefix);
  // Runs of ones inside images of images: <a, 101, b> shows up at l = 3.
  bool saw_101 = false;
  for (const auto& p : v.detected) saw_101 |= p.w == "101";
  CHECK(saw_101);
  CHECK(nonprimitive_verdict(kNonPrimitive, 32).witness_in_prefix);
  CHECK_THROWS_AS(nonprimitive_verdict(kThueMorse, 2), PreconditionError);
}

TEST_CASE("density invariants over random substitutions") {
  std::vector<Substitution> corpus{kThueMorse, kPeriodDoubling, kFive, kFour};
  for (const auto& s : random_primitive(77u, 25, 5)) corpus.push_back(s);
  for (const auto& s : corpus) {
    CAPTURE(s.to_string());
    const Analysis an(s);
    const std::size_t R = an.recog();
    const std::size_t q = an.q();
    const std::size_t shift = an.alpha_beta().alpha + an.alpha_beta().beta;

    // Scaled values agree with direct enumeration at lengths above R.
    const std::size_t top = std::min<std::size_t>(3 * R, 40);
    const Language lang(s, top + 2);
    const Measures m(lang, top + 2);
    for (std::size_t l = 1; l <= top; ++l) {
      CAPTURE(l);
      Rational direct = 0;
      for (const auto& p : enumerate_inner(lang, l)) direct += pattern_density(m, p);
      const auto r = density_K(an, l);
      CHECK(r.value == direct);
      CHECK((sgn(r.value) == 0) == (r.provenance == Provenance::EmptyResidue ||
                                    r.provenance == Provenance::EmptyRoot));
      if (l >= R && sgn(r.value) > 0) CHECK(l % q == shift % q);
      if (r.provenance == Provenance::Direct) {
        Rational sum = 0;
        for (const auto& t : r.decomposition) sum += t.density;
        CHECK(sum == r.value);
      }
    }

    // Families: scaling law and the closed form in c.
    const Rational c(mpz_class(static_cast<unsigned long>(shift)), mpz_class(static_cast<unsigned long>(q - 1)));
    for (const auto& f : density_families(an).families) {
      CHECK(f.length_at(0) == f.root_length);
      for (unsigned k = 0; k < 4; ++k) {
        const std::size_t l = f.length_at(k);
        const auto r = density_K(an, l);
        CHECK(r.value == f.density_at(k));
        CHECK(f.density_at(k + 1) / f.density_at(k) == Rational(1, static_cast<unsigned long>(q * q)));
        const Rational ratio = (Rational(static_cast<unsigned long>(f.root_length)) + c) /
                               (Rational(static_cast<unsigned long>(l)) + c);
        CHECK(r.value == ratio * ratio * f.base);
      }
    }

    // Support count bound and agreement with nonzero densities.
    const auto sup = length_support(an, 200);
    CHECK(static_cast<double>(sup.lengths.size()) <=
          (R - 1) * (1 + std::log(200.0) / std::log(static_cast<double>(q))) + (R - 1));
    const std::set<std::size_t> in(sup.lengths.begin(), sup.lengths.end());
    for (std::size_t l = 1; l <= 200; ++l) CHECK((in.count(l) == 1) == (sgn(density_K(an, l).value) > 0));
  }
}

TEST_CASE("nonempty K_l matches a prefix scan") {
  std::vector<Substitution> corpus{kThueMorse, kPeriodDoubling, kFive, kFour};
  for (const auto& s : random_primitive(13u, 15, 4)) corpus.push_back(s);
  for (const auto& s : corpus) {
    CAPTURE(s.to_string());
    const Analysis an(s);
    const std::size_t R = an.recog();
    const std::size_t n = std::size_t{1} << 17;
    const Word x = fixed_point_prefix(s, n + 3 * R + 2);
    for (std::size_t l = 1; l <= 3 * R; ++l) {
      CAPTURE(l);
      const bool seen = empirical_density_scan(x, n, l).count > 0;
      CHECK(seen == (sgn(density_K(an, l).value) > 0));
    }

    // 0-boundary lines of the plot follow the boundary support.
    const auto bsup = boundary0_length_support(an, 3 * R);
    const std::set<std::size_t> expected(bsup.lengths.begin(), bsup.lengths.end());
    std::set<std::size_t> found;
    for (std::size_t l = 1; l <= 3 * R; ++l) {
      const Word w = x.substr(0, l);
      Word wb = w;
      wb += flip(x[l]);
      if (x.find(wb, 1) != Word::npos) found.insert(l);
    }
    CHECK(found == expected);
  }
}

TEST_CASE("support is sparse") {
  for (const auto& s : {kThueMorse, kFive}) {
    const Analysis an(s);
    Rational previous = 2;
    for (unsigned e = 6; e <= 14; ++e) {
      const auto f = length_support(an, std::size_t{1} << e).fraction;
      CHECK(f < previous);
      previous = f;
    }
  }
}
