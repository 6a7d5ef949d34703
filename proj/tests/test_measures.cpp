#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "symrec/measures.hpp"

using namespace symrec;
using namespace testing;

namespace {

Rational Q(long n, long d) { return make_rational(n, d); }

// Expected table: `special` words get their own value, all other allowed words `rest`.
void check_table(const CylinderMeasureTable& t, const std::vector<Word>& all,
                 const std::map<Word, Rational>& special, const Rational& rest) {
  std::vector<Word> got;
  for (const auto& [w, m] : t.measure) got.push_back(w);
  CHECK(got == all);
  for (const auto& [w, m] : t.measure) {
    CAPTURE(w);
    auto it = special.find(w);
    CHECK(m == (it == special.end() ? rest : it->second));
  }
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(to_string(Q(2, 4)) == "1/2");
  CHECK(to_string(Q(6, 3)) == "2");
  CHECK(to_string(Q(3, -9)) == "-1/3");
  CHECK(to_decimal(Q(1, 3), 4) == "0.3333");
  CHECK(to_decimal(Q(2, 3), 2) == "0.67");
  CHECK(to_decimal(Q(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(Q(13, 1250), 5) == "0.01040");
  CHECK(to_decimal(Q(5, 2), 0) == "3");
  CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);
}

TEST_CASE("two-word matrix") {
  const Language tm(kThueMorse, 4);
  const auto m = m2_matrix(tm);
  REQUIRE(m.index == std::vector<Word>{"00", "01", "10", "11"});
  const auto c = m.position("01");
  CHECK(m.m[m.position("01")][c] == 1);
  CHECK(m.m[m.position("11")][c] == 1);
  CHECK(m.m[m.position("00")][c] == 0);
  CHECK(m.m[m.position("10")][c] == 0);
  CHECK_THROWS_AS(m.position("0"), PreconditionError);

  const Language five(kFive, 4);
  const auto m5 = m2_matrix(five);
  const auto c5 = m5.position("00");
  CHECK(m5.m[m5.position("01")][c5] == 1);
  CHECK(m5.m[m5.position("11")][c5] == 2);
  CHECK(m5.m[m5.position("10")][c5] == 1);
  CHECK(m5.m[m5.position("00")][c5] == 1);

  for (const auto* mat : {&m, &m5})
    for (std::size_t col = 0; col < mat->size(); ++col) {
      std::int64_t sum = 0;
      for (std::size_t row = 0; row < mat->size(); ++row) sum += mat->m[row][col];
      CHECK(sum == static_cast<std::int64_t>(mat == &m ? 2 : 5));
    }
}

TEST_CASE("fraction-free nullspace") {
  using Row = std::vector<mpz_class>;
  auto basis = integer_nullspace({Row{1, 2, 3}, Row{2, 4, 6}});
  CHECK(basis.size() == 2);
  for (const auto& v : basis) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);

  CHECK(integer_nullspace({Row{2, 0}, Row{0, 3}}).empty());

  auto one = integer_nullspace({Row{0, 0, 1}, Row{3, -6, 0}});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == std::vector<Rational>{2, 1, 0});
}

TEST_CASE("Perron-Frobenius vector") {
  const Language tm(kThueMorse, 4);
  const auto nu = pf_vector(m2_matrix(tm), 2);
  CHECK(nu == std::vector<Rational>{Q(1, 6), Q(1, 3), Q(1, 3), Q(1, 6)});

  TwoWordMatrix id;
  id.index = {"00", "11"};
  id.m = {{2, 0}, {0, 2}};
  CHECK_THROWS_AS(pf_vector(id, 2), InvariantError);
}

TEST_CASE("cylinder tables of the reference substitutions") {
  const Language tm(kThueMorse, 5);
  const Measures mt(tm, 5);
  check_table(mt.table(3), {"001", "010", "011", "100", "101", "110"}, {}, Q(1, 6));
  check_table(mt.table(4), {"0010", "0011", "0100", "0101", "0110", "1001", "1010", "1011", "1100", "1101"},
              {{"0110", Q(1, 6)}, {"1001", Q(1, 6)}}, Q(1, 12));
  check_table(mt.table(5),
              {"00101", "00110", "01001", "01011", "01100", "01101", "10010", "10011", "10100", "10110",
               "11001", "11010"},
              {}, Q(1, 12));
  check_table(mt.table(1), {"0", "1"}, {}, Q(1, 2));

  const Language five(kFive, 6);
  const Measures m5(five, 6);
  check_table(m5.table(3), {"001", "010", "011", "100", "101", "110", "111"},
              {{"001", Q(1, 5)}, {"010", Q(1, 5)}, {"100", Q(1, 5)}}, Q(1, 10));
  check_table(m5.table(4), {"0010", "0011", "0100", "0101", "0111", "1001", "1010", "1100", "1110"},
              {{"1001", Q(1, 5)}}, Q(1, 10));
  check_table(m5.table(5),
              {"00101", "00111", "01001", "01010", "01110", "10010", "10011", "10100", "11001", "11100"}, {},
              Q(1, 10));
  check_table(m5.table(6),
              {"001010", "001110", "010010", "010011", "010100", "011100", "100101", "100111", "101001",
               "110010", "110011", "111001"},
              {{"010010", Q(1, 25)}, {"110011", Q(1, 25)}, {"010011", Q(3, 50)}, {"110010", Q(3, 50)}},
              Q(1, 10));

  CHECK(mt.measure("000") == 0);
  CHECK_THROWS_AS(mt.table(6), PreconditionError);
  CHECK_THROWS_AS(Measures(tm, 6), PreconditionError);
}

TEST_CASE("pattern densities") {
  const Measures mt(Language(kThueMorse, 5), 5);
  CHECK(pattern_density(mt, parse_inner_pattern("0|0|1")) == Q(1, 36));
  CHECK(pattern_density(mt, parse_inner_pattern("0|01|0")) == Q(1, 144));
  CHECK_THROWS_AS(pattern_density(mt, parse_inner_pattern("0|00|0")), PreconditionError);

  const Measures m5(Language(kFive, 6), 6);
  const std::pair<const char*, Rational> listed[] = {
      {"0|0|1", Q(1, 25)},   {"0|1|0", Q(1, 50)},    {"0|1|1", Q(1, 100)},
      {"0|01|1", Q(1, 100)}, {"0|10|1", Q(1, 100)},  {"0|11|1", Q(1, 100)},
      {"0|010|1", Q(1, 100)}, {"0|1001|0", Q(1, 625)}, {"0|1001|1", Q(9, 2500)}};
  for (const auto& [text, d] : listed) {
    CAPTURE(text);
    CHECK(pattern_density(m5, parse_inner_pattern(text)) == d);
  }
}

TEST_CASE("measure invariants over random substitutions") {
  std::vector<Substitution> corpus{kThueMorse, kPeriodDoubling, kFive, kFour};
  for (const auto& s : random_primitive(5u, 20, 6)) corpus.push_back(s);
  for (const auto& s : corpus) {
    CAPTURE(s.to_string());
    const std::size_t R = recognizability_constant(s).value;
    const Language lang(s, R + 2);
    const Measures m(lang, R + 2);

    // Exact eigenvector identity.
    const auto& m2 = m.m2();
    for (std::size_t i = 0; i < m2.size(); ++i) {
      Rational row = 0;
      for (std::size_t j = 0; j < m2.size(); ++j) row += Rational(static_cast<long>(m2.m[i][j])) * m.nu()[j];
      CHECK(row == Rational(static_cast<unsigned long>(s.q())) * m.nu()[i]);
    }

    for (std::size_t l = 1; l <= R + 2; ++l) {
      CHECK(m.table(l).total() == 1);
      for (const auto& [w, v] : m.table(l).measure) CHECK(sgn(v) > 0);
    }
    for (std::size_t l = 1; l < R + 2; ++l) {
      const auto shorter = marginalize(m.table(l + 1));
      CHECK(shorter.measure == m.table(l).measure);
      for (const auto& [w, v] : m.table(l).measure) {
        CHECK(v == m.measure(w + "0") + m.measure(w + "1"));
        CHECK(v == m.measure("0" + w) + m.measure("1" + w));
      }
    }
  }
}

TEST_CASE("empirical frequencies approach the measure") {
  for (const auto& s : {kThueMorse, kFive}) {
    CAPTURE(s.to_string());
    const Measures m(Language(s, 5), 5);
    std::size_t n = 1;
    for (int e = 0; e < 10; ++e) n *= s.q();
    const Word x = fixed_point_prefix(s, n + 5);
    for (std::size_t l = 1; l <= 5; ++l) {
      std::vector<std::size_t> freq(std::size_t{1} << l, 0);
      std::size_t code = 0;
      const std::size_t mask = (std::size_t{1} << l) - 1;
      for (std::size_t i = 0; i < n + l - 1; ++i) {
        code = ((code << 1) | static_cast<std::size_t>(x[i] - '0')) & mask;
        if (i + 1 >= l) ++freq[code];
      }
      for (const auto& [w, v] : m.table(l).measure) {
        const double ratio = static_cast<double>(freq[std::stoul(w, nullptr, 2)]) / static_cast<double>(n) / v.get_d();
        CHECK(std::abs(ratio - 1.0) < 0.02);
      }
    }
  }
}
