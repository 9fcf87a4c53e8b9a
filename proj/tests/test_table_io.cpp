#include <catch2/catch_amalgamated.hpp>

#include "genchar/table_io.hpp"

using namespace genchar;

TEST_CASE("rational strings") {
  CHECK(to_fraction_string(Rational(1, 2)) == "1/2");
  CHECK(to_fraction_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_fraction_string(Rational(3)) == "3");
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("table file ordering") {
  const TableFile f = to_table_file(build_table(3));
  REQUIRE(f.entries.size() == 16);
  CHECK(f.n == 3);
  CHECK(f.version == "1");

  // pairs by lambda reverse-lex then mu reverse-lex
  CHECK(f.entries[0].lambda == Partition({3}));
  CHECK(f.entries[0].mu == Partition({2}));
  CHECK(f.entries[4].lambda == Partition({2, 1}));
  CHECK(f.entries[4].mu == Partition({2}));
  CHECK(f.entries[8].mu == Partition({1, 1}));
  CHECK(f.entries[12].lambda == Partition({1, 1, 1}));

  // classes by type reverse-lex then mark descending
  CHECK(f.entries[0].cls == MarkedClass(Partition({3}), 3));
  CHECK(f.entries[1].cls == MarkedClass(Partition({2, 1}), 2));
  CHECK(f.entries[2].cls == MarkedClass(Partition({2, 1}), 1));
  CHECK(f.entries[3].cls == MarkedClass(Partition({1, 1, 1}), 1));

  // the anchor value
  CHECK(f.entries[9].lambda == Partition({2, 1}));
  CHECK(f.entries[9].mu == Partition({1, 1}));
  CHECK(f.entries[9].cls == MarkedClass(Partition({2, 1}), 2));
  CHECK(f.entries[9].value == Rational(1, 2));
}

TEST_CASE("json round trip is lossless and byte stable") {
  for (int n = 3; n <= 4; ++n) {
    const TableFile f = to_table_file(build_table(n));
    const std::string text = emit_json(f);
    const TableFile parsed = parse_json(text);
    CHECK(parsed == f);
    CHECK(emit_json(parsed) == text);
  }
}

TEST_CASE("csv output") {
  const std::string csv = emit_csv(to_table_file(build_table(3)));
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 17);  // header + 16 entries
  CHECK(csv.starts_with("lambda,mu,class_type,mark,value\n"));
  CHECK(csv.find("\"2,1\",\"1,1\",\"2,1\",2,1/2\n") != std::string::npos);
}
