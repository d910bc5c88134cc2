#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "equibasis/csv.hpp"
#include "equibasis/figures.hpp"

using namespace equibasis;

namespace {

double cell(const Table& table, std::size_t row, std::size_t col) { return *parse_double(table.rows.at(row).at(col)); }

std::string render(const Table& table) {
  std::ostringstream out;
  write_csv(out, table);
  return out.str();
}

}  // namespace

TEST(FormatDouble, RoundTrips) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng) * std::pow(10.0, static_cast<double>(i % 40 - 20));
    const auto back = parse_double(format_double(x));
    ASSERT_TRUE(back);
    ASSERT_EQ(*back, x);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0), "1");
}

TEST(ParseDouble, AcceptsAndRejects) {
  EXPECT_EQ(parse_double("0.25"), 0.25);
  EXPECT_EQ(parse_double("+1e-3"), 1e-3);
  EXPECT_EQ(parse_double("-2"), -2.0);
  EXPECT_FALSE(parse_double(""));
  EXPECT_FALSE(parse_double("0,5"));
  EXPECT_FALSE(parse_double("1.0x"));
  EXPECT_FALSE(parse_double(" 1"));
}

TEST(Table, RowWidthChecked) {
  Table t{{"a", "b"}, {}};
  EXPECT_THROW(t.add_row({"1"}), shape_error);
  t.add_numeric_row({1.0, 0.5});
  EXPECT_EQ(render(t), "a,b\n1,0.5\n");
}

TEST(Figures, AmplitudeMagnitudes) {
  const Table f1 = figure_table(1);
  ASSERT_EQ(f1.header.size(), 6u);
  ASSERT_EQ(f1.rows.size(), figure_grid_points);
  EXPECT_EQ(f1.rows[0][1], "1");
  for (std::size_t k = 2; k <= 5; ++k) EXPECT_NEAR(cell(f1, 0, k), 0.0, 1e-15);
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_NEAR(cell(f1, 200, k), 1.0 / std::sqrt(5.0), 1e-12);
  EXPECT_EQ(figure_table(2).header.size(), 9u);
  EXPECT_EQ(figure_table(1, 3).header.back(), "abs_a2");
}

TEST(Figures, GaussEntropyEndpoints) {
  const Table f3 = figure_table(3);
  ASSERT_EQ(f3.header.size(), 6u);
  EXPECT_EQ(f3.header[5], "entropy_D100");
  for (std::size_t c = 1; c < 6; ++c) {
    EXPECT_NEAR(cell(f3, 0, c), 0.0, 1e-10);
    EXPECT_NEAR(cell(f3, 200, c), 1.0, 1e-10);
  }
}

TEST(Figures, TrajectoryEndpoints) {
  const Table f4 = figure_table(4);
  EXPECT_EQ(f4.header, (std::vector<std::string>{"t", "re_a1", "im_a1"}));
  EXPECT_NEAR(cell(f4, 0, 1), 0.0, 1e-15);
  EXPECT_NEAR(cell(f4, 0, 2), 0.0, 1e-15);
  // Odd D = 51, k = 1: a_1(1) = e^{i pi/4} e^{-i pi/102} (1 - i^{53}) / sqrt(102).
  const std::complex<double> expected =
      std::polar(1.0, std::numbers::pi / 4 - std::numbers::pi / 102) * std::complex<double>(1.0, -1.0) / std::sqrt(102.0);
  EXPECT_NEAR(cell(f4, 200, 1), expected.real(), 1e-12);
  EXPECT_NEAR(cell(f4, 200, 2), expected.imag(), 1e-12);
}

TEST(Figures, GraphSpectraAndConcurrence) {
  const Table f5 = figure_table(5);
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_NEAR(cell(f5, 200, k), std::sqrt(0.2), 1e-12);
  EXPECT_NEAR(cell(f5, 0, 1), 1.0, 1e-12);

  const Table f7 = figure_table(7);
  for (std::size_t c = 1; c < 6; ++c) EXPECT_NEAR(cell(f7, 200, c), 1.0, 1e-10);

  const Table f8 = figure_table(8);
  EXPECT_EQ(f8.header[1], "cg_D2");
  for (std::size_t i = 0; i < f8.rows.size(); ++i)
    EXPECT_NEAR(cell(f8, i, 1), std::sin(std::numbers::pi * cell(f8, i, 0) / 2), 1e-14);
}

TEST(Figures, Errors) {
  EXPECT_THROW(figure_table(0), contract_error);
  EXPECT_THROW(figure_table(9), contract_error);
  EXPECT_THROW(figure_table(4, 1), contract_error);
}

TEST(Figures, Deterministic) {
  EXPECT_EQ(render(figure_table(6)), render(figure_table(6)));
  EXPECT_EQ(render(figure_table(8, 13)), render(figure_table(8, 13)));
}

TEST(Spectrum, Examples) {
  const Table max = spectrum_table(Construction::graph, 5, 1.0);
  ASSERT_EQ(max.rows.size(), 7u);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(cell(max, k, 1), 0.2, 1e-12);
  EXPECT_EQ(max.rows[5][0], "entropy");
  EXPECT_NEAR(cell(max, 5, 1), 1.0, 1e-12);
  EXPECT_NEAR(cell(max, 6, 1), 1.0, 1e-12);

  const Table product = spectrum_table(Construction::gauss, 4, 0.0);
  EXPECT_NEAR(cell(product, 0, 1), 1.0, 1e-15);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(cell(product, k, 1), 0.0, 1e-15);
  EXPECT_NEAR(cell(product, 5, 1), 0.0, 1e-15);

  const Table mid = spectrum_table(Construction::graph, 8, 0.5);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_GT(cell(mid, k, 1), 0.0);
  EXPECT_THROW(spectrum_table(Construction::graph, 8, 1.5), contract_error);
}

TEST(Ghz, CutTable) {
  const Table ghz = ghz_table(3, 2, 1.0);
  ASSERT_EQ(ghz.rows.size(), 3u);
  EXPECT_EQ(ghz.rows[0][0], "0|1.2");
  EXPECT_EQ(ghz.rows[1][0], "1|0.2");
  EXPECT_EQ(ghz.rows[2][0], "0.1|2");
  for (std::size_t r = 0; r < 3; ++r) EXPECT_NEAR(cell(ghz, r, 2), 1.0, 1e-10);

  const Table product = ghz_table(4, 3, 0.0);
  EXPECT_EQ(product.rows.size(), 7u);
  for (std::size_t r = 0; r < product.rows.size(); ++r) EXPECT_NEAR(cell(product, r, 2), 0.0, 1e-10);

  const std::vector<std::size_t> bad_shifts{0, 1};
  EXPECT_THROW(ghz_table(3, 2, 1.0, bad_shifts), contract_error);
  EXPECT_THROW(ghz_table(12, 10, 1.0), resource_error);
}
