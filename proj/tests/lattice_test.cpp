#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "bruhat/bruhat.hpp"

using namespace bruhat;

namespace {

FinitePoset<std::string> fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return read_cover_list(in);
}

FinitePoset<std::string> chain(int length) {
  std::ostringstream s;
  for (int i = 0; i < length; ++i) s << i << " < " << i + 1 << '\n';
  return parse_cover_list(s.str());
}

}  // namespace

TEST(CoverList, ParsesAndRoundTrips) {
  const auto p = parse_cover_list("# comment\na < b\nb < c   # trailing\nlonely\n");
  EXPECT_EQ(p.size(), 4U);
  EXPECT_TRUE(p.leq(*p.find("a"), *p.find("c")));
  EXPECT_FALSE(p.leq(*p.find("lonely"), *p.find("c")));
  std::ostringstream out;
  write_cover_list(out, p, [](const std::string& s) { return s; });
  const auto q = parse_cover_list(out.str());
  EXPECT_TRUE(are_isomorphic(p, q));
  EXPECT_THROW(parse_cover_list("a < b < c\n"), std::invalid_argument);
  EXPECT_THROW(parse_cover_list("a < b\nb < a\n"), std::invalid_argument);
}

TEST(CoverList, TransitiveEdgesAreNotCovers) {
  const auto p = parse_cover_list("a < b\nb < c\na < c\n");
  EXPECT_EQ(p.cover_edges().size(), 2U);
  EXPECT_EQ(p.rank(), 2);
}

TEST(Lattice, FixtureCaptions) {
  const auto a = classify(fixture("fig1a_not_lattice.txt"));
  EXPECT_FALSE(a.is_lattice);

  const auto b = classify(fixture("fig1b_pentagon.txt"));
  EXPECT_TRUE(b.is_lattice);
  EXPECT_FALSE(b.is_modular);

  const auto c = classify(fixture("fig1c_diamond.txt"));
  EXPECT_TRUE(c.is_modular);
  EXPECT_FALSE(c.is_distributive);

  const auto d = classify(fixture("fig1d_square_with_tail.txt"));
  EXPECT_TRUE(d.is_distributive);
  EXPECT_FALSE(d.is_boolean);

  const auto two = classify(fixture("fig2_boolean4.txt"));
  EXPECT_TRUE(two.is_boolean);
  EXPECT_EQ(two.atom_count, 4);
  EXPECT_EQ(two.rank, 4);

  const auto three = classify(fixture("fig3_nonmodular_lattice.txt"));
  EXPECT_TRUE(three.is_lattice);
  EXPECT_FALSE(three.is_modular);

  const auto four = classify(fixture("fig4_two_crown.txt"));
  EXPECT_FALSE(four.is_lattice);
  EXPECT_FALSE(four.is_boolean);
}

TEST(Lattice, TrivialShapes) {
  const auto one = parse_cover_list("x\n");
  EXPECT_TRUE(is_boolean(one));
  EXPECT_TRUE(classify(one).is_boolean);
  for (int len = 1; len <= 5; ++len) {
    const auto r = classify(chain(len));
    EXPECT_TRUE(r.is_distributive);
    EXPECT_EQ(r.is_boolean, len == 1);
  }
  const auto square = parse_cover_list("0 < a\n0 < b\na < 1\nb < 1\n");
  EXPECT_TRUE(is_modular(square));
  EXPECT_TRUE(is_boolean(square));
}

TEST(Lattice, LawCheckersRequireALattice) {
  const auto bowtie = fixture("fig1a_not_lattice.txt");
  EXPECT_THROW(is_modular(bowtie), std::invalid_argument);
  EXPECT_THROW(is_distributive(bowtie), std::invalid_argument);
}

TEST(Lattice, BooleanIntervalsAreGradedWithBinomialRanks) {
  for_each_permutation(5, [](const Permutation& w) {
    const auto p = principal_order_ideal(w, OrderKind::Bruhat);
    const auto r = classify(p);
    ASSERT_TRUE(r.respects_hierarchy());
    if (!r.is_boolean) return;
    const auto rank = p.rank_function();
    ASSERT_TRUE(rank);
    ASSERT_EQ(r.rank, r.atom_count);
    std::vector<int> sizes(static_cast<std::size_t>(*r.rank) + 1, 0);
    for (int x : *rank) ++sizes[static_cast<std::size_t>(x)];
    int binom = 1;
    for (int i = 0; i <= *r.rank; ++i) {
      ASSERT_EQ(sizes[static_cast<std::size_t>(i)], binom);
      binom = binom * (*r.rank - i) / (i + 1);
    }
  });
}

TEST(Isomorphism, DistinguishesAndIdentifies) {
  const auto fig3 = fixture("fig3_nonmodular_lattice.txt");
  const auto same = extract_interval(IntervalSpec(Permutation::generator(5, 3), evaluate(Word{{3, 2, 4, 3}, 5}),
                                                  OrderKind::Bruhat));
  EXPECT_TRUE(are_isomorphic(fig3, same));
  EXPECT_FALSE(are_isomorphic(fixture("fig1b_pentagon.txt"), fixture("fig1d_square_with_tail.txt")));
  EXPECT_FALSE(are_isomorphic(fixture("fig1c_diamond.txt"), fixture("fig1b_pentagon.txt")));
  const auto square = principal_order_ideal(parse_permutation("2143"), OrderKind::Bruhat);
  EXPECT_TRUE(are_isomorphic(square, parse_cover_list("0 < a\n0 < b\na < 1\nb < 1\n")));
  EXPECT_FALSE(are_isomorphic(chain(3), parse_cover_list("0 < a\n0 < b\na < 1\nb < 1\n")));
}

TEST(Isomorphism, RankThreeBruhatIntervalsInS5HaveThreeShapes) {
  const auto crown = fixture("fig4_two_crown.txt");
  const auto fig3 = fixture("fig3_nonmodular_lattice.txt");
  const auto cube = extract_interval(IntervalSpec(Permutation::identity(4), parse_permutation("2341"), OrderKind::Bruhat));
  ASSERT_EQ(cube.size(), 8U);
  ASSERT_TRUE(classify(cube).is_boolean);
  const auto all = all_permutations(5);
  int counts[3] = {0, 0, 0};
  for (const auto& v : all) {
    for (const auto& w : all) {
      if (w.length() != v.length() + 3 || !bruhat_leq(v, w)) continue;
      const auto p = extract_interval(IntervalSpec(v, w, OrderKind::Bruhat));
      const auto r = classify(p);
      if (!r.is_lattice) {
        ASSERT_TRUE(are_isomorphic(p, crown));
        ++counts[0];
      } else if (r.is_boolean) {
        ASSERT_TRUE(are_isomorphic(p, cube));
        ++counts[1];
      } else {
        ASSERT_FALSE(r.is_modular);
        ASSERT_TRUE(are_isomorphic(p, fig3));
        ++counts[2];
      }
    }
  }
  EXPECT_GT(counts[0], 0);
  EXPECT_GT(counts[1], 0);
  EXPECT_GT(counts[2], 0);
}
