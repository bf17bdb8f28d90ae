#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ntp/catalog.hpp"
#include "ntp/element_table.hpp"
#include "ntp/group_file.hpp"
#include "oracle.hpp"

namespace {

namespace cat = ntp::catalog;

TEST(Catalog, Constructors) {
  auto d30 = cat::dihedral(30);
  EXPECT_EQ(d30.order(), 30u);
  EXPECT_EQ(d30.degree(), 15u);
  EXPECT_EQ(ntp::element_order(d30.generators()[0]), 15u);

  EXPECT_EQ(cat::symmetric(5).order(), 120u);
  EXPECT_EQ(cat::alternating(5).order(), 60u);
  EXPECT_EQ(cat::alternating(7).order(), 2520u);
  EXPECT_EQ(cat::psl27().order(), 168u);
  EXPECT_EQ(cat::sl23().order(), 24u);
  EXPECT_EQ(cat::frobenius(7, 3).order(), 21u);
  EXPECT_EQ(cat::frobenius(13, 12).order(), 156u);
  EXPECT_EQ(cat::cyclic(1).order(), 1u);
}

TEST(Catalog, DirectProductOfCoprimeCyclicsIsCyclic) {
  auto g = cat::direct_product(cat::cyclic(3), cat::cyclic(5));
  EXPECT_EQ(g.order(), 15u);
  auto t = ntp::enumerate_elements(g);
  EXPECT_EQ(*std::max_element(t.order_of.begin(), t.order_of.end()), 15u);
}

TEST(Catalog, Sl23Example) {
  auto g = cat::sl23_example();
  EXPECT_EQ(g.degree(), 16u);
  EXPECT_EQ(g.order(), 1512u);
  // Independent count by closure, so the chain is not trusted alone.
  EXPECT_EQ(oracle::closure(g.generators()).size(), 1512u);
  auto t = ntp::enumerate_elements(g);
  EXPECT_EQ(t.group_primes, (std::vector<std::uint64_t>{2, 3, 7}));

  // Translations of F_3^2 and the C_7 translation form a normal subgroup of order 63.
  const auto& gens = g.generators();
  ntp::PermutationGroup base({gens[0], gens[1], gens[2]});
  EXPECT_EQ(base.order(), 63u);
  const ntp::Permutation seeds[] = {gens[0], gens[2]};
  EXPECT_EQ(ntp::normal_closure(g, seeds).order(), 63u);

  // S and T generate a complement isomorphic to SL(2,3).
  ntp::PermutationGroup h({gens[3], gens[4]});
  EXPECT_EQ(h.order(), 24u);
  EXPECT_EQ(ntp::element_order(gens[3]), 4u);
  EXPECT_EQ(ntp::element_order(gens[4]), 3u);
}

TEST(Catalog, ExpressionParsing) {
  EXPECT_EQ(cat::make("dihedral(30)").order(), 30u);
  EXPECT_EQ(cat::make(" direct_product( frobenius(7,3) , cyclic(2) ) ").order(), 42u);
  EXPECT_EQ(cat::make("psl27").order(), 168u);
  auto e = cat::parse_expr("direct_product(cyclic(2),cyclic(3))");
  EXPECT_EQ(e.name, "direct_product");
  ASSERT_EQ(e.args.size(), 2u);
}

TEST(Catalog, Errors) {
  EXPECT_THROW(cat::make("nonsense"), ntp::CatalogError);
  EXPECT_THROW(cat::make("dihedral(31)"), ntp::CatalogError);
  EXPECT_THROW(cat::make("dihedral(4)"), ntp::CatalogError);
  EXPECT_THROW(cat::make("cyclic(0)"), ntp::CatalogError);
  EXPECT_THROW(cat::make("cyclic"), ntp::CatalogError);
  EXPECT_THROW(cat::make("cyclic(2,3)"), ntp::CatalogError);
  EXPECT_THROW(cat::make("psl27(3)"), ntp::CatalogError);
  EXPECT_THROW(cat::make("frobenius(8,2)"), ntp::CatalogError);
  EXPECT_THROW(cat::make("frobenius(7,4)"), ntp::CatalogError);
  EXPECT_THROW(cat::make("direct_product(cyclic(2),3)"), ntp::CatalogError);
  EXPECT_THROW(cat::make("cyclic(3"), ntp::CatalogError);
  EXPECT_THROW(cat::make("cyclic(3))"), ntp::CatalogError);
  EXPECT_THROW(cat::make("cyclic(5000)"), ntp::CatalogError);
}

TEST(Catalog, SweepOrdersAgreeWithClosure) {
  for (const auto& name : cat::standard_sweep()) {
    auto g = cat::make(name);
    if (g.order() > 5000) continue;
    EXPECT_EQ(g.order(), oracle::closure(g.generators()).size()) << name;
  }
}

TEST(GroupFile, ParsesWithCommentsAndBlankLines) {
  std::istringstream in(
      "# symmetric group on five points\n"
      "degree: 5\n"
      "\n"
      "gen: (1,2)   # transposition\n"
      "gen: (1,2,3,4,5)\n");
  auto g = ntp::read_group(in);
  EXPECT_EQ(g.degree(), 5u);
  EXPECT_EQ(g.order(), 120u);
}

TEST(GroupFile, WriteReadRoundTrip) {
  auto g = cat::sl23_example();
  std::istringstream in(ntp::write_group(g));
  auto h = ntp::read_group(in);
  EXPECT_EQ(h.generators(), g.generators());
  EXPECT_EQ(h.order(), 1512u);
}

std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    ntp::read_group(in);
  } catch (const ntp::GroupFileError& e) {
    return e.line();
  }
  return 0;
}

TEST(GroupFile, ErrorsNameTheLine) {
  EXPECT_EQ(error_line("degree: 4\ngen: (1,2)\ngen: (1,5)\n"), 3u);
  EXPECT_EQ(error_line("gen: (1,2)\n"), 1u);
  EXPECT_EQ(error_line("degree: x\n"), 1u);
  EXPECT_EQ(error_line("degree: 3\ndegree: 3\n"), 2u);
  EXPECT_EQ(error_line("# nothing\n"), 1u);
  EXPECT_EQ(error_line("degree: 3\nfoo: 1\n"), 2u);
  EXPECT_EQ(error_line("degree: 3\n\ngen (1,2)\n"), 3u);
}

TEST(GroupFile, DegreeOnlyIsTrivialGroup) {
  std::istringstream in("degree: 3\n");
  EXPECT_EQ(ntp::read_group(in).order(), 1u);
}

}  // namespace
