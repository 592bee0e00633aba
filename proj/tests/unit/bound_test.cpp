#include "regionbound/bound.hpp"

#include <gtest/gtest.h>

#include "regionbound/arrangement2d.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

namespace regionbound {
namespace {

using testing::for_all;
using testing::Gen;

Histogram H(std::initializer_list<long> entries) {
  std::vector<BigInt> v;
  for (long e : entries) v.emplace_back(e);
  return Histogram(std::move(v));
}

Architecture random_arch(Gen& g, int max_depth, int max_width) {
  Architecture arch;
  arch.input_dim = g.uniform(1, max_width);
  const int depth = g.uniform(1, max_depth);
  for (int l = 0; l < depth; ++l) arch.widths.push_back(g.uniform(1, max_width));
  return arch;
}

// Dense int64 evaluation of ||B_{nL} M ... B_{n1} M e_{n0}||_1 from the
// family's columns, independent of BoundMatrix and lift.
std::int64_t reference_matrix_bound(const GammaFamily& family, const Architecture& arch) {
  std::vector<std::int64_t> x(static_cast<std::size_t>(arch.input_dim) + 1, 0);
  x.back() = 1;
  for (int w : arch.widths) {
    std::vector<std::int64_t> lifted(static_cast<std::size_t>(w) + 1, 0);
    for (std::size_t j = 0; j < x.size(); ++j) lifted[std::min<std::size_t>(j, w)] += x[j];
    std::vector<std::int64_t> y(lifted.size(), 0);
    for (int j = 0; j <= w; ++j) {
      const testing::Ref col = testing::ref_clip(testing::to_ref(family(j, w)), static_cast<std::size_t>(j));
      for (std::size_t i = 0; i < col.size(); ++i) y[i] += col[i] * lifted[static_cast<std::size_t>(j)];
    }
    x = y;
  }
  std::int64_t total = 0;
  for (auto v : x) total += v;
  return total;
}

std::int64_t prior_product(const Architecture& arch) {
  std::int64_t product = 1;
  int narrowest = arch.input_dim;
  for (int w : arch.widths) {
    std::int64_t sum = 0;
    for (int i = 0; i <= std::min(narrowest, w); ++i) sum += testing::ref_binomial(w, i);
    product *= sum;
    narrowest = std::min(narrowest, w);
  }
  return product;
}

TEST(Architecture, ParseAndRender) {
  const Architecture a = Architecture::parse("3x6x6");
  EXPECT_EQ(a.input_dim, 3);
  EXPECT_EQ(a.widths, (std::vector<int>{6, 6}));
  EXPECT_EQ(a.to_string(), "3x6x6");
  EXPECT_TRUE(a.constant_width());
  EXPECT_FALSE(Architecture::parse("2x3x4").constant_width());
}

TEST(Architecture, ParseErrors) {
  for (const char* bad : {"", "3", "3x", "x3", "3x0", "3x-1", "3x6y6", "3xx6", " 3x6"}) {
    EXPECT_THROW(Architecture::parse(bad), std::invalid_argument) << '"' << bad << '"';
  }
}

TEST(Schlaefli, Examples) {
  EXPECT_EQ(schlaefli_count(2, 3), 7);
  EXPECT_EQ(schlaefli_count(1, 6), 7);
  EXPECT_EQ(schlaefli_count(3, 6), 42);
  EXPECT_EQ(schlaefli_count(9, 4), 16);
}

TEST(PhiApply, Examples) {
  const GammaFamily bar = GammaFamily::by_name("bar");
  const GammaFamily star = GammaFamily::by_name("star");
  EXPECT_EQ(phi_apply(bar, 6, Histogram::unit(3)), Histogram::unit(3, 42));
  EXPECT_EQ(phi_apply(star, 6, Histogram::unit(3)), H({0, 0, 4, 38}));
  EXPECT_EQ(phi_apply(star, 6, Histogram()), Histogram());
}

TEST(PhiApply, LinearAndMonotone) {
  const GammaFamily star = GammaFamily::by_name("star");
  for_all(100, 21, [&](Gen& g) {
    const int p1 = g.uniform(1, 8);
    const Histogram v = g.histogram(10, 50);
    const Histogram w = g.histogram(10, 50);
    EXPECT_EQ(phi_apply(star, p1, v + w), phi_apply(star, p1, v) + phi_apply(star, p1, w));
    EXPECT_TRUE(dominated_by(phi_apply(star, p1, v), phi_apply(star, p1, join(v, w))));
  });
}

TEST(BoundMatrix, StructureAndColumnNorms) {
  for (std::string_view name : GammaFamily::builtin_names()) {
    const GammaFamily family = GammaFamily::by_name(name);
    for (int p1 = 1; p1 <= 10; ++p1) {
      const BoundMatrix m = build_bound_matrix(family, p1);
      EXPECT_EQ(m.dim(), static_cast<std::size_t>(p1) + 1);
      EXPECT_TRUE(m.upper_triangular()) << name << " p1=" << p1;
      for (int j = 0; j <= p1; ++j) {
        BigInt column = 0;
        for (int i = 0; i <= p1; ++i) column += m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        EXPECT_EQ(column, family(j, p1).l1_norm());
      }
    }
  }
}

TEST(BoundMatrix, ColumnsMatchPhiOnBasis) {
  const GammaFamily star = GammaFamily::by_name("star");
  const BoundMatrix m = build_bound_matrix(star, 7);
  for (std::size_t j = 0; j <= 7; ++j) {
    const Histogram col = phi_apply(star, 7, Histogram::unit(j));
    for (std::size_t i = 0; i <= 7; ++i) EXPECT_EQ(m.at(i, j), col[i]);
  }
}

TEST(Lift, FoldsHighIndices) {
  const std::vector<BigInt> x{1, 2, 3, 4};
  EXPECT_EQ(lift(x, 1), (std::vector<BigInt>{1, 9}));
  EXPECT_EQ(lift(x, 5), (std::vector<BigInt>{1, 2, 3, 4, 0, 0}));
}

TEST(ComposeBound, SpecExamples) {
  for (std::string_view name : GammaFamily::builtin_names()) {
    const BigInt expected = name == "hat" ? 32 : 6;
    EXPECT_EQ(compose_bound(GammaFamily::by_name(name), Architecture::parse("1x5")).bound, expected) << name;
  }
  EXPECT_EQ(compose_bound(GammaFamily::by_name("bar"), Architecture::parse("3x6x6")).bound, 1764);
}

TEST(ComposeBound, PerLayerHistograms) {
  const ComposedBound b = compose_bound(GammaFamily::by_name("star"), Architecture::parse("3x6x6"));
  ASSERT_EQ(b.per_layer.size(), 2u);
  EXPECT_EQ(b.per_layer[0], H({0, 0, 4, 38}));
  EXPECT_FALSE(b.conjectured);
  EXPECT_TRUE(compose_bound(GammaFamily::by_name("star-conjecture"), Architecture::parse("2x3")).conjectured);
}

TEST(ComposeBound, MatchesIndependentMatrixProduct) {
  for_all(50, 22, [](Gen& g) {
    const Architecture arch = random_arch(g, 5, 8);
    for (std::string_view name : {"star", "bar", "tilde"}) {
      const GammaFamily family = GammaFamily::by_name(name);
      EXPECT_EQ(compose_bound(family, arch).bound, BigInt(static_cast<long>(reference_matrix_bound(family, arch))))
          << name << " " << arch.to_string();
    }
  });
}

TEST(ComposeBound, TildeRecoversProductFormula) {
  for_all(20, 23, [](Gen& g) {
    const Architecture arch = random_arch(g, 4, 8);
    EXPECT_EQ(compose_bound(GammaFamily::by_name("tilde"), arch).bound,
              BigInt(static_cast<long>(prior_product(arch))))
        << arch.to_string();
  });
}

TEST(ComposeBound, MonotoneInFamily) {
  for_all(40, 24, [](Gen& g) {
    const Architecture arch = random_arch(g, 4, 8);
    const BigInt star = compose_bound(GammaFamily::by_name("star"), arch).bound;
    const BigInt bar = compose_bound(GammaFamily::by_name("bar"), arch).bound;
    const BigInt tilde = compose_bound(GammaFamily::by_name("tilde"), arch).bound;
    const BigInt hat = compose_bound(GammaFamily::by_name("hat"), arch).bound;
    const BigInt con = compose_bound(GammaFamily::by_name("star-conjecture"), arch).bound;
    EXPECT_LE(con, star);
    EXPECT_LE(star, bar);
    EXPECT_LE(bar, tilde);
    EXPECT_LE(tilde, hat);
  });
}

TEST(ComposeBound, SingleLayerTightWhereTauKnown) {
  const GammaFamily star = GammaFamily::by_name("star");
  for (int n1 = 1; n1 <= 12; ++n1) {
    EXPECT_EQ(compose_bound(star, Architecture{1, {n1}}).bound, schlaefli_count(1, n1));
    for (int n0 = n1; n0 <= n1 + 2; ++n0) {
      EXPECT_EQ(compose_bound(star, Architecture{n0, {n1}}).bound, schlaefli_count(n0, n1));
    }
  }
}

TEST(ComposeBound, RejectsInvalidArchitecture) {
  EXPECT_THROW(compose_bound(GammaFamily::by_name("star"), Architecture{0, {3}}), std::invalid_argument);
  EXPECT_THROW(compose_bound(GammaFamily::by_name("star"), Architecture{2, {}}), std::invalid_argument);
}

TEST(GrowthRate, Examples) {
  EXPECT_EQ(growth_rate(GammaFamily::by_name("bar"), 3, 6), 42);
  EXPECT_EQ(growth_rate(GammaFamily::by_name("star"), 3, 6), 38);
  EXPECT_EQ(growth_rate(GammaFamily::by_name("star-conjecture"), 3, 6), 35);
  EXPECT_THROW(growth_rate(GammaFamily::by_name("bar"), 7, 6), std::domain_error);
  EXPECT_THROW(growth_rate(GammaFamily::by_name("bar"), 0, 6), std::domain_error);
}

TEST(Partition, ConstructionAndValidation) {
  EXPECT_EQ(SubnetworkPartition::singletons(3).boundaries, (std::vector<int>{0, 1, 2, 3}));
  const std::vector<int> lengths{2, 1};
  const SubnetworkPartition p = SubnetworkPartition::from_block_lengths(lengths);
  EXPECT_EQ(p.boundaries, (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(p.blocks(), 2u);
  EXPECT_NO_THROW(p.validate(3));
  EXPECT_THROW(p.validate(4), std::invalid_argument);
  EXPECT_THROW((SubnetworkPartition{{0, 2, 2, 3}}.validate(3)), std::invalid_argument);
  EXPECT_THROW((SubnetworkPartition{{1, 3}}.validate(3)), std::invalid_argument);
}

TEST(SubnetPhi, ReducesToLayerwise) {
  const GammaFamily bar = GammaFamily::by_name("bar");
  const SubnetGammaFamily single = SubnetGammaFamily::from_layerwise(bar, 6);
  EXPECT_EQ(subnet_phi_apply(single, Histogram::unit(3)), Histogram::unit(3, 42));
  EXPECT_EQ(subnet_phi_apply(single, Histogram()), Histogram());
  for_all(50, 25, [&](Gen& g) {
    const Histogram v = g.histogram(9, 30);
    EXPECT_EQ(subnet_phi_apply(single, v), phi_apply(bar, 6, v));
  });
}

TEST(SubnetPhi, ReplicatesAboveFirstWidth) {
  const SubnetGammaFamily fam =
      SubnetGammaFamily::from_composition(GammaFamily::by_name("star"), {4, 5});
  for (std::size_t i = 5; i <= 9; ++i) {
    EXPECT_EQ(subnet_phi_apply(fam, Histogram::unit(i, 3)), subnet_phi_apply(fam, Histogram::unit(4, 3)));
  }
}

TEST(SubnetCompose, SingletonsEqualLayerwise) {
  const GammaFamily star = GammaFamily::by_name("star");
  for_all(30, 26, [&](Gen& g) {
    const Architecture arch = random_arch(g, 5, 8);
    std::vector<SubnetGammaFamily> singles;
    for (int w : arch.widths) singles.push_back(SubnetGammaFamily::from_layerwise(star, w));
    EXPECT_EQ(subnet_compose_bound(singles, SubnetworkPartition::singletons(arch.depth()), arch).bound,
              compose_bound(star, arch).bound);
  });
}

TEST(SubnetCompose, ComposedBlocksEqualFourLayerBound) {
  const GammaFamily star = GammaFamily::by_name("star");
  const Architecture arch = Architecture::parse("3x6x6x6x6");
  const std::vector<SubnetGammaFamily> blocks = {
      SubnetGammaFamily::from_composition(star, {6, 6}),
      SubnetGammaFamily::from_composition(star, {6, 6})};
  const std::vector<int> lengths{2, 2};
  EXPECT_EQ(subnet_compose_bound(blocks, SubnetworkPartition::from_block_lengths(lengths), arch).bound,
            compose_bound(star, arch).bound);
}

TEST(SubnetCompose, SingleBlockCapFamily) {
  // gamma_{p0} := sum_i binomial(3, i) e_{min width} for the 1x3 network.
  const Architecture arch = Architecture::parse("1x3");
  const SubnetGammaFamily cap({3}, SubnetProvenance::proven,
                              [](int) { return Histogram::unit(3, 8); });
  const std::vector<SubnetGammaFamily> blocks{cap};
  const ComposedBound b = subnet_compose_bound(blocks, SubnetworkPartition::singletons(1), arch);
  EXPECT_EQ(b.bound, clip(cap(1), 1).l1_norm());
}

TEST(SubnetCompose, TopologyMismatch) {
  const Architecture arch = Architecture::parse("2x3x4");
  const std::vector<SubnetGammaFamily> blocks = {
      SubnetGammaFamily::from_composition(GammaFamily::by_name("star"), {3, 5})};
  EXPECT_THROW(subnet_compose_bound(blocks, SubnetworkPartition{{0, 2}}, arch), std::invalid_argument);
  const std::vector<SubnetGammaFamily> too_many(3, blocks.front());
  EXPECT_THROW(subnet_compose_bound(too_many, SubnetworkPartition{{0, 2}}, arch), std::invalid_argument);
}

TEST(SubnetCompose, EmpiricalFamilyNeedsExplicitPolicy) {
  const Architecture arch = Architecture::parse("1x3");
  const SubnetGammaFamily sampled({3}, SubnetProvenance::empirical,
                                  [](int) { return H({0, 1, 2, 1}); });
  const std::vector<SubnetGammaFamily> blocks{sampled};
  EXPECT_THROW(subnet_compose_bound(blocks, SubnetworkPartition::singletons(1), arch), std::domain_error);
  const ComposedBound b = subnet_compose_bound(blocks, SubnetworkPartition::singletons(1), arch,
                                               SoundnessPolicy::allow_empirical);
  EXPECT_TRUE(b.conjectured);
  EXPECT_EQ(b.bound, 4);
}

TEST(SubnetFamily, ProvenanceFollowsLayerFamily) {
  EXPECT_EQ(SubnetGammaFamily::from_layerwise(GammaFamily::by_name("star"), 4).provenance(),
            SubnetProvenance::proven);
  EXPECT_EQ(SubnetGammaFamily::from_composition(GammaFamily::by_name("star-conjecture"), {4}).provenance(),
            SubnetProvenance::conjectured);
  EXPECT_EQ(to_string(SubnetProvenance::empirical), "empirical-lower-bound");
  EXPECT_THROW(SubnetGammaFamily({}, SubnetProvenance::proven, [](int) { return Histogram(); }),
               std::invalid_argument);
}

}  // namespace
}  // namespace regionbound
