#include <gtest/gtest.h>

#include "pangular/error.hpp"
#include "pangular/serialize.hpp"

using namespace pangular;

TEST(Serialize, NormRoundTrip) {
  for (const NormSpec& spec :
       {NormSpec::l1(), NormSpec::linf(), NormSpec::lp(3.5), NormSpec::weighted_lp({1.0, 2.0}, 1.5),
        NormSpec::gram(2, {2.0, 0.5, 0.5, 1.0})}) {
    const NormSpec back = norm_from_json(norm_to_json(spec));
    EXPECT_EQ(back.name(), spec.name());
    EXPECT_EQ(norm_to_json(back), norm_to_json(spec));
  }
}

TEST(Serialize, ParseNormShorthands) {
  EXPECT_EQ(parse_norm("l1").name(), NormSpec::l1().name());
  EXPECT_EQ(parse_norm("lp:4").name(), NormSpec::lp(4.0).name());
  EXPECT_TRUE(parse_norm(R"({"kind":"gram","gram":[[1,0],[0,1]]})").has_inner_product());
  EXPECT_THROW(parse_norm("nonsense"), Error);
}

TEST(Serialize, ParseVector) {
  EXPECT_EQ(parse_vector("1,2.5,-3"), (Vector{1.0, 2.5, -3.0}));
  EXPECT_EQ(parse_vector("[1, 2]"), (Vector{1.0, 2.0}));
  EXPECT_THROW(parse_vector("1,,2"), Error);
}

TEST(Serialize, DoublesRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 18.357559750685819}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Serialize, CsvLayout) {
  const CsvTable t{{"note"}, {"a", "b"}, {{1.0, 0.5}}};
  EXPECT_EQ(to_csv(t), "# note\na,b\n1,0.5\n");
}
