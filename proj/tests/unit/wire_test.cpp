#include <gtest/gtest.h>

#include "generators.hpp"
#include "seqnorm/error.hpp"
#include "seqnorm/expression.hpp"
#include "seqnorm/wire.hpp"

namespace seqnorm {
namespace {

TEST(VectorJson, DenseAndSparseInputs) {
  const std::vector<double> dense{1.0, 0.0, -2.5};
  EXPECT_EQ(vector_from_json("[1, 0, -2.5]"), FiniteVector::from_dense(dense));
  EXPECT_EQ(vector_from_json("[[3, -2.5], [1, 1]]"), FiniteVector::from_dense(dense));
  EXPECT_EQ(vector_from_json("[]"), FiniteVector{});
}

TEST(VectorJson, CanonicalSparseOutput) {
  EXPECT_EQ(vector_to_json(vector_from_json("[0, 2, 0, -1]")), "[[2,2.0],[4,-1.0]]");
  EXPECT_EQ(vector_to_json(FiniteVector{}), "[]");
}

TEST(VectorJson, RejectsMalformedInput) {
  for (const char* bad : {"", "[1,", "{\"a\":1}", "[[0, 1]]", "[[1, 1], [1, 2]]", "[[1]]", "[\"x\"]", "[[1.5, 2]]"}) {
    EXPECT_THROW(vector_from_json(bad), ParseError) << bad;
  }
}

TEST(VectorJson, RoundTrip) {
  testing::Gen gen(71);
  for (int s = 0; s < 500; ++s) {
    const FiniteVector v = gen.vector();
    EXPECT_EQ(vector_from_json(vector_to_json(v)), v);
  }
}

TEST(DescriptorJson, SpotValue) {
  const NormDescriptor d = parse_space("davis(sup, l1, 2)");
  EXPECT_EQ(descriptor_from_json(R"({"kind":"davis","E":{"kind":"sup"},"F":{"kind":"l1"},"m":2})"), d);
  EXPECT_EQ(descriptor_from_json(descriptor_to_json(d)), d);
}

TEST(DescriptorJson, RoundTripOnGeneratedTrees) {
  testing::Gen gen(72);
  for (int s = 0; s < 500; ++s) {
    const NormDescriptor d = gen.descriptor(3);
    EXPECT_EQ(descriptor_from_json(descriptor_to_json(d)), d) << print_space(d);
  }
}

TEST(DescriptorJson, RejectsMalformedInput) {
  for (const char* bad : {"{}", "{\"kind\":\"lp\"}", "{\"kind\":\"lp\",\"p\":0.5}", "{\"kind\":\"nope\"}",
                          "{\"kind\":\"dayAug\"}", "[1]", "{\"kind\":\"Y\",\"E\":{\"kind\":\"sup\"}}"}) {
    EXPECT_THROW(descriptor_from_json(bad), ParseError) << bad;
  }
}

}  // namespace
}  // namespace seqnorm
