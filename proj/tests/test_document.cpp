#include <gtest/gtest.h>

#include "menv/document.hpp"
#include "support.hpp"

using namespace menv;
using namespace menv::testing;

namespace {

void expect_rejected(const std::string& text) {
  EXPECT_THROW(deserialize(text), DocumentError) << text;
}

}  // namespace

TEST(Document, SchemaInstance) {
  EXPECT_EQ(serialize(mono(0, 0, 0, 1, 2)), R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,1,2],"coeff":["1"]}]})");
  EXPECT_EQ(serialize(Element(), GammaMode::instantiated(Rational(2, 3))), R"({"gamma":"2/3","terms":[]})");
  EXPECT_EQ(serialize(g(Rational(-1, 2), 0, 3) * A), R"({"gamma":"symbolic","terms":[{"mono":[1,0,0,0,0],"coeff":["-1/2","0","3"]}]})");
}

TEST(Document, TermsSortedByExponentTuple) {
  EXPECT_EQ(serialize(E + A + D),
            R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,0,1],"coeff":["1"]},{"mono":[0,0,0,1,0],"coeff":["1"]},)"
            R"({"mono":[1,0,0,0,0],"coeff":["1"]}]})");
}

TEST(Document, RoundTrip) {
  Rng rng(19);
  for (int n = 0; n < 100; ++n) {
    const Element x = random_element(rng, 20, 5);
    const std::string text = serialize(x);
    const ElementDocument doc = deserialize(text);
    EXPECT_TRUE(doc.gamma.is_symbolic());
    EXPECT_EQ(doc.element, x);
    EXPECT_EQ(serialize(doc.element, doc.gamma), text);
  }
}

TEST(Document, InstantiatedRoundTrip) {
  const Element x = g(Rational(7, 3)) * mono(2, 0, 1, 0, 0) - B;
  const ElementDocument doc = deserialize(serialize(x, GammaMode::instantiated(Rational(-3, 4))));
  EXPECT_EQ(doc.gamma, GammaMode::instantiated(Rational(-3, 4)));
  EXPECT_EQ(doc.element, x);
}

TEST(Document, AcceptsReorderedKeysAndWhitespace) {
  const ElementDocument doc =
      deserialize(R"( { "terms" : [ { "coeff" : ["2"], "mono" : [0,1,0,0,0] } ], "gamma" : "symbolic" } )");
  EXPECT_EQ(doc.element, g(2) * B);
}

TEST(Document, SchemaViolations) {
  expect_rejected("");
  expect_rejected("[]");
  expect_rejected("{not json");
  expect_rejected(R"({"gamma":"symbolic"})");
  expect_rejected(R"({"terms":[]})");
  expect_rejected(R"({"gamma":"symbolic","terms":[],"extra":1})");
  expect_rejected(R"({"gamma":"0","terms":[]})");
  expect_rejected(R"({"gamma":"x/y","terms":[]})");
  expect_rejected(R"({"gamma":3,"terms":[]})");
  expect_rejected(R"({"gamma":"symbolic","terms":{}})");
  expect_rejected(R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,1],"coeff":["1"]}]})");
  expect_rejected(R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,1,0,0],"coeff":["1"]}]})");
  expect_rejected(R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,-1,0],"coeff":["1"]}]})");
  expect_rejected(R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,1.5,0],"coeff":["1"]}]})");
  expect_rejected(R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,99999999999,0],"coeff":["1"]}]})");
  expect_rejected(R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,1,0],"coeff":[]}]})");
  expect_rejected(R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,1,0],"coeff":["1","0"]}]})");
  expect_rejected(R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,1,0],"coeff":[1]}]})");
  expect_rejected(R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,1,0],"coeff":["1/0"]}]})");
  expect_rejected(R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,1,0]}]})");
  expect_rejected(R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,1,0],"coeff":["1"],"x":0}]})");
  expect_rejected(R"({"gamma":"2","terms":[{"mono":[0,0,0,1,0],"coeff":["1","1"]}]})");
  expect_rejected(
      R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,1,0],"coeff":["1"]},{"mono":[0,0,0,1,0],"coeff":["2"]}]})");
}

TEST(Document, ErrorsAreDescriptive) {
  try {
    deserialize(R"({"gamma":"symbolic","terms":[{"mono":[0,0,0,1],"coeff":["1"]}]})");
    FAIL();
  } catch (const DocumentError& e) {
    EXPECT_NE(std::string(e.what()).find("mono"), std::string::npos) << e.what();
  }
}
