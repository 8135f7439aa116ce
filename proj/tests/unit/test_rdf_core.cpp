// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "random_dataset.hpp"
#include "rdfqa/dataset.hpp"
#include "rdfqa/instance_index.hpp"
#include "rdfqa/schema_index.hpp"
#include "rdfqa/vocabulary.hpp"
#include "synthetic.hpp"

using namespace rdfqa;
using rdfqa::testing::fam;
using rdfqa::testing::loadFamily;

namespace {

Dataset nt(std::string_view text) { return parseDataset(text, Format::NTriples, "t"); }
Dataset ttl(std::string_view text) { return parseDataset(text, Format::Turtle, "t"); }

}  // namespace

TEST(Parse, SingleTriple) {
  const auto d = nt("<http://a/s> <http://a/p> <http://a/o> .\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].subject, iri("http://a/s"));
  EXPECT_EQ(d[0].predicate.value, "http://a/p");
  EXPECT_EQ(d[0].object, iri("http://a/o"));
  EXPECT_EQ(d.duplicateCount(), 0u);
}

TEST(Parse, DuplicateDropped) {
  const auto d = nt(
      "<http://a/s> <http://a/p> \"x\" .\n"
      "<http://a/s> <http://a/p> \"x\" .\n");
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d.duplicateCount(), 1u);
}

TEST(Parse, EmptyDocument) {
  EXPECT_TRUE(nt("").empty());
  EXPECT_TRUE(nt("# only a comment\n\n").empty());
  EXPECT_TRUE(ttl("@prefix a: <http://a/> .").empty());
}

TEST(Parse, NTriplesLiteralForms) {
  const auto d = nt(
      "_:b1 <http://a/p> \"plain\" .\n"
      "_:b1 <http://a/p> \"hello\"@en-GB .\n"
      "_:b1 <http://a/p> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
      "_:b1 <http://a/p> \"tab\\there \\\"q\\\" \\u00E9\" .\n");
  ASSERT_EQ(d.size(), 4u);
  EXPECT_EQ(d[0].subject, blank("b1"));
  EXPECT_EQ(d[0].object, plainLiteral("plain"));
  EXPECT_EQ(d[1].object, langLiteral("hello", "en-GB"));
  EXPECT_EQ(d[2].object, typedLiteral("5", vocab::xsdInteger));
  EXPECT_EQ(asLiteral(d[3].object)->lexical, "tab\there \"q\" \xC3\xA9");
}

TEST(Parse, TurtleFeatures) {
  const auto d = ttl(R"(
    @prefix ex: <http://ex.org/> .
    PREFIX xsd: <http://www.w3.org/2001/XMLSchema#>
    @base <http://base.org/dir/> .
    ex:s a ex:C ;
      ex:p 1, 2.5, 1e3, true ;
      ex:q "x"@en, 'y', """multi
line""" ;
      ex:r <rel> , [ ex:inner "v" ] ;
      ex:list ( ex:a ex:b ) .
  )");
  std::vector<Triple> ts(d.triples().begin(), d.triples().end());
  auto has = [&](const Term& s, const std::string& p, const Term& o) {
    return std::find(ts.begin(), ts.end(), Triple{s, Iri{p}, o}) != ts.end();
  };
  const Term s = iri("http://ex.org/s");
  EXPECT_TRUE(has(s, vocab::rdfType, iri("http://ex.org/C")));
  EXPECT_TRUE(has(s, "http://ex.org/p", typedLiteral("1", vocab::xsdInteger)));
  EXPECT_TRUE(has(s, "http://ex.org/p", typedLiteral("2.5", vocab::xsdDecimal)));
  EXPECT_TRUE(has(s, "http://ex.org/p", typedLiteral("1e3", vocab::xsdDouble)));
  EXPECT_TRUE(has(s, "http://ex.org/p", typedLiteral("true", vocab::xsdBoolean)));
  EXPECT_TRUE(has(s, "http://ex.org/q", langLiteral("x", "en")));
  EXPECT_TRUE(has(s, "http://ex.org/q", plainLiteral("y")));
  EXPECT_TRUE(has(s, "http://ex.org/q", plainLiteral("multi\nline")));
  EXPECT_TRUE(has(s, "http://ex.org/r", iri("http://base.org/dir/rel")));
  // 11 on ex:s, one inside the property list, two cells of two triples each
  EXPECT_EQ(std::count_if(ts.begin(), ts.end(),
                          [](const Triple& t) { return t.predicate.value == vocab::rdfFirst; }),
            2);
  EXPECT_EQ(ts.size(), 11u + 1u + 4u);
}

TEST(Parse, SyntaxErrorReportsPosition) {
  try {
    nt("<http://a/s> <http://a/p> <http://a/o> .\n<http://a/s> <http://a/p> .\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GE(e.column(), 1u);
  }
  EXPECT_THROW(nt("<http://a/s> <http://a/p> \"unterminated .\n"), SyntaxError);
  EXPECT_THROW(nt("<relative> <http://a/p> <http://a/o> .\n"), SyntaxError);
  EXPECT_THROW(ttl("ex:s ex:p ex:o ."), SyntaxError);  // undeclared prefix
  EXPECT_THROW(ttl("@prefix ex: <http://ex.org/> . ex:s ex:p ex:o"), SyntaxError);
}

TEST(Parse, SyntaxErrorColumn) {
  try {
    nt("<http://a/s> <http://a/p> ?x .\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 27u);
  }
}

TEST(Serialize, EmptyDatasetIsEmpty) { EXPECT_EQ(serializeDataset(Dataset{}), ""); }

TEST(Serialize, FamilyRoundTrip) {
  const auto d = loadFamily();
  const auto text = serializeDataset(d);
  const auto back = nt(text);
  ASSERT_EQ(back.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(back[i], d[i]) << i;
  EXPECT_EQ(serializeDataset(back), text);
}

TEST(Serialize, RandomRoundTripProperty) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = rdfqa::testing::randomDataset(seed);
    const auto text = serializeDataset(d);
    const auto back = nt(text);
    ASSERT_EQ(back.size(), d.size()) << seed;
    for (std::size_t i = 0; i < d.size(); ++i) ASSERT_EQ(back[i], d[i]) << seed << ":" << i;
    ASSERT_EQ(serializeDataset(back), text);
  }
}

TEST(Serialize, EscapesControlAndQuotes) {
  const Dataset d("e", {{iri("http://a/s"), Iri{"http://a/p"}, plainLiteral("a\"b\\c\nd\re\x01")}});
  const auto text = serializeDataset(d);
  EXPECT_EQ(text, "<http://a/s> <http://a/p> \"a\\\"b\\\\c\\nd\\re\\u0001\" .\n");
  EXPECT_EQ(nt(text)[0], d[0]);
}

TEST(SchemaIndex, FamilyCounts) {
  const auto d = loadFamily();
  const auto s = buildSchemaIndex(d);
  EXPECT_EQ(s.classes().size(), 18u);
  EXPECT_EQ(s.properties().size(), 17u);
  std::size_t object = 0;
  std::size_t datatype = 0;
  for (const auto& p : s.properties()) {
    if (s.kindOf(p) == PropertyKind::ObjectProperty) ++object;
    if (s.kindOf(p) == PropertyKind::DatatypeProperty) ++datatype;
  }
  EXPECT_EQ(object, 11u);
  EXPECT_EQ(datatype, 6u);
  EXPECT_TRUE(s.isFunctional(rdfqa::testing::kFamily + "hasMother"));
  EXPECT_TRUE(s.isInverseFunctional(rdfqa::testing::kFamily + "isMotherOf"));
  EXPECT_TRUE(s.isSubclassOf(rdfqa::testing::kFamily + "Father", rdfqa::testing::kFamily + "Person"));
}

TEST(SchemaIndex, EmptyWithoutDeclarations) {
  const auto d = nt("<http://a/x> <http://a/p> <http://a/y> .\n<http://a/x> <http://a/q> \"v\" .\n");
  const auto s = buildSchemaIndex(d);
  EXPECT_TRUE(s.classes().empty());
  EXPECT_TRUE(s.properties().empty());
}

TEST(SchemaIndex, DisjointClosure) {
  const auto d = ttl(R"(
    @prefix ex: <http://ex.org/> .
    @prefix owl: <http://www.w3.org/2002/07/owl#> .
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    ex:A owl:disjointWith ex:B .
    ex:C rdfs:subClassOf ex:A .
  )");
  const auto s = buildSchemaIndex(d);
  const std::set<ClassPair> expected{makeClassPair("http://ex.org/A", "http://ex.org/B"),
                                     makeClassPair("http://ex.org/C", "http://ex.org/B")};
  EXPECT_EQ(s.disjointPairs(), expected);
  EXPECT_TRUE(s.areDisjoint("http://ex.org/B", "http://ex.org/C"));
  EXPECT_FALSE(s.areDisjoint("http://ex.org/A", "http://ex.org/C"));
}

TEST(SchemaIndex, ComplementCountsAsDisjoint) {
  const auto d = ttl(R"(
    @prefix ex: <http://ex.org/> .
    @prefix owl: <http://www.w3.org/2002/07/owl#> .
    ex:A owl:complementOf ex:B .
  )");
  const auto s = buildSchemaIndex(d);
  EXPECT_TRUE(s.areDisjoint("http://ex.org/A", "http://ex.org/B"));
  EXPECT_TRUE(s.areDisjoint("http://ex.org/B", "http://ex.org/A"));
}

TEST(SchemaIndex, KindFromRange) {
  const auto d = ttl(R"(
    @prefix ex: <http://ex.org/> .
    @prefix owl: <http://www.w3.org/2002/07/owl#> .
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    @prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
    ex:C a owl:Class .
    ex:d rdfs:range xsd:integer .
    ex:o rdfs:range ex:C .
    ex:u rdfs:domain ex:C .
  )");
  const auto s = buildSchemaIndex(d);
  EXPECT_EQ(s.kindOf("http://ex.org/d"), PropertyKind::DatatypeProperty);
  EXPECT_EQ(s.kindOf("http://ex.org/o"), PropertyKind::ObjectProperty);
  EXPECT_EQ(s.kindOf("http://ex.org/u"), PropertyKind::UnknownKind);
  EXPECT_FALSE(s.hasClass(vocab::xsdInteger));
}

TEST(InstanceIndex, FamilyInstances) {
  const auto d = loadFamily();
  const auto s = buildSchemaIndex(d);
  const auto ii = buildInstanceIndex(d, s);
  EXPECT_EQ(ii.instances().size(), 7u);
  const auto& ali = ii.classesOf(rdfqa::testing::kFamily + "Ali");
  EXPECT_EQ(ali.size(), 2u);
}

TEST(InstanceIndex, NoTypeTriplesNoInstances) {
  const auto d = nt("<http://a/x> <http://a/p> <http://a/y> .\n");
  const auto ii = buildInstanceIndex(d, buildSchemaIndex(d));
  EXPECT_TRUE(ii.instances().empty());
}

TEST(InstanceIndex, SetSemantics) {
  const auto d = nt(
      "<http://a/x> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://a/C> .\n"
      "<http://a/x> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://a/D> .\n"
      "_:b <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://a/C> .\n"
      "<http://a/C> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
      "<http://www.w3.org/2002/07/owl#Class> .\n");
  const auto ii = buildInstanceIndex(d, buildSchemaIndex(d));
  EXPECT_EQ(ii.instances().size(), 1u);
  EXPECT_EQ(ii.classesOf("http://a/x"), (std::vector<std::string>{"http://a/C", "http://a/D"}));
  // keyed by every rdf:type object, owl:Class included
  EXPECT_EQ(ii.typeObjectTriples().size(), 3u);
  EXPECT_EQ(ii.typeTriplesWithObject("<http://a/C>"), (std::vector<std::size_t>{0, 2}));
}

namespace {

void checkIndexInvariants(const Dataset& d) {
  const Vocabulary vocab;
  const auto s = buildSchemaIndex(d);
  const auto ii = buildInstanceIndex(d, s);

  std::set<std::string> fromMembers;
  for (const auto& [cls, members] : ii.membership()) {
    for (const auto& m : members) {
      fromMembers.insert(m);
      const auto& back = ii.classesOf(m);
      ASSERT_NE(std::find(back.begin(), back.end(), cls), back.end());
    }
  }
  for (const auto& i : ii.instances()) {
    ASSERT_TRUE(fromMembers.count(i));
    for (const auto& c : ii.classesOf(i)) {
      const auto& members = ii.membersOf(c);
      ASSERT_NE(std::find(members.begin(), members.end(), i), members.end());
    }
  }
  ASSERT_EQ(fromMembers.size(), ii.instances().size());

  std::size_t total = 0;
  for (const auto& [p, idx] : ii.triplesByPredicate()) total += idx.size();
  ASSERT_EQ(total, d.size());

  for (const auto& c : s.classes()) ASSERT_FALSE(vocab.isBuiltin(c)) << c;
  for (const auto& i : ii.instances()) ASSERT_FALSE(vocab.isBuiltin(i)) << i;
  for (const auto& p : s.functional()) ASSERT_TRUE(s.hasProperty(p));
  for (const auto& p : s.inverseFunctional()) ASSERT_TRUE(s.hasProperty(p));
  for (const auto& [p, _] : s.domains()) ASSERT_TRUE(s.hasProperty(p));
  for (const auto& [p, _] : s.ranges()) ASSERT_TRUE(s.hasProperty(p));
  for (const auto& [a, b] : s.disjointPairs()) {
    ASSERT_TRUE(s.areDisjoint(a, b));
    ASSERT_TRUE(s.areDisjoint(b, a));
  }
}

}  // namespace

TEST(IndexProperties, RandomDatasets) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SCOPED_TRACE(seed);
    checkIndexInvariants(rdfqa::testing::randomDataset(seed));
  }
}

TEST(IndexProperties, Fixtures) {
  checkIndexInvariants(loadFamily());
  checkIndexInvariants(rdfqa::testing::syntheticClean(500));
}

TEST(IndexProperties, BuiltinTypedSubjectsAreNotInstances) {
  const auto d = ttl(R"(
    @prefix owl: <http://www.w3.org/2002/07/owl#> .
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    owl:Thing a owl:Class .
    <http://ex.org/x> a rdfs:Resource .
  )");
  const auto s = buildSchemaIndex(d);
  const auto ii = buildInstanceIndex(d, s);
  EXPECT_TRUE(s.classes().empty());
  EXPECT_TRUE(ii.instances().empty());
}

TEST(Synthetic, ExactSizeAndDeterministic) {
  for (std::size_t n : {60u, 100u, 1000u}) {
    const auto a = rdfqa::testing::syntheticClean(n);
    EXPECT_EQ(a.size(), n);
    EXPECT_EQ(a.duplicateCount(), 0u);
    EXPECT_EQ(serializeDataset(a), serializeDataset(rdfqa::testing::syntheticClean(n)));
  }
}
