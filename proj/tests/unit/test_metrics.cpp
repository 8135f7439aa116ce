// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <sstream>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "random_dataset.hpp"
#include "rdfqa/metrics.hpp"
#include "rdfqa/report_io.hpp"
#include "rdfqa/vocabulary.hpp"
#include "synthetic.hpp"

using namespace rdfqa;
using rdfqa::testing::fam;
using rdfqa::testing::famP;
using rdfqa::testing::kFamily;
using rdfqa::testing::loadFamily;
using rdfqa::testing::withReplaced;
using rdfqa::testing::withTriples;

namespace {

const Iri kType{vocab::rdfType};

MetricReport run(const Dataset& d, const Dictionary& dict = rdfqa::testing::basicDictionary()) {
  return assess(d, dict);
}

std::uint64_t num(const MetricReport& r, MetricId id) { return r.find(id)->numerator; }

Dataset ttl(std::string_view body) {
  std::string text =
      "@prefix ex: <http://ex.org/> .\n"
      "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
      "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
      "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";
  text += body;
  return parseDataset(text, Format::Turtle, "t");
}

}  // namespace

TEST(MetricIds, CodesNamesAndParsing) {
  EXPECT_EQ(kAllMetrics.size(), 10u);
  EXPECT_EQ(metricCode(MetricId::M10_SmlCls), "M10");
  EXPECT_EQ(parseMetricId("m7"), MetricId::M7_FP);
  EXPECT_EQ(parseMetricId("ifp"), MetricId::M8_IFP);
  EXPECT_EQ(parseMetricId("Miss_Vlu"), MetricId::M1_MissVlu);
  EXPECT_FALSE(parseMetricId("M11"));
}

// ---- Family fixture ----

TEST(FamilyFixture, M1MatchesHandCount) {
  const auto r = run(loadFamily());
  const auto* m1 = r.find(MetricId::M1_MissVlu);
  EXPECT_EQ(m1->numerator, 37u);
  EXPECT_EQ(m1->denominator, 306u);
  EXPECT_DOUBLE_EQ(m1->value, 1.0 - 37.0 / 306.0);
  EXPECT_NEAR(m1->value, 0.8790, 0.0005);
  EXPECT_EQ(formatRounded(m1->value), "0.88");
  EXPECT_EQ(r.counts.classes, 18u);
  EXPECT_EQ(r.counts.properties, 17u);
  EXPECT_EQ(r.counts.instances, 7u);
}

TEST(FamilyFixture, CleanOnEveryOtherMetric) {
  const auto r = run(loadFamily());
  for (const auto id : kAllMetrics) {
    if (id == MetricId::M1_MissVlu) continue;
    EXPECT_EQ(num(r, id), 0u) << metricCode(id);
  }
  EXPECT_TRUE(r.flags.empty());
}

// Each single edit raises its metric's numerator by exactly one.
TEST(WorkedExamples, OutOfRangeSibling) {
  const auto base = loadFamily();
  const Triple before{fam("Math"), famP("hasSibling"), fam("Gemma")};
  const Triple after{fam("Math"), famP("hasSibling"), fam("MaleSex")};
  const auto r = run(withReplaced(base, before, after));
  EXPECT_EQ(num(r, MetricId::M2_OutVlu), num(run(base), MetricId::M2_OutVlu) + 1);
}

TEST(WorkedExamples, MisspelledFamilyName) {
  const auto base = loadFamily();
  const Triple before{fam("Gemma"), famP("hasFamilyName"), plainLiteral("Smith")};
  const Triple after{fam("Gemma"), famP("hasFamilyName"), plainLiteral("Smithp")};
  const auto dict = rdfqa::testing::basicDictionary();
  ASSERT_TRUE(dict.contains("smith"));
  ASSERT_FALSE(dict.contains("smithp"));
  const auto r = run(withReplaced(base, before, after), dict);
  EXPECT_EQ(num(r, MetricId::M3_MssplPrpVlu), num(run(base), MetricId::M3_MssplPrpVlu) + 1);
}

TEST(WorkedExamples, UndeclaredClass) {
  const auto base = loadFamily();
  const auto r = run(withTriples(base, {{fam("Ali"), kType, fam("human")}}));
  EXPECT_EQ(num(r, MetricId::M4_UndClsPrp), num(run(base), MetricId::M4_UndClsPrp) + 1);
}

TEST(WorkedExamples, DisjointMembership) {
  const auto base = loadFamily();
  const auto r = run(withTriples(base, {{fam("Ali"), kType, fam("Female")}}));
  EXPECT_EQ(num(r, MetricId::M5_DsjCls), num(run(base), MetricId::M5_DsjCls) + 1);
  EXPECT_EQ(r.find(MetricId::M5_DsjCls)->offenders, std::vector<Offender>{kFamily + "Ali"});
}

TEST(WorkedExamples, LiteralAndIriSibling) {
  const auto base = loadFamily();
  const auto r = run(withTriples(base, {{fam("Ali"), famP("hasSibling"), plainLiteral("Sara")}}));
  EXPECT_EQ(num(r, MetricId::M6_IncPrpVlu), num(run(base), MetricId::M6_IncPrpVlu) + 1);
}

TEST(WorkedExamples, DuplicateFunctionalValue) {
  const auto base = loadFamily();
  const auto r = run(withTriples(base, {{fam("Ali"), famP("hasMother"), fam("Mari")},
                                        {fam("Ali"), famP("hasMother"), fam("Sara")}}));
  EXPECT_EQ(num(r, MetricId::M7_FP), num(run(base), MetricId::M7_FP) + 1);
}

TEST(WorkedExamples, DuplicateInverseFunctionalSubject) {
  const auto base = loadFamily();
  const auto r = run(withTriples(base, {{fam("Mari"), famP("isMotherOf"), fam("Ali")},
                                        {fam("Sara"), famP("isMotherOf"), fam("Ali")}}));
  EXPECT_EQ(num(r, MetricId::M8_IFP), num(run(base), MetricId::M8_IFP) + 1);
}

TEST(WorkedExamples, MistypedBirthYear) {
  const auto base = loadFamily();
  const Triple before{fam("Gemma"), famP("hasBirthYear"), typedLiteral("1996", vocab::xsdInteger)};
  const Triple after{fam("Gemma"), famP("hasBirthYear"), typedLiteral("1996", vocab::xsdString)};
  const auto r = run(withReplaced(base, before, after));
  EXPECT_EQ(num(r, MetricId::M9_ImDT), num(run(base), MetricId::M9_ImDT) + 1);
  // the tag is wrong but the value is a valid integer
  EXPECT_EQ(num(r, MetricId::M2_OutVlu), 0u);
}

TEST(WorkedExamples, PersonHumanClone) {
  const auto base = loadFamily();
  const auto r = run(withTriples(base, {{fam("human"), kType, iri(vocab::owlClass)},
                                        {fam("Ali"), kType, fam("human")},
                                        {fam("Sara"), kType, fam("human")}}));
  const auto* m10 = r.find(MetricId::M10_SmlCls);
  EXPECT_EQ(m10->numerator, 2u);
  EXPECT_EQ(m10->denominator, 19u);
  EXPECT_DOUBLE_EQ(m10->value, 2.0 / 19.0);
  EXPECT_EQ(m10->offenders, (std::vector<Offender>{kFamily + "Person", kFamily + "human"}));
}

// ---- per-metric examples ----

TEST(M1, NoUsageIsMaximal) {
  const auto d = ttl("ex:C a owl:Class . ex:p a rdf:Property .");
  const auto v = run(d).find(MetricId::M1_MissVlu);
  EXPECT_EQ(v->value, 1.0);
}

TEST(M1, TwoByTwoWithThreeUses) {
  const auto d = ttl(
      "ex:C a owl:Class . ex:D a owl:Class . ex:p a rdf:Property . ex:q a rdf:Property .\n"
      "ex:x ex:p ex:y . ex:x ex:q \"v\" . ex:y ex:p ex:x . ex:x a ex:C .");
  const auto v = run(d).find(MetricId::M1_MissVlu);
  EXPECT_EQ(v->numerator, 3u);
  EXPECT_EQ(v->denominator, 4u);
  EXPECT_DOUBLE_EQ(v->value, 0.25);
}

TEST(M1, ClampedWhenUsageExceedsProduct) {
  const auto d = ttl("ex:C a owl:Class . ex:p a rdf:Property . ex:a ex:p ex:b . ex:b ex:p ex:a .");
  const auto r = run(d);
  const auto* v = r.find(MetricId::M1_MissVlu);
  EXPECT_TRUE(v->clamped);
  EXPECT_EQ(v->value, 0.0);
  EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), "Clamped: M1"), r.flags.end());
}

TEST(M2, NothingCheckableWithoutRanges) {
  const auto d = ttl("ex:p a rdf:Property . ex:x ex:p \"abc\" . ex:x ex:p ex:y .");
  EXPECT_EQ(run(d).find(MetricId::M2_OutVlu)->value, 0.0);
}

TEST(M2, IntegerRangeRejectsLetters) {
  const auto d = ttl("ex:q rdfs:range xsd:integer . ex:x ex:q \"abc\" . ex:x ex:q \"12\" .");
  const auto report = run(d);
  const auto* v = report.find(MetricId::M2_OutVlu);
  EXPECT_EQ(v->numerator, 1u);
  EXPECT_EQ(v->denominator, 3u);
  EXPECT_EQ(v->offenders, std::vector<Offender>{TripleRef{1}});
}

TEST(M2, UntypedObjectNotFlagged) {
  const auto d = ttl(
      "ex:C a owl:Class . ex:D a owl:Class . ex:p rdfs:range ex:C .\n"
      "ex:a ex:p ex:untyped . ex:a ex:p ex:d . ex:d a ex:D .");
  EXPECT_EQ(run(d).find(MetricId::M2_OutVlu)->numerator, 1u);
}

TEST(M2, UnknownDatatypeNeverFlags) {
  const auto d = ttl("ex:q rdfs:range ex:myType . ex:myType a rdfs:Datatype . ex:x ex:q \"anything\" .");
  EXPECT_EQ(run(d).find(MetricId::M2_OutVlu)->numerator, 0u);
}

TEST(M3, NoLiteralsNoMisspellings) {
  const auto d = ttl("ex:a ex:p ex:b .");
  EXPECT_EQ(run(d).find(MetricId::M3_MssplPrpVlu)->value, 0.0);
}

TEST(M3, AllTokensKnown) {
  Dictionary dict("mini");
  dict.add("john");
  dict.add("smith");
  const auto d = ttl("ex:a ex:name \"John Smith\" . ex:b ex:name \"John Smithe\" .");
  const auto report = run(d, dict);
  const auto* v = report.find(MetricId::M3_MssplPrpVlu);
  EXPECT_EQ(v->numerator, 1u);
  EXPECT_EQ(v->offenders, std::vector<Offender>{TripleRef{1}});
}

TEST(M3, ScopeAndTokenRules) {
  Dictionary dict("mini");
  dict.add("smith");
  const auto d = ttl(
      "ex:a ex:p \"Smithp\"@de .\n"                  // other language: skipped
      "ex:a ex:p \"Smithp\"^^xsd:token .\n"          // not a natural-language literal
      "ex:a ex:p \"x smith\" .\n"                     // single letters exempt
      "ex:a ex:p \"abc123 smith\" .\n"                // tokens with digits exempt
      "ex:a ex:p \"see http://zzz.example/qq\" .\n"   // IRIs skipped, 'see' unknown
      "ex:a ex:p \"Smithp\"@en-US .\n"                // English tag: checked
      "ex:a ex:p \"SMITH\"^^xsd:string .\n");         // case-insensitive
  const auto report = run(d, dict);
  const auto* v = report.find(MetricId::M3_MssplPrpVlu);
  EXPECT_EQ(v->offenders, (std::vector<Offender>{TripleRef{4}, TripleRef{5}}));
}

TEST(M3, EmptyDictionaryFlagsEveryCheckableToken) {
  const auto d = ttl("ex:a ex:p \"hello\" . ex:a ex:p \"12\" .");
  const auto r = run(d, Dictionary{});
  EXPECT_EQ(num(r, MetricId::M3_MssplPrpVlu), 1u);
  EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), "EmptyDictionary"), r.flags.end());
}

TEST(M4, AllDeclaredIsZero) {
  const auto d = ttl("ex:C a owl:Class . ex:p a rdf:Property . ex:x a ex:C ; ex:p ex:y .");
  EXPECT_EQ(run(d).find(MetricId::M4_UndClsPrp)->value, 0.0);
}

TEST(M4, UndeclaredPropertyAndClass) {
  const auto d = ttl("ex:x ex:undeclaredP ex:y . ex:x a ex:UndeclaredC .");
  const auto report = run(d);
  const auto* v = report.find(MetricId::M4_UndClsPrp);
  EXPECT_EQ(v->numerator, 2u);
  EXPECT_EQ(v->denominator, 2u);
}

TEST(M4, BuiltinsNeverUndeclared) {
  const auto d = ttl("ex:x rdfs:label \"x\" ; owl:sameAs ex:y ; a owl:Thing .");
  EXPECT_EQ(run(d).find(MetricId::M4_UndClsPrp)->numerator, 0u);
}

TEST(M5, NoDisjointnessIsZero) {
  const auto d = ttl("ex:A a owl:Class . ex:B a owl:Class . ex:i a ex:A , ex:B .");
  EXPECT_EQ(run(d).find(MetricId::M5_DsjCls)->value, 0.0);
}

TEST(M5, ThreeMutuallyDisjointCountsOnce) {
  const auto d = ttl(
      "ex:A owl:disjointWith ex:B , ex:C . ex:B owl:disjointWith ex:C .\n"
      "ex:i a ex:A , ex:B , ex:C . ex:j a ex:A .");
  const auto report = run(d);
  const auto* v = report.find(MetricId::M5_DsjCls);
  EXPECT_EQ(v->numerator, 1u);
  EXPECT_EQ(v->denominator, 2u);
}

TEST(M6, IdenticalTypesNoConflict) {
  const auto d = ttl("ex:a ex:p \"x\" , \"y\" . ex:a ex:q ex:b , ex:c .");
  EXPECT_EQ(run(d).find(MetricId::M6_IncPrpVlu)->numerator, 0u);
}

TEST(M6, TwoIrisOneLiteral) {
  const auto d = ttl("ex:a ex:p ex:b , ex:c , \"d\" .");
  EXPECT_EQ(run(d).find(MetricId::M6_IncPrpVlu)->numerator, 2u);
}

TEST(M6, DatatypesDiffer) {
  const auto d = ttl("ex:a ex:p \"1\"^^xsd:integer , \"1\" . ex:a ex:q \"x\" , \"x\"@en .");
  EXPECT_EQ(run(d).find(MetricId::M6_IncPrpVlu)->numerator, 2u);
}

TEST(M7, NoFunctionalIsZero) {
  const auto d = ttl("ex:p a rdf:Property . ex:a ex:p ex:b , ex:c .");
  EXPECT_EQ(run(d).find(MetricId::M7_FP)->value, 0.0);
}

TEST(M7, FourObjectsGiveThree) {
  const auto d = ttl("ex:f a owl:FunctionalProperty . ex:a ex:f ex:b , ex:c , ex:d , \"e\" .");
  EXPECT_EQ(run(d).find(MetricId::M7_FP)->numerator, 3u);
}

TEST(M8, NoInverseFunctionalIsZero) {
  const auto d = ttl("ex:p a rdf:Property . ex:a ex:p ex:z . ex:b ex:p ex:z .");
  EXPECT_EQ(run(d).find(MetricId::M8_IFP)->value, 0.0);
}

TEST(M8, FiveSubjectsShareEmptyValue) {
  const auto d = ttl(
      "ex:i a owl:InverseFunctionalProperty .\n"
      "ex:a ex:i \"\" . ex:b ex:i \"\" . ex:c ex:i \"\"@en . ex:d ex:i \"\"^^xsd:string . ex:e ex:i \"\" .");
  EXPECT_EQ(run(d).find(MetricId::M8_IFP)->numerator, 4u);
}

TEST(M9, PlainLiteralOnStringRange) {
  const auto d = ttl("ex:n rdfs:range xsd:string . ex:a ex:n \"x\" . ex:a ex:n \"y\"^^xsd:string .");
  EXPECT_EQ(run(d).find(MetricId::M9_ImDT)->numerator, 0u);
}

TEST(M9, DecisionTable) {
  const auto d = ttl(
      "ex:i rdfs:range xsd:integer . ex:s rdfs:range xsd:string . ex:l rdfs:range rdfs:Literal .\n"
      "ex:a ex:i \"5\" .\n"                     // plain on integer: flagged
      "ex:a ex:i \"5\"^^xsd:integer .\n"        // exact: fine
      "ex:a ex:i \"5\"^^xsd:int .\n"            // different tag: flagged
      "ex:a ex:s \"x\"@en .\n"                  // language-tagged on string: fine
      "ex:a ex:s \"1\"^^xsd:integer .\n"        // flagged
      "ex:a ex:l \"1\"^^xsd:integer .\n");      // rdfs:Literal accepts all
  const auto report = run(d);
  const auto* v = report.find(MetricId::M9_ImDT);
  EXPECT_EQ(v->offenders, (std::vector<Offender>{TripleRef{3}, TripleRef{5}, TripleRef{7}}));
}

TEST(M10, DistinctSetsAreZero) {
  const auto d = ttl("ex:A a owl:Class . ex:B a owl:Class . ex:x a ex:A . ex:y a ex:B .");
  EXPECT_EQ(run(d).find(MetricId::M10_SmlCls)->value, 0.0);
}

TEST(M10, ThreeIdenticalClasses) {
  const auto d = ttl(
      "ex:A a owl:Class . ex:B a owl:Class . ex:C a owl:Class . ex:D a owl:Class .\n"
      "ex:x a ex:A , ex:B , ex:C . ex:y a ex:A , ex:B , ex:C .");
  const auto report = run(d);
  const auto* v = report.find(MetricId::M10_SmlCls);
  EXPECT_EQ(v->numerator, 3u);
  EXPECT_EQ(v->denominator, 4u);
}

TEST(M10, SubclassRelatedNotSimilar) {
  const auto d = ttl(
      "ex:A a owl:Class . ex:B rdfs:subClassOf ex:A . ex:C rdfs:subClassOf ex:B .\n"
      "ex:x a ex:A , ex:C .");
  EXPECT_EQ(run(d).find(MetricId::M10_SmlCls)->numerator, 0u);
}

// ---- assess contract ----

TEST(Assess, EmptyDatasetFlagsDegenerate) {
  const auto r = run(Dataset{});
  ASSERT_EQ(r.metrics.size(), 10u);
  for (const auto& [id, v] : r.metrics) {
    EXPECT_EQ(v.value, 0.0) << metricCode(id);
    EXPECT_TRUE(v.degenerate) << metricCode(id);
  }
  for (const char* code : {"M1", "M5", "M10"}) {
    EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), std::string("DegenerateDenominator: ") + code),
              r.flags.end());
  }
}

TEST(Assess, SelectionContract) {
  AssessOptions opts;
  opts.selection = {MetricId::M7_FP};
  const auto r = assess(loadFamily(), Dictionary{}, opts);
  ASSERT_EQ(r.metrics.size(), 1u);
  EXPECT_TRUE(r.find(MetricId::M7_FP));
  EXPECT_TRUE(r.flags.empty());  // no EmptyDictionary warning without M3
}

TEST(Assess, DuplicatesRecorded) {
  const auto d = parseDataset("<http://a/s> <http://a/p> <http://a/o> .\n<http://a/s> <http://a/p> <http://a/o> .\n",
                              Format::NTriples, "dup");
  const auto r = run(d);
  EXPECT_EQ(r.duplicateCount, 1u);
  EXPECT_EQ(r.flags.front(), "DuplicateTriplesDropped: 1");
}

TEST(Assess, OffenderCapKeepsDocumentOrder) {
  AssessOptions opts;
  opts.offenderCap = 3;
  std::string body = "ex:f a owl:FunctionalProperty .\n";
  for (int i = 0; i < 10; ++i) body += "ex:a ex:f ex:o" + std::to_string(i) + " .\n";
  const auto r = assess(ttl(body), Dictionary{}, opts);
  const auto* v = r.find(MetricId::M7_FP);
  EXPECT_EQ(v->numerator, 9u);
  EXPECT_EQ(v->offenders, (std::vector<Offender>{TripleRef{2}, TripleRef{3}, TripleRef{4}}));
}

TEST(Assess, ParallelMatchesSequential) {
  const auto dict = rdfqa::testing::basicDictionary();
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = rdfqa::testing::randomDataset(seed);
    AssessOptions par;
    par.parallel = true;
    EXPECT_EQ(reportToJson(assess(d, dict)).dump(), reportToJson(assess(d, dict, par)).dump());
  }
  const auto big = rdfqa::testing::syntheticClean(5000);
  AssessOptions par;
  par.parallel = true;
  EXPECT_EQ(reportToJson(assess(big, dict)).dump(), reportToJson(assess(big, dict, par)).dump());
}

TEST(Assess, Deterministic) {
  const auto dict = rdfqa::testing::basicDictionary();
  const auto a = reportToJson(assess(loadFamily(), dict), nullptr).dump();
  const auto b = reportToJson(assess(loadFamily(), dict), nullptr).dump();
  EXPECT_EQ(a, b);
}

TEST(Assess, ScaleInvarianceOfZero) {
  const auto dict = rdfqa::testing::basicDictionary();
  const auto d = ttl(
      "ex:p a rdf:Property . ex:C a owl:Class . ex:D a owl:Class .\n"
      "ex:a ex:p ex:b , ex:c . ex:b ex:p ex:c . ex:a a ex:C , ex:D .");
  const auto r = assess(d, dict);
  EXPECT_EQ(r.find(MetricId::M5_DsjCls)->value, 0.0);
  EXPECT_EQ(r.find(MetricId::M7_FP)->value, 0.0);
  EXPECT_EQ(r.find(MetricId::M8_IFP)->value, 0.0);
}

// Every offender satisfies its metric's flagging predicate, and values stay in [0, 1].
TEST(Assess, OffenderSoundnessAndRange) {
  const auto dict = rdfqa::testing::basicDictionary();
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SCOPED_TRACE(seed);
    const auto d = rdfqa::testing::randomDataset(seed);
    const auto s = buildSchemaIndex(d);
    const auto ii = buildInstanceIndex(d, s);
    const auto r = assessIndexed(d, s, ii, dict);
    for (const auto& [id, v] : r.metrics) {
      ASSERT_GE(v.value, 0.0);
      ASSERT_LE(v.value, 1.0);
      for (const auto& o : v.offenders) {
        if (const auto* ref = std::get_if<TripleRef>(&o)) {
          ASSERT_LT(ref->index, d.size());
          const auto& t = d[ref->index];
          switch (id) {
            case MetricId::M2_OutVlu: ASSERT_TRUE(isOutOfRange(t, s, ii)); break;
            case MetricId::M3_MssplPrpVlu:
              ASSERT_TRUE(asLiteral(t.object) && isMisspelled(*asLiteral(t.object), dict));
              break;
            case MetricId::M4_UndClsPrp: ASSERT_GT(undefinedTermCount(t, s), 0); break;
            case MetricId::M6_IncPrpVlu: {
              bool conflict = false;
              for (const auto& u : d.triples()) {
                if (u.subject == t.subject && u.predicate == t.predicate &&
                    detail::termTypeKey(u.object) != detail::termTypeKey(t.object)) {
                  conflict = true;
                }
              }
              ASSERT_TRUE(conflict);
              break;
            }
            case MetricId::M7_FP: {
              ASSERT_TRUE(s.isFunctional(t.predicate.value));
              bool earlier = false;
              for (std::size_t j = 0; j < ref->index; ++j) {
                earlier |= d[j].subject == t.subject && d[j].predicate == t.predicate;
              }
              ASSERT_TRUE(earlier);
              break;
            }
            case MetricId::M8_IFP: {
              ASSERT_TRUE(s.isInverseFunctional(t.predicate.value));
              bool shared = false;
              for (const auto& u : d.triples()) {
                shared |= u.predicate == t.predicate && !(u.subject == t.subject) &&
                          inverseFunctionalObjectKey(u.object) == inverseFunctionalObjectKey(t.object);
              }
              ASSERT_TRUE(shared);
              break;
            }
            case MetricId::M9_ImDT: ASSERT_TRUE(hasImproperDatatype(t, s)); break;
            default: FAIL() << "unexpected triple offender for " << metricCode(id);
          }
        } else {
          const auto& name = std::get<std::string>(o);
          switch (id) {
            case MetricId::M1_MissVlu:
              ASSERT_TRUE(s.hasProperty(name));
              ASSERT_TRUE(ii.triplesUsing(name).empty());
              break;
            case MetricId::M5_DsjCls: ASSERT_TRUE(isInDisjointClasses(name, s, ii)); break;
            case MetricId::M10_SmlCls: ASSERT_TRUE(s.hasClass(name)); break;
            default: FAIL() << "unexpected IRI offender for " << metricCode(id);
          }
        }
      }
    }
  }
}

// ---- xsd lexical spaces ----

TEST(Xsd, LexicalValidators) {
  using namespace rdfqa::xsd;
  EXPECT_TRUE(isValidInteger("-12"));
  EXPECT_TRUE(isValidInteger(" +7 "));
  EXPECT_FALSE(isValidInteger("1.0"));
  EXPECT_FALSE(isValidInteger(""));
  EXPECT_TRUE(isValidDecimal("3.5"));
  EXPECT_TRUE(isValidDecimal(".5"));
  EXPECT_FALSE(isValidDecimal("1e3"));
  EXPECT_TRUE(isValidDouble("1e3"));
  EXPECT_TRUE(isValidDouble("INF"));
  EXPECT_TRUE(isValidDouble("NaN"));
  EXPECT_FALSE(isValidDouble("inf"));
  EXPECT_TRUE(isValidBoolean("0"));
  EXPECT_FALSE(isValidBoolean("TRUE"));
  EXPECT_TRUE(isValidDate("2020-02-29"));
  EXPECT_FALSE(isValidDate("2019-02-29"));
  EXPECT_FALSE(isValidDate("2020-02-30"));
  EXPECT_TRUE(isValidDate("2020-01-01Z"));
  EXPECT_TRUE(isValidDateTime("2020-01-01T10:20:30.5+02:00"));
  EXPECT_FALSE(isValidDateTime("2020-01-01"));
  EXPECT_TRUE(isValidGYear("1996"));
  EXPECT_FALSE(isValidGYear("96"));
  EXPECT_TRUE(isValidLexical("anything", vocab::xsdString));
  EXPECT_TRUE(isValidLexical("anything", "http://ex.org/unknown"));
  EXPECT_FALSE(isCheckable("http://ex.org/unknown"));
}

TEST(Tokens, CheckableTokens) {
  const auto toks = checkableTokens("Hello, world! x a1b http://e.org/zz it's");
  std::vector<std::string> got(toks.begin(), toks.end());
  EXPECT_NE(std::find(got.begin(), got.end(), "Hello"), got.end());
  EXPECT_NE(std::find(got.begin(), got.end(), "world"), got.end());
  EXPECT_EQ(std::find(got.begin(), got.end(), "x"), got.end());
  EXPECT_EQ(std::find(got.begin(), got.end(), "a1b"), got.end());
  EXPECT_EQ(std::find(got.begin(), got.end(), "zz"), got.end());
}

// ---- report I/O ----

TEST(ReportIo, JsonRoundTrip) {
  const auto d = withTriples(loadFamily(), {{fam("Ali"), kType, fam("Female")}});
  const auto r = run(d);
  std::stringstream ss;
  writeReportJson(r, ss, &d);
  const auto back = readReportJson(ss);
  EXPECT_EQ(reportToJson(back).dump(), reportToJson(r).dump());
  EXPECT_EQ(back.counts, r.counts);
  EXPECT_EQ(back.find(MetricId::M1_MissVlu)->value, r.find(MetricId::M1_MissVlu)->value);
}

TEST(ReportIo, JsonShape) {
  const auto j = reportToJson(run(loadFamily()));
  for (const char* key : {"datasetId", "toolVersion", "dictionaryId", "counts", "duplicateCount", "flags", "metrics"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["metrics"].size(), 10u);
  EXPECT_EQ(j["metrics"]["M1"]["numerator"], 37);
}

TEST(ReportIo, CsvParityWithJson) {
  const auto dict = rdfqa::testing::basicDictionary();
  std::vector<MetricReport> reports;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) reports.push_back(assess(rdfqa::testing::randomDataset(seed), dict));
  reports.push_back(assess(loadFamily(), dict));
  std::stringstream ss;
  writeReportsCsv(reports, ss);
  const auto back = readReportsCsv(ss);
  ASSERT_EQ(back.size(), reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(back[i].datasetId, reports[i].datasetId);
    for (const auto& [id, v] : reports[i].metrics) {
      EXPECT_EQ(back[i].find(id)->value, v.value) << i << " " << metricCode(id);
    }
  }
}

TEST(ReportIo, CsvRejectsMixedSelections) {
  AssessOptions opts;
  opts.selection = {MetricId::M1_MissVlu};
  const std::vector<MetricReport> reports{run(loadFamily()), assess(loadFamily(), Dictionary{}, opts)};
  std::stringstream ss;
  EXPECT_THROW(writeReportsCsv(reports, ss), MetricMismatch);
}

TEST(ReportIo, CsvEscaping) {
  EXPECT_EQ(csvField("plain"), "plain");
  EXPECT_EQ(csvField("a,b"), "\"a,b\"");
  EXPECT_EQ(csvField("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(detail::splitCsvLine("\"a,b\",c,\"x\"\"y\""), (std::vector<std::string>{"a,b", "c", "x\"y"}));
}

TEST(ReportIo, TableRoundsToHundredths) {
  std::stringstream ss;
  writeReportsTable({run(loadFamily())}, ss);
  const auto text = ss.str();
  EXPECT_NE(text.find("0.88"), std::string::npos);
  EXPECT_EQ(text.find("0.879"), std::string::npos);
  EXPECT_EQ(formatRounded(-0.0001), "0.00");
  EXPECT_EQ(formatRounded(0.126), "0.13");
  EXPECT_EQ(formatExact(0.1), "0.1");
}
