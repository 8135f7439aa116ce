// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace rdfqa {

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view owl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
}  // namespace ns

namespace vocab {
inline const std::string rdfType = std::string(ns::rdf) + "type";
inline const std::string rdfProperty = std::string(ns::rdf) + "Property";
inline const std::string rdfFirst = std::string(ns::rdf) + "first";
inline const std::string rdfRest = std::string(ns::rdf) + "rest";
inline const std::string rdfNil = std::string(ns::rdf) + "nil";
inline const std::string rdfLangString = std::string(ns::rdf) + "langString";

inline const std::string rdfsClass = std::string(ns::rdfs) + "Class";
inline const std::string rdfsSubClassOf = std::string(ns::rdfs) + "subClassOf";
inline const std::string rdfsSubPropertyOf = std::string(ns::rdfs) + "subPropertyOf";
inline const std::string rdfsDomain = std::string(ns::rdfs) + "domain";
inline const std::string rdfsRange = std::string(ns::rdfs) + "range";
inline const std::string rdfsLiteral = std::string(ns::rdfs) + "Literal";

inline const std::string owlClass = std::string(ns::owl) + "Class";
inline const std::string owlObjectProperty = std::string(ns::owl) + "ObjectProperty";
inline const std::string owlDatatypeProperty = std::string(ns::owl) + "DatatypeProperty";
inline const std::string owlFunctionalProperty = std::string(ns::owl) + "FunctionalProperty";
inline const std::string owlInverseFunctionalProperty =
    std::string(ns::owl) + "InverseFunctionalProperty";
inline const std::string owlDisjointWith = std::string(ns::owl) + "disjointWith";
inline const std::string owlComplementOf = std::string(ns::owl) + "complementOf";
inline const std::string owlEquivalentClass = std::string(ns::owl) + "equivalentClass";
inline const std::string owlEquivalentProperty = std::string(ns::owl) + "equivalentProperty";
inline const std::string owlInverseOf = std::string(ns::owl) + "inverseOf";

inline const std::string xsdString = std::string(ns::xsd) + "string";
inline const std::string xsdToken = std::string(ns::xsd) + "token";
inline const std::string xsdInteger = std::string(ns::xsd) + "integer";
inline const std::string xsdDecimal = std::string(ns::xsd) + "decimal";
inline const std::string xsdDouble = std::string(ns::xsd) + "double";
inline const std::string xsdBoolean = std::string(ns::xsd) + "boolean";
inline const std::string xsdDate = std::string(ns::xsd) + "date";
inline const std::string xsdDateTime = std::string(ns::xsd) + "dateTime";
inline const std::string xsdGYear = std::string(ns::xsd) + "gYear";
inline const std::string xsdAnyUri = std::string(ns::xsd) + "anyURI";
}  // namespace vocab

// Namespaces whose terms are never reported as undeclared and never counted
// as classes or instances. Callers may add more, such as an annotation
// vocabulary used across a project.
struct Vocabulary {
  std::vector<std::string> builtinNamespaces{std::string(ns::rdf), std::string(ns::rdfs),
                                             std::string(ns::owl), std::string(ns::xsd)};

  bool isBuiltin(std::string_view iri) const {
    return std::any_of(builtinNamespaces.begin(), builtinNamespaces.end(),
                       [&](const std::string& prefix) { return iri.starts_with(prefix); });
  }
};

// Datatype IRIs: anything in xsd plus the rdf/rdfs literal types.
inline bool isDatatypeIri(std::string_view iri) {
  if (iri.starts_with(ns::xsd)) return true;
  if (iri == vocab::rdfsLiteral) return true;
  if (!iri.starts_with(ns::rdf)) return false;
  const auto local = iri.substr(ns::rdf.size());
  return local == "langString" || local == "PlainLiteral" || local == "XMLLiteral" ||
         local == "HTML" || local == "JSON";
}

// Predicates whose triples are schema axioms rather than instance data.
inline bool isAxiomPredicate(std::string_view iri) {
  return iri == vocab::rdfsSubClassOf || iri == vocab::rdfsSubPropertyOf ||
         iri == vocab::rdfsDomain || iri == vocab::rdfsRange || iri == vocab::owlDisjointWith ||
         iri == vocab::owlComplementOf || iri == vocab::owlEquivalentClass ||
         iri == vocab::owlEquivalentProperty || iri == vocab::owlInverseOf;
}

}  // namespace rdfqa
