#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "pact/congruence.hpp"
#include "pact/functors.hpp"
#include "pact/fwords.hpp"
#include "pact/paction.hpp"
#include "pact/reduced.hpp"

namespace pact {

// Ill-formed or internally inconsistent input files.  Distinct from axiom
// violations, which validators report as strings.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path);  // throws SchemaError
std::string dump_deterministic(const nlohmann::json& j); // sorted keys, 2-space indent

nlohmann::json group_table_to_json(const FiniteGroup& g);
FiniteGroup group_table_from_json(const nlohmann::json& j);

nlohmann::json groupoid_to_json(const Groupoid& g);
Groupoid groupoid_from_json(const nlohmann::json& j);

nlohmann::json paction_to_json(const PartialAction& a);
PartialAction paction_from_json(const nlohmann::json& j);

nlohmann::json congruence_to_json(const PartialAction& a, const Congruence& c);
// Accepts generators; the result is closed.
Congruence congruence_from_json(const PartialAction& a, const nlohmann::json& j);

nlohmann::json pa_morphism_to_json(const PAMorphism& f, const PartialAction& from,
                                   const PartialAction& to);
PAMorphism pa_morphism_from_json(const nlohmann::json& j, const PartialAction& from,
                                 const PartialAction& to);

nlohmann::json quotient_hom_to_json(const Groupoid& g, const FiniteQuotientHom& q);
FiniteQuotientHom quotient_hom_from_json(const Groupoid& g, const nlohmann::json& j);

nlohmann::json fword_to_json(const Groupoid& g, const FWord& w);
FWord fword_from_json(const Groupoid& g, const nlohmann::json& j);
nlohmann::json uword_to_json(const Groupoid& g, const UWord& w);
UWord uword_from_json(const Groupoid& g, const nlohmann::json& j);

// Fibered set over a partial action's carrier, for lifting.
struct CoverData {
  std::vector<std::string> set;
  GroupoidAction act;
};
nlohmann::json cover_to_json(const PsiGroupoid& psi, const CoverData& cover);
CoverData cover_from_json(const PsiGroupoid& psi, const PartialAction& theta,
                          const nlohmann::json& j);

}  // namespace pact
