#pragma once

// Structured (JSON) form of every engine result, the OutputDocument
// envelope used by the CLI, and a plain-text rendering of any document.
// Rationals are "num/den" strings; simple-root and ω indices are 1-based.

#include <string>

#include "json.hpp"
#include "knf/classify.hpp"
#include "knf/kostant.hpp"
#include "knf/reps.hpp"

namespace knf {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json label_json(const IrrepLabel& l);
IrrepLabel label_from_json(const Json& j);

Json domain_json(const DomainSpec& d);

Json mu_report_json(const MuReport& r);
MuReport mu_report_from_json(const Json& j);

/// MuReport plus E, τλ, reality type, levels, Hodge numbers and verdict.
Json invariant_json(const DomainSpec& d, const IrrepLabel& l);

Json cohomology_json(const CohomologyTable& t);

Json family_json(const LabelFamily& f);
LabelFamily family_from_json(const Json& j);

Json classification_json(const ClassificationResult& r);
ClassificationResult classification_from_json(const Json& j);

Json decomposition_json(const RootSystem& rs, const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json abelian_scenario_json(const AbelianScenario& s);
Json k_weil_json(const KWeilReport& r);
Json wedge_identity_json(const WedgeIdentityCheck& c);
Json spin_json(const SpinReport& s);
Json cy_twist_json(const CyTwistReport& r);

struct OutputDocument {
    int schema_version = kSchemaVersion;
    Json command;
    Json payload;

    friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

Json document_json(const OutputDocument& doc);
OutputDocument document_from_json(const Json& j);

/// Serialized document: two-space indented JSON with a trailing newline.
std::string dump_json(const OutputDocument& doc);
/// Indented "key: value" rendering of the same document.
std::string render_text(const OutputDocument& doc);

}  // namespace knf
