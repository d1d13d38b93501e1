#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dtc/collapse.hpp"
#include "dtc/invariants.hpp"

namespace dtc {

using Json = nlohmann::json;

/// Certificates are JSON objects with a "kind" field and the input complex
/// under "complex". Maps are stored as label arrays in the order given by the
/// witness's "domain" list, so a verifier needs nothing but the document.
Json witness_to_json(const ContiguityWitness& w);
Json admissible_to_json(const AdmissibleSet& s, const Complex& ambient);

/// kind: "tc", "scat" or "scat-square".
Json invariant_to_json(const std::string& kind, const Complex& k, const InvariantResult& r);
/// kind: "farber-check" or "categorical-check".
Json check_to_json(const std::string& kind, const Complex& k, const Complex& sub,
                   const CheckResult& r);
Json collapse_to_json(const CollapseSequence& seq);
Json plan_to_json(const ProductComplex& p, const AdmissibleSet& farber, const MotionPlan& plan);
Json product_to_json(const ProductComplex& p);

struct VerifyOptions {
  /// Re-run the exhaustive searches behind lower bounds and "no" verdicts.
  bool recompute = false;
  InvariantOptions invariants;
};

struct VerifyReport {
  bool accepted = false;
  std::string message;
};

/// Re-checks a certificate from scratch: every map is re-validated, every
/// consecutive pair re-tested for contiguity, covers re-unioned, collapse
/// sequences replayed and plans re-walked.
VerifyReport verify_certificate(const Json& cert, const VerifyOptions& options = {});

}  // namespace dtc
