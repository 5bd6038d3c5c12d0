#pragma once

#include "octo/classify.hpp"

#include <json.hpp>

namespace octo {

/// Ordered JSON keeps key insertion order, so identical inputs produce
/// byte-identical documents.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "octo-involutions/1";

Json scalar_to_json(const Scalar& s);      // exact string "n" or "n/d"
Json vec_to_json(const Vec& v);
Json mat_to_json(const Mat& m);

Json structure_to_json(const StructureAlgebra& a);
StructureAlgebra structure_from_json(const Json& j, const FieldSpec& field);

Json invariant_to_json(const QuaternionInvariant& inv);
Json classification_to_json(const ClassificationReport& r);
Json verify_paper_to_json(const VerifyPaperReport& r);

std::string classification_to_text(const ClassificationReport& r);
std::string verify_paper_to_text(const VerifyPaperReport& r);

} // namespace octo
