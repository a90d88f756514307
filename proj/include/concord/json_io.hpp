#pragma once

#include "concord/family.hpp"
#include "concord/rational.hpp"
#include "concord/seifert.hpp"
#include "concord/signature.hpp"
#include "concord/tuples.hpp"

#include <json.hpp>

#include <string>

namespace concord {

// Matrices travel as {"genus": g, "matrix": [[...]]}.  Integer fields accept
// JSON numbers or decimal strings (large values are emitted as strings).
nlohmann::ordered_json matrix_to_json(const SeifertMatrix& v);
SeifertMatrix matrix_from_json(const nlohmann::json& j, const std::string& context);
SeifertMatrix load_matrix(const std::string& path);

nlohmann::ordered_json poly_to_json(const AlexanderPolynomial& a);

nlohmann::ordered_json angle_to_json(const ProfileAngle& a);
nlohmann::ordered_json profile_to_json(const SignatureProfile& p);
std::string profile_to_csv(const SignatureProfile& p);
nlohmann::ordered_json rho_to_json(const RhoValue& r);

nlohmann::ordered_json tuple_to_json(const Tuple& t);
nlohmann::ordered_json special_to_json(const SpecialResult& r);

nlohmann::ordered_json plan_to_json(const FamilyPlan& p);
FamilyPlan plan_from_json(const nlohmann::json& j);
FamilyPlan load_plan(const std::string& path);
nlohmann::ordered_json report_to_json(const VerifyReport& r);
nlohmann::ordered_json gap_to_json(const GapResult& g);

} // namespace concord
