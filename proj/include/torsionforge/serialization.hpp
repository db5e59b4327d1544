#pragma once

#include <string>

#include <json.hpp>

#include "torsionforge/families.hpp"
#include "torsionforge/torsion.hpp"

namespace torsionforge {

// Fixed key order and canonical rational strings keep every emission
// byte-deterministic; all arbitrary-precision integers and rationals are
// serialized as decimal strings.
using Json = nlohmann::ordered_json;

Json poly_to_json(const Polynomial<Rational>& f);
Polynomial<Rational> poly_from_json(const Json& j);

Json point_to_json(const AffinePoint& point);
AffinePoint point_from_json(const Json& j);

// 16 lowercase hex digits identifying the integral model.
std::string curve_fingerprint(const Polynomial<Rational>& f_int);

Json curve_model_to_json(const CurveModel& curve, bool include_integral_points = false);

// Rebuilds the curve from its family parameters and verifies that the stored
// integral model matches the reconstruction; ParseError on any mismatch.
CurveModel curve_model_from_json(const Json& j);

Json certificate_to_json(const TorsionCertificate& cert);

// Accepts "x,y" (affine) or "x:y:z" with z = 1 (affine) or z = 0 (throws
// PointAtInfinity); any other z is a ParseError.
AffinePoint parse_point(const std::string& text);

// Map a point of y^2 = f(x) to the integral model y^2 = f_int(x): (x, c*y).
AffinePoint integral_point(const CurveModel& curve, const AffinePoint& point);

// Canonical dump: two-space indent, trailing newline.
std::string dump_json(const Json& j);

}  // namespace torsionforge
