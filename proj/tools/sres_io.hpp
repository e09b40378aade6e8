#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "subres/duality.hpp"
#include "subres/matrix.hpp"
#include "subres/multipoly.hpp"
#include "subres/mv_subres.hpp"
#include "subres/roots.hpp"
#include "subres/unipoly.hpp"

namespace sres_io {

using nlohmann::json;

/// Reads a flag value: inline JSON, or the contents of a file when the
/// value starts with '@'.
json read_document(const std::string& value);

json to_json(const subres::Scalar& s);
json to_json(const subres::UniPoly& p);
json to_json(const subres::ExactMatrix& m);
json to_json(const subres::MultiPoly& p);
json to_json(const subres::MultiRootSet& a);
json to_json(const subres::DualFunctional& L);
json exponents_json(const subres::Exponents& e);

subres::Scalar scalar_from(const json& j);
subres::UniPoly unipoly_from(const json& j);
/// Accepts [[root, multiplicity], …] and plain [root, …] (simple roots).
subres::MultiRootSet roots_from(const json& j);
subres::Exponents exponents_from(const json& j);
subres::MonomialSet monomial_set_from(const json& j, std::size_t nvars);
/// Accepts an expression string over x1..xn or a list of
/// {"exponents": [...], "coeff": ...} records.
subres::MultiPoly multipoly_from(const json& j, std::size_t nvars);
subres::Point point_from(const json& j);
subres::DualFunctional functional_from(const json& j, const subres::Point& anchor);

struct SystemDocument {
  subres::MVSystem system;
  std::optional<unsigned> t;
  std::optional<subres::MonomialSet> S;
  subres::TOverrides T_override;
  /// Per-root functionals.  A root given without "dual" is taken as simple;
  /// "dual": "auto" asks for the inverse system of f_1..f_n at that point.
  std::vector<std::pair<subres::Point, std::vector<subres::DualFunctional>>> roots;
};

SystemDocument system_from(const json& j);
json to_json(const SystemDocument& doc);

}  // namespace sres_io
