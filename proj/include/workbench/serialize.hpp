#pragma once

#include <string>

#include "json.hpp"
#include "workbench/amod.hpp"
#include "workbench/crossring.hpp"
#include "workbench/cyclotomic.hpp"
#include "workbench/group.hpp"
#include "workbench/verify.hpp"

namespace workbench {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError "<source>:<line>:<col>: ...".
Json parse_json_text(const std::string& text, const std::string& source);

/// Integers are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; both forms are accepted on input.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// {"n", "N", "num": [...], "den"}
Json to_json(const CycPoly& a);
CycPoly cycpoly_from_json(const Json& j);
Json to_json(const CycEltN& a);
CycEltN cycelt_from_json(const Json& j);

/// {"factors": [...], "free_rank", "order", "text"}
Json to_json(const FinAbGroup& g);
FinAbGroup finabgroup_from_json(const Json& j);

Json to_json(const SuiteReport& r);
SuiteReport suite_report_from_json(const Json& j);

Json to_json(const UCTOrderResult& r);
UCTOrderResult uct_result_from_json(const Json& j);

Json to_json(const ValidationReport& r);

/// Group file: {"order": n, "table": [[...]], "labels": [...]} or {"preset": "..."}.
FiniteGroup group_from_json(const Json& j);
Json group_info_json(const FiniteGroup& g, const std::vector<CyclicClass>& classes);

Json to_json(const TargetCategoryReport& r);
/// "10 summands Z[1/2]" when all summands agree, otherwise the list of labels.
std::string summand_summary(const TargetCategoryReport& r);

/// {"summand": i, "degree0": {"orders", "z", "w"}, "degree1": ...}; omitted
/// degrees are zero, omitted z or w default to the identity where allowed.
Json module_to_json(const AModObject& m, std::size_t summand);
AModObject module_from_json(const Json& j, const RingPtr& ring);

/// One module object, or a list of them (bare or as {"modules": [...]}). Summands
/// not listed are zero. Out-of-range or repeated indices raise FamilyMismatch;
/// modules failing validate raise InvalidInput naming the violated relation.
AModFamily family_from_json(const Json& j, const TargetCategoryReport& report);
Json family_to_json(const AModFamily& f);

}  // namespace workbench
