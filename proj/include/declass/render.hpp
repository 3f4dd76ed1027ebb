#pragma once

#include <string>
#include <utility>
#include <vector>

#include "declass/decomp.hpp"
#include "declass/oracle.hpp"
#include "json.hpp"

namespace declass {

/// Key order is part of the output contract, so everything renders through
/// the order-preserving JSON type.
using OrderedJson = nlohmann::ordered_json;

/// A partition as a decreasing integer array, e.g. [2,1].
OrderedJson partition_json(const Partition& p);

/// One class: {"blocks": [[n_i, [parts...]], ...], "dim", "level",
/// "sheet_dense", "isolated"} plus "sheet_nilpotent" when the class is dense
/// in its sheet.
OrderedJson class_json(const ClassInfo& c);

OrderedJson classes_json(const std::string& group, int n, const std::vector<ClassInfo>& classes);
std::string classes_table(const std::string& group, int n, const std::vector<ClassInfo>& classes);

OrderedJson hasse_json(const HasseDiagram& diagram);

/// Upward digraph: one box per class labeled "(n1,e1)...| dim d"; classes of
/// equal dimension share a rank; each edge points from covered to covering.
std::string hasse_dot(const HasseDiagram& diagram);

OrderedJson sheets_json(const std::string& group, int n, const std::vector<LevelSet>& levels);
std::string sheets_table(const std::string& group, int n, const std::vector<LevelSet>& levels);

OrderedJson induced_json(const std::vector<std::pair<std::string, Partition>>& labelled,
                         const std::vector<std::pair<std::string, Partition>>& induced);

OrderedJson micro_json(const MicroReport& report);
std::string micro_table(const MicroReport& report);

/// Canonical byte form: two-space indent plus a trailing newline, so equal
/// inputs always serialize to equal bytes.
std::string dump_json(const OrderedJson& j);

}  // namespace declass
