#include "declass/render.hpp"

#include <algorithm>
#include <sstream>

namespace declass {

OrderedJson partition_json(const Partition& p) {
  OrderedJson arr = OrderedJson::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

OrderedJson class_json(const ClassInfo& c) {
  OrderedJson blocks = OrderedJson::array();
  for (const auto& b : c.datum.blocks()) {
    OrderedJson pair = OrderedJson::array();
    pair.push_back(b.size);
    pair.push_back(partition_json(b.nil));
    blocks.push_back(pair);
  }
  OrderedJson out;
  out["blocks"] = blocks;
  out["dim"] = c.dim;
  out["level"] = c.level;
  out["sheet_dense"] = c.sheet_dense;
  out["isolated"] = c.isolated;
  if (c.sheet_nil) out["sheet_nilpotent"] = partition_json(*c.sheet_nil);
  return out;
}

OrderedJson classes_json(const std::string& group, int n, const std::vector<ClassInfo>& classes) {
  OrderedJson out;
  out["group"] = group;
  out["n"] = n;
  out["count"] = classes.size();
  OrderedJson rows = OrderedJson::array();
  for (const auto& c : classes) rows.push_back(class_json(c));
  out["classes"] = rows;
  return out;
}

namespace {

std::string flags_of(const ClassInfo& c) {
  std::string flags;
  if (c.sheet_dense) {
    flags += "dense";
    if (c.sheet_nil) flags += " nil=" + c.sheet_nil->str();
  }
  if (c.isolated) flags += flags.empty() ? "isolated" : " isolated";
  return flags;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string lpad(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

}  // namespace

std::string classes_table(const std::string& group, int n, const std::vector<ClassInfo>& classes) {
  std::size_t w = std::string("class").size();
  for (const auto& c : classes) w = std::max(w, c.datum.str().size());
  std::ostringstream os;
  os << group << "_" << n << ": " << classes.size() << " decomposition classes\n";
  os << pad("class", w) << "  " << lpad("dim", 4) << "  " << lpad("level", 5) << "  sheet\n";
  for (const auto& c : classes) {
    std::string line = pad(c.datum.str(), w) + "  " + lpad(std::to_string(c.dim), 4) + "  " +
                       lpad(std::to_string(c.level), 5) + "  " + flags_of(c);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

OrderedJson hasse_json(const HasseDiagram& diagram) {
  OrderedJson out;
  out["group"] = diagram.group;
  out["n"] = diagram.n;
  OrderedJson nodes = OrderedJson::array();
  for (const auto& c : diagram.nodes) nodes.push_back(class_json(c));
  out["nodes"] = nodes;
  OrderedJson covers = OrderedJson::array();
  for (const auto& [lo, hi] : diagram.covers) {
    OrderedJson edge = OrderedJson::array();
    edge.push_back(lo);
    edge.push_back(hi);
    covers.push_back(edge);
  }
  out["covers"] = covers;
  return out;
}

std::string hasse_dot(const HasseDiagram& diagram) {
  std::ostringstream os;
  os << "digraph classes_" << diagram.group << diagram.n << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << diagram.nodes[i].datum.str() << "| dim "
       << diagram.nodes[i].dim << "\"];\n";
  // Nodes are sorted by dimension, so equal-dim ranks are contiguous runs.
  std::size_t i = 0;
  while (i < diagram.nodes.size()) {
    std::size_t j = i;
    while (j < diagram.nodes.size() && diagram.nodes[j].dim == diagram.nodes[i].dim) ++j;
    os << "  { rank=same;";
    for (std::size_t k = i; k < j; ++k) os << " n" << k << ";";
    os << " }\n";
    i = j;
  }
  for (const auto& [lo, hi] : diagram.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

OrderedJson sheets_json(const std::string& group, int n, const std::vector<LevelSet>& levels) {
  OrderedJson out;
  out["group"] = group;
  out["n"] = n;
  std::size_t sheet_count = 0;
  for (const auto& ls : levels)
    for (const auto& c : ls.classes)
      if (c.sheet_dense) ++sheet_count;
  out["sheet_count"] = sheet_count;
  OrderedJson rows = OrderedJson::array();
  for (const auto& ls : levels) {
    OrderedJson level;
    level["level"] = ls.level;
    OrderedJson classes = OrderedJson::array();
    for (const auto& c : ls.classes) classes.push_back(class_json(c));
    level["classes"] = classes;
    rows.push_back(level);
  }
  out["levels"] = rows;
  return out;
}

std::string sheets_table(const std::string& group, int n, const std::vector<LevelSet>& levels) {
  std::size_t sheet_count = 0;
  for (const auto& ls : levels)
    for (const auto& c : ls.classes)
      if (c.sheet_dense) ++sheet_count;
  std::ostringstream os;
  os << group << "_" << n << ": " << sheet_count << " sheets across " << levels.size()
     << " levels\n";
  for (const auto& ls : levels) {
    os << "level " << ls.level << ":\n";
    for (const auto& c : ls.classes) {
      os << "  " << c.datum.str() << "  dim " << c.dim;
      const std::string flags = flags_of(c);
      if (!flags.empty()) os << "  [" << flags << "]";
      os << "\n";
    }
  }
  return os.str();
}

OrderedJson induced_json(const std::vector<std::pair<std::string, Partition>>& labelled,
                         const std::vector<std::pair<std::string, Partition>>& induced) {
  auto rows = [](const std::vector<std::pair<std::string, Partition>>& list) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& [tag, part] : list) {
      OrderedJson row;
      row["tag"] = tag;
      row["partition"] = partition_json(part);
      arr.push_back(row);
    }
    return arr;
  };
  OrderedJson out;
  out["input"] = rows(labelled);
  out["induced"] = rows(induced);
  return out;
}

OrderedJson micro_json(const MicroReport& report) {
  OrderedJson out;
  out["p"] = report.p;
  out["k"] = report.k;
  OrderedJson rows = OrderedJson::array();
  for (const auto& row : report.rows) {
    OrderedJson r;
    r["element"] = row.element;
    r["centraliser_dim"] = row.centralizer_dim;
    r["stabiliser_dim"] = row.stabilizer_dim;
    r["nilpotent"] = row.nilpotent;
    rows.push_back(r);
  }
  out["rows"] = rows;
  out["centralisers_equal_stabilisers"] = report.centralizers_equal_stabilizers;
  out["nilpotent_centraliser_exceeds_stabiliser"] = report.nilpotent_centralizer_exceeds_stabilizer;
  out["level_one_nilpotent_free"] = report.level_one_nilpotent_free;
  return out;
}

std::string micro_table(const MicroReport& report) {
  std::size_t w = std::string("element").size();
  for (const auto& row : report.rows) w = std::max(w, row.element.size());
  std::ostringstream os;
  os << "pgl_2 over F_" << report.p;
  if (report.k > 1) os << "^" << report.k;
  os << "\n" << pad("element", w) << "  centraliser  stabiliser  nilpotent\n";
  for (const auto& row : report.rows)
    os << pad(row.element, w) << "  " << lpad(std::to_string(row.centralizer_dim), 11) << "  "
       << lpad(std::to_string(row.stabilizer_dim), 10) << "  " << (row.nilpotent ? "yes" : "no")
       << "\n";
  os << "centralisers equal stabilisers: " << (report.centralizers_equal_stabilizers ? "yes" : "no")
     << "\n";
  os << "nilpotent centraliser exceeds stabiliser: "
     << (report.nilpotent_centralizer_exceeds_stabilizer ? "yes" : "no") << "\n";
  os << "centraliser level 1 nilpotent-free: " << (report.level_one_nilpotent_free ? "yes" : "no")
     << "\n";
  return os.str();
}

std::string dump_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

}  // namespace declass
