#include "loops/json_io.hpp"

#include <fstream>

#include "loops/errors.hpp"

namespace loops {

namespace {

MagmaTable magma_from_json(const Json& j) {
  if (!j.contains("order") || !j.contains("table"))
    throw Error(Errc::IoError, "table object needs \"order\" and \"table\"");
  MagmaTable m;
  m.n = j.at("order").get<int>();
  if (m.n <= 0 || m.n > kOrderCap) throw Error(Errc::OrderCap, "order outside supported range");
  const auto& rows = j.at("table");
  if (!rows.is_array() || static_cast<int>(rows.size()) != m.n)
    throw Error(Errc::IoError, "table must have one row per element");
  m.t.reserve(static_cast<size_t>(m.n) * m.n);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != m.n)
      throw Error(Errc::IoError, "table rows must have one entry per element");
    for (const auto& v : row) m.t.push_back(v.get<Elem>());
  }
  return m;
}

Json table_json(const MagmaTable& m) {
  Json rows = Json::array();
  for (int x = 0; x < m.n; ++x) {
    Json row = Json::array();
    for (int y = 0; y < m.n; ++y) row.push_back(m.at(x, y));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Elem> point_map_from_json(const Json& j, int n, const char* what) {
  // {"1": v, "2": v, ...}; slot 0 is the identity and stays 0.
  std::vector<Elem> out(n, 0);
  if (!j.is_object()) throw Error(Errc::IoError, std::string(what) + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    int key = std::stoi(it.key());
    if (key < 1 || key >= n) throw Error(Errc::BadIndex, std::string(what) + " key out of range");
    out[key] = it.value().get<Elem>();
  }
  for (int x = 1; x < n; ++x)
    if (!j.contains(std::to_string(x)))
      throw Error(Errc::IoError, std::string(what) + " missing point " + std::to_string(x));
  return out;
}

Json point_map_to_json(const std::vector<Elem>& v) {
  Json out = Json::object();
  for (size_t x = 1; x < v.size(); ++x) out[std::to_string(x)] = v[x];
  return out;
}

}  // namespace

Json loop_to_json(const LoopTable& l) {
  return Json{{"order", l.order()}, {"table", table_json(l.m)}, {"identity", 0}};
}

LoopTable loop_from_json(const Json& j) {
  Elem identity = j.contains("identity") ? j.at("identity").get<Elem>() : 0;
  return validate_loop(magma_from_json(j), identity);
}

Json group_to_json(const GroupTable& g) { return loop_to_json(g.l); }

GroupTable group_from_json(const Json& j) {
  if (j.is_string()) return make_group_by_name(j.get<std::string>());
  return as_group(loop_from_json(j));
}

Json sts_to_json(const SteinerTripleSystem& s) {
  Json blocks = Json::array();
  for (const auto& b : s.blocks) blocks.push_back(Json::array({b[0], b[1], b[2]}));
  return Json{{"n", s.point_count}, {"blocks", blocks}};
}

SteinerTripleSystem sts_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("blocks"))
    throw Error(Errc::IoError, "triple system object needs \"n\" and \"blocks\"");
  std::vector<std::array<Elem, 3>> blocks;
  for (const auto& b : j.at("blocks")) {
    if (!b.is_array() || b.size() != 3) throw Error(Errc::IoError, "blocks must be triples");
    blocks.push_back({b[0].get<Elem>(), b[1].get<Elem>(), b[2].get<Elem>()});
  }
  return validate_sts(j.at("n").get<int>(), std::move(blocks));
}

LoopTable steiner_loop_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "order4") return loop_from_sts(construct_sts(3));
    if (name == "fano") return loop_from_sts(construct_sts(7));
    throw Error(Errc::IoError, "unknown Steiner loop name: " + name);
  }
  if (j.contains("sts")) return loop_from_sts(sts_from_json(j.at("sts")));
  if (j.contains("n") && j.contains("blocks")) return loop_from_sts(sts_from_json(j));
  LoopTable l = loop_from_json(j);
  if (!is_steiner_loop(l)) throw Error(Errc::NotSteiner, "table is not a Steiner loop");
  return l;
}

Json weighted_to_json(const WeightedSteinerLoop& w) {
  return Json{{"s", loop_to_json(w.s)},
              {"a", group_to_json(w.a)},
              {"h", point_map_to_json(w.h)},
              {"diag", point_map_to_json(w.diag)}};
}

WeightedSteinerLoop weighted_from_json(const Json& j) {
  if (!j.contains("s") || !j.contains("a") || !j.contains("h"))
    throw Error(Errc::IoError, "weighted object needs \"s\", \"a\" and \"h\"");
  WeightedSteinerLoop w;
  w.s = steiner_loop_from_json(j.at("s"));
  w.a = group_from_json(j.at("a"));
  w.h = point_map_from_json(j.at("h"), w.s.order(), "h");
  if (j.contains("diag"))
    w.diag = point_map_from_json(j.at("diag"), w.s.order(), "diag");
  else
    w.diag.assign(w.s.order(), 0);
  w.validate();
  return w;
}

namespace {

Variant variant_from_string(const std::string& s) {
  if (s == "standard") return Variant::Standard;
  if (s == "star") return Variant::Star;
  if (s == "starstar") return Variant::StarStar;
  throw Error(Errc::IoError, "unknown variant: " + s);
}

}  // namespace

Json extension_to_json(const ExtensionSpec& spec) {
  Json f = Json::array();
  for (Elem x = 0; x < spec.s.order(); ++x) {
    Json row = Json::array();
    for (Elem y = 0; y < spec.s.order(); ++y) row.push_back(spec.fv(x, y));
    f.push_back(std::move(row));
  }
  return Json{{"s", loop_to_json(spec.s)},
              {"a", group_to_json(spec.a)},
              {"f", f},
              {"variant", variant_name(spec.variant)}};
}

ExtensionSpec extension_from_json(const Json& j) {
  if (!j.contains("s") || !j.contains("a") || !j.contains("f"))
    throw Error(Errc::IoError, "extension object needs \"s\", \"a\" and \"f\"");
  ExtensionSpec spec;
  spec.s = loop_from_json(j.at("s"));
  spec.a = group_from_json(j.at("a"));
  const auto& rows = j.at("f");
  const int ns = spec.s.order();
  if (!rows.is_array() || static_cast<int>(rows.size()) != ns)
    throw Error(Errc::IoError, "f must be an |S| x |S| array");
  for (const auto& row : rows)
    for (const auto& v : row) spec.f.push_back(v.get<Elem>());
  if (spec.f.size() != static_cast<size_t>(ns) * ns)
    throw Error(Errc::IoError, "f must be an |S| x |S| array");
  if (j.contains("variant")) spec.variant = variant_from_string(j.at("variant").get<std::string>());
  spec.check_border();
  return spec;
}

Json weighted_sts_to_json(const WeightedSTS& ws) {
  return Json{{"sts", sts_to_json(ws.sts)},
              {"g", group_to_json(ws.g)},
              {"w", point_map_to_json(ws.w)}};
}

WeightedSTS weighted_sts_from_json(const Json& j) {
  if (!j.contains("sts") || !j.contains("g") || !j.contains("w"))
    throw Error(Errc::IoError, "weighted system object needs \"sts\", \"g\" and \"w\"");
  SteinerTripleSystem sts = sts_from_json(j.at("sts"));
  GroupTable g = group_from_json(j.at("g"));
  std::vector<Elem> w = point_map_from_json(j.at("w"), sts.point_count + 1, "w");
  return validate_weighted_sts(sts, g, w);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Errc::IoError, "bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

ExtensionSpec spec_from_json(const Json& j) {
  if (j.contains("f")) return extension_from_json(j);
  if (j.contains("h")) {
    WeightedSteinerLoop w = weighted_from_json(j);
    Variant v = Variant::Standard;
    if (j.contains("variant")) v = variant_from_string(j.at("variant").get<std::string>());
    return to_extension_spec(w, v);
  }
  throw Error(Errc::IoError, "spec needs either \"f\" or \"h\"");
}

}  // namespace loops
