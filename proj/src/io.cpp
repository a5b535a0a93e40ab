#include "schur/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "schur/errors.hpp"

namespace schur {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const SRing& ring) {
  ordered_json j;
  j["group"] = ring.group().spec();
  j["classes"] = ring.class_lists();
  return j;
}

SRing sring_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("S-ring file must hold a JSON object", 0);
  if (!j.contains("group") || !j["group"].is_string()) throw ParseError("missing string field 'group'", 0);
  if (!j.contains("classes") || !j["classes"].is_array()) throw ParseError("missing array field 'classes'", 0);
  const auto group = AbelianGroup::parse(j["group"].get<std::string>());
  std::vector<ElementSet> classes;
  std::size_t index = 0;
  for (auto& cls : j["classes"]) {
    if (!cls.is_array()) throw ParseError("class " + std::to_string(index) + " is not an array", 0);
    ElementSet x(group.order());
    for (auto& g : cls) {
      if (!g.is_number_unsigned() || g.get<std::uint64_t>() >= group.order())
        throw SchurError(ErrorCode::NotPartition, "class " + std::to_string(index) + " holds an invalid element " +
                                                      g.dump());
      const auto e = static_cast<Elem>(g.get<std::uint64_t>());
      if (x.contains(e))
        throw SchurError(ErrorCode::NotPartition, "element " + std::to_string(e) + " repeated in class " +
                                                      std::to_string(index));
      x.insert(e);
    }
    classes.push_back(std::move(x));
    ++index;
  }
  return validate_sring(group, classes);
}

SRing parse_sring(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return sring_from_json(j);
}

SRing read_sring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchurError(ErrorCode::Usage, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_sring(buf.str());
}

void write_sring_file(const std::string& path, const SRing& ring) {
  std::ofstream out(path);
  if (!out) throw SchurError(ErrorCode::Usage, "cannot write " + path);
  out << to_json(ring).dump() << "\n";
}

ordered_json to_json(const Subgroup& s) { return s.elements().elements(); }

ordered_json to_json(const AlgebraicIso& phi) {
  ordered_json j;
  j["source"] = to_json(*phi.source);
  j["target"] = to_json(*phi.target);
  j["class_map"] = phi.map;
  return j;
}

ordered_json to_json(const CombinatorialIso& f) {
  ordered_json j;
  j["source_group"] = f.source->group().spec();
  j["target_group"] = f.target->group().spec();
  j["map"] = f.map;
  return j;
}

ordered_json to_json(const SeparabilityReport& r, bool include_timing) {
  ordered_json j;
  j["subject"] = to_json(*r.subject);
  j["separable"] = r.separable;
  j["algebraic_isomorphisms"] = r.entries.size();
  ordered_json entries = ordered_json::array();
  for (auto& e : r.entries) {
    ordered_json x;
    x["target"] = to_json(*e.target);
    x["class_map"] = e.phi;
    if (e.inducing)
      x["inducing"] = *e.inducing;
    else
      x["inducing"] = nullptr;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  if (include_timing) j["seconds"] = r.seconds;
  return j;
}

ordered_json to_json(const Classification& c) {
  ordered_json j;
  j["case"] = to_string(c.label);
  if (c.upper) j["upper"] = to_json(*c.upper);
  if (c.lower) j["lower"] = to_json(*c.lower);
  if (c.left) j["left"] = to_json(*c.left);
  if (c.right) j["right"] = to_json(*c.right);
  if (c.family) j["family"] = c.family->to_string();
  if (c.cayley_witness) j["cayley_witness"] = c.cayley_witness->table();
  return j;
}

ordered_json to_json(const WlExperimentReport& r, bool include_timing) {
  ordered_json j;
  j["order"] = r.order;
  j["directed"] = r.directed;
  j["groups"] = r.groups;
  j["graphs_per_group"] = r.graphs_per_group;
  j["graph_count"] = r.graph_count;
  j["pair_count"] = r.pair_count;
  j["fingerprint_classes"] = r.fingerprint_classes;
  j["oracle_calls"] = r.oracle_calls;
  ordered_json fails = ordered_json::array();
  for (auto& [a, b] : r.indistinguishable_nonisomorphic) {
    ordered_json x;
    x["first"] = {{"group", a.group}, {"connection", a.connection}};
    x["second"] = {{"group", b.group}, {"connection", b.connection}};
    fails.push_back(std::move(x));
  }
  j["wl_indistinguishable_nonisomorphic"] = std::move(fails);
  if (include_timing) j["seconds"] = r.seconds;
  return j;
}

ordered_json to_json(const StableColoring& s) {
  ordered_json j;
  j["vertices"] = s.coloring.n;
  j["rounds"] = s.rounds;
  j["colors"] = s.histogram.size();
  ordered_json hist = ordered_json::array();
  for (auto [c, k] : s.histogram) hist.push_back({c, k});
  j["histogram"] = std::move(hist);
  return j;
}

ElementSet parse_element_list(const std::string& text, std::size_t universe) {
  ElementSet x(universe);
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
    if (ec != std::errc() || ptr != text.data() + end) throw ParseError("expected an element index", pos);
    if (v >= universe) throw ParseError("element " + std::to_string(v) + " out of range", pos);
    x.insert(static_cast<Elem>(v));
    pos = end + 1;
  }
  return x;
}

std::string class_list_text(const SRing& ring) {
  std::string s;
  for (auto& cls : ring.class_lists()) {
    if (!s.empty()) s += ' ';
    s += '{';
    for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + std::to_string(cls[i]);
    s += '}';
  }
  return s;
}

}  // namespace schur
