#include "cyltqft/json_io.hpp"

#include <cstdint>
#include <map>

#include "cyltqft/error.hpp"

namespace cyltqft {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InputError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

std::size_t element(const FinSet& s, const Json& j, const std::string& where) {
  std::string t = text(j, where);
  auto i = s.find(t);
  if (!i) bad(where, "'" + t + "' is not an element of " + to_json(s).dump());
  return *i;
}

// A map given as {"x": "y"} over every element of dom.
FinMap table_from_json(const Json& j, const FinSet& dom, const FinSet& cod,
                       const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  std::vector<std::size_t> t(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto it = j.find(dom[i]);
    if (it == j.end()) bad(where, "no value for '" + dom[i] + "'");
    t[i] = element(cod, *it, where + "/" + dom[i]);
  }
  for (const auto& [key, value] : j.items()) {
    if (!dom.contains(key)) bad(where + "/" + key, "'" + key + "' is not in the domain");
  }
  return FinMap(dom, cod, std::move(t));
}

Json table_to_json(const FinMap& f) {
  Json t = Json::object();
  for (std::size_t i = 0; i < f.dom().size(); ++i) t[f.dom()[i]] = f.cod()[f(i)];
  return t;
}

// {"pairs": [[x, y, z], ...]} listing every element of `p` exactly once.
FinMap pairs_from_json(const Json& j, const PairSet& p, const FinSet& out,
                       const std::string& where) {
  const Json& pairs = field(j, "pairs", where);
  std::string pw = where + "/pairs";
  if (!pairs.is_array()) bad(pw, "expected an array");
  const FinSet& a = p.left().cod();
  const FinSet& b = p.right().cod();
  std::vector<std::size_t> t(p.size(), SIZE_MAX);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    std::string ew = pw + "/" + std::to_string(k);
    const Json& e = pairs[k];
    if (!e.is_array() || e.size() != 3) bad(ew, "expected [left, right, result]");
    std::size_t x = element(a, e[0], ew + "/0");
    std::size_t y = element(b, e[1], ew + "/1");
    auto slot = p.find(x, y);
    if (!slot) bad(ew, "(" + a[x] + "," + b[y] + ") is not a composable pair");
    if (t[*slot] != SIZE_MAX) bad(ew, "(" + a[x] + "," + b[y] + ") is listed twice");
    t[*slot] = element(out, e[2], ew + "/2");
  }
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (t[k] == SIZE_MAX) {
      bad(pw, "missing the pair (" + a[p.left()(k)] + "," + b[p.right()(k)] + ")");
    }
  }
  return FinMap(p.carrier(), out, std::move(t));
}

Json pairs_to_json(const PairSet& p, const FinMap& f) {
  Json pairs = Json::array();
  for (std::size_t k = 0; k < p.size(); ++k) {
    pairs.push_back({p.left().cod()[p.left()(k)], p.right().cod()[p.right()(k)],
                     f.cod()[f(k)]});
  }
  return {{"pairs", std::move(pairs)}};
}

FinMap finmap_over(const Json& j, const FinSet& dom, const FinSet& cod, const std::string& where) {
  FinMap f = finmap_from_json(j, where);
  if (!(f.dom() == dom)) bad(where + "/dom", "does not match " + to_json(dom).dump());
  if (!(f.cod() == cod)) bad(where + "/cod", "does not match " + to_json(cod).dump());
  return f;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json to_json(const FinSet& s) { return Json(std::vector<std::string>(s.begin(), s.end())); }

Json to_json(const FinMap& f) {
  return {{"dom", to_json(f.dom())}, {"cod", to_json(f.cod())}, {"table", table_to_json(f)}};
}

Json to_json(const FiberedSemiGroup& f) {
  return {{"total", to_json(f.total())},
          {"base", to_json(f.base())},
          {"proj", to_json(f.proj())},
          {"mul", pairs_to_json(f.pairs(), f.mul())}};
}

Json to_json(const FiberedBimodule& b) {
  return {{"left", to_json(b.left())},       {"right", to_json(b.right())},
          {"carrier", to_json(b.carrier())}, {"src", to_json(b.src())},
          {"tgt", to_json(b.tgt())},         {"lact", pairs_to_json(b.lpairs(), b.lact())},
          {"ract", pairs_to_json(b.rpairs(), b.ract())}};
}

Json to_json(const CobObject& s) {
  return {{"components", to_json(s.components)}, {"orientation", table_to_json(s.orientation)}};
}

Json to_json(const Cobordism& m) {
  return {{"source", to_json(m.source)},
          {"target", to_json(m.target)},
          {"regions", to_json(m.regions)},
          {"in_src", table_to_json(m.in_src)},
          {"in_tgt", table_to_json(m.in_tgt)}};
}

Json to_json(const Report& r) {
  std::map<std::string, Json> records;
  for (const Record& rec : r.sorted_records()) {
    records[rec.check].push_back({{"instance", rec.instance},
                                  {"pass", rec.pass},
                                  {"witness", rec.witness},
                                  {"detail", rec.detail}});
  }
  Json checks = Json::array();
  for (const auto& [name, tally] : r.summary()) {
    auto it = records.find(name);
    checks.push_back({{"name", name},
                      {"audit", tally.audit},
                      {"passed", tally.passed},
                      {"failed", tally.failed},
                      {"records", it == records.end() ? Json::array() : it->second}});
  }
  return {{"title", r.title()}, {"ok", r.ok()}, {"notes", r.notes()}, {"checks", checks}};
}

FinSet finset_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of strings");
  std::vector<std::string> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(text(j[i], where + "/" + std::to_string(i)));
  try {
    return FinSet(std::move(v));
  } catch (const InputError& e) {
    bad(where, e.what());
  }
}

FinMap finmap_from_json(const Json& j, const std::string& where) {
  FinSet dom = finset_from_json(field(j, "dom", where), where + "/dom");
  FinSet cod = finset_from_json(field(j, "cod", where), where + "/cod");
  return table_from_json(field(j, "table", where), dom, cod, where + "/table");
}

FiberedSemiGroup fsgrp_from_json(const Json& j, const std::string& where) {
  FinSet total = finset_from_json(field(j, "total", where), where + "/total");
  FinSet base = finset_from_json(field(j, "base", where), where + "/base");
  FinMap proj = finmap_over(field(j, "proj", where), total, base, where + "/proj");
  PairSet p = fiber_product(proj, proj);
  FinMap mul = pairs_from_json(field(j, "mul", where), p, total, where + "/mul");
  return FiberedSemiGroup(std::move(proj), std::move(mul));
}

FiberedBimodule bimodule_from_json(const Json& j, const std::string& where) {
  FiberedSemiGroup left = fsgrp_from_json(field(j, "left", where), where + "/left");
  FiberedSemiGroup right = fsgrp_from_json(field(j, "right", where), where + "/right");
  FinSet omega = finset_from_json(field(j, "carrier", where), where + "/carrier");
  FinMap src = finmap_over(field(j, "src", where), omega, left.base(), where + "/src");
  FinMap tgt = finmap_over(field(j, "tgt", where), omega, right.base(), where + "/tgt");
  FinMap lact = pairs_from_json(field(j, "lact", where), fiber_product(left.proj(), src), omega,
                                where + "/lact");
  FinMap ract = pairs_from_json(field(j, "ract", where), fiber_product(tgt, right.proj()), omega,
                                where + "/ract");
  return FiberedBimodule(std::move(left), std::move(right), std::move(src), std::move(tgt),
                         std::move(lact), std::move(ract));
}

CobObject object_from_json(const Json& j, const std::string& where) {
  FinSet comps = finset_from_json(field(j, "components", where), where + "/components");
  FinMap orient =
      table_from_json(field(j, "orientation", where), comps, signs(), where + "/orientation");
  return CobObject(std::move(comps), std::move(orient));
}

Cobordism cobordism_from_json(const Json& j, const std::string& where) {
  CobObject source = object_from_json(field(j, "source", where), where + "/source");
  CobObject target = object_from_json(field(j, "target", where), where + "/target");
  FinSet regions = finset_from_json(field(j, "regions", where), where + "/regions");
  FinMap in_src =
      table_from_json(field(j, "in_src", where), source.components, regions, where + "/in_src");
  FinMap in_tgt =
      table_from_json(field(j, "in_tgt", where), target.components, regions, where + "/in_tgt");
  return Cobordism(std::move(source), std::move(target), std::move(regions), std::move(in_src),
                   std::move(in_tgt));
}

TheoryPtr theory_from_json(const Json& j, const std::string& where) {
  std::string name = text(field(j, "theory", where), where + "/theory");
  FinSet s = finset_from_json(field(j, "S", where), where + "/S");
  try {
    if (name == "constant") return constant_sheaf_theory(s);
    if (name == "free_boundary") {
      return free_boundary_theory(s, text(field(j, "fill", where), where + "/fill"));
    }
  } catch (const InputError& e) {
    bad(where, e.what());
  }
  bad(where + "/theory", "unknown theory '" + name + "'");
}

}  // namespace cyltqft
