// Copyright 2026 The gaclab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaclab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gaclab {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing key: ") + key);
  }
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

std::vector<Value> as_value_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Value> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(as_int(e, what));
  return out;
}

}  // namespace

json spec_to_json(const ConstraintSpec& spec) {
  json j;
  j["kind"] = kind_name(spec.kind);
  j["scope"] = spec.scope;
  switch (spec.kind) {
    case Kind::Table:
      j["tuples"] = spec.tuples;
      break;
    case Kind::BinaryNetwork: {
      json pairs = json::array();
      for (const auto& rel : spec.relations) {
        json allowed = json::array();
        for (const auto& [a, b] : rel.allowed) allowed.push_back({a, b});
        pairs.push_back({{"i", rel.i}, {"j", rel.j}, {"allowed", allowed}});
      }
      j["pairs"] = pairs;
      break;
    }
    case Kind::ImpliesCnf:
      j["cnf"] = spec.cnf;
      break;
    case Kind::AllDifferent:
      break;
    case Kind::NValue:
      break;
    case Kind::AmongConst:
      j["valueSet"] = spec.value_set;
      break;
    case Kind::AmongVar:
      j["split"] = spec.split;
      break;
    case Kind::Common:
      j["split"] = spec.split;
      break;
    case Kind::Gcc: {
      json occ = json::object();
      for (const auto& [v, iv] : spec.occ) {
        occ[std::to_string(v)] = {iv.lo, iv.hi};
      }
      j["occ"] = occ;
      break;
    }
    case Kind::GccVar:
      j["values"] = spec.counted_values;
      break;
    case Kind::Disjoint:
      j["split"] = spec.split;
      break;
    case Kind::ScalarProduct:
      j["rows"] = spec.rows;
      j["target"] = spec.target;
      break;
    case Kind::AtMost1:
      j["universe"] = spec.universe;
      j["cardinality"] = spec.cardinality;
      break;
    case Kind::CardMeta: {
      json children = json::array();
      for (const auto& ch : spec.children) children.push_back(spec_to_json(ch));
      j["children"] = children;
      break;
    }
    case Kind::Cardpath:
      j["template"] = spec_to_json(spec.children[0]);
      break;
  }
  return j;
}

ConstraintSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("constraint must be an object");
  ConstraintSpec spec;
  const auto& kj = need(j, "kind");
  if (!kj.is_string()) throw ParseError("kind must be a string");
  auto k = kind_from_name(kj.get<std::string>());
  if (!k) throw ParseError("unknown constraint kind: " + kj.get<std::string>());
  spec.kind = *k;
  const auto& sj = need(j, "scope");
  if (!sj.is_array()) throw ParseError("scope must be an array");
  for (const auto& e : sj) {
    if (!e.is_string()) throw ParseError("scope entries must be strings");
    spec.scope.push_back(e.get<std::string>());
  }
  switch (spec.kind) {
    case Kind::Table:
      for (const auto& row : need(j, "tuples")) {
        spec.tuples.push_back(as_value_list(row, "tuple row"));
      }
      break;
    case Kind::BinaryNetwork:
      for (const auto& pj : need(j, "pairs")) {
        PairRelation rel;
        rel.i = as_int(need(pj, "i"), "pair.i");
        rel.j = as_int(need(pj, "j"), "pair.j");
        for (const auto& ab : need(pj, "allowed")) {
          if (!ab.is_array() || ab.size() != 2) {
            throw ParseError("allowed entries must be value pairs");
          }
          rel.allowed.emplace_back(as_int(ab[0], "allowed value"),
                                   as_int(ab[1], "allowed value"));
        }
        spec.relations.push_back(std::move(rel));
      }
      break;
    case Kind::ImpliesCnf:
      for (const auto& cl : need(j, "cnf")) {
        spec.cnf.push_back(as_value_list(cl, "clause"));
      }
      break;
    case Kind::AllDifferent:
      break;
    case Kind::NValue:
      break;
    case Kind::AmongConst:
      spec.value_set = as_value_list(need(j, "valueSet"), "valueSet");
      break;
    case Kind::AmongVar:
      spec.split = as_int(need(j, "split"), "split");
      break;
    case Kind::Common:
      spec.split = as_int(need(j, "split"), "split");
      break;
    case Kind::Gcc: {
      const auto& occ = need(j, "occ");
      if (!occ.is_object()) throw ParseError("occ must be an object");
      for (auto it = occ.begin(); it != occ.end(); ++it) {
        Value v;
        try {
          size_t pos = 0;
          v = std::stoi(it.key(), &pos);
          if (pos != it.key().size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw ParseError("occ keys must be integer values: " + it.key());
        }
        auto iv = as_value_list(*it, "occ interval");
        if (iv.size() != 2) throw ParseError("occ interval must be [lo, hi]");
        spec.occ[v] = Interval{iv[0], iv[1]};
      }
      break;
    }
    case Kind::GccVar:
      spec.counted_values = as_value_list(need(j, "values"), "values");
      break;
    case Kind::Disjoint:
      spec.split = as_int(need(j, "split"), "split");
      break;
    case Kind::ScalarProduct:
      spec.rows = as_int(need(j, "rows"), "rows");
      if (!need(j, "target").is_number_integer()) {
        throw ParseError("target must be an integer");
      }
      spec.target = need(j, "target").get<long long>();
      break;
    case Kind::AtMost1:
      for (const auto& e : need(j, "universe")) {
        if (!e.is_string()) throw ParseError("universe entries must be strings");
        spec.universe.push_back(e.get<std::string>());
      }
      spec.cardinality = as_int(need(j, "cardinality"), "cardinality");
      break;
    case Kind::CardMeta:
      for (const auto& cj : need(j, "children")) {
        spec.children.push_back(spec_from_json(cj));
      }
      break;
    case Kind::Cardpath:
      spec.children.push_back(spec_from_json(need(j, "template")));
      break;
  }
  return spec;
}

json instance_to_json(const Instance& inst) {
  json vars = json::array();
  for (size_t i = 0; i < inst.variables.size(); ++i) {
    vars.push_back({{"id", inst.variables[i]}, {"domain", inst.domains[i]}});
  }
  return json{{"variables", vars}, {"constraint", spec_to_json(inst.constraint)}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be an object");
  Instance inst;
  const auto& vars = need(j, "variables");
  if (!vars.is_array()) throw ParseError("variables must be an array");
  for (const auto& vj : vars) {
    const auto& id = need(vj, "id");
    if (!id.is_string()) throw ParseError("variable id must be a string");
    inst.variables.push_back(id.get<std::string>());
    auto dom = as_value_list(need(vj, "domain"), "domain");
    std::sort(dom.begin(), dom.end());
    dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
    inst.domains.push_back(std::move(dom));
  }
  inst.constraint = spec_from_json(need(j, "constraint"));
  return inst;
}

std::string canonical_instance(const Instance& inst) {
  Instance copy = inst;
  for (auto& d : copy.domains) {
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
  }
  return instance_to_json(copy).dump();
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  Instance inst = instance_from_json(j);
  validate_instance(inst);
  return inst;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

Instance load_instance_file(const std::string& path) {
  return parse_instance(read_text_file(path));
}

void save_instance_file(const Instance& inst, const std::string& path) {
  write_text_file(path, canonical_instance(inst) + "\n");
}

json domain_map_to_json(const DomainMap& m) {
  json j = json::object();
  for (const auto& [id, dom] : m) j[id] = dom;
  return j;
}

DomainMap domain_map_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("domain map must be an object");
  DomainMap m;
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto dom = as_value_list(*it, "domain");
    std::sort(dom.begin(), dom.end());
    dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
    m[it.key()] = std::move(dom);
  }
  return m;
}

DomainMap load_domain_map_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  return domain_map_from_json(j);
}

}  // namespace gaclab
