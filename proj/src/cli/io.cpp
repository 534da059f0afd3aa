#include "graphpoly/io.hpp"

#include <json.hpp>

#include "graphpoly/errors.hpp"

namespace graphpoly::io {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ...: "
    if (auto p = msg.find("syntax error"); p != std::string::npos)
      msg = msg.substr(p);
    throw InputError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + msg);
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) fail("/", "expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) fail("/", std::string("missing field '") + key + "'");
  return *it;
}

std::string as_id(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string id");
  return j.get<std::string>();
}

std::vector<std::string> id_list(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of ids");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_id(j[i], path + "/" + std::to_string(i)));
  return out;
}

Labeling labels_from(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object of id -> natural");
  Labeling out;
  for (const auto& [k, val] : j.items()) {
    if (!val.is_number_unsigned())
      fail(path + "/" + k, "label must be a natural number below 2^64");
    out[k] = val.get<std::uint64_t>();
  }
  return out;
}

std::optional<Labeling> optional_labels(const Json& doc) {
  auto it = doc.find("labels");
  if (it == doc.end() || it->is_null()) return std::nullopt;
  return labels_from(*it, "/labels");
}

Json labels_json(const Labeling& phi, const std::vector<std::string>& order) {
  Json out = Json::object();
  for (const auto& id : order)
    if (auto it = phi.find(id); it != phi.end()) out[id] = it->second;
  return out;
}

// One line per top-level field; lists of records get one record per line.
std::string dump(const Json& doc) {
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, val] : doc.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + Json(key).dump() + ": ";
    const bool nested = val.is_array() && !val.empty() &&
                        (val.front().is_array() || val.front().is_object());
    if (!nested) {
      out += val.dump();
      continue;
    }
    out += "[\n";
    for (std::size_t i = 0; i < val.size(); ++i)
      out += "    " + val[i].dump() + (i + 1 < val.size() ? ",\n" : "\n");
    out += "  ]";
  }
  return out + "\n}\n";
}

}  // namespace

DocKind detect_kind(const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) fail("/", "expected a JSON object");
  if (doc.contains("conditions")) return DocKind::net;
  if (auto d = doc.find("directed"); d != doc.end() && d->is_boolean())
    return d->get<bool>() ? DocKind::digraph : DocKind::graph;
  if (auto e = doc.find("edges"); e != doc.end() && e->is_array())
    for (const auto& edge : *e)
      if ((edge.is_object() && edge.contains("dir")) ||
          (edge.is_array() && edge.size() == 3))
        return DocKind::digraph;
  return DocKind::graph;
}

GraphDoc parse_graph(const std::string& text) {
  const Json doc = parse_json(text);
  auto u = id_list(field(doc, "u"), "/u");
  auto v = id_list(field(doc, "v"), "/v");
  const Json& edges = field(doc, "edges");
  if (!edges.is_array()) fail("/edges", "expected a list of edges");
  std::vector<Bigraph::Edge> list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "/edges/" + std::to_string(i);
    const Json& e = edges[i];
    if (e.is_array() && e.size() == 2) {
      list.emplace_back(as_id(e[0], path + "/0"), as_id(e[1], path + "/1"));
    } else if (e.is_object() && e.contains("u") && e.contains("v")) {
      list.emplace_back(as_id(e["u"], path + "/u"), as_id(e["v"], path + "/v"));
    } else {
      fail(path, "expected [u-id, v-id]");
    }
  }
  return {Bigraph(std::move(u), std::move(v), list), optional_labels(doc)};
}

DiGraphDoc parse_digraph(const std::string& text) {
  const Json doc = parse_json(text);
  auto u = id_list(field(doc, "u"), "/u");
  auto v = id_list(field(doc, "v"), "/v");
  const Json& edges = field(doc, "edges");
  if (!edges.is_array()) fail("/edges", "expected a list of arcs");
  std::vector<DiBigraph::Arc> arcs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "/edges/" + std::to_string(i);
    const Json& e = edges[i];
    std::string uid, vid, dir;
    if (e.is_array() && e.size() == 3) {
      uid = as_id(e[0], path + "/0");
      vid = as_id(e[1], path + "/1");
      dir = as_id(e[2], path + "/2");
    } else if (e.is_object() && e.contains("u") && e.contains("v") &&
               e.contains("dir")) {
      uid = as_id(e["u"], path + "/u");
      vid = as_id(e["v"], path + "/v");
      dir = as_id(e["dir"], path + "/dir");
    } else {
      fail(path, "expected {\"u\", \"v\", \"dir\"}");
    }
    if (dir == "v_to_u")
      arcs.emplace_back(vid, uid);
    else if (dir == "u_to_v")
      arcs.emplace_back(uid, vid);
    else
      fail(path, "dir must be \"v_to_u\" or \"u_to_v\"");
  }
  return {DiBigraph(std::move(u), std::move(v), arcs), optional_labels(doc)};
}

NetDoc parse_net(const std::string& text) {
  const Json doc = parse_json(text);
  auto conditions = id_list(field(doc, "conditions"), "/conditions");
  const Json& events = field(doc, "events");
  if (!events.is_array()) fail("/events", "expected a list of events");
  std::vector<Event> list;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string path = "/events/" + std::to_string(i);
    const Json& e = events[i];
    if (!e.is_object() || !e.contains("id"))
      fail(path, "expected {\"id\", \"pre\", \"post\"}");
    Event ev{as_id(e["id"], path + "/id"), {}, {}};
    if (e.contains("pre")) ev.pre = id_list(e["pre"], path + "/pre");
    if (e.contains("post")) ev.post = id_list(e["post"], path + "/post");
    list.push_back(std::move(ev));
  }
  return {PetriNet(std::move(conditions), std::move(list)),
          optional_labels(doc)};
}

Labeling parse_labels(const std::string& text) {
  return labels_from(parse_json(text), "/");
}

std::string write_graph(const Bigraph& g, const Labeling* labels) {
  Json doc;
  doc["u"] = g.u();
  doc["v"] = g.v();
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.u().size(); ++i)
    for (std::size_t j : g.neighbors(i)) edges.push_back({g.u()[i], g.v()[j]});
  doc["edges"] = std::move(edges);
  if (labels) doc["labels"] = labels_json(*labels, g.v());
  return dump(doc);
}

std::string write_digraph(const DiBigraph& g, const Labeling* labels) {
  Json doc;
  doc["directed"] = true;
  doc["u"] = g.u();
  doc["v"] = g.v();
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.u().size(); ++i) {
    for (std::size_t j : g.in(i))
      edges.push_back({{"u", g.u()[i]}, {"v", g.v()[j]}, {"dir", "v_to_u"}});
    for (std::size_t j : g.out(i))
      edges.push_back({{"u", g.u()[i]}, {"v", g.v()[j]}, {"dir", "u_to_v"}});
  }
  doc["edges"] = std::move(edges);
  if (labels) doc["labels"] = labels_json(*labels, g.v());
  return dump(doc);
}

std::string write_net(const PetriNet& n, const Labeling* labels) {
  Json doc;
  doc["conditions"] = n.conditions();
  Json events = Json::array();
  for (std::size_t e = 0; e < n.events().size(); ++e) {
    Json pre = Json::array(), post = Json::array();
    for (std::size_t c : n.pre(e)) pre.push_back(n.conditions()[c]);
    for (std::size_t c : n.post(e)) post.push_back(n.conditions()[c]);
    events.push_back(
        {{"id", n.events()[e].id}, {"pre", std::move(pre)}, {"post", std::move(post)}});
  }
  doc["events"] = std::move(events);
  if (labels) doc["labels"] = labels_json(*labels, n.conditions());
  return dump(doc);
}

}  // namespace graphpoly::io
