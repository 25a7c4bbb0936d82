#include "simplicat/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace simplicat {

namespace {

int to_int(const std::string& s) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw CatError("ParseError", "expected an integer, got '" + s + "'");
  }
}

[[noreturn]] void bad(const std::string& what) { throw CatError("ParseError", what); }

}  // namespace

Json category_to_json(const FinCategory& c) {
  Json j;
  j["objects"] = Json::array();
  for (const auto& o : c.objects) j["objects"].push_back({{"id", o.id}, {"label", o.label}});
  j["morphisms"] = Json::array();
  for (const auto& m : c.morphisms)
    j["morphisms"].push_back({{"id", m.id}, {"label", m.label}, {"src", m.src}, {"tgt", m.tgt}});
  j["identities"] = Json::object();
  for (const auto& [obj, mor] : c.identity) j["identities"][std::to_string(obj)] = mor;
  j["composition"] = Json::array();
  for (const auto& [pair, gf] : c.comp) j["composition"].push_back({pair.first, pair.second, gf});
  return j;
}

FinCategory category_from_json(const Json& j) {
  FinCategory c;
  try {
    for (const auto& o : j.at("objects"))
      c.objects.push_back({o.at("id").get<int>(), o.at("label").get<std::string>()});
    for (const auto& m : j.at("morphisms"))
      c.morphisms.push_back({m.at("id").get<int>(), m.at("label").get<std::string>(),
                             m.at("src").get<int>(), m.at("tgt").get<int>()});
    for (const auto& [key, val] : j.at("identities").items()) c.identity[to_int(key)] = val.get<int>();
    for (const auto& t : j.at("composition")) {
      if (!t.is_array() || t.size() != 3) bad("composition entries must be triples [g, f, gf]");
      c.comp[{t[0].get<int>(), t[1].get<int>()}] = t[2].get<int>();
    }
  } catch (const Json::exception& e) {
    bad(std::string("category: ") + e.what());
  }
  auto issues = validate_category(c);
  if (!issues.empty()) throw CatError(issues.front().kind, issues.front().message);
  return c;
}

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["objects"] = Json::array();
  for (const auto& v : q.vertices) j["objects"].push_back({{"id", v.id}, {"label", v.label}});
  j["morphisms"] = Json::array();
  for (const auto& e : q.edges)
    j["morphisms"].push_back({{"id", e.id}, {"label", e.label}, {"src", e.src}, {"tgt", e.tgt}});
  return j;
}

Quiver quiver_from_json(const Json& j) {
  Quiver q;
  try {
    for (const auto& o : j.at("objects"))
      q.vertices.push_back({o.at("id").get<int>(), o.at("label").get<std::string>()});
    for (const auto& m : j.at("morphisms"))
      q.edges.push_back({m.at("id").get<int>(), m.at("label").get<std::string>(),
                         m.at("src").get<int>(), m.at("tgt").get<int>()});
  } catch (const Json::exception& e) {
    bad(std::string("quiver: ") + e.what());
  }
  return q;
}

Json dag_to_json(const CausalDag& g) {
  Json j;
  j["variables"] = Json::array();
  for (const auto& v : g.variables) j["variables"].push_back(v.label);
  j["edges"] = Json::array();
  for (const auto& [a, b] : g.edges)
    j["edges"].push_back({g.variable(a).label, g.variable(b).label});
  return j;
}

namespace {

/** Variables get ids in sorted-label order, so two encodings of the same
 *  diagram compare field for field. */
CausalDag dag_from_names(std::vector<std::string> names,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::map<std::string, int> id;
  CausalDag g;
  for (const auto& n : names) {
    id[n] = static_cast<int>(g.variables.size());
    g.variables.push_back({id[n], n});
  }
  for (const auto& [a, b] : edges) {
    if (!id.count(a) || !id.count(b)) bad("edge endpoint '" + (id.count(a) ? b : a) + "' is not a variable");
    g.edges.push_back({id[a], id[b]});
  }
  return make_dag(g);
}

}  // namespace

CausalDag dag_from_json(const Json& j) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  try {
    for (const auto& v : j.at("variables")) names.push_back(v.get<std::string>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) bad("edges must be [cause, effect] pairs");
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
    }
  } catch (const Json::exception& e) {
    bad(std::string("diagram: ") + e.what());
  }
  return dag_from_names(std::move(names), edges);
}

namespace {

struct DotLexer {
  const std::string& text;
  size_t pos = 0;

  explicit DotLexer(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '*') {
        pos += 2;
        while (pos + 1 < text.size() && !(text[pos] == '*' && text[pos + 1] == '/')) ++pos;
        if (pos + 1 >= text.size()) bad("unterminated comment");
        pos += 2;
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_space();
    return pos >= text.size();
  }

  std::string next() {
    skip_space();
    if (pos >= text.size()) bad("unexpected end of input");
    char c = text[pos];
    if (c == '"') {
      std::string out;
      ++pos;
      while (pos < text.size() && text[pos] != '"') {
        if (text[pos] == '\\' && pos + 1 < text.size()) ++pos;
        out += text[pos++];
      }
      if (pos >= text.size()) bad("unterminated quoted name");
      ++pos;
      return out;
    }
    if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
      pos += 2;
      return "->";
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
      std::string out;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '.'))
        out += text[pos++];
      return out;
    }
    ++pos;
    return std::string(1, c);
  }

  std::string peek() {
    size_t save = pos;
    std::string t = eof() ? "" : next();
    pos = save;
    return t;
  }
};

void skip_attr_list(DotLexer& lx) {
  int depth = 0;
  do {
    std::string t = lx.next();
    if (t == "[") ++depth;
    if (t == "]") --depth;
    if (lx.eof() && depth > 0) bad("unterminated attribute list");
  } while (depth > 0);
}

}  // namespace

CausalDag dag_from_dot(const std::string& text) {
  DotLexer lx(text);
  std::string head = lx.next();
  if (head == "strict") head = lx.next();
  if (head != "digraph") bad("expected a digraph block");
  std::string tok = lx.next();
  if (tok != "{") {
    // graph name
    tok = lx.next();
    if (tok != "{") bad("expected '{' after the graph name");
  }

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  bool closed = false;
  while (!lx.eof()) {
    std::string t = lx.next();
    if (t == "}") {
      closed = true;
      break;
    }
    if (t == ";") continue;
    if (t == "graph" || t == "node" || t == "edge") {
      if (lx.peek() == "[") {
        skip_attr_list(lx);
        continue;
      }
    }
    if (t == "->" || t == "[" || t == "]" || t == "{" || t == "=" || t == ",") bad("unexpected token '" + t + "'");
    // t is a name; maybe an edge chain, an attribute assignment, or a node
    std::string prev = t;
    names.push_back(prev);
    while (true) {
      std::string nxt = lx.peek();
      if (nxt == "->") {
        lx.next();
        std::string to = lx.next();
        if (to == "->" || to == ";" || to == "}" || to == "[") bad("dangling edge from '" + prev + "'");
        names.push_back(to);
        edges.push_back({prev, to});
        prev = to;
      } else if (nxt == "[") {
        skip_attr_list(lx);
        break;
      } else if (nxt == "=") {
        lx.next();
        lx.next();  // graph-level attribute, drop the value
        names.pop_back();
        break;
      } else {
        break;
      }
    }
  }
  if (!closed) bad("missing closing '}'");
  return dag_from_names(std::move(names), edges);
}

Json imset_to_json(const Imset& u, const CausalDag& g) {
  Json j;
  j["ground"] = Json::array();
  for (int v : u.ground) j["ground"].push_back(g.variable(v).label);
  j["coeffs"] = Json::object();
  for (const auto& [mask, value] : u.coeffs) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < u.ground.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) labels.push_back(g.variable(u.ground[i]).label);
    std::sort(labels.begin(), labels.end());
    std::string key;
    for (size_t i = 0; i < labels.size(); ++i) key += (i ? "," : "") + labels[i];
    j["coeffs"][key] = value;
  }
  return j;
}

Json instance_to_json(const SetFunctor& inst) {
  Json j;
  j["schema"] = category_to_json(inst.schema);
  j["tables"] = Json::object();
  for (const auto& o : inst.schema.objects)
    j["tables"][std::to_string(o.id)] = inst.rows(o.id);
  j["actions"] = Json::object();
  for (const auto& m : inst.schema.morphisms) {
    if (inst.schema.is_identity(m.id)) continue;
    auto it = inst.action.find(m.id);
    if (it == inst.action.end()) continue;
    Json act = Json::object();
    for (const auto& [x, y] : it->second) act[std::to_string(x)] = y;
    j["actions"][std::to_string(m.id)] = std::move(act);
  }
  return j;
}

namespace {

FinCategory schema_from_ref(const Json& ref, const std::string& base_dir) {
  if (ref.is_string()) {
    std::string path = ref.get<std::string>();
    if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
    std::string text = read_text_file(path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".dot")
      return dag_to_category(dag_from_dot(text));
    return schema_from_ref(parse_json(text), base_dir);
  }
  if (ref.is_object() && ref.contains("variables")) return dag_to_category(dag_from_json(ref));
  if (ref.is_object() && ref.contains("objects")) return category_from_json(ref);
  bad("schema reference must be a category, a diagram, or a path");
}

}  // namespace

SetFunctor instance_from_json(const Json& j, const std::string& base_dir) {
  SetFunctor raw;
  try {
    raw.schema = schema_from_ref(j.at("schema"), base_dir);
    for (const auto& [key, val] : j.at("tables").items()) {
      std::vector<int> rows;
      for (const auto& r : val) rows.push_back(r.get<int>());
      raw.table[to_int(key)] = std::move(rows);
    }
    if (j.contains("actions"))
      for (const auto& [key, val] : j.at("actions").items()) {
        std::map<int, int> act;
        for (const auto& [row, img] : val.items()) act[to_int(row)] = img.get<int>();
        raw.action[to_int(key)] = std::move(act);
      }
  } catch (const Json::exception& e) {
    bad(std::string("instance: ") + e.what());
  }
  for (auto& [obj, rows] : raw.table) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  }
  return make_instance(complete_actions(std::move(raw)));
}

Functor functor_from_json(const Json& j, const std::string& base_dir) {
  Functor f;
  try {
    f.source = schema_from_ref(j.at("source"), base_dir);
    f.target = schema_from_ref(j.at("target"), base_dir);
    for (const auto& [key, val] : j.at("objects").items()) f.omap[to_int(key)] = val.get<int>();
    for (const auto& [key, val] : j.at("morphisms").items()) f.mmap[to_int(key)] = val.get<int>();
  } catch (const Json::exception& e) {
    bad(std::string("functor: ") + e.what());
  }
  return make_functor(f);
}

Json monotone_to_json(const MonotoneMap& f) {
  return Json{{"m", f.m}, {"n", f.n}, {"values", f.values}};
}

MonotoneMap monotone_from_json(const Json& j) {
  try {
    return make_monotone(j.at("m").get<int>(), j.at("n").get<int>(), j.at("values").get<std::vector<int>>());
  } catch (const Json::exception& e) {
    bad(std::string("monotone map: ") + e.what());
  }
}

Json sset_to_json(const TruncatedSSet& x) {
  Json j;
  j["truncation"] = x.truncation;
  j["levels"] = Json::array();
  for (int k = 0; k <= x.truncation; ++k) {
    Json level;
    std::vector<int> ids(x.level_sizes[k]);
    for (int s = 0; s < x.level_sizes[k]; ++s) ids[s] = s;
    level["simplices"] = ids;
    level["faces"] = k == 0 ? Json::array() : Json(x.faces[k]);
    level["degeneracies"] = k == x.truncation ? Json::array() : Json(x.degeneracies[k]);
    j["levels"].push_back(std::move(level));
  }
  return j;
}

Json nerve_to_json(const Nerve& nv) {
  Json j = sset_to_json(nv.sset);
  j["chains"] = nv.chains;
  return j;
}

Json profile_to_json(const HomologyProfile& p) {
  return Json{{"truncation", p.truncation}, {"betti", p.betti}, {"torsion", p.torsion}};
}

std::string matrix_triplets(const IntMatrix& m) {
  std::ostringstream out;
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < m[r].size(); ++c)
      if (m[r][c] != 0) out << r << " " << c << " " << m[r][c] << "\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace simplicat
