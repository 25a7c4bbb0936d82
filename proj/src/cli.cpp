#include "simplicat/cli.hpp"

#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "simplicat/io.hpp"

namespace simplicat {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string dirname_of(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

struct Loaded {
  enum Kind { Category, QuiverFile, Diagram, Instance } kind = Category;
  FinCategory cat;
  Quiver quiver;
  CausalDag dag;
  SetFunctor inst;
};

Loaded load_any(const std::string& path) {
  std::string text = read_text_file(path);
  Loaded out;
  if (ends_with(path, ".dot")) {
    out.kind = Loaded::Diagram;
    out.dag = dag_from_dot(text);
    return out;
  }
  Json j = parse_json(text);
  if (!j.is_object()) throw CatError("ParseError", "top-level JSON value must be an object");
  if (j.contains("variables")) {
    out.kind = Loaded::Diagram;
    out.dag = dag_from_json(j);
  } else if (j.contains("schema")) {
    out.kind = Loaded::Instance;
    out.inst = instance_from_json(j, dirname_of(path));
  } else if (j.contains("identities")) {
    out.kind = Loaded::Category;
    out.cat = category_from_json(j);
  } else if (j.contains("objects")) {
    out.kind = Loaded::QuiverFile;
    out.quiver = quiver_from_json(j);
  } else {
    throw CatError("ParseError", "unrecognized input shape in '" + path + "'");
  }
  return out;
}

CausalDag load_dag(const std::string& path) {
  Loaded l = load_any(path);
  if (l.kind != Loaded::Diagram)
    throw CatError("ParseError", "'" + path + "' is not a causal diagram");
  return l.dag;
}

FinCategory load_category_like(const std::string& path) {
  Loaded l = load_any(path);
  switch (l.kind) {
    case Loaded::Category:
      return l.cat;
    case Loaded::QuiverFile:
      return free_category(l.quiver);
    case Loaded::Diagram:
      return dag_to_category(l.dag);
    default:
      throw CatError("ParseError", "'" + path + "' does not describe a category");
  }
}

SetFunctor load_instance(const std::string& path) {
  Loaded l = load_any(path);
  if (l.kind != Loaded::Instance)
    throw CatError("ParseError", "'" + path + "' is not an instance");
  return l.inst;
}

void check_quiver(const Quiver& q) {
  std::set<int> ids;
  for (const auto& v : q.vertices)
    if (!ids.insert(v.id).second)
      throw CatError("IndexOutOfRange", "duplicate vertex id " + std::to_string(v.id));
  for (const auto& e : q.edges)
    if (!ids.count(e.src) || !ids.count(e.tgt))
      throw CatError("IndexOutOfRange", "edge " + std::to_string(e.id) + " has an unknown endpoint");
}

Json cmd_validate(const std::string& path) {
  Loaded l = load_any(path);
  Json rep;
  std::ostringstream summary;
  switch (l.kind) {
    case Loaded::Diagram:
      rep["kind"] = "diagram";
      summary << l.dag.variables.size() << " variables, " << l.dag.edges.size() << " edges, acyclic";
      break;
    case Loaded::Category:
      rep["kind"] = "category";
      summary << l.cat.objects.size() << " objects, " << l.cat.morphisms.size() << " morphisms";
      break;
    case Loaded::QuiverFile: {
      check_quiver(l.quiver);
      rep["kind"] = "quiver";
      bool acyclic = true;
      try {
        free_category(l.quiver);
      } catch (const CatError&) {
        acyclic = false;
      }
      summary << l.quiver.vertices.size() << " vertices, " << l.quiver.edges.size() << " edges, "
              << (acyclic ? "acyclic" : "cyclic");
      break;
    }
    case Loaded::Instance: {
      rep["kind"] = "instance";
      long long rows = 0;
      for (const auto& o : l.inst.schema.objects) rows += static_cast<long long>(l.inst.rows(o.id).size());
      summary << l.inst.schema.objects.size() << " tables, " << rows << " rows, functorial";
      break;
    }
  }
  rep["valid"] = true;
  rep["summary"] = summary.str();
  return rep;
}

Json cmd_nerve(const std::string& path, int truncation) {
  return nerve_to_json(nerve(load_category_like(path), truncation));
}

Json cmd_homology(const std::string& path, int truncation, bool matrices) {
  FinCategory c = load_category_like(path);
  Json rep = profile_to_json(classifying_space_profile(c, truncation));
  if (matrices) {
    ChainComplex cc = chain_complex(nerve(c, truncation).sset);
    Json m = Json::object();
    for (int n = 1; n <= cc.truncation; ++n) m[std::to_string(n)] = matrix_triplets(cc.boundary[n]);
    rep["matrices"] = std::move(m);
  }
  return rep;
}

Json cmd_imset(const std::string& path, const std::string& path2, bool compare) {
  CausalDag g = load_dag(path);
  if (path2.empty() && !compare) return imset_to_json(standard_imset(g), g);
  if (path2.empty()) throw CatError("ParseError", "--compare needs two diagrams");
  CausalDag h = load_dag(path2);
  Imset ug = standard_imset(g), uh = standard_imset(h);
  Json rep;
  rep["equal"] = imset_equal(ug, uh);
  rep["left"] = imset_to_json(ug, g);
  rep["right"] = imset_to_json(uh, h);
  return rep;
}

Json cmd_markov_eq(const std::string& path, const std::string& path2) {
  CausalDag g = load_dag(path), h = load_dag(path2);
  MarkovWitness w = markov_equivalent(g, h);
  Json rep;
  rep["equivalent"] = w.equivalent;
  if (!w.equivalent) {
    Json feature = Json::array();
    for (int v : w.feature) feature.push_back(g.variable(v).label);
    rep["witness"] = Json{{"kind", w.kind}, {"feature", feature}};
  }
  return rep;
}

std::pair<std::string, std::string> split_edge_spec(const std::string& spec) {
  auto arrow = spec.find("->");
  if (arrow != std::string::npos) return {spec.substr(0, arrow), spec.substr(arrow + 2)};
  auto comma = spec.find(',');
  if (comma != std::string::npos) return {spec.substr(0, comma), spec.substr(comma + 1)};
  throw CatError("ParseError", "edge spec '" + spec + "' must look like a,b or a->b");
}

Json cmd_intervene(const std::string& path, const std::vector<std::string>& deletions,
                   const std::vector<std::string>& dos) {
  CausalDag g = load_dag(path);
  std::vector<Intervention> list;
  for (const auto& spec : deletions) {
    auto [a, b] = split_edge_spec(spec);
    list.push_back({Intervention::DeleteEdge, g.id_of(a), g.id_of(b)});
  }
  for (const auto& var : dos) list.push_back({Intervention::DoVariable, g.id_of(var), -1});
  return dag_to_json(intervene(g, list));
}

Json cmd_query(const std::string& model_path, const std::string& instance_path, const std::string& pattern) {
  CausalDag g = load_dag(model_path);
  SetFunctor inst = load_instance(instance_path);
  if (!(inst == dag_as_graph_instance(g)))
    throw CatError("SchemaMismatch", "instance is not the graph encoding of the diagram");
  Json rep;
  rep["pattern"] = pattern;
  if (pattern == "collider") {
    Json matches = Json::array();
    for (const auto& m : query_colliders(g))
      matches.push_back({{"parent1", g.variable(m.parent1).label},
                         {"child", g.variable(m.child).label},
                         {"parent2", g.variable(m.parent2).label},
                         {"parents_adjacent", m.parents_adjacent}});
    rep["matches"] = std::move(matches);
  } else if (pattern == "source-edge") {
    SourceEdgeReport r = query_source_edges(g);
    rep["every_vertex_covered"] = r.every_vertex_covered;
    Json uncovered = Json::array();
    for (int v : r.uncovered) uncovered.push_back(g.variable(v).label);
    rep["uncovered"] = std::move(uncovered);
  } else {
    throw CatError("ParseError", "unknown pattern '" + pattern + "'");
  }
  return rep;
}

Json cmd_migrate(const std::string& functor_path, const std::string& instance_path, const std::string& kind) {
  Functor F = functor_from_json(parse_json(read_text_file(functor_path)), dirname_of(functor_path));
  SetFunctor inst = load_instance(instance_path);
  SetFunctor result;
  if (kind == "pullback") {
    result = migrate_pullback(F, inst);
  } else if (kind == "left") {
    result = migrate_left_kan(F, inst).out;
  } else if (kind == "right") {
    result = migrate_right_kan(F, inst).out;
  } else {
    throw CatError("ParseError", "unknown migration kind '" + kind + "'");
  }
  return Json{{"kind", kind}, {"instance", instance_to_json(result)}};
}

/** Functor between free categories of nested diagrams, matched by the
 *  path labels shared through the inclusion. */
Functor inclusion_by_label(const FinCategory& sub, const FinCategory& full) {
  std::map<std::string, int> objs, mors;
  for (const auto& o : full.objects) objs[o.label] = o.id;
  for (const auto& m : full.morphisms) mors[m.label] = m.id;
  Functor f;
  f.source = sub;
  f.target = full;
  for (const auto& o : sub.objects) {
    auto it = objs.find(o.label);
    if (it == objs.end()) throw CatError("SchemaMismatch", "object '" + o.label + "' has no counterpart");
    f.omap[o.id] = it->second;
  }
  for (const auto& m : sub.morphisms) {
    auto it = mors.find(m.label);
    if (it == mors.end()) throw CatError("SchemaMismatch", "morphism '" + m.label + "' has no counterpart");
    f.mmap[m.id] = it->second;
  }
  return make_functor(f);
}

Json cmd_effect(const std::string& model_path, const std::string& instance_path, const std::string& do_spec,
                int truncation) {
  CausalDag g = load_dag(model_path);
  SetFunctor inst = load_instance(instance_path);
  FinCategory schema = dag_to_category(g);
  if (!(inst.schema == schema))
    throw CatError("SchemaMismatch", "instance schema is not the free category of the diagram");

  SetFunctor after = inst;
  if (!do_spec.empty()) {
    auto eq = do_spec.find('=');
    if (eq != std::string::npos) {
      // row binding in the instance layer
      int var = g.id_of(do_spec.substr(0, eq));
      int row = 0;
      try {
        size_t pos = 0;
        row = std::stoi(do_spec.substr(eq + 1), &pos);
        if (pos != do_spec.size() - eq - 1) throw std::invalid_argument(do_spec);
      } catch (const std::exception&) {
        throw CatError("ParseError", "row in '" + do_spec + "' must be an integer");
      }
      after = do_bind(inst, var, row);
    } else {
      // graph surgery followed by pullback along the inclusion
      CausalDag cut = intervene(g, {{Intervention::DoVariable, g.id_of(do_spec), -1}});
      Functor incl = inclusion_by_label(dag_to_category(cut), schema);
      after = migrate_pullback(incl, inst);
    }
  }

  HomologyProfile before_p = hocolim_profile(inst, truncation);
  HomologyProfile after_p = hocolim_profile(after, truncation);
  CausalEffectVerdict v = causal_effect(before_p, after_p);
  Json rep;
  rep["verdict"] = v.certified ? "NonIsomorphicCertified" : "Inconclusive";
  if (v.certified) {
    rep["degree"] = v.degree;
    rep["invariant"] = v.invariant;
  }
  rep["before"] = profile_to_json(v.before);
  rep["after"] = profile_to_json(v.after);
  return rep;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  std::ostringstream out;

  CLI::App app{"finite categories, simplicial sets and causal diagrams"};
  app.name("simplicat");
  app.require_subcommand(1);

  std::string v_path;
  auto* validate = app.add_subcommand("validate", "structural audit of a category, quiver, diagram or instance file");
  validate->add_option("path", v_path, "input file (.json or .dot)")->required();
  validate->callback([&] { out << cmd_validate(v_path).dump(2) << "\n"; });

  std::string n_path;
  int n_trunc = 4;
  auto* nerve_cmd = app.add_subcommand("nerve", "composable-chain simplicial set of a category");
  nerve_cmd->add_option("path", n_path, "category, quiver or diagram file")->required();
  nerve_cmd->add_option("--truncation", n_trunc, "truncation level")->check(CLI::PositiveNumber);
  nerve_cmd->callback([&] { out << cmd_nerve(n_path, n_trunc).dump(2) << "\n"; });

  std::string h_path;
  int h_trunc = 4;
  bool h_matrices = false;
  auto* homology_cmd = app.add_subcommand("homology", "Betti/torsion profile of the classifying space");
  homology_cmd->add_option("path", h_path, "category, quiver or diagram file")->required();
  homology_cmd->add_option("--truncation", h_trunc, "truncation level")->check(CLI::PositiveNumber);
  homology_cmd->add_flag("--matrices", h_matrices, "include boundary matrices as triplet text");
  homology_cmd->callback([&] { out << cmd_homology(h_path, h_trunc, h_matrices).dump(2) << "\n"; });

  std::string i_path, i_path2;
  bool i_compare = false;
  auto* imset_cmd = app.add_subcommand("imset", "standard imset of a diagram, or comparison of two");
  imset_cmd->add_option("path", i_path, "diagram file")->required();
  imset_cmd->add_option("path2", i_path2, "second diagram file");
  imset_cmd->add_flag("--compare", i_compare, "compare the two standard imsets");
  imset_cmd->callback([&] { out << cmd_imset(i_path, i_path2, i_compare).dump(2) << "\n"; });

  std::string m_path, m_path2;
  auto* markov_cmd = app.add_subcommand("markov-eq", "skeleton and immorality comparison of two diagrams");
  markov_cmd->add_option("path", m_path, "diagram file")->required();
  markov_cmd->add_option("path2", m_path2, "second diagram file")->required();
  markov_cmd->callback([&] { out << cmd_markov_eq(m_path, m_path2).dump(2) << "\n"; });

  std::string t_path;
  std::vector<std::string> t_deletions, t_dos;
  auto* intervene_cmd = app.add_subcommand("intervene", "edge deletion and do-surgery on a diagram");
  intervene_cmd->add_option("path", t_path, "diagram file")->required();
  intervene_cmd->add_option("--delete-edge", t_deletions, "edge to delete, as a,b or a->b");
  intervene_cmd->add_option("--do", t_dos, "variable whose incoming edges are removed");
  intervene_cmd->callback([&] { out << cmd_intervene(t_path, t_deletions, t_dos).dump(2) << "\n"; });

  std::string q_model, q_instance, q_pattern;
  auto* query_cmd = app.add_subcommand("query", "pattern matches against the graph encoding of a diagram");
  query_cmd->add_option("model", q_model, "diagram file")->required();
  query_cmd->add_option("instance", q_instance, "graph-encoded instance file")->required();
  query_cmd->add_option("--pattern", q_pattern, "collider or source-edge")->required();
  query_cmd->callback([&] { out << cmd_query(q_model, q_instance, q_pattern).dump(2) << "\n"; });

  std::string g_functor, g_instance, g_kind = "pullback";
  auto* migrate_cmd = app.add_subcommand("migrate", "instance migration along a schema functor");
  migrate_cmd->add_option("functor", g_functor, "functor file")->required();
  migrate_cmd->add_option("instance", g_instance, "instance file")->required();
  migrate_cmd->add_option("--kind", g_kind, "pullback, left or right");
  migrate_cmd->callback([&] { out << cmd_migrate(g_functor, g_instance, g_kind).dump(2) << "\n"; });

  std::string e_model, e_instance, e_do;
  int e_trunc = 4;
  auto* effect_cmd = app.add_subcommand("effect", "homology certification of an intervention");
  effect_cmd->add_option("model", e_model, "diagram file")->required();
  effect_cmd->add_option("instance", e_instance, "instance over the diagram's free category")->required();
  effect_cmd->add_option("--do", e_do, "VAR=ROW binds a row, VAR removes incoming edges");
  effect_cmd->add_option("--truncation", e_trunc, "truncation level")->check(CLI::PositiveNumber);
  effect_cmd->callback([&] { out << cmd_effect(e_model, e_instance, e_do, e_trunc).dump(2) << "\n"; });

  std::vector<const char*> argv;
  argv.push_back("simplicat");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    res.out = out.str();
    res.exit_code = 0;
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    res.exit_code = 0;
  } catch (const CLI::ParseError& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 3;
  } catch (const CatError& e) {
    Json rep;
    rep["error"] = Json{{"kind", e.kind}, {"message", e.what()}};
    res.out = rep.dump(2) + "\n";
    res.err = "error: " + e.kind + ": " + e.what() + "\n";
    if (e.kind == "ParseError") {
      res.exit_code = 3;
    } else if (e.kind == "ScaleExceeded") {
      res.exit_code = 4;
    } else {
      res.exit_code = 2;
    }
  }
  return res;
}

}  // namespace simplicat
