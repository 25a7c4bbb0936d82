#include "simplicat/elements.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "simplicat/library.hpp"

namespace simplicat {

std::vector<Issue> validate_instance(const SetFunctor& inst) {
  std::vector<Issue> issues;
  const FinCategory& c = inst.schema;
  {
    auto cat_issues = validate_category(c);
    if (!cat_issues.empty()) return cat_issues;
  }
  for (const auto& o : c.objects) {
    auto it = inst.table.find(o.id);
    if (it == inst.table.end()) {
      issues.push_back({"DanglingRow", "no table for object " + std::to_string(o.id), {o.id}});
      continue;
    }
    std::set<int> uniq(it->second.begin(), it->second.end());
    if (uniq.size() != it->second.size() || !std::is_sorted(it->second.begin(), it->second.end()))
      issues.push_back({"DanglingRow", "table for object " + std::to_string(o.id) + " is not a sorted set", {o.id}});
  }
  if (!issues.empty()) return issues;

  for (const auto& m : c.morphisms) {
    if (c.is_identity(m.id)) {
      auto it = inst.action.find(m.id);
      if (it != inst.action.end())
        for (const auto& [x, y] : it->second)
          if (x != y)
            issues.push_back({"NonFunctorial", "identity morphism " + std::to_string(m.id) + " acts nontrivially", {m.id, x}});
      continue;
    }
    auto it = inst.action.find(m.id);
    if (it == inst.action.end()) {
      if (!inst.rows(m.src).empty())
        issues.push_back({"MissingAction", "no action for morphism " + std::to_string(m.id), {m.id}});
      continue;
    }
    const auto& dom = inst.rows(m.src);
    const auto& cod = inst.rows(m.tgt);
    std::set<int> dom_set(dom.begin(), dom.end());
    std::set<int> cod_set(cod.begin(), cod.end());
    for (int x : dom)
      if (!it->second.count(x))
        issues.push_back({"MissingAction",
                          "action of morphism " + std::to_string(m.id) + " undefined on row " + std::to_string(x),
                          {m.id, x}});
    for (const auto& [x, y] : it->second) {
      if (!dom_set.count(x))
        issues.push_back({"DanglingRow",
                          "action of morphism " + std::to_string(m.id) + " defined on foreign row " + std::to_string(x),
                          {m.id, x}});
      else if (!cod_set.count(y))
        issues.push_back({"DanglingRow",
                          "action of morphism " + std::to_string(m.id) + " maps row " + std::to_string(x) +
                              " outside the target table",
                          {m.id, x, y}});
    }
  }
  if (!issues.empty()) return issues;

  for (const auto& [pair, gf] : c.comp) {
    auto [g, f] = pair;
    if (c.is_identity(g) || c.is_identity(f)) continue;
    for (int x : inst.rows(c.src(f)))
      if (inst.act(gf, x) != inst.act(g, inst.act(f, x))) {
        issues.push_back({"NonFunctorial",
                          "actions violate composition on (" + std::to_string(g) + "," + std::to_string(f) +
                              ") at row " + std::to_string(x),
                          {g, f, x}});
        break;
      }
  }
  return issues;
}

SetFunctor make_instance(SetFunctor raw) {
  for (const auto& o : raw.schema.objects) {
    auto& rows = raw.table[o.id];
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  }
  // drop explicit identity actions, they are implicit
  for (const auto& [obj, idm] : raw.schema.identity) raw.action.erase(idm);
  auto issues = validate_instance(raw);
  if (!issues.empty()) throw CatError(issues.front().kind, issues.front().message);
  return raw;
}

SetFunctor complete_actions(SetFunctor inst) {
  const FinCategory& c = inst.schema;
  for (const auto& m : c.morphisms) {
    if (c.is_identity(m.id) || inst.action.count(m.id)) continue;
    std::vector<int> path = generator_path(c, m.id);
    std::map<int, int> act;
    for (int x : inst.rows(m.src)) {
      int y = x;
      for (int gen : path) y = inst.act(gen, y);
      act[x] = y;
    }
    inst.action[m.id] = std::move(act);
  }
  return inst;
}

int ElementsCategory::object_of(int schema_obj, int row) const {
  for (size_t i = 0; i < object_elem.size(); ++i)
    if (object_elem[i] == std::make_pair(schema_obj, row)) return static_cast<int>(i);
  throw CatError("UnknownRow",
                 "no element (" + std::to_string(schema_obj) + "," + std::to_string(row) + ")");
}

ElementsCategory category_of_elements(const SetFunctor& inst) {
  {
    auto issues = validate_instance(inst);
    if (!issues.empty()) throw CatError(issues.front().kind, issues.front().message);
  }
  const FinCategory& c = inst.schema;
  ElementsCategory el;
  std::map<std::pair<int, int>, int> oid;
  for (const auto& o : c.objects)
    for (int x : inst.rows(o.id)) {
      int id = static_cast<int>(el.object_elem.size());
      oid[{o.id, x}] = id;
      el.object_elem.push_back({o.id, x});
      el.cat.objects.push_back({id, o.label + ":" + std::to_string(x)});
    }
  std::map<std::pair<int, int>, int> mid;
  for (const auto& m : c.morphisms)
    for (int x : inst.rows(m.src)) {
      int id = static_cast<int>(el.morphism_elem.size());
      mid[{m.id, x}] = id;
      el.morphism_elem.push_back({m.id, x});
      int s = oid.at({m.src, x});
      int t = oid.at({m.tgt, inst.act(m.id, x)});
      el.cat.morphisms.push_back({id, m.label + ":" + std::to_string(x), s, t});
      if (c.is_identity(m.id)) el.cat.identity[s] = id;
    }
  for (size_t i = 0; i < el.morphism_elem.size(); ++i)
    for (size_t j = 0; j < el.morphism_elem.size(); ++j) {
      auto [f, x] = el.morphism_elem[i];
      auto [g, y] = el.morphism_elem[j];
      if (c.tgt(f) != c.src(g) || inst.act(f, x) != y) continue;
      el.cat.comp[{static_cast<int>(j), static_cast<int>(i)}] = mid.at({c.comp.at({g, f}), x});
    }
  el.projection.source = el.cat;
  el.projection.target = c;
  for (size_t i = 0; i < el.object_elem.size(); ++i)
    el.projection.omap[static_cast<int>(i)] = el.object_elem[i].first;
  for (size_t i = 0; i < el.morphism_elem.size(); ++i)
    el.projection.mmap[static_cast<int>(i)] = el.morphism_elem[i].first;
  return el;
}

FiberReport check_opfibration_fibers(const SetFunctor& inst) {
  ElementsCategory el = category_of_elements(inst);
  FiberReport rep;
  for (const auto& o : inst.schema.objects) {
    long long fiber = 0;
    for (const auto& [s, x] : el.object_elem)
      if (s == o.id) ++fiber;
    long long table = static_cast<long long>(inst.rows(o.id).size());
    rep.fibers.push_back({o.id, fiber, table});
    if (fiber != table) rep.holds = false;
  }
  for (const auto& m : inst.schema.morphisms)
    for (int x : inst.rows(m.src)) {
      long long lifts = 0;
      for (const auto& [mm, xx] : el.morphism_elem)
        if (mm == m.id && xx == x) ++lifts;
      if (lifts != 1) {
        rep.unique_lifts = false;
        rep.holds = false;
      }
    }
  return rep;
}

std::vector<Functor> solve_lifting(const LiftingProblem& prob) {
  const FinCategory& A = prob.f.source;
  const FinCategory& B = prob.f.target;
  const FinCategory& X = prob.p.source;
  const FinCategory& Y = prob.p.target;
  if (!(prob.mu.source == A) || !(prob.mu.target == X) || !(prob.nu.source == B) || !(prob.nu.target == Y))
    throw CatError("NonCommutingSquare", "lifting square endpoints do not line up");
  if (!functor_equal(compose_functors(prob.p, prob.mu), compose_functors(prob.nu, prob.f)))
    throw CatError("NonCommutingSquare", "p.mu differs from nu.f");

  // assignments forced by h.f = mu
  std::map<int, int> forced_obj, forced_mor;
  for (const auto& a : A.objects) {
    int b = prob.f.on_object(a.id), x = prob.mu.on_object(a.id);
    auto it = forced_obj.find(b);
    if (it != forced_obj.end() && it->second != x) return {};
    forced_obj[b] = x;
  }
  for (const auto& m : A.morphisms) {
    int bm = prob.f.on_morphism(m.id), xm = prob.mu.on_morphism(m.id);
    auto it = forced_mor.find(bm);
    if (it != forced_mor.end() && it->second != xm) return {};
    forced_mor[bm] = xm;
  }

  std::vector<int> objs = B.object_ids();
  std::vector<int> mors;
  for (const auto& m : B.morphisms)
    if (!B.is_identity(m.id)) mors.push_back(m.id);

  std::vector<Functor> out;
  std::map<int, int> omap, mmap;

  auto closure_ok = [&]() {
    for (const auto& [pair, gf] : B.comp) {
      auto ig = mmap.find(pair.first);
      auto iff = mmap.find(pair.second);
      auto igf = mmap.find(gf);
      if (ig == mmap.end() || iff == mmap.end() || igf == mmap.end()) continue;
      if (X.comp.at({ig->second, iff->second}) != igf->second) return false;
    }
    return true;
  };

  std::function<void(size_t)> assign_mor = [&](size_t k) {
    if (k == mors.size()) {
      Functor h;
      h.source = B;
      h.target = X;
      h.omap = omap;
      h.mmap = mmap;
      out.push_back(std::move(h));
      return;
    }
    int m = mors[k];
    std::vector<int> candidates;
    auto forced = forced_mor.find(m);
    if (forced != forced_mor.end()) {
      candidates.push_back(forced->second);
    } else {
      candidates = X.hom(omap.at(B.src(m)), omap.at(B.tgt(m)));
    }
    for (int cand : candidates) {
      if (X.src(cand) != omap.at(B.src(m)) || X.tgt(cand) != omap.at(B.tgt(m))) continue;
      if (prob.p.on_morphism(cand) != prob.nu.on_morphism(m)) continue;
      mmap[m] = cand;
      if (closure_ok()) assign_mor(k + 1);
      mmap.erase(m);
    }
  };

  std::function<void(size_t)> assign_obj = [&](size_t k) {
    if (k == objs.size()) {
      mmap.clear();
      for (const auto& [obj, idm] : B.identity) mmap[idm] = X.identity.at(omap.at(obj));
      bool ok = true;
      for (const auto& [bm, xm] : forced_mor)
        if (B.is_identity(bm) && mmap.at(bm) != xm) ok = false;
      if (ok && closure_ok()) assign_mor(0);
      return;
    }
    int b = objs[k];
    std::vector<int> candidates;
    auto forced = forced_obj.find(b);
    if (forced != forced_obj.end()) {
      candidates.push_back(forced->second);
    } else {
      for (const auto& x : X.objects)
        if (prob.p.on_object(x.id) == prob.nu.on_object(b)) candidates.push_back(x.id);
    }
    for (int cand : candidates) {
      if (prob.p.on_object(cand) != prob.nu.on_object(b)) continue;
      omap[b] = cand;
      assign_obj(k + 1);
      omap.erase(b);
    }
  };
  assign_obj(0);
  return out;
}

LiftingPropertyReport check_lifting_property(const Functor& f, const Functor& p, const std::string& side) {
  LiftingPropertyReport rep;
  rep.side = side;
  std::vector<Functor> mus = enumerate_functors(f.source, p.source);
  std::vector<Functor> nus = enumerate_functors(f.target, p.target);
  for (const auto& mu : mus)
    for (const auto& nu : nus) {
      if (!functor_equal(compose_functors(p, mu), compose_functors(nu, f))) continue;
      rep.squares++;
      LiftingProblem prob{f, p, mu, nu};
      if (!solve_lifting(prob).empty()) {
        rep.solvable++;
      } else if (!rep.has_witness) {
        rep.has_witness = true;
        rep.witness_mu = mu;
        rep.witness_nu = nu;
      }
    }
  rep.holds = rep.squares == rep.solvable;
  return rep;
}

SetFunctor migrate_pullback(const Functor& F, const SetFunctor& eps) {
  if (!(eps.schema == F.target))
    throw CatError("SchemaMismatch", "instance schema is not the functor target");
  SetFunctor out;
  out.schema = F.source;
  for (const auto& s : F.source.objects) out.table[s.id] = eps.rows(F.on_object(s.id));
  for (const auto& m : F.source.morphisms) {
    if (F.source.is_identity(m.id)) continue;
    std::map<int, int> act;
    for (int x : out.table.at(m.src)) act[x] = eps.act(F.on_morphism(m.id), x);
    out.action[m.id] = std::move(act);
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(size_t n) : up(n) {
    for (size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i);
  }
  int find(int a) {
    while (up[a] != a) a = up[a] = up[up[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) up[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

LeftKanResult migrate_left_kan(const Functor& F, const SetFunctor& delta) {
  if (!(delta.schema == F.source))
    throw CatError("SchemaMismatch", "instance schema is not the functor source");
  const FinCategory& S = F.source;
  const FinCategory& T = F.target;
  LeftKanResult res;
  res.out.schema = T;

  // elements of the colimit diagram at t: triples (s, alpha : F s -> t, x)
  std::map<int, std::vector<std::tuple<int, int, int>>> elems;
  std::map<int, std::map<std::tuple<int, int, int>, int>> elem_index;
  for (const auto& t : T.objects) {
    auto& list = elems[t.id];
    for (const auto& s : S.objects)
      for (int alpha : T.hom(F.on_object(s.id), t.id))
        for (int x : delta.rows(s.id)) {
          elem_index[t.id][{s.id, alpha, x}] = static_cast<int>(list.size());
          list.push_back({s.id, alpha, x});
        }
  }

  std::map<int, std::vector<int>> cls_of;   // per t: element index -> class row id
  std::map<int, std::map<int, std::vector<std::tuple<int, int, int>>>> classes_by_rep;
  for (const auto& t : T.objects) {
    const auto& list = elems[t.id];
    UnionFind uf(list.size());
    for (const auto& sigma : S.morphisms)
      for (int alpha_p : T.hom(F.on_object(sigma.tgt), t.id)) {
        int alpha = T.comp.at({alpha_p, F.on_morphism(sigma.id)});
        for (int x : delta.rows(sigma.src))
          uf.unite(elem_index[t.id].at({sigma.src, alpha, x}),
                   elem_index[t.id].at({sigma.tgt, alpha_p, delta.act(sigma.id, x)}));
      }
    // classes ordered by least member; row id = that order
    std::map<int, std::vector<int>> members;
    for (size_t i = 0; i < list.size(); ++i) members[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::vector<int> rows;
    cls_of[t.id].assign(list.size(), -1);
    int next = 0;
    std::vector<std::vector<std::tuple<int, int, int>>> cls_members;
    for (const auto& [rep, mem] : members) {
      std::vector<std::tuple<int, int, int>> triples;
      for (int i : mem) {
        cls_of[t.id][i] = next;
        triples.push_back(list[i]);
      }
      std::sort(triples.begin(), triples.end());
      cls_members.push_back(triples);
      rows.push_back(next++);
    }
    res.out.table[t.id] = rows;
    res.classes[t.id] = cls_members;
  }

  for (const auto& tau : T.morphisms) {
    if (T.is_identity(tau.id)) continue;
    std::map<int, int> act;
    for (size_t cls = 0; cls < res.classes[tau.src].size(); ++cls) {
      auto [s, alpha, x] = res.classes[tau.src][cls].front();
      int alpha2 = T.comp.at({tau.id, alpha});
      act[static_cast<int>(cls)] = cls_of[tau.tgt][elem_index[tau.tgt].at({s, alpha2, x})];
    }
    res.out.action[tau.id] = std::move(act);
  }
  return res;
}

RightKanResult migrate_right_kan(const Functor& F, const SetFunctor& delta) {
  if (!(delta.schema == F.source))
    throw CatError("SchemaMismatch", "instance schema is not the functor source");
  const FinCategory& S = F.source;
  const FinCategory& T = F.target;
  RightKanResult res;
  res.out.schema = T;

  for (const auto& t : T.objects) {
    auto& comma = res.comma_objects[t.id];
    for (const auto& s : S.objects)
      for (int beta : T.hom(t.id, F.on_object(s.id))) comma.push_back({s.id, beta});
    std::map<std::pair<int, int>, int> cid;
    for (size_t i = 0; i < comma.size(); ++i) cid[comma[i]] = static_cast<int>(i);

    // enumerate compatible tuples by backtracking in comma order
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(comma.size(), -1);
    std::function<void(size_t)> rec = [&](size_t k) {
      if (k == comma.size()) {
        tuples.push_back(cur);
        return;
      }
      auto [s, beta] = comma[k];
      for (int x : delta.rows(s)) {
        cur[k] = x;
        bool ok = true;
        // compatibility with every assigned slot, both directions
        for (size_t j = 0; j <= k && ok; ++j) {
          auto [s2, beta2] = comma[j];
          for (const auto& sigma : S.morphisms) {
            if (sigma.src == s2 && sigma.tgt == s &&
                T.comp.at({F.on_morphism(sigma.id), beta2}) == beta) {
              if (delta.act(sigma.id, cur[j]) != x) {
                ok = false;
                break;
              }
            }
            if (sigma.src == s && sigma.tgt == s2 &&
                T.comp.at({F.on_morphism(sigma.id), beta}) == beta2) {
              if (delta.act(sigma.id, x) != cur[j]) {
                ok = false;
                break;
              }
            }
          }
        }
        if (ok) rec(k + 1);
        cur[k] = -1;
      }
    };
    rec(0);
    std::sort(tuples.begin(), tuples.end());
    res.tuples[t.id] = tuples;
    std::vector<int> rows;
    for (size_t i = 0; i < tuples.size(); ++i) rows.push_back(static_cast<int>(i));
    res.out.table[t.id] = rows;
  }

  for (const auto& tau : T.morphisms) {
    if (T.is_identity(tau.id)) continue;
    const auto& dom_comma = res.comma_objects[tau.src];
    const auto& cod_comma = res.comma_objects[tau.tgt];
    std::map<std::pair<int, int>, int> dom_cid;
    for (size_t i = 0; i < dom_comma.size(); ++i) dom_cid[dom_comma[i]] = static_cast<int>(i);
    std::map<int, int> act;
    for (size_t row = 0; row < res.tuples[tau.src].size(); ++row) {
      std::vector<int> img(cod_comma.size());
      for (size_t k = 0; k < cod_comma.size(); ++k) {
        auto [s, beta_p] = cod_comma[k];
        int beta = T.comp.at({beta_p, tau.id});
        img[k] = res.tuples[tau.src][row][dom_cid.at({s, beta})];
      }
      auto it = std::find(res.tuples[tau.tgt].begin(), res.tuples[tau.tgt].end(), img);
      if (it == res.tuples[tau.tgt].end())
        throw CatError("NonFunctorial", "right Kan action left the tuple set");
      act[static_cast<int>(row)] = static_cast<int>(it - res.tuples[tau.tgt].begin());
    }
    res.out.action[tau.id] = std::move(act);
  }
  return res;
}

PullbackSquareReport verify_pullback_square(const Functor& F, const SetFunctor& eps, const SetFunctor& delta) {
  SetFunctor expected = migrate_pullback(F, eps);
  if (!(delta.schema == F.source))
    throw CatError("NotPullbackInstance", "instance schema is not the functor source");
  for (const auto& s : F.source.objects)
    if (delta.rows(s.id) != expected.rows(s.id))
      throw CatError("NotPullbackInstance",
                     "table at object " + std::to_string(s.id) + " differs from the pullback");
  for (const auto& m : F.source.morphisms) {
    if (F.source.is_identity(m.id)) continue;
    for (int x : delta.rows(m.src))
      if (delta.act(m.id, x) != expected.act(m.id, x))
        throw CatError("NotPullbackInstance",
                       "action of morphism " + std::to_string(m.id) + " differs from the pullback at row " +
                           std::to_string(x));
  }

  ElementsCategory ed = category_of_elements(delta);
  ElementsCategory ee = category_of_elements(eps);
  const FinCategory& S = F.source;

  // fiber product S x_T (elements of eps)
  std::map<std::pair<int, int>, int> pobj;  // (s, eps-element object) -> index
  std::vector<std::pair<int, int>> pobjs;
  for (const auto& s : S.objects)
    for (size_t e = 0; e < ee.object_elem.size(); ++e)
      if (F.on_object(s.id) == ee.object_elem[e].first) {
        pobj[{s.id, static_cast<int>(e)}] = static_cast<int>(pobjs.size());
        pobjs.push_back({s.id, static_cast<int>(e)});
      }
  std::set<std::pair<int, int>> pmors;
  for (const auto& sigma : S.morphisms)
    for (size_t e = 0; e < ee.morphism_elem.size(); ++e)
      if (F.on_morphism(sigma.id) == ee.morphism_elem[e].first)
        pmors.insert({sigma.id, static_cast<int>(e)});

  PullbackSquareReport rep;
  rep.elements_objects = static_cast<long long>(ed.object_elem.size());
  rep.fiber_product_objects = static_cast<long long>(pobjs.size());
  rep.elements_morphisms = static_cast<long long>(ed.morphism_elem.size());
  rep.fiber_product_morphisms = static_cast<long long>(pmors.size());

  // canonical comparison: (s, x) -> (s, element (F s, x)); morphisms alike
  std::set<std::pair<int, int>> image_obj, image_mor;
  bool ok = rep.elements_objects == rep.fiber_product_objects &&
            rep.elements_morphisms == rep.fiber_product_morphisms;
  for (const auto& [s, x] : ed.object_elem) {
    int e = ee.object_of(F.on_object(s), x);
    if (!pobj.count({s, e})) ok = false;
    image_obj.insert({s, e});
  }
  for (const auto& [m, x] : ed.morphism_elem) {
    int fe = -1;
    for (size_t e = 0; e < ee.morphism_elem.size(); ++e)
      if (ee.morphism_elem[e] == std::make_pair(F.on_morphism(m), x)) fe = static_cast<int>(e);
    if (fe < 0 || !pmors.count({m, fe})) ok = false;
    image_mor.insert({m, fe});
  }
  ok = ok && image_obj.size() == ed.object_elem.size() && image_mor.size() == ed.morphism_elem.size();
  rep.holds = ok;
  return rep;
}

AdjunctionReport check_left_adjunction(const Functor& F, const SetFunctor& delta, const SetFunctor& eps) {
  AdjunctionReport rep;
  LeftKanResult sigma = migrate_left_kan(F, delta);
  rep.left_hom = static_cast<long long>(enumerate_set_nats(sigma.out, eps).size());
  rep.right_hom = static_cast<long long>(enumerate_set_nats(delta, migrate_pullback(F, eps)).size());
  rep.holds = rep.left_hom == rep.right_hom;
  return rep;
}

AdjunctionReport check_right_adjunction(const Functor& F, const SetFunctor& delta, const SetFunctor& eps) {
  AdjunctionReport rep;
  RightKanResult pi = migrate_right_kan(F, delta);
  rep.left_hom = static_cast<long long>(enumerate_set_nats(migrate_pullback(F, eps), delta).size());
  rep.right_hom = static_cast<long long>(enumerate_set_nats(eps, pi.out).size());
  rep.holds = rep.left_hom == rep.right_hom;
  return rep;
}

SetFunctor do_bind(const SetFunctor& inst, int variable, int row) {
  const FinCategory& c = inst.schema;
  if (!c.has_object(variable)) throw CatError("IndexOutOfRange", "unknown schema object " + std::to_string(variable));
  const auto& rows = inst.rows(variable);
  if (std::find(rows.begin(), rows.end(), row) == rows.end())
    throw CatError("UnknownRow", "row " + std::to_string(row) + " is not in the table of object " + std::to_string(variable));

  // unique generator decompositions guard the surgery
  std::map<int, std::vector<int>> paths;
  for (const auto& m : c.morphisms)
    if (!c.is_identity(m.id)) paths[m.id] = generator_path(c, m.id);

  std::set<int> dropped_gens;
  for (const auto& [m, path] : paths)
    if (path.size() == 1 && c.tgt(m) == variable) dropped_gens.insert(m);

  auto survives = [&](int m) {
    if (c.is_identity(m)) return true;
    for (int g : paths.at(m))
      if (dropped_gens.count(g)) return false;
    return true;
  };

  SetFunctor out;
  out.schema.objects = c.objects;
  for (const auto& m : c.morphisms)
    if (survives(m.id)) out.schema.morphisms.push_back(m);
  out.schema.identity = c.identity;
  for (const auto& [pair, gf] : c.comp)
    if (survives(pair.first) && survives(pair.second)) out.schema.comp[pair] = gf;

  for (const auto& o : c.objects)
    out.table[o.id] = o.id == variable ? std::vector<int>{row} : inst.rows(o.id);
  for (const auto& m : out.schema.morphisms) {
    if (c.is_identity(m.id)) continue;
    std::map<int, int> act;
    for (int x : out.table.at(m.src)) act[x] = inst.act(m.id, x);
    out.action[m.id] = std::move(act);
  }
  auto issues = validate_instance(out);
  if (!issues.empty()) throw CatError(issues.front().kind, issues.front().message);
  return out;
}

FinCategory graph_schema() {
  FinCategory c;
  c.objects.push_back({0, "V"});
  c.objects.push_back({1, "E"});
  c.morphisms.push_back({0, "id_V", 0, 0});
  c.morphisms.push_back({1, "id_E", 1, 1});
  c.morphisms.push_back({2, "src", 1, 0});
  c.morphisms.push_back({3, "tgt", 1, 0});
  c.identity[0] = 0;
  c.identity[1] = 1;
  c.comp[{0, 0}] = 0;
  c.comp[{1, 1}] = 1;
  c.comp[{0, 2}] = 2;
  c.comp[{2, 1}] = 2;
  c.comp[{0, 3}] = 3;
  c.comp[{3, 1}] = 3;
  return c;
}

SetFunctor dag_as_graph_instance(const CausalDag& g) {
  SetFunctor inst;
  inst.schema = graph_schema();
  std::vector<int> verts;
  for (const auto& v : g.variables) verts.push_back(v.id);
  inst.table[0] = verts;
  std::vector<int> es;
  for (size_t i = 0; i < g.edges.size(); ++i) es.push_back(static_cast<int>(i));
  inst.table[1] = es;
  std::map<int, int> src_act, tgt_act;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    src_act[static_cast<int>(i)] = g.edges[i].first;
    tgt_act[static_cast<int>(i)] = g.edges[i].second;
  }
  inst.action[2] = src_act;
  inst.action[3] = tgt_act;
  return inst;
}

FinCategory walking_collider_shape() {
  CausalDag g;
  g.variables = {{0, "a"}, {1, "b"}, {2, "c"}};
  g.edges = {{0, 1}, {2, 1}};
  return dag_to_category(g);
}

FinCategory source_edge_shape() {
  CausalDag g;
  g.variables = {{0, "e"}, {1, "v"}};
  g.edges = {{0, 1}};
  return dag_to_category(g);
}

namespace {

Functor empty_into(const FinCategory& c) {
  Functor f;
  f.source = FinCategory{};
  f.target = c;
  return f;
}

}  // namespace

std::vector<ColliderMatch> query_colliders(const CausalDag& g) {
  SetFunctor inst = dag_as_graph_instance(g);
  ElementsCategory el = category_of_elements(inst);
  FinCategory shape = walking_collider_shape();
  FinCategory gs = graph_schema();

  // shape arrows both map to tgt : E -> V
  Functor nu;
  nu.source = shape;
  nu.target = gs;
  nu.omap = {{0, 1}, {1, 0}, {2, 1}};
  nu.mmap = {{0, 1}, {1, 0}, {2, 1}, {3, 3}, {4, 3}};
  nu = make_functor(nu);

  LiftingProblem prob{empty_into(shape), el.projection, empty_into(el.cat), nu};
  std::vector<Functor> lifts = solve_lifting(prob);

  std::set<std::tuple<int, int, int>> seen;
  std::vector<ColliderMatch> out;
  auto skel = skeleton(g);
  for (const auto& h : lifts) {
    auto [so_a, e1] = el.object_elem[h.on_object(0)];
    auto [so_b, vb] = el.object_elem[h.on_object(1)];
    auto [so_c, e2] = el.object_elem[h.on_object(2)];
    (void)so_a;
    (void)so_b;
    (void)so_c;
    if (e1 == e2) continue;
    int p1 = g.edges[e1].first, p2 = g.edges[e2].first;
    if (p1 >= p2) continue;  // keep the canonical orientation only
    if (!seen.insert({p1, vb, p2}).second) continue;
    ColliderMatch cm;
    cm.parent1 = p1;
    cm.child = vb;
    cm.parent2 = p2;
    cm.parents_adjacent = skel.count({std::min(p1, p2), std::max(p1, p2)}) > 0;
    out.push_back(cm);
  }
  std::sort(out.begin(), out.end(), [](const ColliderMatch& a, const ColliderMatch& b) {
    return std::tie(a.parent1, a.child, a.parent2) < std::tie(b.parent1, b.child, b.parent2);
  });
  return out;
}

SourceEdgeReport query_source_edges(const CausalDag& g) {
  SetFunctor inst = dag_as_graph_instance(g);
  ElementsCategory el = category_of_elements(inst);
  FinCategory shape = source_edge_shape();
  FinCategory gs = graph_schema();
  FinCategory pt = discrete_category(1);

  Functor nu;
  nu.source = shape;
  nu.target = gs;
  nu.omap = {{0, 1}, {1, 0}};
  nu.mmap = {{0, 1}, {1, 0}, {2, 2}};
  nu = make_functor(nu);

  Functor f;
  f.source = pt;
  f.target = shape;
  f.omap = {{0, 1}};
  f.mmap = {{0, 1}};
  f = make_functor(f);

  SourceEdgeReport rep;
  for (const auto& v : g.variables) {
    Functor mu;
    mu.source = pt;
    mu.target = el.cat;
    int eo = el.object_of(0, v.id);
    mu.omap = {{0, eo}};
    mu.mmap = {{0, el.cat.identity_of(eo)}};
    mu = make_functor(mu);
    LiftingProblem prob{f, el.projection, mu, nu};
    if (solve_lifting(prob).empty()) {
      rep.every_vertex_covered = false;
      rep.uncovered.push_back(v.id);
    }
  }
  return rep;
}

}  // namespace simplicat
