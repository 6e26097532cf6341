#include "dualpair/pairs.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace dualpair {

using nlohmann::json;

namespace {

json load_json(const std::string& dir, const std::string& name) {
  std::ifstream in(dir + "/" + name);
  if (!in) throw std::runtime_error("cannot open fixture " + dir + "/" + name);
  json j;
  in >> j;
  return j;
}

BuildPlan parse_plan(const json& plan_json, const std::string& u_key) {
  BuildPlan plan;
  plan.u_key = u_key;
  for (const auto& pj : plan_json) {
    PiecePlan p;
    if (pj.contains("f")) {
      p.factor_type = pj.at("f")[0].get<std::string>();
      p.factor_ordinal = pj.at("f")[1].get<int>();
    }
    std::string how = pj.at("how").get<std::string>();
    const json* params = &pj;
    if (how == "centralize") {
      const json& inner = pj.at("inner");
      std::string ih = inner.at("how").get<std::string>();
      how = "centralize-" + ih;
      params = &inner;
    }
    if (how == "full") {
      p.how = PiecePlan::How::Full;
    } else if (how == "sl2") {
      p.how = PiecePlan::How::Sl2;
    } else if (how == "admissible") {
      p.how = PiecePlan::How::Admissible;
    } else if (how == "centralize-sl2") {
      p.how = PiecePlan::How::CentralizeSl2;
    } else if (how == "centralize-admissible") {
      p.how = PiecePlan::How::CentralizeAdmissible;
    } else {
      throw std::runtime_error("unknown plan step: " + how);
    }
    if (p.how == PiecePlan::How::Sl2 || p.how == PiecePlan::How::CentralizeSl2) {
      p.sl2_index = params->at("index").get<long>();
      p.sl2_prime = params->at("prime").get<std::string>();
    }
    if (p.how == PiecePlan::How::Admissible || p.how == PiecePlan::How::CentralizeAdmissible)
      p.circles = params->at("circles").get<std::vector<int>>();
    plan.pieces.push_back(std::move(p));
  }
  return plan;
}

}  // namespace

bool Catalog::contains(const std::string& ambient_type, const SemisimpleTypeInfo& t) const {
  auto it = nodes.find(ambient_type);
  if (it == nodes.end()) return false;
  std::string key = t.key_no_primes();
  for (const CatalogNode& n : it->second)
    if (n.type.key_no_primes() == key) return true;
  return false;
}

Fixtures load_fixtures(const std::string& dir) {
  Fixtures fx;
  fx.appendix_a = load_appendix_a(dir);
  fx.appendix_b = load_appendix_b(dir);

  json cat = load_json(dir, "s_subalgebra_catalog.json");
  for (auto& [type, body] : cat.items()) {
    for (const auto& nj : body.at("nodes")) {
      CatalogNode node;
      node.raw = nj.at("t").get<std::string>();
      node.type = SemisimpleTypeInfo::parse(node.raw);
      if (nj.contains("atoms")) {
        for (const auto& aj : nj.at("atoms")) {
          CatalogNode::Atom atom;
          atom.raw = aj.at("t").get<std::string>();
          atom.type = SemisimpleTypeInfo::parse(atom.raw);
          if (aj.contains("build")) {
            atom.build_kind = aj.at("build").at("kind").get<std::string>();
            atom.circles = aj.at("build").at("circles").get<std::vector<int>>();
          }
          node.atoms.push_back(std::move(atom));
        }
      } else {
        for (const SimpleFactor& f : node.type.factors) {
          CatalogNode::Atom atom;
          atom.type.factors = {f};
          atom.raw = f.str();
          node.atoms.push_back(std::move(atom));
        }
      }
      fx.catalog.nodes[type].push_back(std::move(node));
    }
    for (const auto& ej : body.at("edges"))
      fx.catalog.edges[type].emplace_back(ej[0].get<std::string>(), ej[1].get<std::string>());
  }

  json tables = load_json(dir, "pair_tables.json");
  for (auto& [type, rows] : tables.at("max_reg_pairs").items())
    for (const auto& r : rows)
      fx.max_reg_pairs[type].emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
  for (const auto& r : tables.at("s_irreducible")) {
    SIrrFixtureRow row;
    row.g = r.at("g").get<std::string>();
    row.a = r.at("a").get<std::string>();
    row.b = r.at("b").get<std::string>();
    row.circles = r.at("circles").get<std::vector<int>>();
    row.maximal = r.at("maximal").get<bool>();
    fx.s_irreducible.push_back(std::move(row));
  }
  for (auto& [type, rows] : tables.at("classical_pairs").items())
    for (const auto& r : rows) {
      PairRowFixture row;
      row.a = r.at("a").get<std::string>();
      row.b = r.at("b").get<std::string>();
      row.tag = r.at("tag").get<std::string>();
      fx.classical_pairs[type].push_back(std::move(row));
    }

  json exc = load_json(dir, "exceptional_pairs.json");
  for (auto& [type, rows] : exc.items()) {
    if (type == "refutations") continue;
    for (const auto& r : rows) {
      PlannedRowFixture row;
      row.g = type;
      row.u_key = r.at("u").get<std::string>();
      row.a = r.at("a").get<std::string>();
      row.b = r.at("b").get<std::string>();
      row.display = r.at("display").get<std::string>();
      row.plan = parse_plan(r.at("plan"), row.u_key);
      fx.exceptional_pairs[type].push_back(std::move(row));
    }
  }
  for (const auto& r : exc.at("refutations")) {
    PlannedRowFixture row;
    row.g = r.at("g").get<std::string>();
    row.u_key = r.at("u").get<std::string>();
    row.a = r.at("a").get<std::string>();
    row.b = r.at("expected_b").get<std::string>();
    row.display = r.at("display").get<std::string>();
    row.plan = parse_plan(r.at("plan"), row.u_key);
    fx.refutations.push_back(std::move(row));
  }
  return fx;
}

bool catalog_multiplicativity_consistent(const Catalog& c, std::string* detail) {
  for (const auto& [ambient, edge_list] : c.edges) {
    auto node_of = [&](const std::string& raw) -> const CatalogNode* {
      for (const CatalogNode& n : c.nodes.at(ambient))
        if (n.raw == raw) return &n;
      return nullptr;
    };
    for (const auto& [parent_raw, child_raw] : edge_list) {
      const CatalogNode* child = node_of(child_raw);
      if (!child) {
        if (detail) *detail = ambient + ": unknown edge child " + child_raw;
        return false;
      }
      std::vector<SimpleFactor> parents;
      if (const CatalogNode* p = node_of(parent_raw)) {
        parents = p->type.factors;
      } else {
        // The forest root: the ambient algebra itself, index 1.
        SimpleFactor f;
        f.type = SimpleType::parse(ambient);
        f.index = 1;
        parents = {f};
      }
      // Greedy assignment: every child factor needs a parent factor whose
      // index divides its own and whose rank can contain it.
      std::vector<bool> used(parents.size(), false);
      for (const SimpleFactor& cf : child->type.factors) {
        bool placed = false;
        for (std::size_t i = 0; i < parents.size() && !placed; ++i) {
          const SimpleFactor& pf = parents[i];
          if (pf.type.rank < cf.type.rank) continue;
          Rat ratio = cf.index / pf.index;
          if (!is_integer(ratio) || ratio <= 0) continue;
          if (pf.type == cf.type && cf.index == pf.index && !used[i]) used[i] = true;
          placed = true;
        }
        if (!placed) {
          if (detail)
            *detail = ambient + ": factor " + cf.str() + " of " + child_raw +
                      " has no multiplicative home in " + parent_raw;
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace dualpair
