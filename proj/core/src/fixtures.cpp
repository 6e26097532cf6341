#include "dualpair/fixtures.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace dualpair {

using nlohmann::json;

namespace {

json load_json(const std::string& dir, const std::string& name) {
  std::string path = dir + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace

std::string default_fixture_dir() {
#ifdef DUALPAIR_SOURCE_FIXTURES
  return DUALPAIR_SOURCE_FIXTURES;
#else
  return "data/fixtures";
#endif
}

std::map<std::string, std::vector<Sl2FixtureRow>> load_appendix_a(const std::string& dir) {
  json j = load_json(dir, "appendix_a.json");
  std::map<std::string, std::vector<Sl2FixtureRow>> out;
  for (auto& [type, rows] : j.items()) {
    for (auto& r : rows) {
      Sl2FixtureRow row;
      row.index = r.at("index").get<long>();
      row.prime = r.at("prime").get<std::string>();
      row.dv = r.at("dv").get<std::vector<long>>();
      row.diagram = r.at("diagram").get<std::vector<long>>();
      out[type].push_back(std::move(row));
    }
  }
  return out;
}

AppendixB load_appendix_b(const std::string& dir) {
  json j = load_json(dir, "appendix_b.json");
  AppendixB out;
  for (auto& [family, labels] : j.at("irreps").items()) {
    for (auto& [name, body] : labels.items()) {
      IrrepLabel lab;
      for (const auto& c : body.at("hw")) lab.highest_weight.push_back(parse_rat(c.get<std::string>()));
      lab.dim = body.at("dim").get<long>();
      out.irreps[family][name] = std::move(lab);
    }
  }
  auto read_matrix = [](const json& rows) {
    QMatrix m;
    for (const auto& r : rows) {
      QVec row;
      for (const auto& c : r) row.push_back(parse_rat(c.get<std::string>()));
      m.append_row(row);
    }
    return m;
  };
  for (const std::string family : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    for (const auto& r : j.at(family)) {
      EmbeddingFixtureRow row;
      row.source = family;
      row.target = r.at("target").get<std::string>();
      row.index = r.at("index").get<long>();
      row.prime = r.at("prime").get<std::string>();
      for (const auto& s : r.at("summands"))
        row.summands.emplace_back(s[0].get<std::string>(), s[1].get<long>());
      row.map = read_matrix(r.at("map"));
      if (r.contains("map2")) row.map2 = read_matrix(r.at("map2"));
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

QVec realize_printed_dv(const RootSystem& rs, const std::vector<long>& printed) {
  QVec v(rs.ambient, Rat(0));
  if (printed.size() == rs.ambient) {
    for (std::size_t i = 0; i < printed.size(); ++i) v[i] = printed[i];
    return v;
  }
  if (rs.simple_type.family == 'A' && printed.size() + 1 == rs.ambient) {
    // Printed A_n vectors omit the last coordinate; the full vector is
    // traceless.
    Rat s = 0;
    for (std::size_t i = 0; i < printed.size(); ++i) {
      v[i] = printed[i];
      s += printed[i];
    }
    v[printed.size()] = -s;
    return v;
  }
  throw std::invalid_argument("printed defining vector has the wrong length");
}

}  // namespace dualpair
