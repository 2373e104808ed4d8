#pragma once

#include <json.hpp>

#include <cstdlib>
#include <variant>

#include "art/suite.hpp"

namespace art {

using nlohmann::json;

/// A parsed workspace: one algebra, named modules/morphisms/sequences, all
/// fully validated on load (module relations, morphism intertwining,
/// sequence exactness) with the offending location in every diagnostic.
template <class F>
struct Workspace {
  F field;
  AlgebraRef<F> algebra;
  std::vector<std::pair<std::string, Module<F>>> modules;
  std::vector<std::pair<std::string, Morphism<F>>> morphisms;
  std::vector<std::pair<std::string, ShortExactSequence<F>>> sequences;

  const Module<F>* find_module(const std::string& name) const {
    for (const auto& [n, m] : modules)
      if (n == name) return &m;
    return nullptr;
  }
  const Morphism<F>* find_morphism(const std::string& name) const {
    for (const auto& [n, m] : morphisms)
      if (n == name) return &m;
    return nullptr;
  }
  const ShortExactSequence<F>* find_sequence(const std::string& name) const {
    for (const auto& [n, m] : sequences)
      if (n == name) return &m;
    return nullptr;
  }
};

using AnyWorkspace = std::variant<Workspace<Rationals>, Workspace<PrimeField>>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

template <class F>
typename F::Elt parse_scalar(const F& f, const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return f.from_int(j.template get<long long>());
    if (j.is_string()) return f.parse(j.template get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": scalars must be integers or strings like \"3/2\" (never floats)");
}

template <class F>
Mat<F> parse_matrix(const F& f, const json& j, std::size_t rows, std::size_t cols,
                    const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a row-major array of rows");
  if (j.size() != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows, got " +
                     std::to_string(j.size()));
  Mat<F> m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(where + ".row" + std::to_string(i) + ": expected " + std::to_string(cols) +
                       " entries");
    for (std::size_t k = 0; k < cols; ++k)
      m.at(i, k) = parse_scalar(f, row[k], where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

inline std::size_t max_path_len_from_env() {
  if (const char* s = std::getenv("ART_MAX_PATH_LEN")) {
    long v = std::atol(s);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 32;
}

template <class F>
Workspace<F> parse_with_field(F f, const json& j) {
  Workspace<F> ws;
  ws.field = f;

  const auto& alg = j.at("algebra");
  Quiver q;
  q.vertex_count = alg.at("vertices").template get<std::size_t>();
  std::map<std::string, std::size_t> arrow_ids;
  for (const auto& a : alg.value("arrows", json::array())) {
    Arrow arrow;
    arrow.name = a.at("id").template get<std::string>();
    const auto from = a.at("from").template get<std::size_t>();
    const auto to = a.at("to").template get<std::size_t>();
    if (from < 1 || from > q.vertex_count || to < 1 || to > q.vertex_count)
      throw ParseError("algebra.arrows." + arrow.name + ": vertex out of range (vertices are 1-based)");
    arrow.src = from - 1;
    arrow.dst = to - 1;
    if (arrow_ids.count(arrow.name))
      throw ParseError("algebra.arrows: duplicate id '" + arrow.name + "'");
    arrow_ids[arrow.name] = q.arrows.size();
    q.arrows.push_back(arrow);
  }
  std::vector<Relation<F>> rels;
  {
    std::size_t ri = 0;
    for (const auto& r : alg.value("relations", json::array())) {
      const std::string where = "algebra.relations[" + std::to_string(ri++) + "]";
      Relation<F> rel;
      for (const auto& term : r) {
        RelationTerm<F> t;
        t.coeff = parse_scalar(f, term.at("coeff"), where + ".coeff");
        Path p;
        bool first = true;
        for (const auto& aj : term.at("path")) {
          const auto name = aj.template get<std::string>();
          auto it = arrow_ids.find(name);
          if (it == arrow_ids.end()) throw ParseError(where + ": unknown arrow '" + name + "'");
          if (first) {
            p.src = q.arrows[it->second].src;
            first = false;
          }
          p.arrows.push_back(it->second);
          p.dst = q.arrows[it->second].dst;
        }
        t.path = p;
        rel.push_back(std::move(t));
      }
      rels.push_back(std::move(rel));
    }
  }
  try {
    ws.algebra = build_quiver_algebra<F>(q, rels, f, max_path_len_from_env());
  } catch (const std::exception& e) {
    throw ParseError(std::string("algebra: ") + e.what());
  }

  for (const auto& [name, mj] : j.value("modules", json::object()).items()) {
    const std::string where = "modules." + name;
    std::vector<std::size_t> dims;
    for (const auto& d : mj.at("dims")) dims.push_back(d.template get<std::size_t>());
    if (dims.size() != q.vertex_count)
      throw ParseError(where + ".dims: expected " + std::to_string(q.vertex_count) + " entries");
    std::vector<Mat<F>> act;
    const auto& aj = mj.value("action", json::object());
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      const auto& arrow = q.arrows[a];
      if (!aj.contains(arrow.name)) {
        if (dims[arrow.dst] * dims[arrow.src] != 0)
          throw ParseError(where + ".action: missing matrix for arrow '" + arrow.name + "'");
        act.emplace_back(f, dims[arrow.dst], dims[arrow.src]);
        continue;
      }
      act.push_back(parse_matrix(f, aj.at(arrow.name), dims[arrow.dst], dims[arrow.src],
                                 where + ".action." + arrow.name));
    }
    try {
      ws.modules.emplace_back(name, make_module(ws.algebra, dims, act));
    } catch (const std::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  }

  for (const auto& [name, fj] : j.value("morphisms", json::object()).items()) {
    const std::string where = "morphisms." + name;
    const auto from = fj.at("from").template get<std::string>();
    const auto to = fj.at("to").template get<std::string>();
    const auto* src = ws.find_module(from);
    const auto* dst = ws.find_module(to);
    if (!src) throw ParseError(where + ".from: unknown module '" + from + "'");
    if (!dst) throw ParseError(where + ".to: unknown module '" + to + "'");
    const auto& bj = fj.at("blocks");
    if (!bj.is_array() || bj.size() != q.vertex_count)
      throw ParseError(where + ".blocks: expected one block per vertex");
    std::vector<Mat<F>> blocks;
    for (std::size_t v = 0; v < q.vertex_count; ++v)
      blocks.push_back(parse_matrix(f, bj[v], dst->dims[v], src->dims[v],
                                    where + ".blocks[" + std::to_string(v) + "]"));
    try {
      ws.morphisms.emplace_back(name, make_morphism(*src, *dst, blocks));
    } catch (const std::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  }

  for (const auto& [name, sj] : j.value("sequences", json::object()).items()) {
    const std::string where = "sequences." + name;
    const auto in = sj.at("iota").template get<std::string>();
    const auto pn = sj.at("pi").template get<std::string>();
    const auto* iota = ws.find_morphism(in);
    const auto* pi = ws.find_morphism(pn);
    if (!iota) throw ParseError(where + ".iota: unknown morphism '" + in + "'");
    if (!pi) throw ParseError(where + ".pi: unknown morphism '" + pn + "'");
    try {
      ws.sequences.emplace_back(name, make_ses(*iota, *pi));
    } catch (const std::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return ws;
}

}  // namespace detail

inline AnyWorkspace parse_workspace(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const auto& fj = j.at("field");
  const auto kind = fj.at("kind").get<std::string>();
  if (kind == "rationals") return detail::parse_with_field(Rationals{}, j);
  if (kind == "prime") {
    const auto p = fj.at("p").get<std::uint64_t>();
    try {
      return detail::parse_with_field(PrimeField(p), j);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }
  throw ParseError("field.kind must be \"rationals\" or \"prime\"");
}

// ---------------------------------------------------------------------------
// serialization (round-trip support)

template <class F>
json scalar_to_json(const F& f, const typename F::Elt& e) {
  return f.to_string(e);
}

template <class F>
json matrix_to_json(const Mat<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m.field(), m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
json serialize_workspace(const Workspace<F>& ws) {
  json j;
  if constexpr (std::is_same_v<F, PrimeField>)
    j["field"] = {{"kind", "prime"}, {"p", ws.field.p}};
  else
    j["field"] = {{"kind", "rationals"}};
  json arrows = json::array();
  for (const auto& a : ws.algebra->quiver.arrows)
    arrows.push_back({{"id", a.name}, {"from", a.src + 1}, {"to", a.dst + 1}});
  json rels = json::array();
  for (const auto& r : ws.algebra->relations) {
    json rel = json::array();
    for (const auto& t : r) {
      json path = json::array();
      for (auto ai : t.path.arrows) path.push_back(ws.algebra->quiver.arrows[ai].name);
      rel.push_back({{"coeff", scalar_to_json(ws.field, t.coeff)}, {"path", path}});
    }
    rels.push_back(std::move(rel));
  }
  j["algebra"] = {{"vertices", ws.algebra->quiver.vertex_count}, {"arrows", arrows}, {"relations", rels}};
  json mods = json::object();
  for (const auto& [name, m] : ws.modules) {
    json action = json::object();
    for (std::size_t a = 0; a < m.act.size(); ++a)
      action[ws.algebra->quiver.arrows[a].name] = matrix_to_json(m.act[a]);
    mods[name] = {{"dims", m.dims}, {"action", action}};
  }
  j["modules"] = mods;
  json mors = json::object();
  for (const auto& [name, f] : ws.morphisms) {
    std::string from, to;
    for (const auto& [n, m] : ws.modules) {
      if (m == f.src) from = n;
      if (m == f.dst) to = n;
    }
    json blocks = json::array();
    for (const auto& b : f.blocks) blocks.push_back(matrix_to_json(b));
    mors[name] = {{"from", from}, {"to", to}, {"blocks", blocks}};
  }
  j["morphisms"] = mors;
  json seqs = json::object();
  for (const auto& [name, s] : ws.sequences) {
    std::string in, pn;
    for (const auto& [n, m] : ws.morphisms) {
      if (m == s.iota) in = n;
      if (m == s.pi) pn = n;
    }
    seqs[name] = {{"iota", in}, {"pi", pn}};
  }
  j["sequences"] = seqs;
  return j;
}

// ---------------------------------------------------------------------------
// reports

struct Report {
  std::string command;
  std::vector<SuiteRecord> records;

  bool overall() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }

  json to_json() const {
    json recs = json::array();
    for (const auto& r : records)
      recs.push_back({{"category", r.category},
                      {"name", r.name},
                      {"lhs_dim", r.lhs},
                      {"rhs_dim", r.rhs},
                      {"pass", r.pass},
                      {"note", r.note}});
    return json{{"command", command}, {"records", recs}, {"overall", overall()}};
  }
};

}  // namespace art
