#include "symqcs/json_io.hpp"

namespace symqcs {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(Scalar(m.field(), m.at(r, c)).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, Field f, int rows_hint, int cols_hint) {
  if (!j.is_array()) throw ArgError("matrix JSON must be an array of rows");
  int rows = static_cast<int>(j.size());
  if (rows == 0) return Matrix(f, std::max(0, rows_hint), std::max(0, cols_hint));
  int cols = static_cast<int>(j[0].size());
  Matrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols) throw ArgError("ragged matrix JSON");
    for (int c = 0; c < cols; ++c) {
      Scalar s = Scalar::parse(j[r][c].get<std::string>());
      if (s.field() != f && !(s.field().is_rationals() && f.is_rationals()))
        throw ConfigError("matrix entry field mismatch");
      m.set(r, c, s.value());
    }
  }
  return m;
}

Json perm_to_json(const Permutation& p) {
  return Json{{"n", p.degree()}, {"images", p.images()}};
}

Permutation perm_from_json(const Json& j) {
  auto images = j.at("images").get<std::vector<int>>();
  if (static_cast<int>(images.size()) != j.at("n").get<int>())
    throw ArgError("permutation length mismatch");
  return Permutation(std::move(images));
}

Json snmodule_to_json(const SnModule& m) {
  Json gens = Json::array();
  for (const auto& g : m.gen_actions) gens.push_back(matrix_to_json(g));
  return Json{{"n", m.n}, {"dim", m.dim}, {"gen_actions", std::move(gens)}};
}

SnModule snmodule_from_json(const Json& j, Field f) {
  SnModule m;
  m.n = j.at("n").get<int>();
  m.dim = j.at("dim").get<int>();
  m.field = f;
  for (const auto& g : j.at("gen_actions"))
    m.gen_actions.push_back(matrix_from_json(g, f, m.dim, m.dim));
  if (static_cast<int>(m.gen_actions.size()) != std::max(0, m.n - 1))
    throw ArgError("SnModule: wrong number of generator actions");
  m.validate();
  return m;
}

Json symseq_to_json(const SymSeq& s) {
  Json levels = Json::array();
  for (const auto& l : s.levels) levels.push_back(snmodule_to_json(l));
  return Json{{"cutoff", s.cutoff}, {"levels", std::move(levels)}};
}

SymSeq symseq_from_json(const Json& j, Field f) {
  SymSeq s;
  s.field = f;
  s.cutoff = j.at("cutoff").get<int>();
  for (const auto& l : j.at("levels")) s.levels.push_back(snmodule_from_json(l, f));
  s.validate();
  return s;
}

static std::string cell_key(int n, int m) { return std::to_string(n) + "," + std::to_string(m); }

static std::pair<int, int> parse_cell_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw ArgError("bad cell key '" + key + "'");
  return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
}

Json algebra_to_json(const SymAlgebra& e) {
  Json mults = Json::object();
  for (const auto& [cell, mat] : e.mults) mults[cell_key(cell.first, cell.second)] = matrix_to_json(mat);
  return Json{{"underlying", symseq_to_json(e.seq)},
              {"mults", std::move(mults)},
              {"unit", matrix_to_json(e.unit)}};
}

SymAlgebra algebra_from_json(const Json& j) {
  Field f = detect_field(j);
  SymAlgebra e;
  e.seq = symseq_from_json(j.at("underlying"), f);
  for (const auto& [key, mat] : j.at("mults").items()) {
    auto [n, m] = parse_cell_key(key);
    if (n + m > e.seq.cutoff) throw ArgError("multiplication cell beyond cutoff");
    e.mults[{n, m}] = matrix_from_json(mat, f, e.dim(n + m), e.dim(n) * e.dim(m));
  }
  for (int n = 0; n <= e.cutoff(); ++n)
    for (int m = 0; n + m <= e.cutoff(); ++m)
      if (!e.mults.count({n, m})) throw ArgError("missing multiplication cell " + cell_key(n, m));
  e.unit = matrix_from_json(j.at("unit"), f, e.dim(0), 1);
  return e;
}

Json emodule_to_json(const EModule& m) {
  Json actions = Json::object();
  for (const auto& [cell, mat] : m.actions)
    actions[cell_key(cell.first, cell.second)] = matrix_to_json(mat);
  return Json{{"algebra", algebra_to_json(*m.algebra)},
              {"underlying", symseq_to_json(m.seq)},
              {"actions", std::move(actions)}};
}

EModule emodule_from_json(const Json& j) {
  auto algebra = std::make_shared<SymAlgebra>(algebra_from_json(j.at("algebra")));
  Field f = algebra->field();
  EModule m;
  m.algebra = algebra;
  m.seq = symseq_from_json(j.at("underlying"), f);
  if (m.seq.cutoff != algebra->cutoff()) throw ArgError("module/algebra cutoff mismatch");
  for (const auto& [key, mat] : j.at("actions").items()) {
    auto [n, k] = parse_cell_key(key);
    m.actions[{n, k}] = matrix_from_json(mat, f, m.dim(n + k), m.dim(n) * algebra->dim(k));
  }
  for (int n = 0; n <= m.cutoff(); ++n)
    for (int k = 0; n + k <= m.cutoff(); ++k)
      if (!m.actions.count({n, k})) throw ArgError("missing action cell " + cell_key(n, k));
  return m;
}

Json graded_to_json(const GradedModule& m) {
  Json mult = Json::object();
  for (const auto& [cell, mat] : m.act) mult[cell_key(cell.first, cell.second)] = matrix_to_json(mat);
  return Json{{"levels", m.dims}, {"mult", std::move(mult)}};
}

GradedModule graded_from_json(const Json& j, const GradedRing& r) {
  GradedModule m;
  m.field = r.field;
  m.cutoff = r.cutoff;
  m.dims = j.at("levels").get<std::vector<int>>();
  if (static_cast<int>(m.dims.size()) != r.cutoff + 1)
    throw ArgError("graded module level count mismatch");
  for (const auto& [key, mat] : j.at("mult").items()) {
    auto [n, k] = parse_cell_key(key);
    m.act[{n, k}] = matrix_from_json(mat, r.field, m.dims[n + k], m.dims[n] * r.dim(k));
  }
  for (int n = 0; n <= m.cutoff; ++n)
    for (int k = 0; n + k <= m.cutoff; ++k)
      if (!m.act.count({n, k})) throw ArgError("missing graded action cell " + cell_key(n, k));
  return m;
}

Json ideal_to_json(const SigmaIdeal& i) {
  Json gens = Json::array();
  for (const auto& g : i.generators) {
    Json coords = Json::array();
    for (const auto& c : g.coords) coords.push_back(Scalar(i.algebra->field(), c).str());
    gens.push_back(Json{{"degree", g.degree}, {"coords", std::move(coords)}});
  }
  Json levels = Json::array();
  for (const auto& l : i.levels) levels.push_back(matrix_to_json(l));
  return Json{{"generators", std::move(gens)}, {"levels", std::move(levels)}};
}

SigmaIdeal ideal_from_json(const Json& j, std::shared_ptr<const SymAlgebra> e) {
  std::vector<HomElem> gens;
  for (const auto& g : j.at("generators")) {
    HomElem h;
    h.degree = g.at("degree").get<int>();
    for (const auto& c : g.at("coords")) h.coords.push_back(Scalar::parse(c.get<std::string>()).value());
    gens.push_back(std::move(h));
  }
  // Levels are provenance-checked: recompute the closure and compare.
  SigmaIdeal i = sigma_closure(e, gens);
  if (j.contains("levels")) {
    const auto& levels = j.at("levels");
    for (int t = 0; t <= e->cutoff(); ++t) {
      Matrix given = matrix_from_json(levels.at(t), e->field(), e->dim(t), -1);
      SpanBuilder sb(e->field(), e->dim(t));
      sb.add_cols(i.levels[t]);
      if (sb.dim() != given.cols() || !sb.contains_cols(given))
        throw InvariantViolation("ideal levels do not match the closure of the generators");
    }
  }
  return i;
}

static bool scan_for_mod(const Json& j) {
  if (j.is_string()) {
    return j.get<std::string>().find(" mod ") != std::string::npos;
  }
  if (j.is_array() || j.is_object()) {
    for (const auto& x : j)
      if (scan_for_mod(x)) return true;
  }
  return false;
}

static std::uint32_t find_modulus(const Json& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    auto pos = s.find(" mod ");
    if (pos != std::string::npos)
      return static_cast<std::uint32_t>(std::stoul(s.substr(pos + 5)));
    return 0;
  }
  if (j.is_array() || j.is_object()) {
    for (const auto& x : j) {
      auto p = find_modulus(x);
      if (p) return p;
    }
  }
  return 0;
}

Field detect_field(const Json& j) {
  if (!scan_for_mod(j)) return Field::rationals();
  return Field::prime(find_modulus(j));
}

}  // namespace symqcs
