#include "json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ncequiv::cli {

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Scalar entry(const json& e, const FieldPtr& field) {
  if (e.is_string()) return parse_scalar(e.get<std::string>(), field);
  if (e.is_number_integer()) return Scalar(e.get<long>());
  throw std::invalid_argument("matrix entries must be strings or integers");
}

}  // namespace

Matrix matrix_from_json(const json& j, const FieldPtr& field) {
  if (!j.is_array()) throw std::invalid_argument("a matrix is a list of rows");
  const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  Matrix m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = entry(j[i][c], field);
  }
  return m;
}

FieldPtr field_of(const json& j) {
  if (j.is_object() && j.contains("field")) return parse_field(j.at("field").get<std::string>());
  return Field::rationals();
}

json to_json(const MatrixTuple& x) {
  json j;
  j["size"] = x.size;
  j["field"] = x.field()->declaration();
  j["matrices"] = json::array();
  for (const auto& m : x.mats) j["matrices"].push_back(to_json(m));
  return j;
}

std::vector<Matrix> matrices_from_json(const json& j) {
  FieldPtr f = field_of(j);
  const json& ms = j.is_object() ? j.at("matrices") : j;
  std::vector<Matrix> out;
  for (const auto& m : ms) out.push_back(matrix_from_json(m, f));
  for (const auto& m : out)
    if (m.rows() != out[0].rows() || m.cols() != out[0].cols()) throw std::invalid_argument("matrix shapes differ");
  return out;
}

MatrixTuple tuple_from_json(const json& j) {
  MatrixTuple x(matrices_from_json(j));
  if (j.is_object() && j.contains("size")) {
    auto k = j.at("size").get<std::size_t>();
    if (!x.mats.empty() && k != x.size) throw std::invalid_argument("declared size does not match the matrices");
    x.size = k;
  }
  return x;
}

json to_json(const LinearPencil& l) {
  json j;
  j["homogeneous"] = l.homogeneous;
  FieldPtr f = Field::rationals();
  for (const auto& m : l.coeffs) f = common_field(f, m.field());
  j["field"] = f->declaration();
  j["coefficients"] = json::array();
  for (const auto& m : l.coeffs) j["coefficients"].push_back(to_json(m));
  return j;
}

LinearPencil pencil_from_json(const json& j) {
  FieldPtr f = field_of(j);
  std::vector<Matrix> c;
  for (const auto& m : j.at("coefficients")) c.push_back(matrix_from_json(m, f));
  return LinearPencil(j.value("homogeneous", true), std::move(c));
}

json to_json(const RefutationWitness& w) {
  json j;
  j["kind"] = to_string(w.kind);
  j["tuple"] = to_json(w.x);
  switch (w.kind) {
    case RefutationWitness::Kind::Rank:
      j["power"] = w.power;
      j["rank_f"] = w.rank_f;
      j["rank_g"] = w.rank_g;
      break;
    case RefutationWitness::Kind::Charpoly:
      j["charpoly_f"] = w.charpoly_f.to_string();
      j["charpoly_g"] = w.charpoly_g.to_string();
      break;
    case RefutationWitness::Kind::Jordan:
      j["factor"] = w.factor.to_string();
      j["power"] = w.power;
      j["rank_f"] = w.rank_f;
      j["rank_g"] = w.rank_g;
      break;
    case RefutationWitness::Kind::Norm:
      j["norm"] = w.norm;
      j["norm_f"] = w.norm_f;
      j["norm_g"] = w.norm_g;
      break;
  }
  return j;
}

RefutationWitness witness_from_json(const json& j) {
  RefutationWitness w;
  const std::string kind = j.at("kind").get<std::string>();
  w.x = tuple_from_json(j.at("tuple"));
  FieldPtr f = w.x.field();
  if (kind == "rank") {
    w.kind = RefutationWitness::Kind::Rank;
  } else if (kind == "charpoly") {
    w.kind = RefutationWitness::Kind::Charpoly;
    w.charpoly_f = parse_unipoly(j.at("charpoly_f").get<std::string>(), field_of(j.at("tuple")));
    w.charpoly_g = parse_unipoly(j.at("charpoly_g").get<std::string>(), field_of(j.at("tuple")));
  } else if (kind == "jordan") {
    w.kind = RefutationWitness::Kind::Jordan;
    w.factor = parse_unipoly(j.at("factor").get<std::string>(), field_of(j.at("tuple")));
  } else if (kind == "norm") {
    w.kind = RefutationWitness::Kind::Norm;
    w.norm = j.at("norm").get<std::string>();
    w.norm_f = j.at("norm_f").get<double>();
    w.norm_g = j.at("norm_g").get<double>();
  } else {
    throw std::invalid_argument("unknown witness kind '" + kind + "'");
  }
  w.power = j.value("power", std::size_t{1});
  w.rank_f = j.value("rank_f", std::size_t{0});
  w.rank_g = j.value("rank_g", std::size_t{0});
  return w;
}

json to_json(const ComaxCertificate& c, const VarNames& vars) {
  json j;
  j["side"] = c.side == Side::Right ? "right" : "left";
  j["f"] = print(c.f, vars);
  j["g"] = print(c.g, vars);
  j["u"] = print(c.u, vars);
  j["v"] = print(c.v, vars);
  return j;
}

json load_json(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return json::parse(ss.str());
}

}  // namespace ncequiv::cli
