#include "nestfock/io.hpp"

#include <sstream>

#include "nestfock/errors.hpp"

namespace nestfock {

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DomainError("partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

Json to_json(const Cell& c) { return Json::array({c.row, c.col}); }

Json to_json(const IncidencePair& p) { return Json{{"lambda", to_json(p.lambda)}, {"mu", to_json(p.mu)}}; }

IncidencePair pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("mu")) {
    throw DomainError("pair must be an object with \"lambda\" and \"mu\"");
  }
  return make_incidence_pair(partition_from_json(j.at("lambda")), partition_from_json(j.at("mu")));
}

Json to_json(const B2Key& k) { return Json{{"i", k.i}, {"nu", to_json(k.nu)}}; }

B2Key b2key_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("i") || !j.contains("nu") || !j.at("i").is_number_integer()) {
    throw DomainError("B2 key must be an object with integer \"i\" and array \"nu\"");
  }
  int i = j.at("i").get<int>();
  if (i < 0) throw DomainError("B2 key needs i >= 0");
  return B2Key{i, partition_from_json(j.at("nu"))};
}

Json to_json(const B3Key& k) { return to_json(k.pair); }
Json to_json(const HilbPKey& k) { return to_json(k.nu); }
Json to_json(const HilbFixedKey& k) { return to_json(k.lambda); }
Json to_json(const HilbLKey& k) { return to_json(k.lambda); }

Json to_json(const BasisKey& k) {
  return std::visit([](const auto& x) { return to_json(x); }, k);
}

Json to_json(const EulerClass& e) {
  return Json{{"sign", e.sign}, {"magnitude", e.magnitude.get_str()}, {"t_exponent", e.t_exponent}};
}

Json symfunc_to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f) terms.push_back(Json{{"partition", to_json(k)}, {"coeff", to_fraction_string(c)}});
  return Json{{"p", terms}};
}

Json to_json(const PolyV& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f) {
    terms.push_back(Json{{"partition", to_json(k.nu)}, {"v", k.v}, {"coeff", to_fraction_string(c)}});
  }
  return Json{{"p", terms}};
}

Json rows_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix rows_from_json(const Json& rows, std::size_t n_rows, std::size_t n_cols) {
  if (!rows.is_array() || rows.size() != n_rows) throw DomainError("matrix has the wrong number of rows");
  RatMatrix m(n_rows, n_cols);
  for (std::size_t r = 0; r < n_rows; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != n_cols) throw DomainError("matrix row has the wrong length");
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (!row[c].is_string()) throw DomainError("matrix entries must be \"p/q\" strings");
      m(r, c) = parse_fraction(row[c].get<std::string>());
    }
  }
  return m;
}

Json to_json(const TransitionMatrix& m) {
  Json src = Json::array();
  for (const auto& k : basis_keys(m.source, m.degree)) src.push_back(to_json(k));
  Json dst = Json::array();
  for (const auto& k : basis_keys(m.target, m.degree)) dst.push_back(to_json(k));
  return Json{{"source", basis_name(m.source)},   {"target", basis_name(m.target)},
              {"degree", m.degree},                {"triangularity", m.triangularity},
              {"source_keys", std::move(src)},     {"target_keys", std::move(dst)},
              {"rows", rows_to_json(m.entries)}};
}

std::string key_label(const BasisKey& k) { return to_json(k).dump(); }

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const TransitionMatrix& m) {
  std::ostringstream os;
  auto src = basis_keys(m.source, m.degree);
  auto dst = basis_keys(m.target, m.degree);
  os << csv_cell(std::string(basis_name(m.source)) + "\\" + std::string(basis_name(m.target)));
  for (const auto& k : dst) os << ',' << csv_cell(key_label(k));
  os << '\n';
  for (std::size_t r = 0; r < src.size(); ++r) {
    os << csv_cell(key_label(src[r]));
    for (std::size_t c = 0; c < dst.size(); ++c) os << ',' << to_fraction_string(m.entries(r, c));
    os << '\n';
  }
  return os.str();
}

}  // namespace nestfock
