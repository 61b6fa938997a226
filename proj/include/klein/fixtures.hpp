// Loading of the JSON and text fixtures shipped in fixtures/.

#ifndef KLEIN_FIXTURES_HPP_
#define KLEIN_FIXTURES_HPP_

#include "hermitian.hpp"
#include "polytext.hpp"

#include <json.hpp>

#include <string>

namespace klein {

// Runtime override of the fixture directory; empty means the built-in one.
inline std::string& fixture_dir_override() {
  static std::string dir;
  return dir;
}

inline std::string fixture_dir() {
  if (!fixture_dir_override().empty())
    return fixture_dir_override();
#ifdef KLEIN_FIXTURE_DIR
  return KLEIN_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

inline std::string fixture_path(const std::string& name) { return fixture_dir() + "/" + name; }

inline nlohmann::json load_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// Square matrix of [a, b] pairs meaning a + b lambda, under key "rows".
inline HermMatrix quadint_matrix_from_json(const nlohmann::json& j) {
  const auto& rows = j.at("rows");
  const std::size_t n = rows.size();
  HermMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw std::runtime_error("quadint matrix is not square");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& e = rows[r][c];
      if (!e.is_array() || e.size() != 2)
        throw std::runtime_error("quadint entry must be [a, b]");
      m(r, c) = QuadInt(Integer(e[0].get<long>()), Integer(e[1].get<long>()));
    }
  }
  return m;
}

inline nlohmann::json quadint_matrix_to_json(const HermMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).a().get_str(), m(r, c).b().get_str()});
    rows.push_back(row);
  }
  return rows;
}

inline HermMatrix load_quadint_matrix(const std::string& name) {
  return quadint_matrix_from_json(load_json(fixture_path(name)));
}

inline MultiPoly<Rational> load_sextic() { return parse_polynomial(read_text_file(fixture_path("sextic.txt")), 6); }

} // namespace klein

#endif
