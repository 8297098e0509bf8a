#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "hh/alg_root.hpp"
#include "hh/verify.hpp"

#ifndef HH_TEST_DATA_DIR
#define HH_TEST_DATA_DIR "tests/data"
#endif

namespace hh::test {

/// One line of a frozen oracle table: a monomial of one coefficient.
struct OracleRow {
  char component;
  Rat exponent;
  std::vector<int> powers;
  std::vector<QI> coords;
};

inline std::vector<OracleRow> load_oracle(const std::string& file) {
  std::ifstream in(std::string(HH_TEST_DATA_DIR) + "/" + file);
  REQUIRE_MESSAGE(in.good(), "missing oracle table " << file);
  std::vector<OracleRow> rows;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto p1 = line.find('|'), p2 = line.rfind('|');
    std::istringstream head(line.substr(0, p1)), mid(line.substr(p1 + 1, p2 - p1 - 1)), tail(line.substr(p2 + 1));
    OracleRow r;
    std::string e;
    head >> r.component >> e;
    r.exponent = parse_rat(e);
    for (int k; mid >> k;) r.powers.push_back(k);
    for (std::string c; tail >> c;) r.coords.push_back(parse_qi(c));
    rows.push_back(r);
  }
  return rows;
}

/// Expected coefficient of τ^e in `comp`, as a ParamPoly over `names`, with
/// coordinates on the power basis of `field`'s generator. `table_names` are
/// the parameter names of the table columns.
inline ParamPoly oracle_coeff(const std::vector<OracleRow>& rows, char comp, const Rat& e, const FieldPtr& field,
                              const std::vector<std::string>& table_names, const std::vector<std::string>& names) {
  ParamPoly out(names);
  for (const auto& r : rows) {
    if (r.component != comp || r.exponent != e) continue;
    ParamPoly m = ParamPoly::constant(names, AlgScalar(field, r.coords));
    for (size_t k = 0; k < r.powers.size(); ++k)
      for (int j = 0; j < r.powers[k]; ++j) m *= ParamPoly::variable(names, table_names[k]);
    out += m;
  }
  return out;
}

inline std::vector<Rat> oracle_exponents(const std::vector<OracleRow>& rows, char comp) {
  std::vector<Rat> es;
  for (const auto& r : rows)
    if (r.component == comp && (es.empty() || es.back() != r.exponent)) es.push_back(r.exponent);
  return es;
}

/// Q(2^(1/4)) and Q(√2), Q(√14): the fields of the printed series.
inline FieldPtr quartic_two() { return alg_root(AlgScalar(2), 4).field; }
inline FieldPtr sqrt_field(long n) { return alg_root(AlgScalar(n), 2).field; }

}  // namespace hh::test
