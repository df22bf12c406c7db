#include "permsplit/json_io.hpp"

#include <string>

namespace permsplit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object", 0);
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"", 0);
  return *it;
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer", 0);
  return j.get<int>();
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string", 0);
  return j.get<std::string>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array", 0);
  return j;
}

}  // namespace

Json subset_to_json(Subset s) { return Json(s.elements()); }

Subset subset_from_json(const Json& j) {
  std::vector<int> elements;
  for (const auto& e : array(j, "subset")) elements.push_back(integer(e, "subset element"));
  return Subset::of(elements);
}

Json permutation_to_json(const Permutation& p) { return to_string(p); }

Permutation permutation_from_json(const Json& j, int n) {
  return parse_permutation(text(j, "permutation"), n);
}

Json interval_to_json(const BruhatInterval& interval) {
  return Json{{"lo", permutation_to_json(interval.lo())}, {"hi", permutation_to_json(interval.hi())}};
}

BruhatInterval interval_from_json(const Json& j) {
  const Permutation lo = permutation_from_json(field(j, "lo"));
  return BruhatInterval(lo, permutation_from_json(field(j, "hi"), lo.size()));
}

Json matroid_to_json(const SetMatroid& m) {
  Json bases = Json::array();
  for (Subset b : m.bases()) bases.push_back(subset_to_json(b));
  return Json{{"n", m.ground_size()}, {"bases", bases}};
}

SetMatroid matroid_from_json(const Json& j) {
  const int n = integer(field(j, "n"), "n");
  std::vector<Subset> bases;
  for (const auto& b : array(field(j, "bases"), "bases")) bases.push_back(subset_from_json(b));
  return matroid_from_bases(n, std::move(bases));
}

Json lpm_to_json(const LatticePathMatroid& m) {
  return Json{{"n", m.ground_size()}, {"U", subset_to_json(m.upper())}, {"L", subset_to_json(m.lower())}};
}

LatticePathMatroid lpm_from_json(const Json& j) {
  return LatticePathMatroid(integer(field(j, "n"), "n"), subset_from_json(field(j, "U")),
                            subset_from_json(field(j, "L")));
}

Json flag_to_json(const LPFMFlag& flag) {
  Json constituents = Json::array();
  for (const auto& m : flag.constituents()) constituents.push_back(lpm_to_json(m));
  return Json{{"n", flag.ground_size()}, {"constituents", constituents}};
}

LPFMFlag flag_from_json(const Json& j) {
  const int n = integer(field(j, "n"), "n");
  std::vector<LatticePathMatroid> constituents;
  for (const auto& c : array(field(j, "constituents"), "constituents")) {
    constituents.push_back(lpm_from_json(c));
    if (constituents.back().ground_size() != n) throw DomainError("constituent ground set differs from n");
  }
  if (constituents.empty()) throw DomainError("a flag needs constituents");
  return LPFMFlag(std::move(constituents));
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : array(j, "matrix")) {
    auto& out = rows.emplace_back();
    for (const auto& entry : array(row, "matrix row")) {
      out.push_back(entry.is_number_integer() ? Rational(entry.get<long>())
                                              : parse_rational(text(entry, "matrix entry")));
    }
  }
  return RationalMatrix(rows);
}

Json rational_to_json(const Rational& q) {
  if (is_integer(q)) return Json(static_cast<long>(numerator(q)));
  return to_string(q);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(text(j, "rational"));
}

Json point_to_json(const RationalPoint& p) {
  Json out = Json::array();
  for (const auto& x : p.coordinates()) out.push_back(to_string(x));
  return out;
}

RationalPoint point_from_json(const Json& j) {
  std::vector<Rational> coordinates;
  for (const auto& x : array(j, "point")) coordinates.push_back(rational_from_json(x));
  return RationalPoint(std::move(coordinates));
}

Json constraint_to_json(const LinearConstraint& c) {
  const char* sense = c.sense == Sense::kAtLeast ? ">=" : c.sense == Sense::kAtMost ? "<=" : "=";
  return Json{{"S", subset_to_json(c.support)}, {"sense", sense}, {"level", to_string(c.level)}};
}

LinearConstraint constraint_from_json(const Json& j) {
  const std::string sense = text(field(j, "sense"), "sense");
  LinearConstraint c;
  c.support = subset_from_json(field(j, "S"));
  if (sense == ">=") {
    c.sense = Sense::kAtLeast;
  } else if (sense == "<=") {
    c.sense = Sense::kAtMost;
  } else if (sense == "=") {
    c.sense = Sense::kEqual;
  } else {
    throw ParseError("sense must be one of >=, <=, =", 0);
  }
  c.level = rational_from_json(field(j, "level"));
  return c;
}

Json hyperplane_to_json(const SplitHyperplane& h) {
  return Json{{"S", subset_to_json(h.support())}, {"alpha", rational_to_json(h.level())}};
}

SplitHyperplane hyperplane_from_json(const Json& j, int n) {
  return SplitHyperplane(n, subset_from_json(field(j, "S")), rational_from_json(field(j, "alpha")));
}

Json split_report_to_json(const SplitHyperplane& h, const SplitReport& report) {
  Json out{{"hyperplane", hyperplane_to_json(h)}, {"text", to_string(h)}, {"verdict", to_string(report.verdict)}};
  if (report.cells) {
    out["cells"] = Json::array({interval_to_json(report.cells->identity_cell),
                                interval_to_json(report.cells->longest_cell)});
    out["lpfm"] = Json::array({report.lpfm.first, report.lpfm.second});
  }
  if (report.offending_face) {
    Json vertices = Json::array();
    for (const auto& v : report.offending_face->vertices) vertices.push_back(permutation_to_json(v));
    out["face"] = Json{{"shape", report.offending_face->shape == FaceShape::kSquare ? "square" : "hexagon"},
                       {"vertices", vertices},
                       {"min", permutation_to_json(report.offending_face->min)},
                       {"max", permutation_to_json(report.offending_face->max)}};
  }
  if (!report.detail.empty()) out["detail"] = report.detail;
  return out;
}

Json subdivision_to_json(const Subdivision& s) {
  Json hyperplanes = Json::array();
  for (const auto& h : s.hyperplanes) hyperplanes.push_back(hyperplane_to_json(h));
  Json cells = Json::array();
  for (const auto& c : s.cells) {
    cells.push_back(Json{{"signs", c.signs},
                         {"lo", permutation_to_json(c.interval.lo())},
                         {"hi", permutation_to_json(c.interval.hi())},
                         {"lpfm", c.lpfm}});
  }
  return Json{{"n", s.n}, {"hyperplanes", hyperplanes}, {"cells", cells}};
}

Subdivision subdivision_from_json(const Json& j) {
  Subdivision s;
  s.n = integer(field(j, "n"), "n");
  for (const auto& h : array(field(j, "hyperplanes"), "hyperplanes")) {
    s.hyperplanes.push_back(hyperplane_from_json(h, s.n));
  }
  for (const auto& c : array(field(j, "cells"), "cells")) {
    const auto& lpfm = field(c, "lpfm");
    if (!lpfm.is_boolean()) throw ParseError("lpfm must be a boolean", 0);
    s.cells.push_back(SubdivisionCell{text(field(c, "signs"), "signs"), interval_from_json(c),
                                      lpfm.get<bool>()});
  }
  return s;
}

Json poset_to_json(const SubdivisionPoset& poset) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    Json e{{"id", i}};
    const Json body = subdivision_to_json(poset.elements[i]);
    for (const auto& [key, value] : body.items()) e[key] = value;
    elements.push_back(e);
  }
  Json covers = Json::array();
  for (const auto& [lo, hi] : poset.covers) covers.push_back(Json::array({lo, hi}));
  return Json{{"n", poset.n}, {"elements", elements}, {"covers", covers}};
}

SubdivisionPoset poset_from_json(const Json& j) {
  SubdivisionPoset poset;
  poset.n = integer(field(j, "n"), "n");
  for (const auto& e : array(field(j, "elements"), "elements")) {
    if (integer(field(e, "id"), "id") != static_cast<int>(poset.elements.size())) {
      throw ParseError("element ids must run 0, 1, 2, ...", 0);
    }
    poset.elements.push_back(subdivision_from_json(e));
  }
  const int size = static_cast<int>(poset.elements.size());
  for (const auto& c : array(field(j, "covers"), "covers")) {
    if (!c.is_array() || c.size() != 2) throw ParseError("a cover is a pair of ids", 0);
    const int lo = integer(c[0], "cover id");
    const int hi = integer(c[1], "cover id");
    if (lo < 0 || hi < 0 || lo >= size || hi >= size) throw DomainError("cover id out of range");
    poset.covers.emplace_back(lo, hi);
  }
  return poset;
}

}  // namespace permsplit
