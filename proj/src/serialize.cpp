#include "gcz/serialize.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gcz/error.hpp"

namespace gcz {
namespace {

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

ordered_json zone_to_json(const ZoneMeasure& z);
ordered_json witness_to_json(const Witness& w);

}  // namespace

std::string format_complex(const ComplexValue& v) {
  if (v.exact) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%" PRId64 "%c%" PRId64 "i", v.re_n,
                  v.im_n < 0 ? '-' : '+', v.im_n < 0 ? -v.im_n : v.im_n);
    return buf;
  }
  double im = v.im == 0.0 ? 0.0 : v.im;
  std::string s = format_double(v.re);
  s += im < 0 ? '-' : '+';
  s += format_double(std::fabs(im));
  s += 'i';
  return s;
}

ordered_json array_to_json(const UnimodularArray& a) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < a.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(a.exponent(i, j));
    rows.push_back(std::move(row));
  }
  return ordered_json{
      {"q", a.q()}, {"rows", a.rows()}, {"cols", a.cols()}, {"exp", rows}};
}

UnimodularArray array_from_json(const nlohmann::json& j) {
  try {
    std::int64_t q = j.at("q").get<std::int64_t>();
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const auto& exp = j.at("exp");
    if (!exp.is_array() || static_cast<int>(exp.size()) != rows)
      throw Error(ErrorCode::bad_input, "exp must have one row per array row");
    std::vector<std::int32_t> e;
    e.reserve(static_cast<std::size_t>(rows) * std::max(cols, 0));
    for (const auto& row : exp) {
      if (!row.is_array() || static_cast<int>(row.size()) != cols)
        throw Error(ErrorCode::bad_input, "exp rows must have cols entries");
      for (const auto& x : row) e.push_back(x.get<std::int32_t>());
    }
    return UnimodularArray(q, rows, cols, std::move(e));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input,
                std::string("malformed array JSON: ") + e.what());
  }
}

ordered_json pair_to_json(const ArrayPair& p) {
  return ordered_json{{"first", array_to_json(p.first)},
                      {"second", array_to_json(p.second)}};
}

ArrayPair pair_from_json(const nlohmann::json& j) {
  try {
    return ArrayPair(array_from_json(j.at("first")),
                     array_from_json(j.at("second")));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input,
                std::string("malformed pair JSON: ") + e.what());
  }
}

ordered_json table_to_json(const CorrelationTable& t) {
  ordered_json rows = ordered_json::array();
  for (int t1 = t.tau1_min(); t1 <= t.tau1_max(); ++t1) {
    ordered_json row = ordered_json::array();
    for (int t2 = t.tau2_min(); t2 <= t.tau2_max(); ++t2)
      row.push_back(format_complex(t.at(t1, t2)));
    rows.push_back(std::move(row));
  }
  return ordered_json{
      {"kind", t.kind() == CorrelationTable::Kind::periodic ? "periodic"
                                                            : "aperiodic"},
      {"rows", t.rows()},
      {"cols", t.cols()},
      {"tau1", {t.tau1_min(), t.tau1_max()}},
      {"tau2", {t.tau2_min(), t.tau2_max()}},
      {"exact", t.exact()},
      {"values", rows}};
}

std::string table_to_csv(const CorrelationTable& t) {
  std::string out;
  for (int t1 = t.tau1_min(); t1 <= t.tau1_max(); ++t1) {
    for (int t2 = t.tau2_min(); t2 <= t.tau2_max(); ++t2) {
      if (t2 != t.tau2_min()) out += ',';
      out += format_complex(t.at(t1, t2));
    }
    out += '\n';
  }
  return out;
}

namespace {

ordered_json witness_to_json(const Witness& w) {
  return ordered_json{{"tau", {w.tau1, w.tau2}},
                      {"value", format_complex(w.value)}};
}

ordered_json zone_to_json(const ZoneMeasure& z) {
  ordered_json j{{"rep", {z.z1, z.z2}}};
  ordered_json frontier = ordered_json::array();
  for (auto [a, b] : z.frontier) frontier.push_back({a, b});
  j["frontier"] = frontier;
  if (z.dim1_witness) j["dim1_witness"] = witness_to_json(*z.dim1_witness);
  if (z.dim2_witness) j["dim2_witness"] = witness_to_json(*z.dim2_witness);
  return j;
}

}  // namespace

ordered_json report_to_json(const ZczReport& r) {
  ordered_json j{{"rows", r.rows}, {"cols", r.cols}, {"q", r.q}};
  j["is_gcap"] = r.is_gcap;
  if (r.gcap_witness) j["gcap_witness"] = witness_to_json(*r.gcap_witness);
  j["zacz_first"] = zone_to_json(r.zacz_first);
  j["zacz_second"] = zone_to_json(r.zacz_second);
  j["zccz"] = zone_to_json(r.zccz);
  j["z_min"] = {r.z_min1, r.z_min2};
  j["tolerance"] = r.tolerance;
  return j;
}

ordered_json seed_to_json(const SeedRecord& s) {
  return ordered_json{{"id", s.id},
                      {"provenance", s.provenance},
                      {"notes", s.notes},
                      {"pair", pair_to_json(s.pair)}};
}

ArrayPair load_pair(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::bad_input, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input,
                path + " is not valid JSON: " + e.what());
  }
  return pair_from_json(j);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::bad_input, "cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::bad_input, "failed writing " + path);
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace gcz
