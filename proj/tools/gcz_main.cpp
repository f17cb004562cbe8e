#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gcz/construct.hpp"
#include "gcz/error.hpp"
#include "gcz/seeds.hpp"
#include "gcz/serialize.hpp"
#include "gcz/verify.hpp"

namespace {

using gcz::ArrayPair;
using gcz::Error;
using gcz::ErrorCode;

// A pair source is either "catalog:<id>" or a path to a pair JSON file.
ArrayPair load_selector(const std::string& sel) {
  if (sel.rfind("catalog:", 0) == 0) {
    std::string id = sel.substr(8);
    auto seed = gcz::find_seed(id);
    if (!seed) {
      std::string known;
      for (const auto& s : gcz::catalog()) {
        if (!known.empty()) known += ", ";
        known += s.id;
      }
      throw Error(ErrorCode::bad_input,
                  "unknown catalog id '" + id + "' (known: " + known + ")");
    }
    return seed->pair;
  }
  return gcz::load_pair(sel);
}

gcz::SignQuadruple parse_signs(const std::string& text) {
  gcz::SignQuadruple s;
  int* slot[4] = {&s.x1, &s.x2, &s.x3, &s.x4};
  std::stringstream ss(text);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 4) throw Error(ErrorCode::bad_input, "signs need 4 entries");
    if (tok == "1" || tok == "+1")
      *slot[i] = 1;
    else if (tok == "-1")
      *slot[i] = -1;
    else
      throw Error(ErrorCode::bad_input, "signs must be 1 or -1, got '" + tok + "'");
    ++i;
  }
  if (i != 4) throw Error(ErrorCode::bad_input, "signs need 4 entries");
  if (!s.valid())
    throw Error(ErrorCode::invalid_signs,
                "sign quadruple must satisfy x1*x2 + x3*x4 = 0");
  return s;
}

// Claims are "Z" (one dimension) or "Z1xZ2".
std::pair<int, int> parse_claim(const std::string& text) {
  try {
    auto x = text.find('x');
    if (x == std::string::npos) return {1, std::stoi(text)};
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::bad_input, "claims look like '11' or '3x4'");
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    gcz::save_text(out_path, text);
}

std::string width_text(int z1, int z2, int rows) {
  if (rows == 1) return std::to_string(z2);
  return std::to_string(z1) + " x " + std::to_string(z2);
}

std::string zone_text(const gcz::ZoneMeasure& z, int rows) {
  std::string s = width_text(z.z1, z.z2, rows);
  if (rows > 1 && z.frontier.size() > 1) {
    s += "   frontier:";
    for (auto [a, b] : z.frontier)
      s += " " + std::to_string(a) + "x" + std::to_string(b);
  }
  return s;
}

std::string witness_text(const gcz::Witness& w) {
  return "shift (" + std::to_string(w.tau1) + ", " + std::to_string(w.tau2) +
         "), value " + gcz::format_complex(w.value);
}

std::string report_text(const gcz::ZczReport& r) {
  std::string s;
  s += "pair: " + std::to_string(r.rows) + " x " + std::to_string(r.cols) +
       ", alphabet q = " + std::to_string(r.q) + "\n";
  s += std::string("complementary: ") + (r.is_gcap ? "yes" : "no") + "\n";
  if (r.gcap_witness)
    s += "  autocorrelation sum nonzero at " + witness_text(*r.gcap_witness) + "\n";
  s += "auto zone (first):  " + zone_text(r.zacz_first, r.rows) + "\n";
  s += "auto zone (second): " + zone_text(r.zacz_second, r.rows) + "\n";
  s += "cross zone:         " + zone_text(r.zccz, r.rows) + "\n";
  s += "z_min: " + width_text(r.z_min1, r.z_min2, r.rows) + "\n";
  return s;
}

struct CommonOpts {
  std::string seed;
  std::string mate;
  std::string out;
};

int run(int argc, char** argv) {
  CLI::App app{"construction, verification and measurement of complementary "
               "pairs with periodic zero-correlation zones"};
  app.require_subcommand(1);

  std::string signs_text, claim_text, in_sel, table_sel = "first",
              kind_sel = "periodic", format_sel;
  std::optional<double> tol;
  CommonOpts c1d, c2d, c2f, cmate;
  int search_length = 0;
  std::int64_t search_q = 2;
  std::optional<std::size_t> search_limit;
  std::uint64_t search_max = std::uint64_t(1) << 32;
  std::string search_out;

  auto* s1 = app.add_subcommand("construct-1d",
                                "expand a length-N seed pair to length 4N");
  s1->add_option("--seed", c1d.seed, "catalog:<id> or pair file")->required();
  s1->add_option("--signs", signs_text, "x1,x2,x3,x4 with x1*x2+x3*x4=0")
      ->required();
  s1->add_option("--mate", c1d.mate, "optional mate pair file");
  s1->add_option("-o,--out", c1d.out, "output file (stdout if omitted)");

  auto* s2 = app.add_subcommand("construct-2d",
                                "expand an s1 x s2 seed pair to s1 x 4*s2");
  s2->add_option("--seed", c2d.seed, "catalog:<id> or pair file")->required();
  s2->add_option("--signs", signs_text, "x1,x2,x3,x4 with x1*x2+x3*x4=0")
      ->required();
  s2->add_option("--mate", c2d.mate, "optional mate pair file");
  s2->add_option("-o,--out", c2d.out, "output file (stdout if omitted)");

  auto* s3 = app.add_subcommand(
      "construct-2d-full", "expand an s1 x s2 seed pair to 4*s1 x 4*s2");
  s3->add_option("--seed", c2f.seed, "catalog:<id> or pair file")->required();
  s3->add_option("--mate", c2f.mate, "optional mate pair file");
  s3->add_option("-o,--out", c2f.out, "output file (stdout if omitted)");

  auto* sm = app.add_subcommand("mate", "derive a mate pair");
  sm->add_option("--in", cmate.seed, "catalog:<id> or pair file")->required();
  sm->add_option("-o,--out", cmate.out, "output file (stdout if omitted)");

  auto* sv = app.add_subcommand(
      "verify", "check complementarity and an optional zone claim");
  sv->add_option("--in", in_sel, "catalog:<id> or pair file")->required();
  sv->add_option("--claim", claim_text, "zone claim, '11' or '3x4'");
  sv->add_option("--tol", tol, "zero threshold for inexact alphabets");

  auto* sme = app.add_subcommand("measure", "measure zero-correlation zones");
  sme->add_option("--in", in_sel, "catalog:<id> or pair file")->required();
  sme->add_option("--tol", tol, "zero threshold for inexact alphabets");
  sme->add_option("--format", format_sel, "text (default) or json")
      ->check(CLI::IsMember({"text", "json"}));
  sme->add_option("-o,--out", c2f.out, "output file (stdout if omitted)");

  auto* ss = app.add_subcommand("search",
                                "exhaustively list complementary pairs");
  ss->add_option("--length", search_length, "sequence length")->required();
  ss->add_option("--alphabet", search_q, "alphabet order q");
  ss->add_option("--limit", search_limit, "stop after this many pairs");
  ss->add_option("--max-candidates", search_max,
                 "override the q^(2N) search guard");
  ss->add_option("-o,--out", search_out, "output file (stdout if omitted)");

  auto* se = app.add_subcommand("export", "write a correlation table");
  se->add_option("--in", in_sel, "catalog:<id> or pair file")->required();
  se->add_option("--table", table_sel, "first, second, cross or aacs")
      ->check(CLI::IsMember({"first", "second", "cross", "aacs"}));
  se->add_option("--kind", kind_sel, "periodic or aperiodic")
      ->check(CLI::IsMember({"periodic", "aperiodic"}));
  se->add_option("--format", format_sel, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  se->add_option("-o,--out", c2f.out, "output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (s1->parsed() || s2->parsed()) {
    const CommonOpts& c = s1->parsed() ? c1d : c2d;
    ArrayPair seed = load_selector(c.seed);
    std::optional<ArrayPair> mate;
    if (!c.mate.empty()) mate = load_selector(c.mate);
    gcz::SignQuadruple signs = parse_signs(signs_text);
    ArrayPair out = s1->parsed() ? gcz::construct_1d(seed, signs, mate)
                                 : gcz::construct_2d_horizontal(seed, signs, mate);
    emit(c.out, gcz::dump_json(gcz::pair_to_json(out)));
    return 0;
  }

  if (s3->parsed()) {
    ArrayPair seed = load_selector(c2f.seed);
    std::optional<ArrayPair> mate;
    if (!c2f.mate.empty()) mate = load_selector(c2f.mate);
    ArrayPair out = gcz::construct_2d_full(seed, mate);
    emit(c2f.out, gcz::dump_json(gcz::pair_to_json(out)));
    return 0;
  }

  if (sm->parsed()) {
    ArrayPair pair = load_selector(cmate.seed);
    ArrayPair mate = gcz::golay_mate(pair);
    emit(cmate.out, gcz::dump_json(gcz::pair_to_json(mate)));
    return 0;
  }

  if (sv->parsed()) {
    ArrayPair pair = load_selector(in_sel);
    if (!claim_text.empty()) {
      auto [z1, z2] = parse_claim(claim_text);
      gcz::ClaimResult res = gcz::verify_claim(pair, z1, z2, tol);
      std::cout << report_text(res.report);
      std::cout << "claim " << width_text(z1, z2, res.report.rows) << ": ";
      if (res.ok) {
        std::cout << "satisfied\n";
      } else {
        std::cout << "violated by " << res.failed_condition
                  << " correlation at " << witness_text(*res.witness) << "\n";
      }
      if (!res.report.is_gcap || !res.ok)
        throw Error(ErrorCode::claim_failed,
                    !res.report.is_gcap ? "pair is not complementary"
                                        : "zone claim not met");
      return 0;
    }
    gcz::ZczReport rep = gcz::measure_zones(pair, tol);
    std::cout << report_text(rep);
    if (!rep.is_gcap)
      throw Error(ErrorCode::claim_failed, "pair is not complementary");
    return 0;
  }

  if (sme->parsed()) {
    ArrayPair pair = load_selector(in_sel);
    gcz::ZczReport rep = gcz::measure_zones(pair, tol);
    if (format_sel == "json")
      emit(c2f.out, gcz::dump_json(gcz::report_to_json(rep)));
    else
      emit(c2f.out, report_text(rep));
    return 0;
  }

  if (ss->parsed()) {
    gcz::SearchOptions opt;
    opt.limit = search_limit;
    opt.max_candidates = search_max;
    if (const char* w = std::getenv("GCZ_WORKERS"))
      opt.workers = static_cast<unsigned>(std::strtoul(w, nullptr, 10));
    auto pairs = gcz::brute_force_search(search_length, search_q, opt);
    gcz::ordered_json arr = gcz::ordered_json::array();
    for (const auto& p : pairs) arr.push_back(gcz::pair_to_json(p));
    if (search_out.empty()) {
      std::cout << gcz::dump_json(arr);
    } else {
      gcz::save_text(search_out, gcz::dump_json(arr));
      std::cout << "found " << pairs.size() << " pairs\n";
    }
    return 0;
  }

  if (se->parsed()) {
    ArrayPair pair = load_selector(in_sel);
    const bool periodic = kind_sel == "periodic";
    gcz::CorrelationTable t = [&]() {
      if (table_sel == "first")
        return periodic ? gcz::periodic_xcorr(pair.first, pair.first)
                        : gcz::aperiodic_xcorr(pair.first, pair.first);
      if (table_sel == "second")
        return periodic ? gcz::periodic_xcorr(pair.second, pair.second)
                        : gcz::aperiodic_xcorr(pair.second, pair.second);
      if (table_sel == "cross")
        return periodic ? gcz::periodic_xcorr(pair.first, pair.second)
                        : gcz::aperiodic_xcorr(pair.first, pair.second);
      return periodic ? gcz::periodic_xcorr(pair.first, pair.first)
                            .plus(gcz::periodic_xcorr(pair.second, pair.second))
                      : gcz::aacs(pair);
    }();
    if (format_sel == "json")
      emit(c2f.out, gcz::dump_json(gcz::table_to_json(t)));
    else
      emit(c2f.out, gcz::table_to_csv(t));
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gcz::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
