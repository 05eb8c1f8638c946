// Command-line front end. Exit codes: 0 success, 1 a mathematical check
// failed (or a cap stopped the computation), 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>

#include "ramcover/bounds.hpp"
#include "ramcover/caps.hpp"
#include "ramcover/certify.hpp"
#include "ramcover/errors.hpp"
#include "ramcover/induced.hpp"
#include "ramcover/perm.hpp"
#include "ramcover/ramdata.hpp"
#include "ramcover/report_json.hpp"
#include "ramcover/tables.hpp"

using namespace ramcover;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Ramification data from --data FILE or from a table row (--row LABEL --ell N [--a A]).
struct DataSource {
  std::string file;
  std::string row;
  Count ell = 0;
  Count a = 0;

  void add(CLI::App* c) {
    c->add_option("--data", file, "ramification data JSON file ('-' for stdin)");
    c->add_option("--row", row, "table row label instead of --data: two-set, non-existence, solvable, or non236.K");
    c->add_option("--ell", ell, "degree for --row");
    c->add_option("--a", a, "parameter a for rows that take it");
  }

  RamificationData load() const {
    if (file.empty() == row.empty()) throw UsageError("give exactly one of --data or --row");
    if (!file.empty()) return ramdata_from_json(read_file(file), file);
    if (ell <= 0) throw UsageError("--row needs --ell");
    auto has = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), row) != v.end(); };
    std::optional<RamificationData> d;
    if (has(two_set_labels()))
      d = two_set_row(row, ell, a);
    else if (has(nonexistence_labels()))
      d = nonexistence_row(row, ell);
    else if (has(solvable_labels()))
      d = solvable_row(row, ell).data;
    else if (row.rfind("non236.", 0) == 0)
      d = non236_row(std::stoi(row.substr(7)), ell);
    else
      throw UsageError("unknown row label '" + row + "'");
    if (!d) throw DomainError("row " + row + " is inadmissible at l=" + std::to_string(ell));
    return *d;
  }
};

std::pair<Count, Count> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument("no '..'");
    std::size_t u1 = 0, u2 = 0;
    Count lo = std::stoll(text.substr(0, dots), &u1);
    Count hi = std::stoll(text.substr(dots + 2), &u2);
    if (u1 != dots || u2 != text.size() - dots - 2 || lo > hi) throw std::invalid_argument("bad bounds");
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("--ell-range expects A..B with A <= B, got '" + text + "'");
  }
}

// ---- tables ----

int tables_gen(const std::string& table, Count ell, const std::string& format) {
  std::vector<TableEntry> entries;
  if (table == "two-set")
    entries = gen_two_set_table(ell);
  else if (table == "f")
    entries = gen_f_table(ell);
  else if (table == "solvable")
    entries = gen_solvable_table(ell);
  else
    entries = gen_nonexistence_table(ell);
  if (format == "csv") {
    std::cout << table_csv(entries);
    return 0;
  }
  Json list = Json::array();
  for (const auto& e : entries) list.push_back(to_json(e));
  emit({{"table", table}, {"ell", ell}, {"count", entries.size()}, {"entries", list}});
  return 0;
}

int tables_count(const std::string& range, const std::string& format) {
  auto [lo, hi] = parse_range(range);
  if (lo < 13) throw DomainError("table counts need l >= 13");
  Json rows = Json::array();
  bool all = true;
  std::ostringstream csv;
  csv << "ell,two_set,two_set_expected,f,f_expected\n";
  for (Count l = lo; l <= hi; ++l) {
    Count ts = static_cast<Count>(gen_two_set_table(l).size());
    Count f = static_cast<Count>(gen_f_table(l).size());
    bool ok = ts == expected_two_set_count(l) && f == expected_f_count(l);
    all = all && ok;
    rows.push_back({{"ell", l}, {"two_set", ts}, {"two_set_expected", expected_two_set_count(l)},
                    {"f", f}, {"f_expected", expected_f_count(l)}, {"match", ok}});
    csv << l << ',' << ts << ',' << expected_two_set_count(l) << ',' << f << ',' << expected_f_count(l) << '\n';
  }
  if (format == "csv")
    std::cout << csv.str();
  else
    emit({{"rows", rows}, {"all_match", all}});
  return all ? 0 : 1;
}

// ---- bounds ----

int bounds_gx2(const RamificationData& d, Count gy1) {
  GX2Result r = g_X2_formula(d, gy1);
  Json j = {{"g_x2", to_json(r.value)}};
  if (!r.integral) j["integral"] = false;
  emit(j);
  return r.integral ? 0 : 1;
}

int bounds_classify(const RamificationData& d, Count alpha) {
  Json pts = Json::array();
  bool classifiable = true;
  for (const auto& b : d.branches()) {
    PointClass p = classify_point(b, alpha);
    classifiable = classifiable && p.kind != PointClass::Kind::Unclassifiable;
    pts.push_back({{"branch", b.to_compact()}, {"class", p.to_string()}, {"epsilon", p.epsilon}});
  }
  if (!classifiable) {
    emit({{"alpha", alpha}, {"case", "UNCLASSIFIABLE"}, {"M", Json::array()}, {"points", pts}});
    return 1;
  }
  CoverClass c = classify_cover(d, alpha);
  Json j = to_json(c);
  j["alpha"] = alpha;
  j["points"] = pts;
  emit(j);
  return 0;
}

int bounds_filter(const RamificationData& d) {
  Json t = Json::array();
  auto triggers = decomposability_filter(d);
  for (const auto& tr : triggers) t.push_back(to_json(tr, d));
  emit({{"triggers", t}, {"excluded", !triggers.empty()}});
  return 0;
}

// r_h1t and r_pi2_count against brute-force orbit counts, one random
// representative per cycle type.
int bounds_oracle(int max_degree, const std::vector<int>& ts, std::uint64_t seed, const Caps& caps) {
  if (max_degree < 1 || max_degree > 12) throw UsageError("--max-degree must lie in [1, 12]");
  std::mt19937_64 rng(seed);
  Count checked = 0;
  Json bad = Json::array();
  for (int n = 1; n <= max_degree; ++n) {
    for (const auto& e : partitions_of(n)) {
      std::vector<int> labels(static_cast<std::size_t>(n));
      std::iota(labels.begin(), labels.end(), 0);
      std::shuffle(labels.begin(), labels.end(), rng);
      std::vector<std::vector<int>> cycles;
      std::size_t at = 0;
      for (Count part : e.parts()) {
        cycles.emplace_back(labels.begin() + static_cast<long>(at), labels.begin() + static_cast<long>(at + part));
        at += static_cast<std::size_t>(part);
      }
      Permutation p = Permutation::from_cycles(n, cycles);
      for (int t : ts) {
        if (t < 1 || t > n) continue;
        ++checked;
        Count fast = r_h1t(e, t), slow = r_h1t_bruteforce(p, t, caps);
        if (fast != slow)
          bad.push_back({{"quantity", "r_h1t"}, {"type", e.to_compact()}, {"t", t}, {"closed_form", fast}, {"brute_force", slow}});
      }
      if (n >= 2) {
        ++checked;
        Count fast = r_pi2_count(e), slow = r_pit_bruteforce(p, 2, caps);
        if (fast != slow)
          bad.push_back({{"quantity", "r_pi2"}, {"type", e.to_compact()}, {"t", 2}, {"closed_form", fast}, {"brute_force", slow}});
      }
    }
  }
  emit({{"seed", seed}, {"checked", checked}, {"mismatches", bad}, {"ok", bad.empty()}});
  return bad.empty() ? 0 : 1;
}

// ---- certify ----

BuildParams params_of(Count a, Count m) {
  BuildParams p;
  if (a > 0) p.a = a;
  if (m >= 0) p.m = m;
  return p;
}

void print_text(const CertReport& r) {
  std::cout << r.label << " l=" << r.l << (r.all_passed() ? " PASS" : " FAIL") << '\n';
  for (const auto& [c, res] : r.checks)
    std::cout << "  " << to_string(c) << ' ' << (res.passed ? "pass" : "fail") << "  " << res.detail << '\n';
}

int certify_run(const std::string& label, Count ell, Count a, Count m, const std::string& format, const Caps& caps) {
  CertReport r = certify_label(label, ell, params_of(a, m), caps);
  if (format == "text")
    print_text(r);
  else
    emit(to_json(r));
  return r.all_passed() ? 0 : 1;
}

int certify_all(Count max_ell, const std::string& format, const Caps& caps) {
  std::vector<std::string> labels = appendix_labels();
  std::sort(labels.begin(), labels.end(), label_less);
  Json reports = Json::array();
  bool all = true;
  for (const auto& label : labels)
    for (Count l = 1; l <= max_ell; ++l) {
      if (!admissible(label, l)) continue;
      CertReport r = certify_label(label, l, {}, caps);
      all = all && r.all_passed();
      if (format == "text")
        print_text(r);
      else
        reports.push_back(to_json(r));
    }
  if (format != "text") emit({{"max_ell", max_ell}, {"reports", reports}, {"all_passed", all}});
  return all ? 0 : 1;
}

int certify_refute(const RamificationData& d, int cap, const Caps& caps) {
  RefuteReport r = exhaustive_refute(d, cap, caps);
  Json j = to_json(r);
  j["data"] = to_json(d);
  emit(j);
  return 0;
}

// ---- induce / perm ----

int induce_lift(const RamificationData& d) {
  emit(to_json(lift_table_entry(d)));
  return 0;
}

TupleInput tuple_source(const std::string& file, const std::string& label, Count ell, Count a, Count m) {
  if (file.empty() == label.empty()) throw UsageError("give exactly one of --tuple or --label");
  if (!file.empty()) return tuple_from_json(read_file(file), file);
  BuiltTuple b = build_tuple(label, ell, params_of(a, m));
  return {b.tuple.degree(), b.tuple.cycles()};
}

int induce_genera(const TupleInput& in, int t, const Caps& caps) {
  BranchTuple b(in.degree, in.cycles);
  emit(to_json(quotient_genera(b, t, caps)));
  return 0;
}

int perm_classify(const TupleInput& in, const std::string& route_name, const Caps& caps) {
  GeneratorSet g(in.degree, in.cycles);
  Route route = route_name == "exact" ? Route::ExactOrder : route_name == "jordan" ? Route::Jordan : Route::Auto;
  Json j = {{"degree", in.degree}, {"transitive", is_transitive(g)}};
  if (is_transitive(g)) {
    j["primitive"] = is_primitive(g);
    j["verdict"] = to_json(classify_alternating(g, caps, route));
  } else {
    j["primitive"] = false;
    j["verdict"] = nullptr;
  }
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Caps caps;
  if (const char* env = std::getenv("RAMCOVER_CAPS")) {
    try {
      caps = Caps::parse(env);
    } catch (const std::invalid_argument& e) {
      std::cerr << "RAMCOVER_CAPS: " << e.what() << '\n';
      return 2;
    }
  }

  CLI::App app{"Ramification data, induced actions, table regeneration and tuple certification."};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* tables = app.add_subcommand("tables", "generate and count ramification tables");
  tables->require_subcommand(1);
  std::string table, format = "json", range;
  Count ell = 0;
  auto* tgen = tables->add_subcommand("gen", "print one table at a degree");
  tgen->add_option("--table", table)->required()->check(CLI::IsMember({"two-set", "f", "solvable", "nonexist"}));
  tgen->add_option("--ell", ell)->required();
  tgen->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  tgen->callback([&] { action = [&] { return tables_gen(table, ell, format); }; });
  auto* tcount = tables->add_subcommand("count", "compare entry counts with the closed forms");
  tcount->add_option("--ell-range", range, "A..B")->required();
  tcount->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  tcount->callback([&] { action = [&] { return tables_count(range, format); }; });

  auto* bounds = app.add_subcommand("bounds", "genus identities, classifier, filter and orbit oracles");
  bounds->require_subcommand(1);
  DataSource src;
  Count gy1 = 0, alpha = 3;
  auto* gx2 = bounds->add_subcommand("gx2", "g_X2 from the orbit formula");
  src.add(gx2);
  gx2->add_option("--gy1", gy1, "genus of the cover itself (default 0)");
  gx2->callback([&] { action = [&] { return bounds_gx2(src.load(), gy1); }; });
  auto* classify = bounds->add_subcommand("classify", "almost-Galois classification of each branch");
  src.add(classify);
  classify->add_option("--alpha", alpha, "genus-bound constant (default 3)")->check(CLI::PositiveNumber);
  classify->callback([&] { action = [&] { return bounds_classify(src.load(), alpha); }; });
  auto* filter = bounds->add_subcommand("filter", "decomposability filter");
  src.add(filter);
  filter->callback([&] { action = [&] { return bounds_filter(src.load()); }; });
  int max_degree = 10;
  int max_t = 4;
  std::uint64_t seed = 0;
  auto* oracle = bounds->add_subcommand("oracle", "closed forms against brute-force orbit counts");
  oracle->add_option("--max-degree", max_degree);
  oracle->add_option("--max-t", max_t, "t runs over 2..max-t (default 4)");
  oracle->add_option("--seed", seed, "seed for the representative of each cycle type");
  oracle->callback([&] { action = [&] { std::vector<int> ts;
    for (int t = 2; t <= max_t; ++t) ts.push_back(t);
    return bounds_oracle(max_degree, ts, seed, caps); }; });

  auto* cert = app.add_subcommand("certify", "build and certify explicit tuples");
  cert->require_subcommand(1);
  std::string label;
  Count a = 0, m = -1, max_ell = 0;
  int cap = caps.search_degree;
  auto* run = cert->add_subcommand("run", "certify one construction");
  run->add_option("--label", label)->required();
  run->add_option("--ell", ell)->required();
  run->add_option("--a", a, "a for I1.1-generic");
  run->add_option("--m", m, "split parameter for the I2.N witnesses");
  run->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  run->callback([&] { action = [&] { return certify_run(label, ell, a, m, format, caps); }; });
  auto* all = cert->add_subcommand("all", "certify every explicit construction up to a degree");
  all->add_option("--max-ell", max_ell)->required();
  all->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  all->callback([&] { action = [&] { return certify_all(max_ell, format, caps); }; });
  auto* refute = cert->add_subcommand("refute", "exhaustive tuple search");
  src.add(refute);
  refute->add_option("--cap", cap, "largest degree searched");
  refute->callback([&] { action = [&] { return certify_refute(src.load(), cap, caps); }; });

  auto* induce = app.add_subcommand("induce", "induced actions");
  induce->require_subcommand(1);
  auto* lift = induce->add_subcommand("lift", "cycle types on 2-sets");
  src.add(lift);
  lift->callback([&] { action = [&] { return induce_lift(src.load()); }; });
  std::string tuple_file;
  int t = 2;
  auto* genera = induce->add_subcommand("genera", "genera of the t-set and t-tuple quotients");
  genera->add_option("--tuple", tuple_file, "tuple JSON file");
  genera->add_option("--label", label, "build a construction instead");
  genera->add_option("--ell", ell);
  genera->add_option("--a", a);
  genera->add_option("--m", m);
  genera->add_option("--t", t)->check(CLI::PositiveNumber);
  genera->callback([&] { action = [&] { return induce_genera(tuple_source(tuple_file, label, ell, a, m), t, caps); }; });

  auto* perm = app.add_subcommand("perm", "permutation groups");
  perm->require_subcommand(1);
  std::string route = "auto";
  auto* pclass = perm->add_subcommand("classify", "does the generated group contain the alternating group");
  pclass->add_option("--gens", tuple_file, "generators JSON file")->required();
  pclass->add_option("--route", route)->check(CLI::IsMember({"auto", "exact", "jordan"}));
  pclass->callback([&] { action = [&] { return perm_classify(tuple_from_json(read_file(tuple_file), tuple_file), route, caps); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;  // help exits 0
  }

  try {
    return action ? action() : 2;
  } catch (const InputError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.position << " (at '" << e.token << "'): " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    emit({{"error", e.what()}, {"cap_exceeded", true}});
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
