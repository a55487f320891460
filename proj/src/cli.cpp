#include "liegiambelli/cli.hpp"

#include "liegiambelli/acceptance.hpp"
#include "liegiambelli/free_lie.hpp"
#include "liegiambelli/serialize.hpp"
#include "liegiambelli/strata.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace liegiambelli::cli {

namespace {

enum class Format { text, latex, json };

struct Options {
  Format format = Format::text;
  std::string out_file;
  std::size_t max_cells = 10'000'000;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_cells_from_env() {
  const char* raw = std::getenv("LIEGIAMBELLI_MAX_CELLS");
  if (!raw || !*raw) return 10'000'000;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError(std::string("LIEGIAMBELLI_MAX_CELLS must be a positive integer, got '") + raw + "'");
  return static_cast<std::size_t>(v);
}

Json number(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size() + 1, ' ');
}

std::string join(const std::vector<std::string>& cells, const std::vector<std::size_t>& widths) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) line += i + 1 == cells.size() ? cells[i] : pad(cells[i], widths[i]);
  return line;
}

// Plain aligned table, LaTeX tabular, or nothing (JSON handled by callers).
void print_table(std::ostream& out, Format format, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  if (format == Format::latex) {
    out << "\\begin{tabular}{" << std::string(header.size(), 'r') << "}\n";
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? " & " : "") << cells[i];
      out << " \\\\\n";
    };
    line(header);
    out << "\\hline\n";
    for (const auto& r : rows) line(r);
    out << "\\end{tabular}\n";
    return;
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) widths[i] = std::max(widths[i], r[i].size());
  out << join(header, widths) << "\n";
  for (const auto& r : rows) out << join(r, widths) << "\n";
}

std::string series_out(const GradedSeries& s, Format format) {
  return format == Format::latex ? to_latex(s) : to_text(s);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("cannot parse '" + item + "' in integer list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::string set_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// ---------------------------------------------------------------------------

struct DimsArgs {
  int n = 2;
  int kmax = 5;
  std::optional<int> m;
};

void cmd_dims(const DimsArgs& a, const Options& opt, std::ostream& out) {
  if (a.n < 1 || a.kmax < 1) throw Error(ErrorCode::DomainError, "dims needs --n >= 1 and --kmax >= 1");
  if (static_cast<std::size_t>(a.kmax) * 8 > opt.max_cells)
    throw Error(ErrorCode::TooLarge, "table exceeds LIEGIAMBELLI_MAX_CELLS");
  Json rows = Json::array();
  std::vector<std::vector<std::string>> cells;
  Integer cumulative = 0;
  for (int k = 1; k <= a.kmax; ++k) {
    const Integer d = witt_dim_exact(a.n, k);
    cumulative += d;
    Json row = {{"k", k}, {"d", number(d)}, {"cumulative", number(cumulative)}};
    std::vector<std::string> line = {std::to_string(k), d.get_str(), cumulative.get_str()};
    if (k >= 2) {
      const Integer sharp = count_max_depth_exact(a.n, k);
      row["max_depth"] = number(sharp);
      line.push_back(sharp.get_str());
    } else {
      row["max_depth"] = nullptr;
      line.push_back("-");
    }
    if (a.n >= 2) {
      const BracketGrowthRow l4 = bracket_growth_check(a.n, k, k).front();
      row["bracket_growth"] = {{"lhs", number(l4.lhs)}, {"rhs", number(l4.rhs)}, {"holds", l4.holds}};
      line.push_back(l4.holds ? "yes" : "no");
    } else {
      row["bracket_growth"] = nullptr;
      line.push_back("-");
    }
    if (a.m) {
      if (k >= 2) {
        const JetMatrixDims l1 = jet_matrix_dims(a.n, *a.m, k);
        row["jet_matrix"] = {{"dim_jets", number(l1.dim_jets)},
                         {"dim_matrices", number(l1.dim_matrices)},
                         {"surjective_possible", l1.surjective_possible}};
        line.insert(line.end(), {l1.dim_jets.get_str(), l1.dim_matrices.get_str(), l1.surjective_possible ? "yes" : "no"});
      } else {
        row["jet_matrix"] = nullptr;
        line.insert(line.end(), {"-", "-", "-"});
      }
    }
    rows.push_back(row);
    cells.push_back(std::move(line));
  }
  if (opt.format == Format::json) {
    Json j = {{"n", a.n}, {"kmax", a.kmax}};
    if (a.m) j["m"] = *a.m;
    j["rows"] = rows;
    out << j.dump(2) << "\n";
    return;
  }
  std::vector<std::string> header = {"k", "d(n,k)", "cumulative", "max_depth", "bracket_growth"};
  if (a.m) header.insert(header.end(), {"dim_jets", "dim_matrices", "surjective_possible"});
  print_table(out, opt.format, header, cells);
}

struct HallArgs {
  int n = 2;
  int kmax = 5;
  bool max_depth_only = false;
  bool raw_depth = false;
};

void cmd_hall(const HallArgs& a, const Options& opt, std::ostream& out) {
  const HallBasis basis(a.n, a.kmax, opt.max_cells);
  Json words = Json::array();
  std::vector<std::vector<std::string>> cells;
  for (const HallWord& w : basis.words()) {
    const int depth = basis.depth(w.rank);
    if (a.max_depth_only && depth != w.length) continue;
    const std::string word = basis.render(w.rank);
    Json j = {{"rank", w.rank}, {"length", w.length}, {"depth", depth}, {"word", word}};
    std::vector<std::string> line = {std::to_string(w.rank), std::to_string(w.length), std::to_string(depth)};
    if (a.raw_depth) {
      j["raw_depth"] = basis.raw_depth(w.rank);
      line.push_back(std::to_string(basis.raw_depth(w.rank)));
    }
    line.push_back(opt.format == Format::latex ? "$" + word + "$" : word);
    words.push_back(j);
    cells.push_back(std::move(line));
  }
  if (opt.format == Format::json) {
    out << Json{{"n", a.n}, {"kmax", a.kmax}, {"words", words}}.dump(2) << "\n";
    return;
  }
  std::vector<std::string> header = {"rank", "length", "depth"};
  if (a.raw_depth) header.push_back("raw_depth");
  header.push_back("word");
  print_table(out, opt.format, header, cells);
}

struct ChernArgs {
  int n = 2;
  int k = 1;
  int order = 4;
  bool mod2 = false;
  bool generic = false;
};

void cmd_chern(const ChernArgs& a, const Options& opt, std::ostream& out) {
  if (a.order < 0) throw Error(ErrorCode::DomainError, "--order must be >= 0");
  const std::optional<int> generators = a.generic ? std::nullopt : std::optional<int>(a.n);
  const GradedSeries s = a.mod2 ? lie_sw_class(a.n, a.k, a.order, generators) : lie_total_class(a.n, a.k, a.order, generators);
  if (opt.format == Format::json) {
    out << Json{{"n", a.n}, {"k", a.k}, {"rank", number(witt_dim_exact(a.n, a.k))}, {"class", to_json(s)}}.dump(2)
        << "\n";
    return;
  }
  out << series_out(s, opt.format) << "\n";
}

struct LocusArgs {
  std::optional<int> n;
  int m = 0;
  std::string growth;
  std::string form = "lambda";
  std::optional<int> order;
};

void cmd_locus(const LocusArgs& a, const Options& opt, std::ostream& out) {
  std::vector<int> ranks = parse_int_list(a.growth);
  const int n = ranks.front();
  if (a.n && *a.n != n)
    throw Error(ErrorCode::InvalidGrowthVector, "--n " + std::to_string(*a.n) + " differs from r_1 = " + std::to_string(n));
  const GrowthVector r = validate_growth(std::move(ranks), n, a.m);
  const ReducedIndexSet reduced = reduce(r);
  const LocusDiagrams diagrams = young_diagrams(r);
  const RowMaps maps = rho_maps(r);
  const DeterminantForm form = a.form == "mu" ? DeterminantForm::mu : DeterminantForm::lambda;
  const GradedSeries cls = giambelli_class(r, form, a.order);

  if (opt.format == Format::latex) {
    out << to_latex(cls) << "\n";
    return;
  }
  if (opt.format == Format::json) {
    Json j = {{"growth", std::vector<int>(r.ranks().begin(), r.ranks().end())},
              {"reduced", reduced.indices},
              {"lambda", std::vector<int>(diagrams.lambda.parts().begin(), diagrams.lambda.parts().end())},
              {"mu", std::vector<int>(diagrams.mu.parts().begin(), diagrams.mu.parts().end())},
              {"cd", diagrams.cd},
              {"rho", maps.rho},
              {"rho_prime", maps.rho_prime},
              {"form", a.form},
              {"maximal", r.is_maximal()},
              {"class", to_json(cls)},
              {"latex", to_latex(cls)}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "growth:    " << to_string(r) << (r.is_maximal() ? "  (maximal)" : "") << "\n"
      << "reduced:   " << set_string(reduced.indices) << "\n"
      << "lambda:    " << to_string(diagrams.lambda) << "\n"
      << "mu:        " << to_string(diagrams.mu) << "\n"
      << "cd:        " << diagrams.cd << "\n"
      << "rho:       " << set_string(maps.rho) << "\n"
      << "rho':      " << set_string(maps.rho_prime) << "\n"
      << "class:     " << to_text(cls) << "\n";
}

struct StrataArgs {
  int n = 3;
  int m = 6;
  bool oracle = false;
  bool with_class = false;
};

Json instance_json(const DefectInstance& inst, const std::string& label, const std::optional<GradedSeries>& cls) {
  Json j = {{"case", std::string(1, inst.family)},
            {"parameters", inst.parameters},
            {"template", inst.nominal.entries},
            {"valid", inst.valid}};
  if (!inst.valid) {
    j["rejection"] = inst.rejection;
    return j;
  }
  j["defect"] = inst.canonical_defect.entries;
  j["growth"] = std::vector<int>(inst.growth->ranks().begin(), inst.growth->ranks().end());
  j["length_changed"] = inst.length_changed;
  j["cd"] = inst.cd;
  j["classification"] = label;
  j["verified"] = inst.verified;
  if (cls) j["class"] = to_json(*cls);
  return j;
}

void cmd_strata(const StrataArgs& a, const Options& opt, std::ostream& out) {
  const bool templates = a.n >= 3;
  if (!templates && !a.oracle)
    throw Error(ErrorCode::UnsupportedParameter, "template enumeration needs n >= 3; pass --oracle");
  const int p = saturation_length(a.n, a.m);
  const DefectSet oracle_adm = oracle_admissible_defects(a.n, a.m, opt.max_cells);
  const DefectSet oracle_bnd = oracle_bounding_defects(a.n, a.m, opt.max_cells);
  const auto label = [&](const DefectInstance& inst) -> std::string {
    if (!inst.valid) return "invalid";
    if (inst.cd <= a.m) return std::string(label_name(StratumLabel::potentially_admissible));
    if (oracle_bnd.contains(inst.canonical_defect)) return std::string(label_name(StratumLabel::potentially_bounding));
    return std::string(label_name(StratumLabel::neither));
  };
  std::optional<LocusEngine> engine;
  if (a.with_class) engine.emplace(a.n, a.m, p + 3, a.m);
  const auto cls_of = [&](const DefectInstance& inst) -> std::optional<GradedSeries> {
    if (!engine || !inst.valid || inst.cd > a.m) return std::nullopt;
    return engine->locus_class(*inst.growth, DeterminantForm::lambda);
  };

  std::vector<DefectInstance> admissible, bounding;
  if (templates) {
    admissible = enumerate_admissible_defects(a.n, a.m);
    bounding = enumerate_bounding_defects(a.n, a.m);
  }

  if (opt.format == Format::json) {
    Json j = {{"n", a.n}, {"m", a.m}, {"p", p}};
    if (templates) {
      Json adm = Json::array(), bnd = Json::array();
      for (const auto& inst : admissible) adm.push_back(instance_json(inst, label(inst), cls_of(inst)));
      for (const auto& inst : bounding) bnd.push_back(instance_json(inst, label(inst), std::nullopt));
      j["admissible"] = adm;
      j["bounding"] = bnd;
    }
    if (a.oracle) {
      const auto list = [](const DefectSet& s) {
        Json arr = Json::array();
        for (const auto& d : s) arr.push_back(d.entries);
        return arr;
      };
      Json o = {{"admissible", list(oracle_adm)}, {"bounding", list(oracle_bnd)}};
      if (templates) {
        const SetComparison ca = compare_sets(canonical_defects(admissible), oracle_adm);
        const SetComparison cb = compare_sets(canonical_defects(bounding), oracle_bnd);
        const auto cmp = [](const SetComparison& c) {
          Json x = {{"equal", c.equal()}, {"only_templates", Json::array()}, {"only_oracle", Json::array()}};
          for (const auto& d : c.only_enumerated) x["only_templates"].push_back(d.entries);
          for (const auto& d : c.only_oracle) x["only_oracle"].push_back(d.entries);
          return x;
        };
        o["admissible_comparison"] = cmp(ca);
        o["bounding_comparison"] = cmp(cb);
      }
      j["oracle"] = o;
    }
    out << j.dump(2) << "\n";
    return;
  }

  out << "n=" << a.n << " m=" << a.m << " p=" << p << "\n";
  const auto section = [&](const char* title, const std::vector<DefectInstance>& list, bool with_class) {
    out << "\n" << title << "\n";
    std::vector<std::vector<std::string>> cells;
    for (const auto& inst : list) {
      if (!inst.valid) continue;
      std::string params;
      for (std::size_t i = 0; i < inst.parameters.size(); ++i) params += (i ? "," : "") + std::to_string(inst.parameters[i]);
      std::vector<std::string> line = {std::string(1, inst.family), params, to_string(inst.canonical_defect),
                                       to_string(*inst.growth), std::to_string(inst.cd), label(inst),
                                       inst.verified ? "yes" : "NO"};
      if (inst.length_changed) line[2] += "*";
      if (with_class) {
        const auto cls = cls_of(inst);
        line.push_back(cls ? series_out(*cls, opt.format) : "-");
      }
      cells.push_back(std::move(line));
    }
    std::vector<std::string> header = {"case", "params", "defect", "growth", "cd", "classification", "verified"};
    if (with_class) header.push_back("class");
    print_table(out, opt.format, header, cells);
    std::size_t rejected = 0;
    for (const auto& inst : list) rejected += inst.valid ? 0 : 1;
    out << rejected << " template instances rejected (no valid growth vector); * marks a shortened template\n";
  };
  if (templates) {
    section("potentially admissible templates", admissible, a.with_class);
    section("potentially bounding templates", bounding, false);
  }
  if (a.oracle) {
    out << "\noracle (growth vectors of length " << p << ".." << p + 3 << ")\n";
    out << "admissible:";
    for (const auto& d : oracle_adm) out << " " << to_string(d);
    out << "\nbounding:";
    for (const auto& d : oracle_bnd) out << " " << to_string(d);
    out << "\n";
    if (templates) {
      for (auto [name, cmp] : {std::pair{"admissible", compare_sets(canonical_defects(admissible), oracle_adm)},
                               std::pair{"bounding", compare_sets(canonical_defects(bounding), oracle_bnd)}}) {
        out << name << " templates vs oracle: " << (cmp.equal() ? "equal" : "differ");
        for (const auto& d : cmp.only_enumerated) out << " template-only " << to_string(d);
        for (const auto& d : cmp.only_oracle) out << " oracle-only " << to_string(d);
        out << "\n";
      }
    }
  }
}

struct CheckArgs {
  std::string suite = "all";
  bool verbose = false;
};

int cmd_check(const CheckArgs& a, const Options& opt, std::ostream& out) {
  std::vector<acceptance::CriterionResult> results;
  try {
    results = acceptance::run(a.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (opt.format == Format::json) {
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back({{"id", r.id},
                     {"suite", r.suite},
                     {"title", r.title},
                     {"passed", r.passed},
                     {"checks", r.cases},
                     {"notes", r.notes},
                     {"failures", r.failures}});
    out << Json{{"passed", ok}, {"criteria", arr}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) out << acceptance::format(r, a.verbose);
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic classes of free Lie algebra bundles and degeneracy loci of distributions",
               "liegiambelli"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  Options opt;
  std::string format = "text";
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out_file, "Write output to FILE instead of stdout");
  };

  DimsArgs dims;
  auto* dims_cmd = app.add_subcommand("dims", "Witt dimensions, cumulative sums, depth counts and dimension checks");
  dims_cmd->add_option("--n", dims.n, "Number of generators")->required();
  dims_cmd->add_option("--kmax", dims.kmax, "Largest length")->required();
  dims_cmd->add_option("--m", dims.m, "Manifold dimension for the jet/matrix columns");
  add_common(dims_cmd);

  HallArgs hall;
  auto* hall_cmd = app.add_subcommand("hall", "Hall basis with lengths, ranks and depths");
  hall_cmd->add_option("--n", hall.n, "Number of generators")->required();
  hall_cmd->add_option("--kmax", hall.kmax, "Largest length")->required();
  hall_cmd->add_flag("--max-depth-only", hall.max_depth_only, "Only words whose depth equals their length");
  hall_cmd->add_flag("--raw-depth", hall.raw_depth, "Also print the depth without the +1 offset");
  add_common(hall_cmd);

  ChernArgs chern;
  auto* chern_cmd = app.add_subcommand("chern", "Total Chern class of L^k(E) for a rank-n bundle E");
  chern_cmd->add_option("--n", chern.n, "Rank of E")->required();
  chern_cmd->add_option("--k", chern.k, "Bracket length")->required();
  chern_cmd->add_option("--order", chern.order, "Truncation weight")->capture_default_str();
  chern_cmd->add_flag("--mod2", chern.mod2, "Stiefel-Whitney reduction (c_i -> w_i, coefficients mod 2)");
  chern_cmd->add_flag("--generic", chern.generic, "Keep c_i for i > n as formal generators");
  add_common(chern_cmd);

  LocusArgs locus;
  auto* locus_cmd = app.add_subcommand("locus", "Degeneracy locus class for a growth vector");
  locus_cmd->add_option("--n", locus.n, "Rank of the distribution (must equal r_1)");
  locus_cmd->add_option("--m", locus.m, "Manifold dimension")->required();
  locus_cmd->add_option("--growth", locus.growth, "Comma-separated growth vector, e.g. 2,2,4")->required();
  locus_cmd->add_option("--form", locus.form, "Determinant form")
      ->check(CLI::IsMember({"lambda", "mu"}))
      ->capture_default_str();
  locus_cmd->add_option("--order", locus.order, "Truncation weight (default m)");
  add_common(locus_cmd);

  StrataArgs strata;
  auto* strata_cmd = app.add_subcommand("strata", "Admissible and bounding defect vectors");
  strata_cmd->add_option("--n", strata.n, "Rank of the distribution")->required();
  strata_cmd->add_option("--m", strata.m, "Manifold dimension")->required();
  strata_cmd->add_flag("--oracle", strata.oracle, "Also run the brute-force oracle and compare");
  strata_cmd->add_flag("--with-class", strata.with_class, "Print the locus class of each admissible stratum");
  add_common(strata_cmd);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run acceptance suites");
  check_cmd->add_option("--suite", check.suite,
                        "examples, tables, integrality, hall, pbw, diagrams, depth, dimensions, defects, properties or all")
      ->capture_default_str();
  check_cmd->add_flag("--verbose,-v", check.verbose, "Print informational notes");
  add_common(check_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    opt.max_cells = max_cells_from_env();
    opt.format = format == "latex" ? Format::latex : format == "json" ? Format::json : Format::text;

    std::ostringstream buffer;
    int status = 0;
    if (dims_cmd->parsed())
      cmd_dims(dims, opt, buffer);
    else if (hall_cmd->parsed())
      cmd_hall(hall, opt, buffer);
    else if (chern_cmd->parsed())
      cmd_chern(chern, opt, buffer);
    else if (locus_cmd->parsed())
      cmd_locus(locus, opt, buffer);
    else if (strata_cmd->parsed())
      cmd_strata(strata, opt, buffer);
    else if (check_cmd->parsed())
      status = cmd_check(check, opt, buffer);

    if (opt.out_file.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(opt.out_file, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << opt.out_file << " for writing\n";
        return 1;
      }
      file << buffer.str();
    }
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"liegiambelli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace liegiambelli::cli
