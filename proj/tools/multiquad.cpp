#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "multiquad/classifier.hpp"
#include "multiquad/errors.hpp"
#include "multiquad/ramification.hpp"
#include "multiquad/serialize.hpp"

namespace fs = std::filesystem;
using namespace multiquad;

namespace {

enum class Output { table, json };

struct CliConfig {
  std::string data_dir = MULTIQUAD_DEFAULT_DATA_DIR;
  std::string cache_path;
  long precision = 128;
  unsigned jobs = 1;
  Output output = Output::table;
  bool allow_undecided = false;
  bool compute_units = false;
};

constexpr int kExitParse = 2;
constexpr int kExitDataset = 3;
constexpr int kExitInconsistent = 4;

std::string join(std::span<const Int> v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string field_name(const FieldId& f) { return f.degree_exponent() == 0 ? "Q" : "{" + f.to_string() + "}"; }

RadicandList parse_list(const std::vector<std::string>& args) {
  std::string text;
  for (const auto& a : args) text += (text.empty() ? "" : ",") + a;
  if (text.empty()) throw DomainError("expected a radicand list after --, e.g. -- -1,2,3");
  return RadicandList::parse(text);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_trace(const ClassNumberResult& r, int depth) {
  std::string pad(2 * depth, ' ');
  std::cout << pad << field_name(r.field) << "  h = " << r.h << "  [" << r.formula << "]\n";
  for (const auto& [k, v] : r.inputs) std::cout << pad << "    " << k << " = " << v << "\n";
  for (const auto& u : r.unit_witnesses) std::cout << pad << "    unit " << u << "\n";
  for (const auto& d : r.datasets) std::cout << pad << "    dataset " << d << "\n";
  for (const auto& p : r.parts) print_trace(p, depth + 1);
}

void print_stage(const StageReport& s) {
  std::cout << "n = " << s.n << ": " << s.class_number_one.size() << " field(s) with class number 1"
            << (s.matches_table ? "" : "  (DIFFERS FROM PUBLISHED TABLE)") << "\n";
  for (const auto& f : s.class_number_one) std::cout << "  " << display_list(f).to_string() << "\n";
  for (const auto& a : s.audit) std::cout << "  audit: " << a << "\n";
  if (!s.evaluations.empty() && s.n >= 3) {
    std::cout << "  candidates:\n";
    for (const auto& e : s.evaluations) {
      std::cout << "    " << std::left << std::setw(22) << e.candidate.list.to_string() << std::setw(12)
                << e.candidate.label << std::setw(16) << to_string(e.status) << e.witness << "\n";
    }
  }
  for (const auto& d : s.discrepancies) std::cout << "  note: " << d << "\n";
}

UnitProvider make_provider(const CliConfig& cfg) { return UnitProvider({cfg.data_dir, cfg.compute_units}); }

ClassifierOptions classifier_options(const CliConfig& cfg) {
  ClassifierOptions o;
  o.jobs = cfg.jobs;
  o.allow_undecided = cfg.allow_undecided;
  return o;
}

int cmd_hquad(const CliConfig& cfg, Int a) {
  Int h = class_number(a);
  if (cfg.output == Output::json) print_json(Json{{"a", a}, {"h", h}});
  else std::cout << h << "\n";
  return 0;
}

int cmd_unit(const CliConfig& cfg, Int a) {
  QuadUnit u = fundamental_unit(a);
  if (cfg.output == Output::json) print_json(to_json(u));
  else std::cout << u.to_string() << "  norm " << u.norm() << "\n";
  return 0;
}

int cmd_field_info(const CliConfig& cfg, const RadicandList& list) {
  RadicandList prim = primitive_part(list);
  FieldId id = field_id(prim);
  RadicandList standard = to_standard_form(prim);
  SubfieldCounts counts = sign_partition(prim);
  DiscriminantData disc = discriminant_of(prim);
  std::vector<Int> ram = ramified_primes(id);
  if (cfg.output == Output::json) {
    Json j{{"field", id.to_string()},
           {"n", id.degree_exponent()},
           {"degree", id.degree()},
           {"primitive", prim.to_string()},
           {"standard_form", standard.to_string()},
           {"complete_list", id.to_string()},
           {"imaginary", id.is_imaginary()},
           {"subfields", Json{{"imaginary", counts.imaginary}, {"real", counts.real}}},
           {"discriminant", to_json(disc)},
           {"ramified_primes", ram}};
    print_json(j);
    return 0;
  }
  std::cout << "field          " << field_name(id) << "\n"
            << "degree         " << id.degree() << " (n = " << id.degree_exponent() << ")\n"
            << "primitive      " << prim.to_string() << "\n"
            << "standard form  " << standard.to_string() << "\n"
            << "quadratic subfields  " << counts.imaginary << " imaginary, " << counts.real << " real\n"
            << "discriminant   " << (id.is_imaginary() && (id.degree() / 2) % 2 ? "-" : "") << disc.delta.get_str()
            << "  (e = " << disc.e << ", odd primes " << join(disc.odd_primes, " ") << ")\n"
            << "ramified primes  " << join(ram, " ") << "\n";
  return 0;
}

int cmd_hfield(const CliConfig& cfg, const RadicandList& list) {
  FieldId id = field_id(primitive_part(list));
  UnitProvider units = make_provider(cfg);
  ClassNumberEngine engine(units);
  try {
    ClassNumberResult r = engine.class_number(id);
    if (cfg.output == Output::json) print_json(to_json(r));
    else print_trace(r, 0);
    return 0;
  } catch (const DatasetRequired& e) {
    if (!cfg.allow_undecided) throw;
    if (cfg.output == Output::json) {
      print_json(Json{{"field", id.to_string()}, {"status", "undecided"}, {"missing_dataset", e.field()}});
    } else {
      std::cout << field_name(id) << "  undecided: no unit dataset for {" << e.field() << "}\n";
    }
    return 0;
  }
}

int cmd_classify(const CliConfig& cfg, int n) {
  UnitProvider units = make_provider(cfg);
  ClassNumberEngine engine(units);
  ClassifierOptions opts = classifier_options(cfg);
  StageReport stage;
  switch (n) {
    case 1: stage = classify_n1_report(opts.n1_bound); break;
    case 2: stage = classify_n2(engine, opts); break;
    case 3: stage = classify_n3(engine, candidates_n3(), opts); break;
    case 4: stage = classify_n4(engine, opts); break;
    case 5:
    case 6: stage = classify_n5_and_up().at(static_cast<std::size_t>(n - 5)); break;
    default: throw DomainError("classify expects n in 1..6 (n = 6 covers every n >= 6)");
  }
  if (cfg.output == Output::json) print_json(to_json(stage));
  else print_stage(stage);
  return 0;
}

int cmd_verify_datasets(const CliConfig& cfg) {
  fs::path dir = fs::path(cfg.data_dir) / "units";
  if (!fs::is_directory(dir)) throw DatasetError("no dataset directory " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  Json rows = Json::array();
  int failures = 0;
  for (const auto& path : files) {
    Json row{{"file", path.filename().string()}};
    try {
      std::ifstream in(path);
      Json j = Json::parse(in);
      std::vector<Int> gens = j.at("field").get<std::vector<Int>>();
      FieldId id = field_id(RadicandList(gens));
      UnitSystem s = load_unit_dataset(id, path);
      row["field"] = id.to_string();
      row["certified"] = s.certified;
      row["status"] = s.certified ? "ok" : "not certified";
      if (!s.certified) ++failures;
    } catch (const std::exception& e) {
      row["status"] = std::string("invalid: ") + e.what();
      ++failures;
    }
    rows.push_back(row);
  }
  if (cfg.output == Output::json) {
    print_json(Json{{"files", rows.size()}, {"failures", failures}, {"datasets", rows}});
  } else {
    for (const auto& r : rows) std::cout << r["file"].get<std::string>() << "  " << r["status"].get<std::string>() << "\n";
    std::cout << rows.size() << " dataset(s), " << failures << " failure(s)\n";
  }
  return failures ? kExitDataset : 0;
}

int cmd_tables_check(const CliConfig& cfg) {
  UnitProvider units = make_provider(cfg);
  ClassNumberEngine engine(units);
  ClassificationReport rep = full_report(engine, classifier_options(cfg));
  if (cfg.output == Output::json) {
    print_json(to_json(rep));
  } else {
    for (const auto& s : rep.stages) {
      std::cout << "n = " << s.n << "  " << s.class_number_one.size() << " field(s)  "
                << (s.matches_table ? "matches" : "DIFFERS") << "\n";
      for (const auto& d : s.discrepancies) std::cout << "  note: " << d << "\n";
    }
    for (const auto& d : rep.discrepancies) std::cout << "note: " << d << "\n";
    std::cout << (rep.matches_tables ? "all tables reproduced" : "table mismatch") << "\n";
  }
  return rep.matches_tables ? 0 : kExitInconsistent;
}

int cmd_make_datasets(CliConfig cfg) {
  cfg.compute_units = true;
  UnitProvider units = make_provider(cfg);
  ClassNumberEngine engine(units);
  ClassificationReport rep = full_report(engine, classifier_options(cfg));
  std::size_t written = 0;
  for (const auto& s : units.systems()) {
    if (s->field.degree() < 8 || s->source == UnitSystem::Source::dataset) continue;
    save_unit_dataset(*s, dataset_path(cfg.data_dir, s->field), "unit group computed by saturation of the subfield units");
    ++written;
  }
  std::cout << written << " dataset(s) written to " << (fs::path(cfg.data_dir) / "units").string() << "\n";
  return rep.matches_tables ? 0 : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Class numbers and units of multiquadratic number fields"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string output = "table";
  app.add_option("--data-dir", cfg.data_dir, "Directory holding units/*.json")->envname("MULTIQUAD_DATA_DIR");
  app.add_option("--cache", cfg.cache_path, "JSON cache file for quadratic class numbers")->envname("MULTIQUAD_CACHE");
  app.add_option("--precision", cfg.precision, "Starting interval precision in bits")
      ->envname("MULTIQUAD_PRECISION")
      ->check(CLI::Range(64L, 4096L));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->envname("MULTIQUAD_JOBS")->check(CLI::Range(1U, 1024U));
  app.add_option("--output", output, "Output format")
      ->envname("MULTIQUAD_OUTPUT")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--allow-undecided", cfg.allow_undecided, "Report missing unit datasets as undecided")
      ->envname("MULTIQUAD_ALLOW_UNDECIDED");
  app.add_flag("--compute-units", cfg.compute_units, "Compute unit groups that have no dataset")
      ->envname("MULTIQUAD_COMPUTE_UNITS");

  Int a = 0;
  int n = 0;
  std::vector<std::string> list_args;
  auto* hquad = app.add_subcommand("hquad", "Class number of Q(sqrt a)");
  hquad->add_option("a", a)->required();
  auto* unit = app.add_subcommand("unit", "Fundamental unit of Q(sqrt a), a > 1");
  unit->add_option("a", a)->required();
  auto* info = app.add_subcommand("field-info", "Field identity, standard form, discriminant, ramification");
  info->add_option("list", list_args)->required();
  auto* hfield = app.add_subcommand("hfield", "Class number of a multiquadratic field with its derivation");
  hfield->add_option("list", list_args)->required();
  auto* classify = app.add_subcommand("classify", "Imaginary n-quadratic fields with class number 1");
  classify->add_option("n", n)->required()->check(CLI::Range(1, 6));
  auto* verify = app.add_subcommand("verify-datasets", "Re-verify every unit dataset");
  auto* tables = app.add_subcommand("tables-check", "Regenerate every table and compare with the published ones");
  auto* make = app.add_subcommand("make-datasets", "Compute and write the unit datasets the classification uses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  cfg.output = output == "json" ? Output::json : Output::table;

  try {
    set_interval_start_precision(cfg.precision);
    if (!cfg.cache_path.empty()) attach_class_number_cache(cfg.cache_path);
    if (*hquad) return cmd_hquad(cfg, a);
    if (*unit) return cmd_unit(cfg, a);
    if (*info) return cmd_field_info(cfg, parse_list(list_args));
    if (*hfield) return cmd_hfield(cfg, parse_list(list_args));
    if (*classify) return cmd_classify(cfg, n);
    if (*verify) return cmd_verify_datasets(cfg);
    if (*tables) return cmd_tables_check(cfg);
    if (*make) return cmd_make_datasets(cfg);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DatasetRequired& e) {
    std::cerr << "error: no unit dataset for {" << e.field() << "}; rerun with --allow-undecided or --compute-units\n";
    return kExitDataset;
  } catch (const DatasetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataset;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
