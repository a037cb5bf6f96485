#include "finloc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>

#include "finloc/catalog.hpp"
#include "finloc/error.hpp"
#include "finloc/extensions.hpp"
#include "finloc/filters.hpp"
#include "finloc/io.hpp"
#include "finloc/polarity.hpp"
#include "finloc/sublocales.hpp"
#include "finloc/theorems.hpp"

namespace finloc {

namespace {

using nlohmann::json;

struct Source {
  std::string frame_path;
  std::string catalog;
  std::string id;
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--frame", src.frame_path, "frame or topology JSON file");
  cmd->add_option("--catalog", src.catalog, "catalog spec, e.g. topologies:3,chain:6");
  cmd->add_option("--id", src.id, "select one catalog entry by id");
}

std::vector<CatalogEntry> load_frames(const Source& src, bool default_catalog) {
  if (!src.frame_path.empty() && !src.catalog.empty())
    throw FinlocError(ErrorKind::InvalidInput, "--frame and --catalog are exclusive");
  if (!src.frame_path.empty()) {
    // an explicit file must be a frame; catalogs skip non-frames instead
    CatalogEntry e{src.frame_path, frame_input_from_json(read_json_file(src.frame_path))};
    (void)Frame(e.lattice);
    return {e};
  }
  if (src.catalog.empty() && !default_catalog)
    throw FinlocError(ErrorKind::InvalidInput, "one of --frame or --catalog is required");
  auto entries = build_catalog(src.catalog.empty() ? default_catalog_spec() : parse_catalog_spec(src.catalog));
  if (!src.id.empty()) {
    std::erase_if(entries, [&](const CatalogEntry& e) { return e.id != src.id; });
    if (entries.empty()) throw FinlocError(ErrorKind::InvalidInput, "no catalog entry '" + src.id + "'");
  }
  return entries;
}

CatalogEntry load_one(const Source& src) {
  auto frames = load_frames(src, false);
  if (frames.size() != 1)
    throw FinlocError(ErrorKind::InvalidInput, "expected one frame; use --frame or --catalog with --id");
  return frames.front();
}

json names_of(const Frame& f, ElementSet s) {
  json out = json::array();
  for (int i : s) out.push_back(f.name(i));
  return out;
}

json filter_report(const FilterLattice& fl) {
  json classes = json::object();
  for (FilterClass c : {FilterClass::all, FilterClass::principal, FilterClass::closed, FilterClass::locally_closed,
                        FilterClass::regular, FilterClass::completely_prime, FilterClass::scott_open,
                        FilterClass::exact, FilterClass::strongly_exact})
    classes[std::string(to_string(c))] = fl.family(c).size();
  json filters = json::array();
  for (int i = 0; i < fl.size(); ++i)
    filters.push_back({{"generator", fl.frame().name(fl.generator(i))}, {"tags", fl.tags(i).to_json()}});
  const auto sf = subfitness_suite(fl);
  return {{"classes", classes},
          {"count", fl.size()},
          {"filters", filters},
          {"subfitness", sf.to_json()},
          {"ex_boolean", family_is_boolean(fl, fl.family(FilterClass::exact))}};
}

json sublocale_report(const SublocaleLattice& sl) {
  json classes = json::object();
  for (SublocaleClass c : {SublocaleClass::open, SublocaleClass::closed, SublocaleClass::fitted,
                           SublocaleClass::locally_closed, SublocaleClass::smooth, SublocaleClass::joins_of_closed,
                           SublocaleClass::compact, SublocaleClass::joins_of_compact, SublocaleClass::one_point,
                           SublocaleClass::spatial})
    classes[std::string(to_string(c))] = sl.family(c).size();
  return {{"classes", classes},
          {"count", sl.size()},
          {"fit", sl.family(SublocaleClass::fitted).size() == sl.size()}};
}

json frame_report(const CatalogEntry& e) {
  const Frame frame(e.lattice);
  json j = {{"boolean", frame.is_boolean()},
            {"frame", e.id},
            {"primes", names_of(frame, frame.primes())},
            {"size", frame.size()}};
  if (frame.size() <= kFilterFrameCap) j["filters"] = filter_report(FilterLattice(frame, Execution::serial));
  if (frame.size() <= kSublocaleFrameCap)
    j["sublocales"] = sublocale_report(SublocaleLattice(frame, Execution::serial));
  return j;
}

void write_table(std::ostream& out, const json& summary) {
  std::size_t width = 7;
  for (const auto& [id, _] : summary["theorems"].items()) width = std::max(width, id.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "theorem" << std::right << std::setw(8) << "passed"
      << std::setw(8) << "failed" << "\n";
  for (const auto& t : select_theorems("all")) {
    if (!summary["theorems"].contains(t->id)) continue;
    const auto& row = summary["theorems"][t->id];
    out << std::left << std::setw(static_cast<int>(width) + 2) << t->id << std::right << std::setw(8)
        << row["passed"].get<int>() << std::setw(8) << row["failed"].get<int>() << "\n";
  }
  out << "frames: " << summary["frames"].get<int>() << ", skipped: " << summary["skipped"].size()
      << ", failed verdicts: " << summary["failed"].get<int>() << "\n";
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FinlocError(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  return f;
}

json closed_names(const Polarity& p, const GaloisClosedFamily& gc) {
  json out = json::array();
  for (const auto& s : gc.closed) {
    json names = json::array();
    for (int x : s) names.push_back(x < static_cast<int>(p.x_names.size()) ? p.x_names[x] : std::to_string(x));
    out.push_back(names);
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite frames, filters, sublocales and their extensions", "finloc"};
  app.require_subcommand(1);

  Source src;
  std::string suite = "all", jsonl_path, summary_path, context_path, cls = "so";
  std::vector<std::string> random_args;
  std::uint64_t seed = 0;
  bool serial = false, dot = false, raw = false;
  std::string what = "lattice";

  auto* validate = app.add_subcommand("validate", "check that the input is a frame");
  validate->add_option("--frame", src.frame_path, "frame or topology JSON file")->required();

  auto* report = app.add_subcommand("report", "per-frame summary: primes, filter and sublocale classes");
  add_source(report, src);

  auto* filters = app.add_subcommand("filters", "filter classes and subfitness verdicts");
  add_source(filters, src);

  auto* verify = app.add_subcommand("verify", "run the theorem suite");
  add_source(verify, src);
  verify->add_option("--suite", suite, "all, or a comma list of theorem ids (prefix*)");
  verify->add_option("--jsonl", jsonl_path, "write one verdict per line to this file");
  verify->add_option("--summary", summary_path, "write the summary JSON to this file");
  verify->add_flag("--serial", serial, "run frames one after another");

  auto* gc = app.add_subcommand("gc", "closed sets of a polarity");
  auto* ctx_opt = gc->add_option("--context", context_path, "context JSON file");
  auto* rnd_opt = gc->add_option("--random", random_args, "n m density")->expected(3);
  gc->add_option("--seed", seed, "seed for --random");
  gc->add_flag("--dot", dot, "print the lattice as DOT");
  ctx_opt->excludes(rnd_opt);

  auto* extend = app.add_subcommand("extend", "filter extension L^F of a frame");
  add_source(extend, src);
  extend->add_option("--class", cls, "cl, so, cp, ex, se, lcl, principal, r or all")->required();
  extend->add_flag("--dot", dot, "append the DOT of the extension");

  auto* catalog = app.add_subcommand("catalog", "list catalog frames");
  catalog->add_option("--catalog", src.catalog, "catalog spec");
  catalog->add_flag("--raw", raw, "keep isomorphic copies");

  auto* dotcmd = app.add_subcommand("dot", "Hasse diagram in DOT");
  add_source(dotcmd, src);
  dotcmd->add_option("--of", what, "lattice, filters or sublocales")
      ->check(CLI::IsMember({"lattice", "filters", "sublocales"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (validate->parsed()) {
      const FiniteLattice l = frame_input_from_json(read_json_file(src.frame_path));
      const Frame frame(l);
      out << json{{"boolean", frame.is_boolean()},
                  {"frame", true},
                  {"primes", names_of(frame, frame.primes())},
                  {"size", frame.size()}}
                 .dump()
          << "\n";
      return kExitOk;
    }

    if (report->parsed() || filters->parsed()) {
      for (const auto& e : load_frames(src, false)) {
        if (report->parsed()) {
          out << frame_report(e).dump() << "\n";
        } else {
          json j = filter_report(FilterLattice(Frame(e.lattice), Execution::serial));
          j["frame"] = e.id;
          out << j.dump() << "\n";
        }
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto frames = load_frames(src, true);
      const auto theorems = select_theorems(suite);
      const auto result = run_suite(frames, theorems, serial ? Execution::serial : Execution::parallel);
      if (!jsonl_path.empty()) {
        auto f = open_output(jsonl_path);
        for (const auto& v : result.verdicts) f << v.to_json().dump() << "\n";
      }
      if (!summary_path.empty()) open_output(summary_path) << result.summary.dump(2) << "\n";
      write_table(out, result.summary);
      if (!result.all_passed() && jsonl_path.empty())
        for (const auto& v : result.verdicts)
          if (!v.passed) out << v.to_json().dump() << "\n";
      return result.all_passed() ? kExitOk : kExitFailed;
    }

    if (gc->parsed()) {
      Polarity p = Polarity::from_relation(0, 0, [](int, int) { return false; });
      if (!context_path.empty()) {
        p = polarity_from_json(read_json_file(context_path));
      } else if (random_args.size() == 3) {
        int n = 0, m = 0;
        double density = 0;
        try {
          n = std::stoi(random_args[0]);
          m = std::stoi(random_args[1]);
          density = std::stod(random_args[2]);
        } catch (const std::exception&) {
          throw FinlocError(ErrorKind::InvalidInput, "--random expects n m density");
        }
        if (n < 0 || m < 0 || n > 64 || m > 64 || density < 0 || density > 1)
          throw FinlocError(ErrorKind::InvalidInput, "--random: 0 <= n, m <= 64 and 0 <= density <= 1");
        p = random_polarity(n, m, density, seed);
      } else {
        throw FinlocError(ErrorKind::InvalidInput, "gc needs --context or --random");
      }
      const auto family = galois_closed(p);
      if (dot) {
        out << hasse_dot(family.lattice(), "gc");
        return kExitOk;
      }
      const auto laws = check_gc_laws(p, family);
      json j = {{"closed", closed_names(p, family)},
                {"laws", laws.all()},
                {"size", family.size()},
                {"xe", family.xe},
                {"ye", family.ye}};
      if (!laws.all()) j["witness"] = laws.witness;
      if (p.nx() <= kGcOracleCap) j["brute_force_agrees"] = galois_closed_brute(p) == family.closed;
      out << j.dump() << "\n";
      return laws.all() ? kExitOk : kExitFailed;
    }

    if (extend->parsed()) {
      const auto kind = parse_filter_class(cls);
      if (!kind) throw FinlocError(ErrorKind::InvalidInput, "--class: unknown filter class '" + cls + "'");
      const CatalogEntry e = load_one(src);
      const FilterLattice fl(Frame(e.lattice), Execution::serial);
      const auto ext = build_extension(fl, fl.family(*kind), std::string(to_string(*kind)));
      const auto axioms = check_extension_axioms(ext);
      const auto basic = basic_properties(fl, ext);
      const auto general = generalchar(fl, ext);
      json j = {{"axioms", {{"C", axioms.c}, {"D", axioms.d}, {"converse_C", axioms.converse_c},
                            {"k_is_meet", axioms.k_is_meet}}},
                {"basic", basic.passed()},
                {"class", std::string(to_string(*kind))},
                {"concrete_matches", !ext.alpha_failure},
                {"e_injective", general.injective},
                {"frame", e.id},
                {"sizes", {{"class", ext.members.size()}, {"concrete", ext.concrete.size()},
                           {"extension", ext.gc.size()}, {"frame", fl.frame().size()}}}};
      if (!axioms.passed()) j["witness"] = axioms.witness;
      out << j.dump() << "\n";
      if (dot) {
        std::map<int, std::string> colours;
        for (int a = 0; a < fl.frame().size(); ++a) colours[ext.e_map[a]] = "lightblue";
        out << hasse_dot(ext.gc.lattice(), "L^" + std::string(to_string(*kind)), colours);
      }
      return axioms.passed() && basic.passed() && !ext.alpha_failure ? kExitOk : kExitFailed;
    }

    if (catalog->parsed()) {
      const CatalogSpec spec = src.catalog.empty() ? default_catalog_spec() : parse_catalog_spec(src.catalog);
      std::vector<CatalogEntry> entries;
      if (raw) {
        for (auto [kind, bound] : spec.parts) {
          auto part = catalog_raw(kind, bound);
          entries.insert(entries.end(), part.begin(), part.end());
        }
      } else {
        entries = build_catalog(spec);
      }
      for (const auto& e : entries) {
        json j = lattice_to_json(e.lattice);
        j["id"] = e.id;
        j["size"] = e.lattice.size();
        out << j.dump() << "\n";
      }
      return kExitOk;
    }

    if (dotcmd->parsed()) {
      const CatalogEntry e = load_one(src);
      if (what == "lattice") {
        out << hasse_dot(e.lattice, e.id);
      } else if (what == "filters") {
        const FilterLattice fl(Frame(e.lattice), Execution::serial);
        std::map<int, std::string> colours;
        for (int i : fl.family(FilterClass::regular)) colours[i] = "lightblue";
        out << hasse_dot(fl.lattice(), "Filt(" + e.id + ")", colours);
      } else {
        const SublocaleLattice sl(Frame(e.lattice), Execution::serial);
        std::map<int, std::string> colours;
        for (int i : sl.family(SublocaleClass::fitted)) colours[i] = "lightyellow";
        for (int i : sl.family(SublocaleClass::closed)) colours[i] = "lightgrey";
        for (int i : sl.family(SublocaleClass::open)) colours[i] = "lightblue";
        out << hasse_dot(sl.lattice(), "Sl(" + e.id + ")", colours);
      }
      return kExitOk;
    }
  } catch (const FinlocError& e) {
    json j = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (!e.witness().is_null()) j["witness"] = e.witness();
    out << j.dump() << "\n";
    err << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace finloc
