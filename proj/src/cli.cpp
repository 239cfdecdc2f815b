#include "srw/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "srw/constructions.hpp"
#include "srw/harness.hpp"
#include "srw/ideals.hpp"
#include "srw/json_io.hpp"
#include "srw/pc.hpp"

namespace srw::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Config {
  std::string format = "text";
  std::string theorems;
  bool all = false;
  unsigned order_cap = kDefaultEnumerationOrderCap;
  std::size_t ideal_cap = kDefaultIdealCap;
  unsigned jobs = 1;
  std::string out_dir;
  std::string pc_function;
  std::vector<std::string> ideal_gens;
  std::vector<std::string> inputs;

  bool json() const { return format == "json"; }
};

struct Loaded {
  std::string id;
  OrderedView view;
};

Loaded load(const std::string& path) {
  return Loaded{fs::path(path).stem().string(), load_view(read_semiring_file(path))};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string set_text(const FiniteSemiring& S, const ElementSet& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](Element e) {
    if (!first) out += ", ";
    out += S.label(e);
    first = false;
  });
  return out + "}";
}

json json_or_null(std::optional<Element> e) { return e ? json(int(*e)) : json(nullptr); }

// ---------------------------------------------------------------------------

int cmd_validate(const Config& cfg, std::ostream& out) {
  int status = kExitOk;
  json reports = json::array();
  for (const auto& path : cfg.inputs) {
    json r;
    r["file"] = path;
    std::vector<std::string> lines;
    try {
      const SemiringFile f = read_semiring_file(path);
      const auto violations = check_semiring_axioms(f.tables);
      json vs = json::array();
      for (const auto& v : violations) {
        json w = json::array();
        for (Element e : v.witness) w.push_back(int(e));
        vs.push_back({{"axiom", std::string(to_string(v.axiom))}, {"witness", w}, {"count", v.count}});
        std::string line = std::string(to_string(v.axiom)) + " violated " + std::to_string(v.count) +
                           " time(s), first at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
          line += (i ? ", " : "") + std::to_string(v.witness[i]);
        lines.push_back(line + ")");
      }
      r["violations"] = vs;
      bool valid = violations.empty();
      if (valid && f.order) {
        try {
          const OrderedView V = load_view(f);
          r["positive"] = V.positive();
        } catch (const OrderIncompatible& e) {
          valid = false;
          r["order_error"] = e.what();
          lines.push_back(std::string("order: ") + e.what());
        } catch (const InvalidOrder& e) {
          valid = false;
          r["order_error"] = e.what();
          lines.push_back(std::string("order: ") + e.what());
        }
      }
      r["valid"] = valid;
      if (!valid) status = kExitInputError;
    } catch (const Error& e) {
      r["valid"] = false;
      r["error"] = e.what();
      lines.push_back(e.what());
      status = kExitInputError;
    }
    if (cfg.json()) {
      reports.push_back(r);
    } else {
      out << path << ": " << (r["valid"].get<bool>() ? "valid" : "invalid") << '\n';
      for (const auto& l : lines) out << "  " << l << '\n';
    }
  }
  if (cfg.json()) out << reports.dump(2) << '\n';
  return status;
}

json analysis_json(const OrderedView& V, std::optional<PcAnalysis>& pc) {
  const FiniteSemiring& S = V.semiring();
  json r;
  r["n"] = S.order();
  r["labels"] = S.labels();
  r["order_source"] =
      V.order().source() == OrderSource::kSupplied ? "supplied" : "natural-from-addition";
  if (V.order() == OrderRelation::discrete(S.order())) r["order_source"] = "discrete";
  r["positive"] = V.positive();
  r["add_idempotent"] = is_add_idempotent(S);
  r["mult_idempotent"] = is_mult_idempotent(S);
  r["simple"] = is_simple(S);
  r["entire"] = is_entire(S);
  r["nilpotent_free"] = nilpotent_analysis(S).nilpotent_free;
  if (V.positive()) {
    pc = pc_analysis(V);
    json stars = json::array();
    for (const auto& p : pc->pseudocomplements()) stars.push_back(json_or_null(p));
    r["pseudocomplements"] = stars;
    r["pcomp"] = to_json(pc->pcomp());
    r["skel"] = to_json(pc->skel());
    r["stone"] = to_json(pc->stone());
    r["dense"] = to_json(pc->dense());
    r["pseudocomplemented"] = pc->pseudocomplemented();
    r["stone_semiring"] = pc->stone_semiring();
  }
  return r;
}

int cmd_analyze(const Config& cfg, std::ostream& out) {
  json all = json::array();
  for (const auto& path : cfg.inputs) {
    const Loaded L = load(path);
    const FiniteSemiring& S = L.view.semiring();
    std::optional<PcAnalysis> pc;
    json r = analysis_json(L.view, pc);
    r["semiring"] = L.id;
    if (cfg.json()) {
      all.push_back(r);
      continue;
    }
    out << L.id << " (order " << S.order() << ", " << r["order_source"].get<std::string>() << " order)\n";
    for (const char* key : {"positive", "add_idempotent", "mult_idempotent", "simple", "entire",
                            "nilpotent_free", "pseudocomplemented", "stone_semiring"})
      if (r.contains(key)) out << "  " << std::left << std::setw(20) << key << yes_no(r[key].get<bool>()) << '\n';
    if (pc) {
      out << "  pseudocomplements:";
      for (std::size_t s = 0; s < S.order(); ++s) {
        const auto p = pc->star(static_cast<Element>(s));
        out << ' ' << S.label(static_cast<Element>(s)) << "*=" << (p ? S.label(*p) : "-");
      }
      out << "\n  pcomp " << set_text(S, pc->pcomp()) << "\n  Skel  " << set_text(S, pc->skel())
          << "\n  Stone " << set_text(S, pc->stone()) << "\n  Dns   " << set_text(S, pc->dense()) << '\n';
    } else {
      out << "  pseudocomplements need a positive order\n";
    }
  }
  if (cfg.json()) out << all.dump(2) << '\n';
  return kExitOk;
}

int cmd_ideals(const Config& cfg, std::ostream& out) {
  json all = json::array();
  for (const auto& path : cfg.inputs) {
    const Loaded L = load(path);
    const FiniteSemiring& S = L.view.semiring();
    const auto ideals = enumerate_ideals(S, cfg.ideal_cap);
    if (cfg.json()) {
      all.push_back({{"semiring", L.id}, {"ideals", to_json(ideals)}});
      continue;
    }
    out << L.id << ": " << ideals.size() << " ideals\n";
    for (const auto& I : ideals) out << "  " << set_text(S, I.members) << '\n';
  }
  if (cfg.json()) out << all.dump(2) << '\n';
  return kExitOk;
}

ElementSet parse_gens(const FiniteSemiring& S, const std::vector<std::string>& gens) {
  ElementSet out;
  for (const auto& g : gens) {
    std::size_t idx = S.order();
    for (std::size_t s = 0; s < S.order(); ++s)
      if (S.label(static_cast<Element>(s)) == g) idx = s;
    if (idx == S.order()) {
      try {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(g, &pos);
        if (pos == g.size() && v < S.order()) idx = v;
      } catch (const std::exception&) {
      }
    }
    if (idx == S.order()) throw ParseError("unknown element '" + g + "'");
    out.insert(static_cast<Element>(idx));
  }
  return out;
}

int cmd_primes(const Config& cfg, std::ostream& out) {
  json all = json::array();
  for (const auto& path : cfg.inputs) {
    const Loaded L = load(path);
    const FiniteSemiring& S = L.view.semiring();
    const IdealSet I = cfg.ideal_gens.empty() ? zero_ideal(S) : ideal_generated(S, parse_gens(S, cfg.ideal_gens));
    const SpectrumReport r = spectrum(S, I, cfg.ideal_cap);
    if (cfg.json()) {
      all.push_back({{"semiring", L.id},
                     {"ideal", to_json(I)},
                     {"primes", to_json(r.primes)},
                     {"v_of_i", to_json(r.v_of_i)},
                     {"minimal", to_json(r.minimal)},
                     {"nilradical", to_json(r.nilradical)},
                     {"nilpotent_free", r.nilpotent_free},
                     {"zero_divisors", to_json(r.zero_divisors)},
                     {"primes_with_no_proper_nonzero_subideal",
                      to_json(r.primes_with_no_proper_nonzero_subideal)},
                     {"minimal_readings_diverge", r.minimal_readings_diverge}});
      continue;
    }
    auto list = [&](const char* title, const std::vector<IdealSet>& v) {
      out << "  " << title << " (" << v.size() << "):";
      for (const auto& P : v) out << ' ' << set_text(S, P.members);
      out << '\n';
    };
    out << L.id << ", I = " << set_text(S, I.members) << '\n';
    list("primes", r.primes);
    list("V(I)", r.v_of_i);
    list("Min(I)", r.minimal);
    out << "  Nil(S) " << set_text(S, r.nilradical.members) << (r.nilpotent_free ? "  nilpotent-free" : "")
        << "\n  Z(S)   " << set_text(S, r.zero_divisors) << '\n';
    list("primes with no subideal strictly between (0) and P", r.primes_with_no_proper_nonzero_subideal);
    out << "  minimal-prime readings diverge: " << yes_no(r.minimal_readings_diverge) << '\n';
  }
  if (cfg.json()) out << all.dump(2) << '\n';
  return kExitOk;
}

std::vector<TheoremId> selected_theorems(const Config& cfg) {
  if (cfg.all) return theorem_catalog();
  return parse_theorem_list(cfg.theorems);
}

VerifyOptions verify_options(const Config& cfg) {
  VerifyOptions o;
  o.ideal_cap = cfg.ideal_cap;
  return o;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const auto ids = selected_theorems(cfg);
  bool failed = false;
  json all = json::array();
  for (const auto& path : cfg.inputs) {
    const Loaded L = load(path);
    VerificationContext ctx(L.id, L.view, verify_options(cfg));
    if (!cfg.pc_function.empty())
      ctx.add_pc_function(
          validate_pc_function(L.view.semiring(), parse_pc_function_json(read_text_file(cfg.pc_function))));
    if (!cfg.json()) out << L.id << '\n';
    for (const auto& r : verify(ctx, ids)) {
      failed = failed || r.result == Result::kFail;
      if (cfg.json())
        all.push_back(to_json(r));
      else
        out << "  " << report_line(r) << '\n';
    }
  }
  if (cfg.json()) out << all.dump(2) << '\n';
  return failed ? kExitTheoremFailure : kExitOk;
}

std::string file_stem(const std::string& id) {
  std::string out;
  for (char c : id) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += c;
    else if (c == '(' || c == ',' || c == '#')
      out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

json semiring_file_json(const FiniteSemiring& S) {
  const auto order = natural_order(S);
  return semiring_to_json(S, order ? &*order : nullptr);
}

json predicate_flags(const FiniteSemiring& S) {
  const OrderedView V = default_view(S);
  json r;
  r["n"] = S.order();
  r["add_idempotent"] = is_add_idempotent(S);
  r["mult_idempotent"] = is_mult_idempotent(S);
  r["simple"] = is_simple(S);
  r["entire"] = is_entire(S);
  r["nilpotent_free"] = nilpotent_analysis(S).nilpotent_free;
  r["positive"] = V.positive();
  if (V.positive()) {
    const PcAnalysis pc = pc_analysis(V);
    r["pseudocomplemented"] = pc.pseudocomplemented();
    r["stone_semiring"] = pc.stone_semiring();
  }
  return r;
}

void write_file(const fs::path& p, const json& j) {
  std::ofstream f(p);
  if (!f) throw ParseError("cannot write " + p.string());
  f << j.dump(2) << '\n';
}

int cmd_generate(const Config& cfg, std::ostream& out) {
  std::vector<NamedSemiring> all;
  bool exhaustive = false;
  for (const auto& text : cfg.inputs) {
    const GeneratorSpec spec = parse_generator_spec(text);
    exhaustive = exhaustive || spec.family == Family::kExhaustive;
    for (auto& g : generate(spec, cfg.order_cap)) all.push_back(std::move(g));
  }
  if (cfg.out_dir.empty()) {
    json docs = json::array();
    for (const auto& g : all) {
      json d = semiring_file_json(g.semiring);
      docs.push_back({{"id", g.id}, {"semiring", d}});
    }
    if (all.size() == 1)
      out << semiring_file_json(all.front().semiring).dump(2) << '\n';
    else
      out << docs.dump(2) << '\n';
    return kExitOk;
  }
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  json index = json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::ostringstream name;
    if (exhaustive)
      name << std::setw(4) << std::setfill('0') << i << ".json";
    else
      name << file_stem(all[i].id) << ".json";
    write_file(dir / name.str(), semiring_file_json(all[i].semiring));
    json entry = predicate_flags(all[i].semiring);
    entry["file"] = name.str();
    entry["id"] = all[i].id;
    index.push_back(entry);
    if (!cfg.json()) out << (dir / name.str()).string() << '\n';
  }
  if (exhaustive) write_file(dir / "index.json", index);
  if (cfg.json()) out << index.dump(2) << '\n';
  return kExitOk;
}

int cmd_corpus(const Config& cfg, std::ostream& out) {
  std::vector<GeneratorSpec> specs;
  for (const auto& text : cfg.inputs) {
    if (text == "default") {
      const auto d = default_corpus_specs();
      specs.insert(specs.end(), d.begin(), d.end());
    } else {
      specs.push_back(parse_generator_spec(text));
    }
  }
  const auto members = build_corpus(specs, cfg.order_cap);
  const CorpusReport report = corpus_run(members, selected_theorems(cfg), verify_options(cfg), cfg.jobs);
  if (!cfg.out_dir.empty()) {
    fs::create_directories(cfg.out_dir);
    write_file(fs::path(cfg.out_dir) / "report.json", to_json(report));
  }
  if (cfg.json())
    out << to_json(report).dump(2) << '\n';
  else
    out << summary_table(report);
  return report.any_failure() ? kExitTheoremFailure : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite commutative semiring workbench", "srw"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--ideal-cap", cfg.ideal_cap, "Largest order for ideal enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--order-cap", cfg.order_cap, "Largest order for exhaustive enumeration")
        ->check(CLI::PositiveNumber);
  };
  auto* validate = app.add_subcommand("validate", "Check the semiring axioms of JSON files");
  validate->add_option("files", cfg.inputs, "Semiring files")->required();
  auto* analyze = app.add_subcommand("analyze", "Predicates and pseudocomplement data");
  analyze->add_option("files", cfg.inputs, "Semiring files")->required();
  auto* ideals = app.add_subcommand("ideals", "Enumerate ideals");
  ideals->add_option("files", cfg.inputs, "Semiring files")->required();
  auto* primes = app.add_subcommand("primes", "Prime spectrum, minimal primes, radicals");
  primes->add_option("files", cfg.inputs, "Semiring files")->required();
  primes->add_option("--ideal", cfg.ideal_gens, "Generators of I (labels or indices)");
  auto* verify_cmd = app.add_subcommand("verify", "Check catalog theorems on semiring files");
  verify_cmd->add_option("files", cfg.inputs, "Semiring files")->required();
  verify_cmd->add_option("--theorems", cfg.theorems, "Comma-separated theorem ids (default: all)");
  verify_cmd->add_flag("--all", cfg.all, "Check the full catalog");
  verify_cmd->add_option("--pc-function", cfg.pc_function, "Extra pc-function file {\"star\": [...]}");
  auto* gen = app.add_subcommand("generate", "Write semiring files for generator specs");
  gen->add_option("specs", cfg.inputs, "Generator specs, e.g. chain(3) or exhaustive(3)")->required();
  gen->add_option("--out", cfg.out_dir, "Output directory");
  auto* corpus = app.add_subcommand("corpus", "Run theorems over generated semirings");
  corpus->add_option("specs", cfg.inputs, "Generator specs; 'default' is the standard corpus");
  corpus->add_option("--theorems", cfg.theorems, "Comma-separated theorem ids (default: all)");
  corpus->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  corpus->add_option("--out", cfg.out_dir, "Also write the JSON report to this directory");
  for (auto* sub : {validate, analyze, ideals, primes, verify_cmd, gen, corpus}) common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*validate) return cmd_validate(cfg, out);
    if (*analyze) return cmd_analyze(cfg, out);
    if (*ideals) return cmd_ideals(cfg, out);
    if (*primes) return cmd_primes(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, out);
    if (*gen) return cmd_generate(cfg, out);
    if (*corpus) return cmd_corpus(cfg, out);
  } catch (const AxiomViolationError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& v : e.violations()) {
      err << "  " << to_string(v.axiom) << " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) err << (i ? ", " : "") << int(v.witness[i]);
      err << ")\n";
    }
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace srw::cli
