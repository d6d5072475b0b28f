#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "tiltkit/charformula.hpp"
#include "tiltkit/error.hpp"
#include "tiltkit/serialize.hpp"

namespace tiltkit::cli {

namespace {

const std::vector<std::string> kCommands = {"blocks", "components", "dict",   "kl",    "pkl-import",
                                            "tilt",   "simple",     "weyl",   "wgroup"};

constexpr const char* kFallbackNote =
    "kl_fallback uses ordinary KL polynomials in place of ell-KL polynomials; "
    "they agree for large ell and low alcoves, no explicit bound is claimed";

IntVec parse_weight(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  std::istringstream is(t);
  IntVec v;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ValidationError("malformed integer '" + tok + "' in weight");
    }
  }
  return v;
}

std::shared_ptr<const RootDatum> load_datum(const JobConfig& c) {
  if (!c.datum_file.empty()) {
    std::ifstream in(c.datum_file);
    if (!in) throw DataFileError("cannot open datum file " + c.datum_file);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw DataFileError("datum file is not valid JSON: " + std::string(e.what()));
    }
    try {
      return std::make_shared<const RootDatum>(datum_from_json(j));
    } catch (const ValidationError& e) {
      throw DataFileError(std::string("datum file: ") + e.what());
    }
  }
  return std::make_shared<const RootDatum>(RootDatum::from_type(c.type, parse_isogeny(c.isogeny)));
}

IntVec lambda_of(const JobConfig& c, const RootDatum& d) {
  if (!c.lambda) throw ValidationError("--lambda is required for " + c.command);
  IntVec v(c.lambda->begin(), c.lambda->end());
  if (static_cast<int>(v.size()) != d.rank())
    throw ValidationError("--lambda has " + std::to_string(v.size()) + " entries, the datum has rank " +
                          std::to_string(d.rank()));
  return v;
}

int require_max_length(const JobConfig& c) {
  if (!c.max_length) throw ValidationError("--max-length is required for " + c.command);
  return *c.max_length;
}

Int require_ell(const JobConfig& c) {
  if (!c.ell) throw ValidationError("--ell is required for " + c.command);
  return *c.ell;
}

bool file_mode(const JobConfig& c) { return c.mode == "file" || (c.mode.empty() && !c.pcan_path.empty()); }

PCanTable make_table(const JobConfig& c, const LinkageContext& ctx) {
  if (file_mode(c)) return PCanTable::load(ctx, c.pcan_path);
  auto kl = std::make_shared<KazhdanLusztigBasis>(ctx.group_ptr(), HeckeModuleKind::antispherical, c.threads);
  return PCanTable::kl_fallback(ctx, std::move(kl));
}

struct Report {
  json header;
  std::vector<json> records;
  std::string raw_text;  // used instead of records for table formats
  bool has_raw = false;
};

void emit(const JobConfig& c, const Report& r, std::ostream& out) {
  if (c.format == OutputFormat::text) {
    if (r.has_raw) {
      out << r.raw_text;
      return;
    }
    for (const auto& rec : r.records) out << rec.dump() << '\n';
    return;
  }
  json doc = r.header;
  doc["records"] = r.records;
  out << doc.dump(2) << '\n';
}

json tilt_record(const LinkageContext& ctx, const Block& b, const AffineWeylElt& w, const PCanTable& table) {
  const auto& g = ctx.group();
  CharacterExpr e = tilting_character(ctx, b, w, table);
  return {{"w", element_to_json(g, w)},
          {"weight", g.act(w, b.representative, ctx.ell(), ActionMode::dot)},
          {"expr", to_json(e)},
          {"dim", expr_dimension(ctx.datum(), e)},
          {"mode", std::string(to_string(table.mode()))}};
}

void cmd_blocks(const JobConfig& c, const LinkageContext& ctx, Report& r) {
  for (const auto& b : ctx.blocks()) {
    json rec = to_json(b);
    if (c.max_length) {
      json ws = json::array();
      for (const auto& bw : ctx.block_dominant_weights(b, *c.max_length))
        ws.push_back({{"w", element_to_json(ctx.group(), bw.element)}, {"weight", bw.weight}});
      rec["dominant_weights"] = ws;
    }
    r.records.push_back(std::move(rec));
  }
}

void cmd_components(const JobConfig& c, const LinkageContext& ctx, Report& r) {
  const auto& comps = ctx.fixed_point_components();
  std::map<IntVec, Int> census;
  if (c.box) {
    const int n = ctx.datum().rank();
    IntVec mu(n, -*c.box);
    for (;;) {
      ++census[ctx.component_of_weight(mu).component];
      int i = 0;
      while (i < n && mu[i] == *c.box) mu[i++] = -*c.box;
      if (i == n) break;
      ++mu[i];
    }
  }
  for (const auto& comp : comps) {
    json rec = to_json(comp);
    if (c.box) rec["weights_in_box"] = census[comp.index];
    r.records.push_back(std::move(rec));
  }
}

void cmd_kl(const JobConfig& c, const LinkageContext& ctx, Report& r) {
  const int max_len = require_max_length(c);
  KazhdanLusztigBasis kl(ctx.group_ptr(), HeckeModuleKind::antispherical, c.threads);
  kl.ensure(max_len);
  PCanFile f = kl_table_as_file(kl, ctx.ell(), max_len);
  if (c.format == OutputFormat::text) {
    std::ostringstream os;
    write_pcan_file(os, f, ctx.group());
    r.raw_text = os.str();
    r.has_raw = true;
    return;
  }
  const auto& g = ctx.group();
  json* cur = nullptr;
  for (const auto& e : f.entries) {
    json w = element_to_json(g, e.w);
    if (!cur || (*cur)["w"] != w) {
      r.records.push_back({{"w", w}, {"length", g.length(e.w)}, {"entries", json::array()}});
      cur = &r.records.back();
    }
    (*cur)["entries"].push_back({{"y", element_to_json(g, e.y)}, {"poly", to_json(e.poly)}});
  }
}

void cmd_pkl_import(const JobConfig& c, const LinkageContext& ctx, Report& r) {
  if (c.pcan_path.empty()) throw ValidationError("pkl-import needs --pcan");
  PCanTable t = PCanTable::load(ctx, c.pcan_path);
  const PCanFile& f = *t.file();
  if (c.format == OutputFormat::text) {
    std::ostringstream os;
    write_pcan_file(os, f, ctx.group());
    r.raw_text = os.str();
    r.has_raw = true;
    return;
  }
  std::set<std::string> columns;
  for (const auto& e : f.entries) columns.insert(word_to_string(ctx.group().reduced_word(e.w)));
  r.records.push_back({{"ell", f.ell},
                       {"datum", f.datum_hash},
                       {"entries", f.entries.size()},
                       {"columns", columns.size()},
                       {"mode", "file"}});
}

void cmd_tilt(const JobConfig& c, const LinkageContext& ctx, Report& r) {
  const auto& g = ctx.group();
  Block b = ctx.block_at(lambda_of(c, ctx.datum()));
  PCanTable table = make_table(c, ctx);
  r.header["block"] = to_json(b);
  r.header["mode"] = std::string(to_string(table.mode()));
  if (table.mode() == PCanTable::Mode::kl_fallback) r.header["note"] = kFallbackNote;
  if (c.word) {
    r.records.push_back(tilt_record(ctx, b, g.from_word(parse_word(*c.word)), table));
    return;
  }
  for (const auto& bw : ctx.block_dominant_weights(b, require_max_length(c)))
    r.records.push_back(tilt_record(ctx, b, bw.element, table));
}

void cmd_simple(const JobConfig& c, const LinkageContext& ctx, Report& r) {
  const auto& g = ctx.group();
  YRegion region = c.max_length ? truncated_fW_region(ctx, *c.max_length) : y_region(ctx);
  r.header["region"] = {{"truncated", region.truncated}, {"coxeter_number", region.coxeter_number}};
  json members = json::array();
  for (std::size_t i = 0; i < region.members.size(); ++i)
    members.push_back({{"w", element_to_json(g, region.members[i])},
                       {"witness", {region.witnesses[i].numerator(), region.witnesses[i].denominator()}}});
  r.header["region"]["members"] = members;
  if (region.warning) r.header["warning"] = *region.warning;

  KazhdanLusztigBasis regular(ctx.group_ptr(), HeckeModuleKind::regular, c.threads);
  std::optional<PCanTable> table;
  std::optional<HatMap> hat;
  if (!c.hat_path.empty()) {
    hat = load_hat_file(c.hat_path, g);
    hat->validate_on(g, region);
    table = make_table(c, ctx);
    r.header["mode"] = std::string(to_string(table->mode()));
    if (table->mode() == PCanTable::Mode::kl_fallback) r.header["note"] = kFallbackNote;
  }

  std::vector<AffineWeylElt> targets;
  if (c.word)
    targets.push_back(g.from_word(parse_word(*c.word)));
  else
    targets = region.members;
  IntVec zero(ctx.datum().rank(), 0);
  for (const auto& w : targets) {
    json rec{{"w", element_to_json(g, w)},
             {"weight", g.act(w, zero, ctx.ell(), ActionMode::dot)},
             {"simple_in_nablas", to_json(simples_in_nablas_kl(ctx, region, w, regular))}};
    if (hat) rec["nabla_in_simples"] = to_json(nabla_in_simples(ctx, region, w, *table, *hat));
    r.records.push_back(std::move(rec));
  }
}

void cmd_weyl(const JobConfig& c, const RootDatum& d, Report& r) {
  IntVec lambda = lambda_of(c, d);
  if (!d.is_dominant(lambda)) throw ValidationError("--lambda must be dominant");
  Character ch = weyl_character(d, lambda);
  r.records.push_back({{"weight", lambda}, {"dim", weyl_dim(d, lambda)}, {"character", to_json(ch)}});
}

json element_record(const AffineWeylGroup& g, const AffineWeylElt& w) {
  return {{"w", element_to_json(g, w)},
          {"length", g.length(w)},
          {"translation", w.translation},
          {"finite", std::vector<Int>(w.finite.data())},
          {"min_in_Wf", g.is_min_in_Wf(w)},
          {"right_descents", g.right_descents(w)}};
}

void cmd_wgroup(const JobConfig& c, const RootDatum& d, Report& r) {
  AffineWeylGroup g(std::make_shared<const RootDatum>(d));
  json gens = json::array();
  for (int s = 0; s < g.num_generators(); ++s) {
    const auto& [root, m] = g.simple_reflections().affine_roots[s];
    gens.push_back({{"index", s}, {"affine", !g.simple_reflections().is_finite(s)}, {"root", d.root(root)}, {"m", m}});
  }
  r.header["generators"] = gens;
  if (c.word) {
    AffineWeylElt w = g.from_word(parse_word(*c.word));
    json rec = element_record(g, w);
    if (c.lambda && c.ell) {
      IntVec mu = lambda_of(c, d);
      for (auto mode : {ActionMode::dot, ActionMode::box, ActionMode::cdot})
        rec["act_" + std::string(to_string(mode))] = g.act(w, mu, *c.ell, mode);
    }
    r.records.push_back(std::move(rec));
    return;
  }
  for (const auto& w : g.enumerate(require_max_length(c))) r.records.push_back(element_record(g, w));
}

}  // namespace

void JobConfig::validate() const {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
    throw ValidationError("unknown command '" + command + "'");
  if (type.empty() == datum_file.empty()) throw ValidationError("give exactly one of --type and --datum-file");
  if (ell && *ell < 2) throw ValidationError("--ell must be at least 2");
  if (max_length && *max_length < 0) throw ValidationError("--max-length must be nonnegative");
  if (box && *box <= 0) throw ValidationError("--box must be positive");
  if (!mode.empty() && mode != "file" && mode != "kl_fallback") throw ValidationError("--mode must be file or kl_fallback");
  if (mode == "file" && pcan_path.empty()) throw ValidationError("--mode file requires --pcan");
  if (mode == "kl_fallback" && !pcan_path.empty()) throw ValidationError("--pcan conflicts with --mode kl_fallback");
  if (threads == 0) throw ValidationError("--threads must be positive");
}

int run(const JobConfig& c, std::ostream& out, std::ostream& err) {
  auto fail = [&err](int code, const char* kind, const char* msg) {
    err << json{{"error", {{"code", code}, {"kind", kind}, {"message", msg}}}}.dump() << '\n';
    return code;
  };
  try {
    c.validate();
    auto datum = load_datum(c);
    Report r;
    r.header = {{"command", c.command}, {"datum", datum_to_json(*datum)}};
    if (c.command == "weyl") {
      cmd_weyl(c, *datum, r);
    } else if (c.command == "wgroup") {
      cmd_wgroup(c, *datum, r);
    } else {
      LinkageContext ctx(datum, require_ell(c));
      r.header["ell"] = ctx.ell();
      if (c.command == "blocks") cmd_blocks(c, ctx, r);
      else if (c.command == "components") cmd_components(c, ctx, r);
      else if (c.command == "dict") {
        for (const auto& e : ctx.blocks_vs_components_dictionary()) r.records.push_back(to_json(e));
      } else if (c.command == "kl") cmd_kl(c, ctx, r);
      else if (c.command == "pkl-import") cmd_pkl_import(c, ctx, r);
      else if (c.command == "tilt") cmd_tilt(c, ctx, r);
      else if (c.command == "simple") cmd_simple(c, ctx, r);
    }
    emit(c, r, out);
    return kExitOk;
  } catch (const DataFileError& e) {
    return fail(kExitDataFile, "data_file", e.what());
  } catch (const ValidationError& e) {
    return fail(kExitValidation, "validation", e.what());
  } catch (const std::exception& e) {
    return fail(kExitInternal, "internal", e.what());
  }
}

std::optional<JobConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
  JobConfig c;
  std::string lambda, word, format = "json";
  long long ell = 0, box = 0;
  int max_length = 0;

  CLI::App app{"Linkage, Kazhdan-Lusztig and tilting character computations for affine Weyl groups"};
  app.add_option("command", c.command, "blocks|components|dict|kl|pkl-import|tilt|simple|weyl|wgroup")->required();
  app.add_option("--type", c.type, "Cartan type, e.g. A1, B2, A1xA2");
  app.add_option("--isogeny", c.isogeny, "adjoint|simply_connected");
  app.add_option("--datum-file", c.datum_file, "JSON root datum");
  auto* ell_opt = app.add_option("--ell", ell, "characteristic parameter (>= 2)");
  auto* len_opt = app.add_option("--max-length", max_length, "length bound for enumerations");
  auto* box_opt = app.add_option("--box", box, "weight box radius (components census)");
  app.add_option("--mode", c.mode, "kl_fallback|file");
  app.add_option("--pcan", c.pcan_path, "ell-KL table file");
  app.add_option("--hat", c.hat_path, "hat-map file");
  auto* lambda_opt = app.add_option("--lambda", lambda, "weight, e.g. \"1 -1\"");
  auto* w_opt = app.add_option("--w", word, "word in the generators, product read left to right");
  app.add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", c.threads, "workers for the KL table fill");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    exit_code = kExitOk;
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", {{"code", kExitValidation}, {"kind", "usage"}, {"message", e.what()}}}}.dump() << '\n';
    exit_code = kExitValidation;
    return std::nullopt;
  }
  try {
    if (*ell_opt) c.ell = ell;
    if (*len_opt) c.max_length = max_length;
    if (*box_opt) c.box = box;
    if (*lambda_opt) {
      IntVec v = parse_weight(lambda);
      c.lambda = std::vector<long long>(v.begin(), v.end());
    }
    if (*w_opt) c.word = word;
  } catch (const ValidationError& e) {
    err << json{{"error", {{"code", kExitValidation}, {"kind", "usage"}, {"message", e.what()}}}}.dump() << '\n';
    exit_code = kExitValidation;
    return std::nullopt;
  }
  c.format = format == "text" ? OutputFormat::text : OutputFormat::json;
  return c;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  int code = 0;
  auto config = parse_args(argc, argv, out, err, code);
  if (!config) return code;
  return run(*config, out, err);
}

}  // namespace tiltkit::cli
