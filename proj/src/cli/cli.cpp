#include "cobord/cli/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "toml.hpp"

#include "cobord/algebra/io.hpp"
#include "cobord/chernweil/suite.hpp"
#include "cobord/error.hpp"
#include "cobord/fgl/fgl.hpp"
#include "cobord/fgl/io.hpp"
#include "cobord/fgl/tor.hpp"
#include "cobord/genera/genera.hpp"

namespace cobord::cli {

using nlohmann::json;

namespace {

struct Report {
  json result;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool identities_hold = true;
};

std::string decimal(double x) { return json(x).dump(); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

json toml_value(const toml::node& n, const std::string& key) {
  if (auto v = n.as_integer()) return v->get();
  if (auto v = n.as_floating_point()) return v->get();
  if (auto v = n.as_string()) return v->get();
  if (auto v = n.as_boolean()) return v->get();
  if (auto a = n.as_array()) {
    json out = json::array();
    for (const auto& e : *a) out.push_back(toml_value(e, key));
    return out;
  }
  throw ParseError("config key '" + key + "' has an unsupported TOML type");
}

// Checks that `v` has the JSON type of the default `d`.
void check_type(const std::string& key, const json& d, const json& v) {
  const bool same = (d.is_number_integer() && v.is_number_integer()) ||
                    (d.is_number_float() && v.is_number()) || (d.is_string() && v.is_string()) ||
                    (d.is_boolean() && v.is_boolean()) || (d.is_array() && v.is_array());
  if (!same) throw ParseError("config key '" + key + "' expects " + std::string(d.type_name()));
}

void merge_toml(json& cfg, const std::string& path) {
  toml::table t;
  try {
    t = toml::parse_file(path);
  } catch (const toml::parse_error& e) {
    throw ParseError("'" + path + "': " + std::string(e.description()));
  }
  for (const auto& [k, node] : t) {
    const std::string key(k.str());
    if (!cfg.contains(key)) throw ParseError("unknown config key '" + key + "' in '" + path + "'");
    json v = toml_value(node, key);
    check_type(key, cfg[key], v);
    cfg[key] = v;
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

json parse_flag(const std::string& key, const json& d, const std::string& text) {
  try {
    if (d.is_boolean()) return text == "true" || text == "1";
    if (d.is_number_integer()) return std::stoll(text);
    if (d.is_number_float()) return std::stod(text);
    if (d.is_array()) {
      json a = json::array();
      const bool ints = !d.empty() && d[0].is_number_integer();
      for (const auto& item : split_list(text)) {
        if (ints) a.push_back(std::stoll(item));
        else a.push_back(item);
      }
      return a;
    }
  } catch (const std::logic_error&) {
    throw ParseError("option --" + key + " expects " + std::string(d.type_name()) + ", got '" + text + "'");
  }
  return text;
}

// Options of one subcommand: each maps a config key to a flag.
class Options {
 public:
  Options(CLI::App* app, json defaults) : app_(app), defaults_(std::move(defaults)) {
    app_->add_option("--config", config_path_, "TOML file with option values");
    app_->add_option("--format", values_["format"], "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app_->add_flag("--json", json_flag_, "shorthand for --format json");
    defaults_["format"] = "text";
  }

  void add(const std::string& key, const std::string& help) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (defaults_.at(key).is_boolean()) {
      app_->add_flag(flag, bools_[key], help);
    } else {
      app_->add_option(flag, values_[key], help);
    }
  }

  CLI::App* app() const { return app_; }
  const json& defaults() const { return defaults_; }

  json resolve(json base) const {
    for (auto it = defaults_.begin(); it != defaults_.end(); ++it) {
      if (!base.contains(it.key())) base[it.key()] = it.value();
    }
    if (!config_path_.empty()) merge_toml(base, config_path_);
    for (const auto& [key, text] : values_) {
      std::string flag = "--" + key;
      std::replace(flag.begin(), flag.end(), '_', '-');
      if (app_->count(flag) > 0) base[key] = parse_flag(key, base[key], text);
    }
    for (const auto& [key, set] : bools_) {
      if (set) base[key] = true;
    }
    if (json_flag_) base["format"] = "json";
    return base;
  }

  std::string flag_value(const std::string& key) const {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    auto it = values_.find(key);
    return it != values_.end() && app_->count(flag) > 0 ? it->second : std::string();
  }
  const std::string& config_path() const { return config_path_; }

 private:
  CLI::App* app_;
  json defaults_;
  std::string config_path_;
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> bools_;
  bool json_flag_ = false;
};

genera::CharacteristicSeries phi_from_config(const json& cfg, int order) {
  const auto series = cfg["series"].get<std::string>();
  if (!series.empty()) {
    auto s = algebra::parse_series(algebra::rationals_ring(), {genera::z_variable()}, order, series);
    return genera::CharacteristicSeries(std::move(s), "series");
  }
  return genera::builtin_genus(cfg["phi"].get<std::string>(), order);
}

Report genus_command(const json& cfg) {
  const int n = cfg["cpn"].get<int>();
  if (n < 1) throw DomainError("--cpn must be at least 1");
  const auto phi = phi_from_config(cfg, n);
  const auto table = genera::genus_table(phi, n);
  Report r;
  r.header = {"n", "value"};
  json values = json::array();
  for (const auto& [k, v] : table.values) {
    if (k < 1) continue;
    json entry{{"n", k}, {"value", v.to_string()}};
    if (cfg["check_chern"].get<bool>()) {
      const auto other = genera::genus_cpn_via_chern(phi, k);
      const bool agree = other == v;
      entry["chern_route"] = other.to_string();
      entry["agree"] = agree;
      r.identities_hold = r.identities_hold && agree;
    }
    values.push_back(entry);
    r.rows.push_back({std::to_string(k), v.to_string()});
  }
  r.result = {{"phi", phi.label()}, {"series", algebra::series_to_text(phi.series())}, {"values", values}};
  return r;
}

fgl::FormalGroupLaw law_from_config(const json& cfg) {
  const auto input = cfg["input"].get<std::string>();
  if (!input.empty()) return fgl::fgl_from_json(read_json_file(input));
  return fgl::named_fgl(cfg["fgl"].get<std::string>(), cfg["order"].get<int>());
}

Report fgl_validate_command(const json& cfg) {
  const auto f = law_from_config(cfg);
  const auto rep = fgl::fgl_validate(f);
  Report r;
  r.identities_hold = rep.valid;
  r.result = {{"law", fgl::fgl_to_json(f)}, {"valid", rep.valid}, {"axiom", rep.axiom}, {"monomial", rep.monomial}, {"defect", rep.defect}};
  r.header = {"valid", "axiom", "monomial", "defect"};
  r.rows.push_back({rep.valid ? "true" : "false", rep.axiom, rep.monomial, rep.defect});
  return r;
}

Report fgl_log_command(const json& cfg) {
  const auto f = law_from_config(cfg);
  const auto log = fgl::fgl_log(f);
  Report r;
  r.header = {"power", "coefficient"};
  json coeffs = json::array();
  for (int i = 1; i <= log.order(); ++i) {
    const auto c = log.coefficient(i);
    if (c.is_zero()) continue;
    coeffs.push_back({{"power", i}, {"coefficient", c.to_string()}});
    r.rows.push_back({std::to_string(i), c.to_string()});
  }
  r.result = {{"law", fgl::fgl_to_json(f)}, {"log", algebra::series_to_text(log)}, {"coefficients", coeffs}};
  return r;
}

Report fgl_classify_command(const json& cfg) {
  const int order = cfg["order"].get<int>();
  const auto genus = cfg["genus"].get<std::string>();
  const auto c = genus.empty() ? fgl::quillen_classify(law_from_config(cfg))
                               : fgl::quillen_classify(genera::genus_table(genera::builtin_genus(genus, order), order - 1), order);
  Report r;
  r.identities_hold = c.matches;
  r.header = {"generator", "image"};
  json theta = json::array();
  const auto& src = c.theta.source();
  for (std::size_t i = 0; i < src->size(); ++i) {
    const auto img = c.theta.images()[i].to_string();
    theta.push_back({{"generator", src->generator(i).name}, {"image", img}});
    r.rows.push_back({src->generator(i).name, img});
  }
  r.result = {{"theta", theta}, {"image", fgl::fgl_to_json(c.image)}, {"matches", c.matches}, {"mismatch", c.mismatch}};
  return r;
}

Report landweber_command(const json& cfg) {
  const auto f = law_from_config(cfg);
  const auto primes = cfg["primes"].get<std::vector<int>>();
  const auto verdicts = fgl::landweber_check(f, primes, cfg["stages"].get<int>());
  Report r;
  r.header = {"prime", "verdict", "stage", "v", "status"};
  json out = json::array();
  for (const auto& v : verdicts) {
    json stages = json::array();
    for (const auto& s : v.stages) {
      stages.push_back({{"stage", s.stage}, {"v", s.v}, {"status", s.status}});
      r.rows.push_back({std::to_string(v.prime), v.verdict, std::to_string(s.stage), s.v, s.status});
    }
    out.push_back({{"prime", v.prime}, {"verdict", v.verdict}, {"reason", v.reason}, {"stages", stages}});
  }
  r.result = {{"law", fgl::fgl_to_json(f)}, {"verdicts", out}};
  return r;
}

Report tor1_command(const json& cfg) {
  const auto module_path = cfg["module"].get<std::string>();
  const auto map_path = cfg["map"].get<std::string>();
  if (module_path.empty() || map_path.empty()) throw DomainError("tor1 needs --module and --map files");
  const auto m = fgl::module_from_json(read_json_file(module_path));
  const auto map = fgl::ring_map_from_json(read_json_file(map_path), m.ring);
  const auto t = fgl::tor1(m, map, {cfg["lo"].get<int>(), cfg["hi"].get<int>()}, cfg["max_basis"].get<std::size_t>());
  Report r;
  r.header = {"degree", "dim"};
  json degrees = json::array();
  for (const auto& d : t.degrees) {
    degrees.push_back({{"degree", d.degree}, {"dim", d.dim}, {"partial", d.partial}});
    r.rows.push_back({std::to_string(d.degree), std::to_string(d.dim)});
  }
  r.result = {{"degrees", degrees}, {"syzygy_degrees", t.syzygy_degrees}};
  return r;
}

json demo_to_json(const chernweil::DemoConfig& c) {
  json phi = json::array();
  for (const auto& q : c.phi) phi.push_back(algebra::to_string(q));
  return {{"demo", c.demo},
          {"n", c.n},
          {"interval_n", c.interval_n},
          {"seed", c.seed},
          {"phi", phi},
          {"charges", c.charges},
          {"tol", c.tol},
          {"exact_tol", c.exact_tol},
          {"period_tol", c.period_tol},
          {"base_dim", c.base_dim},
          {"fiber_dim", c.fiber_dim},
          {"cycle_fiber_dim", c.cycle_fiber_dim},
          {"compose_first", c.compose_first},
          {"compose_second", c.compose_second}};
}

chernweil::DemoConfig demo_from_json(const json& j) {
  auto c = chernweil::demo_config(j["demo"].get<std::string>());
  c.n = j["n"].get<int>();
  c.interval_n = j["interval_n"].get<int>();
  c.seed = j["seed"].get<std::uint64_t>();
  c.phi.clear();
  for (const auto& q : j["phi"]) {
    if (!q.is_string()) throw ParseError("phi coefficients must be rational strings such as \"-1/3\"");
    c.phi.push_back(algebra::parse_rational(q.get<std::string>()));
  }
  c.charges = j["charges"].get<std::vector<int>>();
  c.tol = j["tol"].get<double>();
  c.exact_tol = j["exact_tol"].get<double>();
  c.period_tol = j["period_tol"].get<double>();
  c.base_dim = j["base_dim"].get<int>();
  c.fiber_dim = j["fiber_dim"].get<int>();
  c.cycle_fiber_dim = j["cycle_fiber_dim"].get<int>();
  c.compose_first = j["compose_first"].get<int>();
  c.compose_second = j["compose_second"].get<int>();
  return c;
}

Report cw_command(const json& cfg, const std::vector<std::string>& groups) {
  const auto config = demo_from_json(cfg);
  const auto suite = chernweil::run_suite(config, groups);
  Report r;
  r.identities_hold = suite.pass();
  r.header = {"group", "identity", "residual", "tolerance", "pass"};
  json results = json::array();
  for (const auto& x : suite.results) {
    results.push_back({{"group", x.group}, {"identity", x.name}, {"residual", x.residual}, {"tolerance", x.tolerance}, {"pass", x.pass()}});
    r.rows.push_back({x.group, x.name, decimal(x.residual), decimal(x.tolerance), x.pass() ? "true" : "false"});
  }
  r.result = {{"demo", suite.demo}, {"pass", suite.pass()}, {"results", results}};
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void emit(std::ostream& out, const std::string& command, const json& cfg, const Report& r) {
  const auto format = cfg["format"].get<std::string>();
  const std::string status = r.identities_hold ? "ok" : "identity-failure";
  if (format == "json") {
    json echo = cfg;
    echo.erase("format");
    out << json{{"command", command}, {"config", echo}, {"result", r.result}, {"status", status}}.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < r.header.size(); ++i) out << (i ? "," : "") << csv_field(r.header[i]);
    out << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(r.header.size());
  for (std::size_t i = 0; i < r.header.size(); ++i) width[i] = r.header[i].size();
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(i + 1 < cells.size() ? width[i] : 0)) << cells[i];
    }
    out << "\n";
  };
  out << command << "\n";
  line(r.header);
  for (const auto& row : r.rows) line(row);
  out << "status: " << status << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cobordism calculus: genera, formal group laws, Tor and Chern-Weil identity suites", "cobord"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* genus = app.add_subcommand("genus", "genus of CP^n for a characteristic series");
  Options genus_opts(genus, {{"phi", "todd"}, {"series", ""}, {"cpn", 8}, {"check_chern", false}});
  genus_opts.add("phi", "builtin series: todd, l_genus, a_hat, elliptic, elliptic(d,e)");
  genus_opts.add("series", "explicit series in z over Q, e.g. \"1 + 1/2*z\"");
  genus_opts.add("cpn", "largest n");
  genus_opts.add("check_chern", "also evaluate through Chern classes and compare");

  const json law_defaults{{"fgl", "multiplicative"}, {"input", ""}, {"order", 8}};
  auto* fgl_cmd = app.add_subcommand("fgl", "formal group law operations");
  fgl_cmd->require_subcommand(1);
  std::map<std::string, std::unique_ptr<Options>> fgl_opts;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"validate", "check unit, commutativity and associativity"},
           {"log", "logarithm over a rational base"},
           {"classify", "Quillen classifying map from the universal law"}}) {
    auto defaults = law_defaults;
    if (name == "classify") defaults["genus"] = "";
    auto o = std::make_unique<Options>(fgl_cmd->add_subcommand(name, help), defaults);
    o->add("fgl", "named law: " + [] {
      std::string s;
      for (const auto& n : fgl::named_fgl_names()) s += (s.empty() ? "" : ", ") + n;
      return s;
    }());
    o->add("input", "JSON file with {ring, order, series, polynomial}");
    o->add("order", "truncation order");
    if (name == "classify") o->add("genus", "classify the law of a builtin genus from its CP^n table");
    fgl_opts[name] = std::move(o);
  }

  auto* landweber = app.add_subcommand("landweber", "Landweber exactness verdicts");
  auto lw_defaults = law_defaults;
  lw_defaults["fgl"] = "additive";
  lw_defaults["primes"] = {2};
  lw_defaults["stages"] = 1;
  Options lw_opts(landweber, lw_defaults);
  lw_opts.add("fgl", "named law");
  lw_opts.add("input", "JSON law file");
  lw_opts.add("order", "truncation order");
  lw_opts.add("primes", "comma-separated primes");
  lw_opts.add("stages", "number of v_n stages after p");

  auto* tor = app.add_subcommand("tor1", "Tor_1 of a graded module along a ring map");
  Options tor_opts(tor, {{"module", ""}, {"map", ""}, {"lo", -12}, {"hi", 0}, {"max_basis", 20000}});
  tor_opts.add("module", "JSON module presentation");
  tor_opts.add("map", "JSON ring map from the module ring");
  tor_opts.add("lo", "lowest degree");
  tor_opts.add("hi", "highest degree");
  tor_opts.add("max_basis", "bound on graded piece dimension");

  auto* cw = app.add_subcommand("cw", "Chern-Weil identity suites on torus data");
  cw->require_subcommand(1);
  std::map<std::string, std::unique_ptr<Options>> cw_opts;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"chern", "Chern forms, integrality and Whitney"},
           {"transgression", "transgression and A(o) homotopy invariance"},
           {"pushforward", "push-forward squares and composition"},
           {"axioms", "every identity group"}}) {
    auto o = std::make_unique<Options>(cw->add_subcommand(name, help), demo_to_json(chernweil::demo_config("t2-line")));
    for (const auto& [key, v] : o->defaults().items()) {
      if (key != "format") o->add(key, "see docs/formats.md");
    }
    cw_opts[name] = std::move(o);
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "run with --help for the list of commands and options\n";
    return usage_error;
  }

  try {
    std::string command;
    json cfg;
    Report report;
    if (genus->parsed()) {
      command = "genus";
      cfg = genus_opts.resolve(json::object());
      report = genus_command(cfg);
    } else if (fgl_cmd->parsed()) {
      for (const auto& [name, o] : fgl_opts) {
        if (!o->app()->parsed()) continue;
        command = "fgl " + name;
        cfg = o->resolve(json::object());
        if (name == "validate") report = fgl_validate_command(cfg);
        if (name == "log") report = fgl_log_command(cfg);
        if (name == "classify") report = fgl_classify_command(cfg);
      }
    } else if (landweber->parsed()) {
      command = "landweber";
      cfg = lw_opts.resolve(json::object());
      report = landweber_command(cfg);
    } else if (tor->parsed()) {
      command = "tor1";
      cfg = tor_opts.resolve(json::object());
      report = tor1_command(cfg);
    } else if (cw->parsed()) {
      for (const auto& [name, o] : cw_opts) {
        if (!o->app()->parsed()) continue;
        command = "cw " + name;
        std::string demo = o->flag_value("demo");
        if (demo.empty() && !o->config_path().empty()) {
          try {
            auto t = toml::parse_file(o->config_path());
            if (auto d = t["demo"].value<std::string>()) demo = *d;
          } catch (const toml::parse_error& e) {
            throw ParseError("'" + o->config_path() + "': " + std::string(e.description()));
          }
        }
        if (demo.empty()) demo = "t2-line";
        cfg = o->resolve(demo_to_json(chernweil::demo_config(demo)));
        const auto groups = name == "axioms" ? chernweil::suite_groups() : std::vector<std::string>{name};
        report = cw_command(cfg, groups);
      }
    }
    emit(out, command, cfg, report);
    return report.identities_hold ? ok : identity_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
}

}  // namespace cobord::cli
