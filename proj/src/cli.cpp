#include "cyltqft/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cyltqft/bimod.hpp"
#include "cyltqft/cyl.hpp"
#include "cyltqft/enumerate.hpp"
#include "cyltqft/error.hpp"
#include "cyltqft/fsgrp.hpp"
#include "cyltqft/json_io.hpp"
#include "cyltqft/theory.hpp"

namespace cyltqft::cli {

namespace {

struct Options {
  std::string input;
  std::string theory = "constant";
  std::size_t set_size = 2;
  std::string fill = "0";
  std::size_t max_components = 2;
  std::size_t max_regions = 2;
  std::string format = "text";
  std::string out;
  bool identity = false;
};

// What a command produced: reports, extra top-level fields and an overall
// verdict.
struct Outcome {
  std::string command;
  std::vector<Report> reports;
  Json extra = Json::object();
  std::vector<std::string> lines;
  bool ok = true;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Reads and decodes a JSON file, naming the file in any input error.
template <typename F>
auto load(const std::string& path, F&& decode) {
  try {
    return decode(parse_json(read_file(path)));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

TheoryPtr load_theory(const Options& o) {
  if (o.theory == "constant" || o.theory == "free_boundary") {
    Json d{{"theory", o.theory}, {"S", to_json(FinSet::range(o.set_size))}};
    if (o.theory == "free_boundary") d["fill"] = o.fill;
    return theory_from_json(d, "--theory");
  }
  return load(o.theory, [](const Json& j) { return theory_from_json(j); });
}

std::string render_text(const Report& r) {
  std::ostringstream s;
  s << "== " << r.title() << " ==\n";
  for (const auto& n : r.notes()) s << "note: " << n << "\n";
  std::vector<Record> sorted = r.sorted_records();
  for (const auto& [name, tally] : r.summary()) {
    s << name << ": " << tally.passed << " passed, " << tally.failed << " failed"
      << (tally.audit ? " (audit)" : "") << "\n";
    for (const Record& rec : sorted) {
      if (rec.check != name || rec.pass) continue;
      s << "  FAIL " << rec.instance << " | witness: " << rec.witness;
      if (!rec.detail.empty()) s << " | " << rec.detail;
      s << "\n";
    }
  }
  s << "result: " << (r.ok() ? "pass" : "FAIL") << "\n";
  return s.str();
}

std::string render(const Outcome& o, const std::string& format) {
  if (format == "json") {
    Json j = o.extra;
    j["command"] = o.command;
    j["ok"] = o.ok;
    j["reports"] = Json::array();
    for (const auto& r : o.reports) j["reports"].push_back(to_json(r));
    return j.dump(2) + "\n";
  }
  std::string s;
  for (const auto& line : o.lines) s += line + "\n";
  for (const auto& r : o.reports) s += render_text(r);
  return s;
}

Outcome check_fsgrp(const Options& o) {
  FiberedSemiGroup f = load(o.input, [](const Json& j) { return fsgrp_from_json(j); });
  Outcome out{"check-fsgrp", {validate_fsgrp(f, o.input)}, Json::object(), {}, true};
  out.ok = out.reports[0].ok();
  bool rigid = out.ok && is_rigid(f);
  out.extra["rigid"] = rigid;
  out.lines.push_back(std::string("rigid: ") + (rigid ? "yes" : "no"));
  return out;
}

Outcome check_bimodule(const Options& o) {
  FiberedBimodule b = load(o.input, [](const Json& j) { return bimodule_from_json(j); });
  Outcome out{"check-bimodule", {validate_bimodule(b, o.input)}, Json::object(), {}, true};
  out.ok = out.reports[0].ok();
  bool rigid = out.ok && is_rigid(b);
  out.extra["rigid"] = rigid;
  out.lines.push_back(std::string("rigid: ") + (rigid ? "yes" : "no"));
  if (out.ok) {
    LawUniverse u;
    u.sgrps = {b.left(), b.right()};
    u.bimodules = {b};
    out.reports.push_back(check_double_category_laws(u));
    out.ok = out.reports.back().ok();
  }
  return out;
}

Outcome check_theory(const Options& o) {
  TheoryPtr t = load_theory(o);
  Outcome out{"check-theory", {}, Json::object(), {}, true};
  out.reports.push_back(check_axioms(*t, theory_universe(o.max_components, o.max_regions)));
  out.ok = out.reports[0].ok();
  return out;
}

Outcome verify_functor(const Options& o) {
  Outcome out = check_theory(o);
  out.command = "verify-functor";
  CylinderFunctor f(load_theory(o));
  out.reports.push_back(
      verify_double_functor(f, functor_universe(o.max_components, o.max_regions)));
  out.ok = out.ok && out.reports.back().ok();
  return out;
}

// Builds without a report; the emitted JSON is the whole output.
std::string build(const Options& o) {
  Json in = load(o.input, [](const Json& j) { return j; });
  TheoryPtr t = load_theory(o);
  Json result;
  if (in.is_object() && in.contains("components")) {
    CobObject s = load(o.input, [](const Json& j) { return object_from_json(j); });
    FiberedSemiGroup e = cylinder_semigroup(*t, s);
    result = o.identity ? to_json(identity_bimodule(e)) : to_json(e);
  } else {
    if (o.identity) throw InputError("--identity needs an object");
    Cobordism m = load(o.input, [](const Json& j) { return cobordism_from_json(j); });
    result = to_json(cylinder_bimodule(*t, m));
  }
  return result.dump(2) + "\n";
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f || !(f << text)) throw InputError("cannot write '" + o.out + "'");
}

void add_output(CLI::App* c, Options& o) {
  c->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  c->add_option("--out", o.out, "Write the output to this file instead of stdout");
}

void add_universe(CLI::App* c, Options& o) {
  c->add_option("--theory", o.theory,
                "constant, free_boundary, or a path to a theory descriptor")
      ->capture_default_str();
  c->add_option("--set-size", o.set_size, "|S| for a named theory")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  c->add_option("--fill", o.fill, "Fill value for free_boundary")->capture_default_str();
  c->add_option("--max-components", o.max_components, "Components per object")
      ->capture_default_str();
  c->add_option("--max-regions", o.max_regions, "Regions per cobordism")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cylinder constructions over finite local field theories"};
  app.require_subcommand(1);
  auto* fsg = app.add_subcommand("check-fsgrp", "Validate a fibered semi-group");
  fsg->add_option("file", o.input, "fsgrp JSON")->required();
  add_output(fsg, o);
  auto* bim = app.add_subcommand("check-bimodule", "Validate a bimodule and run the law suite");
  bim->add_option("file", o.input, "bimodule JSON")->required();
  add_output(bim, o);
  auto* thy = app.add_subcommand("check-theory", "Audit the axioms of a local theory");
  add_universe(thy, o);
  add_output(thy, o);
  auto* fun = app.add_subcommand("verify-functor", "Check the double functor laws");
  add_universe(fun, o);
  add_output(fun, o);
  auto* bld = app.add_subcommand("build", "Emit E_S or Omega_M as JSON");
  bld->add_option("file", o.input, "object or cobordism JSON")->required();
  bld->add_flag("--identity", o.identity, "Emit the identity bimodule of E_S instead");
  add_universe(bld, o);
  add_output(bld, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bld->parsed()) {
      emit(o, build(o), out);
      return 0;
    }
    Outcome result;
    if (fsg->parsed()) result = check_fsgrp(o);
    else if (bim->parsed()) result = check_bimodule(o);
    else if (thy->parsed()) result = check_theory(o);
    else result = verify_functor(o);
    emit(o, render(result, o.format), out);
    return result.ok ? 0 : 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const TheoryViolation& e) {
    err << "violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cyltqft::cli
