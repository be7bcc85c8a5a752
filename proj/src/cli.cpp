#include "sb3/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "sb3/band.hpp"
#include "sb3/birman.hpp"
#include "sb3/burau.hpp"
#include "sb3/cross_check.hpp"
#include "sb3/errors.hpp"
#include "sb3/presentation.hpp"
#include "sb3/solver.hpp"

namespace sb3::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string output = "json";
  std::string method = "all";
  std::string set;
  std::vector<std::string> words;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::size_t max_len = 16;
  bool birman = false;
  bool serial = false;
};

bool plain(const Options& o) { return o.output == "plain"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Group-mode parse, demoted to a monoid word when no t1^-1 occurs.
Word parse_any(const std::string& text) {
  Word w = parse(text, Mode::Group);
  return w.has_tau_inverse() ? w : w.as_monoid();
}

std::vector<Method> methods_for(const std::string& name) {
  if (name == "all") return {Method::Burau, Method::Recursion, Method::Pinch};
  if (name == "burau") return {Method::Burau};
  if (name == "recursion") return {Method::Recursion};
  if (name == "pinch") return {Method::Pinch};
  throw UsageError("unknown method '" + name + "'");
}

int cmd_eq(const Options& o, std::ostream& out, std::ostream& err) {
  const Word w1 = parse_any(o.words.at(0));
  const Word w2 = parse_any(o.words.at(1));
  std::vector<Method> methods = methods_for(o.method);
  const bool group_input = w1.mode() == Mode::Group || w2.mode() == Mode::Group;
  if (group_input) {
    if (o.method != "all" && o.method != "pinch")
      throw InputError("words with t1^-1 live in SG3; only the pinch method applies");
    methods = {Method::Pinch};
  }

  Json j;
  Json per_method = Json::object();
  Json trace = Json::array();
  std::optional<bool> verdict;
  bool consistent = true;
  for (Method m : methods) {
    Verdict v = decide(m, w1, w2);
    per_method[method_name(m)] = v.equal;
    for (const auto& line : v.trace) trace.push_back(std::string(method_name(m)) + ": " + line);
    if (verdict && *verdict != v.equal) consistent = false;
    if (!verdict) verdict = v.equal;
  }
  if (plain(o)) {
    out << (*verdict ? "equal" : "not equal") << '\n';
    for (const auto& [name, eq] : per_method.items())
      out << "  " << name << ": " << (eq.get<bool>() ? "equal" : "not equal") << '\n';
    for (const auto& line : trace) out << "  " << line.get<std::string>() << '\n';
  } else {
    j["equal"] = *verdict;
    j["methods"] = per_method;
    j["trace"] = trace;
    emit(out, j);
  }
  if (!consistent) {
    err << "error: equality methods disagree\n";
    return kInconsistent;
  }
  return *verdict ? kOk : kNegative;
}

int cmd_nf(const Options& o, std::ostream& out) {
  const NormalForm nf = normal_form(parse(o.words.at(0)));
  if (plain(o)) {
    out << render_normal_form(nf) << '\n';
  } else {
    Json j;
    j["delta"] = nf.delta_exp;
    j["tail"] = render_tail(nf.tail);
    emit(out, j);
  }
  return kOk;
}

int cmd_burau(const Options& o, std::ostream& out) {
  const Word w = parse_any(o.words.at(0));
  const BurauImage img = burau_eval(w);
  const PolyMatrix& m = img.matrix;
  if (plain(o)) {
    out << "[[" << m.m11.to_string() << ", " << m.m12.to_string() << "],\n [" << m.m21.to_string()
        << ", " << m.m22.to_string() << "]]\n"
        << "det = " << m.det().to_string() << "  e = " << img.exponent_sum
        << "  m = " << img.singular_count << '\n';
  } else {
    Json j;
    j["m11"] = m.m11.to_string();
    j["m12"] = m.m12.to_string();
    j["m21"] = m.m21.to_string();
    j["m22"] = m.m22.to_string();
    j["det"] = m.det().to_string();
    j["e"] = img.exponent_sum;
    j["m"] = img.singular_count;
    emit(out, j);
  }
  return kOk;
}

int cmd_member(const Options& o, std::ostream& out) {
  const auto wit = membership_h3(parse(o.words.at(0)));
  if (plain(o)) {
    if (wit)
      out << "member: s1^" << wit->k << " (s2 s1)^" << 3 * wit->l << '\n';
    else
      out << "not a member\n";
  } else {
    Json j;
    j["member"] = wit.has_value();
    if (wit) {
      j["k"] = wit->k;
      j["l"] = wit->l;
    }
    emit(out, j);
  }
  return wit ? kOk : kNegative;
}

int cmd_birman(const Options& o, std::ostream& out) {
  const Word w = parse(o.words.at(0));
  const GroupRingElt image = eta(w);
  const bool ok = check_diagram(w);
  if (plain(o)) {
    out << "eta =";
    bool first = true;
    for (const auto& [nf, c] : image.entries()) {
      out << (first ? " " : (c < 0 ? " - " : " + "));
      if (first && c < 0) out << '-';
      const auto mag = c < 0 ? -c : c;
      if (mag != 1) out << mag << '*';
      out << '[' << render_normal_form(nf) << ']';
      first = false;
    }
    if (first) out << " 0";
    out << "\ndiagram " << (ok ? "commutes" : "FAILS") << '\n';
  } else {
    Json j;
    Json terms = Json::array();
    for (const auto& [nf, c] : image.entries()) {
      Json t;
      t["coeff"] = c;
      t["braid"] = render_normal_form(nf);
      terms.push_back(t);
    }
    j["eta"] = terms;
    j["diagram_ok"] = ok;
    emit(out, j);
  }
  return ok ? kOk : kNegative;
}

int cmd_check_relations(const Options& o, std::ostream& out) {
  const RelationSet set = relation_set(o.set);
  const RelationReport report = verify_relations(set, methods_for(o.method));
  if (plain(o)) {
    out << report.set_name << ": " << report.checked << " checks, " << report.failures.size()
        << " failures\n";
    for (const auto& f : report.failures)
      out << "  FAIL " << f.label << " under " << method_name(f.method) << '\n';
  } else {
    Json j;
    j["set"] = report.set_name;
    j["checked"] = report.checked;
    Json failures = Json::array();
    for (const auto& f : report.failures) {
      Json fj;
      fj["relation"] = f.label;
      fj["method"] = method_name(f.method);
      fj["trace"] = f.trace;
      failures.push_back(fj);
    }
    j["failures"] = failures;
    j["passed"] = report.passed();
    emit(out, j);
  }
  return report.passed() ? kOk : kNegative;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  if (o.max_len > kMaxSampleLength)
    throw UsageError("--max-len must not exceed " + std::to_string(kMaxSampleLength));
  CrossCheckConfig cfg{o.seed, o.samples, o.max_len, o.birman};
  const CrossCheckReport report = o.serial ? cross_check_serial(cfg) : cross_check(cfg);
  if (plain(o)) {
    out << "seed " << cfg.seed << ", " << cfg.samples << " samples, max length " << cfg.max_len
        << ": " << report.equal_verdicts << " equal, " << report.unequal_verdicts << " unequal, "
        << report.failures.size() << " failures\n";
    for (std::size_t i = 0; i < report.failures.size(); ++i) {
      out << "  sample " << report.failures[i].index << ":\n";
      for (const auto& line : report.failure_traces[i]) out << "    " << line << '\n';
    }
  } else {
    Json j;
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["max_len"] = cfg.max_len;
    j["equal"] = report.equal_verdicts;
    j["unequal"] = report.unequal_verdicts;
    if (cfg.with_birman) j["birman_checked"] = report.birman_checked;
    j["disagreements"] = report.failures.size();
    Json failures = Json::array();
    for (std::size_t i = 0; i < report.failures.size(); ++i) {
      const auto& f = report.failures[i];
      Json fj;
      fj["index"] = f.index;
      fj["kind"] = pair_kind_name(f.pair.kind);
      fj["w1"] = render(f.pair.w1);
      fj["w2"] = render(f.pair.w2);
      if (f.error.empty()) {
        fj["burau"] = f.burau;
        fj["recursion"] = f.recursion;
        fj["pinch"] = f.pinch;
        if (f.eta_equal) fj["eta"] = *f.eta_equal;
      } else {
        fj["error"] = f.error;
      }
      fj["trace"] = report.failure_traces[i];
      failures.push_back(fj);
    }
    j["failures"] = failures;
    j["passed"] = report.passed();
    emit(out, j);
  }
  return report.passed() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Word problems in the singular braid monoid on three strands", "sb3"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", o.output, "json or plain")
      ->check(CLI::IsMember({"json", "plain"}))
      ->capture_default_str();

  auto* eq = app.add_subcommand("eq", "decide whether two words are equal");
  eq->add_option("--method", o.method, "burau, recursion, pinch or all")
      ->check(CLI::IsMember({"burau", "recursion", "pinch", "all"}))
      ->capture_default_str();
  eq->add_option("words", o.words, "two words")->required()->expected(2);

  auto* nf = app.add_subcommand("nf", "band-generator normal form of a braid word");
  nf->add_option("word", o.words)->required()->expected(1);

  auto* burau = app.add_subcommand("burau", "singular Burau matrix of a word");
  burau->add_option("word", o.words)->required()->expected(1);

  auto* member = app.add_subcommand("member", "membership in <s1, (s2 s1)^3>");
  member->add_option("word", o.words)->required()->expected(1);

  auto* birman = app.add_subcommand("birman", "Birman homomorphism and diagram check");
  birman->add_option("word", o.words)->required()->expected(1);

  auto* rel = app.add_subcommand("check-relations", "verify a presentation's relations");
  rel->add_option("--set", o.set, "classical or reduced")
      ->required()
      ->check(CLI::IsMember({"classical", "reduced"}));
  rel->add_option("--method", o.method, "burau, recursion, pinch or all")
      ->check(CLI::IsMember({"burau", "recursion", "pinch", "all"}))
      ->capture_default_str();

  auto* self = app.add_subcommand("selftest", "seeded three-way solver agreement run");
  self->add_option("--seed", o.seed)->capture_default_str();
  self->add_option("--samples", o.samples)->capture_default_str();
  self->add_option("--max-len", o.max_len)->capture_default_str();
  self->add_flag("--birman", o.birman, "also compare Birman images");
  self->add_flag("--serial", o.serial, "use the serial reference loop");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (eq->parsed()) return cmd_eq(o, out, err);
    if (nf->parsed()) return cmd_nf(o, out);
    if (burau->parsed()) return cmd_burau(o, out);
    if (member->parsed()) return cmd_member(o, out);
    if (birman->parsed()) return cmd_birman(o, out);
    if (rel->parsed()) return cmd_check_relations(o, out);
    if (self->parsed()) return cmd_selftest(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace sb3::cli
