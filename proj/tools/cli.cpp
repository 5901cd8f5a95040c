#include "cli.hpp"

#include "sturmian/atlas.hpp"
#include "sturmian/conjugate.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/kneading.hpp"
#include "sturmian/mechanical.hpp"
#include "sturmian/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sturmian::cli {

namespace {

using json = nlohmann::ordered_json;

// Payload as a JSON object plus the equivalent "key: value" text lines.
struct Report {
  json payload = json::object();
  std::vector<std::pair<std::string, std::string>> lines;

  void put(const std::string& key, const std::string& value) {
    payload[key] = value;
    lines.emplace_back(key, value);
  }
  void put(const std::string& key, std::size_t value) {
    payload[key] = value;
    lines.emplace_back(key, std::to_string(value));
  }
  void put(const std::string& key, const std::vector<std::string>& values) {
    payload[key] = values;
    std::string text;
    for (const auto& v : values) text += (text.empty() ? "" : " ") + v;
    lines.emplace_back(key, text);
  }
};

struct SpecArgs {
  std::string P_over_Q;
  std::string a_over_b;
  std::size_t hinge = 0;
  std::string convention;
};

void add_spec_options(CLI::App* cmd, SpecArgs& args) {
  cmd->add_option("P/Q", args.P_over_Q, "limb fraction P/Q")->required();
  cmd->add_option("a/b", args.a_over_b, "second slope a/b")->required();
  cmd->add_option("--hinge", args.hinge, "hinge index n")->required();
  cmd->add_option("--convention", args.convention, "01 or 10")->required()->check(CLI::IsMember({"01", "10"}));
}

BrokenLineSpec parse_spec(const SpecArgs& args) {
  auto [a, b] = parse_ratio(args.a_over_b);
  return validate_spec(Fraction::parse(args.P_over_Q), a, b, args.hinge, parse_convention(args.convention));
}

PeriodicAngle parse_angle(const std::string& text) {
  if (text.rfind("0.", 0) == 0) return PeriodicAngle::parse(text);
  return fraction_to_expansion(Fraction::parse(text));
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::CheckFailed, "check failed: " + what);
}

std::string block_name(std::size_t n, std::size_t m) {
  return "B_{" + std::to_string(n) + "," + std::to_string(m) + "}";
}

void put_spec(Report& r, const BrokenLineSpec& spec) {
  r.put("P/Q", spec.P_over_Q().str());
  r.put("a/b", spec.a_over_b.str());
  r.put("hinge", spec.hinge());
  r.put("convention", std::string(to_string(spec.convention())));
}

Report cmd_line(const std::string& slope, const std::string& conv, bool check) {
  const Fraction pq = Fraction::parse(slope);
  const Convention c = parse_convention(conv);
  const BinaryWord kappa = cutting_sequence(pq, c);
  const BinaryWord w = m_word(pq, c);
  Report r;
  r.put("slope", pq.str());
  r.put("convention", conv);
  r.put("cutting_sequence", kappa.bits());
  r.put("m_word", w.bits());
  r.put("angle", word_to_fraction(w).str());
  r.put("expansion", PeriodicAngle(w).str());
  if (check) {
    expect(substitute_T(kappa) == w, "cutting sequence reduces to the M-word");
    expect(minimal_period(w) == to_size(pq.den()), "M-word has minimal period q");
    expect(is_sturmian(w), "M-word is Sturmian");
    r.put("check", "ok");
  }
  return r;
}

Report cmd_bulb(const std::string& slope, bool check) {
  const Fraction pq = Fraction::parse(slope);
  const auto [lo, hi] = characteristic_pair_of_bulb(pq);
  Report r;
  r.put("bulb", pq.str());
  r.put("theta_01", lo.str());
  r.put("word_01", m_word(pq, Convention::ZeroOne).bits());
  r.put("theta_10", hi.str());
  r.put("word_10", m_word(pq, Convention::OneZero).bits());
  if (check) {
    const std::size_t q = to_size(pq.den());
    expect(lo < hi, "theta_01 < theta_10");
    expect(fraction_to_expansion(lo).period().size() == q, "theta_01 has period q");
    expect(fraction_to_expansion(hi).period().size() == q, "theta_10 has period q");
    expect(kneading_of_angle(lo) == kneading_of_angle(hi), "the pair shares its kneading sequence");
    r.put("check", "ok");
  }
  return r;
}

Report cmd_broken(const SpecArgs& args, bool all, bool check) {
  const BrokenLineSpec spec = parse_spec(args);
  const PeriodicAngle theta = broken_line_angle(spec);
  Report r;
  put_spec(r, spec);
  r.put("angle", theta.value().str());
  r.put("period_word", theta.period().bits());
  if (all) {
    const PeriodicAngle conj = conjugate_angle(spec);
    r.put("conjugate", conj.value().str());
    r.put("conjugate_word", conj.period().bits());
    const BlockDecomposition blocks = block_decomposition(spec);
    std::vector<std::string> names;
    for (std::size_t m : blocks.exponents) names.push_back(block_name(spec.hinge(), m));
    r.put("blocks", names);
    r.put("kneading", kneading_of_spec(spec).symbols());
    const SpokeLocation loc = locate(spec);
    r.put("spoke", loc.spoke_index);
    r.put("sublimb_angle", loc.sublimb_internal_angle.str());
    r.put("brackets", std::vector<std::string>{loc.bracketing_rays.first.value().str(),
                                               loc.bracketing_rays.second.value().str()});
    r.put("bracket_rays", std::vector<std::string>{loc.bracketing_rays.first.str(), loc.bracketing_rays.second.str()});
    r.put("junction_preperiod", loc.junction_preperiod);
  }
  if (check) {
    expect(is_sturmian(theta.period()), "period word is Sturmian");
    expect(theta.period().size() == spec.period(), "minimal period equals b");
    expect(kneading_of_spec(spec) == kneading_of_angle(theta.value()), "structural kneading equals direct kneading");
    expect(invert_kneading(kneading_of_spec(spec), spec.convention()).spec == spec, "kneading inverts to the same broken line");
    expect(build_chain(spec).closed_form == conjugate_angle(spec).value(), "closed form equals the conjugate");
    expect(lower_kneading_period(theta.value()) == spec.period(), "lower kneading has period b");
    locate(spec);
    r.put("check", "ok");
  }
  return r;
}

Report cmd_conjugate(const SpecArgs& args, bool verify, bool check) {
  const BrokenLineSpec spec = parse_spec(args);
  const PeriodicAngle theta = broken_line_angle(spec);
  const PeriodicAngle conj = conjugate_angle(spec);
  Report r;
  put_spec(r, spec);
  r.put("angle", theta.value().str());
  r.put("conjugate", conj.value().str());
  r.put("conjugate_word", conj.period().bits());
  if (verify || check) {
    const ConjugateChain chain = build_chain(spec);
    expect(chain.closed_form == conj.value(), "closed form equals the primed blocks");
    r.put("closed_form", chain.closed_form.str());
    r.put("unlink_certificates", chain.unlink_certificates.size());
    if (verify && spec.period() <= 16) {
      std::string partner = "none";
      for (const AnglePair& p : lavaurs_pairs(spec.period())) {
        if (p.lower == theta.value()) partner = p.upper.str();
        if (p.upper == theta.value()) partner = p.lower.str();
      }
      expect(partner == conj.value().str(), "pairing partner equals the conjugate");
      r.put("pairing_partner", partner);
    }
    r.put(verify ? "verified" : "check", "ok");
  }
  return r;
}

Report cmd_kneading(const SpecArgs& args, bool check) {
  const BrokenLineSpec spec = parse_spec(args);
  const KneadingSequence k = kneading_of_spec(spec);
  Report r;
  put_spec(r, spec);
  r.put("angle", broken_line_angle(spec).value().str());
  r.put("kneading", k.symbols());
  if (check) {
    expect(k == kneading_of_angle(broken_line_angle(spec).value()), "structural kneading equals direct kneading");
    r.put("check", "ok");
  }
  return r;
}

Report cmd_kneading_of_angle(const std::string& text, bool check) {
  const PeriodicAngle angle = parse_angle(text);
  const Fraction theta = angle.value();
  const KneadingSequence k = kneading_of_angle(theta);
  Report r;
  r.put("angle", theta.str());
  r.put("kneading", k.symbols());
  const std::string below = one_sided_kneading(theta, Side::Below);
  const std::string above = one_sided_kneading(theta, Side::Above);
  r.put("kneading_below", below);
  r.put("kneading_above", above);
  r.put("lower_kneading_period", minimal_period(below));
  if (check) {
    expect(k.size() == angle.period().size(), "kneading length equals the period");
    expect(below.substr(0, below.size() - 1) == k.symbols().substr(0, k.size() - 1) &&
               above.substr(0, above.size() - 1) == k.symbols().substr(0, k.size() - 1),
           "one-sided limits agree with K before the star");
    r.put("check", "ok");
  }
  return r;
}

Report cmd_invert(const std::string& text, const std::string& conv, bool check) {
  const InvertedKneading inv = invert_kneading(text, parse_convention(conv));
  Report r;
  put_spec(r, inv.spec);
  r.put("angle", inv.angle.value().str());
  r.put("m_sequence", inv.angle.str());
  if (check) {
    expect(kneading_of_spec(inv.spec).symbols() == text, "spec reproduces the kneading sequence");
    expect(kneading_of_angle(inv.angle.value()).symbols() == text, "angle reproduces the kneading sequence");
    r.put("check", "ok");
  }
  return r;
}

Report cmd_enumerate(std::size_t b, bool census, bool check) {
  const Enumeration e = enumerate_specs(b);
  Report r;
  r.put("period", b);
  r.put("count", e.entries.size());
  json entries = json::array();
  for (const auto& entry : e.entries) {
    const BrokenLineSpec& s = entry.spec;
    entries.push_back({{"angle", entry.angle.str()},
                       {"P/Q", s.P_over_Q().str()},
                       {"a/b", s.a_over_b.str()},
                       {"hinge", s.hinge()},
                       {"convention", std::string(to_string(s.convention()))}});
    r.lines.emplace_back("entry", entry.angle.str() + " " + describe(s));
    if (check) {
      const PeriodicAngle theta = broken_line_angle(s);
      expect(is_sturmian(theta.period()) && theta.period().size() == b, "entry is Sturmian of period b");
    }
  }
  r.payload["entries"] = entries;
  r.put("collisions", e.collisions.size());
  for (const auto& c : e.collisions) {
    std::string text = c.angle.str();
    for (const auto& s : c.specs) text += " | " + describe(s);
    r.lines.emplace_back("collision", text);
  }
  if (census) {
    const Census c = sturmian_census(b);
    r.payload["census"] = {{"b", b},
                           {"formula", c.formula},
                           {"constructed", c.constructed},
                           {"brute", c.brute},
                           {"agrees", c.agrees()}};
    std::vector<std::string> missing;
    for (const auto& x : c.missing) missing.push_back(x.str());
    r.payload["census"]["missing"] = missing;
    r.lines.emplace_back("census", "b formula counts");
    r.lines.emplace_back("census", std::to_string(b) + " " + std::to_string(c.formula) + " constructed=" +
                                       std::to_string(c.constructed) + ",brute=" + std::to_string(c.brute));
    if (!missing.empty()) {
      std::string text;
      for (const auto& m : missing) text += (text.empty() ? "" : " ") + m;
      r.lines.emplace_back("census_missing", text);
    }
  }
  if (check) r.put("check", "ok");
  return r;
}

Report cmd_tune(const std::string& angle_text, const std::string& bulb_text, bool check) {
  const Fraction bulb = Fraction::parse(bulb_text);
  std::string u;
  std::optional<BinaryWord> w;
  if (angle_text.rfind("0.", 0) == 0) {
    auto literal = PeriodicAngle::parse_literal(angle_text);
    u = literal.first;
    w = literal.second;
  } else {
    const PeriodicAngle a = fraction_to_expansion(Fraction::parse(angle_text));
    u = a.preperiod();
    w = a.period();
  }
  const PeriodicAngle tuned = tune(u, *w, bulb);
  Report r;
  r.put("angle", PeriodicAngle(u, *w).str());
  r.put("bulb", bulb.str());
  r.put("tuned", tuned.str());
  r.put("tuned_value", tuned.value().str());
  if (check) {
    const std::size_t q = to_size(bulb.den());
    expect(tuned.period().size() == PeriodicAngle(u, *w).period().size() * q, "tuned period length is q times");
    r.put("check", "ok");
  }
  return r;
}

void print(const Report& r, const std::string& command, bool as_json, std::ostream& out) {
  if (as_json) {
    json doc = {{"status", "ok"}, {"command", command}, {"payload", r.payload}};
    out << doc.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : r.lines) out << k << ": " << v << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact periodic Sturmian angles from broken lines"};
  app.name("sturmian");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false, check = false;
  app.add_flag("--json", as_json, "print one JSON document");
  app.add_flag("--check", check, "re-run internal oracles on the results");

  std::string slope, conv, text, bulb_text;
  SpecArgs spec_args;
  bool all = false, verify = false, census = false;
  std::size_t period = 0;

  auto* line = app.add_subcommand("line", "cutting sequence, M-word and angle of a line");
  line->add_option("p/q", slope)->required();
  line->add_option("--convention", conv)->required()->check(CLI::IsMember({"01", "10"}));

  auto* bulb = app.add_subcommand("bulb", "characteristic angles of a bulb");
  bulb->add_option("p/q", slope)->required();

  auto* broken = app.add_subcommand("broken", "broken-line angle");
  add_spec_options(broken, spec_args);
  broken->add_flag("--all", all, "also conjugate, blocks, kneading and location");

  auto* conjugate = app.add_subcommand("conjugate", "conjugate angle");
  add_spec_options(conjugate, spec_args);
  conjugate->add_flag("--verify", verify, "check against the chain and the angle pairing");

  auto* kneading = app.add_subcommand("kneading", "kneading sequence of a broken line");
  add_spec_options(kneading, spec_args);

  auto* kneading_angle = app.add_subcommand("kneading-of-angle", "kneading sequence of a periodic angle");
  kneading_angle->add_option("angle", text)->required();

  auto* invert = app.add_subcommand("invert-kneading", "recover the broken line from a kneading sequence");
  invert->add_option("kneading", text)->required();
  invert->add_option("--convention", conv)->required()->check(CLI::IsMember({"01", "10"}));

  auto* enumerate = app.add_subcommand("enumerate", "all broken-line angles of one period");
  enumerate->add_option("--period", period)->required();
  enumerate->add_flag("--census", census, "compare counts with brute force");

  auto* tune_cmd = app.add_subcommand("tune", "tune an angle by a bulb");
  tune_cmd->add_option("angle", text)->required();
  tune_cmd->add_option("p/q", bulb_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  try {
    Report r;
    if (cmd == line) r = cmd_line(slope, conv, check);
    else if (cmd == bulb) r = cmd_bulb(slope, check);
    else if (cmd == broken) r = cmd_broken(spec_args, all, check);
    else if (cmd == conjugate) r = cmd_conjugate(spec_args, verify, check);
    else if (cmd == kneading) r = cmd_kneading(spec_args, check);
    else if (cmd == kneading_angle) r = cmd_kneading_of_angle(text, check);
    else if (cmd == invert) r = cmd_invert(text, conv, check);
    else if (cmd == enumerate) r = cmd_enumerate(period, census, check);
    else r = cmd_tune(text, bulb_text, check);
    print(r, name, as_json, out);
    return 0;
  } catch (const Error& e) {
    const bool usage = e.kind() == ErrorKind::ParseError;
    if (as_json) {
      json doc = {{"status", "error"},
                  {"command", name},
                  {"error_kind", std::string(kind_name(e.kind()))},
                  {"message", e.what()}};
      if (!e.detail().empty()) doc["detail"] = e.detail();
      out << doc.dump(2) << "\n";
    } else {
      err << "error: " << kind_name(e.kind()) << ": " << e.what() << "\n";
    }
    return usage ? 2 : 1;
  }
}

}  // namespace sturmian::cli
