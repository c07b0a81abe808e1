#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "diagroup/constructions.hpp"
#include "diagroup/export.hpp"
#include "diagroup/group_algorithms.hpp"
#include "diagroup/group_presentation.hpp"
#include "diagroup/hyperplane.hpp"
#include "diagroup/median.hpp"
#include "diagroup/script.hpp"
#include "diagroup/squier.hpp"

namespace diagroup::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kUnknown = 2;

struct Common {
  std::string presentation_file;
  std::string builtin;
  std::string base;
  std::string format = "text";
  std::size_t budget_words = 10'000;
  std::size_t budget_steps = 100'000;
  std::size_t budget_frontier = 10'000;
  std::uint64_t seed = 0;

  Budget budget() const {
    return {budget_words, budget_steps, budget_frontier};
  }

  json budget_json() const {
    return {{"words", budget_words},
            {"steps", budget_steps},
            {"frontier", budget_frontier}};
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_base = true) {
  cmd->add_option("--presentation", c.presentation_file,
                  "presentation file to read");
  cmd->add_option("--builtin", c.builtin,
                  "built-in or combinator expression (see 'construct')");
  if (with_base) {
    cmd->add_option("--base", c.base, "baseword (space-separated letters)");
  }
  cmd->add_option("--format", c.format, "text, json, or dot");
  cmd->add_option("--budget-words", c.budget_words, "max words enumerated");
  cmd->add_option("--budget-steps", c.budget_steps, "max rewrite steps");
  cmd->add_option("--budget-frontier", c.budget_frontier,
                  "max closure frontier");
  cmd->add_option("--seed", c.seed, "seed for randomised subcommands");
}

struct Loaded {
  PresentationPtr presentation;
  std::optional<Word> base;
  Letters truncation_boundary;
};

Loaded load(Common const& c) {
  Loaded out;
  if (!c.builtin.empty() && !c.presentation_file.empty()) {
    throw std::invalid_argument("give either --presentation or --builtin");
  }
  if (!c.builtin.empty()) {
    auto bp = parse_construction(c.builtin);
    out.presentation = bp.presentation;
    out.base = bp.baseword;
    out.truncation_boundary = bp.truncation_boundary;
  } else if (!c.presentation_file.empty()) {
    std::ifstream in(c.presentation_file);
    if (!in) {
      throw std::invalid_argument("cannot open '" + c.presentation_file +
                                  "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    out.presentation = parse_presentation(text.str());
  } else {
    throw std::invalid_argument("need --presentation or --builtin");
  }
  if (!c.base.empty()) {
    out.base = out.presentation->parse_word(c.base);
  }
  return out;
}

Word required_base(Loaded const& l) {
  if (!l.base) {
    throw std::invalid_argument("this subcommand needs --base");
  }
  return *l.base;
}

void warn_truncation(Loaded const& l, Diagram const& d, std::ostream& err) {
  if (l.truncation_boundary.empty()) {
    return;
  }
  for (auto const& w : d.replay_words()) {
    for (Letter letter : w) {
      if (std::find(l.truncation_boundary.begin(),
                    l.truncation_boundary.end(),
                    letter) != l.truncation_boundary.end()) {
        err << "warning: diagram touches the truncation boundary letter '"
            << l.presentation->alphabet().symbol(letter)
            << "'; results may depend on the truncation index\n";
        return;
      }
    }
  }
}

std::string tri(EqualityResult r) {
  switch (r) {
    case EqualityResult::Equal:
      return "equal";
    case EqualityResult::Distinct:
      return "distinct";
    default:
      return "unknown";
  }
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact computation in diagram groups of semigroup "
               "presentations"};
  app.require_subcommand(1);

  Common c;
  int exit_code = kOk;

  auto* validate = app.add_subcommand("validate", "check a presentation");
  add_common(validate, c);
  validate->callback([&] {
    auto l = load(c);
    out << "letters: " << l.presentation->alphabet().size()
        << " relations: " << l.presentation->num_relations() << "\n";
    if (l.base) {
      out << "base: " << l.presentation->word_to_string(*l.base) << "\n";
    }
  });

  auto* complete = app.add_subcommand(
      "complete-check", "termination and local confluence");
  add_common(complete, c);
  complete->callback([&] {
    auto l = load(c);
    auto report = check_completeness(*l.presentation, c.budget());
    auto name = [](Certainty cert) {
      return cert == Certainty::Proven
                 ? "proven"
                 : cert == Certainty::Disproven ? "disproven" : "unknown";
    };
    if (c.format == "json") {
      json j{{"schema", "decision/1"},
             {"terminating", name(report.terminating)},
             {"locally_confluent", name(report.locally_confluent)},
             {"complete", report.complete()},
             {"budget", c.budget_json()}};
      if (!report.nontermination_witness.empty()) {
        j["nontermination_witness"] = json::array();
        for (auto const& w : report.nontermination_witness) {
          j["nontermination_witness"].push_back(
              l.presentation->word_to_string(w));
        }
      }
      out << j.dump(2) << "\n";
    } else {
      out << "terminating: " << name(report.terminating) << "\n";
      out << "locally confluent: " << name(report.locally_confluent) << "\n";
      out << "complete: " << (report.complete() ? "yes" : "no") << "\n";
    }
    if (report.terminating == Certainty::Unknown ||
        report.locally_confluent == Certainty::Unknown) {
      exit_code = kUnknown;
    }
  });

  std::string nf_word;
  auto* nf_cmd = app.add_subcommand("nf", "canonical normal form derivation");
  add_common(nf_cmd, c);
  nf_cmd->add_option("--word", nf_word, "word to reduce")->required();
  nf_cmd->callback([&] {
    auto l = load(c);
    NormalFormer nf(l.presentation, c.budget());
    auto trace = nf.trace(l.presentation->parse_word(nf_word));
    if (c.format == "json") {
      json steps = json::array();
      for (auto const& w : trace) {
        steps.push_back(l.presentation->word_to_string(w));
      }
      out << json{{"schema", "nf/1"},
                  {"trace", steps},
                  {"budget", c.budget_json()}}
                 .dump(2)
          << "\n";
    } else {
      out << l.presentation->word_to_string(trace[0]) << "\n";
      for (std::size_t i = 1; i < trace.size(); ++i) {
        out << "-> " << l.presentation->word_to_string(trace[i]) << "\n";
      }
    }
  });

  std::string construct_expr;
  auto* construct = app.add_subcommand(
      "construct", "emit a named or combined presentation");
  construct->add_option("expr", construct_expr,
                        "e.g. thompson, planar_braid(3), bullet(z, z)")
      ->required();
  construct->callback([&] {
    out << to_file_format(parse_construction(construct_expr));
  });

  auto* squier = app.add_subcommand("squier",
                                    "enumerate a Squier complex component");
  add_common(squier, c);
  squier->callback([&] {
    auto l = load(c);
    auto component =
        enumerate_class_complex(required_base(l), l.presentation, c.budget());
    if (c.format == "dot") {
      out << to_dot(component);
    } else if (c.format == "json") {
      json j = to_json(component);
      j["budget"] = c.budget_json();
      out << j.dump(2) << "\n";
    } else {
      out << "vertices: " << component.words.size()
          << " edges: " << component.edges.size()
          << " squares: " << component.squares.size()
          << " complete: " << (component.complete ? "yes" : "no") << "\n";
      if (component.complete) {
        out << "first homology rank: " << first_homology_rank(component)
            << "\n";
      }
    }
    if (!component.complete) {
      exit_code = kUnknown;
    }
  });

  std::string ball_center;
  std::size_t ball_radius = 2;
  auto* ball = app.add_subcommand("ball", "median-graph ball around a "
                                          "diagram");
  add_common(ball, c);
  ball->add_option("--center", ball_center,
                   "diagram script (defaults to the identity on --base)");
  ball->add_option("--radius", ball_radius, "ball radius");
  ball->callback([&] {
    auto l = load(c);
    Diagram center =
        ball_center.empty()
            ? Diagram::identity(l.presentation, required_base(l))
            : parse_diagram_script(ball_center, l.presentation);
    auto b = median_ball(center, ball_radius, c.budget());
    if (c.format == "dot") {
      out << to_dot(b);
    } else if (c.format == "json") {
      json j = to_json(b);
      j["budget"] = c.budget_json();
      out << j.dump(2) << "\n";
    } else {
      out << "vertices: " << b.vertices.size()
          << " edges: " << b.edges.size()
          << " complete: " << (b.complete ? "yes" : "no") << "\n";
    }
    if (!b.complete) {
      exit_code = kUnknown;
    }
  });

  std::string script1, script2;
  auto* wp = app.add_subcommand("wp", "word problem for a diagram script");
  add_common(wp, c);
  wp->add_option("script", script1, "diagram script")->required();
  wp->callback([&] {
    auto l = load(c);
    Diagram d = parse_diagram_script(script1, l.presentation);
    warn_truncation(l, d, err);
    if (!d.spherical()) {
      throw std::invalid_argument("wp: the diagram is not spherical");
    }
    if (c.format == "json") {
      out << json{{"schema", "decision/1"},
                  {"trivial", d.is_identity()},
                  {"cells", d.num_cells()},
                  {"budget", c.budget_json()}}
                 .dump(2)
          << "\n";
    } else {
      out << (d.is_identity() ? "trivial" : "nontrivial") << " ("
          << d.num_cells() << " cells)\n";
    }
  });

  auto* conj = app.add_subcommand("conj", "conjugacy of two diagram scripts");
  add_common(conj, c);
  conj->add_option("first", script1, "diagram script")->required();
  conj->add_option("second", script2, "diagram script")->required();
  conj->callback([&] {
    auto l = load(c);
    Diagram a = parse_diagram_script(script1, l.presentation);
    Diagram b = parse_diagram_script(script2, l.presentation);
    auto result = conjugate(a, b, c.budget());
    std::string verdict =
        result.outcome == ConjugacyOutcome::Conjugate
            ? "conjugate"
            : result.outcome == ConjugacyOutcome::NotConjugate
                  ? "not-conjugate"
                  : "unknown";
    if (c.format == "json") {
      json j{{"schema", "decision/1"},
             {"outcome", verdict},
             {"budget", c.budget_json()}};
      if (result.witness) {
        j["witness"] = to_script(*result.witness);
      }
      out << j.dump(2) << "\n";
    } else {
      out << verdict << "\n";
      if (result.witness) {
        out << "witness: " << to_script(*result.witness) << "\n";
      }
    }
    if (result.outcome == ConjugacyOutcome::Unknown) {
      exit_code = kUnknown;
    }
  });

  auto* comm = app.add_subcommand(
      "comm", "commutator-subgroup membership via the abelianised cell map");
  add_common(comm, c);
  comm->add_option("script", script1, "diagram script")->required();
  comm->callback([&] {
    auto l = load(c);
    Diagram d = parse_diagram_script(script1, l.presentation);
    warn_truncation(l, d, err);
    ClassResolver resolver(l.presentation, c.budget());
    auto v = alpha(d, resolver);
    auto member = in_commutator_subgroup(d, resolver);
    std::string verdict = member == Membership::Yes
                              ? "yes"
                              : member == Membership::No ? "no" : "unknown";
    if (c.format == "json") {
      json entries = json::array();
      for (auto const& [key, value] : v.entries) {
        auto const& [left, rel, right] = key;
        entries.push_back(
            {{"left", l.presentation->word_to_string(left)},
             {"relation", rel},
             {"right", l.presentation->word_to_string(right)},
             {"coefficient", value}});
      }
      out << json{{"schema", "decision/1"},
                  {"in_commutator_subgroup", verdict},
                  {"alpha", entries},
                  {"budget", c.budget_json()}}
                 .dump(2)
          << "\n";
    } else {
      out << "in commutator subgroup: " << verdict << "\n";
      for (auto const& [key, value] : v.entries) {
        auto const& [left, rel, right] = key;
        out << "  " << value << " * ("
            << (left.empty() ? "1" : l.presentation->word_to_string(left))
            << ", r" << rel << ", "
            << (right.empty() ? "1" : l.presentation->word_to_string(right))
            << ")\n";
      }
    }
    if (member == Membership::Unknown) {
      exit_code = kUnknown;
    }
  });

  auto* roots = app.add_subcommand("roots", "proper roots of a diagram");
  add_common(roots, c);
  roots->add_option("script", script1, "diagram script")->required();
  roots->callback([&] {
    auto l = load(c);
    Diagram d = parse_diagram_script(script1, l.presentation);
    bool exhausted = false;
    auto found = find_roots(d, c.budget(), &exhausted);
    if (c.format == "json") {
      json list = json::array();
      for (auto const& r : found) {
        list.push_back({{"exponent", r.exponent},
                        {"root", to_script(r.root)}});
      }
      out << json{{"schema", "decision/1"},
                  {"roots", list},
                  {"exhausted", exhausted},
                  {"budget", c.budget_json()}}
                 .dump(2)
          << "\n";
    } else {
      if (found.empty()) {
        out << "no proper roots found\n";
      }
      for (auto const& r : found) {
        out << "exponent " << r.exponent << ": " << to_script(r.root) << "\n";
      }
    }
    if (exhausted) {
      exit_code = kUnknown;
    }
  });

  auto* psf = app.add_subcommand("psf", "conjugated power-sum form");
  add_common(psf, c);
  psf->add_option("script", script1, "diagram script")->required();
  psf->callback([&] {
    auto l = load(c);
    Diagram d = parse_diagram_script(script1, l.presentation);
    auto form = power_sum_form(d, c.budget());
    if (c.format == "json") {
      json factors = json::array();
      for (auto const& f : form.factors) {
        factors.push_back({{"base", to_script(f.base)},
                           {"exponent", f.exponent}});
      }
      out << json{{"schema", "decision/1"},
                  {"conjugator", to_script(form.conjugator)},
                  {"factors", factors},
                  {"budget", c.budget_json()}}
                 .dump(2)
          << "\n";
    } else {
      out << "conjugator: " << to_script(form.conjugator) << "\n";
      for (auto const& f : form.factors) {
        out << "factor ^" << f.exponent << ": " << to_script(f.base) << "\n";
      }
    }
  });

  bool present_simplify = false;
  auto* present = app.add_subcommand(
      "present", "presentation of the diagram group (complete systems)");
  add_common(present, c);
  present->add_flag("--simplify", present_simplify,
                    "apply second-type generator eliminations");
  present->callback([&] {
    auto l = load(c);
    auto gp = generate_presentation(l.presentation, required_base(l),
                                    c.budget(), present_simplify);
    if (c.format == "json") {
      json j = to_json(gp);
      j["budget"] = c.budget_json();
      out << j.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < gp.generators.size(); ++i) {
        out << generator_line(gp, i) << "\n";
      }
      for (std::size_t i = 0; i < gp.relators.size(); ++i) {
        out << relator_line(gp, i) << "\n";
      }
      if (gp.truncated) {
        out << "# truncated at budget\n";
      }
    }
    if (gp.truncated) {
      exit_code = kUnknown;
    }
  });

  auto* conspicial = app.add_subcommand(
      "conspicial", "conspiciality of the Squier cube complex");
  add_common(conspicial, c);
  conspicial->callback([&] {
    auto l = load(c);
    ClassResolver resolver(l.presentation, c.budget());
    Word base = required_base(l);
    auto report = check_conspicial(base, resolver);
    std::string verdict =
        report.value == Conspiciality::Conspicial
            ? "conspicial"
            : report.value == Conspiciality::NotConspicial ? "not-conspicial"
                                                           : "unknown";
    if (c.format == "json") {
      json j{{"schema", "decision/1"},
             {"outcome", verdict},
             {"reason", report.reason},
             {"budget", c.budget_json()}};
      if (report.absorbing_witness) {
        auto const& [a, b, pw] = *report.absorbing_witness;
        j["witness"] = {{"a", l.presentation->word_to_string(a)},
                        {"b", l.presentation->word_to_string(b)},
                        {"p", l.presentation->word_to_string(pw)}};
      }
      out << j.dump(2) << "\n";
    } else {
      out << verdict;
      if (!report.reason.empty()) {
        out << " (" << report.reason << ")";
      }
      out << "\n";
      if (report.absorbing_witness) {
        auto const& [a, b, pw] = *report.absorbing_witness;
        out << "witness: a = " << l.presentation->word_to_string(a)
            << ", b = " << l.presentation->word_to_string(b)
            << ", p = " << l.presentation->word_to_string(pw) << "\n";
      }
    }
    if (report.value == Conspiciality::Unknown) {
      exit_code = kUnknown;
    }
  });

  std::vector<std::string> gen_scripts;
  std::string test_script;
  auto* closure = app.add_subcommand(
      "closure", "closed-subgroup membership through foldings");
  add_common(closure, c);
  closure->add_option("--gens", gen_scripts, "generator diagram scripts")
      ->required();
  closure->add_option("--test", test_script, "diagram script to test");
  closure->callback([&] {
    auto l = load(c);
    std::vector<Diagram> gens;
    for (auto const& s : gen_scripts) {
      gens.push_back(parse_diagram_script(s, l.presentation));
    }
    Word base = l.base ? *l.base
                       : (gens.empty() ? throw std::invalid_argument(
                                             "closure: need --base or gens")
                                       : gens.front().top());
    auto folded = fold(wedge_of_generators(gens, l.presentation, base));
    if (c.format == "dot") {
      out << to_dot(folded);
      return;
    }
    if (test_script.empty()) {
      out << "folded complex: " << folded.edge_label.size() << " edges, "
          << folded.faces.size() << " faces\n";
      return;
    }
    Diagram d = parse_diagram_script(test_script, l.presentation);
    bool member = accepts(folded, d);
    if (c.format == "json") {
      out << json{{"schema", "decision/1"},
                  {"accepted", member},
                  {"budget", c.budget_json()}}
                 .dump(2)
          << "\n";
    } else {
      out << (member ? "accepted" : "rejected") << "\n";
    }
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (BudgetExceeded const& e) {
    err << "unknown: " << e.what() << "\n";
    return kUnknown;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return exit_code;
}

}  // namespace diagroup::cli
