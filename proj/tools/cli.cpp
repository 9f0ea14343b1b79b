#include "cli.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdc/errors.hpp"
#include "pdc/pqseq.hpp"
#include "pdc/primitivity.hpp"
#include "pdc/replacement.hpp"
#include "pdc/structure.hpp"
#include "pdc/words.hpp"

namespace pdc::cli {

namespace {

void require_not_dot(const std::string& format) {
  if (format == "dot") {
    throw ValidationError("dot output is only available for the witness command");
  }
}

int run_sequence(int p, int q, int threshold, const std::string& format, std::ostream& out) {
  require_not_dot(format);
  const PqSequence seq = make_sequence(make_params(p, q), threshold);
  out << (format == "structured" ? sequence_to_record(seq) : sequence_to_text(seq));
  return 0;
}

int run_primitive(const std::string& text, bool trace, const std::string& format,
                  std::ostream& out) {
  require_not_dot(format);
  const Word w = parse_word(text);
  const WhiteheadTrace tr = whitehead_trace(w);
  if (format == "structured") {
    out << trace_to_record(tr);
  } else if (trace) {
    out << trace_to_text(tr);
  } else {
    out << (tr.verdict == Verdict::Primitive ? "primitive" : "not primitive") << '\n';
  }
  return tr.verdict == Verdict::Primitive ? 0 : 1;
}

int run_canonical(int m, int n, const std::string& format, std::ostream& out) {
  require_not_dot(format);
  const Word w = canonical_primitive(m, n);
  if (format == "structured") {
    nlohmann::ordered_json j;
    j["schema"] = "pdc.canonical.v1";
    j["m"] = m;
    j["n"] = n;
    j["word"] = to_string(w);
    out << j.dump(2) << '\n';
  } else {
    out << to_string(w) << '\n';
  }
  return 0;
}

int run_classify(int p, int q, const std::string& format, std::ostream& out) {
  require_not_dot(format);
  const StructureReport rep = report(make_params(p, q));
  if (format == "structured") {
    nlohmann::ordered_json j;
    j["schema"] = "pdc.classify.v1";
    j["p"] = rep.params.p;
    j["q"] = rep.params.q;
    j["q_norm"] = rep.params.q_norm;
    j["q_prime"] = rep.params.q_prime;
    j["contractible"] = rep.contractible;
    j["case_id"] = rep.case_id;
    out << j.dump(2) << '\n';
  } else {
    out << "L(" << rep.params.p << "," << rep.params.q << "): "
        << (rep.contractible ? "contractible" : "not contractible") << " (case " << rep.case_id
        << ")\n";
  }
  return rep.contractible ? 0 : 1;
}

int run_report(int p, int q, const std::string& format, std::ostream& out) {
  require_not_dot(format);
  const StructureReport rep = report(make_params(p, q));
  out << (format == "structured" ? report_to_record(rep) : report_to_text(rep));
  return 0;
}

std::string vertex_name(int id) { return "D" + std::to_string(id); }

std::string render_strip_text(const StripGraph& strip) {
  std::ostringstream out;
  out << "witness strip for L(" << strip.params.p << "," << strip.params.q
      << ")  r=" << strip.remainder << "  s=" << strip.s << "  t=" << strip.t << "  cf=[";
  for (std::size_t i = 0; i < strip.cf.size(); ++i) {
    if (i > 0) out << ",";
    out << strip.cf[i];
  }
  out << "]\n";
  std::size_t name_width = 0;
  std::size_t label_width = 0;
  std::size_t form_width = 0;
  for (const StripVertex& v : strip.vertices) {
    name_width = std::max(name_width, vertex_name(v.id).size());
    label_width = std::max(label_width, to_string(v.label).size());
    form_width = std::max(form_width, to_string(v.form).size());
  }
  for (const StripVertex& v : strip.vertices) {
    const std::string name = vertex_name(v.id);
    const std::string label = to_string(v.label);
    const std::string form = to_string(v.form);
    out << "  " << name << std::string(name_width - name.size() + 2, ' ') << label
        << std::string(label_width - label.size() + 2, ' ') << form
        << std::string(form_width - form.size() + 2, ' ')
        << (v.primitive ? "primitive" : "not primitive") << '\n';
  }
  out << "edges       ";
  for (std::size_t i = 0; i < strip.edges.size(); ++i) {
    if (i > 0) out << ", ";
    out << vertex_name(strip.edges[i].first) << "--" << vertex_name(strip.edges[i].second);
  }
  out << '\n';
  out << "triangles   ";
  for (std::size_t i = 0; i < strip.triangles.size(); ++i) {
    if (i > 0) out << ", ";
    out << "(" << vertex_name(strip.triangles[i][0]) << "," << vertex_name(strip.triangles[i][1])
        << "," << vertex_name(strip.triangles[i][2]) << ")";
  }
  out << '\n';
  out << "separation  " << (separation_check(strip) ? "true" : "false") << '\n';
  return out.str();
}

int run_witness(int p, int q, const std::string& format, std::ostream& out) {
  const StripGraph strip = witness(make_params(p, q));
  if (format == "dot") {
    out << strip_to_dot(strip);
  } else if (format == "structured") {
    out << strip_to_record(strip);
  } else {
    out << render_strip_text(strip);
  }
  return 0;
}

int run_four_primitives(int p, int q, const std::string& format, std::ostream& out) {
  require_not_dot(format);
  const LensParams params = make_params(p, q);
  const std::set<int> indices = four_primitive_indices(params);
  if (format == "structured") {
    nlohmann::ordered_json j;
    j["schema"] = "pdc.four-primitives.v1";
    j["p"] = params.p;
    j["q"] = params.q;
    j["q_norm"] = params.q_norm;
    j["q_prime"] = params.q_prime;
    j["indices"] = indices;
    out << j.dump(2) << '\n';
  } else {
    out << "L(" << params.p << "," << params.q << "): primitive indices {";
    bool first = true;
    for (int idx : indices) {
      if (!first) out << ", ";
      out << idx;
      first = false;
    }
    out << "}\n";
  }
  return 0;
}

Word random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 3);
  for (;;) {
    const int len = len_dist(rng);
    std::vector<Letter> raw;
    raw.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
      const int k = letter_dist(rng);
      raw.push_back({k < 2 ? Gen::One : Gen::Two, static_cast<std::int8_t>(k % 2 == 0 ? 1 : -1)});
    }
    Word w(std::move(raw), kAlphabetZY);
    if (!w.empty()) return w;
  }
}

struct SweepCheck {
  std::string label;
  bool ok = true;
  std::string detail;

  void fail(const std::string& where) {
    if (ok) detail = where;
    ok = false;
  }
};

int run_sweep(int pmax, unsigned seed, int samples, int threshold, std::ostream& out) {
  if (pmax < 2) {
    throw ValidationError("pmax must be at least 2 (got pmax=" + std::to_string(pmax) + ")");
  }
  if (samples < 0) {
    throw ValidationError("samples must be non-negative (got samples=" +
                          std::to_string(samples) + ")");
  }
  SweepCheck four{"four primitives"};
  SweepCheck symmetry{"symmetry"};
  SweepCheck invariance{"invariance"};
  SweepCheck agreement{"classification/witness agreement"};
  SweepCheck obstruction{"obstruction soundness"};
  SweepCheck substitution{"substitution preservation"};
  const int effective_threshold = std::max(threshold, pmax);
  int pairs = 0;
  for (int p = 2; p <= pmax; ++p) {
    if (!homeomorphism_invariance_check(p)) invariance.fail("p=" + std::to_string(p));
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++pairs;
      const std::string cell = "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")";
      const LensParams params = make_params(p, q);
      try {
        const PqSequence seq = make_sequence(params, effective_threshold);
        if (seq.primitive_indices != four_primitive_indices(params)) four.fail(cell);
        if (!check_symmetry(seq)) symmetry.fail(cell);
      } catch (const std::logic_error&) {
        four.fail(cell);
      }
      bool witness_throws = false;
      try {
        witness(params);
      } catch (const ContractibleInput&) {
        witness_throws = true;
      }
      if (classify(params) != witness_throws) agreement.fail(cell);
    }
  }
  std::mt19937 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const Word w = random_word(rng, 30);
    const std::string cell = "word " + to_string(w);
    if (detect_obstruction(w).has_value() && is_power_of_primitive(w)) obstruction.fail(cell);
    if (is_primitive(w) != is_primitive(substitute_z_to_xy(w))) substitution.fail(cell);
  }
  out << "sweep  pmax=" << pmax << "  pairs=" << pairs << "  seed=" << seed
      << "  samples=" << samples << '\n';
  bool all_ok = true;
  for (const SweepCheck* check :
       {&four, &symmetry, &invariance, &agreement, &obstruction, &substitution}) {
    out << check->label;
    for (std::size_t i = check->label.size(); i < 34; ++i) out << ' ';
    if (check->ok) {
      out << "ok\n";
    } else {
      out << "FAIL at " << check->detail << '\n';
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"word-combinatorial toolkit for primitive disk complexes of lens spaces"};
  app.require_subcommand(1);

  int p = 0;
  int q = 0;
  int m = 0;
  int n = 0;
  int pmax = 12;
  int samples = 200;
  int threshold = kDefaultVerifyThreshold;
  unsigned seed = 12345;
  bool trace = false;
  bool dot = false;
  std::string word_text;
  std::string format = "text";

  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured", "dot"}))
        ->capture_default_str();
  };
  const auto add_pq = [&p, &q](CLI::App* cmd) {
    cmd->add_option("-p,--p", p, "order of the lens space")->required();
    cmd->add_option("-q,--q", q, "twisting parameter, coprime to p")->required();
  };

  CLI::App* seq_cmd = app.add_subcommand("sequence", "print the disk sequence words w_0..w_p");
  add_pq(seq_cmd);
  add_format(seq_cmd);
  seq_cmd->add_option("--verify-threshold", threshold,
                      "largest p whose primitive indices are re-checked against the descent")
      ->capture_default_str();

  CLI::App* prim_cmd = app.add_subcommand("primitive", "decide primitivity of a word");
  prim_cmd->add_option("word", word_text, "word over {z,y} or {x,y}; uppercase inverts")
      ->required();
  prim_cmd->add_flag("--trace", trace, "print the length-descent steps");
  add_format(prim_cmd);

  CLI::App* canon_cmd = app.add_subcommand("canonical", "print the canonical positive primitive w(m,n)");
  canon_cmd->add_option("-m,--m", m, "count of the first generator")->required();
  canon_cmd->add_option("-n,--n", n, "count of the second generator")->required();
  add_format(canon_cmd);

  CLI::App* classify_cmd = app.add_subcommand("classify", "contractibility verdict for P(V)");
  add_pq(classify_cmd);
  add_format(classify_cmd);

  CLI::App* report_cmd = app.add_subcommand("report", "full structure report for P(V)");
  add_pq(report_cmd);
  add_format(report_cmd);

  CLI::App* witness_cmd =
      app.add_subcommand("witness", "build the non-contractibility witness strip");
  add_pq(witness_cmd);
  add_format(witness_cmd);
  witness_cmd->add_flag("--dot", dot, "shorthand for --format dot");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run the property sweep over coprime (p,q)");
  sweep_cmd->add_option("--pmax", pmax, "largest p to sweep")->capture_default_str();
  sweep_cmd->add_option("--seed", seed, "seed for the randomized word checks")
      ->capture_default_str();
  sweep_cmd->add_option("--samples", samples, "number of random words")->capture_default_str();
  sweep_cmd->add_option("--verify-threshold", threshold,
                        "largest p whose primitive indices are re-checked against the descent")
      ->capture_default_str();

  CLI::App* four_cmd =
      app.add_subcommand("four-primitives", "print the primitive indices of the disk sequence");
  add_pq(four_cmd);
  add_format(four_cmd);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(seq_cmd)) return run_sequence(p, q, threshold, format, out);
    if (app.got_subcommand(prim_cmd)) return run_primitive(word_text, trace, format, out);
    if (app.got_subcommand(canon_cmd)) return run_canonical(m, n, format, out);
    if (app.got_subcommand(classify_cmd)) return run_classify(p, q, format, out);
    if (app.got_subcommand(report_cmd)) return run_report(p, q, format, out);
    if (app.got_subcommand(witness_cmd)) return run_witness(p, q, dot ? "dot" : format, out);
    if (app.got_subcommand(sweep_cmd)) return run_sweep(pmax, seed, samples, threshold, out);
    if (app.got_subcommand(four_cmd)) return run_four_primitives(p, q, format, out);
    err << "error: no command selected\n";
    return 2;
  } catch (const ContractibleInput& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace pdc::cli
