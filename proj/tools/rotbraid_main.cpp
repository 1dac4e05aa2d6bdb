#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

#include "rotbraid/classify.hpp"
#include "rotbraid/diagram.hpp"
#include "rotbraid/io.hpp"

using nlohmann::json;
using namespace rotbraid;

namespace {

// exit codes: 0 pass, 2 input error, 3 verification failure / disagreement,
// 4 inconclusive search
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitInconclusive = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::disagreement:
    case errc::not_pure_result:
      return kExitDisagreement;
    default:
      return kExitInput;
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_error(errc::parse_error, "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw_error(errc::parse_error, "malformed JSON in " + path);
  return j;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw_error(errc::parse_error, "cannot write " + path);
  out << content;
}

struct ClassifyArgs {
  std::vector<std::string> inputs;
  std::string output;
  std::uint64_t seed = 0;
  double theta_max = 0.05;
  int jobs = 1;
};

int run_classify(const ClassifyArgs& args) {
  ExtractOptions opts;
  opts.seed = args.seed;
  opts.max_step = args.theta_max;

  std::vector<std::string> results(args.inputs.size());
  std::vector<std::optional<int>> failures(args.inputs.size());
  std::mutex io_mutex;

  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < args.inputs.size(); i += step) {
      try {
        RotationPath p = path_from_json(load_json(args.inputs[i]));
        if (!is_closed(p, 1e-9))
          throw_error(errc::not_closed, args.inputs[i] + " is not a closed path");
        ClassificationReport rep = classify(p, opts);
        results[i] = classification_report_to_json(rep).dump();
      } catch (const Error& e) {
        std::scoped_lock lock(io_mutex);
        std::cerr << args.inputs[i] << ": " << e.what() << "\n";
        failures[i] = exit_code_for(e);
      }
    }
  };

  int jobs = std::max(1, args.jobs);
  if (jobs == 1 || args.inputs.size() <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    for (auto& th : pool) th.join();
  }

  std::string combined;
  for (const std::string& r : results)
    if (!r.empty()) combined += r + "\n";
  write_output(args.output, combined);

  for (const auto& f : failures)
    if (f) return *f;
  return kExitOk;
}

int run_verify(const std::string& target, int n, std::uint64_t max_states,
               int max_extra) {
  SearchBudget budget{max_states, max_extra};
  auto print_report = [](const VerificationReport& rep) {
    int passed = 0;
    for (const auto& c : rep.checks) {
      std::cout << (c.verified ? "ok   " : "FAIL ") << c.name << "\n";
      if (c.verified) ++passed;
    }
    std::cout << rep.title << ": " << passed << "/" << rep.checks.size()
              << " identities verified\n";
    return rep.all_passed() ? kExitOk : kExitDisagreement;
  };

  if (target == "lemma1") return print_report(verify_lemma1());
  if (target == "lemma1p") return print_report(verify_lemma1_general(n));

  if (target == "prop1") {
    const BraidWord empty(3);
    const BraidWord s1s1(3, {1, 1}), s2s2(3, {2, 2});
    struct Case {
      const char* name;
      BraidWord lhs, rhs;
    };
    const Case cases[] = {
        {"s1^4 ~ I", BraidWord(3, {1, 1, 1, 1}), empty},
        {"s2^4 ~ I", BraidWord(3, {2, 2, 2, 2}), empty},
        {"s1^2 ~ s2^2", s1s1, s2s2},
        {"s1^2 ~ s1^-2", s1s1, BraidWord(3, {-1, -1})},
        {"s2^2 ~ s2^-2", s2s2, BraidWord(3, {-2, -2})},
    };
    bool all = true;
    for (const Case& c : cases) {
      CertifyResult res = certify_equal_mod_R(c.lhs, c.rhs, budget);
      bool ok = res.found() && replay_certificate(*res.certificate);
      all = all && ok;
      std::cout << (ok ? "ok   " : "FAIL ") << c.name << " ("
                << (res.found() ? std::to_string(res.certificate->moves.size()) +
                                      " moves, replay verified"
                                : "no certificate")
                << ", " << res.states_explored << " states)\n";
    }
    return all ? kExitOk : kExitDisagreement;
  }

  if (target == "prop1p") {
    if (n != 3 && n != 4) {
      std::cerr << "prop1p supports --n 3 or 4\n";
      return kExitInput;
    }
    BraidWord d = full_twist(n);
    CertifyResult res = certify_in_R(compose(d, d), budget);
    if (res.found() && replay_certificate(*res.certificate)) {
      std::cout << "ok   d^2 in R at n = " << n << " ("
                << res.certificate->moves.size() << " moves, replay verified, "
                << res.states_explored << " states)\n";
      return kExitOk;
    }
    std::cout << "INCONCLUSIVE d^2 at n = " << n << " (budget "
              << res.states_explored << " states exhausted)\n";
    return kExitInconclusive;
  }

  std::cerr << "unknown verify target '" << target
            << "' (expected lemma1, lemma1p, prop1, prop1p)\n";
  return kExitInput;
}

int run_reduce(const std::string& word_text, int n, const std::string& cert_path,
               std::uint64_t max_states, int max_extra) {
  BraidWord w = parse_word_text(word_text, n);
  if (n != 3) {
    std::cerr << "reduce works on 3-strand words\n";
    return kExitInput;
  }
  SphereBraidClass cls = sphere_class(w);
  BraidWord rep = canonical_rep(cls);

  json out{{"input", w.letters()},
           {"canonical", rep.letters()},
           {"canonical_text", format_word_text(rep)},
           {"permutation", cls.perm.images()},
           {"exponent_sum_mod4", cls.esum_mod4}};
  if (cls.perm.is_identity()) out["class"] = to_string(z2_class(w));

  int code = kExitOk;
  if (!cert_path.empty()) {
    CertifyResult res = certify_equal_mod_R(w, rep, SearchBudget{max_states, max_extra});
    if (res.found()) {
      write_output(cert_path, certificate_to_json(*res.certificate).dump(2));
      out["certificate"] = cert_path;
    } else {
      out["certificate"] = nullptr;
      code = kExitInconclusive;
    }
  }
  std::cout << out.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid-based classifier for closed rotation paths in SO(3)"};
  app.require_subcommand(1);

  // classify
  ClassifyArgs cargs;
  auto* classify_cmd =
      app.add_subcommand("classify", "classify closed paths from path JSON files");
  classify_cmd->add_option("--input", cargs.inputs, "path JSON file(s)")->required();
  classify_cmd->add_option("--output", cargs.output, "write reports here instead of stdout");
  classify_cmd->add_option("--seed", cargs.seed, "seed for degeneracy retries");
  classify_cmd->add_option("--theta-max", cargs.theta_max, "max rotation step per sample");
  classify_cmd->add_option("--jobs", cargs.jobs, "parallel workers for batch inputs");

  // extract
  std::string ex_input, ex_output;
  std::uint64_t ex_seed = 0;
  double ex_theta = 0.05;
  bool ex_dump_planar = false;
  auto* extract_cmd =
      app.add_subcommand("extract", "print the braid word of a closed path");
  extract_cmd->add_option("--input", ex_input, "path JSON file")->required();
  extract_cmd->add_option("--output", ex_output, "output file");
  extract_cmd->add_option("--seed", ex_seed, "seed for degeneracy retries");
  extract_cmd->add_option("--theta-max", ex_theta, "max rotation step per sample");
  extract_cmd->add_flag("--dump-spherical", ex_dump_planar,
                        "also dump the sampled spherical braid");

  // reduce
  std::string rd_word, rd_cert;
  int rd_n = 3;
  std::uint64_t rd_states = SearchBudget{}.max_states;
  int rd_extra = SearchBudget{}.max_extra_length;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "canonical representative and class of a word");
  reduce_cmd->add_option("word", rd_word, "word as signed integers, e.g. \"1 2 2 1\"")
      ->required();
  reduce_cmd->add_option("--n", rd_n, "strand count");
  reduce_cmd->add_option("--certificate", rd_cert, "write a rewriting certificate here");
  reduce_cmd->add_option("--budget", rd_states, "max search states");

  // verify
  std::string vf_target;
  int vf_n = 3;
  std::uint64_t vf_states = SearchBudget{}.max_states;
  int vf_extra = SearchBudget{}.max_extra_length;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("target", vf_target, "lemma1 | lemma1p | prop1 | prop1p")
      ->required();
  verify_cmd->add_option("--n", vf_n, "strand count (lemma1p: 3..7, prop1p: 3..4)");
  verify_cmd->add_option("--budget", vf_states, "max search states");

  // verify-cert
  std::string vc_input;
  auto* vcert_cmd = app.add_subcommand("verify-cert", "replay a certificate file");
  vcert_cmd->add_option("--input", vc_input, "certificate JSON file")->required();

  // gen
  int gen_turns = 0;
  std::string gen_axis, gen_output;
  std::uint64_t gen_seed = 0;
  bool gen_wiggle = false;
  auto* gen_cmd = app.add_subcommand("gen", "generate a test path JSON");
  gen_cmd->add_option("--turns", gen_turns, "number of full 2*pi turns")->required();
  gen_cmd->add_option("--axis", gen_axis, "fixed axis x,y,z (default: seeded random axes)");
  gen_cmd->add_option("--seed", gen_seed, "seed for random axes and wiggles");
  gen_cmd->add_flag("--wiggle", gen_wiggle, "interleave closed null excursions");
  gen_cmd->add_option("--output", gen_output, "output file");

  // diagram
  std::string dg_word, dg_format = "ascii", dg_output;
  int dg_n = 3;
  auto* diagram_cmd = app.add_subcommand("diagram", "render a braid word");
  diagram_cmd->add_option("word", dg_word, "word as signed integers")->required();
  diagram_cmd->add_option("--n", dg_n, "strand count");
  diagram_cmd->add_option("--format", dg_format, "ascii | svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  diagram_cmd->add_option("--output", dg_output, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) return run_classify(cargs);

    if (extract_cmd->parsed()) {
      RotationPath p = path_from_json(load_json(ex_input));
      if (!is_closed(p, 1e-9))
        throw_error(errc::not_closed, ex_input + " is not a closed path");
      ExtractOptions opts;
      opts.seed = ex_seed;
      opts.max_step = ex_theta;
      ExtractionResult res = braid_of_path_detailed(p, opts);
      json out = braid_word_to_json(res.word);
      out["text"] = format_word_text(res.word);
      if (ex_dump_planar) out["spherical_braid"] = spherical_braid_to_json(trace(p, ex_theta));
      write_output(ex_output, out.dump());
      return kExitOk;
    }

    if (reduce_cmd->parsed())
      return run_reduce(rd_word, rd_n, rd_cert, rd_states, rd_extra);

    if (verify_cmd->parsed()) return run_verify(vf_target, vf_n, vf_states, vf_extra);

    if (vcert_cmd->parsed()) {
      Certificate cert = certificate_from_json(load_json(vc_input));
      bool ok = replay_certificate(cert);
      std::cout << (ok ? "certificate replays exactly: " : "certificate INVALID: ")
                << format_word_text(cert.start) << " -> " << format_word_text(cert.end)
                << " (" << cert.moves.size() << " moves)\n";
      return ok ? kExitOk : kExitDisagreement;
    }

    if (gen_cmd->parsed()) {
      RotationPath p;
      if (!gen_axis.empty()) {
        double x, y, z;
        if (std::sscanf(gen_axis.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3)
          throw_error(errc::parse_error, "--axis wants x,y,z");
        std::vector<Segment> segs;
        for (int k = 0; k < gen_turns; ++k)
          segs.push_back({Vec3{x, y, z}, 6.28318530717958647692});
        p = path_from_segments(segs);
      } else {
        p = random_closed_path(gen_seed, gen_turns, gen_wiggle);
      }
      write_output(gen_output, path_to_json(p).dump(2));
      return kExitOk;
    }

    if (diagram_cmd->parsed()) {
      BraidWord w = parse_word_text(dg_word, dg_n);
      write_output(dg_output, dg_format == "svg" ? svg_diagram(w) : ascii_diagram(w));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
