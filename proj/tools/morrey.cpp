// Command-line surface over the norm library: sequence generation, discrete
// and continuous norm computation, growth profiles, divergence/boundedness
// certificates, equivalence-constant checks and the inclusion oracle.
//
// Exit codes: 0 success (and PASS verdicts), 1 mathematical FAIL (violated
// certificate or bound), 2 usage or parameter errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "morrey/analysis.hpp"
#include "morrey/discrete_norm.hpp"
#include "morrey/generators.hpp"
#include "morrey/json_io.hpp"
#include "morrey/step_function.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

morrey::SparseSequence read_sequence(const std::string& path) {
  json j;
  if (path.empty() || path == "-") {
    j = json::parse(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    j = json::parse(in);
  }
  return morrey::sequence_from_json(j);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct FamilyArgs {
  std::string family = "new";
  long long v = 0;
  long long w = 0;
  long long n_max = -1;
  long long k_max = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "sequence family: new | legacy")
        ->check(CLI::IsMember({"new", "legacy"}))
        ->capture_default_str();
    cmd->add_option("--v", v, "block growth exponent v")->required();
    cmd->add_option("--w", w, "block spacing exponent w")->required();
    cmd->add_option("--nmax", n_max, "last block index (family new)");
    cmd->add_option("--kmax", k_max, "last block index (family legacy)");
  }

  morrey::NewSeqSpec new_spec() const {
    if (n_max < 0)
      throw std::invalid_argument("--nmax is required for family new");
    return {v, w, n_max};
  }

  morrey::LegacySeqSpec legacy_spec() const {
    if (k_max < 0)
      throw std::invalid_argument("--kmax is required for family legacy");
    return {v, w, k_max};
  }
};

int run_gen(const FamilyArgs& fam, const std::string& output) {
  json j;
  if (fam.family == "new") {
    const auto spec = fam.new_spec();
    j = morrey::sequence_to_json(morrey::generate_new_sequence(spec));
    j["meta"] = {{"family", "new"},
                 {"v", spec.v},
                 {"w", spec.w},
                 {"n_max", spec.n_max}};
  } else {
    const auto spec = fam.legacy_spec();
    j = morrey::sequence_to_json(morrey::generate_legacy_sequence(spec));
    j["meta"] = {{"family", "legacy"},
                 {"v", spec.v},
                 {"w", spec.w},
                 {"k_max", spec.k_max},
                 {"k0", morrey::legacy_k0(spec.v, spec.w)}};
  }
  write_text(output, dump(j));
  return 0;
}

int run_norm(double p, double q, const std::string& kind,
             const std::string& engine, long long margin,
             const std::string& input, const std::string& output) {
  const auto seq = read_sequence(input);
  const morrey::MorreyParams params(p, q);
  const auto wkind = kind == "span" ? morrey::Window::Kind::span
                                    : morrey::Window::Kind::centered;
  morrey::NormResult result;
  if (engine == "brute") {
    result = morrey::brute_force_norm(seq, params, wkind, margin);
  } else if (wkind == morrey::Window::Kind::span) {
    result = morrey::starred_norm(seq, params);
  } else {
    result = morrey::centered_norm(seq, params);
  }
  write_text(output, dump(morrey::norm_result_to_json(result)));
  return 0;
}

int run_profile(const FamilyArgs& fam, double p, double q,
                const std::string& output) {
  const morrey::MorreyParams params(p, q);
  morrey::SparseSequence seq;
  std::vector<morrey::Window> windows;
  std::vector<std::string> bounds;
  if (fam.family == "new") {
    const auto spec = fam.new_spec();
    seq = morrey::generate_new_sequence(spec);
    const double rate = static_cast<double>(spec.v) / q -
                        static_cast<double>(spec.w) / p;
    const double base = (1.0 / q - 1.0 / p) * std::log2(3.0);
    for (long long n = 1; n <= spec.n_max; ++n) {
      windows.push_back(
          morrey::Window::span(0, morrey::new_sequence_beta(spec.v, n)));
      bounds.push_back(
          morrey::format_real(base + static_cast<double>(n) * rate));
    }
  } else {
    const auto spec = fam.legacy_spec();
    seq = morrey::generate_legacy_sequence(spec);
    for (long long k = 1; k <= spec.k_max; ++k) {
      windows.push_back(morrey::Window::span(
          0, morrey::pow2_index(k * (spec.w + spec.v))));
      bounds.push_back("nan");  // no closed-form bound for this family
    }
  }
  const auto profile = morrey::prefix_profile(seq, params, windows);
  std::ostringstream csv;
  csv << "n,cardinality,mass,value,log2_value,bound_log2\n";
  for (std::size_t t = 0; t < profile.size(); ++t) {
    csv << (t + 1) << ',' << morrey::index_to_string(profile[t].cardinality)
        << ',' << morrey::format_real(profile[t].mass) << ','
        << morrey::format_real(profile[t].value.linear_value) << ','
        << morrey::format_real(profile[t].value.log2_value) << ','
        << bounds[t] << '\n';
  }
  write_text(output, csv.str());
  return 0;
}

int run_certify(const FamilyArgs& fam, const std::string& mode,
                std::optional<double> p1, std::optional<double> p2, double q,
                const std::string& output) {
  const auto spec = fam.new_spec();
  morrey::Certificate cert;
  if (mode == "divergence") {
    if (!p2) throw std::invalid_argument("--p2 is required for divergence");
    cert = morrey::divergence_certificate(spec, *p2, q);
  } else {
    if (!p1) throw std::invalid_argument("--p1 is required for boundedness");
    cert = morrey::boundedness_certificate(spec, *p1, q);
  }
  write_text(output, dump(morrey::certificate_to_json(cert)));
  return cert.overall ? 0 : kExitFail;
}

int run_equiv(double p, double q, const std::string& input,
              const std::string& output) {
  const auto seq = read_sequence(input);
  const morrey::MorreyParams params(p, q);
  const auto report = morrey::equivalence_report(seq, params);
  write_text(output, dump(morrey::equivalence_to_json(report, params)));
  for (const auto& c : report.checks) {
    std::fprintf(stderr, "%s %s (C=%g): ratio %s within [1, %s]\n",
                 c.passed ? "PASS" : "FAIL", c.name.c_str(), c.constant,
                 morrey::format_real(c.ratio).c_str(),
                 morrey::format_real(c.bound).c_str());
  }
  return report.overall ? 0 : kExitFail;
}

int run_include(double p1, double q1, double p2, double q2,
                const std::string& output) {
  const auto verdict = morrey::inclusion_oracle(p1, q1, p2, q2);
  write_text(output, dump(morrey::verdict_to_json(verdict)));
  return 0;
}

int run_embed_norm(double p, double q, const std::string& input,
                   const std::string& output) {
  const auto seq = read_sequence(input);
  const morrey::MorreyParams params(p, q);
  const auto result = morrey::continuous_norm(morrey::embed(seq), params);
  write_text(output, dump(morrey::interval_result_to_json(result)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"window-supremum (Morrey) norms of finitely supported "
               "sequences and their step-function embeddings"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a counterexample sequence");
  FamilyArgs gen_fam;
  gen_fam.attach(gen);
  std::string gen_out;
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  // norm
  auto* norm = app.add_subcommand("norm", "discrete norm of a sequence");
  double norm_p = 1, norm_q = 1;
  std::string norm_kind = "span", norm_engine = "exact", norm_in, norm_out;
  long long norm_margin = 8;
  norm->add_option("--p", norm_p, "exponent p")->required();
  norm->add_option("--q", norm_q, "exponent q")->required();
  norm->add_option("--kind", norm_kind, "window kind: span | centered")
      ->check(CLI::IsMember({"span", "centered"}))
      ->capture_default_str();
  norm->add_option("--engine", norm_engine, "engine: exact | brute")
      ->check(CLI::IsMember({"exact", "brute"}))
      ->capture_default_str();
  norm->add_option("--margin", norm_margin, "index margin for --engine brute")
      ->capture_default_str();
  norm->add_option("-i,--input", norm_in, "sequence JSON (default stdin)");
  norm->add_option("-o,--output", norm_out, "output file (default stdout)");

  // profile
  auto* profile =
      app.add_subcommand("profile", "CSV growth profile over block windows");
  FamilyArgs prof_fam;
  prof_fam.attach(profile);
  double prof_p = 1, prof_q = 1;
  std::string prof_out;
  profile->add_option("--p", prof_p, "exponent p")->required();
  profile->add_option("--q", prof_q, "exponent q")->required();
  profile->add_option("-o,--output", prof_out, "output file (default stdout)");

  // certify
  auto* certify = app.add_subcommand(
      "certify", "divergence or boundedness certificate for the new family");
  FamilyArgs cert_fam;
  cert_fam.attach(certify);
  std::string cert_mode;
  double cert_q = 1;
  std::optional<double> cert_p1, cert_p2;
  std::string cert_out;
  certify->add_option("--mode", cert_mode, "divergence | boundedness")
      ->check(CLI::IsMember({"divergence", "boundedness"}))
      ->required();
  certify->add_option("--p1", cert_p1, "exponent p1 (boundedness)");
  certify->add_option("--p2", cert_p2, "exponent p2 (divergence)");
  certify->add_option("--q", cert_q, "exponent q")->required();
  certify->add_option("-o,--output", cert_out, "output file (default stdout)");

  // equiv
  auto* equiv = app.add_subcommand(
      "equiv", "norm-equivalence constant checks for a sequence");
  double eq_p = 1, eq_q = 1;
  std::string eq_in, eq_out;
  equiv->add_option("--p", eq_p, "exponent p")->required();
  equiv->add_option("--q", eq_q, "exponent q")->required();
  equiv->add_option("-i,--input", eq_in, "sequence JSON (default stdin)");
  equiv->add_option("-o,--output", eq_out, "output file (default stdout)");

  // include
  auto* include = app.add_subcommand("include", "inclusion oracle");
  double in_p1 = 1, in_q1 = 1, in_p2 = 1, in_q2 = 1;
  std::string in_out;
  include->add_option("--p1", in_p1)->required();
  include->add_option("--q1", in_q1)->required();
  include->add_option("--p2", in_p2)->required();
  include->add_option("--q2", in_q2)->required();
  include->add_option("-o,--output", in_out, "output file (default stdout)");

  // embed-norm
  auto* embed = app.add_subcommand(
      "embed-norm", "continuous norm of the step-function embedding");
  double em_p = 1, em_q = 1;
  std::string em_in, em_out;
  embed->add_option("--p", em_p, "exponent p")->required();
  embed->add_option("--q", em_q, "exponent q")->required();
  embed->add_option("-i,--input", em_in, "sequence JSON (default stdin)");
  embed->add_option("-o,--output", em_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_fam, gen_out);
    if (norm->parsed())
      return run_norm(norm_p, norm_q, norm_kind, norm_engine, norm_margin,
                      norm_in, norm_out);
    if (profile->parsed()) return run_profile(prof_fam, prof_p, prof_q, prof_out);
    if (certify->parsed())
      return run_certify(cert_fam, cert_mode, cert_p1, cert_p2, cert_q,
                         cert_out);
    if (equiv->parsed()) return run_equiv(eq_p, eq_q, eq_in, eq_out);
    if (include->parsed())
      return run_include(in_p1, in_q1, in_p2, in_q2, in_out);
    if (embed->parsed()) return run_embed_norm(em_p, em_q, em_in, em_out);
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "error: malformed JSON input: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
