// tautcalc: Chern characters and Chern classes of the moduli stack of stable
// pointed curves, written in tautological classes.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "taut/checks.hpp"
#include "taut/combinatorics.hpp"
#include "taut/error.hpp"
#include "taut/formulas.hpp"
#include "taut/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct SpaceOptions {
  int g = 0;
  int n = -1;
  std::string labels;
  std::string mode = "generic";
  std::string bundle;
  std::string basis = "kappa";
  std::string format = "text";
  std::string hodge = "boundary-half";
  bool expand_hodge = false;
};

void add_space_options(CLI::App* cmd, SpaceOptions& o, const std::string& default_bundle) {
  o.bundle = default_bundle;
  cmd->add_option("--g", o.g, "genus")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", o.n, "number of markings (labelled p1..pn)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--labels", o.labels, "comma separated marking labels; implies --mode concrete");
  cmd->add_option("--mode", o.mode, "generic or concrete")->check(CLI::IsMember({"generic", "concrete"}));
  cmd->add_option("--bundle", o.bundle, "tangent or cotangent")->check(CLI::IsMember({"tangent", "cotangent"}));
  cmd->add_option("--basis", o.basis, "kappa or lambda")->check(CLI::IsMember({"kappa", "lambda"}));
  cmd->add_option("--format", o.format, "text, latex or json")->check(CLI::IsMember({"text", "latex", "json"}));
  cmd->add_flag("--expand-hodge", o.expand_hodge, "replace ch_k(E) by kappa~ and boundary terms");
  cmd->add_option("--hodge-normalization", o.hodge, "boundary-half or whole-brace")
      ->check(CLI::IsMember({"boundary-half", "whole-brace"}));
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

taut::ModuliSpec make_spec(const SpaceOptions& o) {
  if (!o.labels.empty()) {
    auto labels = split_labels(o.labels);
    if (o.n >= 0 && o.n != static_cast<int>(labels.size())) throw taut::DomainError("--n disagrees with --labels");
    return taut::ModuliSpec::concrete(o.g, std::move(labels));
  }
  const int n = o.n < 0 ? 0 : o.n;
  return o.mode == "concrete" ? taut::ModuliSpec::concrete(o.g, n) : taut::ModuliSpec::generic(o.g, n);
}

taut::TautExpr maybe_expand_hodge(taut::TautExpr e, const SpaceOptions& o) {
  if (!o.expand_hodge) return e;
  return taut::expand_hodge(e, o.hodge == "whole-brace" ? taut::HodgeNormalization::WholeBrace
                                                        : taut::HodgeNormalization::BoundaryHalf);
}

// Prints "<prefix><d>: <expr>" lines, or one JSON document.
void print_graded(const taut::ModuliSpec& spec, const SpaceOptions& o, const std::vector<taut::TautExpr>& parts,
                  const std::string& prefix, const char* json_key) {
  const auto format = taut::parse_format(o.format);
  const int rank = taut::cotangent_rank(spec);
  if (format == taut::Format::Json) {
    nlohmann::ordered_json doc;
    doc["g"] = spec.genus();
    doc["n"] = spec.n();
    doc["bundle"] = o.bundle;
    doc["basis"] = o.basis;
    doc["rank"] = rank;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < parts.size(); ++i) list.push_back(taut::to_json(parts[i], static_cast<int>(i + 1)));
    doc[json_key] = list;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << "deg 0: rank = " << rank << "\n";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::cout << prefix << (i + 1) << ": " << taut::render(parts[i], format) << "\n";
  }
}

int run_ch(const SpaceOptions& o, int degree) {
  const auto spec = make_spec(o);
  if (degree == 0) {
    print_graded(spec, o, {}, "deg ", "components");
    return kExitOk;
  }
  const auto bundle = o.bundle == "tangent" ? taut::Bundle::Tangent : taut::Bundle::Cotangent;
  auto ch = maybe_expand_hodge(taut::ch_bundle(spec, degree, bundle), o);
  if (o.basis == "lambda") ch = taut::to_lambda_basis(ch);
  std::vector<taut::TautExpr> parts;
  for (int d = 1; d <= degree; ++d) parts.push_back(ch.component(d));
  print_graded(spec, o, parts, "deg ", "components");
  return kExitOk;
}

int run_chern(const SpaceOptions& o, int jmax) {
  const auto spec = make_spec(o);
  const auto bundle = o.bundle == "tangent" ? taut::Bundle::Tangent : taut::Bundle::Cotangent;
  std::vector<taut::TautExpr> classes;
  if (jmax > 0) {
    auto ch = maybe_expand_hodge(taut::ch_bundle(spec, jmax, bundle), o);
    if (o.basis == "lambda") {
      ch = taut::substitute(ch, taut::Generator::kappa(1), taut::kappa1_in_lambda_basis(spec, ch.order()));
    }
    classes = taut::chern_from_ch(taut::graded_components(ch, jmax), jmax);
    if (o.basis == "lambda") {
      for (auto& c : classes) c = taut::fold_delta(c);
    }
  }
  print_graded(spec, o, classes, "c_", "classes");
  return kExitOk;
}

int run_verify(int order, bool inject_fault) {
  const auto results = taut::run_checks({order, inject_fault});
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    all = all && r.passed;
  }
  std::cout << (all ? "all checks passed" : "some checks failed") << "\n";
  return all ? kExitOk : kExitVerifyFailed;
}

int run_render(const std::string& input, const std::string& format) {
  std::string text;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input);
    if (!in) throw taut::DomainError("cannot open " + input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw taut::DomainError(std::string("invalid JSON: ") + ex.what());
  }
  const auto e = taut::from_json(doc);
  const auto fmt = taut::parse_format(format);
  std::cout << taut::render(e, fmt, fmt == taut::Format::Json ? std::optional<int>(doc.at("degree").get<int>())
                                                             : std::nullopt)
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern characters and Chern classes of moduli spaces of stable curves"};
  app.require_subcommand(1);

  SpaceOptions ch_opts;
  int degree = 3;
  auto* ch = app.add_subcommand("ch", "graded Chern character ch_0..ch_degree");
  add_space_options(ch, ch_opts, "cotangent");
  ch->add_option("--degree", degree, "highest degree")->check(CLI::NonNegativeNumber);

  SpaceOptions chern_opts;
  int jmax = 3;
  auto* chern = app.add_subcommand("chern", "Chern classes c_1..c_jmax");
  add_space_options(chern, chern_opts, "tangent");
  chern->add_option("--jmax", jmax, "highest Chern class")->check(CLI::NonNegativeNumber);

  int order = 12;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "run the verification battery");
  verify->add_option("--order", order, "series truncation order (>= 4)")->check(CLI::Range(4, 40));
  verify->add_flag("--inject-fault", inject_fault, "corrupt one identity to exercise the harness");

  int bern_k = 0;
  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_k");
  bern->add_option("k", bern_k)->required();

  int part_j = 0;
  auto* parts = app.add_subcommand("partitions", "partitions of j");
  parts->add_option("j", part_j)->required();

  std::string input;
  std::string render_format = "text";
  auto* rend = app.add_subcommand("render", "re-render an expression given as JSON");
  rend->add_option("input", input, "JSON file, '-' for stdin");
  rend->add_option("--format", render_format)->check(CLI::IsMember({"text", "latex", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ch) return run_ch(ch_opts, degree);
    if (*chern) return run_chern(chern_opts, jmax);
    if (*verify) return run_verify(order, inject_fault);
    if (*bern) {
      std::cout << taut::bernoulli(bern_k) << "\n";
      return kExitOk;
    }
    if (*parts) {
      const auto list = taut::partitions(part_j);
      for (std::size_t i = 0; i < list.size(); ++i) std::cout << (i ? " " : "") << list[i].str();
      std::cout << "\n";
      return kExitOk;
    }
    if (*rend) return run_render(input, render_format);
  } catch (const taut::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
