#include "taut/render.hpp"

#include <sstream>

#include "taut/error.hpp"

namespace taut {

using nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "latex") return Format::Latex;
  if (name == "json") return Format::Json;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

namespace {

std::string power_of(const std::string& var, int e, Format format) {
  if (e == 0) return "";
  if (e == 1) return var;
  return format == Format::Latex ? var + "^{" + std::to_string(e) + "}" : var + "^" + std::to_string(e);
}

std::string product(const std::string& x, const std::string& y, Format format) {
  if (x.empty()) return y.empty() ? "1" : y;
  if (y.empty()) return x;
  return format == Format::Latex ? x + " " + y : x + "*" + y;
}

// m_(a,b)(x, y) written out
std::string sym_argument(int a, int b, const std::string& x, const std::string& y, Format format) {
  std::string out = product(power_of(x, a, format), power_of(y, b, format), format);
  if (a != b) out += " + " + product(power_of(x, b, format), power_of(y, a, format), format);
  return out;
}

std::string label_set(const ModuliSpec& spec, LabelSet subset) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < spec.n(); ++i) {
    if ((subset >> i) & 1U) {
      out += (first ? "" : ",") + spec.labels()[static_cast<std::size_t>(i)];
      first = false;
    }
  }
  return out + "}";
}

std::string label_of(const ModuliSpec& spec, int index) {
  if (index < 0 || index >= spec.n()) throw DomainError("psi label index out of range");
  return spec.labels()[static_cast<std::size_t>(index)];
}

bool is_compound(const Generator& g) { return g.is_boundary_atom(); }

std::string render_monomial(const Monomial& m, const ModuliSpec& spec, Format format) {
  std::string out;
  const auto& f = m.factors();
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    const int e = static_cast<int>(j - i);
    std::string g = render_generator(f[i], spec, format);
    if (e > 1) {
      if (is_compound(f[i])) g = "(" + g + ")";
      g = power_of(g, e, format);
    } else if (f.size() > 1 && f[i].kind == GenKind::BSepSum) {
      g = "(" + g + ")";
    }
    out = out.empty() ? g : product(out, g, format);
    i = j;
  }
  return out;
}

std::string render_coefficient(const Rational& c, bool has_monomial, Format format) {
  if (!has_monomial) {
    if (format == Format::Latex && !c.is_integer()) {
      return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "}";
    }
    return c.str();
  }
  if (c == Rational(1)) return "";
  if (format == Format::Latex) {
    if (c.is_integer()) return c.str() + " ";
    return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "} ";
  }
  // integers multiply with '*', fractions are separated by a space: "13*lambda", "1/4 kappa_2"
  return c.is_integer() ? c.str() + "*" : c.str() + " ";
}

std::string render_sum(const TautExpr& e, Format format) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += render_coefficient(c.abs(), !m.is_one(), format);
    if (!m.is_one()) out += render_monomial(m, e.spec(), format);
    first = false;
  }
  return out;
}

const char* json_name(GenKind kind) {
  switch (kind) {
    case GenKind::Kappa: return "kappa";
    case GenKind::KappaTilde: return "kappa_tilde";
    case GenKind::Che: return "ch_E";
    case GenKind::PsiPow: return "psi_sum";
    case GenKind::Psi: return "psi";
    case GenKind::Delta: return "delta";
    case GenKind::BIrr: return "xi_irr";
    case GenKind::BSepSum: return "xi_sep_sum";
    case GenKind::BSep: return "xi_sep";
  }
  return "";
}

ordered_json generator_json(const Generator& g, const ModuliSpec& spec) {
  ordered_json args = ordered_json::array();
  switch (g.kind) {
    case GenKind::Kappa:
    case GenKind::KappaTilde:
    case GenKind::Che:
    case GenKind::PsiPow:
      args.push_back(g.index);
      break;
    case GenKind::Psi:
      args.push_back(label_of(spec, g.index));
      break;
    case GenKind::Delta:
      break;
    case GenKind::BIrr:
    case GenKind::BSepSum:
      args.push_back(g.a);
      args.push_back(g.b);
      break;
    case GenKind::BSep: {
      ordered_json subset = ordered_json::array();
      for (int i = 0; i < spec.n(); ++i) {
        if ((g.subset >> i) & 1U) subset.push_back(spec.labels()[static_cast<std::size_t>(i)]);
      }
      args.push_back(g.index);
      args.push_back(subset);
      args.push_back(g.a);
      args.push_back(g.b);
      break;
    }
  }
  ordered_json out;
  out["gen"] = json_name(g.kind);
  out["args"] = args;
  return out;
}

int label_index(const ModuliSpec& spec, const std::string& label) {
  const auto& labels = spec.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  throw DomainError("unknown marking label '" + label + "'");
}

Generator generator_from_json(const ordered_json& j, const ModuliSpec& spec) {
  const std::string name = j.at("gen").get<std::string>();
  const ordered_json& args = j.at("args");
  if (name == "kappa") return Generator::kappa(args.at(0).get<int>());
  if (name == "kappa_tilde") return Generator::kappa_tilde(args.at(0).get<int>());
  if (name == "ch_E") return Generator::che(args.at(0).get<int>());
  if (name == "psi_sum") return Generator::psi_pow(args.at(0).get<int>());
  if (name == "psi") return Generator::psi(label_index(spec, args.at(0).get<std::string>()));
  if (name == "delta") return Generator::delta();
  if (name == "xi_irr") return Generator::b_irr(args.at(0).get<int>(), args.at(1).get<int>());
  if (name == "xi_sep_sum") return Generator::b_sep_sum(args.at(0).get<int>(), args.at(1).get<int>());
  if (name == "xi_sep") {
    LabelSet subset = 0;
    for (const auto& l : args.at(1)) subset |= LabelSet{1} << label_index(spec, l.get<std::string>());
    return Generator::b_sep(spec, {args.at(0).get<int>(), subset}, args.at(2).get<int>(), args.at(3).get<int>());
  }
  throw DomainError("unknown generator '" + name + "'");
}

}  // namespace

std::string render_generator(const Generator& g, const ModuliSpec& spec, Format format) {
  const bool tex = format == Format::Latex;
  const std::string idx = std::to_string(g.index);
  switch (g.kind) {
    case GenKind::Kappa:
      return tex ? "\\kappa_{" + idx + "}" : "kappa_" + idx;
    case GenKind::KappaTilde:
      return tex ? "\\tilde{\\kappa}_{" + idx + "}" : "kappatilde_" + idx;
    case GenKind::Che:
      if (g.index == 1) return tex ? "\\lambda" : "lambda";
      return tex ? "\\mathrm{ch}_{" + idx + "}(\\mathbb{E})" : "ch_" + idx + "(E)";
    case GenKind::PsiPow:
      if (g.index == 1) return tex ? "\\psi" : "psi";
      return tex ? "\\psi^{[" + idx + "]}" : "psi[" + idx + "]";
    case GenKind::Psi:
      return tex ? "\\psi_{" + label_of(spec, g.index) + "}" : "psi_{" + label_of(spec, g.index) + "}";
    case GenKind::Delta:
      return tex ? "\\delta" : "delta";
    case GenKind::BIrr:
      return tex ? "\\xi_{irr*}(" + sym_argument(g.a, g.b, "\\psi_{q_1}", "\\psi_{q_2}", format) + ")"
                 : "xi_irr_*(" + sym_argument(g.a, g.b, "psi_{q1}", "psi_{q2}", format) + ")";
    case GenKind::BSepSum:
      return tex ? "\\sum_{h,A}\\xi_{h,A*}(" + sym_argument(g.a, g.b, "\\psi_{r_1}", "\\psi_{r_2}", format) + ")"
                 : "sum_{h,A} xi_{h,A}_*(" + sym_argument(g.a, g.b, "psi_{r1}", "psi_{r2}", format) + ")";
    case GenKind::BSep: {
      const std::string split = std::to_string(g.index) + "," + label_set(spec, g.subset);
      if (tex) {
        return "\\xi_{" + split + "*}(" +
               product(power_of("\\psi_{r_1}", g.a, format), power_of("\\psi_{r_2}", g.b, format), format) + ")";
      }
      return "xi_{" + split + "}_*(" +
             product(power_of("psi_{r1}", g.a, format), power_of("psi_{r2}", g.b, format), format) + ")";
    }
  }
  return "";
}

ordered_json to_json(const TautExpr& e, std::optional<int> degree) {
  const ModuliSpec& spec = e.spec();
  ordered_json doc;
  doc["g"] = spec.genus();
  doc["n"] = spec.n();
  doc["degree"] = degree.value_or(e.order());
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : e.terms()) {
    ordered_json mono = ordered_json::array();
    for (const auto& g : m.factors()) mono.push_back(generator_json(g, spec));
    ordered_json term;
    term["coeff"] = c.str();
    term["monomial"] = mono;
    terms.push_back(term);
  }
  doc["terms"] = terms;
  doc["mode"] = spec.is_concrete() ? "concrete" : "generic";
  if (spec.is_concrete()) doc["labels"] = spec.labels();
  return doc;
}

TautExpr from_json(const ordered_json& doc) {
  try {
    const int g = doc.at("g").get<int>();
    const int n = doc.at("n").get<int>();
    const bool concrete = doc.contains("mode") && doc.at("mode").get<std::string>() == "concrete";
    ModuliSpec spec = ModuliSpec::generic(g, n);
    if (concrete) {
      spec = doc.contains("labels") ? ModuliSpec::concrete(g, doc.at("labels").get<std::vector<std::string>>())
                                    : ModuliSpec::concrete(g, n);
      if (spec.n() != n) throw DomainError("label list does not match n");
    }
    const int order = doc.at("degree").get<int>();
    TautExpr e(spec, order);
    for (const auto& term : doc.at("terms")) {
      std::vector<Generator> factors;
      for (const auto& gen : term.at("monomial")) factors.push_back(generator_from_json(gen, spec));
      e.add_term(Monomial(std::move(factors)), Rational::parse(term.at("coeff").get<std::string>()));
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("malformed expression JSON: ") + ex.what());
  }
}

std::string render(const TautExpr& e, Format format, std::optional<int> degree) {
  if (format == Format::Json) return to_json(e, degree).dump();
  return render_sum(e, format);
}

}  // namespace taut
