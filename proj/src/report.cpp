#include "minfam/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"

namespace minfam {

using nlohmann::ordered_json;

namespace {

std::string kind_name(BasisKind k) { return k == BasisKind::Type1 ? "type1" : "type2"; }

std::string alpha_string(const MinimalPairCase& t) {
  if (!t.alpha) return "";
  if (t.alpha->den == 1) return std::to_string(t.alpha->num);
  return std::to_string(t.alpha->num) + "/" + std::to_string(t.alpha->den);
}

std::string join_classes(const std::vector<DivisorClass>& cs) {
  if (cs.empty()) return "-";
  std::string out;
  for (const auto& c : cs) out += (out.empty() ? "" : ", ") + to_string(c);
  return out;
}

std::string conic_kind(const ConicReport& c) {
  switch (c.kind) {
    case ConicKind::None: return "none";
    case ConicKind::MinimalPair:
      return c.subkind == ConicSubkind::GeometricallyRuled ? "minimal-pair/geometrically-ruled"
                                                           : "minimal-pair/minimal-families";
    case ConicKind::Pullback: return "pullback";
  }
  return "none";
}

ordered_json family_json(const FamilyReport& f) {
  ordered_json j;
  j["class"] = to_string(f.cls);
  j["coefficients"] = to_display(f.cls);
  j["degree"] = f.degree;
  j["canonical_degree"] = f.canonical_degree;
  j["dimension"] = f.dimension;
  j["complete"] = f.complete;
  j["real"] = f.real;
  j["theorem_case"] = to_string(f.theorem_case);
  j["level"] = f.level;
  j["incomplete_geometry"] = f.incomplete_geometry ? ordered_json(to_string(*f.incomplete_geometry)) : ordered_json();
  return j;
}

ordered_json terminal_json(const Classification& c) {
  ordered_json j;
  j["case"] = c.terminal.number;
  j["alpha"] = c.terminal.alpha ? ordered_json(alpha_string(c.terminal)) : ordered_json();
  j["canonical_square"] = c.terminal.canonical_square;
  j["fiber"] = c.terminal.fiber ? ordered_json(to_string(*c.terminal.fiber)) : ordered_json();
  if (c.terminal.rulings) {
    j["rulings"] = {to_string(c.terminal.rulings->first), to_string(c.terminal.rulings->second)};
  } else {
    j["rulings"] = ordered_json();
  }
  j["rulings_swapped"] = c.terminal.rulings_swapped;
  return j;
}

// Left-aligned first column, right-aligned numeric columns.
std::string table(const std::vector<std::vector<std::string>>& rows, std::size_t left_columns) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += "  ";
      const std::string pad(width[i] - r[i].size(), ' ');
      line += i < left_columns ? r[i] + pad : pad + r[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

std::string families_text(const std::vector<FamilyReport>& fams) {
  std::vector<std::vector<std::string>> rows = {
      {"class", "degree", "canonical", "dim", "complete", "real", "case", "level", "geometry"}};
  for (const auto& f : fams) {
    rows.push_back({to_string(f.cls), std::to_string(f.degree), std::to_string(f.canonical_degree),
                    std::to_string(f.dimension), f.complete ? "yes" : "no", f.real ? "yes" : "no",
                    to_string(f.theorem_case), std::to_string(f.level),
                    f.incomplete_geometry ? to_string(*f.incomplete_geometry) : "-"});
  }
  return table(rows, 1);
}

}  // namespace

std::string run(const SurfaceDescriptor& descriptor, const RunOptions& options) {
  const SurfacePair pair = to_surface_pair(descriptor);
  const Classification real = classify(pair, Mode::Real);
  std::optional<Classification> cplx;
  if (options.complex) cplx = classify(pair, Mode::Complex);
  std::optional<ConicReport> conics;
  if (options.conics) conics = classify_conics(real);

  if (options.format == OutputFormat::Json) {
    ordered_json doc;
    doc["label"] = descriptor.label;
    doc["basis"] = {{"kind", kind_name(descriptor.basis_kind)}, {"exceptional_count", descriptor.exceptional_count}};
    if (options.chain) {
      ordered_json levels = ordered_json::array();
      for (std::size_t i = 0; i < real.chain.pairs.size(); ++i) {
        const SurfacePair& p = real.chain.pairs[i];
        ordered_json l;
        l["level"] = i;
        l["exceptional_count"] = p.basis().count();
        l["h"] = to_string(p.h());
        l["h_coefficients"] = to_display(p.h());
        if (i > 0) {
          const ChainStep& s = real.chain.steps[i - 1];
          ordered_json contracted = ordered_json::array();
          for (const auto& c : s.contracted) contracted.push_back(to_string(c));
          l["contracted"] = contracted;
          l["fixed"] = to_string(s.fixed);
        } else {
          l["contracted"] = ordered_json::array();
          l["fixed"] = "0";
        }
        levels.push_back(l);
      }
      doc["chain"] = levels;
    }
    doc["terminal"] = terminal_json(real);
    doc["returned_level"] = real.returned_level;
    ordered_json fams = ordered_json::array();
    for (const auto& f : real.families) fams.push_back(family_json(f));
    doc["families"] = fams;
    doc["sphere_detected"] = real.sphere_detected;
    if (cplx) {
      ordered_json cf = ordered_json::array();
      for (const auto& f : cplx->families) cf.push_back(family_json(f));
      doc["complex_families"] = cf;
      doc["complex_returned_level"] = cplx->returned_level;
    }
    if (conics) {
      ordered_json c;
      c["kind"] = conic_kind(*conics);
      c["minimal_degree"] = conics->minimal_degree;
      ordered_json cls = ordered_json::array();
      for (const auto& x : conics->classes) cls.push_back(to_string(x));
      c["classes"] = cls;
      c["lambda"] = conics->kind == ConicKind::None ? ordered_json()
                    : conics->lambda              ? ordered_json(*conics->lambda)
                                                  : ordered_json("infinite");
      doc["conics"] = c;
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "surface: " << (descriptor.label.empty() ? "-" : descriptor.label) << " ("
      << kind_name(descriptor.basis_kind) << ", r=" << descriptor.exceptional_count << ")\n";
  if (options.chain) {
    out << "\nadjoint chain (length " << real.chain.length() << ")\n";
    std::vector<std::vector<std::string>> rows = {{"level", "h", "contracted", "fixed"}};
    for (std::size_t i = 0; i < real.chain.pairs.size(); ++i) {
      std::string contracted = "-", fixed = "0";
      if (i > 0) {
        contracted = join_classes(real.chain.steps[i - 1].contracted);
        fixed = to_string(real.chain.steps[i - 1].fixed);
      }
      rows.push_back({std::to_string(i), to_string(real.chain.pairs[i].h()), contracted, fixed});
    }
    std::size_t hw = 0, cw = 0;
    for (const auto& r : rows) {
      hw = std::max(hw, r[1].size());
      cw = std::max(cw, r[2].size());
    }
    for (const auto& r : rows) {
      std::string l = std::string(5 - std::min<std::size_t>(5, r[0].size()), ' ') + r[0] + "  " + r[1] +
                      std::string(hw - r[1].size(), ' ') + "  " + r[2] + std::string(cw - r[2].size(), ' ') + "  " +
                      r[3];
      while (!l.empty() && l.back() == ' ') l.pop_back();
      out << l << "\n";
    }
  }
  out << "\nterminal pair: case " << real.terminal.number;
  if (real.terminal.alpha) out << ", h = " << alpha_string(real.terminal) << "(-K)";
  out << ", K^2 = " << real.terminal.canonical_square;
  if (real.terminal.fiber) out << ", fiber " << to_string(*real.terminal.fiber);
  if (real.terminal.rulings)
    out << ", rulings " << to_string(real.terminal.rulings->first) << " / " << to_string(real.terminal.rulings->second)
        << (real.terminal.rulings_swapped ? " (swapped)" : " (fixed)");
  out << "\nreturned level: " << real.returned_level << "\n";
  out << "\nminimal families\n" << families_text(real.families);
  out << "\nsphere detected: " << (real.sphere_detected ? "yes" : "no") << "\n";
  if (cplx) {
    out << "\ncomplex minimal families (returned level " << cplx->returned_level << ")\n"
        << families_text(cplx->families);
  }
  if (conics) {
    out << "\nconics: " << conic_kind(*conics) << "\n";
    out << "minimal degree: " << conics->minimal_degree << "\n";
    if (conics->kind != ConicKind::None) {
      out << "conic classes: " << join_classes(conics->classes) << "\n";
      out << "lambda: " << (conics->lambda ? std::to_string(*conics->lambda) : "infinite") << "\n";
    }
  }
  return out.str();
}

std::vector<std::string> fixture_names() { return {"chain", "par", "sphere"}; }

std::optional<std::string_view> fixture_text(std::string_view name) {
  if (name == "sphere") return fixtures::kSphere;
  if (name == "chain") return fixtures::kChain;
  if (name == "par") return fixtures::kPar;
  return std::nullopt;
}

}  // namespace minfam
