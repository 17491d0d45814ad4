#include "geomlab/report.hpp"

#include <sstream>

#include "geomlab/solitons.hpp"

namespace geomlab {

using J = ReportJson;

ReportSections ReportSections::everything() {
  ReportSections s;
  s.connection = s.curvature = s.ricci = s.weyl = s.ledger = s.biinvariance = true;
  s.solitons = s.walker = s.parallel = s.harmonic = s.fields = true;
  return s;
}

std::optional<ReportSections> ReportSections::for_command(const std::string& command) {
  ReportSections s;
  if (command == "analyze") return everything();
  if (command == "connection") {
    s.connection = s.biinvariance = true;
  } else if (command == "curvature") {
    s.curvature = s.ricci = s.weyl = s.ledger = s.biinvariance = true;
  } else if (command == "solitons") {
    s.ricci = s.solitons = true;
  } else if (command == "walker") {
    s.walker = s.parallel = true;
  } else if (command == "classify") {
    s.harmonic = s.parallel = true;
  } else if (command == "field") {
    s.fields = true;
  } else {
    return std::nullopt;
  }
  return s;
}

RatVector parse_coefficients(const std::string& text) {
  RatVector out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(Rational::parse(piece));
    } catch (const MalformedRational& e) {
      throw ModelError(ModelErrorKind::MalformedRational, std::string("--coeffs: ") + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

using Labels = std::vector<std::string>;

J vector_json(const Labels& labels, std::span<const Rational> v) {
  J out = J::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[labels[i]] = v[i].to_string();
  return out;
}

J vector_list_json(const Labels& labels, std::span<const RatVector> vs) {
  J out = J::array();
  for (const auto& v : vs) out.push_back(vector_json(labels, v));
  return out;
}

// Endomorphism as the images of the basis vectors.
J images_json(const Labels& labels, const RatMatrix& m) {
  J out = J::object();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto col = m.column(j);
    if (!is_zero(col)) out[labels[j]] = vector_json(labels, col);
  }
  return out;
}

// Bilinear form, all entries.
J bilinear_json(const Labels& labels, const RatMatrix& m) {
  J out = J::object();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    J row = J::object();
    for (std::size_t j = 0; j < m.cols(); ++j) row[labels[j]] = m(i, j).to_string();
    out[labels[i]] = std::move(row);
  }
  return out;
}

// Nonzero components as nested objects.
J sparse_tensor_json(const Labels& labels, const Tensor& t) {
  J out = J::object();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t.flat_at(k).is_zero()) continue;
    const auto idx = t.unflat(k);
    J* node = &out;
    for (std::size_t r = 0; r + 1 < idx.size(); ++r) {
      J& child = (*node)[labels[idx[r]]];
      if (child.is_null()) child = J::object();
      node = &child;
    }
    (*node)[labels[idx.back()]] = t.flat_at(k).to_string();
  }
  return out;
}

std::string rational_list(std::span<const Rational> v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.to_string();
  return s;
}

J conventions_json() {
  J c = J::object();
  c["connection"] = "nabla_{u_i} u_j = sum_k Gamma^k_ij u_k from 2 g(nabla_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y)";
  c["curvature"] = "R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z";
  c["curvature_components"] = "R_ijkl = g(R(u_i,u_j)u_k, u_l)";
  c["ricci"] = "rho(y,z) = trace(x -> R(x,y)z); Rc = g^-1 rho; tau = trace(Rc) = g^ij rho_ij";
  c["weyl"] =
      "C_ijkl = R_ijkl - (rho_jk g_il + rho_il g_jk - rho_ik g_jl - rho_jl g_ik)/(n-2) + "
      "tau (g_jk g_il - g_ik g_jl)/((n-1)(n-2)); vanishes for constant curvature";
  c["ricci_soliton"] = "L_X g = s g - rho; s > 0 shrinking, s = 0 steady, s < 0 expanding";
  c["algebraic_soliton"] = "Rc = c Id + D with D a derivation; class by the sign of c as above";
  c["rough_laplacian"] = "g^ij (nabla_i nabla_j V - nabla_{nabla_i u_j} V)";
  c["harmonic_map_term"] = "g^ij R(nabla_i V, V) u_j";
  c["energy"] = "E(V) = (n/2 + |nabla V|^2/2) vol, |nabla V|^2 = g^ij g(nabla_i V, nabla_j V)";
  return c;
}

J affine_json(const AffineSolution& s, const std::vector<std::string>& unknowns) {
  J out = J::object();
  out["unknowns"] = unknowns;
  out["rank"] = s.rank;
  out["augmented_rank"] = s.augmented_rank;
  if (s.feasible) {
    J p = J::array();
    for (const auto& x : s.particular) p.push_back(x.to_string());
    out["particular"] = std::move(p);
  }
  J kb = J::array();
  for (const auto& k : s.kernel_basis) {
    J v = J::array();
    for (const auto& x : k) v.push_back(x.to_string());
    kb.push_back(std::move(v));
  }
  out["kernel_basis"] = std::move(kb);
  return out;
}

J verdict_json(const Labels& labels, const SolitonVerdict& v, std::vector<std::string> unknowns) {
  J out = J::object();
  out["feasible"] = v.feasible;
  if (v.feasible) {
    out["constant"] = v.constant->to_string();
    out["class"] = std::string(to_string(*v.soliton_class));
    out["plug_back_verified"] = v.plug_back_verified;
  } else {
    out["certificate"] = "rank(A) = " + std::to_string(v.solution.rank) + " < rank(A|b) = " +
                         std::to_string(v.solution.augmented_rank);
  }
  if (v.field) out["field"] = vector_json(labels, *v.field);
  if (v.derivation) out["derivation"] = images_json(labels, *v.derivation);
  out["solution"] = affine_json(v.solution, std::move(unknowns));
  return out;
}

J field_json(const MetricLieAlgebra& m, const RatVector& coeffs, const Rational& volume) {
  const auto& labels = m.labels();
  const auto rep = analyze_field(m, InvariantVectorField{coeffs});
  const auto energy = energy_report(m, InvariantVectorField{coeffs}, volume);
  J out = J::object();
  out["coefficients"] = rational_list(coeffs);
  out["vector"] = vector_json(labels, coeffs);
  J nabla = J::object();
  for (std::size_t i = 0; i < labels.size(); ++i) nabla[labels[i]] = vector_json(labels, rep.nabla_v.column(i));
  out["nabla_v"] = std::move(nabla);
  out["rough_laplacian"] = vector_json(labels, rep.rough_laplacian);
  out["curvature_term"] = vector_json(labels, rep.curvature_term);
  out["is_harmonic_section"] = rep.is_harmonic_section;
  out["is_harmonic_map"] = rep.is_harmonic_map;
  out["is_critical_constant_length"] = rep.is_critical_constant_length;
  out["is_geodesic"] = rep.is_geodesic;
  out["is_killing"] = rep.is_killing;
  out["is_parallel"] = rep.is_parallel;
  out["lie_derivative_metric"] = bilinear_json(labels, rep.lie_derivative_metric);
  out["squared_length"] = rep.squared_length.to_string();
  out["energy_density"] = rep.energy_density.to_string();
  out["energy"] = J{{"volume", volume.to_string()}, {"density", energy.density.to_string()},
                    {"total", energy.total.to_string()}};
  return out;
}

}  // namespace

ReportJson build_report(const LoadedModel& model, const ReportRequest& req) {
  const MetricLieAlgebra& m = model.space;
  const auto& labels = m.labels();
  const std::size_t n = m.dimension();
  const auto& s = req.sections;
  J r = J::object();
  r["conventions"] = conventions_json();
  r["schema"] = kReportSchema;
  r["model"] = J{{"name", model.name}, {"dimension", n}, {"basis", labels}};
  r["model"]["brackets"] = J::object();
  for (const auto& [key, value] : m.algebra().bracket_table())
    r["model"]["brackets"][labels[key.first] + "," + labels[key.second]] = vector_json(labels, value);
  r["model"]["metric"] = bilinear_json(labels, m.metric());

  if (s.connection) {
    J conn = J::object();
    for (std::size_t i = 0; i < n; ++i) conn[labels[i]] = images_json(labels, m.connection().lambdas[i]);
    r["connection"] = std::move(conn);
  }
  if (s.biinvariance) {
    r["biinvariant"] = biinvariance_check(m);
    r["killing_form"] = bilinear_json(labels, killing_form(m.algebra()));
  }
  if (s.curvature) {
    const auto curv = curvature(m);
    r["curvature"] = J{{"endomorphism", sparse_tensor_json(labels, curv.r13)},
                       {"covariant", sparse_tensor_json(labels, curv.r04)}};
  }
  if (s.ricci) {
    const auto ric = ricci(m);
    r["ricci"] = J{{"rho", bilinear_json(labels, ric.rho)},
                   {"ricci_operator", images_json(labels, ric.ricci_operator)},
                   {"scalar", ric.scalar.to_string()}};
  }
  if (s.weyl) {
    if (n >= 4) {
      const auto c = weyl(m);
      r["weyl"] = J{{"supported", true}, {"conformally_flat", c.is_zero()}, {"tensor", sparse_tensor_json(labels, c)}};
    } else {
      r["weyl"] = J{{"supported", false}, {"reason", "dimension " + std::to_string(n) + " <= 3"}};
    }
  }
  if (s.ledger) {
    const auto led = ledger_conditions(m);
    J l = J{{"L3", led.l3}, {"L5", led.l5}, {"locally_symmetric", led.locally_symmetric}};
    if (led.l3_witness) {
      const auto& t = *led.l3_witness;
      l["L3_witness"] = J::array({labels[t[0]], labels[t[1]], labels[t[2]]});
    }
    if (led.l5_witness) {
      J w = J::array();
      for (auto i : *led.l5_witness) w.push_back(labels[i]);
      l["L5_witness"] = std::move(w);
    }
    if (led.nabla_r_witness) {
      J w = J::array();
      for (auto i : *led.nabla_r_witness) w.push_back(labels[i]);
      l["nabla_R_witness"] = std::move(w);
    }
    r["ledger"] = std::move(l);
  }
  if (s.solitons) {
    std::vector<std::string> x_unknowns;
    for (const auto& l : labels) x_unknowns.push_back("X." + l);
    auto inv_unknowns = x_unknowns;
    inv_unknowns.push_back("s");
    const auto alg = algebraic_ricci_soliton_solve(m);
    std::vector<std::string> alg_unknowns{"c"};
    for (std::size_t t = 0; t < alg.derivation_basis.size(); ++t) alg_unknowns.push_back("D" + std::to_string(t + 1));
    J sol = J::object();
    sol["einstein"] = verdict_json(labels, einstein_solve(m), {"lambda"});
    sol["invariant_ricci_soliton"] = verdict_json(labels, invariant_ricci_soliton_solve(m), inv_unknowns);
    sol["algebraic_ricci_soliton"] = verdict_json(labels, alg, alg_unknowns);
    J basis = J::array();
    for (const auto& d : alg.derivation_basis) basis.push_back(images_json(labels, d));
    sol["algebraic_ricci_soliton"]["derivation_basis"] = std::move(basis);
    r["solitons"] = std::move(sol);
  }
  if (s.walker) {
    const auto w = parallel_null_line_fields(m);
    J subspaces = J::array();
    for (const auto& sub : w.totally_null_subspaces) subspaces.push_back(vector_list_json(labels, sub));
    r["walker"] = J{{"lines", vector_list_json(labels, w.lines)},
                    {"totally_null_subspaces", std::move(subspaces)},
                    {"incomplete", w.incomplete}};
  }
  if (s.parallel) r["parallel_fields"] = vector_list_json(labels, parallel_fields(m));
  if (s.harmonic) {
    const auto h = harmonic_map_classification(m);
    J wit = J::array();
    for (const auto& w : h.witnesses)
      wit.push_back(J{{"vector", vector_json(labels, w.vector)}, {"curvature_term", vector_json(labels, w.curvature_term)}});
    r["harmonic"] = J{{"harmonic_sections", vector_list_json(labels, h.subspace)},
                      {"quadratic_obstruction_vanishes", h.quadratic_obstruction_vanishes},
                      {"polarization_witnesses", std::move(wit)}};
  }
  if (s.fields) {
    const Rational volume = req.volume ? *req.volume : (model.volume ? *model.volume : Rational(1));
    J fields = J::array();
    if (req.field) {
      fields.push_back(field_json(m, *req.field, volume));
    } else {
      for (std::size_t i = 0; i < n; ++i) fields.push_back(field_json(m, unit_vector(n, i), volume));
    }
    r["fields"] = std::move(fields);
  }
  return r;
}

std::string render_json(const ReportJson& report) { return report.dump(2) + "\n"; }

namespace {

std::string vector_text(const J& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [label, value] : v.items()) {
    std::string c = value.get<std::string>();
    const bool neg = c.front() == '-';
    if (neg) c.erase(0, 1);
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    s += (c == "1" ? "" : c + " ") + label;
  }
  return s;
}

std::string yes_no(const J& b) { return b.get<bool>() ? "yes" : "no"; }

void bilinear_table(std::ostringstream& os, const J& m) {
  os << "|   |";
  for (const auto& [col, _] : m.begin().value().items()) os << ' ' << col << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < m.begin().value().size(); ++i) os << "---|";
  os << '\n';
  for (const auto& [row, entries] : m.items()) {
    os << "| " << row << " |";
    for (const auto& [_, v] : entries.items()) os << ' ' << v.get<std::string>() << " |";
    os << '\n';
  }
}

void sparse_lines(std::ostringstream& os, const J& node, const std::string& prefix, const char* fmt_open,
                  const char* sep) {
  for (const auto& [k, v] : node.items()) {
    const std::string path = prefix.empty() ? k : prefix + sep + k;
    if (v.is_object()) sparse_lines(os, v, path, fmt_open, sep);
    else os << "- " << fmt_open << '(' << path << ") = " << v.get<std::string>() << '\n';
  }
}

void verdict_text(std::ostringstream& os, const std::string& title, const J& v) {
  os << "### " << title << "\n\n";
  if (v["feasible"].get<bool>()) {
    os << "- verdict: feasible\n- constant: " << v["constant"].get<std::string>() << " (" << v["class"].get<std::string>()
       << ")\n- plug-back verified: " << yes_no(v["plug_back_verified"]) << '\n';
    if (v.contains("field")) os << "- field: " << vector_text(v["field"]) << '\n';
    if (v.contains("derivation")) {
      os << "- derivation:";
      if (v["derivation"].empty()) os << " 0";
      for (const auto& [b, img] : v["derivation"].items()) os << ' ' << b << " -> " << vector_text(img) << ';';
      os << '\n';
    }
    os << "- solution family dimension: " << v["solution"]["kernel_basis"].size() << '\n';
  } else {
    os << "- verdict: infeasible\n- certificate: " << v["certificate"].get<std::string>() << '\n';
  }
  os << '\n';
}

}  // namespace

std::string render_markdown(const ReportJson& r) {
  std::ostringstream os;
  const J& model = r["model"];
  os << "# geomlab report: " << model["name"].get<std::string>() << "\n\n";
  os << "## Conventions\n\n";
  for (const auto& [k, v] : r["conventions"].items()) os << "- " << k << ": `" << v.get<std::string>() << "`\n";
  os << "\n## Model\n\n- dimension: " << model["dimension"].get<std::size_t>() << "\n- basis:";
  for (const auto& b : model["basis"]) os << ' ' << b.get<std::string>();
  os << "\n- brackets:";
  if (model["brackets"].empty()) os << " all zero";
  os << '\n';
  for (const auto& [pair, v] : model["brackets"].items()) os << "  - [" << pair << "] = " << vector_text(v) << '\n';
  os << "\nMetric:\n\n";
  bilinear_table(os, model["metric"]);
  os << '\n';

  if (r.contains("connection")) {
    os << "## Levi-Civita connection\n\n";
    for (const auto& [x, imgs] : r["connection"].items()) {
      if (imgs.empty()) os << "- nabla_" << x << " = 0\n";
      for (const auto& [y, v] : imgs.items()) os << "- nabla_" << x << ' ' << y << " = " << vector_text(v) << '\n';
    }
    os << '\n';
  }
  if (r.contains("biinvariant")) {
    os << "## Bi-invariance\n\n- bi-invariant: " << yes_no(r["biinvariant"]) << "\n\nKilling form:\n\n";
    bilinear_table(os, r["killing_form"]);
    os << '\n';
  }
  if (r.contains("curvature")) {
    os << "## Curvature\n\nNonzero R_ijkl:\n\n";
    if (r["curvature"]["covariant"].empty()) os << "- none (flat)\n";
    sparse_lines(os, r["curvature"]["covariant"], "", "R", ",");
    os << '\n';
  }
  if (r.contains("ricci")) {
    os << "## Ricci\n\nRicci tensor rho:\n\n";
    bilinear_table(os, r["ricci"]["rho"]);
    os << "\nRicci operator:";
    if (r["ricci"]["ricci_operator"].empty()) os << " 0";
    os << '\n';
    for (const auto& [b, img] : r["ricci"]["ricci_operator"].items()) os << "- Rc " << b << " = " << vector_text(img) << '\n';
    os << "\n- scalar curvature tau: " << r["ricci"]["scalar"].get<std::string>() << "\n\n";
  }
  if (r.contains("weyl")) {
    os << "## Weyl tensor\n\n";
    if (r["weyl"]["supported"].get<bool>()) {
      os << "- conformally flat: " << yes_no(r["weyl"]["conformally_flat"]) << '\n';
      sparse_lines(os, r["weyl"]["tensor"], "", "C", ",");
    } else {
      os << "- not defined: " << r["weyl"]["reason"].get<std::string>() << '\n';
    }
    os << '\n';
  }
  if (r.contains("ledger")) {
    const J& l = r["ledger"];
    os << "## Ledger conditions\n\n- L3 (cyclic-parallel Ricci): " << yes_no(l["L3"]) << "\n- L5: " << yes_no(l["L5"])
       << "\n- locally symmetric: " << yes_no(l["locally_symmetric"]) << "\n\n";
  }
  if (r.contains("solitons")) {
    os << "## Solitons\n\n";
    verdict_text(os, "Einstein (rho = lambda g)", r["solitons"]["einstein"]);
    verdict_text(os, "Invariant Ricci soliton (L_X g = s g - rho)", r["solitons"]["invariant_ricci_soliton"]);
    verdict_text(os, "Algebraic Ricci soliton (Rc = c Id + D)", r["solitons"]["algebraic_ricci_soliton"]);
  }
  if (r.contains("walker")) {
    const J& w = r["walker"];
    os << "## Parallel null line fields\n\n";
    if (w["lines"].empty() && w["totally_null_subspaces"].empty()) os << "- none found\n";
    for (const auto& l : w["lines"]) os << "- line spanned by " << vector_text(l) << '\n';
    for (const auto& sub : w["totally_null_subspaces"]) {
      os << "- totally null subspace spanned by";
      for (const auto& v : sub) os << " {" << vector_text(v) << '}';
      os << '\n';
    }
    os << "- search incomplete: " << yes_no(w["incomplete"]) << "\n\n";
  }
  if (r.contains("parallel_fields")) {
    os << "## Parallel vector fields\n\n";
    if (r["parallel_fields"].empty()) os << "- none\n";
    for (const auto& v : r["parallel_fields"]) os << "- " << vector_text(v) << '\n';
    os << '\n';
  }
  if (r.contains("harmonic")) {
    const J& h = r["harmonic"];
    os << "## Harmonic invariant vector fields\n\nHarmonic sections span:\n\n";
    if (h["harmonic_sections"].empty()) os << "- {0}\n";
    for (const auto& v : h["harmonic_sections"]) os << "- " << vector_text(v) << '\n';
    os << "\n- every harmonic section defines a harmonic map: " << yes_no(h["quadratic_obstruction_vanishes"]) << "\n\n";
  }
  if (r.contains("fields")) {
    os << "## Vector fields\n\n";
    for (const auto& f : r["fields"]) {
      os << "### V = " << vector_text(f["vector"]) << "\n\n";
      os << "- rough Laplacian: " << vector_text(f["rough_laplacian"]) << '\n';
      os << "- harmonic map curvature term: " << vector_text(f["curvature_term"]) << '\n';
      os << "- harmonic section: " << yes_no(f["is_harmonic_section"]) << '\n';
      os << "- harmonic map: " << yes_no(f["is_harmonic_map"]) << '\n';
      os << "- critical for constant length: " << yes_no(f["is_critical_constant_length"]) << '\n';
      os << "- geodesic: " << yes_no(f["is_geodesic"]) << '\n';
      os << "- Killing: " << yes_no(f["is_killing"]) << '\n';
      os << "- parallel: " << yes_no(f["is_parallel"]) << '\n';
      os << "- g(V,V): " << f["squared_length"].get<std::string>() << '\n';
      os << "- |nabla V|^2: " << f["energy_density"].get<std::string>() << '\n';
      os << "- energy over volume " << f["energy"]["volume"].get<std::string>() << ": "
         << f["energy"]["total"].get<std::string>() << "\n\n";
    }
  }
  return os.str();
}

}  // namespace geomlab
