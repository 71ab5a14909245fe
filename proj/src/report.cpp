#include "listcolor/report.hpp"

#include <iomanip>
#include <sstream>

namespace lc {

using nlohmann::json;

std::vector<std::size_t> witness_sample(std::size_t count, bool all) {
  std::vector<std::size_t> out;
  if (all || count <= kWitnessPrintLimit) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(i);
    return out;
  }
  for (std::size_t j = 0; j < kWitnessPrintLimit; ++j) {
    out.push_back((j * count + kWitnessPrintLimit - 1) / kWitnessPrintLimit);
  }
  return out;
}

std::string format_reduce_text(const Configuration& c, const ReducibilityVerdict& v, bool all) {
  std::ostringstream out;
  out << "configuration: " << c.name << '\n';
  out << "caps: " << format_exponent(v.caps) << '\n';
  out << "verdict: " << to_string(v.status) << '\n';
  out << "valid expansions: " << v.count() << '\n';
  for (std::size_t i : witness_sample(v.count(), all)) {
    out << "valid expansion: " << format_exponent(v.witnesses[i]) << '\n';
  }
  if (!all && v.count() > kWitnessPrintLimit) {
    out << "(" << v.count() - kWitnessPrintLimit << " more; --all-witnesses lists every one)\n";
  }
  return out.str();
}

json reduce_json(const Configuration& c, const ReducibilityVerdict& v, bool all) {
  json witnesses = json::array();
  for (std::size_t i : witness_sample(v.count(), all)) {
    const auto& e = v.witnesses[i];
    witnesses.push_back({{"exponent", e}, {"coefficient", v.table.at(e).get_str()}});
  }
  return {{"configuration", c.name},
          {"caps", v.caps},
          {"verdict", to_string(v.status)},
          {"count", v.count()},
          {"witnesses", witnesses}};
}

std::string format_oracle_text(const Configuration& c, const SizeVector& sizes,
                               const std::string& mode, const ChoosabilityVerdict& v) {
  std::ostringstream out;
  out << "configuration: " << c.name << '\n';
  out << "sizes: " << format_exponent(sizes) << '\n';
  out << "mode: " << mode << '\n';
  out << "assignments checked: " << v.assignments_checked << '\n';
  out << "verdict: " << to_string(v.status) << '\n';
  if (v.failing_trial) out << "failing trial: " << *v.failing_trial << '\n';
  if (v.counterexample) out << format_list_assignment(*v.counterexample);
  return out.str();
}

json oracle_json(const Configuration& c, const SizeVector& sizes, const std::string& mode,
                 const ChoosabilityVerdict& v) {
  json out = {{"configuration", c.name},
              {"sizes", sizes},
              {"mode", mode},
              {"assignments_checked", v.assignments_checked},
              {"verdict", to_string(v.status)}};
  out["counterexample"] = v.counterexample ? json(*v.counterexample) : json(nullptr);
  out["failing_trial"] = v.failing_trial ? json(*v.failing_trial) : json(nullptr);
  return out;
}

std::string format_hypothesis_text(const HypothesisVerdict& v) {
  std::ostringstream out;
  out << "4-cycles: " << v.cycle_count << '\n';
  if (v.closest) {
    out << "closest pair: " << format_cycle(v.closest->first) << ' '
        << format_cycle(v.closest->second) << " distance "
        << (v.closest->distance ? std::to_string(*v.closest->distance) : "unreachable") << '\n';
  }
  out << "hypothesis (distance >= " << v.required_distance
      << "): " << (v.satisfied ? "satisfied" : "violated") << '\n';
  return out.str();
}

json hypothesis_json(const HypothesisVerdict& v) {
  json out = {{"required_distance", v.required_distance},
              {"cycle_count", v.cycle_count},
              {"satisfied", v.satisfied}};
  if (v.closest) {
    out["closest"] = {{"first", v.closest->first},
                      {"second", v.closest->second},
                      {"distance", v.closest->distance ? json(*v.closest->distance) : json(nullptr)}};
  } else {
    out["closest"] = nullptr;
  }
  return out;
}

namespace {

constexpr int kChargeWidth = 8;

std::string take(std::ostringstream& row) {
  std::string s = row.str();
  row.str("");
  return s;
}

std::string trimmed(std::ostringstream& row) {
  std::string s = take(row);
  s.erase(s.find_last_not_of(' ') + 1);
  return s;
}

std::string faces_line(const Face& f) {
  std::string s;
  for (std::size_t i = 0; i < f.boundary.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(f.boundary[i]);
  }
  return s;
}

std::string class_flags(const VertexClass& c) {
  std::string s;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ',';
    s += name;
  };
  add(c.rich, "rich");
  add(c.poor, "poor");
  add(c.good4, "good4");
  add(c.bad4, "bad4");
  return s.empty() ? "-" : s;
}

json charges_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& r : values) out.push_back(to_fraction_string(r));
  return out;
}

}  // namespace

std::string format_discharge_text(const DischargeReport& r, int through) {
  const PlaneAnalysis& a = r.analysis;
  std::ostringstream out;
  out << "vertices: " << a.plane().vertex_count() << "  edges: " << a.plane().edge_count()
      << "  faces: " << a.faces().size() << '\n';

  std::ostringstream row;
  row << std::left << "\n" << std::setw(8) << "vertex" << std::setw(5) << "deg" << std::setw(4)
      << "f3" << std::setw(4) << "f4" << std::setw(4) << "f5" << std::setw(5) << "f5b"
      << std::setw(5) << "f6+" << std::setw(6) << "zeta" << std::setw(7) << "class";
  for (int s = 0; s <= through; ++s) row << std::setw(kChargeWidth) << ("ch" + std::to_string(s));
  out << trimmed(row) << '\n';
  for (Vertex v = 0; v < a.plane().vertex_count(); ++v) {
    const auto& vs = a.stats().vertices[v];
    row << std::left << std::setw(8) << ("v" + std::to_string(v)) << std::setw(5) << vs.degree
        << std::setw(4) << vs.f3 << std::setw(4) << vs.f4 << std::setw(4) << vs.f5
        << std::setw(5) << vs.f5b << std::setw(5) << vs.f6plus << std::setw(6) << zeta(a, v)
        << std::setw(7) << class_flags(r.classification[v]);
    for (int s = 0; s <= through; ++s) {
      row << std::setw(kChargeWidth) << to_display_string(r.stage(s).vertex_charge[v]);
    }
    out << trimmed(row) << '\n';
  }

  row << std::left << "\n" << std::setw(6) << "face" << std::setw(5) << "deg" << std::setw(6)
      << "bad5";
  for (int s = 0; s <= through; ++s) row << std::setw(kChargeWidth) << ("ch" + std::to_string(s));
  out << take(row) << "boundary\n";
  for (std::size_t f = 0; f < a.faces().size(); ++f) {
    const auto& fs = a.stats().faces[f];
    row << std::left << std::setw(6) << ("f" + std::to_string(f)) << std::setw(5) << fs.degree
        << std::setw(6) << (fs.bad5 ? "yes" : "no");
    for (int s = 0; s <= through; ++s) {
      row << std::setw(kChargeWidth) << to_display_string(r.stage(s).face_charge[f]);
    }
    out << take(row) << faces_line(a.faces()[f]) << '\n';
  }

  if (through >= 1) {
    out << "\nledger:\n";
    if (r.ledger.empty()) out << "  none\n";
    for (const auto& t : r.ledger) {
      if (through < 2 && t.rule == Rule::R6) continue;
      out << "  " << to_string(t.rule) << ' ' << to_string(t.source) << " -> "
          << to_string(t.target) << ' ' << to_display_string(t.amount) << '\n';
    }
  }

  out << "\ntotals:";
  for (int s = 0; s <= through; ++s) out << " ch" << s << '=' << to_display_string(r.stage(s).total());
  out << '\n';

  out << "fact 1 (f3 <= ceil(d/2)): ";
  if (r.fact1_violations.empty()) {
    out << "holds\n";
  } else {
    out << "violated at";
    for (Vertex v : r.fact1_violations) out << " v" << v;
    out << '\n';
  }
  out << format_hypothesis_text(r.hypothesis);

  out << "negative ch" << through << ':';
  auto neg = r.negative(through);
  if (neg.empty()) out << " none";
  for (const auto& e : neg) out << ' ' << to_string(e);
  out << '\n';

  for (const auto& d : r.diagnostics) out << "diagnostic: " << d << '\n';
  return out.str();
}

json discharge_json(const DischargeReport& r, int through) {
  const PlaneAnalysis& a = r.analysis;
  json vertices = json::array();
  for (Vertex v = 0; v < a.plane().vertex_count(); ++v) {
    const auto& vs = a.stats().vertices[v];
    const auto& c = r.classification[v];
    vertices.push_back({{"index", v},
                        {"degree", vs.degree},
                        {"f3", vs.f3},
                        {"f4", vs.f4},
                        {"f5", vs.f5},
                        {"f5b", vs.f5b},
                        {"f6plus", vs.f6plus},
                        {"zeta", zeta(a, v)},
                        {"rich", c.rich},
                        {"poor", c.poor},
                        {"good4", c.good4},
                        {"bad4", c.bad4}});
  }
  json faces = json::array();
  for (std::size_t f = 0; f < a.faces().size(); ++f) {
    faces.push_back({{"index", f},
                     {"degree", a.stats().faces[f].degree},
                     {"bad5", a.stats().faces[f].bad5},
                     {"boundary", a.faces()[f].boundary}});
  }
  json stages = json::array();
  for (int s = 0; s <= through; ++s) {
    stages.push_back({{"stage", s},
                      {"vertices", charges_json(r.stage(s).vertex_charge)},
                      {"faces", charges_json(r.stage(s).face_charge)},
                      {"total", to_fraction_string(r.stage(s).total())}});
  }
  json ledger = json::array();
  if (through >= 1) {
    for (const auto& t : r.ledger) {
      if (through < 2 && t.rule == Rule::R6) continue;
      ledger.push_back({{"rule", to_string(t.rule)},
                        {"source", to_string(t.source)},
                        {"target", to_string(t.target)},
                        {"amount", to_fraction_string(t.amount)}});
    }
  }
  json negative = json::array();
  for (const auto& e : r.negative(through)) negative.push_back(to_string(e));
  return {{"vertices", vertices},
          {"faces", faces},
          {"charges", stages},
          {"ledger", ledger},
          {"fact1_violations", r.fact1_violations},
          {"hypothesis", hypothesis_json(r.hypothesis)},
          {"negative", negative},
          {"diagnostics", r.diagnostics}};
}

}  // namespace lc
