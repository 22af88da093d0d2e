// Copyright 2026 The OrbitWeave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbitweave/reports.hpp"

#include <iomanip>
#include <sstream>

namespace orbitweave {

namespace {

Json element_list(const WeylGroup& weyl, const std::vector<WeylElement>& ws) {
  Json out = Json::array();
  for (WeylElement w : ws) out.push_back(to_json(weyl, w));
  return out;
}

std::string elements_text(const WeylGroup& weyl,
                          const std::vector<WeylElement>& ws) {
  std::string out = "{";
  for (std::size_t k = 0; k < ws.size(); ++k) {
    if (k) out += ", ";
    out += weyl.word_string(ws[k]);
  }
  return out + "}";
}

const char* kind_name(GeneratorKind kind) {
  return kind == GeneratorKind::kReflection ? "reflection"
                                            : "commuting_product";
}

}  // namespace

Json to_json(const WeylGroup& weyl, WeylElement w) {
  Json out = Json::array();
  for (std::size_t letter : weyl.word(w)) out.push_back(letter);
  return out;
}

Json to_json(const CertificationReport& report) {
  Json out;
  out["layer"] = report.layer;
  out["passed"] = report.passed();
  out["findings"] = Json::array();
  for (const Finding& f : report.findings) {
    Json item;
    item["check"] = f.check;
    item["severity"] = f.severity == Severity::kError ? "error" : "warning";
    item["message"] = f.message;
    item["witness"] = f.witness;
    out["findings"].push_back(std::move(item));
  }
  return out;
}

Json to_json(const ExpansionReport& report, const WeylGroup& weyl) {
  Json out;
  out["vertex"] = report.vertex;
  out["terms"] = Json::array();
  for (const auto& [w, exponent] : report.terms) {
    Json term;
    term["word"] = to_json(weyl, w);
    term["coeff_log2"] = exponent;
    out["terms"].push_back(std::move(term));
  }
  out["multiplicity_free"] = report.multiplicity_free;
  out["v0_codim1_connected"] = report.v0.connected;
  return out;
}

Json to_json(const GeneratorClassification& gens, const WeylGroup& weyl) {
  Json out;
  out["found"] = gens.found;
  out["lattice_supplied"] = gens.lattice_supplied;
  out["generators"] = Json::array();
  for (const GeneratorInfo& g : gens.generators) {
    Json item;
    item["word"] = to_json(weyl, g.element);
    item["kind"] = kind_name(g.kind);
    item["roots"] = Json::array();
    for (RootId r : g.roots) item["roots"].push_back(weyl.root(r));
    item["tags"] = g.tags;
    out["generators"].push_back(std::move(item));
  }
  out["untagged"] = element_list(weyl, gens.untagged);
  return out;
}

Json to_json(const StabilizerReport& report, const WeylGroup& weyl) {
  Json out;
  out["top"] = report.top;
  out["stabilizer"] = element_list(weyl, report.stabilizer);
  out["delta"] = report.delta;
  out["parabolic"] = element_list(weyl, report.parabolic);
  out["complement"] = element_list(weyl, report.complement);
  out["min_reps"] = element_list(weyl, report.min_reps);
  out["decomposition"] = to_json(report.decomposition);
  if (report.generators) {
    out["generators"] = to_json(*report.generators, weyl);
  }
  return out;
}

std::string pretty(const std::vector<CertificationReport>& layers) {
  std::ostringstream out;
  for (const CertificationReport& layer : layers) {
    out << std::left << std::setw(16) << layer.layer
        << (layer.passed() ? "PASS" : "FAIL") << "\n";
    for (const Finding& f : layer.findings) {
      out << "  " << (f.severity == Severity::kError ? "error  " : "warning")
          << " [" << f.check << "] " << f.message << "\n";
      for (const std::string& w : f.witness) out << "      " << w << "\n";
    }
  }
  return out.str();
}

std::string pretty(const ExpansionReport& report, const WeylGroup& weyl) {
  std::ostringstream out;
  out << "vertex            " << report.vertex << "\n";
  out << "multiplicity-free " << (report.multiplicity_free ? "yes" : "no")
      << "\n";
  out << "V0 codim-1 conn.  " << (report.v0.connected ? "yes" : "no") << "\n";
  out << std::left << std::setw(20) << "w in W(Y)" << std::setw(20) << "w0 w"
      << "d(Y,w)\n";
  for (const auto& [w, exponent] : report.weyl_set) {
    out << std::setw(20) << weyl.word_string(w) << std::setw(20)
        << weyl.word_string(weyl.multiply(weyl.longest(), w))
        << (1L << exponent) << "\n";
  }
  return out.str();
}

std::string pretty(const StabilizerReport& report, const WeylGroup& weyl) {
  std::ostringstream out;
  out << "top          " << report.top << "\n";
  out << "W_(X)        " << elements_text(weyl, report.stabilizer) << "\n";
  out << "Delta(X)     {";
  for (std::size_t k = 0; k < report.delta.size(); ++k) {
    out << (k ? ", " : "") << report.delta[k];
  }
  out << "}\n";
  out << "W_Delta(X)   " << elements_text(weyl, report.parabolic) << "\n";
  out << "W_X          " << elements_text(weyl, report.complement) << "\n";
  out << "W^(X)        " << elements_text(weyl, report.min_reps) << "\n";
  out << "semidirect   " << (report.decomposition.passed() ? "yes" : "no")
      << "\n";
  if (report.generators) {
    out << "generators   "
        << (report.generators->found ? "found" : "NOT FOUND") << "\n";
    for (const GeneratorInfo& g : report.generators->generators) {
      out << "  " << std::left << std::setw(12) << weyl.word_string(g.element)
          << std::setw(18) << kind_name(g.kind);
      for (const std::string& tag : g.tags) out << " " << tag;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace orbitweave
