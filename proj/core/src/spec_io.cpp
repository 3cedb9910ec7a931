#include "fftower/spec_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fftower/prime_field.hpp"

namespace fftower {
namespace spec_io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Bigint bigint_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer string");
  return Bigint(s, 10);
}

uint64_t u64_from_string(const std::string& s) {
  Bigint v = bigint_from_string(s);
  if (v < 0 || !v.fits_ulong_p()) throw std::invalid_argument("value out of range: " + s);
  return mpz_get_ui(v.get_mpz_t());
}

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("malformed JSON");
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string spec_to_json_string(const TowerSpec& spec) {
  ordered_json doc;
  doc["q"] = std::to_string(spec.q);
  doc["family"] = family_name(spec.family);
  doc["e"] = spec.e;
  doc["v_coeffs"] = ordered_json::array();
  for (uint64_t c : spec.v_coeffs) doc["v_coeffs"].push_back(std::to_string(c));
  ordered_json init;
  if (spec.char2()) {
    init["h"] = spec.h_coeffs;
  } else {
    init["a"] = std::to_string(spec.init_a);
    init["b"] = std::to_string(spec.init_b);
  }
  doc["init_minpoly"] = std::move(init);
  if (spec.delta_rec) {
    ordered_json rec;
    rec["a_coeffs"] = ordered_json::array();
    for (uint64_t c : spec.delta_rec->a_coeffs) rec["a_coeffs"].push_back(std::to_string(c));
    rec["b_coeffs"] = ordered_json::array();
    for (uint64_t c : spec.delta_rec->b_coeffs) rec["b_coeffs"].push_back(std::to_string(c));
    doc["delta_recurrence"] = std::move(rec);
  }
  return doc.dump(2) + "\n";
}

TowerSpec spec_from_json_string(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object()) throw std::invalid_argument("tower spec: expected a JSON object");
  TowerSpec spec;
  spec.q = u64_from_string(doc.at("q").get<std::string>());
  auto fam = family_from_name(doc.at("family").get<std::string>());
  if (!fam) throw std::invalid_argument("tower spec: unknown family name");
  spec.family = *fam;
  spec.e = doc.value("e", 0u);
  spec.v_coeffs.clear();
  for (const auto& c : doc.at("v_coeffs")) spec.v_coeffs.push_back(u64_from_string(c.get<std::string>()));
  const json& init = doc.at("init_minpoly");
  if (spec.char2()) {
    spec.h_coeffs = init.at("h").get<std::vector<int>>();
  } else {
    spec.init_a = u64_from_string(init.at("a").get<std::string>());
    spec.init_b = u64_from_string(init.at("b").get<std::string>());
  }
  if (doc.contains("delta_recurrence") && !doc["delta_recurrence"].is_null()) {
    DeltaRecurrence rec;
    for (const auto& c : doc["delta_recurrence"].at("a_coeffs"))
      rec.a_coeffs.push_back(u64_from_string(c.get<std::string>()));
    for (const auto& c : doc["delta_recurrence"].at("b_coeffs"))
      rec.b_coeffs.push_back(u64_from_string(c.get<std::string>()));
    spec.delta_rec = std::move(rec);
  }
  spec.validate();
  return spec;
}

void save_spec(const std::string& path, const TowerSpec& spec) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << spec_to_json_string(spec);
}

TowerSpec load_spec(const std::string& path) { return spec_from_json_string(read_file(path)); }

FactorHints hints_from_json_string(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_array()) throw std::invalid_argument("hints: expected a JSON array");
  FactorHints hints;
  for (const auto& entry : doc) {
    FactoredInteger f;
    f.value = bigint_from_string(entry.at("n").get<std::string>());
    if (f.value < 2) throw std::invalid_argument("hints: n must be at least 2");
    for (const auto& pe : entry.at("factors")) {
      Bigint p = bigint_from_string(pe.at(0).get<std::string>());
      unsigned e = pe.at(1).get<unsigned>();
      if (e == 0) throw std::invalid_argument("hints: zero exponent");
      if (!is_prime(p)) throw std::invalid_argument("hints: " + p.get_str() + " is not prime");
      f.mul_prime(p, e);
    }
    if (entry.contains("cofactor")) f.cofactor = bigint_from_string(entry.at("cofactor").get<std::string>());
    if (f.cofactor < 1) throw std::invalid_argument("hints: cofactor must be positive");
    if (f.reconstruct() != f.value)
      throw std::invalid_argument("hints: factors do not multiply back to " + f.value.get_str());
    hints[f.value] = std::move(f);
  }
  return hints;
}

FactorHints load_hints(const std::string& path) { return hints_from_json_string(read_file(path)); }

}  // namespace spec_io
}  // namespace fftower
